"""Exact truncated Laurent series in one variable q, over Z or Z/mZ.

A series carries a window [v, T]: the coefficient of q^e is stored exactly
for v <= e <= T, is exactly zero for e < v, and is unknown for e > T.
Every operation propagates the largest T it can guarantee from its inputs,
so a result is never silently wrong -- at worst a comparison raises
InsufficientPrecision.

Coefficients are Python integers (arbitrary precision).  A series over
Z/mZ keeps every stored coefficient reduced to [0, m).  Series are
immutable; all operations return new objects and are safe to share
between threads.
"""

from __future__ import annotations

from bisect import bisect_left

MAX_MODULUS = 1 << 31


class SeriesError(Exception):
    """Base class for series arithmetic errors."""


class RingMismatch(SeriesError):
    """Operands live over different coefficient rings."""


class NotInvertible(SeriesError):
    """Leading coefficient is not a unit in the coefficient ring."""


class InsufficientPrecision(SeriesError):
    """The known window is too short to answer exactly."""


def _check_modulus(m):
    if m is None:
        return None
    if not isinstance(m, int) or m < 2 or m >= MAX_MODULUS:
        raise ValueError(f"modulus must be an integer in [2, 2^31), got {m!r}")
    return m


def _unit_inverse(u, m):
    if m is None:
        if u == 1 or u == -1:
            return u
        raise NotInvertible(f"not invertible: leading coefficient {u} is not a unit over Z")
    try:
        return pow(u, -1, m)
    except ValueError:
        raise NotInvertible(f"not invertible: gcd({u}, {m}) != 1") from None


def _convolve(ac, bc, n, m):
    """First ``n`` coefficients of the Cauchy product of two blocks.

    Schoolbook, but iterates over the nonzero entries of the sparser
    operand, so multiplying by a theta-type series costs O(n * nnz).
    """
    anz = [(i, c) for i, c in enumerate(ac[:n]) if c]
    bnz = [(j, d) for j, d in enumerate(bc[:n]) if d]
    if len(bnz) < len(anz):
        anz, bnz = bnz, anz
    bidx = [j for j, _ in bnz]
    bval = [d for _, d in bnz]
    out = [0] * n
    for i, c in anz:
        stop = bisect_left(bidx, n - i)
        for t in range(stop):
            out[i + bidx[t]] += c * bval[t]
    if m is not None:
        out = [x % m for x in out]
    return out


def _divide_block(uc, dc, n, m):
    """First ``n`` coefficients of uc/dc; dc[0] must be a unit.

    Standard quotient recurrence c_k = d0^-1 (u_k - sum_{j>=1} d_j c_{k-j}),
    skipping zero d_j, so dividing by a pentagonal-type series costs
    O(n * nnz).  Inverting is the special case uc = (1, 0, 0, ...).
    """
    inv0 = _unit_inverse(dc[0], m)
    didx = []
    dval = []
    for j in range(1, min(len(dc), n)):
        if dc[j]:
            didx.append(j)
            dval.append(dc[j])
    c = []
    lu = len(uc)
    if m is None:
        for k in range(n):
            s = uc[k] if k < lu else 0
            stop = bisect_left(didx, k + 1)
            for t in range(stop):
                s -= dval[t] * c[k - didx[t]]
            c.append(s if inv0 == 1 else -s)
    else:
        for k in range(n):
            s = uc[k] if k < lu else 0
            stop = bisect_left(didx, k + 1)
            for t in range(stop):
                s -= dval[t] * c[k - didx[t]]
            c.append(s * inv0 % m)
    return c


class LaurentSeries:
    """A Laurent series known exactly on the exponent window [v, T]."""

    __slots__ = ("v", "coeffs", "modulus")

    def __init__(self, coeffs, v=0, modulus=None):
        modulus = _check_modulus(modulus)
        if modulus is None:
            cs = tuple(int(c) for c in coeffs)
        else:
            cs = tuple(int(c) % modulus for c in coeffs)
        if not cs:
            raise ValueError("empty coefficient window")
        object.__setattr__(self, "coeffs", cs)
        object.__setattr__(self, "v", int(v))
        object.__setattr__(self, "modulus", modulus)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentSeries is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, c, T, modulus=None):
        """The constant ``c`` on the window [0, T]."""
        if T < 0:
            raise ValueError(f"window bound must be >= 0, got {T}")
        return cls([c] + [0] * T, 0, modulus)

    @classmethod
    def one(cls, T, modulus=None):
        return cls.constant(1, T, modulus)

    @classmethod
    def zero(cls, T, modulus=None):
        return cls.constant(0, T, modulus)

    @classmethod
    def from_terms(cls, terms, T, modulus=None):
        """Series with the given exponent -> coefficient map, known through T."""
        v = min(0, min(terms)) if terms else 0
        if T < v:
            raise ValueError("window bound below lowest term")
        cs = [0] * (T - v + 1)
        for e, c in terms.items():
            if e <= T:
                cs[e - v] += c
        return cls(cs, v, modulus)

    # -- inspection --------------------------------------------------------

    @property
    def known_through(self):
        """Highest exponent whose coefficient is known exactly."""
        return self.v + len(self.coeffs) - 1

    def coeff(self, n):
        """Exact coefficient of q^n; 0 below the window, error above it."""
        if n > self.known_through:
            raise InsufficientPrecision(
                f"insufficient precision: coefficient of q^{n} unknown "
                f"(window ends at q^{self.known_through})")
        if n < self.v:
            return 0
        return self.coeffs[n - self.v]

    def terms(self):
        """Nonzero (exponent, coefficient) pairs in increasing exponent order."""
        return [(self.v + i, c) for i, c in enumerate(self.coeffs) if c]

    def is_window_zero(self):
        return not any(self.coeffs)

    def __repr__(self):
        head = ", ".join(f"{c}*q^{e}" for e, c in self.terms()[:6]) or "0"
        tail = ", ..." if len(self.terms()) > 6 else ""
        ring = f" mod {self.modulus}" if self.modulus is not None else ""
        return f"<LaurentSeries [{self.v},{self.known_through}]{ring}: {head}{tail}>"

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (self.v == other.v and self.modulus == other.modulus
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.v, self.modulus, self.coeffs))

    def _require_same_ring(self, other):
        if self.modulus != other.modulus:
            raise RingMismatch(
                f"incompatible rings: {self._ring_name()} vs {other._ring_name()}")

    def _ring_name(self):
        return "Z" if self.modulus is None else f"Z/{self.modulus}"

    def _promote(self, other):
        if isinstance(other, LaurentSeries):
            return other
        if isinstance(other, int):
            return LaurentSeries.constant(other, max(self.known_through, 0), self.modulus)
        raise TypeError(f"cannot combine series with {type(other).__name__}")

    # -- ring operations ---------------------------------------------------

    def add(self, other):
        other = self._promote(other)
        self._require_same_ring(other)
        v = min(self.v, other.v)
        T = min(self.known_through, other.known_through)
        out = []
        for e in range(v, T + 1):
            a = self.coeffs[e - self.v] if e >= self.v else 0
            b = other.coeffs[e - other.v] if e >= other.v else 0
            out.append(a + b)
        return LaurentSeries(out, v, self.modulus)

    def neg(self):
        return LaurentSeries([-c for c in self.coeffs], self.v, self.modulus)

    def sub(self, other):
        other = self._promote(other)
        return self.add(other.neg())

    def scale(self, c):
        return LaurentSeries([c * x for x in self.coeffs], self.v, self.modulus)

    def mul(self, other):
        other = self._promote(other)
        self._require_same_ring(other)
        n = min(len(self.coeffs), len(other.coeffs))
        out = _convolve(self.coeffs, other.coeffs, n, self.modulus)
        return LaurentSeries(out, self.v + other.v, self.modulus)

    def divide(self, other):
        """self / other, where other has a unit leading coefficient."""
        other = self._promote(other)
        self._require_same_ring(other)
        den = other.normalize()
        if den.is_window_zero():
            raise NotInvertible("not invertible: zero series")
        n = min(len(self.coeffs), len(den.coeffs))
        out = _divide_block(self.coeffs, den.coeffs, n, self.modulus)
        return LaurentSeries(out, self.v - den.v, self.modulus)

    def invert(self):
        """Multiplicative inverse; valuation -v, known through T - 2v."""
        a = self.normalize()
        if a.is_window_zero():
            raise NotInvertible("not invertible: zero series")
        n = len(a.coeffs)
        out = _divide_block((1,), a.coeffs, n, self.modulus)
        return LaurentSeries(out, -a.v, self.modulus)

    def pow(self, e):
        """Repeated-squaring power; e < 0 inverts, e = 0 gives 1 on [0, T-v]."""
        if not isinstance(e, int):
            raise TypeError("exponent must be an integer")
        if e == 0:
            return LaurentSeries.one(len(self.coeffs) - 1, self.modulus)
        if e < 0:
            return self.pow(-e).invert()
        result = None
        base = self
        k = e
        while True:
            if k & 1:
                result = base if result is None else result.mul(base)
            k >>= 1
            if not k:
                return result
            base = base.mul(base)

    # -- reindexing --------------------------------------------------------

    def substitute(self, k):
        """q -> q^k.  Coefficient of q^(k*e) is the old coefficient of q^e."""
        if not isinstance(k, int) or k < 1:
            raise ValueError(f"substitution power must be a positive integer, got {k!r}")
        if k == 1:
            return self
        W = len(self.coeffs)
        out = [0] * (k * W)
        for i, c in enumerate(self.coeffs):
            out[k * i] = c
        return LaurentSeries(out, k * self.v, self.modulus)

    def dissect(self, m, j):
        """Extract the residue class j mod m: coefficient of q^n is the
        old coefficient of q^(m*n + j)."""
        if not isinstance(m, int) or m < 1 or not 0 <= j < m:
            raise ValueError(f"bad dissection ({m}, {j})")
        if self.v < 0:
            raise ValueError("dissection requires ordinary series")
        Tp = (self.known_through - j) // m
        if Tp < 0:
            raise InsufficientPrecision(
                f"insufficient precision: no coefficient of the class {j} mod {m} "
                f"lies in the window [{self.v}, {self.known_through}]")
        out = [self.coeff(m * n + j) for n in range(Tp + 1)]
        return LaurentSeries(out, 0, self.modulus)

    def shift(self, e):
        """Multiply by q^e."""
        return LaurentSeries(self.coeffs, self.v + e, self.modulus)

    def truncate(self, T):
        """Restrict the window to [v, T]."""
        if T < self.v:
            raise ValueError("cannot truncate below the valuation")
        return LaurentSeries(self.coeffs[:T - self.v + 1], self.v, self.modulus)

    def normalize(self):
        """Strip leading zeros so coeffs[0] is the true leading coefficient
        (window-zero series collapse to a single zero at the top exponent)."""
        i = 0
        cs = self.coeffs
        while i < len(cs) - 1 and cs[i] == 0:
            i += 1
        if i == 0:
            return self
        return LaurentSeries(cs[i:], self.v + i, self.modulus)

    # -- ring changes and comparison ----------------------------------------

    def reduce_mod(self, m):
        """Image in Z/mZ (from Z, or from Z/m'Z when m divides m')."""
        m = _check_modulus(m)
        if self.modulus is not None and self.modulus % m != 0:
            raise RingMismatch(
                f"cannot reduce mod {m}: {m} does not divide modulus {self.modulus}")
        return LaurentSeries(self.coeffs, self.v, m)

    def eq_through(self, other, T):
        """Exact coefficient equality for all exponents <= T.

        Raises InsufficientPrecision unless both windows reach T; never
        compares unknown coefficients.
        """
        other = self._promote(other)
        self._require_same_ring(other)
        return self.first_mismatch(other, T) is None

    def first_mismatch(self, other, T):
        """Smallest exponent <= T where the series differ, or None."""
        other = self._promote(other)
        self._require_same_ring(other)
        if self.known_through < T or other.known_through < T:
            raise InsufficientPrecision(
                f"insufficient precision: comparison through q^{T} needs windows "
                f"through q^{self.known_through} and q^{other.known_through}")
        for e in range(min(self.v, other.v), T + 1):
            if self.coeff(e) != other.coeff(e):
                return e
        return None

    # -- operators -----------------------------------------------------------

    def __add__(self, other):
        return self.add(other)

    __radd__ = __add__

    def __sub__(self, other):
        return self.sub(other)

    def __rsub__(self, other):
        return self.neg().add(other)

    def __neg__(self):
        return self.neg()

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return self.mul(other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        return self.divide(other)

    def __pow__(self, e):
        return self.pow(e)
