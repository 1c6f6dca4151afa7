"""Builders for the named series of the toolkit.

f_m denotes the Euler product prod_{n>=1} (1 - q^(m*n)).  Everything the
identity catalog manipulates is assembled from:

  * f_m itself, expanded through the pentagonal number theorem,
  * finite quotients q^s * prod f_d^(r_d)  (eta quotients without the
    fractional eta prefactors, which always cancel in the catalog),
  * bilateral theta-type sums  sum_k w(k) q^(e(k)),
  * the cubic lattice theta  alpha(q) = sum_{(m,n) in Z^2} q^(m^2+mn+n^2),
  * the level-12 continued-fraction product h(q).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt

from .series import LaurentSeries


@dataclass(frozen=True)
class FQuotientSpec:
    """A finite product q^qshift * prod f_d^(r_d).

    ``factors`` is a sorted tuple of (d, r_d) pairs with distinct d >= 1
    and r_d != 0.  The denoted series has valuation exactly qshift, since
    every f_d has leading coefficient 1.
    """

    factors: tuple[tuple[int, int], ...]
    qshift: int = 0

    @classmethod
    def of(cls, factors, qshift=0):
        if isinstance(factors, FQuotientSpec):
            return factors
        if isinstance(factors, dict):
            items = factors.items()
        else:
            items = tuple(factors)
        seen = {}
        for d, r in items:
            if not isinstance(d, int) or d < 1:
                raise ValueError(f"f-index must be a positive integer, got {d!r}")
            if d in seen:
                raise ValueError(f"duplicate f-index {d}")
            if r != 0:
                seen[d] = int(r)
        return cls(tuple(sorted(seen.items())), int(qshift))

    def as_dict(self):
        return dict(self.factors)

    def __str__(self):
        num = "*".join(f"f{d}" + (f"^{r}" if r != 1 else "")
                       for d, r in self.factors if r > 0) or "1"
        den = "*".join(f"f{d}" + (f"^{-r}" if r != -1 else "")
                       for d, r in self.factors if r < 0)
        s = num if not den else f"{num}/({den})"
        if self.qshift:
            s = f"q^{self.qshift}*{s}"
        return s


@lru_cache(maxsize=256)
def euler_f(m, T, modulus=None):
    """f_m through q^T via the pentagonal number theorem:
    f_1 = sum_{k in Z} (-1)^k q^(k(3k+1)/2), then q -> q^m."""
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"f-index must be a positive integer, got {m!r}")
    if T < 0:
        raise ValueError("order must be >= 0")
    cs = [0] * (T + 1)
    k = 0
    while True:
        hit = False
        for kk in ((k, -k) if k else (0,)):
            e = m * kk * (3 * kk + 1) // 2
            if e <= T:
                cs[e] += -1 if kk & 1 else 1
                hit = True
        if not hit:
            break
        k += 1
    return LaurentSeries(cs, 0, modulus)


def euler_f_product(m, T, modulus=None):
    """f_m through q^T by literally multiplying out prod (1 - q^(m*n)).

    Independent of the pentagonal builder; kept as its cross-oracle.
    """
    if T < 0:
        raise ValueError("order must be >= 0")
    cs = [0] * (T + 1)
    cs[0] = 1
    j = m
    while j <= T:
        for i in range(T, j - 1, -1):
            cs[i] -= cs[i - j]
        j += m
    return LaurentSeries(cs, 0, modulus)


@lru_cache(maxsize=128)
def _expand_factors(factors, W, modulus):
    # Multiply in the sparse Euler factors one at a time and divide out the
    # denominator factors with the fused quotient recurrence: every pass is
    # O(W * nnz(f_d)) instead of a dense O(W^2) inversion.
    r = LaurentSeries.one(W, modulus)
    for d, e in factors:
        f = euler_f(d, W, modulus)
        for _ in range(e):
            r = r.mul(f)
        for _ in range(-e):
            r = r.divide(f)
    return r


def fquotient(spec, T, modulus=None):
    """Exact expansion of an f-quotient through q^T."""
    spec = FQuotientSpec.of(spec) if not isinstance(spec, FQuotientSpec) else spec
    if T < spec.qshift:
        raise ValueError(f"order {T} is below the q-power shift {spec.qshift}")
    return _expand_factors(spec.factors, T - spec.qshift, modulus).shift(spec.qshift)


# -- bilateral theta-type sums ------------------------------------------------

WEIGHT_RULES = {
    "1": lambda k: 1,
    "2k+1": lambda k: 2 * k + 1,
    "(-1)^k": lambda k: -1 if k & 1 else 1,
    "(-1)^k(2k+1)": lambda k: -(2 * k + 1) if k & 1 else 2 * k + 1,
    "(-1)^k(3k+1)": lambda k: -(3 * k + 1) if k & 1 else 3 * k + 1,
    "6k+1": lambda k: 6 * k + 1,
    "(-1)^(k(k+1)/2)": lambda k: -1 if (k * (k + 1) // 2) & 1 else 1,
}


@dataclass(frozen=True)
class BilateralSum:
    """sum_k weight(k) q^(a2 k^2 + a1 k + a0), over all of Z or over k >= 0.

    The exponent polynomial must be integer-valued on integers and grow on
    every admitted branch, so truncation at any order is finite.
    """

    name: str
    a2: Fraction
    a1: Fraction
    a0: Fraction
    weight: str
    two_sided: bool = True

    def exponent(self, k):
        e = self.a2 * k * k + self.a1 * k + self.a0
        if e.denominator != 1:
            raise ValueError(f"exponent rule of {self.name} is not integral at k={k}")
        return int(e)

    def k_bound(self, T):
        # quadratic-formula bound with a safety margin; callers still filter
        # every term by exponent <= T, so over-shooting is harmless
        disc = self.a1 * self.a1 + 4 * self.a2 * (Fraction(T) - self.a0)
        if disc < 0:
            return 2
        root = Fraction(isqrt(disc.numerator // disc.denominator) + 1)
        return int((abs(self.a1) + root) / (2 * self.a2)) + 2


def _frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


def _bsum(name, a2, a1, a0, weight, two_sided=True):
    return BilateralSum(name, _frac(a2), _frac(a1), _frac(a0), weight, two_sided)


#: f_1 = sum (-1)^k q^(k(3k+1)/2)           (Euler)
PENTAGONAL = _bsum("pentagonal", Fraction(3, 2), Fraction(1, 2), 0, "(-1)^k")
#: f_1^3 = sum_{k>=0} (-1)^k (2k+1) q^(k(k+1)/2)   (Jacobi)
CUBE = _bsum("cube", Fraction(1, 2), Fraction(1, 2), 0, "(-1)^k(2k+1)", two_sided=False)
#: f_2^2/f_1 = sum_{k>=0} q^(k(k+1)/2)      (Gauss)
TRIANGULAR = _bsum("triangular", Fraction(1, 2), Fraction(1, 2), 0, "1", two_sided=False)
#: f_2^5/f_1^2 = sum (-1)^k (3k+1) q^(k(3k+2))
SLOPE_3K1 = _bsum("slope_3k1", 3, 2, 0, "(-1)^k(3k+1)")
#: f_1^5/f_2^2 = sum (6k+1) q^(k(3k+1)/2)
SLOPE_6K1 = _bsum("slope_6k1", Fraction(3, 2), Fraction(1, 2), 0, "6k+1")
#: f_2^3/(f_1 f_4) = sum (-1)^(k(k+1)/2) q^(k(3k+1)/2)
SIGNED_PENTAGONAL = _bsum("signed_pentagonal", Fraction(3, 2), Fraction(1, 2), 0,
                          "(-1)^(k(k+1)/2)")

BILATERAL_SUMS = {s.name: s for s in
                  (PENTAGONAL, CUBE, TRIANGULAR, SLOPE_3K1, SLOPE_6K1,
                   SIGNED_PENTAGONAL)}


def bilateral(spec, T, modulus=None):
    """Expand a bilateral sum through q^T."""
    if T < 0:
        raise ValueError("order must be >= 0")
    w = WEIGHT_RULES[spec.weight]
    K = spec.k_bound(T)
    lo = -K if spec.two_sided else 0
    cs = [0] * (T + 1)
    for k in range(lo, K + 1):
        e = spec.exponent(k)
        if e < 0:
            raise ValueError(f"exponent rule of {spec.name} went negative at k={k}")
        if e <= T:
            cs[e] += w(k)
    return LaurentSeries(cs, 0, modulus)


# -- cubic theta and the level-12 product -------------------------------------

@lru_cache(maxsize=64)
def cubic_theta_alpha(T, modulus=None):
    """alpha(q) = sum over (m, n) in Z^2 of q^(m^2 + mn + n^2), through q^T.

    Lattice enumeration is the definition; the eta-quotient expansion for
    alpha is checked against this, never used to build it.
    """
    if T < 0:
        raise ValueError("order must be >= 0")
    # m^2 + mn + n^2 >= (m^2 + n^2)/2, so |m|, |n| <= 2 sqrt(T) + 1 suffices
    R = 2 * isqrt(T) + 3
    cs = [0] * (T + 1)
    for mm in range(-R, R + 1):
        base = mm * mm
        for nn in range(-R, R + 1):
            e = base + mm * nn + nn * nn
            if 0 <= e <= T:
                cs[e] += 1
    return LaurentSeries(cs, 0, modulus)


@lru_cache(maxsize=64)
def h_level12(T, modulus=None):
    """The level-12 analogue of the Rogers-Ramanujan continued fraction:

        h(q) = q * prod_{n>=1} (1-q^(12n-1))(1-q^(12n-11))
                              / ((1-q^(12n-5))(1-q^(12n-7)))

    through q^T.  Valuation exactly 1.
    """
    if T < 1:
        raise ValueError("order must be >= 1")
    W = T  # h/q on [0, T-1]
    cs = [0] * W
    cs[0] = 1
    for j in range(1, W):
        r = j % 12
        if r in (1, 11):
            for i in range(W - 1, j - 1, -1):
                cs[i] -= cs[i - j]
        elif r in (5, 7):
            for i in range(j, W):
                cs[i] += cs[i - j]
    return LaurentSeries(cs, 1, modulus)
