"""Expression trees over the named series, with a precision-planning evaluator.

An identity is stated as a pair of trees; ``evaluate(tree, T)`` expands it
exactly through at least q^T.  A pre-pass predicts every node's valuation
(exact for quotient-type leaves, a safe lower bound elsewhere) and from it
derives the order each child must be computed to.  If a prediction was too
low for an inverted subtree, the result window falls short and the final
coverage check raises InsufficientPrecision -- a wrong answer is never
returned.
"""

from __future__ import annotations

from dataclasses import dataclass

from .series import InsufficientPrecision, LaurentSeries
from .products import (BILATERAL_SUMS, FQuotientSpec, bilateral,
                       cubic_theta_alpha, fquotient, h_level12)


class SeriesExpr:
    """Base class; nodes are small frozen dataclasses."""

    __slots__ = ()


@dataclass(frozen=True)
class FQuot(SeriesExpr):
    spec: FQuotientSpec


@dataclass(frozen=True)
class Named(SeriesExpr):
    name: str  # "alpha", "h", "h_inv", or a bilateral sum name


@dataclass(frozen=True)
class Literal(SeriesExpr):
    c: int


@dataclass(frozen=True)
class Add(SeriesExpr):
    terms: tuple


@dataclass(frozen=True)
class Mul(SeriesExpr):
    factors: tuple


@dataclass(frozen=True)
class Pow(SeriesExpr):
    base: SeriesExpr
    e: int


@dataclass(frozen=True)
class Scale(SeriesExpr):
    c: int
    child: SeriesExpr


@dataclass(frozen=True)
class Shift(SeriesExpr):
    e: int
    child: SeriesExpr


@dataclass(frozen=True)
class Subst(SeriesExpr):
    k: int
    child: SeriesExpr


@dataclass(frozen=True)
class Dissect(SeriesExpr):
    child: SeriesExpr
    m: int
    j: int


def fq(factors, qshift=0):
    return FQuot(FQuotientSpec.of(factors, qshift))


def add(*terms):
    return Add(tuple(terms))


def mul(*factors):
    return Mul(tuple(factors))


def alpha_q(k=1):
    """The cubic theta with argument q^k."""
    return Named("alpha") if k == 1 else Subst(k, Named("alpha"))


def poly_in(base, coeffs):
    """sum coeffs[i] * base^i, skipping zero coefficients."""
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        if i == 0:
            terms.append(Literal(c))
            continue
        t = base if i == 1 else Pow(base, i)
        terms.append(t if c == 1 else Scale(c, t))
    return terms[0] if len(terms) == 1 else Add(tuple(terms))


_NAMED_VALUATION = {"alpha": 0, "h": 1, "h_inv": -1}


def predicted_valuation(e):
    """Valuation prediction used for precision planning.

    Exact for f-quotients, the named series, and products/powers of them;
    a lower bound wherever an addition might cancel leading terms.
    """
    if isinstance(e, FQuot):
        return e.spec.qshift
    if isinstance(e, Named):
        if e.name in _NAMED_VALUATION:
            return _NAMED_VALUATION[e.name]
        spec = BILATERAL_SUMS[e.name]
        lo = 0 if not spec.two_sided else -4
        return min(spec.exponent(k) for k in range(lo, 5))
    if isinstance(e, Literal):
        return 0
    if isinstance(e, Add):
        return min(predicted_valuation(t) for t in e.terms)
    if isinstance(e, Mul):
        return sum(predicted_valuation(f) for f in e.factors)
    if isinstance(e, Pow):
        return e.e * predicted_valuation(e.base)
    if isinstance(e, Scale):
        return predicted_valuation(e.child)
    if isinstance(e, Shift):
        return e.e + predicted_valuation(e.child)
    if isinstance(e, Subst):
        return e.k * predicted_valuation(e.child)
    if isinstance(e, Dissect):
        return 0
    raise TypeError(f"not a series expression: {e!r}")


def _eval(e, T, m):
    if isinstance(e, FQuot):
        return fquotient(e.spec, max(T, e.spec.qshift), m)
    if isinstance(e, Named):
        if e.name == "alpha":
            return cubic_theta_alpha(max(T, 0), m)
        if e.name == "h":
            return h_level12(max(T, 1), m)
        if e.name == "h_inv":
            return h_level12(max(T + 2, 3), m).invert()
        return bilateral(BILATERAL_SUMS[e.name], max(T, 0), m)
    if isinstance(e, Literal):
        return LaurentSeries.constant(e.c, max(T, 0), m)
    if isinstance(e, Add):
        parts = [_eval(t, T, m) for t in e.terms]
        r = parts[0]
        for p in parts[1:]:
            r = r.add(p)
        return r
    if isinstance(e, Mul):
        vs = [predicted_valuation(f) for f in e.factors]
        vtot = sum(vs)
        r = None
        for f, v in zip(e.factors, vs):
            s = _eval(f, T - (vtot - v), m)
            r = s if r is None else r.mul(s)
        return r
    if isinstance(e, Pow):
        vb = predicted_valuation(e.base)
        if e.e == 0:
            return LaurentSeries.one(max(T, 0), m)
        if e.e > 0:
            return _eval(e.base, T - (e.e - 1) * vb, m).pow(e.e)
        n = -e.e
        return _eval(e.base, (T + 2 * n * vb) - (n - 1) * vb, m).pow(n).invert()
    if isinstance(e, Scale):
        return _eval(e.child, T, m).scale(e.c)
    if isinstance(e, Shift):
        return _eval(e.child, T - e.e, m).shift(e.e)
    if isinstance(e, Subst):
        return _eval(e.child, max(T // e.k, 0), m).substitute(e.k)
    if isinstance(e, Dissect):
        return _eval(e.child, max(e.m * T + e.j, 0), m).dissect(e.m, e.j)
    raise TypeError(f"not a series expression: {e!r}")


def evaluate(e, T, modulus=None):
    """Expand the expression exactly through at least q^T."""
    s = _eval(e, T, modulus)
    if s.known_through < T:
        raise InsufficientPrecision(
            f"insufficient precision: evaluation reached q^{s.known_through}, "
            f"needed q^{T} (a valuation prediction was too low)")
    return s


# -- JSON form ----------------------------------------------------------------

def expr_to_dict(e):
    """Documented JSON schema for expression trees (see README)."""
    if isinstance(e, FQuot):
        d = {"op": "fquot", "factors": {str(k): v for k, v in e.spec.factors}}
        if e.spec.qshift:
            d["qshift"] = e.spec.qshift
        return d
    if isinstance(e, Named):
        return {"op": "named", "name": e.name}
    if isinstance(e, Literal):
        return {"op": "literal", "value": e.c}
    if isinstance(e, Add):
        return {"op": "add", "terms": [expr_to_dict(t) for t in e.terms]}
    if isinstance(e, Mul):
        return {"op": "mul", "factors": [expr_to_dict(f) for f in e.factors]}
    if isinstance(e, Pow):
        return {"op": "pow", "exponent": e.e, "base": expr_to_dict(e.base)}
    if isinstance(e, Scale):
        return {"op": "scale", "by": e.c, "child": expr_to_dict(e.child)}
    if isinstance(e, Shift):
        return {"op": "shift", "by": e.e, "child": expr_to_dict(e.child)}
    if isinstance(e, Subst):
        return {"op": "subst", "power": e.k, "child": expr_to_dict(e.child)}
    if isinstance(e, Dissect):
        return {"op": "dissect", "mod": e.m, "residue": e.j,
                "child": expr_to_dict(e.child)}
    raise TypeError(f"not a series expression: {e!r}")


def expr_from_dict(d):
    op = d["op"]
    if op == "fquot":
        return fq({int(k): v for k, v in d["factors"].items()}, d.get("qshift", 0))
    if op == "named":
        return Named(d["name"])
    if op == "literal":
        return Literal(d["value"])
    if op == "add":
        return Add(tuple(expr_from_dict(t) for t in d["terms"]))
    if op == "mul":
        return Mul(tuple(expr_from_dict(f) for f in d["factors"]))
    if op == "pow":
        return Pow(expr_from_dict(d["base"]), d["exponent"])
    if op == "scale":
        return Scale(d["by"], expr_from_dict(d["child"]))
    if op == "shift":
        return Shift(d["by"], expr_from_dict(d["child"]))
    if op == "subst":
        return Subst(d["power"], expr_from_dict(d["child"]))
    if op == "dissect":
        return Dissect(expr_from_dict(d["child"]), d["mod"], d["residue"])
    raise ValueError(f"unknown expression op {op!r}")
