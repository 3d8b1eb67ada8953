"""Riemann-Roch spaces at the place at infinity of the norm-trace curve.

The Weierstrass semigroup at P_inf is generated by h = q^{r-1} and
c = (q^r - 1)/(q - 1), which are coprime.  Monomials x^i y^j with
0 <= j < h have pairwise distinct pole orders i*h + j*c at P_inf and
span the one-point spaces L(s * P_inf); dividing by x^ell turns the
one-point basis into a basis of L(ell * Omega) with poles only at the
zeros of x.

Evaluation at P_inf uses a closed valuation rule: a monomial x^i y^j
with i*h + j*c = 0 is an integer power of x^c y^{-h}, which equals
1 + (terms of positive valuation) on the curve, hence takes the value 1
at P_inf; monomials of positive valuation vanish there.  No formal
local expansions are needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .curve import NormTraceCurve, Place


class PoleError(ValueError):
    """Raised when a function is evaluated at one of its poles."""


@dataclass(frozen=True)
class MonomialTerm:
    """The monomial x^i y^j.  Basis terms keep 0 <= j < q^{r-1}; formal
    products (local-parameter powers) may carry any integer exponents."""

    i: int
    j: int

    def __repr__(self):
        def fmt(sym, e):
            if e == 0:
                return ""
            return sym if e == 1 else f"{sym}^{e}"
        body = fmt("x", self.i) + fmt("y", self.j)
        return body if body else "1"

    def to_dict(self) -> dict:
        return {"i": self.i, "j": self.j}


def val_infinity(curve: NormTraceCurve, term: MonomialTerm) -> int:
    return curve.val_infinity(term.i, term.j)


def mul_terms(a: MonomialTerm, b: MonomialTerm) -> MonomialTerm:
    return MonomialTerm(a.i + b.i, a.j + b.j)


def pow_term(t: MonomialTerm, e: int) -> MonomialTerm:
    return MonomialTerm(t.i * e, t.j * e)


class FunctionElem:
    """A linear combination of monomials x^i y^j with nonzero field
    coefficients, terms pairwise distinct and sorted by pole order."""

    def __init__(self, curve: NormTraceCurve, terms):
        self.curve = curve
        merged: dict[MonomialTerm, int] = {}
        for coeff, term in terms:
            if coeff:
                prev = merged.get(term, 0)
                s = curve.ctx.add(prev, coeff)
                if s:
                    merged[term] = s
                elif term in merged:
                    del merged[term]
        self.terms = tuple(sorted(
            ((c, t) for t, c in merged.items()),
            key=lambda ct: (-val_infinity(curve, ct[1]), ct[1].i, ct[1].j)))

    def is_zero(self) -> bool:
        return not self.terms

    def scale(self, coeff: int) -> "FunctionElem":
        ctx = self.curve.ctx
        return FunctionElem(self.curve,
                            [(ctx.mul(coeff, c), t) for c, t in self.terms])

    def mul_term(self, term: MonomialTerm, coeff: int = 1) -> "FunctionElem":
        ctx = self.curve.ctx
        return FunctionElem(self.curve,
                            [(ctx.mul(coeff, c), mul_terms(t, term))
                             for c, t in self.terms])

    def __add__(self, other: "FunctionElem") -> "FunctionElem":
        return FunctionElem(self.curve, list(self.terms) + list(other.terms))

    def __repr__(self):
        if not self.terms:
            return "f(0)"
        return "f(" + " + ".join(f"{c}*{t}" for c, t in self.terms) + ")"

    def to_dict(self) -> list:
        return [{"coefficient_index": c, "i": t.i, "j": t.j}
                for c, t in self.terms]


def monomial(curve: NormTraceCurve, coeff: int, i: int, j: int) -> FunctionElem:
    return FunctionElem(curve, [(coeff, MonomialTerm(i, j))])


def constant_one(curve: NormTraceCurve) -> FunctionElem:
    return monomial(curve, 1, 0, 0)


# ----------------------------------------------------------------------
# Weierstrass semigroup and monomial bases
# ----------------------------------------------------------------------

def semigroup_nongaps(curve: NormTraceCurve, bound: int) -> list[int]:
    """Non-gaps a*h + b*c <= bound of the semigroup <h, c>, ascending."""
    if bound < 0:
        raise ValueError("bound must be >= 0")
    h, c = curve.h, curve.c
    out = set()
    b = 0
    while b * c <= bound:
        v = b * c
        while v <= bound:
            out.add(v)
            v += h
        b += 1
    return sorted(out)


def semigroup_gaps(curve: NormTraceCurve) -> list[int]:
    """Gaps of <h, c>; there are exactly genus of them, all < 2g."""
    two_g = 2 * curve.genus
    nongaps = set(semigroup_nongaps(curve, two_g))
    return [s for s in range(two_g) if s not in nongaps]


def basis_one_point(curve: NormTraceCurve, s: int) -> list[MonomialTerm]:
    """Monomial basis of L(s * P_inf): x^i y^j with i >= 0, 0 <= j < h,
    i*h + j*c <= s, sorted by pole order."""
    if s < 0:
        raise ValueError("s must be >= 0")
    h, c = curve.h, curve.c
    out = []
    for j in range(min(h - 1, s // c) + 1):
        rem = s - j * c
        out.extend(MonomialTerm(i, j) for i in range(rem // h + 1))
    out.sort(key=lambda t: t.i * h + t.j * c)
    return out


def basis_multipoint(curve: NormTraceCurve, ell: int) -> list[MonomialTerm]:
    """Monomial basis of L(ell * Omega): the one-point basis of
    L(ell*h * P_inf) divided by x^ell."""
    if ell < 1:
        raise ValueError(f"ell = {ell} must be >= 1")
    return [MonomialTerm(t.i - ell, t.j)
            for t in basis_one_point(curve, ell * curve.h)]


# ----------------------------------------------------------------------
# Evaluation
# ----------------------------------------------------------------------

def _eval_term_affine(curve: NormTraceCurve, term: MonomialTerm, P: Place) -> int:
    ctx = curve.ctx
    if P.x == 0 and term.i < 0:
        raise PoleError(f"{term} has a pole at {P}")
    if P.y == 0 and term.j < 0:
        raise PoleError(f"{term} has a pole at {P}")
    return ctx.mul(ctx.pow(P.x, term.i), ctx.pow(P.y, term.j))


def evaluate(f: FunctionElem, P: Place) -> int:
    """Value of f at the place P (an element index).

    At an affine place the coordinates are substituted term by term; a
    negative exponent at a vanishing coordinate is a pole.  At P_inf,
    terms of valuation 0 contribute their coefficient (they are powers
    of x^c y^{-h}, equal to 1 on the curve) and terms of positive
    valuation contribute 0; any term of negative valuation is a pole.
    """
    curve = f.curve
    ctx = curve.ctx
    out = 0
    if P.is_infinity:
        for coeff, term in f.terms:
            v = val_infinity(curve, term)
            if v < 0:
                raise PoleError(f"{term} has a pole at P_inf")
            if v == 0:
                out = ctx.add(out, coeff)
        return out
    for coeff, term in f.terms:
        out = ctx.add(out, ctx.mul(coeff, _eval_term_affine(curve, term, P)))
    return out


def local_parameter_at_infinity(curve: NormTraceCurve) -> MonomialTerm:
    """A monomial x^u y^v with valuation exactly 1 at P_inf, from the
    extended Euclid relation u*h + v*c = -1; the (u, v) with minimal
    |u| + |v| is chosen, ties broken by smaller u."""
    h, c = curve.h, curve.c
    g, u0, v0 = _ext_gcd(h, c)
    assert g == 1
    u0, v0 = -u0, -v0  # now u0*h + v0*c = -1
    # All solutions are (u0 + t*c, v0 - t*h); |u| + |v| is convex in t
    # with its real minimum at t = -u0/c, so scanning around the floor
    # covers the integer minimum and its ties.
    t0 = -u0 // c
    best = None
    for t in range(t0 - 1, t0 + 3):
        u, v = u0 + t * c, v0 - t * h
        key = (abs(u) + abs(v), u)
        if best is None or key < best[0]:
            best = (key, MonomialTerm(u, v))
    return best[1]


def _ext_gcd(a: int, b: int):
    if b == 0:
        return a, 1, 0
    g, x, y = _ext_gcd(b, a % b)
    return g, y, x - (a // b) * y


def extended_evaluate(f: FunctionElem, P: Place, n_P: int,
                      t: MonomialTerm) -> int:
    """Value of t^{n_P} * f at P, where t is a local parameter at P.

    This realizes evaluation codes whose divisor has weight n_P at an
    evaluation place: multiplying by t^{n_P} cancels the pole there.
    The product is formed exactly by exponent addition (the y exponent
    is kept unreduced) and evaluated with the same valuation rule."""
    shifted = f.mul_term(pow_term(t, n_P))
    return evaluate(shifted, P)
