"""The automorphism group of the norm-trace curve and its code action.

For r >= 3 the full group has order q^{r-1} (q^r - 1): an elementary
abelian normal subgroup of translations (x, y) -> (x, y + a) with
trace(a) = 0, extended by the cyclic scalings (x, y) -> (b x, b^c y).
Every element factors uniquely as scaling-then-translate, which is the
(a, b) normal form stored here:

    (x, y)  ->  (b x, b^c y + a).

The group fixes the place at infinity, permutes the zeros of x, and
stabilizes the code divisors, so it lifts to code automorphisms once
combined with field Frobenius twists and nonzero scalar multiplications
of codewords.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .codes import AGCode
from .curve import NormTraceCurve, P_INFINITY, Place


@dataclass(frozen=True)
class CurveAut:
    """The curve automorphism (x, y) -> (b x, b^c y + a), with
    trace(a) = 0 and b nonzero (indices into the curve's field)."""

    curve: NormTraceCurve
    a: int
    b: int

    def __post_init__(self):
        ctx = self.curve.ctx
        if self.b == 0:
            raise ValueError("scaling part must be nonzero")
        if ctx.trace_rel(self.a, self.curve.q, self.curve.r) != 0:
            raise ValueError(f"translation part {self.a} has nonzero trace")

    @property
    def is_identity(self) -> bool:
        return self.a == 0 and self.b == 1

    def to_dict(self) -> dict:
        return {"a_index": self.a, "b_index": self.b}


def identity_aut(curve: NormTraceCurve) -> CurveAut:
    return CurveAut(curve, 0, 1)


def compose(s1: CurveAut, s2: CurveAut) -> CurveAut:
    """Apply s2 first, then s1."""
    if s1.curve != s2.curve:
        raise ValueError("automorphisms of different curves")
    curve = s1.curve
    ctx = curve.ctx
    b = ctx.mul(s1.b, s2.b)
    a = ctx.add(s1.a, ctx.mul(ctx.pow(s1.b, curve.c), s2.a))
    return CurveAut(curve, a, b)


def inverse(s: CurveAut) -> CurveAut:
    curve = s.curve
    ctx = curve.ctx
    b_inv = ctx.inv(s.b)
    a_inv = ctx.neg(ctx.mul(ctx.pow(b_inv, curve.c), s.a))
    return CurveAut(curve, a_inv, b_inv)


def apply_xy(s: CurveAut, x: int, y: int) -> tuple[int, int]:
    ctx = s.curve.ctx
    return (ctx.mul(s.b, x),
            ctx.add(ctx.mul(ctx.pow(s.b, s.curve.c), y), s.a))


def apply_place(s: CurveAut, P: Place) -> Place:
    """Image of a place; fixes P_inf and stays on the curve."""
    if P.is_infinity:
        return P_INFINITY
    x, y = apply_xy(s, P.x, P.y)
    return Place("affine", x, y)


def enumerate_group(curve: NormTraceCurve) -> list[CurveAut]:
    """All q^{r-1} (q^r - 1) automorphisms, sorted by (a, b)."""
    ctx = curve.ctx
    zeros = [a for a in ctx.elements()
             if ctx.trace_rel(a, curve.q, curve.r) == 0]
    return [CurveAut(curve, a, b) for a in zeros for b in ctx.nonzero()]


def orbits(curve: NormTraceCurve, group=None) -> list[list[Place]]:
    """Orbit decomposition of the rational places under the group
    (default: the full automorphism group), in canonical order."""
    if group is None:
        group = enumerate_group(curve)
    seen: set[Place] = set()
    out = []
    for P in curve.rational_places():
        if P in seen:
            continue
        orb = {apply_place(s, P) for s in group}
        seen |= orb
        out.append(sorted(orb, key=Place.sort_key))
    return out


def short_orbits(curve: NormTraceCurve) -> list[list[Place]]:
    """Orbits strictly smaller than the group: the fixed place at
    infinity and the q^{r-1} zeros of x."""
    group = enumerate_group(curve)
    return [orb for orb in orbits(curve, group) if len(orb) < len(group)]


def orbit_report(orbit_list: list[list[Place]]) -> list[list[dict]]:
    """Orbits as JSON-ready lists of place records."""
    return [[P.to_dict() for P in orb] for orb in orbit_list]


def fixed_places(s: CurveAut) -> list[Place]:
    return [P for P in s.curve.rational_places() if apply_place(s, P) == P]


# ----------------------------------------------------------------------
# Code automorphisms
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class CodeAut:
    """A candidate code automorphism: a curve automorphism, a Frobenius
    exponent e (entrywise x -> x^{p^e}), and a nonzero scalar."""

    aut: CurveAut
    frob: int = 0
    scalar: int = 1

    def __post_init__(self):
        k = self.aut.curve.ctx.k
        if not 0 <= self.frob < k:
            raise ValueError(f"Frobenius exponent must lie in 0..{k - 1}")
        if self.scalar == 0:
            raise ValueError("scalar must be nonzero")

    def to_dict(self) -> dict:
        return {"a_index": self.aut.a, "b_index": self.aut.b,
                "frob": self.frob, "scalar_index": self.scalar}


def frobenius_place(curve: NormTraceCurve, P: Place, e: int) -> Place:
    if P.is_infinity:
        return P_INFINITY
    ctx = curve.ctx
    return Place("affine", ctx.frobenius(P.x, e), ctx.frobenius(P.y, e))


def code_action(code: AGCode, g: CodeAut, word: np.ndarray) -> np.ndarray:
    """Transform a codeword: push coordinates forward along the place
    permutation (curve automorphism then coordinate Frobenius), apply
    the Frobenius to every entry, and scale."""
    curve = code.curve
    if g.aut.curve != curve:
        raise ValueError("automorphism curve does not match the code")
    ctx = curve.ctx
    pos = code.place_position()
    out = np.zeros_like(word)
    for i, P in enumerate(code.places):
        img = frobenius_place(curve, apply_place(g.aut, P), g.frob)
        out[pos[img]] = ctx.mul(g.scalar,
                                ctx.frobenius(int(word[i]), g.frob))
    return out


def is_code_automorphism(code: AGCode, g: CodeAut) -> bool:
    """True iff the transform maps the code onto itself, checked by
    membership of every transformed generator row in the row space."""
    ctx = code.curve.ctx
    R, pivots = code.row_space()
    return all(
        linalg.in_row_space(ctx, R, pivots, code_action(code, g, row))
        for row in code.matrix)
