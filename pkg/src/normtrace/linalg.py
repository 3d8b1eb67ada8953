"""Exact dense linear algebra over a finite field.

Matrices are numpy int64 arrays of element indices; all row operations
go through the FieldCtx vector helpers, so everything is exact.  The
reduced row echelon form is fully normalized (unit pivots, eliminated
above and below, pivot search in index order), hence canonical: two
matrices have equal row spaces iff their RREFs are equal arrays.
"""

from __future__ import annotations

import numpy as np

from .gf import FieldCtx


def as_matrix(rows) -> np.ndarray:
    return np.array(rows, dtype=np.int64)


def rref(ctx: FieldCtx, mat: np.ndarray):
    """Reduced row echelon form.

    Returns (R, pivot_cols) where R has the same shape as mat with
    all-zero rows at the bottom, and pivot_cols lists the pivot column
    of each nonzero row (its length is the rank).
    """
    R = np.array(mat, dtype=np.int64)
    if R.ndim != 2:
        raise ValueError("matrix must be 2-dimensional")
    m, n = R.shape
    pivots: list[int] = []
    row = 0
    for col in range(n):
        if row >= m:
            break
        nz = np.nonzero(R[row:, col])[0]
        if len(nz) == 0:
            continue
        pr = row + int(nz[0])
        if pr != row:
            R[[row, pr]] = R[[pr, row]]
        pivot = int(R[row, col])
        if pivot != 1:
            R[row] = ctx.vscale(ctx.inv(pivot), R[row])
        others = np.nonzero(R[:, col])[0]
        others = others[others != row]
        if len(others):
            prod = ctx.vmul_outer(R[others, col], R[row])
            R[others] = ctx.vadd(R[others], ctx.vneg(prod))
        pivots.append(col)
        row += 1
    return R, tuple(pivots)


def rank(ctx: FieldCtx, mat: np.ndarray) -> int:
    return len(rref(ctx, mat)[1])


def reduce_vector(ctx: FieldCtx, R: np.ndarray, pivots, vec: np.ndarray) -> np.ndarray:
    """Residual of vec after elimination against the RREF rows."""
    v = np.array(vec, dtype=np.int64)
    for r, col in enumerate(pivots):
        f = int(v[col])
        if f:
            v = ctx.vadd(v, ctx.vneg(ctx.vscale(f, R[r])))
    return v


def in_row_space(ctx: FieldCtx, R: np.ndarray, pivots, vec: np.ndarray) -> bool:
    return not reduce_vector(ctx, R, pivots, vec).any()


def row_space_equal(ctx: FieldCtx, A: np.ndarray, B: np.ndarray) -> bool:
    RA, pa = rref(ctx, A)
    RB, pb = rref(ctx, B)
    if pa != pb:
        return False
    ra = len(pa)
    return bool(np.array_equal(RA[:ra], RB[:ra]))


def row_space_contains(ctx: FieldCtx, A: np.ndarray, B: np.ndarray) -> bool:
    """True iff every row of B lies in the row space of A."""
    RA, pa = rref(ctx, A)
    return all(in_row_space(ctx, RA, pa, b) for b in B)
