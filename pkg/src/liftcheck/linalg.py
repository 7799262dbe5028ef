"""Dense linear algebra over the coefficient domains (fields only).

Matrices are lists of row lists holding raw domain values.  Sizes here are
tiny (socle computations, finite-locus closure checks), so plain Gaussian
elimination is enough.
"""

from __future__ import annotations

from .errors import DomainError


def rref(matrix: list[list], dom) -> list[int]:
    """Reduce ``matrix`` in place to reduced row echelon form.

    Returns the pivot column indices in order.
    """
    if not dom.is_field:
        raise DomainError("row reduction needs field coefficients")
    if not matrix:
        return []
    ncols = len(matrix[0])
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        pivot = None
        for r in range(row, len(matrix)):
            if not dom.is_zero(matrix[r][col]):
                pivot = r
                break
        if pivot is None:
            continue
        matrix[row], matrix[pivot] = matrix[pivot], matrix[row]
        inv = dom.invert(matrix[row][col])
        matrix[row] = [dom.mul(inv, v) for v in matrix[row]]
        for r in range(len(matrix)):
            if r == row:
                continue
            factor = matrix[r][col]
            if dom.is_zero(factor):
                continue
            matrix[r] = [
                dom.sub(a, dom.mul(factor, b))
                for a, b in zip(matrix[r], matrix[row])
            ]
        pivots.append(col)
        row += 1
        if row == len(matrix):
            break
    return pivots


def rank(matrix: list[list], dom) -> int:
    work = [list(r) for r in matrix]
    return len(rref(work, dom))


def nullspace(matrix: list[list], ncols: int, dom) -> list[list]:
    """Basis of the right kernel; each vector has length ``ncols``."""
    work = [list(r) for r in matrix]
    pivots = rref(work, dom)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        vec = [dom.zero] * ncols
        vec[fc] = dom.one
        for r, pc in enumerate(pivots):
            vec[pc] = dom.neg(work[r][fc])
        basis.append(vec)
    return basis
