"""Truncated minimal free resolutions and projective dimension decisions.

A resolution here is of a cokernel: the target module is R^rank divided by
the span of the given columns.  Each differential is minimalized (unit
entries pruned by column operations, redundant generators dropped), every
consecutive composite is machine checked to vanish, and minimality of the
computed stretch is recorded rather than assumed.

Over a quotient by a regular sequence the ring dimension bounds the
projective dimension of anything that has one, so a resolution still alive
past that bound settles the decision as infinite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InternalError, NonHomogeneous, PreconditionError
from .ideals import dimension, zero_ideal
from .modules import (
    GradedMatrix,
    VectorPoly,
    _check_graded,
    mat_mul,
    matrix_from_columns,
    minimal_generators,
    syzygy_module,
    _vector_zero_mod,
)
from .poly import Polynomial, RingContext


def _is_unit_entry(e: Polynomial) -> bool:
    return e.is_constant and not e.is_zero


def minimalize_matrix(mat: GradedMatrix) -> tuple[GradedMatrix, tuple[int, ...]]:
    """Remove unit pivots by column operations, deleting the pivot row and
    column each time.  Returns the pruned matrix and the surviving row
    indices of the original matrix."""
    ring = mat.ring
    rows = [list(r) for r in mat.rows]
    row_ids = list(range(mat.nrows))
    while True:
        pivot = None
        for i, r in enumerate(rows):
            for j, e in enumerate(r):
                if _is_unit_entry(e):
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        i, j = pivot
        u = rows[i][j].constant_value()
        ncols = len(rows[0])
        for j2 in range(ncols):
            if j2 == j or rows[i][j2].is_zero:
                continue
            factor = rows[i][j2].scalar_div(u)
            for i2 in range(len(rows)):
                rows[i2][j2] = rows[i2][j2] - factor * rows[i2][j]
        for i2 in range(len(rows)):
            del rows[i2][j]
        del rows[i]
        del row_ids[i]
    return GradedMatrix(ring, tuple(tuple(r) for r in rows)), tuple(row_ids)


@dataclass(frozen=True)
class Resolution:
    """Truncated minimal free resolution of R^rank0 / span(columns of d_1).

    maps[k] is the differential F_{k+1} -> F_k.  ``finite`` means the next
    syzygy module vanished, so the resolution stops here for good.

    ``shifts`` records the generator degrees of each free module when the
    input was graded (shifts[k] for F_k, one more entry than maps); None
    when degrees were not tracked."""

    ring: RingContext
    rank0: int
    maps: tuple[GradedMatrix, ...]
    finite: bool
    composites_zero: bool
    minimal: bool
    shifts: Optional[tuple[tuple[int, ...], ...]] = None

    @property
    def betti(self) -> tuple[int, ...]:
        return (self.rank0,) + tuple(m.ncols for m in self.maps)

    @property
    def length(self) -> int:
        return len(self.maps)


@dataclass(frozen=True)
class BettiTable:
    """Total Betti numbers per homological step, with the generator-degree
    multiset of each step when the resolution was graded (the graded
    pieces: the count of degree j in degrees[i] is the (i, j) entry)."""

    numbers: tuple[int, ...]
    complete: bool
    degrees: Optional[tuple[tuple[int, ...], ...]] = None

    def graded_piece(self, i: int, j: int) -> int:
        if self.degrees is None:
            raise PreconditionError("no graded degrees were tracked")
        return sum(1 for d in self.degrees[i] if d == j)

    def __str__(self) -> str:
        tail = "" if self.complete else ", ..."
        return "(" + ", ".join(str(b) for b in self.numbers) + tail + ")"


def _matrix_minimal(mat: GradedMatrix) -> bool:
    return not any(_is_unit_entry(e) for r in mat.rows for e in r)


def _composite_vanishes(a: GradedMatrix, b: GradedMatrix) -> bool:
    prod = mat_mul(a, b)
    ring = a.ring
    for r in prod.rows:
        for e in r:
            if not _vector_zero_mod(VectorPoly(ring, (e,))):
                return False
    return True


def _column_degrees(
    mat: GradedMatrix, target_shifts: Sequence[int]
) -> Optional[tuple[int, ...]]:
    """Generator degrees of the source free module, or None when some
    column is not homogeneous for the given target shifts."""
    degs: list[int] = []
    for j in range(mat.ncols):
        d = None
        for i in range(mat.nrows):
            e = mat.rows[i][j]
            if e.is_zero:
                continue
            if not e.is_homogeneous():
                return None
            cand = e.degree() + target_shifts[i]
            if d is None:
                d = cand
            elif d != cand:
                return None
        if d is None:
            return None
        degs.append(d)
    return tuple(degs)


def resolve_truncated(
    gens: Sequence[VectorPoly],
    steps: int,
    rank: Optional[int] = None,
    allow_inhomogeneous: bool = False,
) -> Resolution:
    """Resolution of R^rank / <gens>, computed for ``steps`` differentials
    or until the syzygies vanish, whichever comes first."""
    gens = [g for g in gens if not (g.is_zero or _vector_zero_mod(g))]
    if not gens:
        if rank is None:
            raise PreconditionError("free module resolution needs an explicit rank")
        return Resolution(
            ring=None,
            rank0=rank,
            maps=(),
            finite=True,
            composites_zero=True,
            minimal=True,
        )
    ring = gens[0].ring
    _check_graded(gens, allow_inhomogeneous)
    if rank is None:
        rank = gens[0].rank
    if steps < 1:
        raise PreconditionError("resolution needs at least one step")
    cols = list(minimal_generators(gens))
    d1 = matrix_from_columns(ring, cols, nrows=rank)
    d1, _ = minimalize_matrix(d1)
    rank0 = d1.nrows
    track = ring.graded and not allow_inhomogeneous
    shifts: Optional[list[tuple[int, ...]]] = [(0,) * rank0] if track else None
    maps: list[GradedMatrix] = []
    finite = False
    if d1.ncols == 0:
        return Resolution(
            ring, rank0, (), True, True, True,
            tuple(shifts) if track else None,
        )
    maps.append(d1)
    if track:
        degs = _column_degrees(d1, shifts[0])
        if degs is None:
            raise NonHomogeneous(
                "generators are not homogeneous for an unshifted free cover"
            )
        shifts.append(degs)
    while len(maps) < steps:
        last = maps[-1]
        syz = syzygy_module(last.columns(), allow_inhomogeneous)
        min_syz = minimal_generators(syz)
        if not min_syz:
            finite = True
            break
        nxt = matrix_from_columns(ring, list(min_syz), nrows=last.ncols)
        maps.append(nxt)
        if track:
            degs = _column_degrees(nxt, shifts[-1])
            if degs is None:
                raise InternalError("syzygy step broke the graded structure")
            shifts.append(degs)
    else:
        # steps exhausted; peek one more syzygy module to detect termination
        syz = syzygy_module(maps[-1].columns(), allow_inhomogeneous)
        if not minimal_generators(syz):
            finite = True
    composites = all(
        _composite_vanishes(maps[k], maps[k + 1]) for k in range(len(maps) - 1)
    )
    if not composites:
        raise InternalError("resolution differentials do not compose to zero")
    minimal = all(_matrix_minimal(m) for m in maps)
    return Resolution(
        ring, rank0, tuple(maps), finite, composites, minimal,
        tuple(shifts) if track else None,
    )


def ring_dimension(ring: RingContext) -> int:
    """Krull dimension, computed from the leading terms of the relation
    ideal (not assumed from the relation count)."""
    return dimension(zero_ideal(ring))


def pd_decide(
    gens: Sequence[VectorPoly],
    rank: Optional[int] = None,
    allow_inhomogeneous: bool = False,
) -> Optional[int]:
    """Projective dimension of R^rank / <gens>: an integer when finite,
    None when infinite.

    The ring must be a polynomial ring or a quotient by one relation.  Over
    either, anything with finite projective dimension resolves within the
    ambient variable count (Auslander-Buchsbaum: pd + depth = depth of the
    ring, and every depth is at most the ambient dimension), so running one
    step past that bound is a decision procedure, not a heuristic."""
    live = [g for g in gens if not (g.is_zero or _vector_zero_mod(g))]
    if not live:
        return 0
    ring = live[0].ring
    if len(ring.relations) > 1:
        raise PreconditionError(
            "projective dimension decision needs at most one ring relation"
        )
    bound = ring.nvars + 1
    res = resolve_truncated(gens, bound, rank=rank, allow_inhomogeneous=allow_inhomogeneous)
    if res.finite:
        return len(res.maps)
    return None


def betti_numbers(
    gens: Sequence[VectorPoly],
    steps: int,
    rank: Optional[int] = None,
    allow_inhomogeneous: bool = False,
) -> BettiTable:
    res = resolve_truncated(gens, steps, rank=rank, allow_inhomogeneous=allow_inhomogeneous)
    degrees = None
    if res.shifts is not None:
        degrees = tuple(tuple(sorted(s)) for s in res.shifts)
    return BettiTable(res.betti, res.finite, degrees)
