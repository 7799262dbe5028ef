"""Finite free-module layer: vectors, matrices, syzygies, membership with
replayable certificates, and minimal generators.

Vectors are rows of ring elements; a matrix stores rows, and its columns
are the vectors most operations care about (a presentation matrix has one
column per relation among the row-indexed generators).  Everything respects
ring relations: syzygies and membership are computed upstairs with relation
multiples adjoined and the results projected back, so over a quotient ring
the answers mean what they say there.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InternalError, NonHomogeneous, PreconditionError, RingMismatch
from .groebner import raw_member, relation_vecs, syzygy_generators_raw
from .ideals import IdealHandle
from .poly import Polynomial, RingContext


@dataclass(frozen=True)
class VectorPoly:
    ring: RingContext
    entries: tuple[Polynomial, ...]

    def __post_init__(self):
        for e in self.entries:
            if e.ring != self.ring:
                raise RingMismatch("vector entry tagged to a different ring")

    @property
    def rank(self) -> int:
        return len(self.entries)

    @property
    def is_zero(self) -> bool:
        return all(e.is_zero for e in self.entries)

    def __add__(self, other: "VectorPoly") -> "VectorPoly":
        self._check(other)
        return VectorPoly(
            self.ring, tuple(a + b for a, b in zip(self.entries, other.entries))
        )

    def __sub__(self, other: "VectorPoly") -> "VectorPoly":
        self._check(other)
        return VectorPoly(
            self.ring, tuple(a - b for a, b in zip(self.entries, other.entries))
        )

    def scale(self, p: Polynomial) -> "VectorPoly":
        return VectorPoly(self.ring, tuple(p * e for e in self.entries))

    def _check(self, other: "VectorPoly") -> None:
        if self.ring != other.ring or self.rank != other.rank:
            raise RingMismatch("vector shape or ring mismatch")

    def is_homogeneous(self) -> bool:
        return all(e.is_zero or e.is_homogeneous() for e in self.entries)

    def __str__(self) -> str:
        return "(" + ", ".join(str(e) for e in self.entries) + ")"


def unit_vector(ring: RingContext, rank: int, pos: int) -> VectorPoly:
    entries = [ring.zero] * rank
    entries[pos] = ring.one
    return VectorPoly(ring, tuple(entries))


def vp_to_vec(v: VectorPoly) -> dict:
    out = {}
    for pos, e in enumerate(v.entries):
        for c, m in e.terms:
            out[(pos, m)] = c
    return out


def vec_to_vp(raw: dict, ring: RingContext, rank: int) -> VectorPoly:
    split: list[dict] = [dict() for _ in range(rank)]
    for (pos, m), c in raw.items():
        split[pos][m] = c
    return VectorPoly(ring, tuple(ring.from_dict(d) for d in split))


@dataclass(frozen=True)
class GradedMatrix:
    """Matrix of ring elements, stored by rows."""

    ring: RingContext
    rows: tuple[tuple[Polynomial, ...], ...]

    def __post_init__(self):
        width = {len(r) for r in self.rows}
        if len(width) > 1:
            raise PreconditionError("ragged matrix")
        for r in self.rows:
            for e in r:
                if e.ring != self.ring:
                    raise RingMismatch("matrix entry tagged to a different ring")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def column(self, j: int) -> VectorPoly:
        return VectorPoly(self.ring, tuple(r[j] for r in self.rows))

    def columns(self) -> tuple[VectorPoly, ...]:
        return tuple(self.column(j) for j in range(self.ncols))

    def row(self, i: int) -> VectorPoly:
        return VectorPoly(self.ring, tuple(self.rows[i]))

    def transpose(self) -> "GradedMatrix":
        cols = tuple(
            tuple(self.rows[i][j] for i in range(self.nrows))
            for j in range(self.ncols)
        )
        return GradedMatrix(self.ring, cols)

    def entry_degrees(self) -> tuple[tuple[Optional[int], ...], ...]:
        """Weighted degree per entry, None for zero entries."""
        return tuple(
            tuple(None if e.is_zero else e.degree() for e in r) for r in self.rows
        )

    def __str__(self) -> str:
        return "\n".join(
            "[" + ", ".join(str(e) for e in r) + "]" for r in self.rows
        )


def matrix_from_columns(
    ring: RingContext, cols: Sequence[VectorPoly], nrows: Optional[int] = None
) -> GradedMatrix:
    if not cols:
        if nrows is None:
            raise PreconditionError("empty matrix needs an explicit row count")
        return GradedMatrix(ring, tuple(() for _ in range(nrows)))
    rank = cols[0].rank
    rows = tuple(
        tuple(c.entries[i] for c in cols) for i in range(rank)
    )
    return GradedMatrix(ring, rows)


def matrix_from_rows(ring: RingContext, rows: Sequence[VectorPoly]) -> GradedMatrix:
    return GradedMatrix(ring, tuple(tuple(v.entries) for v in rows))


def mat_mul(a: GradedMatrix, b: GradedMatrix) -> GradedMatrix:
    if a.ring != b.ring:
        raise RingMismatch("matrix product across different rings")
    if a.ncols != b.nrows:
        raise PreconditionError("matrix shapes do not compose")
    ring = a.ring
    rows = []
    for i in range(a.nrows):
        row = []
        for j in range(b.ncols):
            acc = ring.zero
            for k in range(a.ncols):
                acc = acc + a.rows[i][k] * b.rows[k][j]
            row.append(acc)
        rows.append(tuple(row))
    return GradedMatrix(ring, tuple(rows))


def _check_graded(vectors: Sequence[VectorPoly], allow_inhomogeneous: bool) -> None:
    if not vectors:
        return
    ring = vectors[0].ring
    if not ring.graded or allow_inhomogeneous:
        return
    for v in vectors:
        if not v.is_homogeneous():
            raise NonHomogeneous(
                f"non-homogeneous vector {v}; graded contract refuses it"
            )


def syzygy_module(
    vectors: Sequence[VectorPoly], allow_inhomogeneous: bool = False
) -> tuple[VectorPoly, ...]:
    """Generators of the relations among ``vectors`` (quotient-aware).

    Each returned vector w satisfies sum(w[i] * vectors[i]) = 0 in the ring,
    which is machine checked before returning.
    """
    vectors = list(vectors)
    if not vectors:
        return ()
    ring = vectors[0].ring
    rank = vectors[0].rank
    for v in vectors:
        if v.ring != ring or v.rank != rank:
            raise RingMismatch("syzygy inputs must share ring and rank")
    _check_graded(vectors, allow_inhomogeneous)
    inputs = [vp_to_vec(v) for v in vectors]
    rows = syzygy_generators_raw(inputs, rank, ring)
    out = tuple(vec_to_vp(r, ring, len(vectors)) for r in rows)
    for w in out:
        acc = VectorPoly(ring, tuple(ring.zero for _ in range(rank)))
        for c, v in zip(w.entries, vectors):
            acc = acc + v.scale(c)
        if not _vector_zero_mod(acc):
            raise InternalError("syzygy row fails to annihilate its inputs")
    return out


def _vector_zero_mod(v: VectorPoly) -> bool:
    """Zero test modulo the ring relations, entrywise."""
    ring = v.ring
    if not ring.relations:
        return v.is_zero
    from .groebner import groebner_basis, normal_form

    rel_gb = groebner_basis((), ring=ring)
    return all(normal_form(e, rel_gb).is_zero for e in v.entries)


def as_vectors(gens: Sequence) -> list[VectorPoly]:
    """Coerce a list of ring elements or vectors to vectors; a bare
    polynomial becomes a rank-one vector."""
    out: list[VectorPoly] = []
    for g in gens:
        if isinstance(g, VectorPoly):
            out.append(g)
        elif isinstance(g, Polynomial):
            out.append(VectorPoly(g.ring, (g,)))
        else:
            raise PreconditionError(
                f"expected a ring element or vector, got {type(g).__name__}"
            )
    return out


def syzygy_matrix(gens: Sequence, allow_inhomogeneous: bool = False) -> GradedMatrix:
    """Matrix whose rows generate the syzygies of ``gens`` (ring elements
    or vectors).  Every row r satisfies sum(r[j] * gens[j]) = 0 modulo the
    ring relations; the annihilation is machine checked."""
    vecs = as_vectors(gens)
    if not vecs:
        raise PreconditionError("syzygies of an empty generator list")
    syz = syzygy_module(vecs, allow_inhomogeneous)
    return matrix_from_rows(vecs[0].ring, list(syz))


@dataclass(frozen=True)
class ModuleCertificate:
    """target = sum(coefficients * columns), exact in the ambient free
    module; relation multiples appear as explicit columns so the identity
    replays with polynomial arithmetic alone."""

    target: VectorPoly
    columns: tuple[VectorPoly, ...]
    coefficients: tuple[Polynomial, ...]

    def verify(self) -> bool:
        ring = self.target.ring
        rank = self.target.rank
        acc = VectorPoly(ring, tuple(ring.zero for _ in range(rank)))
        for c, col in zip(self.coefficients, self.columns):
            acc = acc + col.scale(c)
        return (acc - self.target).is_zero


def _ambient_vector(v: VectorPoly) -> VectorPoly:
    amb = v.ring.ambient()
    return VectorPoly(amb, tuple(Polynomial(amb, e.terms) for e in v.entries))


def module_member(
    v: VectorPoly,
    gens: Sequence[VectorPoly],
    coeff_ideal: Optional[IdealHandle] = None,
    want_certificate: bool = False,
) -> tuple[bool, Optional[ModuleCertificate]]:
    """Is v in the submodule spanned by gens (plus coeff_ideal times the
    whole free module, when given)?  Quotient relations are respected."""
    ring = v.ring
    rank = v.rank
    cols = list(gens)
    for g in cols:
        if g.ring != ring or g.rank != rank:
            raise RingMismatch("membership inputs must share ring and rank")
    if coeff_ideal is not None:
        if coeff_ideal.ring != ring:
            raise RingMismatch("coefficient ideal from a different ring")
        for q in coeff_ideal.generators:
            for j in range(rank):
                cols.append(unit_vector(ring, rank, j).scale(q))
    inputs = [vp_to_vec(c) for c in cols]
    rel_cols: list[VectorPoly] = []
    if ring.relations:
        for q in ring.relation_polys():
            for j in range(rank):
                rel_cols.append(unit_vector(ring, rank, j).scale(q))
        inputs = inputs + [vp_to_vec(c) for c in rel_cols]
    member, combo = raw_member(ring, inputs, vp_to_vec(v), want_certificate)
    if not want_certificate or not member:
        return member, None
    amb = ring.ambient()
    all_cols = cols + rel_cols
    cert = ModuleCertificate(
        target=_ambient_vector(v),
        columns=tuple(_ambient_vector(c) for c in all_cols),
        coefficients=tuple(amb.from_dict(d) for d in combo),
    )
    if not cert.verify():
        raise InternalError("module membership certificate failed replay")
    return True, cert


def _degree_key(v: VectorPoly):
    degs = [e.degree() for e in v.entries if not e.is_zero]
    top = max(degs) if degs else -1
    return (top, tuple(tuple(e.terms) for e in v.entries))


def minimal_generators(vectors: Sequence[VectorPoly]) -> tuple[VectorPoly, ...]:
    """Irredundant subset generating the same submodule.

    Sorted by top entry degree ascending, then pruned from the top down;
    for graded data this is a minimal generating set by the usual
    degree-by-degree argument.
    """
    vecs = [v for v in vectors if not v.is_zero]
    vecs.sort(key=_degree_key)
    keep = list(vecs)
    for idx in range(len(keep) - 1, -1, -1):
        candidate = keep[idx]
        others = keep[:idx] + keep[idx + 1 :]
        if not others:
            member = candidate.is_zero or _vector_zero_mod(candidate)
        else:
            member, _ = module_member(candidate, others)
        if member:
            del keep[idx]
    return tuple(keep)


def minimal_presentation(
    gens: Sequence[VectorPoly], allow_inhomogeneous: bool = False
) -> tuple[tuple[VectorPoly, ...], GradedMatrix]:
    """Minimal generators of the span of ``gens`` and a presentation matrix
    whose columns minimally generate their syzygies."""
    gens = list(gens)
    if not gens:
        raise PreconditionError("presentation of the zero list of generators")
    ring = gens[0].ring
    mins = minimal_generators(gens)
    if not mins:
        return (), matrix_from_columns(ring, [], nrows=0)
    syz = syzygy_module(mins, allow_inhomogeneous)
    min_syz = minimal_generators(syz)
    return mins, matrix_from_columns(ring, list(min_syz), nrows=len(mins))
