"""Ideal calculus: sums, products, intersection, colon, saturation,
radical membership, dimension, and socle data.

An ``IdealHandle`` pins a generator list to a ring context.  In a quotient
ring the handle means the image ideal; computations happen upstairs with the
relations adjoined and answers are reduced back.  Canonical generator lists
come from the reduced Groebner basis, normal-formed against the relation
ideal so that zero images drop out; two handles describe the same ideal
exactly when their canonical forms match.

In a graded context every ideal is homogeneous by the input contract, so
splitting an element into homogeneous parts never leaves the ideal; the
internal tag and Rabinowitsch constructions run in ungraded scratch rings.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    BudgetExceeded,
    InternalError,
    PreconditionError,
    RingMismatch,
)
from .groebner import (
    GroebnerBasis,
    eliminate,
    groebner_basis,
    ideal_member,
    normal_form,
    poly_to_vec,
    syzygy_generators_raw,
)
from .linalg import nullspace
from .orders import Mon, mon_divides, mon_mul
from .poly import Polynomial, RingContext


@dataclass(frozen=True)
class IdealHandle:
    ring: RingContext
    generators: tuple[Polynomial, ...]

    def __post_init__(self):
        for g in self.generators:
            if g.ring != self.ring:
                raise RingMismatch("generator tagged to a different ring")


def ideal(ring: RingContext, gens) -> IdealHandle:
    return IdealHandle(ring, tuple(gens))


def zero_ideal(ring: RingContext) -> IdealHandle:
    return IdealHandle(ring, ())


def maximal_ideal(ring: RingContext) -> IdealHandle:
    return IdealHandle(ring, tuple(ring.gens()))


def ideal_sum(*ideals: IdealHandle) -> IdealHandle:
    if not ideals:
        raise PreconditionError("sum of no ideals")
    ring = ideals[0].ring
    gens: list[Polynomial] = []
    for I in ideals:
        if I.ring != ring:
            raise RingMismatch("ideal sum across different rings")
        gens.extend(I.generators)
    return IdealHandle(ring, tuple(gens))


def ideal_product(I: IdealHandle, J: IdealHandle) -> IdealHandle:
    if I.ring != J.ring:
        raise RingMismatch("ideal product across different rings")
    if I is J or I.generators == J.generators:
        pairs = itertools.combinations_with_replacement(I.generators, 2)
        gens = tuple(a * b for a, b in pairs)
    else:
        gens = tuple(a * b for a in I.generators for b in J.generators)
    return IdealHandle(I.ring, gens)


def ideal_power(I: IdealHandle, n: int) -> IdealHandle:
    if n < 1:
        raise PreconditionError("ideal power wants a positive exponent")
    out = I
    for _ in range(n - 1):
        out = ideal_product(out, I)
    return out


def reduced_groebner(I: IdealHandle) -> GroebnerBasis:
    return groebner_basis(
        I.generators, ring=I.ring, allow_inhomogeneous=not I.ring.graded
    )


def homogeneous_parts(p: Polynomial) -> list[Polynomial]:
    buckets: dict[int, dict] = {}
    for c, m in p.terms:
        buckets.setdefault(p.ring.mon_deg(m), {})[m] = c
    return [p.ring.from_dict(b) for _, b in sorted(buckets.items())]


def canonical_generators(I: IdealHandle) -> IdealHandle:
    """Canonical handle for the same ideal: reduced basis elements, reduced
    against the relation ideal, zero images dropped."""
    ring = I.ring
    gens: list[Polynomial] = [g for g in I.generators if not g.is_zero]
    if ring.graded:
        gens = [part for g in gens for part in homogeneous_parts(g)]
    gb = groebner_basis(tuple(gens), ring=ring, allow_inhomogeneous=not ring.graded)
    elems = gb.elements
    if ring.relations:
        rel_gb = groebner_basis((), ring=ring)
        reduced = []
        for e in elems:
            r = normal_form(e, rel_gb)
            if not r.is_zero:
                reduced.append(r)
        elems = tuple(reduced)
    return IdealHandle(ring, tuple(elems))


def contains(I: IdealHandle, x) -> bool:
    if isinstance(x, IdealHandle):
        return all(ideal_member(g, I)[0] for g in x.generators)
    return ideal_member(x, I)[0]


def equal_ideals(I: IdealHandle, J: IdealHandle) -> bool:
    if I.ring != J.ring:
        raise RingMismatch("comparing ideals across different rings")
    a = reduced_groebner(I).elements
    b = reduced_groebner(J).elements
    return tuple(p.terms for p in a) == tuple(p.terms for p in b)


def _fresh_name(base: str, taken) -> str:
    if base not in taken:
        return base
    k = 0
    while f"{base}{k}" in taken:
        k += 1
    return f"{base}{k}"


def _lift(p: Polynomial, big: RingContext) -> Polynomial:
    extra = big.nvars - p.ring.nvars
    return big.from_dict({m + (0,) * extra: c for c, m in p.terms})


def _retag(p: Polynomial, ring: RingContext) -> Polynomial:
    return ring.from_dict({m: c for c, m in p.terms})


def intersect(I: IdealHandle, J: IdealHandle) -> IdealHandle:
    """I ∩ J by the tag-variable construction, eliminating the tag."""
    if I.ring != J.ring:
        raise RingMismatch("intersecting ideals across different rings")
    ring = I.ring
    tag = _fresh_name("t", ring.names)
    big = RingContext.create(
        ring.names + (tag,), ring.domain, ring.weights + (1,), graded=False
    )
    t = big.var(tag)
    one_minus_t = big.one - t
    gens = [t * _lift(a, big) for a in I.generators]
    gens += [one_minus_t * _lift(b, big) for b in J.generators]
    gens += [_lift(q, big) for q in ring.relation_polys()]
    mixed = eliminate(IdealHandle(big, tuple(gens)), [tag])
    back = tuple(_retag(g, ring) for g in mixed.generators)
    return canonical_generators(IdealHandle(ring, back))


def colon(I: IdealHandle, D) -> IdealHandle:
    """(I : D) = {c : c*D in I} for a nonzero element or an ideal handle.

    For a handle the colon is the intersection of the colons by its
    generators.  Soundness of every returned generator is machine checked
    against the defining membership; completeness rests on the syzygy
    computation."""
    if isinstance(D, IdealHandle):
        if D.ring != I.ring:
            raise RingMismatch("colon ideal from a different ring")
        divisors = [g for g in D.generators if not g.is_zero]
        if not divisors:
            raise PreconditionError("colon by the zero ideal")
        out = _colon_element(I, divisors[0])
        for d in divisors[1:]:
            out = intersect(out, _colon_element(I, d))
        return out
    return _colon_element(I, D)


def _colon_element(I: IdealHandle, g: Polynomial) -> IdealHandle:
    """(I : g) from the first coordinates of the syzygies of
    (g, generators of I)."""
    ring = I.ring
    if g.ring != ring:
        raise RingMismatch("colon element from a different ring")
    if g.is_zero:
        raise PreconditionError("colon by zero")
    inputs = [poly_to_vec(g)] + [poly_to_vec(h) for h in I.generators]
    rows = syzygy_generators_raw(inputs, 1, ring)
    firsts = []
    for row in rows:
        coeffs = {m: c for (pos, m), c in row.items() if pos == 0}
        p = ring.from_dict(coeffs)
        if not p.is_zero:
            firsts.append(p)
    result = canonical_generators(IdealHandle(ring, tuple(firsts)))
    for c in result.generators:
        if not ideal_member(c * g, I)[0]:
            raise InternalError("colon generator fails the defining membership")
    return result


def saturate(
    I: IdealHandle, g: Polynomial, cap: int = 32
) -> tuple[IdealHandle, int]:
    """(I : g^infinity) with the number of strictly increasing colon steps."""
    if g.is_zero:
        raise PreconditionError("saturation by zero")
    cur = canonical_generators(I)
    steps = 0
    for _ in range(cap):
        nxt = colon(cur, g)
        if equal_ideals(cur, nxt):
            return cur, steps
        cur = nxt
        steps += 1
    raise BudgetExceeded(f"saturation did not stabilize within {cap} colon steps")


def radical_member(g: Polynomial, I: IdealHandle) -> bool:
    """g in rad(I), by adjoining an inverse for g and testing 1 in the sum."""
    ring = I.ring
    if g.ring != ring:
        raise RingMismatch("radical test element from a different ring")
    if g.is_zero:
        return True
    aux = _fresh_name("y", ring.names)
    big = RingContext.create(
        ring.names + (aux,), ring.domain, ring.weights + (1,), graded=False
    )
    y = big.var(aux)
    gens = [_lift(h, big) for h in I.generators]
    gens += [_lift(q, big) for q in ring.relation_polys()]
    gens.append(big.one - y * _lift(g, big))
    gb = groebner_basis(tuple(gens), ring=big, allow_inhomogeneous=True)
    return normal_form(big.one, gb).is_zero


def is_nonzerodivisor(g: Polynomial, I: IdealHandle) -> bool:
    """g is a nonzerodivisor on ring/I, i.e. (I : g) = I."""
    if g.is_zero:
        return False
    return equal_ideals(colon(I, g), I)


def dimension(I: IdealHandle) -> int:
    """Krull dimension of ring/I via maximal independent variable sets
    against the leading-term ideal."""
    ring = I.ring
    leads = [g.leading_monomial() for g in reduced_groebner(I).elements]
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in leads]
    if frozenset() in supports:
        return -1
    n = ring.nvars
    best = 0
    for mask in range(1 << n):
        size = mask.bit_count()
        if size <= best:
            continue
        S = {i for i in range(n) if mask >> i & 1}
        if all(not sup <= S for sup in supports):
            best = size
    return best


@dataclass(frozen=True)
class SocleData:
    """Socle description of ring/I.

    When the quotient is not finite dimensional over the scalars the flag
    is false and the remaining fields are empty.  The socle basis consists
    of normal-form representatives of the elements killed by every
    variable; the quotient is Gorenstein exactly when that basis is a
    single element, exposed as ``u``."""

    zero_dimensional: bool
    standard_monomials: tuple[Mon, ...]
    quotient_dim: int | None
    socle_basis: tuple[Polynomial, ...]

    @property
    def socle_dim(self) -> int:
        return len(self.socle_basis)

    @property
    def gorenstein(self) -> bool:
        return self.zero_dimensional and len(self.socle_basis) == 1

    @property
    def u(self) -> Polynomial | None:
        return self.socle_basis[0] if self.gorenstein else None


def socle_data(I: IdealHandle) -> SocleData:
    ring = I.ring
    gb = reduced_groebner(I)
    if any(g.is_constant and not g.is_zero for g in gb.elements):
        raise PreconditionError("socle of the unit ideal")
    leads = [g.leading_monomial() for g in gb.elements]
    n = ring.nvars
    for i in range(n):
        if not any(
            m[i] > 0 and all(m[j] == 0 for j in range(n) if j != i) for m in leads
        ):
            return SocleData(False, (), None, ())
    unit: Mon = (0,) * n
    seen = {unit}
    queue = [unit]
    standard: list[Mon] = []
    while queue:
        m = queue.pop()
        if any(mon_divides(l, m) for l in leads):
            continue
        standard.append(m)
        for i in range(n):
            up = mon_mul(m, tuple(1 if j == i else 0 for j in range(n)))
            if up not in seen:
                seen.add(up)
                queue.append(up)
    standard.sort(key=ring.sort_key)
    index = {m: k for k, m in enumerate(standard)}
    dom = ring.domain
    dim = len(standard)
    stacked: list[list] = []
    for i in range(n):
        block = [[dom.zero] * dim for _ in range(dim)]
        for c, m in enumerate(standard):
            shifted = mon_mul(m, tuple(1 if j == i else 0 for j in range(n)))
            nf = normal_form(ring.monomial(shifted), gb)
            for coeff, mon in nf.terms:
                block[index[mon]][c] = coeff
        stacked.extend(block)
    kernel = nullspace(stacked, dim, dom)
    socle = tuple(
        ring.from_dict({standard[k]: v for k, v in enumerate(vec)})
        for vec in kernel
    )
    return SocleData(True, tuple(standard), dim, socle)


def symbolic_square(I: IdealHandle, witness: Polynomial) -> IdealHandle:
    """Saturation of I^2 by a witness element that is regular on ring/I.

    The witness condition (I : witness) = I is checked up front; without it
    the saturation can overshoot and the result is refused.
    """
    if not equal_ideals(colon(I, witness), canonical_generators(I)):
        raise PreconditionError(
            "symbolic square witness is a zerodivisor on the quotient by the ideal"
        )
    sat, _ = saturate(ideal_power(I, 2), witness)
    return sat
