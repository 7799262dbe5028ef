"""Buchberger engine with cofactor tracking, plus the public Groebner API.

The engine works on free-module terms ``(position, monomial)`` so ideals
(rank 1) and submodules of T^r share one implementation.  The module order is
position-over-term: earlier positions dominate, ties fall back to the ring
order.  Pair selection is the normal strategy (smallest lcm in the order);
the coprimality criterion is applied in rank 1 and the chain criterion in
general.  The reduced basis is unique for a given ideal and order, so the
output is canonical no matter how generators were listed.

Cofactor tracking keeps, for every basis element, its exact expression in the
input generators; membership certificates and syzygies build on that.  Syzygy
generators come from the classic three phases: a tracked basis G = A*F, the
S-pair syzygies of G (all pairs, no criteria, which is what makes the set
complete), and the pull-back Syz(F) = Syz(G)*A + rows(Id - B*A).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Optional, Sequence

from .budget import current_budget
from .errors import (
    DomainError,
    InternalError,
    NonHomogeneous,
    PreconditionError,
    RingMismatch,
)
from .orders import (
    Mon,
    mon_degree,
    mon_div,
    mon_divides,
    mon_gcd_is_one,
    mon_lcm,
    mon_mul,
)
from .poly import Polynomial, RingContext, Terms

# Raw forms used inside the engine:
#   polydict: dict[Mon, coeff]             one ring element
#   vecdict:  dict[(pos, Mon), coeff]      one element of a free module


# -- polydict helpers ------------------------------------------------------


def _pd_add_scaled(acc: dict, c, shift: Mon, other: dict, dom) -> None:
    """acc += c * x^shift * other, in place."""
    for m, c2 in other.items():
        key = mon_mul(shift, m)
        v = dom.add(acc.get(key, dom.zero), dom.mul(c, c2))
        if dom.is_zero(v):
            acc.pop(key, None)
        else:
            acc[key] = v


def _pd_mul(a: dict, b: dict, dom) -> dict:
    out: dict = {}
    for m1, c1 in a.items():
        _pd_add_scaled(out, c1, m1, b, dom)
    return out


def _pd_scale(a: dict, c, dom) -> dict:
    if dom.is_zero(c):
        return {}
    return {m: dom.mul(c, v) for m, v in a.items()}


# -- vecdict helpers -------------------------------------------------------


def _vec_add_scaled(acc: dict, c, shift: Mon, other: dict, dom) -> None:
    """acc += c * x^shift * other for module elements, in place."""
    for (pos, m), c2 in other.items():
        key = (pos, mon_mul(shift, m))
        v = dom.add(acc.get(key, dom.zero), dom.mul(c, c2))
        if dom.is_zero(v):
            acc.pop(key, None)
        else:
            acc[key] = v


def _vec_scale(a: dict, c, dom) -> dict:
    return {k: dom.mul(c, v) for k, v in a.items()}


class _Engine:
    """Bundles the ring data and the module term order."""

    def __init__(self, ring: RingContext):
        if not ring.domain.is_field:
            raise DomainError(
                f"Groebner computation requires field coefficients, not {ring.domain!r}"
            )
        self.ring = ring
        self.dom = ring.domain
        self.weights = ring.weights

    def mkey(self, key):
        pos, mon = key
        return (-pos, self.ring.sort_key(mon))

    def lead(self, vec: dict):
        return max(vec, key=self.mkey)

    def normal_form(self, vec: dict, basis, leads, track: bool):
        """Full reduction of vec by basis (monic); returns (nf, quotients).

        quotients[i] is a polydict with vec = sum q_i * basis_i + nf.
        """
        dom = self.dom
        work = dict(vec)
        remainder: dict = {}
        quots = [dict() for _ in basis] if track else None
        while work:
            key = max(work, key=self.mkey)
            pos, mon = key
            c = work[key]
            for i, (lpos, lmon) in enumerate(leads):
                if lpos == pos and mon_divides(lmon, mon):
                    shift = mon_div(mon, lmon)
                    _vec_add_scaled(work, dom.neg(c), shift, basis[i], dom)
                    if track:
                        q = quots[i]
                        q[shift] = dom.add(q.get(shift, dom.zero), c)
                    break
            else:
                remainder[key] = work.pop(key)
        return remainder, quots

    def buchberger(self, inputs: Sequence[dict], track: bool):
        """Reduced basis of the submodule generated by ``inputs``.

        Returns (basis, leads, cofactors) with cofactors[i] the polydict row
        expressing basis[i] in the inputs (None when track is False).
        """
        dom = self.dom
        basis: list[dict] = []
        leads: list = []
        cof: list[list[dict]] = []
        n_in = len(inputs)

        def append(vec: dict, row) -> None:
            lc = vec[self.lead(vec)]
            if not dom.is_zero(dom.sub(lc, dom.one)):
                inv = dom.invert(lc)
                vec = _vec_scale(vec, inv, dom)
                if track:
                    row = [_pd_scale(r, inv, dom) for r in row]
            basis.append(vec)
            leads.append(self.lead(vec))
            if track:
                cof.append(row)

        for idx, vec in enumerate(inputs):
            if not vec:
                continue
            row = None
            if track:
                row = [dict() for _ in range(n_in)]
                row[idx] = {(0,) * self.ring.nvars: dom.one}
            append(dict(vec), row)

        pending: set[tuple[int, int]] = set()
        processed: set[tuple[int, int]] = set()
        for i in range(len(basis)):
            for j in range(i):
                if leads[i][0] == leads[j][0]:
                    pending.add((j, i))

        def pair_key(pair):
            i, j = pair
            pos = leads[i][0]
            lcm = mon_lcm(leads[i][1], leads[j][1])
            return (self.mkey((pos, lcm)), i, j)

        while pending:
            pair = min(pending, key=pair_key)
            pending.discard(pair)
            i, j = pair
            pos = leads[i][0]
            lcm = mon_lcm(leads[i][1], leads[j][1])
            budget = current_budget()
            if budget:
                budget.check(degree=mon_degree(lcm, self.weights))
            processed.add(pair)
            # Coprimality criterion is only sound for rank-1 leading data.
            if (
                len(vec_positions(basis[i])) == 1
                and len(vec_positions(basis[j])) == 1
                and mon_gcd_is_one(leads[i][1], leads[j][1])
            ):
                continue
            if self._chain_skip(i, j, pos, lcm, leads, pending):
                continue
            svec, srow = self._spoly(i, j, basis, leads, cof if track else None)
            if not svec:
                continue
            nf, quots = self.normal_form(svec, basis, leads, track)
            if not nf:
                continue
            new_row = None
            if track:
                new_row = srow
                for k, q in enumerate(quots):
                    for shift, c in q.items():
                        for l in range(n_in):
                            if cof[k][l]:
                                _pd_add_scaled(
                                    new_row[l], dom.neg(c), shift, cof[k][l], dom
                                )
            append(nf, new_row)
            new = len(basis) - 1
            for k in range(new):
                if leads[k][0] == leads[new][0]:
                    pending.add((k, new))

        basis, leads, cof = self._interreduce(basis, leads, cof if track else None)
        return basis, leads, (cof if track else None)

    def _chain_skip(self, i, j, pos, lcm, leads, pending) -> bool:
        for k, (kpos, kmon) in enumerate(leads):
            if k in (i, j) or kpos != pos or not mon_divides(kmon, lcm):
                continue
            p1 = (min(i, k), max(i, k))
            p2 = (min(j, k), max(j, k))
            if p1 not in pending and p2 not in pending:
                return True
        return False

    def _spoly(self, i, j, basis, leads, cof):
        dom = self.dom
        lcm = mon_lcm(leads[i][1], leads[j][1])
        si = mon_div(lcm, leads[i][1])
        sj = mon_div(lcm, leads[j][1])
        out: dict = {}
        _vec_add_scaled(out, dom.one, si, basis[i], dom)
        _vec_add_scaled(out, dom.neg(dom.one), sj, basis[j], dom)
        row = None
        if cof is not None:
            row = [dict() for _ in range(len(cof[i]))]
            for l in range(len(row)):
                if cof[i][l]:
                    _pd_add_scaled(row[l], dom.one, si, cof[i][l], dom)
                if cof[j][l]:
                    _pd_add_scaled(row[l], dom.neg(dom.one), sj, cof[j][l], dom)
        return out, row

    def _interreduce(self, basis, leads, cof):
        dom = self.dom
        order = sorted(range(len(basis)), key=lambda k: self.mkey(leads[k]))
        kept: list[int] = []
        for k in order:
            lk = leads[k]
            if any(
                leads[h][0] == lk[0] and mon_divides(leads[h][1], lk[1])
                for h in kept
            ):
                continue
            kept.append(k)
        basis2 = [dict(basis[k]) for k in kept]
        leads2 = [leads[k] for k in kept]
        cof2 = [cof[k] for k in kept] if cof is not None else None
        # Tail reduction against the other kept elements.
        for idx in range(len(basis2)):
            others = basis2[:idx] + basis2[idx + 1 :]
            oleads = leads2[:idx] + leads2[idx + 1 :]
            nf, quots = self.normal_form(basis2[idx], others, oleads, cof2 is not None)
            basis2[idx] = nf
            if cof2 is not None:
                orows = cof2[:idx] + cof2[idx + 1 :]
                row = cof2[idx]
                for k, q in enumerate(quots):
                    for shift, c in q.items():
                        for l in range(len(row)):
                            if orows[k][l]:
                                _pd_add_scaled(
                                    row[l], dom.neg(c), shift, orows[k][l], dom
                                )
        final = sorted(
            range(len(basis2)), key=lambda k: self.mkey(leads2[k]), reverse=True
        )
        basis3 = [basis2[k] for k in final]
        leads3 = [leads2[k] for k in final]
        cof3 = [cof2[k] for k in final] if cof2 is not None else None
        return basis3, leads3, cof3


def vec_positions(vec: dict) -> set:
    return {pos for pos, _ in vec}


# -- raw conversions -------------------------------------------------------


def poly_to_vec(p: Polynomial, pos: int = 0) -> dict:
    return {(pos, m): c for c, m in p.terms}


def vec_to_poly(vec: dict, ring: RingContext, pos: int = 0) -> Polynomial:
    return ring.from_dict({m: c for (q, m), c in vec.items() if q == pos})


def polydict_to_poly(d: dict, ring: RingContext) -> Polynomial:
    return ring.from_dict(d)


def relation_vecs(ring: RingContext, rank: int) -> list[dict]:
    """q * e_j for every relation q and every position j."""
    out = []
    for terms in ring.relations:
        for j in range(rank):
            out.append({(j, m): c for c, m in terms})
    return out


# -- cache -----------------------------------------------------------------

_CACHE: dict = {}
_CACHE_LOCK = threading.Lock()


def _cache_key(ring: RingContext, gens: tuple[Terms, ...]):
    return (ring, gens)


def reduced_basis_raw(
    ring: RingContext, gens: Sequence[Polynomial], track: bool = False
):
    """Cached reduced basis of (gens) + relations, as raw vecdicts.

    The cofactor rows are aligned to gens followed by the relation multiples
    (one per relation; rank 1 here).
    """
    key = _cache_key(ring, tuple(g.terms for g in gens))
    with _CACHE_LOCK:
        hit = _CACHE.get(key)
    if hit is not None and (hit[2] is not None or not track):
        return hit
    engine = _Engine(ring)
    inputs = [poly_to_vec(g) for g in gens] + relation_vecs(ring, 1)
    basis, leads, cof = engine.buchberger(inputs, track)
    result = (basis, leads, cof)
    with _CACHE_LOCK:
        _CACHE[key] = result
    return result


def clear_cache() -> None:
    with _CACHE_LOCK:
        _CACHE.clear()


# -- public API ------------------------------------------------------------


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis: monic, interreduced, canonically sorted."""

    ring: RingContext
    elements: tuple[Polynomial, ...]
    relations_adjoined: bool

    @property
    def order(self):
        return self.ring.order


@dataclass(frozen=True)
class MembershipCertificate:
    """element = sum(coefficients * generators) + sum(relation part).

    Replayable with polynomial arithmetic alone; ``verify`` recomputes the
    combination exactly.
    """

    element: Polynomial
    generators: tuple[Polynomial, ...]
    coefficients: tuple[Polynomial, ...]
    relations: tuple[Polynomial, ...]
    relation_coefficients: tuple[Polynomial, ...]

    def verify(self) -> bool:
        ring = self.element.ring
        acc = ring.zero
        for c, g in zip(self.coefficients, self.generators):
            acc = acc + c * g
        for c, q in zip(self.relation_coefficients, self.relations):
            acc = acc + c * q
        return acc == self.element


def _resolve_gens(gens, ring: Optional[RingContext]):
    if hasattr(gens, "generators") and hasattr(gens, "ring"):
        return gens.ring, tuple(gens.generators)
    if ring is None:
        gens = tuple(gens)
        if not gens:
            raise PreconditionError("cannot infer ring from an empty generator list")
        ring = gens[0].ring
    return ring, tuple(gens)


def groebner_basis(
    gens,
    ring: Optional[RingContext] = None,
    order=None,
    allow_inhomogeneous: bool = False,
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal (relations adjoined).

    In a graded ring every generator must be homogeneous unless the internal
    elimination passes opt out via ``allow_inhomogeneous``.
    """
    ring, gens = _resolve_gens(gens, ring)
    for g in gens:
        if g.ring != ring:
            raise RingMismatch("generator tagged to a different ring")
    if order is not None and order != ring.order:
        ring = ring.with_order(order)
        gens = tuple(ring.from_dict({m: c for c, m in g.terms}) for g in gens)
    if ring.graded and not allow_inhomogeneous:
        for g in gens:
            if not g.is_homogeneous():
                raise NonHomogeneous(
                    f"non-homogeneous generator {g}; graded contract refuses it"
                )
    basis, _, _ = reduced_basis_raw(ring, gens, track=False)
    elements = tuple(vec_to_poly(v, ring) for v in basis)
    return GroebnerBasis(ring, elements, relations_adjoined=bool(ring.relations))


def normal_form(p: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Unique remainder of p modulo the basis; zero iff p is in the ideal."""
    if p.ring != gb.ring:
        if p.ring.names == gb.ring.names and p.ring.domain == gb.ring.domain:
            p = gb.ring.from_dict({m: c for c, m in p.terms})
        else:
            raise RingMismatch("polynomial and basis from different rings")
    engine = _Engine(gb.ring)
    basis = [poly_to_vec(g) for g in gb.elements]
    leads = [engine.lead(v) for v in basis]
    nf, _ = engine.normal_form(poly_to_vec(p), basis, leads, track=False)
    return vec_to_poly(nf, gb.ring)


def ideal_member(
    p: Polynomial, I, want_certificate: bool = False
) -> tuple[bool, Optional[MembershipCertificate]]:
    """Membership of p in the ideal (relations adjoined), with optional
    replayable certificate aligned to the ideal's generator list."""
    ring, gens = _resolve_gens(I, None if hasattr(I, "ring") else p.ring)
    if p.ring != ring:
        raise RingMismatch("element and ideal from different rings")
    engine = _Engine(ring)
    basis, leads, cof = reduced_basis_raw(ring, gens, track=want_certificate)
    nf, quots = engine.normal_form(poly_to_vec(p), basis, leads, want_certificate)
    member = not nf
    if not want_certificate or not member:
        return member, None
    dom = ring.domain
    n_gens = len(gens)
    n_rel = len(ring.relations)
    combo = [dict() for _ in range(n_gens + n_rel)]
    for k, q in enumerate(quots):
        if not q:
            continue
        for shift, c in q.items():
            for l in range(n_gens + n_rel):
                if cof[k][l]:
                    _pd_add_scaled(combo[l], c, shift, cof[k][l], dom)
    ambient = ring.ambient()
    cert = MembershipCertificate(
        element=Polynomial(ambient, p.terms),
        generators=tuple(Polynomial(ambient, g.terms) for g in gens),
        coefficients=tuple(polydict_to_poly(combo[l], ambient) for l in range(n_gens)),
        relations=ambient_relation_polys(ring),
        relation_coefficients=tuple(
            polydict_to_poly(combo[n_gens + l], ambient) for l in range(n_rel)
        ),
    )
    if not cert.verify():
        raise InternalError("membership certificate failed replay")
    return True, cert


def ambient_relation_polys(ring: RingContext) -> tuple[Polynomial, ...]:
    ambient = ring.ambient()
    return tuple(Polynomial(ambient, t) for t in ring.relations)


def eliminate(I, drop_vars) -> "IdealHandle":
    """Intersection with the subring on the retained variables.

    Runs a block-order pass without the homogeneity gate: elimination
    correctness is order-theoretic and several callers feed tag constructions
    that are not graded.
    """
    from .ideals import IdealHandle
    from .orders import elimination_order
    from .poly import substitute_zero

    ring, gens = _resolve_gens(I, None)
    drop = sorted({ring.var_index(n) for n in drop_vars})
    if not drop:
        return IdealHandle(ring, tuple(gens))
    for terms in ring.relations:
        for _, m in terms:
            if any(m[i] for i in drop):
                raise PreconditionError(
                    "dropped variable appears in the ring relations"
                )
    elim_ring = ring.with_order(elimination_order(drop))
    elim_gens = [elim_ring.from_dict({m: c for c, m in g.terms}) for g in gens]
    basis, _, _ = reduced_basis_raw(elim_ring, tuple(elim_gens), track=False)
    names = [ring.names[i] for i in drop]
    kept_polys = []
    for vec in basis:
        poly = vec_to_poly(vec, elim_ring)
        if poly.is_zero:
            continue
        if all(all(m[i] == 0 for i in drop) for _, m in poly.terms):
            kept_polys.append(substitute_zero(poly, names))
    if kept_polys:
        sub = kept_polys[0].ring
    else:
        probe = substitute_zero(elim_ring.zero, names)
        sub = probe.ring
    return IdealHandle(sub, tuple(kept_polys))


def raw_member(ring: RingContext, inputs: Sequence[dict], target: dict, track: bool):
    """Membership of a raw vector in the span of raw inputs (as given; the
    caller adjoins relation vectors if it wants quotient semantics).

    Returns (member, combo) with combo[l] the polydict coefficient of
    inputs[l], or None when not tracking or not a member.
    """
    engine = _Engine(ring)
    dom = ring.domain
    basis, leads, cof = engine.buchberger(inputs, track)
    nf, quots = engine.normal_form(dict(target), basis, leads, track)
    member = not nf
    if not track or not member:
        return member, None
    combo = [dict() for _ in inputs]
    for k, q in enumerate(quots):
        for shift, c in q.items():
            for l in range(len(inputs)):
                if cof[k][l]:
                    _pd_add_scaled(combo[l], c, shift, cof[k][l], dom)
    return True, combo


# -- syzygies --------------------------------------------------------------


def syzygy_generators_raw(
    inputs: Sequence[dict],
    rank: int,
    ring: RingContext,
    adjoin_relations: bool = True,
) -> list[dict]:
    """Generators of the syzygy module of ``inputs`` inside T^rank.

    With relations adjoined the result generates the syzygies over the
    quotient ring (coordinates are still ambient polynomials).  Rows are
    vecdicts over positions 0..len(inputs)-1.
    """
    engine = _Engine(ring)
    dom = ring.domain
    n = len(inputs)
    zero_pos = [i for i, v in enumerate(inputs) if not v]
    live = [(i, dict(v)) for i, v in enumerate(inputs) if v]
    aug = [v for _, v in live]
    if adjoin_relations:
        aug = aug + relation_vecs(ring, rank)
    n_aug = len(aug)

    rows: list[dict] = []
    for i in zero_pos:
        rows.append({(i, (0,) * ring.nvars): dom.one})
    if not aug:
        return rows

    basis, leads, cof = engine.buchberger(aug, track=True)
    t = len(basis)

    # S-pair syzygies of the reduced basis, all pairs, no criteria.
    syz_g: list[dict] = []
    for a in range(t):
        for b in range(a + 1, t):
            if leads[a][0] != leads[b][0]:
                continue
            lcm = mon_lcm(leads[a][1], leads[b][1])
            sa = mon_div(lcm, leads[a][1])
            sb = mon_div(lcm, leads[b][1])
            svec: dict = {}
            _vec_add_scaled(svec, dom.one, sa, basis[a], dom)
            _vec_add_scaled(svec, dom.neg(dom.one), sb, basis[b], dom)
            nf, quots = engine.normal_form(svec, basis, leads, track=True)
            if nf:
                raise InternalError("S-pair of a reduced basis did not reduce to zero")
            row: dict = {(a, sa): dom.one}
            key_b = (b, sb)
            row[key_b] = dom.sub(row.get(key_b, dom.zero), dom.one)
            if dom.is_zero(row.get(key_b, dom.zero)):
                row.pop(key_b, None)
            for k, q in enumerate(quots):
                for shift, c in q.items():
                    key = (k, shift)
                    v = dom.sub(row.get(key, dom.zero), c)
                    if dom.is_zero(v):
                        row.pop(key, None)
                    else:
                        row[key] = v
            if row:
                syz_g.append(row)

    # B expresses every input in the basis.
    b_rows: list[list[dict]] = []
    for v in aug:
        nf, quots = engine.normal_form(dict(v), basis, leads, track=True)
        if nf:
            raise InternalError("input did not reduce to zero against its own basis")
        b_rows.append(quots)

    # Pull back: Syz(F) = Syz(G)*A  +  rows of (Id - B*A).
    def compose(row_over_g: dict) -> dict:
        out: dict = {}
        for (k, shift), c in row_over_g.items():
            for l in range(n_aug):
                if cof[k][l]:
                    for m, c2 in cof[k][l].items():
                        key = (l, mon_mul(shift, m))
                        v = dom.add(out.get(key, dom.zero), dom.mul(c, c2))
                        if dom.is_zero(v):
                            out.pop(key, None)
                        else:
                            out[key] = v
        return out

    pulled = [compose(r) for r in syz_g]
    unit = (0,) * ring.nvars
    # rows of (Id - B*A)
    for l in range(n_aug):
        row: dict = {(l, unit): dom.one}
        for k, q in enumerate(b_rows[l]):
            if not q:
                continue
            for shift, c in q.items():
                for l2 in range(n_aug):
                    if cof[k][l2]:
                        for m, c2 in cof[k][l2].items():
                            key = (l2, mon_mul(shift, m))
                            v = dom.sub(row.get(key, dom.zero), dom.mul(c, c2))
                            if dom.is_zero(v):
                                row.pop(key, None)
                            else:
                                row[key] = v
        if row:
            pulled.append(row)

    # Back to the caller's coordinates: live index -> original index, and
    # relation-multiple coordinates dropped.
    out_rows = rows
    index_map = {a: i for a, (i, _) in enumerate(live)}
    for r in pulled:
        mapped: dict = {}
        for (l, m), c in r.items():
            if l >= len(live):
                continue
            mapped[(index_map[l], m)] = c
        if mapped:
            out_rows.append(mapped)
    return out_rows


def syzygy_check_raw(rows, inputs, ring: RingContext) -> bool:
    """Machine check: every row annihilates the inputs modulo relations."""
    engine = _Engine(ring)
    rel = relation_vecs(ring, 1 + max(
        [p for v in inputs for p, _ in v], default=0
    )) if ring.relations else []
    basis, leads, _ = (
        engine.buchberger(rel, track=False) if rel else ([], [], None)
    )
    dom = ring.domain
    for row in rows:
        acc: dict = {}
        for (idx, shift), c in row.items():
            _vec_add_scaled(acc, c, shift, inputs[idx], dom)
        if acc and basis:
            nf, _ = engine.normal_form(acc, basis, leads, track=False)
            acc = nf
        if acc:
            return False
    return True
