"""Weak-liftability criteria for cyclic modules over hypersurface quotients.

The object under test is T/I as a module over R = T/(f), where f is a
nonzerodivisor contained in the ideal I.  Complete criteria (the syzygy-row
membership test, the socle tests in the zero-dimensional Gorenstein and
one-dimensional Cohen-Macaulay cases, the single-degree presentation test,
and the cyclic-group model) issue WeaklyLiftable / NotWeaklyLiftable.
Necessary-condition sweeps only ever report ObstructionFound or
Inconclusive, so no verdict overstates what was proved.  Positive paths
carry certificates that replay by library calls alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .domains import GF
from .errors import NotApplicable, PreconditionError
from .groebner import ideal_member
from .ideals import (
    IdealHandle,
    canonical_generators,
    colon,
    dimension,
    equal_ideals,
    ideal,
    ideal_power,
    ideal_product,
    ideal_sum,
    is_nonzerodivisor,
    maximal_ideal,
    radical_member,
    socle_data,
    symbolic_square,
    zero_ideal,
)
from .modules import VectorPoly, minimal_presentation, module_member, syzygy_matrix
from .poly import Polynomial, RingContext
from .resolutions import BettiTable, betti_numbers, resolve_truncated


class Verdict(Enum):
    WEAKLY_LIFTABLE = "WeaklyLiftable"
    NOT_WEAKLY_LIFTABLE = "NotWeaklyLiftable"
    OBSTRUCTION_FOUND = "ObstructionFound"
    LIFT_CERTIFIED = "LiftCertified"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class CriterionCheck:
    """One step of a decision trail: what was checked and how it went."""

    name: str
    outcome: str  # "pass" | "fail" | "info"
    detail: str = ""


@dataclass(frozen=True)
class Witness:
    """An element violating a named inclusion."""

    element: Polynomial
    failed_inclusion: str


@dataclass(frozen=True)
class LiftDecision:
    verdict: Verdict
    certificate: object | None
    trail: tuple[CriterionCheck, ...]
    warnings: tuple[str, ...] = ()
    artifacts: tuple[tuple[str, str], ...] = ()


WARN_NON_GRADED = "non-graded input: homogeneity-based guarantees off"
WARN_WITNESS = "witness-conditional: symbolic-square witness supplied by caller"


def _base_warnings(ring: RingContext) -> tuple[str, ...]:
    return () if ring.graded else (WARN_NON_GRADED,)


def _require_f_in_ideal(f: Polynomial, I: IdealHandle, trail: list[CriterionCheck]):
    member, _ = ideal_member(f, I)
    if not member:
        raise PreconditionError("f does not lie in the ideal")
    trail.append(CriterionCheck("f in I", "pass"))


def _require_nonzerodivisor(f: Polynomial, ring: RingContext, trail: list[CriterionCheck]):
    if f.is_zero or not is_nonzerodivisor(f, zero_ideal(ring)):
        raise PreconditionError("f is a zerodivisor on the base ring")
    trail.append(CriterionCheck("f nonzerodivisor on T", "pass"))


def _ascending(I: IdealHandle) -> list[Polynomial]:
    """Generators of the canonical form, smallest leading monomial first.

    Keeps obstruction witnesses deterministic: the first failing element of
    this ordering is the reported witness.
    """
    ring = I.ring
    gens = list(canonical_generators(I).generators)
    gens.sort(key=lambda g: ring.sort_key(g.leading_monomial()))
    return gens


def obstruction_suite(
    T: RingContext,
    f: Polynomial,
    I: IdealHandle,
    sample_Js: Sequence[IdealHandle] = (),
) -> LiftDecision:
    """Necessary conditions on the annihilator of a weakly liftable module.

    Checks, in order: (I^2 : f) contained in I; then for each supplied J,
    (J*I : f) contained in I + J, and (J*I : f) contained in rad(I + J).
    The first violated inclusion stops the sweep with ObstructionFound and
    the violating element.  All passes yield Inconclusive: these conditions
    are necessary, never sufficient.
    """
    trail: list[CriterionCheck] = []
    warnings = _base_warnings(T)
    _require_f_in_ideal(f, I, trail)
    _require_nonzerodivisor(f, T, trail)

    I2f = colon(ideal_power(I, 2), f)
    for g in _ascending(I2f):
        if not ideal_member(g, I)[0]:
            trail.append(
                CriterionCheck("(I^2 : f) in I", "fail", f"witness {g}")
            )
            return LiftDecision(
                Verdict.OBSTRUCTION_FOUND,
                Witness(g, "(I^2 : f) in I"),
                tuple(trail),
                warnings,
            )
    trail.append(CriterionCheck("(I^2 : f) in I", "pass"))

    for k, J in enumerate(sample_Js):
        JIf = colon(ideal_product(J, I), f)
        IplusJ = ideal_sum(I, J)
        label = f"J[{k}]"
        for g in _ascending(JIf):
            if not ideal_member(g, IplusJ)[0]:
                name = f"(J*I : f) in I + J for {label}"
                trail.append(CriterionCheck(name, "fail", f"witness {g}"))
                return LiftDecision(
                    Verdict.OBSTRUCTION_FOUND,
                    Witness(g, name),
                    tuple(trail),
                    warnings,
                )
        trail.append(CriterionCheck(f"(J*I : f) in I + J for {label}", "pass"))
        for g in _ascending(JIf):
            if not radical_member(g, IplusJ):
                name = f"(J*I : f) in rad(I + J) for {label}"
                trail.append(CriterionCheck(name, "fail", f"witness {g}"))
                return LiftDecision(
                    Verdict.OBSTRUCTION_FOUND,
                    Witness(g, name),
                    tuple(trail),
                    warnings,
                )
        trail.append(CriterionCheck(f"(J*I : f) in rad(I + J) for {label}", "pass"))

    trail.append(
        CriterionCheck(
            "necessary conditions exhausted",
            "info",
            "no obstruction found; sweep is not a liftability proof",
        )
    )
    return LiftDecision(Verdict.INCONCLUSIVE, None, tuple(trail), warnings)


def _presentation_generators(
    f: Polynomial, I: IdealHandle
) -> tuple[Polynomial, ...]:
    """Generator list (f, f_1, ..., f_n): f first, duplicates dropped."""
    gens: list[Polynomial] = [f]
    for g in I.generators:
        if g.is_zero or any(g.terms == h.terms for h in gens):
            continue
        gens.append(g)
    return tuple(gens)


def weaklift_cyclic(T: RingContext, f: Polynomial, I: IdealHandle) -> LiftDecision:
    """Complete weak-liftability decision for T/I over T/(f).

    Builds the syzygy presentation of the generator list (f, f_1, ..., f_n)
    and transposes it, so its rows are indexed by the generators.  T/I is
    weakly liftable exactly when the f-row lies in the span of the other
    rows plus I times the ambient free module; the membership certificate
    holds the coefficients applied to those rows.
    """
    trail: list[CriterionCheck] = []
    warnings = _base_warnings(T)
    _require_f_in_ideal(f, I, trail)
    _require_nonzerodivisor(f, T, trail)

    gens = _presentation_generators(f, I)
    syz = syzygy_matrix(gens)
    trail.append(
        CriterionCheck(
            "syzygy presentation",
            "info",
            f"{len(gens)} generators, {syz.nrows} syzygy rows",
        )
    )
    if syz.nrows == 0:
        trail.append(
            CriterionCheck(
                "f-row membership",
                "pass",
                "no syzygies: the ideal is free over its single generator",
            )
        )
        return LiftDecision(Verdict.WEAKLY_LIFTABLE, None, tuple(trail), warnings)

    X = syz.transpose()  # rows now indexed by (f, f_1, ..., f_n)
    f_row = X.row(0)
    other_rows = [X.row(i) for i in range(1, X.nrows)]
    member, cert = module_member(
        f_row, other_rows, coeff_ideal=I, want_certificate=True
    )
    if member:
        trail.append(
            CriterionCheck(
                "f-row membership",
                "pass",
                "f-row of the transposed syzygy matrix lies in the span of "
                "the remaining rows plus I-multiples",
            )
        )
        return LiftDecision(
            Verdict.WEAKLY_LIFTABLE,
            cert,
            tuple(trail),
            warnings,
            (("row_coefficient_count", str(len(other_rows))),),
        )
    trail.append(
        CriterionCheck(
            "f-row membership",
            "fail",
            f"f-row {f_row} is outside the span of the remaining rows "
            "plus I-multiples",
        )
    )
    return LiftDecision(
        Verdict.NOT_WEAKLY_LIFTABLE,
        Witness(
            f, "f-row of the transposed syzygy matrix in span(other rows) + I*T^m"
        ),
        tuple(trail),
        warnings,
    )


def weaklift_gor0(T: RingContext, f: Polynomial, I: IdealHandle) -> LiftDecision:
    """Weak-liftability in the zero-dimensional Gorenstein case.

    With u the socle generator of T/I, the module T/I is weakly liftable
    over T/(f) if and only if u*f does not lie in I^2.
    """
    trail: list[CriterionCheck] = []
    warnings = _base_warnings(T)
    _require_f_in_ideal(f, I, trail)
    _require_nonzerodivisor(f, T, trail)
    sd = socle_data(I)
    if not sd.zero_dimensional:
        raise PreconditionError(
            "quotient is not zero-dimensional; use weaklift_cyclic"
        )
    if not sd.gorenstein:
        raise PreconditionError(
            f"quotient is not Gorenstein (socle dimension {sd.socle_dim}); "
            "use weaklift_cyclic"
        )
    u = sd.u
    trail.append(CriterionCheck("socle", "pass", f"Gorenstein with generator {u}"))
    uf = u * f
    member, cert = ideal_member(uf, ideal_power(I, 2), want_certificate=True)
    artifacts = (("socle_generator", str(u)),)
    if member:
        trail.append(CriterionCheck("u*f outside I^2", "fail", f"u*f = {uf} in I^2"))
        return LiftDecision(
            Verdict.NOT_WEAKLY_LIFTABLE, cert, tuple(trail), warnings, artifacts
        )
    trail.append(CriterionCheck("u*f outside I^2", "pass", f"u*f = {uf}"))
    return LiftDecision(
        Verdict.WEAKLY_LIFTABLE, None, tuple(trail), warnings, artifacts
    )


def weaklift_cm1(
    T: RingContext,
    f: Polynomial,
    I: IdealHandle,
    J: IdealHandle,
    w: Polynomial,
) -> LiftDecision:
    """Weak-liftability in the one-dimensional Cohen-Macaulay case.

    J must be supplied as a representative of the canonical module of T/I
    (a caller assertion, recorded, not verified), with T/(I+J) zero-
    dimensional Gorenstein; u is its socle generator.  w is a witness for
    the second symbolic power of I via saturation.  T/I is weakly liftable
    over T/(f) if and only if u*f does not lie in I*J + I^(2).
    """
    trail: list[CriterionCheck] = []
    warnings = _base_warnings(T) + (WARN_WITNESS,)
    _require_f_in_ideal(f, I, trail)
    _require_nonzerodivisor(f, T, trail)
    dim = dimension(I)
    if dim == 0:
        raise PreconditionError(
            "quotient is zero-dimensional; use weaklift_gor0"
        )
    if dim != 1:
        raise PreconditionError(
            f"quotient has dimension {dim}; this criterion needs dimension 1"
        )
    trail.append(CriterionCheck("dim T/I = 1", "pass"))
    sd = socle_data(ideal_sum(I, J))
    if not sd.zero_dimensional or not sd.gorenstein:
        raise PreconditionError(
            "T/(I+J) is not zero-dimensional Gorenstein; "
            "J does not present a canonical module this way"
        )
    u = sd.u
    trail.append(
        CriterionCheck("socle of I + J", "pass", f"Gorenstein with generator {u}")
    )
    sq = symbolic_square(I, w)  # raises unless (I : w) = I
    trail.append(CriterionCheck("(I : w) = I", "pass", f"w = {w}"))
    target = ideal_sum(ideal_product(I, J), sq)
    uf = u * f
    member, cert = ideal_member(uf, target, want_certificate=True)
    artifacts = (
        ("socle_generator", str(u)),
        ("symbolic_square_witness", str(w)),
        (
            "canonical_module_assertion",
            "J is asserted by the caller to represent the canonical module; "
            "not machine verified",
        ),
    )
    if member:
        trail.append(
            CriterionCheck("u*f outside I*J + I^(2)", "fail", f"u*f = {uf}")
        )
        return LiftDecision(
            Verdict.NOT_WEAKLY_LIFTABLE, cert, tuple(trail), warnings, artifacts
        )
    trail.append(CriterionCheck("u*f outside I*J + I^(2)", "pass", f"u*f = {uf}"))
    return LiftDecision(
        Verdict.WEAKLY_LIFTABLE, None, tuple(trail), warnings, artifacts
    )


def graded_obstruction(T: RingContext, f: Polynomial, I: IdealHandle) -> LiftDecision:
    """Single-degree test: I generated in one degree a, f of degree a with
    (f) strictly inside I.  If the minimal presentation matrix of I is
    nonempty with every nonzero entry of degree below a, then T/I is not
    weakly liftable over T/(f); otherwise the test is inconclusive.
    """
    if not T.graded:
        raise NotApplicable("single-degree test needs a graded ring")
    gens = [g for g in I.generators if not g.is_zero]
    if not gens:
        raise NotApplicable("single-degree test needs a nonzero ideal")
    degs = set()
    for g in gens:
        if not g.is_homogeneous():
            raise NotApplicable("ideal generators must be homogeneous")
        degs.add(g.degree())
    if len(degs) != 1:
        raise NotApplicable(
            f"ideal generated in several degrees {sorted(degs)}"
        )
    a = degs.pop()
    if f.is_zero or not f.is_homogeneous() or f.degree() != a:
        raise NotApplicable(f"f must be homogeneous of the generation degree {a}")
    trail: list[CriterionCheck] = []
    _require_f_in_ideal(f, I, trail)
    if equal_ideals(ideal(T, (f,)), I):
        raise NotApplicable("(f) equals I; the test needs (f) strictly inside I")
    trail.append(CriterionCheck("(f) strictly inside I", "pass"))
    mins, X = minimal_presentation([VectorPoly(T, (g,)) for g in gens])
    entry_degs = [
        e.degree() for row in X.rows for e in row if not e.is_zero
    ]
    trail.append(
        CriterionCheck(
            "minimal presentation",
            "info",
            f"{len(mins)} generators, {X.ncols} relations, "
            f"entry degrees {sorted(set(entry_degs))}",
        )
    )
    artifacts = (
        ("generation_degree", str(a)),
        ("presentation_entry_degrees", str(sorted(set(entry_degs)))),
    )
    if X.ncols > 0 and entry_degs and all(d < a for d in entry_degs):
        trail.append(
            CriterionCheck(
                "presentation entries below the generation degree",
                "pass",
                f"all entry degrees < {a}",
            )
        )
        return LiftDecision(
            Verdict.NOT_WEAKLY_LIFTABLE, None, tuple(trail), (), artifacts
        )
    trail.append(
        CriterionCheck(
            "presentation entries below the generation degree",
            "fail",
            "some entry reaches the generation degree, or no relations",
        )
    )
    return LiftDecision(Verdict.INCONCLUSIVE, None, tuple(trail), (), artifacts)


def certify_lift_cyclic(
    T: RingContext, f: Polynomial, I: IdealHandle, L: IdealHandle
) -> LiftDecision:
    """Certify a proposed lift: T/L lifts T/I over T/(f) exactly when
    L + (f) = I and f is a nonzerodivisor on T/L.  A certified lift is in
    particular weakly liftable."""
    trail: list[CriterionCheck] = []
    warnings = _base_warnings(T)
    total = ideal_sum(L, ideal(T, (f,)))
    if not equal_ideals(total, I):
        trail.append(CriterionCheck("L + (f) = I", "fail"))
        return LiftDecision(Verdict.INCONCLUSIVE, None, tuple(trail), warnings)
    trail.append(CriterionCheck("L + (f) = I", "pass"))
    if f.is_zero or not is_nonzerodivisor(f, L):
        trail.append(CriterionCheck("f nonzerodivisor on T/L", "fail"))
        return LiftDecision(Verdict.INCONCLUSIVE, None, tuple(trail), warnings)
    trail.append(CriterionCheck("f nonzerodivisor on T/L", "pass"))
    trail.append(
        CriterionCheck(
            "lift implies weak lift",
            "info",
            "a certified lift is weakly liftable by definition",
        )
    )
    return LiftDecision(
        Verdict.LIFT_CERTIFIED,
        L,
        tuple(trail),
        warnings,
        (("lift_ideal", ", ".join(str(g) for g in L.generators)),),
    )


@dataclass(frozen=True)
class BettiReport:
    """Betti numbers of T/I over the base ring T and over R = T/(f), with
    the consequence checks a weak lift imposes on them."""

    betti_ambient: BettiTable
    betti_quotient: BettiTable
    additivity_holds: Optional[bool]
    additivity_range: int
    shamash_applies: bool
    shamash_holds: Optional[bool]
    poincare_checked: bool
    poincare_divisible: Optional[bool]
    warnings: tuple[str, ...] = ()


def _betti_at(table: BettiTable, i: int) -> Optional[int]:
    if i < 0:
        return 0
    if i < len(table.numbers):
        return table.numbers[i]
    return 0 if table.complete else None


def betti_relations(
    T: RingContext, f: Polynomial, I: IdealHandle, truncation: int
) -> BettiReport:
    """Betti-number consequences of weak liftability for T/I over T/(f).

    Computes b over T and over R = T/(f) to the truncation and reports:
    whether b^T_i = b^R_i + b^R_{i-1} (a consequence of a weak lift);
    whether b^R_i = b^T_i + b^R_{i-2} (the hypersurface standard-resolution
    relation, applicable when f lies in m*I); and, when the T-resolution is
    finite and dim T/I < dim R, whether (1+t)^2 divides the T-side Poincare
    polynomial.
    """
    if truncation < 2:
        raise PreconditionError("betti comparison needs truncation at least 2")
    trail_warnings = _base_warnings(T)
    member, _ = ideal_member(f, I)
    if not member:
        raise PreconditionError("f does not lie in the ideal")
    allow = not T.graded
    gens_T = [VectorPoly(T, (g,)) for g in I.generators if not g.is_zero]
    bT = betti_numbers(gens_T, truncation, allow_inhomogeneous=allow)
    R = T.quotient(f)
    gens_R_polys = []
    for g in I.generators:
        h = R.from_dict({m: c for c, m in g.terms})
        if not h.is_zero:
            gens_R_polys.append(h)
    gens_R = [VectorPoly(R, (g,)) for g in gens_R_polys]
    allow_R = not R.graded
    bR = betti_numbers(gens_R, truncation, allow_inhomogeneous=allow_R)

    additivity: Optional[bool] = True
    add_range = 0
    for i in range(truncation):
        t_i = _betti_at(bT, i)
        r_i = _betti_at(bR, i)
        r_im1 = _betti_at(bR, i - 1)
        if t_i is None or r_i is None or r_im1 is None:
            break
        if t_i != r_i + r_im1:
            additivity = False
            add_range = i + 1
            break
        add_range = i + 1
    if add_range == 0:
        additivity = None

    shamash_applies = ideal_member(f, ideal_product(maximal_ideal(T), I))[0]
    shamash: Optional[bool] = None
    if shamash_applies:
        shamash = True
        for i in range(truncation + 1):
            r_i = _betti_at(bR, i)
            t_i = _betti_at(bT, i)
            r_im2 = _betti_at(bR, i - 2)
            if r_i is None or t_i is None or r_im2 is None:
                break
            if r_i != t_i + r_im2:
                shamash = False
                break

    poincare_checked = False
    poincare: Optional[bool] = None
    if bT.complete:
        dim_M = dimension(ideal(T, tuple(g for g in I.generators if not g.is_zero)))
        dim_R = dimension(ideal(T, (f,)))
        if dim_M < dim_R:
            poincare_checked = True
            coeffs = bT.numbers
            at_m1 = sum(c * (-1) ** i for i, c in enumerate(coeffs))
            deriv_at_m1 = sum(
                i * c * (-1) ** (i - 1) for i, c in enumerate(coeffs) if i >= 1
            )
            poincare = at_m1 == 0 and deriv_at_m1 == 0
    return BettiReport(
        betti_ambient=bT,
        betti_quotient=bR,
        additivity_holds=additivity,
        additivity_range=add_range,
        shamash_applies=shamash_applies,
        shamash_holds=shamash,
        poincare_checked=poincare_checked,
        poincare_divisible=poincare,
        warnings=trail_warnings,
    )


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def group_ring_weaklift(p: int, i: int) -> LiftDecision:
    """Weak-liftability of S_i = D[X]/(p, (X-1)^i) over the group algebra
    of the cyclic group of odd prime order p, reduced to polynomial
    arithmetic in F_p[Y]/(Y^p) with Y the shifted group generator.

    The reduction element gbar(Y) has coefficients C(p, j)/p mod p for
    j = 1 .. p-1.  S_i is weakly liftable exactly when i is 1 or p, or
    gbar lies in (Y^(p-i)) + (Y^i).
    """
    if not _is_prime(p) or p == 2:
        raise PreconditionError("p must be an odd prime")
    if not 1 <= i <= p:
        raise PreconditionError(f"index i must satisfy 1 <= i <= {p}")
    trail: list[CriterionCheck] = []
    coeffs = [(math.comb(p, j) // p) % p for j in range(1, p)]
    artifacts = (
        ("reduced_binomial_coefficients", str(tuple(coeffs))),
        ("modulus", f"Y^{p} over F_{p}"),
    )
    if i in (1, p):
        trail.append(
            CriterionCheck(
                "boundary index",
                "pass",
                f"i = {i}: the module is the full ring or the residue ring, "
                "both lift",
            )
        )
        return LiftDecision(
            Verdict.WEAKLY_LIFTABLE, None, tuple(trail), (), artifacts
        )
    base = RingContext.create(("Y",), GF(p), (1,), graded=False)
    Y = base.var("Y")
    ring = base.quotient(Y**p)
    Yq = ring.var("Y")
    gbar = ring.zero
    for j, c in enumerate(coeffs, start=1):
        if c:
            gbar = gbar + ring.const(c) * Yq**j
    target = ideal(ring, (Yq ** (p - i), Yq**i))
    member, cert = ideal_member(gbar, target, want_certificate=True)
    trail.append(
        CriterionCheck(
            "gbar in (Y^(p-i)) + (Y^i)",
            "pass" if member else "fail",
            f"gbar = {gbar}",
        )
    )
    if member:
        return LiftDecision(
            Verdict.WEAKLY_LIFTABLE, cert, tuple(trail), (), artifacts
        )
    return LiftDecision(
        Verdict.NOT_WEAKLY_LIFTABLE,
        Witness(gbar, "gbar in (Y^(p-i)) + (Y^i)"),
        tuple(trail),
        (),
        artifacts,
    )
