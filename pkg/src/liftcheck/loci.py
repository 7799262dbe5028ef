"""Locus enumeration over small prime fields.

For a frame of ideal generators (f_1, ..., f_n) every coefficient vector
a in F_q^n names the element f = sum(a_i f_i).  A point is in the locus
when the chosen property FAILS for T/I over T/(f): property "nwl" marks
the vectors whose quotient is not weakly liftable, "npd" those with
infinite projective dimension, "obstruction-fail" those where the
necessary-condition sweep finds a violation.  The zero vector is in every
locus by convention, and vectors giving a zerodivisor are excluded from
both sides and reported separately.

Classification is memoized per scalar class (f and c*f generate the same
principal ideal, so they share a verdict) but every point is reported
individually, in lexicographic order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .domains import PrimeField
from .errors import PreconditionError, RingMismatch
from .ideals import (
    IdealHandle,
    colon,
    ideal,
    ideal_power,
    ideal_product,
    ideal_sum,
    is_nonzerodivisor,
    socle_data,
    symbolic_square,
    zero_ideal,
)
from .liftcrit import Verdict, obstruction_suite, weaklift_cyclic
from .modules import VectorPoly
from .poly import Polynomial, RingContext
from .resolutions import pd_decide

MAX_PRIME = 7
MAX_FRAME = 8
MAX_POINTS = 10**6

IN_LOCUS = "in-locus"
NOT_IN_LOCUS = "not-in-locus"
SKIPPED = "zerodivisor-skipped"

PROPERTIES = ("nwl", "npd", "obstruction-fail")


@dataclass(frozen=True)
class LocusResult:
    q: int
    frame: tuple[Polynomial, ...]
    prop: str
    points: tuple[tuple[tuple[int, ...], str], ...]
    additive_closed: bool
    scalar_closed: bool

    def classification(self) -> dict:
        return {vec: cls for vec, cls in self.points}

    def in_locus(self) -> tuple[tuple[int, ...], ...]:
        return tuple(vec for vec, cls in self.points if cls == IN_LOCUS)

    def skipped(self) -> tuple[tuple[int, ...], ...]:
        return tuple(vec for vec, cls in self.points if cls == SKIPPED)


def _normalize_class(vec: tuple[int, ...], p: int) -> tuple[int, ...]:
    """Scalar-class representative: first nonzero coordinate scaled to 1."""
    for c in vec:
        if c:
            inv = pow(c, p - 2, p)
            return tuple((inv * x) % p for x in vec)
    return vec


def _classify(
    T: RingContext,
    I: IdealHandle,
    f: Polynomial,
    prop: str,
) -> str:
    if not is_nonzerodivisor(f, zero_ideal(T)):
        return SKIPPED
    if prop == "nwl":
        verdict = weaklift_cyclic(T, f, I).verdict
        return IN_LOCUS if verdict is Verdict.NOT_WEAKLY_LIFTABLE else NOT_IN_LOCUS
    if prop == "npd":
        R = T.quotient(f, check_nzd=False)
        gens = []
        for g in I.generators:
            h = R.from_dict({m: c for c, m in g.terms})
            if not h.is_zero:
                gens.append(VectorPoly(R, (h,)))
        pd = pd_decide(gens, rank=1, allow_inhomogeneous=not R.graded)
        return IN_LOCUS if pd is None else NOT_IN_LOCUS
    if prop == "obstruction-fail":
        verdict = obstruction_suite(T, f, I).verdict
        return IN_LOCUS if verdict is Verdict.OBSTRUCTION_FOUND else NOT_IN_LOCUS
    raise PreconditionError(f"unknown locus property {prop!r}")


def enumerate_locus(
    T: RingContext,
    frame: Sequence[Polynomial],
    q: int,
    prop: str,
) -> LocusResult:
    """Classify every coefficient vector in F_q^n for the generator frame.

    The frame generates the ideal I; each point a gives f = sum(a_i f_i),
    decided by the complete cyclic criterion (nwl), projective dimension
    over T/(f) (npd), or the necessary-condition sweep (obstruction-fail).
    """
    if prop not in PROPERTIES:
        raise PreconditionError(
            f"property must be one of {PROPERTIES}, got {prop!r}"
        )
    dom = T.domain
    if not isinstance(dom, PrimeField):
        raise PreconditionError("locus enumeration needs a prime-field ring")
    if dom.p != q:
        raise RingMismatch(
            f"field size {q} does not match the ring's coefficient field F_{dom.p}"
        )
    if q > MAX_PRIME:
        raise PreconditionError(
            f"field size {q} exceeds the enumeration cap {MAX_PRIME}"
        )
    frame = [f for f in frame]
    n = len(frame)
    if n == 0:
        raise PreconditionError("empty generator frame")
    if n > MAX_FRAME:
        raise PreconditionError(
            f"frame size {n} exceeds the enumeration cap {MAX_FRAME}"
        )
    if q**n > MAX_POINTS:
        raise PreconditionError(
            f"{q}^{n} points exceed the enumeration cap {MAX_POINTS}"
        )
    for f in frame:
        if f.ring != T:
            raise RingMismatch("frame element tagged to a different ring")
    I = ideal(T, tuple(frame))
    cache: dict[tuple[int, ...], str] = {}
    points: list[tuple[tuple[int, ...], str]] = []
    for vec in itertools.product(range(q), repeat=n):
        if all(c == 0 for c in vec):
            points.append((vec, IN_LOCUS))
            continue
        rep = _normalize_class(vec, q)
        if rep not in cache:
            f = T.zero
            for c, g in zip(rep, frame):
                if c:
                    f = f + T.const(c) * g
            if f.is_zero:
                # frame elements can cancel; a zero combination has no
                # hypersurface to quotient by
                cache[rep] = SKIPPED
            else:
                cache[rep] = _classify(T, I, f, prop)
        points.append((vec, cache[rep]))
    result_points = tuple(points)
    additive, scalar = _subspace_flags(result_points, q)
    return LocusResult(q, tuple(frame), prop, result_points, additive, scalar)


def _subspace_flags(
    points: tuple[tuple[tuple[int, ...], str], ...], q: int
) -> tuple[bool, bool]:
    in_set = {vec for vec, cls in points if cls == IN_LOCUS}
    additive = True
    for a in in_set:
        for b in in_set:
            s = tuple((x + y) % q for x, y in zip(a, b))
            if s not in in_set:
                additive = False
                break
        if not additive:
            break
    scalar = True
    for a in in_set:
        for c in range(q):
            s = tuple((c * x) % q for x in a)
            if s not in in_set:
                scalar = False
                break
        if not scalar:
            break
    return additive, scalar


def subspace_check(result: LocusResult) -> tuple[bool, bool]:
    """Recompute the closure flags from the point set alone: is the
    in-locus set closed under vector addition and scalar multiplication?"""
    return _subspace_flags(result.points, result.q)


def locus_formula_nwl(
    T: RingContext,
    I: IdealHandle,
    J: Optional[IdealHandle] = None,
    w: Optional[Polynomial] = None,
) -> IdealHandle:
    """Closed form for the not-weakly-liftable locus inside the ring.

    Zero-dimensional Gorenstein case: I^2 : u with u the socle generator.
    One-dimensional case with a caller-supplied canonical representative J
    and saturation witness w: (I*J + I^(2)) : u with u the socle generator
    of I + J (witness-conditional).  The locus of elements of I itself is
    the intersection of this ideal with I.
    """
    if J is None and w is None:
        sd = socle_data(I)
        if not sd.zero_dimensional or not sd.gorenstein:
            raise PreconditionError(
                "closed form needs a zero-dimensional Gorenstein quotient; "
                "supply (J, w) for the one-dimensional case"
            )
        return colon(ideal_power(I, 2), sd.u)
    if J is None or w is None:
        raise PreconditionError(
            "the one-dimensional closed form needs both J and w"
        )
    sd = socle_data(ideal_sum(I, J))
    if not sd.zero_dimensional or not sd.gorenstein:
        raise PreconditionError(
            "closed form needs T/(I+J) zero-dimensional Gorenstein"
        )
    target = ideal_sum(ideal_product(I, J), symbolic_square(I, w))
    return colon(target, sd.u)
