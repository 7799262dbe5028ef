"""Lifting criteria: complete decisions, necessary-condition suites,
lift certification, degree obstruction, the group-algebra family, and
the cross-criterion consistency properties."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liftcheck.domains import GF, QQ
from liftcheck.errors import NotApplicable, PreconditionError
from liftcheck.ideals import ideal, ideal_sum, zero_ideal
from liftcheck.liftcrit import (
    Verdict,
    Witness,
    betti_relations,
    certify_lift_cyclic,
    graded_obstruction,
    group_ring_weaklift,
    obstruction_suite,
    weaklift_cyclic,
    weaklift_gor0,
)
from liftcheck.poly import RingContext

from .oracles import random_homogeneous

RQ2 = RingContext.create(("x", "y"), QQ, (1, 1))
RQ3 = RingContext.create(("x", "y", "z"), QQ, (1, 1, 1))


def _I(ring, *texts):
    return ideal(ring, [ring.parse(t) for t in texts])


# -- complete criteria -------------------------------------------------------


def test_cyclic_regular_sequence_lifts():
    dec = weaklift_cyclic(RQ3, RQ3.parse("z"), _I(RQ3, "z", "x", "y"))
    assert dec.verdict is Verdict.WEAKLY_LIFTABLE
    assert dec.certificate is not None
    cert = certify_lift_cyclic(RQ3, RQ3.parse("z"), _I(RQ3, "z", "x", "y"), _I(RQ3, "x", "y"))
    assert cert.verdict is Verdict.LIFT_CERTIFIED


def test_cyclic_squared_maximal_ideal_does_not_lift():
    dec = weaklift_cyclic(RQ2, RQ2.parse("x^2 + y^2"), _I(RQ2, "x^2", "x*y", "y^2"))
    assert dec.verdict is Verdict.NOT_WEAKLY_LIFTABLE


def test_cyclic_preconditions():
    with pytest.raises(PreconditionError):
        weaklift_cyclic(RQ2, RQ2.parse("x"), _I(RQ2, "y"))  # f not in I
    with pytest.raises(PreconditionError):
        weaklift_cyclic(RQ2, RQ2.zero, _I(RQ2, "x"))


def test_gor0_pinned_pair():
    I = _I(RQ2, "x^2", "y^2")
    wl = weaklift_gor0(RQ2, RQ2.parse("x^2 + y^2"), I)
    assert wl.verdict is Verdict.WEAKLY_LIFTABLE
    nwl = weaklift_gor0(RQ2, RQ2.parse("x^4 + y^4"), I)
    assert nwl.verdict is Verdict.NOT_WEAKLY_LIFTABLE


def test_gor0_guards():
    with pytest.raises(PreconditionError, match="weaklift_cyclic"):
        weaklift_gor0(RQ2, RQ2.parse("x^2"), _I(RQ2, "x^2"))
    with pytest.raises(PreconditionError):
        # socle dimension 2: not Gorenstein
        weaklift_gor0(RQ2, RQ2.parse("x^2"), _I(RQ2, "x^2", "x*y", "y^2"))


def test_cm1_wrong_dimension_guard():
    from liftcheck.liftcrit import weaklift_cm1

    with pytest.raises(PreconditionError, match="weaklift_gor0"):
        weaklift_cm1(
            RQ2,
            RQ2.parse("x^2"),
            _I(RQ2, "x^2", "y^2"),
            _I(RQ2, "x^2", "y^2"),
            RQ2.parse("x"),
        )


@settings(max_examples=8)
@given(st.integers(min_value=0, max_value=10**6))
def test_gor0_cyclic_agreement_random(seed):
    from .oracles import random_homogeneous_member

    rng = random.Random(seed)
    a, b = rng.randint(1, 3), rng.randint(1, 3)
    ring = rng.choice([RQ2, RingContext.create(("x", "y"), GF(5), (1, 1))])
    I = ideal(ring, [ring.from_dict({(a, 0): 1}), ring.from_dict({(0, b): 1})])
    f = random_homogeneous_member(rng, ring, I.generators, rng.randint(0, 2))
    d1 = weaklift_gor0(ring, f, I)
    d2 = weaklift_cyclic(ring, f, I)
    assert d1.verdict == d2.verdict


# -- necessary conditions ----------------------------------------------------


def test_suite_principal_ideal_inconclusive():
    I = _I(RQ2, "x^2")
    dec = obstruction_suite(RQ2, RQ2.parse("x^2"), I, (_I(RQ2, "x", "y"),))
    assert dec.verdict is Verdict.INCONCLUSIVE


def test_suite_consistent_with_weakly_liftable():
    rng = random.Random(31)
    T, f, I = RQ2, RQ2.parse("x^2 + y^2"), _I(RQ2, "x^2", "y^2")
    assert weaklift_cyclic(T, f, I).verdict is Verdict.WEAKLY_LIFTABLE
    Js = []
    for _ in range(5):
        Js.append(
            ideal(
                T,
                [
                    random_homogeneous(rng, T, rng.randint(1, 2), 2)
                    for _ in range(rng.randint(1, 2))
                ],
            )
        )
    dec = obstruction_suite(T, f, I, Js)
    assert dec.verdict is Verdict.INCONCLUSIVE


def test_suite_obstruction_carries_witness():
    # four-variable instance where a sample ideal trips the colon test:
    # the witness must name the failed inclusion and an element outside I + J
    T = RingContext.create(("x1", "x2", "x3", "x4"), QQ, (1, 1, 1, 1))
    f = T.parse("x1*x2 - x3^2")
    I = ideal(
        T,
        [
            f,
            T.parse("-x2*x3 + x2*x4"),
            T.parse("x1*x3 + x2*x3"),
            T.parse("-x2^2 - x3*x4"),
            T.parse("x1^2 - x2^2 + x3^2 - x4^2"),
        ],
    )
    J = ideal(T, [T.parse("x1"), T.parse("x3"), T.parse("x4"), T.parse("x2^2")])
    dec = obstruction_suite(T, f, I, (J,))
    assert dec.verdict is Verdict.OBSTRUCTION_FOUND
    assert isinstance(dec.certificate, Witness)
    w = dec.certificate
    assert str(w.element) == "x2"
    assert w.failed_inclusion == "(J*I : f) in I + J for J[0]"
    from liftcheck.ideals import contains, colon, ideal_product, ideal_sum

    assert contains(colon(ideal_product(J, I), f), w.element)
    assert not contains(ideal_sum(I, J), w.element)


# -- degree obstruction ------------------------------------------------------


def test_graded_obstruction_squared_and_cubed():
    dec = graded_obstruction(RQ2, RQ2.parse("x^2 + y^2"), _I(RQ2, "x^2", "x*y", "y^2"))
    assert dec.verdict is Verdict.NOT_WEAKLY_LIFTABLE
    m3 = _I(RQ2, "x^3", "x^2*y", "x*y^2", "y^3")
    dec3 = graded_obstruction(RQ2, RQ2.parse("x^3 + y^3"), m3)
    assert dec3.verdict is Verdict.NOT_WEAKLY_LIFTABLE
    # agreement with the complete criterion
    assert weaklift_cyclic(RQ2, RQ2.parse("x^3 + y^3"), m3).verdict is Verdict.NOT_WEAKLY_LIFTABLE


def test_graded_obstruction_not_applicable_on_principal():
    with pytest.raises(NotApplicable):
        graded_obstruction(RQ2, RQ2.parse("x^2"), _I(RQ2, "x^2"))


def test_graded_obstruction_mixed_degrees_not_applicable():
    with pytest.raises(NotApplicable):
        graded_obstruction(RQ2, RQ2.parse("x^2"), _I(RQ2, "x^2", "y^3"))


# -- certification -----------------------------------------------------------


def test_certify_failure_names_clause():
    I = _I(RQ2, "x^2", "y^2")
    dec = certify_lift_cyclic(RQ2, RQ2.parse("x^2 + y^2"), I, I)
    assert dec.verdict is Verdict.INCONCLUSIVE
    assert any(c.outcome == "fail" for c in dec.trail)


def test_certify_wrong_sum_is_inconclusive():
    dec = certify_lift_cyclic(RQ3, RQ3.parse("z"), _I(RQ3, "z", "x", "y"), _I(RQ3, "x"))
    assert dec.verdict is Verdict.INCONCLUSIVE


def test_certified_implies_weakly_liftable():
    cases = [
        (RQ3, "z", ("z", "x", "y"), ("x", "y")),
        (RQ3, "z", ("z", "x^2", "x*y", "y^2"), ("x^2", "x*y", "y^2")),
        (RQ2, "x^2", ("x^2", "y^2"), ("y^2",)),
    ]
    for ring, f, igens, lgens in cases:
        dec = certify_lift_cyclic(ring, ring.parse(f), _I(ring, *igens), _I(ring, *lgens))
        assert dec.verdict is Verdict.LIFT_CERTIFIED
        assert weaklift_cyclic(ring, ring.parse(f), _I(ring, *igens)).verdict is Verdict.WEAKLY_LIFTABLE


# -- group algebra family ----------------------------------------------------


def test_group_ring_endpoints_always_lift():
    for p in (3, 5, 7, 11):
        for i in (1, p - 1, p):
            assert group_ring_weaklift(p, i).verdict is Verdict.WEAKLY_LIFTABLE


def test_group_ring_interior_never_lifts():
    for p in (5, 7, 11):
        for i in range(2, p - 1):
            assert group_ring_weaklift(p, i).verdict is Verdict.NOT_WEAKLY_LIFTABLE


def test_group_ring_guards():
    with pytest.raises(PreconditionError):
        group_ring_weaklift(4, 1)
    with pytest.raises(PreconditionError):
        group_ring_weaklift(2, 1)
    with pytest.raises(PreconditionError):
        group_ring_weaklift(5, 6)


def test_group_ring_p5_coefficients():
    dec = group_ring_weaklift(5, 2)
    arts = dict(dec.artifacts)
    assert "reduced_binomial_coefficients" in arts
    assert arts["reduced_binomial_coefficients"] == "(1, 2, 2, 1)"


# -- betti relations ---------------------------------------------------------


def test_betti_relations_truncation_guard():
    I = _I(RQ3, "z", "x^2")
    with pytest.raises(PreconditionError):
        betti_relations(RQ3, RQ3.parse("z"), I, 1)


def test_betti_relations_requires_f_in_ideal():
    with pytest.raises(PreconditionError):
        betti_relations(RQ3, RQ3.parse("x"), _I(RQ3, "y"), 4)


def test_finite_pd_colon_lands_in_radical():
    # four-variable hypersurface fixture with finite projective dimension:
    # (J*I : f) must land in rad(I + J) for random homogeneous J
    T = RingContext.create(("x1", "x2", "x3", "x4"), QQ, (1,) * 4)
    P = T.parse
    f = P("x1*x2 - x3^2")
    I = ideal(
        T,
        [f, P("-x2*x3 + x2*x4"), P("x1*x3 + x2*x3"),
         P("-x2^2 - x3*x4"), P("x1^2 - x2^2 + x3^2 - x4^2")],
    )
    from liftcheck.ideals import colon, ideal_product, radical_member

    rng = random.Random(37)
    for _ in range(3):
        J = ideal(
            T,
            [random_homogeneous(rng, T, rng.randint(1, 2), 2) for _ in range(2)],
        )
        Q = colon(ideal_product(J, I), f)
        S = ideal_sum(I, J)
        for g in Q.generators:
            assert radical_member(g, S)


def test_decision_trail_is_populated():
    dec = weaklift_cyclic(RQ2, RQ2.parse("x^2 + y^2"), _I(RQ2, "x^2", "y^2"))
    assert dec.trail
    assert dec.trail[0].name
    assert all(c.outcome in ("pass", "fail", "info") for c in dec.trail)
