"""Ideal calculus: colon, intersection, saturation, radical membership,
socle extraction, nonzerodivisor tests, witness-based symbolic squares."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liftcheck.domains import GF, QQ
from liftcheck.errors import PreconditionError
from liftcheck.ideals import (
    canonical_generators,
    colon,
    contains,
    dimension,
    equal_ideals,
    ideal,
    ideal_member,
    ideal_power,
    ideal_product,
    ideal_sum,
    intersect,
    is_nonzerodivisor,
    radical_member,
    saturate,
    socle_data,
    symbolic_square,
    zero_ideal,
)
from liftcheck.poly import RingContext

from .oracles import monomial_radical_member, random_homogeneous

RQ2 = RingContext.create(("x", "y"), QQ, (1, 1))
RQ3 = RingContext.create(("x", "y", "z"), QQ, (1, 1, 1))
R5 = RingContext.create(("x", "y", "z"), GF(5), (1, 1, 1))


def _rand_ideal(rng, ring, ngens, maxdeg=3):
    return ideal(
        ring,
        [
            random_homogeneous(rng, ring, rng.randint(1, maxdeg), rng.randint(1, 4))
            for _ in range(ngens)
        ],
    )


# -- colon ------------------------------------------------------------------


def test_colon_pinned_values():
    I = ideal(RQ2, [RQ2.parse("x^2"), RQ2.parse("x*y")])
    assert equal_ideals(colon(I, RQ2.parse("x")), ideal(RQ2, [RQ2.parse("x"), RQ2.parse("y")]))
    assert equal_ideals(colon(I, RQ2.parse("1")), I)
    sq = ideal(RQ2, [RQ2.parse("x^4"), RQ2.parse("x^2*y^2"), RQ2.parse("y^4")])
    expected = ideal(RQ2, [RQ2.parse("x^3"), RQ2.parse("x*y"), RQ2.parse("y^3")])
    assert equal_ideals(colon(sq, RQ2.parse("x*y")), expected)


@settings(max_examples=15)
@given(st.integers(min_value=0, max_value=10**6))
def test_colon_correctness_random(seed):
    rng = random.Random(seed)
    ring = rng.choice([RQ2, RQ3, R5])
    I = _rand_ideal(rng, ring, rng.randint(1, 3))
    d = random_homogeneous(rng, ring, rng.randint(1, 2), 2)
    Q = colon(I, d)
    # (I : d) * d lies in I, witnessed by replayable certificates
    for q in Q.generators:
        member, cert = ideal_member(q * d, I, want_certificate=True)
        assert member and cert.verify()
    # random elements of the colon stay in the colon
    for _ in range(5):
        combo = ring.zero
        for q in Q.generators:
            combo = combo + random_homogeneous(rng, ring, 1, 2) * q
        if not combo.is_zero:
            assert contains(I, combo * d)
    # I itself is always inside the colon
    for g in I.generators:
        assert contains(Q, g)


def test_colon_by_ideal():
    I = ideal(RQ2, [RQ2.parse("x^2"), RQ2.parse("x*y")])
    D = ideal(RQ2, [RQ2.parse("x"), RQ2.parse("y")])
    Q = colon(I, D)
    for q in Q.generators:
        for d in D.generators:
            assert contains(I, q * d)


# -- sum / product / power / intersect --------------------------------------


def test_power_product_pinned():
    I = ideal(RQ2, [RQ2.parse("x^2"), RQ2.parse("y^2")])
    sq = ideal_power(I, 2)
    assert equal_ideals(
        sq, ideal(RQ2, [RQ2.parse("x^4"), RQ2.parse("x^2*y^2"), RQ2.parse("y^4")])
    )
    P = ideal_product(ideal(RQ2, [RQ2.parse("x")]), ideal(RQ2, [RQ2.parse("y")]))
    assert equal_ideals(P, ideal(RQ2, [RQ2.parse("x*y")]))
    with pytest.raises(PreconditionError):
        ideal_power(I, 0)


def test_intersect_pinned():
    A = ideal(RQ2, [RQ2.parse("x")])
    B = ideal(RQ2, [RQ2.parse("y")])
    assert equal_ideals(intersect(A, B), ideal(RQ2, [RQ2.parse("x*y")]))
    I = ideal(RQ2, [RQ2.parse("x^2"), RQ2.parse("x*y")])
    assert equal_ideals(intersect(I, I), I)
    J = intersect(ideal(RQ2, [RQ2.parse("x^2"), RQ2.parse("x*y")]), ideal(RQ2, [RQ2.parse("y")]))
    assert contains(J, RQ2.parse("x*y"))
    assert contains(J, RQ2.parse("x^2*y"))


@settings(max_examples=15)
@given(st.integers(min_value=0, max_value=10**6))
def test_lattice_containments_random(seed):
    rng = random.Random(seed)
    ring = rng.choice([RQ2, RQ3, R5])
    I = _rand_ideal(rng, ring, 2)
    J = _rand_ideal(rng, ring, 2)
    M = intersect(I, J)
    S = ideal_sum(I, J)
    P = ideal_product(I, J)
    for g in M.generators:
        assert contains(I, g) and contains(J, g)
    for g in I.generators + J.generators:
        assert contains(S, g)
    for g in P.generators:
        assert contains(M, g)


# -- saturation -------------------------------------------------------------


def test_saturate_pinned_and_fixed_point():
    R = RingContext.create(("x", "t"), QQ, (1, 1))
    I = ideal(R, [R.parse("x*t"), R.parse("t^2")])
    S, steps = saturate(I, R.parse("t"))
    assert steps >= 1
    assert equal_ideals(colon(S, R.parse("t")), S)
    assert contains(S, R.parse("x")) or contains(S, R.parse("t"))
    I2 = ideal(RQ2, [RQ2.parse("x^2")])
    S2, steps2 = saturate(I2, RQ2.parse("1"))
    assert steps2 == 0 or equal_ideals(S2, I2)
    assert equal_ideals(S2, I2)


# -- radical membership -----------------------------------------------------


def test_radical_member_pinned():
    I = ideal(RQ2, [RQ2.parse("x^2")])
    assert radical_member(RQ2.parse("x"), I)
    assert not radical_member(RQ2.parse("y"), I)


@settings(max_examples=15)
@given(st.integers(min_value=0, max_value=10**6))
def test_radical_member_vs_power_direction(seed):
    rng = random.Random(seed)
    ring = rng.choice([RQ2, R5])
    I = _rand_ideal(rng, ring, 2)
    g = random_homogeneous(rng, ring, rng.randint(1, 2), 2)
    rad = radical_member(g, I)
    powers = [contains(I, g**k) for k in range(1, 9)]
    if any(powers):
        assert rad
    if not rad:
        assert not any(powers)


@settings(max_examples=15)
@given(st.integers(min_value=0, max_value=10**6))
def test_radical_member_monomial_oracle(seed):
    rng = random.Random(seed)
    ring = RQ3
    gens = []
    for _ in range(rng.randint(1, 3)):
        m = tuple(rng.randint(0, 2) for _ in range(3))
        if any(m):
            gens.append(ring.from_dict({m: 1}))
    if not gens:
        gens = [ring.parse("x")]
    I = ideal(ring, gens)
    mq = tuple(rng.randint(0, 2) for _ in range(3))
    if not any(mq):
        return
    q = ring.from_dict({mq: 1})
    expected = monomial_radical_member(mq, [g.terms[0][1] for g in gens])
    assert radical_member(q, I) == expected


# -- socle ------------------------------------------------------------------


def test_socle_complete_intersection_family():
    for a in range(1, 5):
        for b in range(1, 5):
            I = ideal(RQ2, [RQ2.parse(f"x^{a}"), RQ2.parse(f"y^{b}")])
            sd = socle_data(I)
            assert sd.zero_dimensional
            assert sd.quotient_dim == a * b
            assert sd.gorenstein
            expected = RQ2.from_dict({(a - 1, b - 1): 1})
            assert sd.u == expected


def test_socle_non_gorenstein():
    I = ideal(RQ2, [RQ2.parse("x^2"), RQ2.parse("x*y"), RQ2.parse("y^2")])
    sd = socle_data(I)
    assert sd.zero_dimensional and not sd.gorenstein
    assert sorted(str(b) for b in sd.socle_basis) == ["x", "y"]
    assert sd.u is None


def test_socle_of_maximal_ideal():
    I = ideal(RQ2, [RQ2.parse("x"), RQ2.parse("y")])
    sd = socle_data(I)
    assert sd.gorenstein and str(sd.u) == "1"


def test_socle_positive_dimension_flagged():
    I = ideal(RQ2, [RQ2.parse("x")])
    sd = socle_data(I)
    assert not sd.zero_dimensional
    assert sd.socle_basis == ()


def test_socle_basis_annihilated_by_variables():
    I = ideal(RQ3, [RQ3.parse("x^2"), RQ3.parse("y^2"), RQ3.parse("z^2"), RQ3.parse("x*y")])
    sd = socle_data(I)
    assert sd.zero_dimensional
    for b in sd.socle_basis:
        assert not contains(I, b)
        for v in RQ3.gens():
            assert contains(I, v * b)


# -- dimension and nonzerodivisors ------------------------------------------


def test_dimension_pinned():
    assert dimension(ideal(RQ2, [RQ2.parse("x"), RQ2.parse("y")])) == 0
    assert dimension(ideal(RQ2, [RQ2.parse("x")])) == 1
    assert dimension(zero_ideal(RQ2)) == 2
    assert dimension(ideal(RQ3, [RQ3.parse("x^2"), RQ3.parse("y^2")])) == 1


def test_is_nonzerodivisor():
    assert is_nonzerodivisor(RQ2.parse("x"), ideal(RQ2, [RQ2.parse("y")]))
    assert not is_nonzerodivisor(RQ2.parse("x"), ideal(RQ2, [RQ2.parse("x^2")]))
    assert not is_nonzerodivisor(RQ2.zero, ideal(RQ2, [RQ2.parse("y")]))


def test_linear_forms_regular_on_quadric():
    rng = random.Random(23)
    quad = ideal(R5, [R5.parse("x^2 + y^2 + z^2")])
    for _ in range(6):
        coeffs = [rng.randrange(5) for _ in range(3)]
        if not any(coeffs):
            continue
        f = R5.from_dict({(1, 0, 0): coeffs[0], (0, 1, 0): coeffs[1], (0, 0, 1): coeffs[2]})
        assert is_nonzerodivisor(f, quad)


# -- symbolic square --------------------------------------------------------


def test_symbolic_square_trivial_cases():
    I = ideal(RQ3, [RQ3.parse("x"), RQ3.parse("y")])
    out = symbolic_square(I, RQ3.parse("z"))
    assert equal_ideals(out, ideal_power(I, 2))
    P = ideal(RQ2, [RQ2.parse("x")])
    out2 = symbolic_square(P, RQ2.parse("y"))
    assert equal_ideals(out2, ideal(RQ2, [RQ2.parse("x^2")]))


def test_symbolic_square_fixed_point_and_precondition():
    I = ideal(RQ3, [RQ3.parse("x*y"), RQ3.parse("x*z"), RQ3.parse("y*z")])
    w = RQ3.parse("x + y + z")
    out = symbolic_square(I, w)
    assert equal_ideals(colon(out, w), out)
    # x*y*z separates the symbolic square from the ordinary square
    assert contains(out, RQ3.parse("x*y*z"))
    assert not contains(ideal_power(I, 2), RQ3.parse("x*y*z"))
    with pytest.raises(PreconditionError):
        symbolic_square(ideal(RQ2, [RQ2.parse("x^2")]), RQ2.parse("x"))


# -- presentation independence ----------------------------------------------


def test_semantic_equality_ignores_presentation():
    I = ideal(RQ2, [RQ2.parse("x"), RQ2.parse("y"), RQ2.parse("x + y")])
    J = ideal(RQ2, [RQ2.parse("x + y"), RQ2.parse("x - y")])
    assert equal_ideals(I, J)
    ci = canonical_generators(I)
    cj = canonical_generators(J)
    assert [str(g) for g in ci.generators] == [str(g) for g in cj.generators]


# -- the colon-radical property suite ---------------------------------------


@settings(max_examples=10)
@given(st.integers(min_value=0, max_value=10**6))
def test_colon_lands_in_radical_of_sum(seed):
    rng = random.Random(seed)
    I = _rand_ideal(rng, RQ3, 2)
    J = _rand_ideal(rng, RQ3, 2)
    f = random_homogeneous(rng, RQ3, 1, 3)
    if not is_nonzerodivisor(f, zero_ideal(RQ3)):
        return
    Q = colon(ideal_product(I, J), f)
    S = ideal_sum(I, J)
    for g in Q.generators:
        assert radical_member(g, S)
