"""Built-in worked-example corpus.

Each fixture replays a classical worked computation end to end and
compares every step against its recorded expected value; a fixture
passes only when every check matches exactly.  The expected values here
were produced by the independent oracles in the test suite (exact
integer expansion, brute-force membership, hand-expanded small cases)
before being frozen.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable

from .domains import GF, QQ, ZZ
from .ideals import (
    canonical_generators,
    contains,
    equal_ideals,
    ideal,
    ideal_power,
    radical_member,
    saturate,
    zero_ideal,
)
from .liftcrit import (
    betti_relations,
    certify_lift_cyclic,
    group_ring_weaklift,
    obstruction_suite,
    weaklift_cm1,
    weaklift_cyclic,
    weaklift_gor0,
)
from .loci import enumerate_locus, locus_formula_nwl, subspace_check
from .modules import VectorPoly, module_member, syzygy_matrix
from .poly import RingContext, verify_identity
from .resolutions import pd_decide


@dataclass(frozen=True)
class Fixture:
    name: str
    reference: str
    runner: Callable[[], list[dict]]


CORPUS: dict[str, Fixture] = {}


def _register(name: str, reference: str):
    def deco(fn):
        CORPUS[name] = Fixture(name, reference, fn)
        return fn

    return deco


def _check(name: str, expected, got) -> dict:
    return {"name": name, "expected": expected, "got": got, "ok": expected == got}


def corpus_names() -> list[str]:
    return list(CORPUS)


def run_fixture(name: str) -> dict:
    if name not in CORPUS:
        raise KeyError(f"unknown corpus fixture {name!r}")
    fx = CORPUS[name]
    checks = fx.runner()
    return {
        "name": fx.name,
        "reference": fx.reference,
        "checks": checks,
        "ok": all(c["ok"] for c in checks),
    }


def run_all() -> list[dict]:
    return [run_fixture(name) for name in CORPUS]


# -- shared pieces ---------------------------------------------------------


_SIX_VARS = ("x", "y", "z", "a", "b", "c")


def _six_var_ring(dom, graded: bool) -> RingContext:
    return RingContext.create(_SIX_VARS, dom, (1,) * 6, graded=graded)


def _six_var_basis(ring: RingContext):
    P = ring.parse
    return (
        P("x^2"), P("y^2"), P("z^2"), P("a^2"), P("b^2"), P("c^2"),
        P("x*a + y*b + z*c"),
    )


def _g_element(ring: RingContext):
    return ring.parse("x*y*a*b + y*z*b*c + z*x*c*a")


# -- fixtures --------------------------------------------------------------


@_register(
    "hochster-grothendieck",
    "Six-variable quadratic obstruction: 2g equals the audited signed "
    "combination of generator products, yet g escapes the mod-2 ideal, so "
    "the colon-of-squares necessary condition fails for the hypersurface "
    "element 2.",
)
def _hochster_grothendieck() -> list[dict]:
    checks = []
    TZ = _six_var_ring(ZZ, graded=False)
    P = TZ.parse
    g = _g_element(TZ)
    lhs = P("2") * g
    base = P("(x*a + y*b + z*c)^2")
    squares = (P("x^2*a^2"), P("y^2*b^2"), P("z^2*c^2"))
    verified = []
    for signs in itertools.product((1, -1), repeat=3):
        rhs = base
        for s, sq in zip(signs, squares):
            rhs = rhs + sq if s == 1 else rhs - sq
        if verify_identity(lhs, rhs):
            verified.append(list(signs))
    checks.append(_check("sign-audit-unique", [[-1, -1, -1]], verified))
    rhs = base - squares[0] - squares[1] - squares[2]
    checks.append(_check("integer-identity", True, verify_identity(lhs, rhs)))

    TQ = _six_var_ring(QQ, graded=True)
    IQ = ideal(TQ, _six_var_basis(TQ))
    checks.append(
        _check(
            "2g-inside-I-squared-over-QQ",
            True,
            contains(ideal_power(IQ, 2), TQ.parse("2") * _g_element(TQ)),
        )
    )
    T2 = _six_var_ring(GF(2), graded=True)
    I2 = ideal(T2, _six_var_basis(T2))
    member = contains(I2, _g_element(T2))
    checks.append(_check("g-outside-ideal-mod-2", False, member))
    checks.append(
        _check(
            "colon-obstruction-violated",
            True,
            verify_identity(lhs, rhs) and not member,
        )
    )
    return checks


@_register(
    "hochster-prime-dim11",
    "Ten-variable mod-2 model of a ramified dimension-11 hypersurface with "
    "a prime cyclic quotient: saturating by t reaches the prime in one colon "
    "step, the printed integer identity balances exactly, and g escapes the "
    "enlarged ideal after reduction to the six-variable basis.",
)
def _hochster_prime_dim11() -> list[dict]:
    checks = []
    names = ("x", "y", "z", "a", "b", "c", "u", "v", "w", "t")
    TZ = RingContext.create(names, ZZ, (1,) * 10, graded=False)
    P = TZ.parse
    lhs = P("2") * P("x*y*a*b + y*z*b*c + z*x*c*a")
    printed = (
        P("(x*a + y*b + z*c)^2")
        + P("(t*u - x^2)*a^2")
        + P("(t*v - y^2)*b^2")
        + P("(t*w - z^2)*c^2")
        - P("t*(u*a^2 + v*b^2 + w*c^2)")
    )
    flipped = printed + P("2") * P("t*(u*a^2 + v*b^2 + w*c^2)")
    checks.append(
        _check(
            "identity-sign-audit",
            [True, False],
            [verify_identity(lhs, printed), verify_identity(lhs, flipped)],
        )
    )

    T10 = RingContext.create(names, GF(2), (1,) * 10, graded=True)
    Q = T10.parse
    I = ideal(
        T10,
        (Q("t*u - x^2"), Q("t*v - y^2"), Q("t*w - z^2"), Q("x*a + y*b + z*c")),
    )
    prime, steps = saturate(I, Q("t"))
    checks.append(_check("saturation-stabilizes-in-one-step", 1, steps))
    checks.append(
        _check(
            "saturation-contains-first",
            True,
            contains(prime, Q("u*a^2 + v*b^2 + w*c^2")),
        )
    )
    checks.append(
        _check(
            "saturation-contains-second",
            True,
            contains(prime, Q("u*a*y*z + v*b*z*x + w*c*x*y")),
        )
    )
    bound = ideal(
        T10,
        (Q("u"), Q("v"), Q("w"), Q("x^2"), Q("y^2"), Q("z^2"),
         Q("x*a + y*b + z*c")),
    )
    checks.append(
        _check(
            "prime-inside-claimed-bound",
            True,
            all(contains(bound, h) for h in canonical_generators(prime).generators),
        )
    )
    enlarged = ideal(
        T10,
        (Q("x^2"), Q("y^2"), Q("z^2"), Q("a^2"), Q("b^2"), Q("c^2"),
         Q("x*a + y*b + z*c"), Q("u"), Q("v"), Q("w"), Q("t")),
    )
    checks.append(
        _check(
            "g-outside-enlarged-ideal",
            False,
            contains(enlarged, Q("x*y*a*b + y*z*b*c + z*x*c*a")),
        )
    )
    T6 = _six_var_ring(GF(2), graded=True)
    checks.append(
        _check(
            "g-outside-six-variable-basis",
            False,
            contains(ideal(T6, _six_var_basis(T6)), _g_element(T6)),
        )
    )
    return checks


@_register(
    "jorgensen",
    "Four-variable cyclic module of finite projective dimension 3 over the "
    "quadric hypersurface that is not weakly liftable: the witness x2 lies "
    "in the colon of the sample ideal times I but outside the sample ideal, "
    "while x2 squared shows it is inside the radical.",
)
def _jorgensen() -> list[dict]:
    checks = []
    T = RingContext.create(("x1", "x2", "x3", "x4"), QQ, (1,) * 4, graded=True)
    P = T.parse
    f = P("x1*x2 - x3^2")
    i1 = P("-x2*x3 + x2*x4")
    i2 = P("x1*x3 + x2*x3")
    i3 = P("-x2^2 - x3*x4")
    i4 = P("x1^2 - x2^2 + x3^2 - x4^2")
    I = ideal(T, (f, i1, i2, i3, i4))
    J = ideal(T, (P("x1"), P("x3"), P("x4"), P("x2^2")))

    combo = P("x2") * f - P("x3") * i1 + P("x4") * i2 + P("x1") * i3
    checks.append(_check("printed-row-realized", True, combo.is_zero))

    dec = weaklift_cyclic(T, f, I)
    checks.append(_check("weaklift-verdict", "NotWeaklyLiftable", dec.verdict.value))

    suite = obstruction_suite(T, f, I, (J,))
    checks.append(_check("suite-verdict", "ObstructionFound", suite.verdict.value))
    wit = suite.certificate
    checks.append(_check("witness-element", "x2", str(wit.element)))
    checks.append(
        _check(
            "witness-inclusion",
            "(J*I : f) in I + J for J[0]",
            wit.failed_inclusion,
        )
    )

    R = T.quotient(f)
    gens = [
        VectorPoly(R, (R.from_dict({m: c for c, m in h.terms}),))
        for h in (i1, i2, i3, i4)
    ]
    checks.append(_check("projective-dimension", 3, pd_decide(gens, rank=1)))
    checks.append(_check("radical-membership", True, radical_member(P("x2"), J)))
    return checks


def _group_ring_reference(p: int) -> str:
    return (
        f"Order-{p} cyclic-group model over F_{p}: the quotient by the i-th "
        "power of the augmentation variable is weakly liftable exactly for "
        f"i in {{1, {p - 1}, {p}}}."
    )


def _group_ring_fixture(p: int) -> list[dict]:
    checks = []
    TZ = RingContext.create(("Y",), ZZ, (1,), graded=False)
    P = TZ.parse
    lhs = P("(1 + Y)^" + str(p)) - P("1") - P("Y^" + str(p))
    coeffs = [math.comb(p, j) // p for j in range(1, p)]
    gt = TZ.zero
    for j, cj in enumerate(coeffs, start=1):
        gt = gt + TZ.const(cj) * P(f"Y^{j}")
    checks.append(
        _check("binomial-identity", True, verify_identity(lhs, TZ.const(p) * gt))
    )
    expected = [
        "WeaklyLiftable" if i in (1, p - 1, p) else "NotWeaklyLiftable"
        for i in range(1, p + 1)
    ]
    got = [group_ring_weaklift(p, i).verdict.value for i in range(1, p + 1)]
    checks.append(_check("verdict-vector", expected, got))
    return checks


@_register("group-ring-p3", _group_ring_reference(3))
def _group_ring_p3() -> list[dict]:
    return _group_ring_fixture(3)


@_register("group-ring-p5", _group_ring_reference(5))
def _group_ring_p5() -> list[dict]:
    return _group_ring_fixture(5)


@_register("group-ring-p7", _group_ring_reference(7))
def _group_ring_p7() -> list[dict]:
    return _group_ring_fixture(7)


@_register(
    "group-ring-presentation",
    "Characteristic-zero model of the order-p group algebra, Y playing the "
    "augmentation and P playing the prime: the printed presentation rows do "
    "not annihilate the generator vector (one printed column does), and the "
    "audited pair (Y^i, -P), (gtilde, Y^(p-i)) both annihilates and spans "
    "the syzygies of (P, Y^i).",
)
def _group_ring_presentation() -> list[dict]:
    checks = []
    for p, i in ((3, 2), (5, 2)):
        base = RingContext.create(("P", "Y"), QQ, (1, 1), graded=False)
        B = base.parse
        coeffs = [math.comb(p, j) // p for j in range(1, p)]
        gt_base = base.zero
        for j, cj in enumerate(coeffs, start=1):
            gt_base = gt_base + base.const(cj) * B(f"Y^{j}")
        rel = B(f"Y^{p}") + B("P") * gt_base
        R = base.with_relations([rel])
        P_ = R.parse
        gt = R.from_dict({m: c for c, m in gt_base.terms})
        Pvar, Y = R.var("P"), R.var("Y")
        v = (Pvar, Y**i)

        def annihilates(vec):
            combo = vec[0] * v[0] + vec[1] * v[1]
            return contains(zero_ideal(R), combo)

        printed_r = (Y**p, gt)
        printed_r1 = (-Pvar, Y ** (p - i))
        printed_c1 = (Y**p, -Pvar)
        printed_c2 = (gt, Y ** (p - i))
        audited_koszul = (Y**i, -Pvar)
        audited_second = (gt, Y ** (p - i))
        tag = f"p{p}"
        checks.append(_check(f"{tag}-printed-row-1", False, annihilates(printed_r)))
        checks.append(_check(f"{tag}-printed-row-2", False, annihilates(printed_r1)))
        checks.append(_check(f"{tag}-printed-col-1", False, annihilates(printed_c1)))
        checks.append(_check(f"{tag}-printed-col-2", True, annihilates(printed_c2)))
        checks.append(
            _check(f"{tag}-audited-koszul", True, annihilates(audited_koszul))
        )
        checks.append(
            _check(f"{tag}-audited-second", True, annihilates(audited_second))
        )

        syz = syzygy_matrix([v[0], v[1]])
        rows = [syz.row(k) for k in range(syz.nrows)]
        pair = [
            VectorPoly(R, audited_koszul),
            VectorPoly(R, audited_second),
        ]
        in_span = all(module_member(r, pair)[0] for r in rows)
        covers = all(module_member(s, rows)[0] for s in pair)
        checks.append(_check(f"{tag}-audited-pair-spans-syzygies", True, in_span))
        checks.append(_check(f"{tag}-syzygies-cover-audited-pair", True, covers))
    return checks


@_register(
    "quadric-locus",
    "Maximal-ideal frame on the rank-3 quadric over F_5: every nonzero "
    "linear form gives a weakly liftable quotient, the enumerated locus is "
    "the origin alone, and the closed-form locus is the squared maximal "
    "ideal.",
)
def _quadric_locus() -> list[dict]:
    checks = []
    T5 = RingContext.create(("x", "y", "z"), GF(5), (1, 1, 1), graded=True)
    Tq = T5.quotient(T5.parse("x^2 + y^2 + z^2"))
    x, y, z = Tq.gens()
    res = enumerate_locus(Tq, [x, y, z], 5, "nwl")
    counts: dict[str, int] = {}
    for _, cls in res.points:
        counts[cls] = counts.get(cls, 0) + 1
    checks.append(
        _check("point-counts", {"in-locus": 1, "not-in-locus": 124}, counts)
    )
    checks.append(_check("subspace-closure", [True, True], list(subspace_check(res))))
    m = ideal(Tq, (x, y, z))
    L = locus_formula_nwl(Tq, m)
    checks.append(
        _check("formula-is-m-squared", True, equal_ideals(L, ideal_power(m, 2)))
    )
    checks.append(
        _check(
            "formula-canonical-generators",
            ["4*y^2 + 4*z^2", "x*y", "y^2", "x*z", "y*z", "z^2"],
            [str(g) for g in canonical_generators(L).generators],
        )
    )
    return checks


@_register(
    "cm1-curve",
    "Dimension-1 complete-intersection curves in three variables, canonical "
    "ideal represented by the curve ideal plus a transversal linear form: "
    "the canonical-socle criterion agrees with the complete syzygy "
    "criterion on every tested hypersurface element.",
)
def _cm1_curve() -> list[dict]:
    checks = []
    T = RingContext.create(("x", "y", "z"), QQ, (1, 1, 1), graded=True)
    P = T.parse
    cases = [
        ("ci-xx-yy", ("x^2", "y^2"), ("x^2", "y^2", "z"), "z",
         (("x^2", "WeaklyLiftable"),
          ("x^2 + y^2", "WeaklyLiftable"),
          ("x^4 + y^4", "NotWeaklyLiftable"))),
        ("ci-hyperbola", ("x^2 - y^2", "x*y"), ("x^2 - y^2", "x*y", "z"), "z",
         (("x^2 - y^2", "WeaklyLiftable"),
          ("x*y", "WeaklyLiftable"),
          ("x^3*y - x*y^3", "NotWeaklyLiftable"))),
    ]
    for tag, igens, jgens, w, fs in cases:
        I = ideal(T, tuple(P(s) for s in igens))
        J = ideal(T, tuple(P(s) for s in jgens))
        for fstr, expected in fs:
            f = P(fstr)
            d1 = weaklift_cm1(T, f, I, J, P(w))
            d2 = weaklift_cyclic(T, f, I)
            checks.append(
                _check(f"{tag}-{fstr.replace(' ', '')}-cm1", expected, d1.verdict.value)
            )
            checks.append(
                _check(
                    f"{tag}-{fstr.replace(' ', '')}-agreement",
                    True,
                    d1.verdict == d2.verdict,
                )
            )
    return checks


@_register(
    "betti-additivity",
    "Certified-liftable fixture (z, x^2, xy, y^2) with hypersurface element "
    "z: ambient Betti numbers (1,4,5,2) split as sums of consecutive "
    "quotient Betti numbers; for the principal-image ideal (z, x^2) the "
    "ambient Poincare polynomial is exactly (1+t)^2.",
)
def _betti_additivity() -> list[dict]:
    checks = []
    T = RingContext.create(("x", "y", "z"), QQ, (1, 1, 1), graded=True)
    P = T.parse
    f = P("z")
    I = ideal(T, (f, P("x^2"), P("x*y"), P("y^2")))
    L = ideal(T, (P("x^2"), P("x*y"), P("y^2")))
    cert = certify_lift_cyclic(T, f, I, L)
    checks.append(_check("lift-certified", "LiftCertified", cert.verdict.value))

    rep = betti_relations(T, f, I, 4)
    checks.append(
        _check("ambient-betti", [1, 4, 5, 2], list(rep.betti_ambient.numbers))
    )
    checks.append(
        _check("quotient-betti", [1, 3, 2], list(rep.betti_quotient.numbers))
    )
    checks.append(_check("additivity-holds", True, rep.additivity_holds))
    checks.append(_check("additivity-range", 4, rep.additivity_range))

    I2 = ideal(T, (f, P("x^2")))
    rep2 = betti_relations(T, f, I2, 4)
    checks.append(
        _check("principal-ambient-betti", [1, 2, 1], list(rep2.betti_ambient.numbers))
    )
    checks.append(_check("principal-poincare-checked", True, rep2.poincare_checked))
    checks.append(
        _check("principal-poincare-divisible", True, rep2.poincare_divisible)
    )
    return checks


@_register(
    "shamash-periodic",
    "Quotient of the squared maximal ideal in two variables by x^4 + y^4, "
    "an element of m*I: the standard-construction recurrence holds to "
    "truncation 6, the quotient Betti numbers stabilize at 3, and the "
    "projective dimension over the hypersurface is infinite.",
)
def _shamash_periodic() -> list[dict]:
    checks = []
    T = RingContext.create(("x", "y"), QQ, (1, 1), graded=True)
    P = T.parse
    f = P("x^4 + y^4")
    I = ideal(T, (P("x^2"), P("x*y"), P("y^2")))
    rep = betti_relations(T, f, I, 6)
    checks.append(
        _check("ambient-betti", [1, 3, 2], list(rep.betti_ambient.numbers))
    )
    checks.append(
        _check(
            "quotient-betti",
            [1, 3, 3, 3, 3, 3, 3],
            list(rep.betti_quotient.numbers),
        )
    )
    checks.append(_check("shamash-applies", True, rep.shamash_applies))
    checks.append(_check("shamash-holds", True, rep.shamash_holds))

    R = T.quotient(f)
    gens = [
        VectorPoly(R, (R.from_dict({m: c for c, m in h.terms}),))
        for h in I.generators
    ]
    pd = pd_decide(gens, rank=1)
    checks.append(_check("pd-infinite", "infinite", "infinite" if pd is None else pd))
    return checks


@_register(
    "gor0-family",
    "Zero-dimensional Gorenstein quotient by (x^2, y^2): the socle-pairing "
    "criterion decides x^2+y^2 liftable and x^4+y^4 not, agrees with the "
    "syzygy criterion, and the closed-form locus (x^3, xy, y^3) matches the "
    "F_2 point enumeration.",
)
def _gor0_family() -> list[dict]:
    checks = []
    T = RingContext.create(("x", "y"), QQ, (1, 1), graded=True)
    P = T.parse
    I = ideal(T, (P("x^2"), P("y^2")))
    for fstr, expected in (("x^2 + y^2", "WeaklyLiftable"),
                           ("x^4 + y^4", "NotWeaklyLiftable")):
        f = P(fstr)
        d1 = weaklift_gor0(T, f, I)
        d2 = weaklift_cyclic(T, f, I)
        tag = fstr.replace(" ", "")
        checks.append(_check(f"gor0-{tag}", expected, d1.verdict.value))
        checks.append(_check(f"agreement-{tag}", True, d1.verdict == d2.verdict))
    L = locus_formula_nwl(T, I)
    checks.append(
        _check(
            "formula-canonical-generators",
            ["x^3", "y^3", "x*y"],
            [str(g) for g in canonical_generators(L).generators],
        )
    )
    T2 = RingContext.create(("x", "y"), GF(2), (1, 1), graded=True)
    x2, y2 = T2.gens()
    res = enumerate_locus(T2, [x2**2, y2**2], 2, "nwl")
    checks.append(
        _check(
            "f2-enumeration",
            [[[0, 0], "in-locus"], [[0, 1], "not-in-locus"],
             [[1, 0], "not-in-locus"], [[1, 1], "not-in-locus"]],
            [[list(vec), cls] for vec, cls in res.points],
        )
    )
    checks.append(
        _check("f2-subspace-closure", [True, True], list(subspace_check(res)))
    )
    return checks
