"""Execution of parsed task statements against a declaration environment.

Each task produces a plain dict ready for JSON serialization.  All
polynomials are rendered in the input expression syntax, and certificates
carry a blueprint of their ring so they can be re-parsed and replayed
without the original script.
"""

from __future__ import annotations

from typing import Optional

from .domains import GF, QQ, ZZ, PrimeField, RationalDomain
from .dsl import ArgValue, Environment, TaskStmt, eval_expr
from .errors import NotApplicable, PreconditionError
from .groebner import MembershipCertificate
from .ideals import IdealHandle, canonical_generators, reduced_groebner
from .liftcrit import (
    LiftDecision,
    Witness,
    betti_relations,
    certify_lift_cyclic,
    graded_obstruction,
    group_ring_weaklift,
    obstruction_suite,
    weaklift_cm1,
    weaklift_cyclic,
    weaklift_gor0,
)
from .loci import enumerate_locus, locus_formula_nwl
from .modules import ModuleCertificate, VectorPoly
from .poly import Polynomial, RingContext
from .resolutions import BettiTable, betti_numbers, pd_decide

_PROPERTY_NAMES = {"nwl": "nwl", "npd": "npd", "obstruction_fail": "obstruction-fail"}


# -- serialization ---------------------------------------------------------


def domain_label(dom) -> str:
    if isinstance(dom, PrimeField):
        return f"GF({dom.p})"
    if isinstance(dom, RationalDomain):
        return "QQ"
    return "ZZ"


def ring_blueprint(ring: RingContext) -> dict:
    return {
        "domain": domain_label(ring.domain),
        "variables": list(ring.names),
        "weights": list(ring.weights),
        "graded": ring.graded,
        "relations": [str(r) for r in ring.relation_polys()],
    }


def restore_ring(bp: dict) -> RingContext:
    label = bp["domain"]
    if label == "QQ":
        dom = QQ
    elif label == "ZZ":
        dom = ZZ
    else:
        dom = GF(int(label[3:-1]))
    ring = RingContext.create(
        tuple(bp["variables"]), dom, tuple(bp["weights"]), graded=bp["graded"]
    )
    rels = [ring.parse(r) for r in bp.get("relations", ())]
    return ring.with_relations(rels) if rels else ring


def serialize_certificate(cert) -> Optional[dict]:
    if cert is None:
        return None
    if isinstance(cert, MembershipCertificate):
        return {
            "type": "ideal-membership",
            "ring": ring_blueprint(cert.element.ring),
            "element": str(cert.element),
            "generators": [str(g) for g in cert.generators],
            "coefficients": [str(c) for c in cert.coefficients],
            "relations": [str(r) for r in cert.relations],
            "relation_coefficients": [str(c) for c in cert.relation_coefficients],
        }
    if isinstance(cert, ModuleCertificate):
        return {
            "type": "module-membership",
            "ring": ring_blueprint(cert.target.ring),
            "rank": cert.target.rank,
            "target": [str(e) for e in cert.target.entries],
            "columns": [[str(e) for e in col.entries] for col in cert.columns],
            "coefficients": [str(c) for c in cert.coefficients],
        }
    if isinstance(cert, IdealHandle):
        return {
            "type": "ideal",
            "ring": ring_blueprint(cert.ring),
            "generators": [str(g) for g in cert.generators],
        }
    raise PreconditionError(f"unserializable certificate {type(cert).__name__}")


def replay_certificate(data: dict) -> bool:
    """Re-parse a serialized certificate and re-check its identity."""
    ring = restore_ring(data["ring"])
    if data["type"] == "ideal-membership":
        cert = MembershipCertificate(
            element=ring.parse(data["element"]),
            generators=tuple(ring.parse(g) for g in data["generators"]),
            coefficients=tuple(ring.parse(c) for c in data["coefficients"]),
            relations=tuple(ring.parse(r) for r in data["relations"]),
            relation_coefficients=tuple(
                ring.parse(c) for c in data["relation_coefficients"]
            ),
        )
        return cert.verify()
    if data["type"] == "module-membership":
        cert = ModuleCertificate(
            target=VectorPoly(ring, tuple(ring.parse(e) for e in data["target"])),
            columns=tuple(
                VectorPoly(ring, tuple(ring.parse(e) for e in col))
                for col in data["columns"]
            ),
            coefficients=tuple(ring.parse(c) for c in data["coefficients"]),
        )
        return cert.verify()
    if data["type"] == "ideal":
        for g in data["generators"]:
            ring.parse(g)
        return True
    raise PreconditionError(f"unknown certificate type {data['type']!r}")


def _decision_fields(dec: LiftDecision) -> dict:
    out = {
        "verdict": dec.verdict.value,
        "warnings": list(dec.warnings),
        "trail": [
            {"name": c.name, "outcome": c.outcome, "detail": c.detail}
            for c in dec.trail
        ],
    }
    if isinstance(dec.certificate, Witness):
        out["witness"] = {
            "element": str(dec.certificate.element),
            "failed_inclusion": dec.certificate.failed_inclusion,
        }
        out["certificate"] = None
    else:
        out["witness"] = None
        out["certificate"] = serialize_certificate(dec.certificate)
    if dec.artifacts:
        out["artifacts"] = {k: v for k, v in dec.artifacts}
    return out


def _betti_table_fields(table: BettiTable) -> dict:
    out = {"numbers": list(table.numbers), "complete": table.complete}
    if table.degrees is not None:
        out["degrees"] = [list(d) for d in table.degrees]
    return out


# -- argument resolution ---------------------------------------------------


_SIGNATURES = {
    "weaklift_cyclic": {"f": "poly", "I": "ideal"},
    "weaklift_gor0": {"f": "poly", "I": "ideal"},
    "weaklift_cm1": {"f": "poly", "I": "ideal", "J": "ideal", "w": "poly"},
    "graded_obstruction": {"f": "poly", "I": "ideal"},
    "obstruction_suite": {"f": "poly", "I": "ideal"},
    "certify_lift": {"f": "poly", "I": "ideal", "L": "ideal"},
    "betti": {"f": "poly", "I": "ideal", "truncation": "int"},
    "group_ring": {"p": "int", "i": "int"},
    "locus": {"I": "ideal", "q": "int", "property": "prop"},
    "locus_formula": {"I": "ideal", "J": "ideal", "w": "poly"},
    "gb": {"I": "ideal"},
    "resolve": {"I": "ideal", "steps": "int"},
}

_REQUIRED = {
    "weaklift_cyclic": ("f", "I"),
    "weaklift_gor0": ("f", "I"),
    "weaklift_cm1": ("f", "I", "J", "w"),
    "graded_obstruction": ("f", "I"),
    "obstruction_suite": ("f", "I"),
    "certify_lift": ("f", "I", "L"),
    "betti": ("f", "I"),
    "group_ring": ("p", "i"),
    "locus": ("I", "q", "property"),
    "locus_formula": ("I",),
    "gb": ("I",),
    "resolve": ("I",),
}


class _TaskScope:
    def __init__(self, env: Environment, task: TaskStmt, index: int):
        self.env = env
        self.task = task
        self.index = index
        self.raw: dict[str, ArgValue] = dict(task.args)
        self.ring_name: Optional[str] = None

    def fail(self, msg: str) -> PreconditionError:
        return PreconditionError(f"task {self.index} ({self.task.kind}): {msg}")

    def argspec(self, name: str) -> str:
        sig = _SIGNATURES[self.task.kind]
        if name in sig:
            return sig[name]
        if self.task.kind == "obstruction_suite" and _is_sample_name(name):
            return "ideal"
        raise self.fail(f"unknown argument {name!r}")

    def settle_ring(self) -> None:
        explicit = None
        if "ring" in self.raw:
            val = self.raw.pop("ring")
            if val.bare_name is None or val.bare_name not in self.env.rings:
                raise self.fail(
                    f"ring argument {val.span.text!r} is not a declared ring"
                )
            explicit = val.bare_name
        bound = []
        for name, val in self.raw.items():
            if val.bare_name is not None:
                owner = self.env.ring_of(val.bare_name)
                if owner is not None and val.bare_name not in self.env.rings:
                    bound.append((name, val.bare_name, owner))
        ring_name = explicit
        for argname, obj, owner in bound:
            if ring_name is None:
                ring_name = owner
            elif owner != ring_name:
                raise self.fail(
                    f"argument {argname}={obj} is bound to ring {owner!r} "
                    f"but the task ring is {ring_name!r}"
                )
        if ring_name is None:
            ring_name = self.env.last_ring
        self.ring_name = ring_name

    @property
    def ring(self) -> RingContext:
        if self.ring_name is None:
            raise self.fail("no ring declared before this task")
        return self.env.rings[self.ring_name]

    def take_ideal(self, name: str) -> IdealHandle:
        val = self.raw.pop(name)
        if val.bare_name is None:
            raise self.fail(f"argument {name!r} must name a declared ideal")
        if val.bare_name not in self.env.ideals:
            raise self.fail(f"undeclared ideal name {val.bare_name!r}")
        return self.env.ideals[val.bare_name]

    def take_poly(self, name: str) -> Polynomial:
        val = self.raw.pop(name)
        if val.bare_name is not None:
            if val.bare_name in self.env.elems:
                return self.env.elems[val.bare_name]
            if val.bare_name in self.env.ideals:
                raise self.fail(f"argument {name!r} names an ideal, not an element")
        return eval_expr(val.span, self.ring, self.env.source)

    def take_int(self, name: str) -> int:
        val = self.raw.pop(name)
        if val.bare_int is None:
            raise self.fail(f"argument {name!r} must be an integer literal")
        return val.bare_int

    def take_prop(self, name: str) -> str:
        val = self.raw.pop(name)
        if val.bare_name not in _PROPERTY_NAMES:
            raise self.fail(
                f"argument {name!r} must be one of nwl, npd, obstruction_fail"
            )
        return _PROPERTY_NAMES[val.bare_name]


def _is_sample_name(name: str) -> bool:
    return name == "J" or (name.startswith("J") and name[1:].isdigit())


# -- dispatch --------------------------------------------------------------


def run_task(env: Environment, task: TaskStmt, index: int) -> dict:
    scope = _TaskScope(env, task, index)
    for name in _REQUIRED[task.kind]:
        if name not in scope.raw:
            raise scope.fail(f"missing argument {name!r}")
    for name in scope.raw:
        if name != "ring":
            scope.argspec(name)
    scope.settle_ring()
    result = {
        "index": index,
        "kind": task.kind,
        "line": task.line,
        "args": {name: val.span.text for name, val in task.args},
    }
    try:
        payload = _dispatch(scope)
    except NotApplicable as exc:
        result["status"] = "not-applicable"
        result["detail"] = str(exc)
        return result
    result["status"] = "ok"
    result.update(payload)
    return result


def _dispatch(scope: _TaskScope) -> dict:
    kind = scope.task.kind
    if kind == "weaklift_cyclic":
        f = scope.take_poly("f")
        I = scope.take_ideal("I")
        return _decision_fields(weaklift_cyclic(scope.ring, f, I))
    if kind == "weaklift_gor0":
        f = scope.take_poly("f")
        I = scope.take_ideal("I")
        return _decision_fields(weaklift_gor0(scope.ring, f, I))
    if kind == "weaklift_cm1":
        f = scope.take_poly("f")
        I = scope.take_ideal("I")
        J = scope.take_ideal("J")
        w = scope.take_poly("w")
        return _decision_fields(weaklift_cm1(scope.ring, f, I, J, w))
    if kind == "graded_obstruction":
        f = scope.take_poly("f")
        I = scope.take_ideal("I")
        return _decision_fields(graded_obstruction(scope.ring, f, I))
    if kind == "obstruction_suite":
        f = scope.take_poly("f")
        I = scope.take_ideal("I")
        sample_names = sorted(
            (n for n in scope.raw if _is_sample_name(n)),
            key=lambda n: (len(n), n),
        )
        samples = tuple(scope.take_ideal(n) for n in sample_names)
        return _decision_fields(obstruction_suite(scope.ring, f, I, samples))
    if kind == "certify_lift":
        f = scope.take_poly("f")
        I = scope.take_ideal("I")
        L = scope.take_ideal("L")
        return _decision_fields(certify_lift_cyclic(scope.ring, f, I, L))
    if kind == "betti":
        f = scope.take_poly("f")
        I = scope.take_ideal("I")
        truncation = scope.take_int("truncation") if "truncation" in scope.raw else 4
        rep = betti_relations(scope.ring, f, I, truncation)
        return {
            "verdict": None,
            "warnings": list(rep.warnings),
            "betti_ambient": _betti_table_fields(rep.betti_ambient),
            "betti_quotient": _betti_table_fields(rep.betti_quotient),
            "additivity_holds": rep.additivity_holds,
            "additivity_range": rep.additivity_range,
            "shamash_applies": rep.shamash_applies,
            "shamash_holds": rep.shamash_holds,
            "poincare_checked": rep.poincare_checked,
            "poincare_divisible": rep.poincare_divisible,
        }
    if kind == "group_ring":
        p = scope.take_int("p")
        i = scope.take_int("i")
        return _decision_fields(group_ring_weaklift(p, i))
    if kind == "locus":
        I = scope.take_ideal("I")
        q = scope.take_int("q")
        prop = scope.take_prop("property")
        frame = [g for g in I.generators]
        res = enumerate_locus(I.ring, frame, q, prop)
        counts: dict[str, int] = {}
        for _, cls in res.points:
            counts[cls] = counts.get(cls, 0) + 1
        return {
            "verdict": None,
            "warnings": [],
            "q": res.q,
            "property": res.prop,
            "frame": [str(g) for g in res.frame],
            "points": [[list(vec), cls] for vec, cls in res.points],
            "counts": counts,
            "additive_closed": res.additive_closed,
            "scalar_closed": res.scalar_closed,
        }
    if kind == "locus_formula":
        I = scope.take_ideal("I")
        J = scope.take_ideal("J") if "J" in scope.raw else None
        w = scope.take_poly("w") if "w" in scope.raw else None
        L = locus_formula_nwl(I.ring, I, J, w)
        return {
            "verdict": None,
            "warnings": [],
            "generators": [str(g) for g in canonical_generators(L).generators],
            "note": "the locus within I is the intersection of this ideal with I",
        }
    if kind == "gb":
        I = scope.take_ideal("I")
        gbasis = reduced_groebner(I)
        return {
            "verdict": None,
            "warnings": [],
            "basis": [str(g) for g in gbasis.elements],
            "relations_adjoined": gbasis.relations_adjoined,
        }
    if kind == "resolve":
        I = scope.take_ideal("I")
        steps = scope.take_int("steps") if "steps" in scope.raw else 6
        ring = I.ring
        gens = [
            VectorPoly(ring, (g,)) for g in I.generators if not g.is_zero
        ]
        table = betti_numbers(
            gens, steps, rank=1, allow_inhomogeneous=not ring.graded
        )
        payload = {
            "verdict": None,
            "warnings": [],
            "betti": _betti_table_fields(table),
        }
        if len(ring.relations) <= 1:
            pd = pd_decide(gens, rank=1, allow_inhomogeneous=not ring.graded)
            payload["pd"] = pd if pd is not None else "infinite"
        return payload
    raise scope.fail("unhandled task kind")
