"""Polynomial arithmetic over an explicit ring context.

A :class:`RingContext` fixes variable names, coefficient domain, positive
grading weights, a monomial order, and an optional list of quotient relations.
A :class:`Polynomial` is a canonical term list (strictly descending in the
ring's order, no zero coefficients) tagged with its ring; all binary
operations insist the tags match.

Quotient relations are carried as data only: arithmetic never reduces modulo
them.  Groebner-level operations adjoin them, so one engine serves both the
polynomial ring and its quotients.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Optional

from .domains import Domain, GF, QQ, RawValue, ZZ
from .errors import (
    DomainError,
    NonHomogeneous,
    ParseError,
    PreconditionError,
    RingMismatch,
)
from .orders import GREVLEX, Mon, MonomialOrder, mon_degree, mon_mul

Term = tuple[RawValue, Mon]
Terms = tuple[Term, ...]


@dataclass(frozen=True)
class RingContext:
    """Variable names, domain, weights, order, optional quotient relations.

    ``relations`` are raw canonical term tuples so the context stays hashable;
    ``hypersurface`` marks the designated relation when the ring arose as a
    hypersurface quotient T/(f).  ``graded=False`` marks internal helper rings
    (tag extensions, ungraded models) that the decision layer refuses.
    """

    names: tuple[str, ...]
    domain: Domain
    weights: tuple[int, ...]
    order: MonomialOrder = GREVLEX
    relations: tuple[Terms, ...] = ()
    hypersurface: Optional[Terms] = None
    graded: bool = True

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise PreconditionError(f"duplicate variable names: {self.names}")
        if len(self.weights) != len(self.names):
            raise PreconditionError("weights length must match variable count")
        if any(w <= 0 for w in self.weights):
            raise PreconditionError("grading weights must be positive")

    # -- construction -----------------------------------------------------

    @staticmethod
    def create(
        names: Iterable[str],
        domain: Domain,
        weights: Optional[Iterable[int]] = None,
        order: MonomialOrder = GREVLEX,
        graded: bool = True,
    ) -> "RingContext":
        names = tuple(names)
        w = tuple(weights) if weights is not None else (1,) * len(names)
        return RingContext(names, domain, w, order, graded=graded)

    def with_order(self, order: MonomialOrder) -> "RingContext":
        ring = replace(self, order=order)
        return _resort_ring(ring)

    def ambient(self) -> "RingContext":
        """The same context with relations stripped."""
        return replace(self, relations=(), hypersurface=None)

    def with_relations(self, rels: Iterable["Polynomial"]) -> "RingContext":
        rel_terms = []
        for r in rels:
            if (
                r.ring.names != self.names
                or r.ring.domain != self.domain
                or r.ring.weights != self.weights
            ):
                raise RingMismatch("relation from a different ring")
            if r.is_zero:
                raise PreconditionError("zero quotient relation")
            if self.graded and not r.is_homogeneous():
                raise NonHomogeneous(f"relation {r} is not homogeneous")
            canon = tuple(
                sorted(r.terms, key=lambda tm: self.sort_key(tm[1]), reverse=True)
            )
            rel_terms.append(canon)
        return replace(self, relations=self.relations + tuple(rel_terms))

    def quotient(self, f: "Polynomial", check_nzd: bool = True) -> "RingContext":
        """Hypersurface quotient T/(f); optionally verifies f is a
        nonzerodivisor modulo the existing relations."""
        if check_nzd:
            from .ideals import IdealHandle, is_nonzerodivisor

            if not is_nonzerodivisor(f, IdealHandle(self, ())):
                raise PreconditionError(
                    f"{f} is a zerodivisor modulo the ring relations"
                )
        new = self.with_relations([f])
        return replace(new, hypersurface=new.relations[-1])

    # -- basic data -------------------------------------------------------

    @property
    def nvars(self) -> int:
        return len(self.names)

    def var_index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ParseError(f"unknown variable {name!r}") from None

    def sort_key(self, mon: Mon):
        return self.order.sort_key(mon, self.weights)

    def mon_deg(self, mon: Mon) -> int:
        return mon_degree(mon, self.weights)

    # -- element constructors ---------------------------------------------

    def from_dict(self, d: dict) -> "Polynomial":
        items = [
            (self.domain.normalize(c), m) for m, c in d.items()
            if not self.domain.is_zero(self.domain.normalize(c))
        ]
        items.sort(key=lambda t: self.sort_key(t[1]), reverse=True)
        return Polynomial(self, tuple(items))

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    @property
    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        c = self.domain.normalize(c)
        if self.domain.is_zero(c):
            return self.zero
        return Polynomial(self, ((c, (0,) * self.nvars),))

    def var(self, name: str) -> "Polynomial":
        i = self.var_index(name)
        mon = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, ((self.domain.one, mon),))

    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.var(n) for n in self.names)

    def monomial(self, mon: Mon, coeff=1) -> "Polynomial":
        return self.from_dict({tuple(mon): coeff})

    def relation_polys(self) -> tuple["Polynomial", ...]:
        return tuple(Polynomial(self, t) for t in self.relations)

    def parse(self, text: str) -> "Polynomial":
        return parse_poly(text, self)

    def __repr__(self) -> str:
        rel = f"/{len(self.relations)} rel" if self.relations else ""
        return f"Ring({self.domain!r}[{', '.join(self.names)}]{rel})"


def _resort_ring(ring: RingContext) -> RingContext:
    rels = []
    for t in ring.relations:
        items = sorted(t, key=lambda tm: ring.sort_key(tm[1]), reverse=True)
        rels.append(tuple(items))
    hyp = None
    if ring.hypersurface is not None:
        hyp = tuple(
            sorted(ring.hypersurface, key=lambda tm: ring.sort_key(tm[1]), reverse=True)
        )
    return replace(ring, relations=tuple(rels), hypersurface=hyp)


@dataclass(frozen=True)
class Polynomial:
    """Canonical term list (descending, zero-free) tagged with its ring."""

    ring: RingContext
    terms: Terms

    # -- predicates -------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return not self.terms or all(e == 0 for e in self.terms[0][1])

    def constant_value(self):
        if self.is_zero:
            return self.ring.domain.zero
        if not self.is_constant:
            raise PreconditionError(f"{self} is not constant")
        return self.terms[0][0]

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        d = self.ring.mon_deg(self.terms[0][1])
        return all(self.ring.mon_deg(m) == d for _, m in self.terms)

    def degree(self) -> int:
        """Weighted total degree; undefined for the zero polynomial."""
        if self.is_zero:
            raise PreconditionError("degree of the zero polynomial is undefined")
        return max(self.ring.mon_deg(m) for _, m in self.terms)

    def leading_term(self) -> Term:
        if self.is_zero:
            raise PreconditionError("zero polynomial has no leading term")
        return self.terms[0]

    def leading_monomial(self) -> Mon:
        return self.leading_term()[1]

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        lc = self.terms[0][0]
        dom = self.ring.domain
        if dom.is_zero(dom.sub(lc, dom.one)):
            return self
        return Polynomial(
            self.ring, tuple((dom.div(c, lc), m) for c, m in self.terms)
        )

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if self.ring != other.ring:
            raise RingMismatch(
                f"operands from different rings: {self.ring!r} vs {other.ring!r}"
            )

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        dom = self.ring.domain
        acc = {m: c for c, m in self.terms}
        for c, m in other.terms:
            prev = acc.get(m)
            acc[m] = c if prev is None else dom.add(prev, c)
        return self.ring.from_dict(acc)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        dom = self.ring.domain
        return Polynomial(self.ring, tuple((dom.neg(c), m) for c, m in self.terms))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        dom = self.ring.domain
        acc: dict = {}
        for c1, m1 in self.terms:
            for c2, m2 in other.terms:
                m = mon_mul(m1, m2)
                c = dom.mul(c1, c2)
                prev = acc.get(m)
                acc[m] = c if prev is None else dom.add(prev, c)
        return self.ring.from_dict(acc)

    def scalar_mul(self, c) -> "Polynomial":
        dom = self.ring.domain
        c = dom.normalize(c)
        if dom.is_zero(c):
            return self.ring.zero
        return self.ring.from_dict({m: dom.mul(c, cf) for cf, m in self.terms})

    def scalar_div(self, c) -> "Polynomial":
        dom = self.ring.domain
        c = dom.normalize(c)
        return self.ring.from_dict({m: dom.div(cf, c) for cf, m in self.terms})

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise PreconditionError(f"exponent must be a non-negative int, got {n!r}")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- conversions ------------------------------------------------------

    def reinterpret(self, other: RingContext) -> "Polynomial":
        """Re-tag into a ring with the same variables, domain and order
        (e.g. between a quotient ring and its ambient ring)."""
        if (
            other.names != self.ring.names
            or other.domain != self.ring.domain
            or other.weights != self.ring.weights
            or other.order != self.ring.order
        ):
            raise RingMismatch("reinterpret requires identical variables and order")
        return Polynomial(other, self.terms)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"<{format_poly(self)}>"


# -- printing -------------------------------------------------------------


def _coeff_is_negative(dom: Domain, c) -> bool:
    if dom.is_field and dom.characteristic:
        return False  # prime-field values print as 0..p-1
    return c < 0


def _term_str(ring: RingContext, c, mon: Mon) -> str:
    dom = ring.domain
    parts = [
        f"{name}^{e}" if e > 1 else name
        for name, e in zip(ring.names, mon)
        if e > 0
    ]
    coeff_abs = c if not _coeff_is_negative(dom, c) else dom.neg(c)
    if not parts:
        return dom.to_str(coeff_abs)
    one = dom.is_zero(dom.sub(coeff_abs, dom.one))
    body = "*".join(parts)
    return body if one else f"{dom.to_str(coeff_abs)}*{body}"


def format_poly(p: Polynomial) -> str:
    """Canonical re-parseable rendering, terms in descending order."""
    if p.is_zero:
        return "0"
    dom = p.ring.domain
    out = []
    for i, (c, m) in enumerate(p.terms):
        neg = _coeff_is_negative(dom, c)
        if i == 0:
            out.append(("-" if neg else "") + _term_str(p.ring, c, m))
        else:
            out.append((" - " if neg else " + ") + _term_str(p.ring, c, m))
    return "".join(out)


# -- parsing --------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()]))"
)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == m.start():
            if text[pos:].strip():
                raise ParseError(
                    f"unexpected character {text[pos:].strip()[0]!r}", column=pos + 1
                )
            break
        if m.lastgroup == "int":
            tokens.append(("int", int(m.group("int")), m.start("int")))
        elif m.lastgroup == "name":
            tokens.append(("name", m.group("name"), m.start("name")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    return tokens


class _ExprParser:
    """Recursive descent over +, -, *, /, ^, parentheses, ints, variables.

    Division is scalar-only: the divisor must be a nonzero constant and the
    division must be exact in the coefficient domain.
    """

    def __init__(self, text: str, ring: RingContext):
        self.ring = ring
        self.tokens = _tokenize(text.replace("−", "-"))
        self.i = 0

    def _peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, -1)

    def _next(self):
        tok = self._peek()
        self.i += 1
        return tok

    def _error(self, msg: str, tok=None) -> ParseError:
        col = (tok or self._peek())[2]
        return ParseError(msg, column=col + 1 if col >= 0 else 0)

    def parse(self) -> Polynomial:
        p = self.expr()
        kind, val, _ = self._peek()
        if kind is not None:
            raise self._error(f"trailing input at {val!r}")
        return p

    def expr(self) -> Polynomial:
        kind, val, _ = self._peek()
        if kind == "op" and val in "+-":
            self._next()
            p = self.term()
            if val == "-":
                p = -p
        else:
            p = self.term()
        while True:
            kind, val, _ = self._peek()
            if kind == "op" and val in "+-":
                self._next()
                q = self.term()
                p = p + q if val == "+" else p - q
            else:
                return p

    def term(self) -> Polynomial:
        p = self.factor()
        while True:
            kind, val, tok = self._peek()
            if kind == "op" and val == "*":
                self._next()
                p = p * self.factor()
            elif kind == "op" and val == "/":
                tok = self._next()
                q = self.factor()
                if not q.is_constant or q.is_zero:
                    raise self._error("division only by a nonzero constant", tok)
                try:
                    p = p.scalar_div(q.constant_value())
                except DomainError as e:
                    raise self._error(f"coefficient not in domain: {e}", tok) from None
            else:
                return p

    def factor(self) -> Polynomial:
        kind, val, tok = self._peek()
        if kind == "op" and val == "-":
            self._next()
            return -self.factor()
        p = self.base()
        kind, val, _ = self._peek()
        if kind == "op" and val == "^":
            self._next()
            ekind, eval_, etok = self._next()
            if ekind != "int":
                raise ParseError(
                    "malformed exponent: expected a non-negative integer",
                    column=(etok + 1) if isinstance(etok, int) and etok >= 0 else 0,
                )
            p = p ** eval_
        return p

    def base(self) -> Polynomial:
        kind, val, tok = self._next()
        if kind == "int":
            return self.ring.const(val)
        if kind == "name":
            if val not in self.ring.names:
                raise ParseError(f"unknown variable {val!r}", column=tok + 1)
            return self.ring.var(val)
        if kind == "op" and val == "(":
            p = self.expr()
            k2, v2, t2 = self._next()
            if not (k2 == "op" and v2 == ")"):
                raise ParseError("expected ')'", column=(t2 + 1) if t2 >= 0 else 0)
            return p
        raise ParseError(
            f"unexpected token {val!r}" if kind else "unexpected end of expression",
            column=(tok + 1) if isinstance(tok, int) and tok >= 0 else 0,
        )


def parse_poly(text: str, ring: RingContext) -> Polynomial:
    """Parse an expression (+, -, *, /, ^, parentheses, ints, variables)."""
    return _ExprParser(text, ring).parse()


# -- spec-level operations ------------------------------------------------


def poly_arith(op: str, a: Polynomial, b: Optional[Polynomial] = None, n=None):
    """Single-dispatch arithmetic entry point used by the CLI layer."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    if op == "scalar_mul":
        return a.scalar_mul(n)
    if op == "power":
        return a ** n
    raise PreconditionError(f"unknown arithmetic op {op!r}")


def degree_check(p: Polynomial) -> tuple[int, bool]:
    """(weighted degree, homogeneous?) ; errors on the zero polynomial."""
    return p.degree(), p.is_homogeneous()


def verify_identity(lhs: Polynomial, rhs: Polynomial) -> bool:
    """Exact equality after canonicalization; works over every domain."""
    lhs._check(rhs)
    return (lhs - rhs).is_zero


def reduce_mod_prime(p: Polynomial, prime: int) -> Polynomial:
    """Coefficient-wise reduction into GF(prime) over the same variables.

    Rational coefficients require the denominator to be invertible mod prime.
    Quotient relations are reduced along; a relation that vanishes mod prime
    is an error.
    """
    target_dom = GF(prime)
    base = RingContext.create(
        p.ring.names, target_dom, p.ring.weights, p.ring.order, graded=p.ring.graded
    )
    rels = []
    for t in p.ring.relations:
        rp = base.from_dict({m: _coerce_mod(c, target_dom) for c, m in t})
        if rp.is_zero:
            raise DomainError(f"quotient relation vanishes mod {prime}")
        rels.append(rp)
    ring = base.with_relations(rels) if rels else base
    return ring.from_dict({m: _coerce_mod(c, target_dom) for c, m in p.terms})


def _coerce_mod(c, dom) -> int:
    if isinstance(c, Fraction):
        return dom.div(dom.normalize(c.numerator), dom.normalize(c.denominator))
    return dom.normalize(c)


def substitute_zero(p: Polynomial, names: Iterable[str]) -> Polynomial:
    """Set the listed variables to 0 and land in the smaller ring."""
    drop = {p.ring.var_index(n) for n in names}
    for t in p.ring.relations:
        for _, m in t:
            if any(m[i] for i in drop):
                raise PreconditionError("ring relation involves a dropped variable")
    keep = [i for i in range(p.ring.nvars) if i not in drop]
    sub = RingContext.create(
        tuple(p.ring.names[i] for i in keep),
        p.ring.domain,
        tuple(p.ring.weights[i] for i in keep),
        p.ring.order if p.ring.order.kind != "block" else GREVLEX,
        graded=p.ring.graded,
    )
    if p.ring.relations:
        sub = sub.with_relations(
            [
                sub.from_dict({tuple(m[i] for i in keep): c for c, m in t})
                for t in p.ring.relations
            ]
        )
    acc: dict = {}
    dom = p.ring.domain
    for c, m in p.terms:
        if any(m[i] for i in drop):
            continue
        key = tuple(m[i] for i in keep)
        prev = acc.get(key)
        acc[key] = c if prev is None else dom.add(prev, c)
    return sub.from_dict(acc)
