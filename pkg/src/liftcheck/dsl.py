"""Input language for the command-line tool.

Line-oriented statements, each terminated by ';':

    ring R = poly(QQ, [x, y, z]) mod [x^2 + y^2 + z^2] weights [1, 1, 1];
    ideal I = [x^2, y^2];
    elem f = x^2 + y^2;
    task weaklift_gor0(f=f, I=I);

Domains: QQ, ZZ, GF(p).  Expressions use +, -, *, ^, /, parentheses,
integer literals, and ring variables; a unicode minus sign is accepted
and normalized; division only by a nonzero scalar.  '#' starts a comment
running to end of line.

Ideal and element declarations bind to the most recently declared ring.
Task arguments name declared objects; an argument value that is not a
declared name is parsed as an expression over the task's ring, and a
declared name shadows a ring variable of the same spelling.  An explicit
ring=NAME argument designates the task ring and is checked against the
bindings of the other arguments.  Extra sample ideals for
obstruction_suite are passed as J, J2, J3, ...; the locus property value
obstruction_fail maps to the "obstruction-fail" classification.

Rings declared with inhomogeneous mod relations are created non-graded;
all others are graded with the given (default all-1) weights.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional, Union

from .domains import GF, QQ, ZZ, Domain
from .errors import ParseError, PreconditionError
from .ideals import ideal
from .poly import Polynomial, RingContext

TASK_KINDS = (
    "weaklift_cyclic",
    "weaklift_gor0",
    "weaklift_cm1",
    "graded_obstruction",
    "obstruction_suite",
    "certify_lift",
    "betti",
    "group_ring",
    "locus",
    "locus_formula",
    "gb",
    "resolve",
)

_OPS = set("=;,[]()+-*^/")


@dataclass(frozen=True)
class Token:
    kind: str  # "ident" | "int" | "op" | "eof"
    text: str
    line: int
    col: int
    offset: int


def _line_starts(text: str) -> list[int]:
    starts = [0]
    for i, ch in enumerate(text):
        if ch == "\n":
            starts.append(i + 1)
    return starts


def _locate(starts: list[int], offset: int) -> tuple[int, int]:
    lo, hi = 0, len(starts) - 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if starts[mid] <= offset:
            lo = mid
        else:
            hi = mid - 1
    return lo + 1, offset - starts[lo] + 1


def tokenize(text: str) -> list[Token]:
    text = text.replace("−", "-")
    starts = _line_starts(text)
    tokens: list[Token] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch in " \t\r\n":
            i += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        line, col = _locate(starts, i)
        if ch in _OPS:
            tokens.append(Token("op", ch, line, col, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("int", text[i:j], line, col, i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("ident", text[i:j], line, col, i))
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    line, col = _locate(starts, n)
    tokens.append(Token("eof", "", line, col, n))
    return tokens


@dataclass(frozen=True)
class ExprSpan:
    """Raw source slice for one expression, with its script position."""

    text: str
    offset: int
    line: int
    col: int


@dataclass(frozen=True)
class RingStmt:
    name: str
    domain_text: str
    gf_p: Optional[int]
    variables: tuple[str, ...]
    relations: tuple[ExprSpan, ...]
    weights: Optional[tuple[int, ...]]
    line: int


@dataclass(frozen=True)
class IdealStmt:
    name: str
    exprs: tuple[ExprSpan, ...]
    line: int


@dataclass(frozen=True)
class ElemStmt:
    name: str
    expr: ExprSpan
    line: int


@dataclass(frozen=True)
class ArgValue:
    """Either a bare token (name or integer) or an expression span."""

    span: ExprSpan
    bare_name: Optional[str]
    bare_int: Optional[int]


@dataclass(frozen=True)
class TaskStmt:
    kind: str
    args: tuple[tuple[str, ArgValue], ...]
    line: int


Statement = Union[RingStmt, IdealStmt, ElemStmt, TaskStmt]


@dataclass(frozen=True)
class Script:
    source: str
    statements: tuple[Statement, ...]

    @property
    def tasks(self) -> tuple[TaskStmt, ...]:
        return tuple(s for s in self.statements if isinstance(s, TaskStmt))


class _Parser:
    def __init__(self, text: str):
        self.text = text.replace("−", "-")
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def next(self) -> Token:
        tok = self.tokens[self.i]
        if tok.kind != "eof":
            self.i += 1
        return tok

    def err(self, msg: str, tok: Optional[Token] = None) -> ParseError:
        tok = tok or self.peek()
        return ParseError(msg, tok.line, tok.col)

    def expect_op(self, ch: str) -> Token:
        tok = self.next()
        if tok.kind != "op" or tok.text != ch:
            raise self.err(f"expected {ch!r}, found {tok.text or 'end of input'!r}", tok)
        return tok

    def expect_ident(self, what: str) -> Token:
        tok = self.next()
        if tok.kind != "ident":
            raise self.err(f"expected {what}, found {tok.text or 'end of input'!r}", tok)
        return tok

    def expect_int(self, what: str) -> int:
        tok = self.next()
        if tok.kind != "int":
            raise self.err(f"expected {what}, found {tok.text or 'end of input'!r}", tok)
        return int(tok.text)

    # -- expression capture ------------------------------------------------

    def capture_expr(self, stop_ops: str) -> ExprSpan:
        """Consume tokens up to an unnested stop op; return the raw slice.

        The stop token itself is not consumed.
        """
        start = self.peek()
        depth = 0
        end_offset = start.offset
        while True:
            tok = self.peek()
            if tok.kind == "eof":
                raise self.err("unterminated expression", tok)
            if tok.kind == "op":
                if tok.text in "([":
                    depth += 1
                elif tok.text in ")]":
                    if depth == 0:
                        if tok.text in stop_ops:
                            break
                        raise self.err(f"unbalanced {tok.text!r}", tok)
                    depth -= 1
                elif depth == 0 and tok.text in stop_ops:
                    break
            self.next()
            end_offset = tok.offset + len(tok.text)
        text = self.text[start.offset : end_offset].strip()
        if not text:
            raise self.err("empty expression", start)
        return ExprSpan(text, start.offset, start.line, start.col)

    # -- statements --------------------------------------------------------

    def parse_script(self) -> Script:
        stmts: list[Statement] = []
        while self.peek().kind != "eof":
            head = self.expect_ident("a statement keyword")
            if head.text == "ring":
                stmts.append(self.parse_ring(head))
            elif head.text == "ideal":
                stmts.append(self.parse_ideal(head))
            elif head.text == "elem":
                stmts.append(self.parse_elem(head))
            elif head.text == "task":
                stmts.append(self.parse_task(head))
            else:
                raise self.err(
                    f"unknown statement keyword {head.text!r} "
                    "(expected ring, ideal, elem, or task)",
                    head,
                )
        return Script(self.text, tuple(stmts))

    def parse_ring(self, head: Token) -> RingStmt:
        name = self.expect_ident("a ring name").text
        self.expect_op("=")
        kw = self.expect_ident("'poly'")
        if kw.text != "poly":
            raise self.err(f"expected 'poly', found {kw.text!r}", kw)
        self.expect_op("(")
        dom_tok = self.expect_ident("a domain (QQ, ZZ, GF)")
        gf_p: Optional[int] = None
        if dom_tok.text == "GF":
            self.expect_op("(")
            gf_p = self.expect_int("a prime modulus")
            self.expect_op(")")
        elif dom_tok.text not in ("QQ", "ZZ"):
            raise self.err(
                f"unknown domain {dom_tok.text!r} (QQ, ZZ, or GF(p))", dom_tok
            )
        self.expect_op(",")
        self.expect_op("[")
        variables = [self.expect_ident("a variable name").text]
        while self.peek().kind == "op" and self.peek().text == ",":
            self.next()
            variables.append(self.expect_ident("a variable name").text)
        self.expect_op("]")
        self.expect_op(")")
        relations: list[ExprSpan] = []
        weights: Optional[tuple[int, ...]] = None
        while self.peek().kind == "ident" and self.peek().text in ("mod", "weights"):
            clause = self.next()
            self.expect_op("[")
            if clause.text == "mod":
                relations.append(self.capture_expr(",]"))
                while self.peek().text == ",":
                    self.next()
                    relations.append(self.capture_expr(",]"))
                self.expect_op("]")
            else:
                ws = [self.expect_int("a weight")]
                while self.peek().text == ",":
                    self.next()
                    ws.append(self.expect_int("a weight"))
                self.expect_op("]")
                weights = tuple(ws)
        self.expect_op(";")
        seen = set()
        for v in variables:
            if v in seen:
                raise self.err(f"duplicate variable {v!r}", head)
            seen.add(v)
        return RingStmt(
            name, dom_tok.text, gf_p, tuple(variables), tuple(relations), weights,
            head.line,
        )

    def parse_ideal(self, head: Token) -> IdealStmt:
        name = self.expect_ident("an ideal name").text
        self.expect_op("=")
        self.expect_op("[")
        exprs = [self.capture_expr(",]")]
        while self.peek().text == ",":
            self.next()
            exprs.append(self.capture_expr(",]"))
        self.expect_op("]")
        self.expect_op(";")
        return IdealStmt(name, tuple(exprs), head.line)

    def parse_elem(self, head: Token) -> ElemStmt:
        name = self.expect_ident("an element name").text
        self.expect_op("=")
        expr = self.capture_expr(";")
        self.expect_op(";")
        return ElemStmt(name, expr, head.line)

    def parse_task(self, head: Token) -> TaskStmt:
        kind_tok = self.expect_ident("a task kind")
        if kind_tok.text not in TASK_KINDS:
            raise self.err(
                f"unknown task kind {kind_tok.text!r}", kind_tok
            )
        self.expect_op("(")
        args: list[tuple[str, ArgValue]] = []
        if not (self.peek().kind == "op" and self.peek().text == ")"):
            args.append(self.parse_arg())
            while self.peek().text == ",":
                self.next()
                args.append(self.parse_arg())
        self.expect_op(")")
        self.expect_op(";")
        names = [a for a, _ in args]
        for a in names:
            if names.count(a) > 1:
                raise self.err(f"duplicate argument {a!r}", kind_tok)
        return TaskStmt(kind_tok.text, tuple(args), head.line)

    def parse_arg(self) -> tuple[str, ArgValue]:
        name = self.expect_ident("an argument name").text
        self.expect_op("=")
        span = self.capture_expr(",)")
        bare_name = None
        bare_int = None
        if re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", span.text):
            bare_name = span.text
        elif re.fullmatch(r"\d+", span.text):
            bare_int = int(span.text)
        return name, ArgValue(span, bare_name, bare_int)


def parse_script(text: str) -> Script:
    return _Parser(text).parse_script()


# -- evaluation ------------------------------------------------------------


@dataclass
class Environment:
    """Declared objects in declaration order, queried by name."""

    source: str
    rings: dict = field(default_factory=dict)
    ideals: dict = field(default_factory=dict)
    elems: dict = field(default_factory=dict)
    ideal_rings: dict = field(default_factory=dict)
    elem_rings: dict = field(default_factory=dict)
    last_ring: Optional[str] = None

    def ring_of(self, name: str) -> Optional[str]:
        if name in self.ideal_rings:
            return self.ideal_rings[name]
        if name in self.elem_rings:
            return self.elem_rings[name]
        if name in self.rings:
            return name
        return None


def _reraise_at(exc: ParseError, span: ExprSpan, source: str) -> ParseError:
    """Map an expression-local parse error to script coordinates."""
    starts = _line_starts(source)
    rel = exc.column - 1 if exc.column else 0
    line, col = _locate(starts, span.offset + rel)
    return ParseError(str(exc).split(": ", 1)[-1], line, col)


def eval_expr(span: ExprSpan, ring: RingContext, source: str) -> Polynomial:
    try:
        return ring.parse(span.text)
    except ParseError as exc:
        raise _reraise_at(exc, span, source) from None


def _make_domain(stmt: RingStmt) -> Domain:
    if stmt.domain_text == "QQ":
        return QQ
    if stmt.domain_text == "ZZ":
        return ZZ
    return GF(stmt.gf_p)


def eval_ring(stmt: RingStmt, source: str) -> RingContext:
    dom = _make_domain(stmt)
    weights = stmt.weights or tuple(1 for _ in stmt.variables)
    if len(weights) != len(stmt.variables):
        raise PreconditionError(
            f"ring {stmt.name!r}: {len(weights)} weights for "
            f"{len(stmt.variables)} variables"
        )
    ambient = RingContext.create(stmt.variables, dom, weights, graded=True)
    rels = [eval_expr(s, ambient, source) for s in stmt.relations]
    if any(not r.is_homogeneous() for r in rels):
        ambient = RingContext.create(stmt.variables, dom, weights, graded=False)
        rels = [eval_expr(s, ambient, source) for s in stmt.relations]
    if not rels:
        return ambient
    return ambient.with_relations(rels)


def build_environment(script: Script) -> Environment:
    """Evaluate every declaration; tasks are left to the runner."""
    env = Environment(script.source)
    for stmt in script.statements:
        if isinstance(stmt, RingStmt):
            if stmt.name in env.rings:
                raise PreconditionError(f"ring {stmt.name!r} declared twice")
            env.rings[stmt.name] = eval_ring(stmt, script.source)
            env.last_ring = stmt.name
        elif isinstance(stmt, IdealStmt):
            ring = _current_ring(env, stmt.name, stmt.line)
            gens = tuple(eval_expr(s, ring, script.source) for s in stmt.exprs)
            _check_fresh(env, stmt.name)
            env.ideals[stmt.name] = ideal(ring, gens)
            env.ideal_rings[stmt.name] = env.last_ring
        elif isinstance(stmt, ElemStmt):
            ring = _current_ring(env, stmt.name, stmt.line)
            _check_fresh(env, stmt.name)
            env.elems[stmt.name] = eval_expr(stmt.expr, ring, script.source)
            env.elem_rings[stmt.name] = env.last_ring
    return env


def _current_ring(env: Environment, name: str, line: int) -> RingContext:
    if env.last_ring is None:
        raise PreconditionError(
            f"line {line}: {name!r} declared before any ring"
        )
    return env.rings[env.last_ring]


def _check_fresh(env: Environment, name: str) -> None:
    if name in env.ideals or name in env.elems or name in env.rings:
        raise PreconditionError(f"name {name!r} declared twice")
