"""Monomials as exponent tuples, and global monomial orders.

A monomial on n variables is a tuple of n non-negative ints.  Orders produce
sort keys: larger key means larger monomial.  All orders here are global
(1 is smallest) and multiplicative; property tests exercise both facts.
"""

from __future__ import annotations

from dataclasses import dataclass, field

Mon = tuple[int, ...]


def mon_mul(a: Mon, b: Mon) -> Mon:
    return tuple(x + y for x, y in zip(a, b))


def mon_divides(a: Mon, b: Mon) -> bool:
    """True when a | b, i.e. every exponent of a is at most that of b."""
    return all(x <= y for x, y in zip(a, b))


def mon_div(a: Mon, b: Mon) -> Mon:
    """Quotient a / b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))

def mon_lcm(a: Mon, b: Mon) -> Mon:
    return tuple(max(x, y) for x, y in zip(a, b))


def mon_gcd_is_one(a: Mon, b: Mon) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def mon_degree(a: Mon, weights: tuple[int, ...]) -> int:
    return sum(e * w for e, w in zip(a, weights))


def _revneg(sub: tuple[int, ...]) -> tuple[int, ...]:
    # grevlex tiebreak: last nonzero entry of the difference negative.
    return tuple(-e for e in reversed(sub))


@dataclass(frozen=True)
class MonomialOrder:
    """grevlex (default), lex, or a two-block elimination order.

    ``block`` holds the eliminated variable indices (ascending).  The block
    order compares the eliminated sub-monomial grevlex-first, so any monomial
    involving an eliminated variable beats every monomial free of them; that
    is the property elimination relies on.
    """

    kind: str = "grevlex"
    block: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "block"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        if self.kind == "block" and not self.block:
            raise ValueError("block order needs eliminated indices")

    def sort_key(self, mon: Mon, weights: tuple[int, ...]):
        if self.kind == "grevlex":
            return (mon_degree(mon, weights), _revneg(mon))
        if self.kind == "lex":
            return mon
        inside = frozenset(self.block)
        elim = tuple(e for i, e in enumerate(mon) if i in inside)
        elim_w = tuple(w for i, w in enumerate(weights) if i in inside)
        rest = tuple(e for i, e in enumerate(mon) if i not in inside)
        rest_w = tuple(w for i, w in enumerate(weights) if i not in inside)
        return (
            mon_degree(elim, elim_w),
            _revneg(elim),
            mon_degree(rest, rest_w),
            _revneg(rest),
        )


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def elimination_order(indices) -> MonomialOrder:
    return MonomialOrder("block", tuple(sorted(indices)))
