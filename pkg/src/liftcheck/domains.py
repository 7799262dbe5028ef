"""Exact coefficient domains: integers, rationals, prime fields.

Raw values are plain ``int`` (integers and prime-field elements, the latter
kept in ``[0, p)``) and ``fractions.Fraction`` (always in lowest terms with a
positive denominator).  A :class:`Scalar` wraps a value together with its
domain so that binary operations can check the modulus; polynomial internals
work on raw values through the domain object for speed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DomainError

RawValue = Union[int, Fraction]

_MODULUS_CAP = 1 << 31


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; bases 2,3,5,7 suffice below 3.2e9."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Domain:
    """Common interface for exact coefficient domains."""

    name: str
    is_field: bool
    characteristic: int

    def normalize(self, v) -> RawValue:
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def div(self, a, b):
        """Exact division; raises DomainError when undefined or inexact."""
        raise NotImplementedError

    def invert(self, a):
        return self.div(self.one, a)

    def is_zero(self, a) -> bool:
        return a == self.zero

    def is_unit(self, a) -> bool:
        raise NotImplementedError

    def to_str(self, a) -> str:
        return str(a)

    @property
    def zero(self):
        return self.normalize(0)

    @property
    def one(self):
        return self.normalize(1)

    def __repr__(self) -> str:
        return self.name


class IntegerDomain(Domain):
    name = "ZZ"
    is_field = False
    characteristic = 0

    def normalize(self, v) -> int:
        if isinstance(v, bool) or not isinstance(v, int):
            if isinstance(v, Fraction) and v.denominator == 1:
                return int(v)
            raise DomainError(f"not an integer: {v!r}")
        return v

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def div(self, a, b):
        if b == 0:
            raise DomainError("division by zero")
        q, r = divmod(a, b)
        if r != 0:
            raise DomainError(f"inexact integer division {a}/{b}")
        return q

    def is_unit(self, a) -> bool:
        return a in (1, -1)


class RationalDomain(Domain):
    name = "QQ"
    is_field = True
    characteristic = 0

    def normalize(self, v) -> Fraction:
        # Fraction keeps lowest terms and a positive denominator.
        return Fraction(v)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def div(self, a, b):
        if b == 0:
            raise DomainError("division by zero")
        return Fraction(a) / b

    def is_unit(self, a) -> bool:
        return a != 0

    def to_str(self, a) -> str:
        f = Fraction(a)
        if f.denominator == 1:
            return str(f.numerator)
        return f"{f.numerator}/{f.denominator}"


class PrimeField(Domain):
    """F_p for a prime p < 2^31; elements are ints in [0, p)."""

    is_field = True

    def __init__(self, p: int):
        if not isinstance(p, int) or p >= _MODULUS_CAP:
            raise DomainError(f"modulus must be an int below 2^31, got {p!r}")
        if not is_prime(p):
            raise DomainError(f"modulus {p} is not prime")
        self.p = p
        self.name = f"GF({p})"
        self.characteristic = p

    def normalize(self, v) -> int:
        if isinstance(v, Fraction):
            return self.div(self.normalize(v.numerator), self.normalize(v.denominator))
        if isinstance(v, bool) or not isinstance(v, int):
            raise DomainError(f"not a prime-field value: {v!r}")
        return v % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def div(self, a, b):
        if b % self.p == 0:
            raise DomainError(f"denominator not invertible mod {self.p}")
        return a * pow(b, -1, self.p) % self.p

    def is_unit(self, a) -> bool:
        return a % self.p != 0

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))


ZZ = IntegerDomain()
QQ = RationalDomain()

_gf_cache: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    """Cached prime-field constructor."""
    try:
        return _gf_cache[p]
    except KeyError:
        field = PrimeField(p)
        _gf_cache[p] = field
        return field


@dataclass(frozen=True)
class Scalar:
    """A domain-tagged exact scalar; binary ops require matching domains."""

    domain: Domain
    value: RawValue

    @staticmethod
    def of(domain: Domain, v) -> "Scalar":
        return Scalar(domain, domain.normalize(v))

    def _check(self, other: "Scalar") -> None:
        if self.domain != other.domain:
            raise DomainError(
                f"domain mismatch: {self.domain!r} vs {other.domain!r}"
            )

    def __add__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(self.domain, self.domain.add(self.value, other.value))

    def __sub__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(self.domain, self.domain.sub(self.value, other.value))

    def __mul__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(self.domain, self.domain.mul(self.value, other.value))

    def __truediv__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(self.domain, self.domain.div(self.value, other.value))

    def __neg__(self) -> "Scalar":
        return Scalar(self.domain, self.domain.neg(self.value))

    @property
    def is_zero(self) -> bool:
        return self.domain.is_zero(self.value)

    def __str__(self) -> str:
        return self.domain.to_str(self.value)
