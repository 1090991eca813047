"""Exact scalar arithmetic over prime fields F_p and the rationals."""

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Union

from sympy import isprime
from sympy.ntheory import n_order

from ..errors import FieldMismatch, InstanceError, NotInvertibleError

Scalar = Union[int, Fraction]

PRIME = "prime"
RATIONAL = "rational"
MAX_PRIME = 2**31


@dataclass(frozen=True)
class FieldSpec:
    """The base field K: either F_p (residues stored as ints in [0, p)) or Q.

    Attributes:
        kind: "prime" or "rational"
        p: the characteristic when kind is "prime", otherwise None
    """

    kind: str
    p: Optional[int] = None

    def __post_init__(self):
        if self.kind == PRIME:
            if not isinstance(self.p, int) or self.p < 2 or self.p >= MAX_PRIME:
                raise InstanceError(f"prime field needs 2 <= p < 2^31, got {self.p!r}")
            if not isprime(self.p):
                raise InstanceError(f"{self.p} is not prime")
        elif self.kind == RATIONAL:
            if self.p is not None:
                raise InstanceError("rational field takes no p")
        else:
            raise InstanceError(f"unknown field kind {self.kind!r}")

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(PRIME, p)

    @classmethod
    def rational(cls) -> "FieldSpec":
        return cls(RATIONAL)

    @property
    def is_prime(self) -> bool:
        return self.kind == PRIME

    @property
    def characteristic(self) -> int:
        return self.p if self.is_prime else 0

    @property
    def zero(self) -> Scalar:
        return 0 if self.is_prime else Fraction(0)

    @property
    def one(self) -> Scalar:
        return 1 if self.is_prime else Fraction(1)

    def __str__(self) -> str:
        return f"F_{self.p}" if self.is_prime else "Q"

    def check_same(self, other: "FieldSpec") -> None:
        if self != other:
            raise FieldMismatch(f"field mismatch: {self} vs {other}")

    # -- conversion -----------------------------------------------------

    def element(self, value) -> Scalar:
        """Coerce an int, Fraction or scalar string into a field element."""
        if isinstance(value, str):
            return self.parse(value)
        if self.is_prime:
            if isinstance(value, Fraction):
                return self.div(value.numerator % self.p, value.denominator % self.p)
            return int(value) % self.p
        return Fraction(value)

    def parse(self, text: str) -> Scalar:
        text = text.strip()
        try:
            value = Fraction(text)
        except (ValueError, ZeroDivisionError) as e:
            raise InstanceError(f"bad scalar {text!r}: {e}")
        if self.is_prime:
            den = value.denominator % self.p
            if den == 0:
                raise InstanceError(
                    f"scalar {text!r} has denominator divisible by {self.p}"
                )
            return self.div(value.numerator % self.p, den)
        return value

    def format(self, a: Scalar) -> str:
        return str(a)

    # -- arithmetic -----------------------------------------------------

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return (a + b) % self.p if self.is_prime else a + b

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return (a - b) % self.p if self.is_prime else a - b

    def neg(self, a: Scalar) -> Scalar:
        return (-a) % self.p if self.is_prime else -a

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return (a * b) % self.p if self.is_prime else a * b

    def inv(self, a: Scalar) -> Scalar:
        if self.is_zero(a):
            raise NotInvertibleError(f"0 has no inverse in {self}")
        if self.is_prime:
            return pow(a, self.p - 2, self.p)
        return 1 / a

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    def pow(self, a: Scalar, n: int) -> Scalar:
        if n < 0:
            return self.pow(self.inv(a), -n)
        if self.is_prime:
            return pow(a, n, self.p)
        return a**n

    def is_zero(self, a: Scalar) -> bool:
        return a == 0

    def reduce(self, a: Scalar) -> Scalar:
        """Normalize the result of an unreduced integer accumulation."""
        return a % self.p if self.is_prime else a

    # -- enumeration ----------------------------------------------------

    def elements(self) -> Iterator[Scalar]:
        if not self.is_prime:
            raise FieldMismatch("Q cannot be enumerated")
        return iter(range(self.p))

    def random_element(self, rng: random.Random, bound: int = 3) -> Scalar:
        if self.is_prime:
            return rng.randrange(self.p)
        return Fraction(rng.randint(-bound, bound))

    def order_of_unit(self, a: Scalar) -> Optional[int]:
        """Multiplicative order of a in F_p; None over Q unless a is +1 or -1."""
        if self.is_prime:
            return n_order(a, self.p)
        if a == 1:
            return 1
        if a == -1:
            return 2
        return None
