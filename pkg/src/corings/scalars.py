"""Exact scalar fields: the rationals and prime fields.

Rational scalars are `fractions.Fraction` values (always in lowest terms
with positive denominator); prime-field scalars are plain ints normalized
to the range [0, p).  All arithmetic goes through the `Field` object so
prime-field values stay normalized and mixed-field operations are caught.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class FieldMismatch(ValueError):
    """Raised when operands live in different scalar fields."""


class DimensionMismatch(ValueError):
    """Raised when matrix/vector shapes are incompatible."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Field:
    """The rationals (p is None) or the prime field of order p."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")

    # -- constants ---------------------------------------------------------

    @property
    def zero(self):
        return 0 if self.p is not None else Fraction(0)

    @property
    def one(self):
        return 1 if self.p is not None else Fraction(1)

    # -- coercion ----------------------------------------------------------

    def of(self, v):
        """Coerce an int, Fraction or "a/b" string into this field."""
        if isinstance(v, str):
            return self.parse(v)
        if self.p is not None:
            if isinstance(v, Fraction):
                if v.denominator != 1:
                    raise ValueError(f"{v} is not an integer residue")
                v = v.numerator
            return v % self.p
        return Fraction(v)

    def parse(self, tok: str):
        tok = tok.strip()
        if self.p is not None:
            return int(tok) % self.p
        if "/" in tok:
            num, den = tok.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(int(tok))

    def format(self, x) -> str:
        if self.p is not None:
            return str(x % self.p)
        x = Fraction(x)
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"

    # -- arithmetic --------------------------------------------------------

    def add(self, a, b):
        return (a + b) % self.p if self.p is not None else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p is not None else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.p is not None else a * b

    def neg(self, a):
        return (-a) % self.p if self.p is not None else -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.p is not None:
            return pow(a, self.p - 2, self.p)
        return 1 / Fraction(a)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def random(self, rng, span: int = 3):
        """Small deterministic scalar from a seeded rng."""
        v = rng.randrange(-span, span + 1)
        return self.of(v)

    def __repr__(self):
        return "QQ" if self.p is None else f"GF({self.p})"


QQ = Field()


def GF(p: int) -> Field:
    return Field(p)
