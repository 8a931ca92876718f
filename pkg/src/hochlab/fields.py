"""Exact coefficient fields: the rationals and prime fields.

Scalars over Q are `fractions.Fraction`; scalars over F_p are ints in
[0, p).  A `Field` instance supplies the arithmetic so matrix code never
has to branch on the characteristic.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import SpecFileError

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all n < 3.3 * 10^24."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
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


class Field:
    """The rationals (p is None) or the prime field F_p."""

    __slots__ = ("p",)

    def __init__(self, p: int | None = None):
        if p is not None and not is_prime(p):
            raise ValueError(f"field order must be prime, got {p}")
        self.p = p

    # -- construction of scalars --

    @property
    def zero(self):
        return 0 if self.p else Fraction(0)

    @property
    def one(self):
        return 1 if self.p else Fraction(1)

    @property
    def characteristic(self) -> int:
        return self.p or 0

    def from_int(self, n: int):
        return n % self.p if self.p else Fraction(n)

    def coerce(self, x):
        """Accept ints, Fractions and num/den strings."""
        if isinstance(x, str):
            return self.parse(x)
        if self.p:
            if isinstance(x, Fraction):
                if x.denominator == 1:
                    return x.numerator % self.p
                return self.div(self.from_int(x.numerator), self.from_int(x.denominator))
            return int(x) % self.p
        return Fraction(x)

    def parse(self, text: str):
        """Parse a scalar literal: "3", "-2/7", or a residue over F_p."""
        text = text.strip()
        try:
            if "/" in text:
                num, den = text.split("/")
                frac = Fraction(int(num), int(den))
            else:
                frac = Fraction(int(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise SpecFileError(f"bad scalar literal {text!r}") from exc
        return self.coerce(frac)

    def format(self, x) -> str:
        if self.p:
            return str(x % self.p)
        x = Fraction(x)
        return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)

    # -- arithmetic --

    def add(self, a, b):
        return (a + b) % self.p if self.p else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p else a - b

    def neg(self, a):
        return (-a) % self.p if self.p else -a

    def mul(self, a, b):
        return (a * b) % self.p if self.p else a * b

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p) if self.p else Fraction(1) / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return (a % self.p == 0) if self.p else a == 0

    # -- identity and description --

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "Q" if self.p is None else f"Fp:{self.p}"

    @staticmethod
    def parse_tag(tag: str) -> "Field":
        """Parse a field tag: "Q" or "Fp:<prime>"."""
        tag = tag.strip()
        if tag == "Q":
            return QQ
        if tag.startswith("Fp:"):
            try:
                p = int(tag[3:])
            except ValueError as exc:
                raise SpecFileError(f"bad field tag {tag!r}") from exc
            try:
                return Field(p)
            except ValueError as exc:
                raise SpecFileError(str(exc)) from exc
        raise SpecFileError(f"bad field tag {tag!r}; expected 'Q' or 'Fp:<prime>'")


QQ = Field()


def GF(p: int) -> Field:
    return Field(p)
