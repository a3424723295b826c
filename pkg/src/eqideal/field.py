"""Exact coefficient fields: the rationals and prime fields GF(p).

Coefficients are plain Python objects supporting ``+ - * /`` so the
polynomial kernels never need to know which field they work over.
"""

from fractions import Fraction

from .errors import DomainError


class Rationals:
    name = "q"

    def coerce(self, x):
        return Fraction(x)

    def from_ratio(self, num, den=1):
        if den == 0:
            raise DomainError("zero denominator")
        return Fraction(num, den)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("q")

    def __repr__(self):
        return "Rationals()"


class GF:
    """A residue modulo a prime, always stored in ``[0, p)``."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.p = p
        self.v = v % p

    def _lift(self, other):
        if isinstance(other, GF):
            if other.p != self.p:
                raise DomainError("mixing different prime fields")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else GF(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else GF(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else GF(o - self.v, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else GF(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return GF(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return GF(o, self.p) / self

    def __neg__(self):
        return GF(-self.v, self.p)

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return False
        return (self.v - o) % self.p == 0

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __str__(self):
        return str(self.v)

    def __repr__(self):
        return f"GF({self.v}, {self.p})"


class PrimeField:
    def __init__(self, p):
        if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise DomainError(f"{p} is not prime")
        self.p = p
        self.name = f"gf:{p}"

    def coerce(self, x):
        if isinstance(x, GF):
            return x
        x = Fraction(x)
        return GF(x.numerator, self.p) / x.denominator

    def from_ratio(self, num, den=1):
        if den % self.p == 0:
            raise DomainError(f"denominator {den} vanishes in GF({self.p})")
        return GF(num, self.p) / den

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("gf", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


QQ = Rationals()


def field_from_name(name):
    if name == "q":
        return QQ
    if name.startswith("gf:"):
        try:
            p = int(name[3:])
        except ValueError:
            raise DomainError(f"bad field {name!r}") from None
        return PrimeField(p)
    raise DomainError(f"unknown field {name!r}; use q or gf:<p>")
