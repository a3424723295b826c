"""Ordinals below omega^k as fixed-length Cantor normal form vectors.

An ordinal ``<c_{k-1}, ..., c_0>`` stands for
``omega^(k-1) * c_{k-1} + ... + omega * c_1 + c_0``.  Because the vector
has a fixed length, the ordinal order is plain lexicographic order, which
is exactly what :class:`tuple` comparison already does.
"""

from .errors import DomainError


class Ordinal(tuple):
    """Immutable coefficient vector, most significant coefficient first."""

    __slots__ = ()

    def __new__(cls, coeffs):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise DomainError("an ordinal needs at least one coefficient")
        for c in coeffs:
            if not isinstance(c, int) or isinstance(c, bool) or c < 0:
                raise DomainError(f"bad ordinal coefficient {c!r}")
        return super().__new__(cls, coeffs)

    @classmethod
    def finite(cls, k, n):
        return cls((0,) * (k - 1) + (n,))

    @classmethod
    def zero(cls, k):
        return cls((0,) * k)

    @property
    def k(self):
        return len(self)

    def is_zero(self):
        return not any(self)

    def __add__(self, other):
        return ord_add(self, other)

    def __sub__(self, other):
        return ord_sub(self, other)

    def __repr__(self):
        return "<" + ",".join(map(str, self)) + ">"


def _check_same_length(a, b):
    if len(a) != len(b):
        raise DomainError(f"ordinal length mismatch: {a!r} vs {b!r}")


def ord_add(a, b):
    """Ordinal sum ``a + b``.

    Every term of ``a`` below the leading power of ``b`` is absorbed.
    """
    _check_same_length(a, b)
    for i, c in enumerate(b):
        if c:
            return Ordinal(a[:i] + (a[i] + c,) + b[i + 1:])
    return Ordinal(a)


def ord_sub(b, g):
    """The unique ``d`` with ``g + d == b``; requires ``g <= b``."""
    _check_same_length(b, g)
    if g > b:
        raise DomainError(f"cannot subtract {g!r} from the smaller {b!r}")
    for i, (x, y) in enumerate(zip(b, g)):
        if x != y:
            return Ordinal((0,) * i + (x - y,) + b[i + 1:])
    return Ordinal.zero(len(b))
