"""Monomials and polynomials under the lexicographic term order.

Monomials are tuples of ``(variable, degree)`` pairs sorted by variable,
largest first (see :mod:`eqideal._pykernels`).  Because of that layout,
``m1 < m2`` on the raw tuples is exactly the term order: the largest
variable whose degrees differ decides.
"""

from collections.abc import Mapping
from fractions import Fraction

from . import kernels as K
from .domain import LocalEmbedding, ca1_extends
from .errors import DomainError

ONE = K.ONE


def monomial(items=()):
    """Build a monomial from a mapping or pairs ``variable -> degree``."""
    if isinstance(items, Mapping):
        items = items.items()
    acc = {}
    for v, d in items:
        if not isinstance(d, int) or d < 0:
            raise DomainError(f"bad degree {d!r}")
        acc[v] = acc.get(v, 0) + d
    return tuple(sorted(((v, d) for v, d in acc.items() if d), reverse=True))


def mono_vars(m):
    return frozenset(v for v, _ in m)


def mono_deg(m, a):
    for v, d in m:
        if v == a:
            return d
    return 0


def mono_cmp_lex(D, m, m2):
    """-1, 0 or 1 as ``m`` is below, equal to or above ``m2``."""
    return (m > m2) - (m < m2)


def mono_divides(m, m2):
    return K.mono_divides(m, m2)


def mono_div(m2, m):
    q = K.mono_div(m2, m)
    if q is None:
        raise DomainError("monomial does not divide")
    return q


def mono_lcm(m, m2):
    return K.mono_lcm(m, m2)


def mono_mul(m, m2):
    return K.mono_mul(m, m2)


def _coeff(c):
    # Plain ints would turn into floats under division.
    return Fraction(c) if type(c) is int else c


class Polynomial:
    """Immutable sparse polynomial; ``terms`` is sorted by monomial, descending."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=()):
        acc = {}
        for m, c in terms:
            m = monomial(m)
            c = _coeff(c)
            acc[m] = acc[m] + c if m in acc else c
        self.terms = tuple(sorted(((m, c) for m, c in acc.items() if c), reverse=True))
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        p = cls.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c=1):
        c = _coeff(c)
        return cls._raw(((ONE, c),) if c else ())

    @classmethod
    def variable(cls, a, coeff=1, degree=1):
        return cls.monomial(((a, degree),), coeff)

    @classmethod
    def monomial(cls, m, coeff=1):
        coeff = _coeff(coeff)
        return cls._raw(((m, coeff),) if coeff else ())

    # -- leading data ----------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _head(self):
        if not self.terms:
            raise DomainError("the zero polynomial has no leading term")
        return self.terms[0]

    @property
    def lm(self):
        return self._head()[0]

    @property
    def lc(self):
        return self._head()[1]

    @property
    def lt(self):
        return self._head()

    def monomials(self):
        return [m for m, _ in self.terms]

    def coefficient(self, m):
        for mm, c in self.terms:
            if mm == m:
                return c
        return 0

    @property
    def vars(self):
        return frozenset(v for m, _ in self.terms for v, _ in m)

    def total_degree(self):
        return max((K.mono_degree(m) for m, _ in self.terms), default=0)

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        return Polynomial._raw(K.terms_add(self.terms, other.terms))

    def __sub__(self, other):
        return Polynomial._raw(K.terms_add(self.terms, K.terms_scale(other.terms, -1)))

    def __neg__(self):
        return Polynomial._raw(K.terms_scale(self.terms, -1))

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return Polynomial._raw(K.terms_mul(self.terms, other.terms))
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c, h=ONE):
        """``c * h * self`` for a field element ``c`` and monomial ``h``."""
        return Polynomial._raw(K.terms_scale(self.terms, _coeff(c), h))

    def addmul(self, c, h, g):
        """``self + c * h * g`` in a single merge."""
        return Polynomial._raw(K.terms_addmul(self.terms, c, h, g.terms))

    def monic(self):
        if not self.terms:
            return self
        return self.scale(1 / self.lc) if self.lc != 1 else self

    # -- renaming --------------------------------------------------------
    def rename_monotone(self, mapping):
        """Rename by a strictly order-preserving map; no re-sorting."""
        return Polynomial._raw(K.terms_rename(self.terms, mapping))

    def substitute(self, mapping):
        """Rename by an arbitrary injective map (re-sorts)."""
        return Polynomial(
            (tuple(sorted(((mapping[v], d) for v, d in m), reverse=True)), c)
            for m, c in self.terms
        )

    # -- identity --------------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def __repr__(self):
        return f"Polynomial({self.terms!r})"


def leading(D, f):
    """``(lm, lc, lt)`` of a nonzero polynomial."""
    m, c = f._head()
    return m, c, (m, c)


def add(f, g):
    return f + g


def sub(f, g):
    return f - g


def mul(f, g):
    return f * g


def scale(f, c):
    return f.scale(c)


def _is_monotone(pairs):
    pairs = sorted(pairs)
    return all(b1 < b2 for (_, b1), (_, b2) in zip(pairs, pairs[1:]))


def rename(D, p, f):
    """Apply the local embedding ``p`` to every variable of ``f``."""
    if not isinstance(p, Mapping):
        p = dict(p)
    missing = f.vars - set(p)
    if missing:
        raise DomainError(f"variables {sorted(missing)!r} are not covered by the map")
    if not ca1_extends(D, p):
        raise DomainError(f"{dict(p)!r} does not extend to an embedding of {D}")
    if _is_monotone(p.items()):
        return f.rename_monotone(dict(p))
    return f.substitute(dict(p))


def rename_monomial(p, m):
    return tuple((p[v], d) for v, d in m)


def monotone_divisor_maps(D, m, m2):
    """Maps from vars(m) into vars(m2) witnessing a renamed copy of m dividing m2.

    Yields order-preserving injections passing CA1 with matching degree
    bounds, in lexicographic order of the image tuple (ascending sources).
    """
    src = sorted(m)
    dst = sorted(m2)
    ns, nd = len(src), len(dst)
    if ns > nd:
        return
    chosen = []

    def go(i, start):
        if i == ns:
            pairs = [(a, b) for (a, _), (b, _) in zip(src, chosen)]
            if D.ca1(pairs):
                yield LocalEmbedding(pairs)
            return
        a, da = src[i]
        for j in range(start, nd - (ns - i) + 1):
            if dst[j][1] >= da:
                chosen.append(dst[j])
                yield from go(i + 1, j + 1)
                chosen.pop()

    yield from go(0, 0)


def mono_wqo_leq(D, m, m2):
    """A local embedding ``p`` with ``p(m) | m2``, or None."""
    if K.mono_degree(m) > K.mono_degree(m2):
        return None
    return next(monotone_divisor_maps(D, m, m2), None)
