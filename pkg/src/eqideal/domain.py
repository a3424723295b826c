"""Variable domains and the two computability primitives.

A domain is one of ``Ord(k)`` (the ordinal omega^k), ``Fin(d)`` (a finite
chain with only the identity embedding), ``Lex(A, B)`` (lexicographic
product), ``Rat`` (the rationals) and ``Eq`` (pure equality).  Elements are
plain immutable Python values chosen so that native comparison is the
domain order: :class:`~eqideal.ordinal.Ordinal` vectors, ``int`` for Fin,
2-tuples for Lex and :class:`fractions.Fraction` for Rat/Eq.

Each domain answers three questions about finite partial maps:

* ``ca1(p)``: is ``p`` the restriction of an embedding?
* ``ca2(B, B2)``: a finite set of pairs of local embeddings of ``B`` and
  ``B2`` through which every such pair factors via a common embedding;
* ``extend(p, C)``: a deterministic extension of ``p`` to ``C``.
"""

import itertools
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, NoExtensionError
from .ordinal import Ordinal, ord_add, ord_sub


class LocalEmbedding(Mapping):
    """An immutable finite injective map, stored as a graph sorted by source."""

    __slots__ = ("_map", "graph")

    def __init__(self, pairs=()):
        if isinstance(pairs, Mapping):
            pairs = pairs.items()
        m = {}
        for a, b in pairs:
            if a in m and m[a] != b:
                raise DomainError(f"{a!r} is mapped twice")
            m[a] = b
        if len(set(m.values())) != len(m):
            raise DomainError("a local embedding must be injective")
        self._map = m
        self.graph = tuple(sorted(m.items()))

    @classmethod
    def identity(cls, points):
        return cls((a, a) for a in points)

    def __getitem__(self, key):
        return self._map[key]

    def __iter__(self):
        return (a for a, _ in self.graph)

    def __len__(self):
        return len(self.graph)

    def __hash__(self):
        return hash(self.graph)

    def __eq__(self, other):
        if isinstance(other, LocalEmbedding):
            return self.graph == other.graph
        return super().__eq__(other)

    def __lt__(self, other):
        return self.graph < other.graph

    @property
    def image(self):
        return frozenset(self._map.values())

    def is_identity(self):
        return all(a == b for a, b in self.graph)

    def compose(self, inner):
        """``self`` after ``inner``; ``inner``'s image must lie in our domain."""
        return LocalEmbedding((a, self._map[b]) for a, b in inner.graph)

    def restrict(self, points):
        return LocalEmbedding((a, self._map[a]) for a in points)

    def __repr__(self):
        return "{" + ", ".join(f"{a!r}->{b!r}" for a, b in self.graph) + "}"


def _as_pairs(p):
    if isinstance(p, Mapping):
        return sorted(p.items())
    return sorted(p)


class Domain:
    """Common interface; concrete subclasses below."""

    atoms = False  # True for Rat/Eq, which the engine never sees directly

    def check(self, e):
        raise NotImplementedError

    def contains_atoms(self):
        return self.atoms

    def ca1(self, pairs):
        raise NotImplementedError

    def ca2(self, left, right):
        raise NotImplementedError

    def extend(self, pairs, points):
        raise NotImplementedError

    def orbit_reps(self, n):
        raise NotImplementedError

    def canonical(self, t):
        raise NotImplementedError


@dataclass(frozen=True)
class Ord(Domain):
    k: int = 1

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 1:
            raise DomainError(f"ord[k] needs k >= 1, got {self.k!r}")

    def __str__(self):
        return f"ord[{self.k}]"

    def check(self, e):
        if (
            not isinstance(e, tuple)
            or len(e) != self.k
            or not all(isinstance(c, int) and not isinstance(c, bool) and c >= 0 for c in e)
        ):
            raise DomainError(f"{e!r} is not an element of {self}")
        return e

    def finite(self, n):
        return Ordinal.finite(self.k, n)

    def ca1(self, pairs):
        pairs = sorted(pairs)
        if not pairs:
            return True
        lo, img = pairs[0]
        if img < lo:
            return False
        for (a, pa), (b, pb) in zip(pairs, pairs[1:]):
            if pb <= pa or ord_sub(b, a) > ord_sub(pb, pa):
                return False
        return True

    def ca2(self, left, right):
        return _ord_ca2(self.k, tuple(sorted(left)), tuple(sorted(right)))

    def extend(self, pairs, points):
        pairs = sorted(pairs)
        known = dict(pairs)
        out = dict(known)
        mapped = [a for a, _ in pairs]
        for c in sorted(set(points) - set(known)):
            below = [a for a in mapped if a < c]
            if below:
                lo = below[-1]
                out[c] = ord_add(known[lo], ord_sub(c, lo))
            else:
                out[c] = c
        return out

    def orbit_reps(self, n):
        return [tuple(self.finite(r) for r in pat) for pat in rank_patterns(n)]

    def canonical(self, t):
        return tuple(self.finite(r) for r in rank_collapse(t))


@dataclass(frozen=True)
class Fin(Domain):
    d: int = 1

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 1:
            raise DomainError(f"fin[d] needs d >= 1, got {self.d!r}")

    def __str__(self):
        return f"fin[{self.d}]"

    def check(self, e):
        if not isinstance(e, int) or isinstance(e, bool) or not 0 <= e < self.d:
            raise DomainError(f"{e!r} is not an element of {self}")
        return e

    def ca1(self, pairs):
        return all(a == b for a, b in pairs)

    def ca2(self, left, right):
        return [(LocalEmbedding.identity(left), LocalEmbedding.identity(right))]

    def extend(self, pairs, points):
        if not self.ca1(pairs):
            raise NoExtensionError(f"only the identity embeds {self}")
        return {c: c for c in points}

    def orbit_reps(self, n):
        return list(itertools.product(range(self.d), repeat=n))

    def canonical(self, t):
        return tuple(t)


@dataclass(frozen=True)
class Lex(Domain):
    left: Domain
    right: Domain

    def __str__(self):
        return f"lex({self.left},{self.right})"

    @property
    def atoms(self):
        return self.left.contains_atoms() or self.right.contains_atoms()

    def contains_atoms(self):
        return self.atoms

    def check(self, e):
        if not isinstance(e, tuple) or len(e) != 2:
            raise DomainError(f"{e!r} is not an element of {self}")
        self.left.check(e[0])
        self.right.check(e[1])
        return e

    def _split(self, pairs):
        """First-coordinate map and fiber maps, or None if p mixes fibers."""
        first = {}
        fibers = {}
        for (a, x), (b, y) in pairs:
            if first.setdefault(a, b) != b:
                return None
            fibers.setdefault(a, []).append((x, y))
        if len(set(first.values())) != len(first):
            return None
        return first, fibers

    def ca1(self, pairs):
        split = self._split(pairs)
        if split is None:
            return False
        first, fibers = split
        return self.left.ca1(first.items()) and all(
            self.right.ca1(f) for f in fibers.values()
        )

    def ca2(self, left, right):
        return _lex_ca2(self, tuple(sorted(set(left))), tuple(sorted(set(right))))

    def extend(self, pairs, points):
        split = self._split(pairs)
        if split is None:
            raise NoExtensionError("map does not respect first coordinates")
        first, fibers = split
        points = sorted(set(points))
        new_first = self.left.extend(first.items(), {a for a, _ in points})
        out = {}
        for a, group in itertools.groupby(points, key=lambda e: e[0]):
            zs = [x for _, x in group]
            f = self.right.extend(fibers.get(a, []), zs)
            for x in zs:
                out[(a, x)] = (new_first[a], f[x])
        return out

    def orbit_reps(self, n):
        reps = []
        for firsts in self.left.orbit_reps(n):
            groups = _groups(firsts)
            choices = [self.right.orbit_reps(len(pos)) for pos in groups]
            for combo in itertools.product(*choices):
                reps.append(_assemble(firsts, groups, combo))
        return reps

    def canonical(self, t):
        firsts = self.left.canonical([a for a, _ in t])
        groups = _groups(firsts)
        fibers = [self.right.canonical([t[i][1] for i in pos]) for pos in groups]
        return _assemble(firsts, groups, fibers)


def _groups(values):
    """Positions grouped by value, groups ordered by value."""
    by = {}
    for i, v in enumerate(values):
        by.setdefault(v, []).append(i)
    return [by[v] for v in sorted(by)]


def _assemble(firsts, groups, fibers):
    out = [None] * len(firsts)
    for pos, fib in zip(groups, fibers):
        for i, x in zip(pos, fib):
            out[i] = (firsts[i], x)
    return tuple(out)


class _Atoms(Domain):
    """Shared code for the two atom domains handled by the frontends."""

    atoms = True

    def check(self, e):
        if isinstance(e, bool) or not isinstance(e, (int, Fraction)):
            raise DomainError(f"{e!r} is not an element of {self}")
        return Fraction(e)

    def ca2(self, left, right):
        raise DomainError(f"{self} has no direct pair presentation; reduce first")


@dataclass(frozen=True)
class Rat(_Atoms):
    def __str__(self):
        return "q"

    def ca1(self, pairs):
        pairs = sorted(pairs)
        return all(pb > pa for (_, pa), (_, pb) in zip(pairs, pairs[1:]))

    def extend(self, pairs, points):
        # Rationals are dense, so new points slot between mapped neighbours.
        pairs = sorted(pairs)
        out = dict(pairs)
        fresh = sorted(set(points) - set(out))
        if not pairs:
            return {c: c for c in points}
        src = [a for a, _ in pairs]
        for i in range(len(src) + 1):
            lo = src[i - 1] if i else None
            hi = src[i] if i < len(src) else None
            group = [c for c in fresh if (lo is None or c > lo) and (hi is None or c < hi)]
            if not group:
                continue
            if lo is None:
                base = out[hi] - len(group) - 1
                step = Fraction(1)
            elif hi is None:
                base = out[lo]
                step = Fraction(1)
            else:
                base = out[lo]
                step = (out[hi] - out[lo]) / (len(group) + 1)
            for j, c in enumerate(group, 1):
                out[c] = base + j * step
        return out

    def orbit_reps(self, n):
        return [tuple(Fraction(r) for r in pat) for pat in rank_patterns(n)]

    def canonical(self, t):
        return tuple(Fraction(r) for r in rank_collapse(t))


@dataclass(frozen=True)
class Eq(_Atoms):
    def __str__(self):
        return "eq"

    def ca1(self, pairs):
        return True  # LocalEmbedding already enforces injectivity

    def extend(self, pairs, points):
        out = dict(pairs)
        used = set(out.values())
        for c in sorted(set(points) - set(out)):
            out[c] = c if c not in used else max(used) + 1
            used.add(out[c])
        return out

    def orbit_reps(self, n):
        return [tuple(Fraction(v) for v in s) for s in _restricted_growth(n)]

    def canonical(self, t):
        seen = {}
        return tuple(Fraction(seen.setdefault(v, len(seen))) for v in t)


def rank_collapse(t):
    ranks = {v: i for i, v in enumerate(sorted(set(t)))}
    return tuple(ranks[v] for v in t)


def rank_patterns(n):
    """All n-tuples over {0..m-1} using every value (ordered set partitions)."""
    out = []
    for m in range(n + 1) if n == 0 else range(1, n + 1):
        for t in itertools.product(range(m), repeat=n):
            if len(set(t)) == m:
                out.append(t)
    return out


def _restricted_growth(n):
    out = []

    def go(prefix, top):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for v in range(top + 2):
            go(prefix + [v], max(top, v))

    go([], -1)
    return out


# ---------------------------------------------------------------------------
# Pair presentations over omega^k.
#
# A pair (pi, pi') of local embeddings of B and B' is summarised by how the
# images of B and B' interleave (the "pattern", with possible coincidences)
# plus the vector of gaps between consecutive image values.  For a fixed
# pattern, (pi, pi') factors through (rho, rho') exactly when its gap vector
# dominates rho's gap vector componentwise, because a map of finite chains
# extends to an embedding iff the first value and every consecutive gap do
# not shrink.  So one presentation is: for each pattern, the componentwise
# minimal feasible gap vectors.  Feasibility constraints say that the gaps
# covering two consecutive points of one side add up (as ordinals) to at
# least the gap between those points in B or B'.


def _drop_points(r):
    """Values x <= r where the residual requirement ``r - x`` changes."""
    k = len(r)
    pts = [r]
    for i in range(k):
        for x in range(r[i]):
            pts.append(Ordinal(r[:i] + (x,) + (0,) * (k - i - 1)))
    return pts


def _patterns(n, m):
    """Merges of 0..n-1 and 0..m-1 as event lists (i or None, j or None)."""
    if n == 0 and m == 0:
        yield ()
        return
    if n:
        for rest in _patterns(n - 1, m):
            yield rest + ((n - 1, None),)
    if m:
        for rest in _patterns(n, m - 1):
            yield rest + ((None, m - 1),)
    if n and m:
        for rest in _patterns(n - 1, m - 1):
            yield rest + ((n - 1, m - 1),)


def _residual(r, d):
    if r is None:
        return None
    return Ordinal.zero(len(r)) if d >= r else ord_sub(r, d)


def _minimal_gap_vectors(k, sides, pattern):
    zero = Ordinal.zero(k)
    one = Ordinal.finite(k, 1)
    points = sides
    found = []

    def next_req(s, idx):
        pts = points[s]
        if idx + 1 < len(pts):
            return ord_sub(pts[idx + 1], pts[idx])
        return None

    def go(pos, res, acc):
        if pos == len(pattern):
            found.append(tuple(acc))
            return
        event = pattern[pos]
        lb = zero if pos == 0 else one
        for s in (0, 1):
            if event[s] is not None and res[s] > lb:
                lb = res[s]
        cands = {lb}
        for s in (0, 1):
            if res[s] is not None:
                cands.update(c for c in _drop_points(res[s]) if c > lb)
        for d in sorted(cands):
            new = [_residual(res[0], d), _residual(res[1], d)]
            for s in (0, 1):
                if event[s] is not None:
                    new[s] = next_req(s, event[s])
            go(pos + 1, new, acc + [d])

    start = [pts[0] if pts else None for pts in points]
    go(0, start, [])
    minimal = []
    for v in found:
        if not any(
            w != v and all(x <= y for x, y in zip(w, v)) for w in found
        ):
            minimal.append(v)
    return minimal


@lru_cache(maxsize=65536)
def _ord_ca2(k, left, right):
    out = set()
    for pattern in _patterns(len(left), len(right)):
        for gaps in _minimal_gap_vectors(k, (left, right), pattern):
            value = Ordinal.zero(k)
            pi, pi2 = [], []
            for (i, j), d in zip(pattern, gaps):
                value = ord_add(value, d)
                if i is not None:
                    pi.append((left[i], value))
                if j is not None:
                    pi2.append((right[j], value))
            out.add((LocalEmbedding(pi), LocalEmbedding(pi2)))
    return tuple(sorted(out, key=_pair_key))


def _pair_key(pair):
    return (pair[0].graph, pair[1].graph)


@lru_cache(maxsize=65536)
def _lex_ca2(dom, left, right):
    fib_l = {}
    for a, x in left:
        fib_l.setdefault(a, []).append(x)
    fib_r = {}
    for a, x in right:
        fib_r.setdefault(a, []).append(x)
    out = set()
    for s1, s2 in dom.left.ca2(sorted(fib_l), sorted(fib_r)):
        inv2 = {c: a for a, c in s2.graph}
        shared = [(a1, inv2[c]) for a1, c in s1.graph if c in inv2]
        options = [
            dom.right.ca2(sorted(fib_l[a1]), sorted(fib_r[a2])) for a1, a2 in shared
        ]
        for combo in itertools.product(*options):
            f1 = {a1: t1 for (a1, _), (t1, _) in zip(shared, combo)}
            f2 = {a2: t2 for (_, a2), (_, t2) in zip(shared, combo)}
            pi = [((a, x), (s1[a], f1[a][x] if a in f1 else x)) for a, x in left]
            pi2 = [((a, x), (s2[a], f2[a][x] if a in f2 else x)) for a, x in right]
            out.add((LocalEmbedding(pi), LocalEmbedding(pi2)))
    return tuple(sorted(out, key=_pair_key))


# ---------------------------------------------------------------------------
# Public functional interface.


def _engine_domain(D):
    if D.contains_atoms():
        raise DomainError(f"{D} contains q/eq atoms; reduce the instance first")


def _checked_pairs(D, p):
    pairs = _as_pairs(p)
    for a, b in pairs:
        D.check(a)
        D.check(b)
    if len({a for a, _ in pairs}) != len(pairs):
        raise DomainError("a point is mapped twice")
    return pairs


def ca1_extends(D, p):
    """True iff the finite map ``p`` is the restriction of an embedding of D."""
    pairs = _checked_pairs(D, p)
    if len({b for _, b in pairs}) != len(pairs):
        return False
    return D.ca1(pairs)


def ca2_presentation(D, B, B2):
    """Canonically sorted presentation of all pairs of local embeddings."""
    _engine_domain(D)
    for e in itertools.chain(B, B2):
        D.check(e)
    return list(D.ca2(sorted(set(B)), sorted(set(B2))))


def extend_local(D, p, C):
    """Deterministic minimal extension of the local embedding ``p`` to ``C``."""
    pairs = _checked_pairs(D, p)
    C = set(C)
    for e in C:
        D.check(e)
    if not {a for a, _ in pairs} <= C:
        raise DomainError("target set must contain the domain of the map")
    if not D.ca1(pairs):
        raise NoExtensionError(f"{dict(pairs)!r} is not a local embedding of {D}")
    return LocalEmbedding(D.extend(pairs, C))


def tuple_orbit_reps(D, n):
    return D.orbit_reps(n)


def canonical_tuple(D, t):
    for e in t:
        D.check(e)
    return D.canonical(tuple(t))


def flatten_factors(D):
    """Factors of a (possibly nested) lexicographic chain, left to right."""
    if isinstance(D, Lex):
        return flatten_factors(D.left) + flatten_factors(D.right)
    return [D]
