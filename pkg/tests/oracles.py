"""Independent reference implementations used only by the tests.

None of these import the engine's algorithms; they work from definitions:
ordinal addition by transfinite recursion, embeddings as compositions of
elementary insertions, textbook Groebner bases via sympy, and breadth-first
search over Petri net markings.
"""

import itertools
from collections import Counter, deque
from functools import lru_cache

import sympy

# -- ordinals below omega^k as coefficient tuples, most significant first ------


def succ(a):
    return a[:-1] + (a[-1] + 1,)


def pred(a):
    return a[:-1] + (a[-1] - 1,)


def fundamental(b, n):
    """The n-th element of the standard fundamental sequence of a limit b."""
    j = max(i for i, c in enumerate(b) if c)
    return b[:j] + (b[j] - 1, n) + b[j + 2:]


@lru_cache(maxsize=None)
def rec_add(a, b):
    """a + b by recursion on b: zero, successor, and limit (as a supremum)."""
    if not any(b):
        return a
    if b[-1]:
        return succ(rec_add(a, pred(b)))
    s1 = rec_add(a, fundamental(b, 4))
    s2 = rec_add(a, fundamental(b, 9))
    # The sequence is strictly increasing; its first moving coordinate is
    # unbounded, so the supremum bumps the coordinate just above it.
    i = next(i for i in range(len(a)) if s1[i] != s2[i])
    assert i > 0, "supremum leaves omega^k"
    return s1[: i - 1] + (s1[i - 1] + 1,) + (0,) * (len(a) - i)


# -- embeddings of omega ----------------------------------------------------------


def omega_extends(pairs):
    """Search for a strictly increasing map on 0..max(source) through the pairs."""
    pairs = dict(pairs)
    if len(set(pairs.values())) != len(pairs):
        return False
    if not pairs:
        return True
    top = max(pairs)
    cap = max(pairs.values())

    def go(x, low):
        if x > top:
            return True
        if x in pairs:
            v = pairs[x]
            return v >= low and go(x + 1, v + 1)
        return any(go(x + 1, v + 1) for v in range(low, cap + 1))

    return go(0, 0)


# -- embeddings of omega^2 -------------------------------------------------------


def insert_point(y):
    a0, b0 = y

    def f(x):
        a, b = x
        return (a, b + 1) if a == a0 and b >= b0 else x

    return f


def insert_limit(y):
    a0, b0 = y

    def f(x):
        a, b = x
        if a == a0 and b >= b0:
            return (a + 1, b - b0)
        if a > a0:
            return (a + 1, b)
        return x

    return f


def omega2_elementary(rows, cols):
    for a in range(rows + 1):
        for b in range(cols + 2):
            yield insert_point((a, b))
            yield insert_limit((a, b))


def omega2_extends(pairs):
    """Breadth-first search over compositions of elementary embeddings."""
    pairs = sorted(dict(pairs).items())
    if len({b for _, b in pairs}) != len(pairs):
        return False
    src = tuple(tuple(a) for a, _ in pairs)
    dst = tuple(tuple(b) for _, b in pairs)
    rows = max((b[0] for b in dst), default=0)
    cols = max((b[1] for b in dst + src), default=0)
    # Columns beyond this cap never help to land on a target (an insertion
    # can always be replaced by one at a smaller position), which keeps the
    # search finite.
    cap = cols + len(src) + 1
    maps = list(omega2_elementary(rows, cap))
    seen = {src}
    queue = deque([src])
    while queue:
        cur = queue.popleft()
        if cur == dst:
            return True
        for f in maps:
            nxt = tuple(f(x) for x in cur)
            # Embeddings of ordinals are inflationary, so overshooting is final.
            if (nxt != cur and nxt not in seen and all(x[1] <= cap for x in nxt)
                    and all(x <= y for x, y in zip(nxt, dst))):
                seen.add(nxt)
                queue.append(nxt)
    return False


def random_omega_embedding(rng, top, spread=3):
    """A random strictly increasing map on 0..top, as a dict."""
    out, v = {}, rng.randrange(spread)
    for x in range(top + 1):
        out[x] = v
        v += 1 + rng.randrange(spread)
    return out


def random_omega2_embedding(rng, points, depth=3):
    fs = [rng.choice([insert_point, insert_limit])((rng.randrange(2), rng.randrange(4)))
          for _ in range(rng.randrange(depth + 1))]
    out = {}
    for p in points:
        x = tuple(p)
        for f in fs:
            x = f(x)
        out[p] = x
    return out


# -- classical polynomial algebra ------------------------------------------------


def to_sympy(poly, symbols):
    total = sympy.Integer(0)
    for m, c in poly.terms:
        term = sympy.Rational(c.numerator, c.denominator)
        for v, d in m:
            term *= symbols[v] ** d
        total += term
    return total


def sympy_member(d, gens, f):
    """Membership over fin[d] via sympy's lex Groebner basis (largest variable first)."""
    X = sympy.symbols(f"x0:{max(d, 1)}")
    if not gens:
        return f.is_zero()
    G = sympy.groebner([to_sympy(g, X) for g in gens], *reversed(X), order="lex")
    return G.contains(to_sympy(f, X))


# -- Petri nets -----------------------------------------------------------------


def _marking(m):
    return frozenset(Counter(dict(m)).items())


def petri_bfs(rules, s, t, max_tokens=None, max_states=200000):
    """Exhaustive reachability over markings (monomials as variable -> count)."""
    start, goal = Counter(dict(s)), Counter(dict(t))
    key = lambda c: frozenset((k, v) for k, v in c.items() if v)
    seen = {key(start)}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        if key(cur) == key(goal):
            return True
        for h, h2 in rules:
            need = Counter(dict(h))
            if any(cur[v] < n for v, n in need.items()):
                continue
            nxt = cur.copy()
            nxt.subtract(need)
            nxt.update(dict(h2))
            if max_tokens is not None and sum(nxt.values()) > max_tokens:
                continue
            k = key(nxt)
            if k not in seen:
                seen.add(k)
                queue.append(nxt)
                if len(seen) > max_states:
                    raise RuntimeError("state space too large for the oracle")
    return False


def all_compositions(total, parts):
    for cut in itertools.combinations(range(total + parts - 1), parts - 1):
        prev, out = -1, []
        for c in cut + (total + parts - 1,):
            out.append(c - prev - 1)
            prev = c
        yield tuple(out)
