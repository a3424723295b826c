"""Equivariant division, reduction, S-polynomials and Buchberger completion."""

from dataclasses import dataclass, field

from . import kernels as K
from .domain import LocalEmbedding, ca1_extends
from .errors import DomainError, InternalInvariantError, ResourceError
from .poly import ONE, Polynomial, monotone_divisor_maps, rename_monomial

DEFAULT_FUEL_STEPS = 10**6
DEFAULT_FUEL_PASSES = 10**3


@dataclass(frozen=True)
class Basis:
    domain: object
    gens: tuple
    history: tuple = field(default=(), compare=False)
    lifts: tuple = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "gens", tuple(self.gens))
        for g in self.gens:
            if not isinstance(g, Polynomial) or g.is_zero():
                raise DomainError("basis generators must be nonzero polynomials")

    def __len__(self):
        return len(self.gens)


@dataclass(frozen=True)
class DivisionStep:
    gen_index: int
    r: object
    h: tuple
    renaming: LocalEmbedding
    head: tuple


@dataclass(frozen=True)
class Certificate:
    steps: tuple
    remainder: Polynomial
    basis: Basis = field(default=None, compare=False)


@dataclass
class Stats:
    steps: int = 0
    passes: int = 0
    added: int = 0


def _require_engine_domain(D):
    if D.contains_atoms():
        raise DomainError(f"{D} involves q/eq atoms; use the reduction frontend")


class Reducer:
    """Division against a growing generator list, with per-monomial caching.

    The cache remembers, for each monomial, the first generator (and map)
    that divides it among the generators checked so far; generators are only
    ever appended, so a hit stays the smallest index forever and a miss only
    needs re-checking against newer generators.
    """

    def __init__(self, domain, gens=()):
        self.domain = domain
        self.gens = []
        self._lm = []
        self._lmdeg = []
        self._cache = {}
        self._renamed = {}
        for g in gens:
            self.add(g)

    def add(self, g):
        self.gens.append(g)
        self._lm.append(g.lm)
        self._lmdeg.append(K.mono_degree(g.lm))

    def lookup(self, m):
        n = len(self.gens)
        hit = self._cache.get(m)
        start = 0
        if hit is not None:
            checked, res = hit
            if res is not None or checked == n:
                return res
            start = checked
        res = None
        deg = K.mono_degree(m)
        for gi in range(start, n):
            lm = self._lm[gi]
            if self._lmdeg[gi] > deg or len(lm) > len(m):
                continue
            pi = next(monotone_divisor_maps(self.domain, lm, m), None)
            if pi is not None:
                res = (gi, pi)
                break
        self._cache[m] = (n, res)
        return res

    def renamed(self, gi, pi):
        key = (gi, pi.graph)
        hit = self._renamed.get(key)
        if hit is None:
            g = self.gens[gi]
            ext = LocalEmbedding(self.domain.extend(pi.graph, g.vars))
            hit = (ext, g.rename_monotone(dict(ext.graph)))
            self._renamed[key] = hit
        return hit

    def step_at(self, f, index):
        """Try to divide at the monomial ``f.terms[index]``."""
        m, coeff = f.terms[index]
        found = self.lookup(m)
        if found is None:
            return None
        gi, pi = found
        g = self.gens[gi]
        ext, g_renamed = self.renamed(gi, pi)
        h = K.mono_div(m, g_renamed.lm)
        r = coeff / g.lc
        step = DivisionStep(gi, r, h, ext, m)
        return step, f.addmul(-r, h, g_renamed)

    def first_step(self, f, below=None):
        """Division step at the largest reducible monomial (optionally < below)."""
        for i, (m, _) in enumerate(f.terms):
            if below is not None and m >= below:
                continue
            res = self.step_at(f, i)
            if res is not None:
                return res
        return None

    def reduce(self, f, fuel=DEFAULT_FUEL_STEPS, stats=None):
        steps = []
        head = None
        while True:
            res = self.first_step(f, head)
            if res is None:
                break
            if len(steps) >= fuel:
                raise InternalInvariantError(
                    f"reduction did not finish within {fuel} steps", state=f
                )
            step, f = res
            steps.append(step)
            head = step.head
        if stats is not None:
            stats.steps += len(steps)
        return Certificate(tuple(steps), f)


def divide_step(B, f):
    """One division step by the determinism policy, or None if f is reduced."""
    _require_engine_domain(B.domain)
    return Reducer(B.domain, B.gens).first_step(f)


def reduce(B, f, fuel=DEFAULT_FUEL_STEPS, stats=None):
    """Reduce ``f`` to a normal form with a replayable certificate."""
    _require_engine_domain(B.domain)
    cert = Reducer(B.domain, B.gens).reduce(f, fuel, stats)
    return Certificate(cert.steps, cert.remainder, B)


def spoly(D, f, g):
    if f == g:
        raise DomainError("S-polynomial of a polynomial with itself")
    if f.is_zero() or g.is_zero():
        raise DomainError("S-polynomial of the zero polynomial")
    h = K.mono_lcm(f.lm, g.lm)
    a = f.scale(1 / f.lc, K.mono_div(h, f.lm))
    return a.addmul(-1 / g.lc, K.mono_div(h, g.lm), g)


def _pair_spolys(D, gi, gj, coprime_filter=False):
    """S-polynomials of all presented renamings of the pair (gi, gj)."""
    out = []
    for pi, pi2 in D.ca2(sorted(gi.vars), sorted(gj.vars)):
        a = gi.rename_monotone(dict(pi.graph))
        b = gj.rename_monotone(dict(pi2.graph))
        if a == b:
            continue
        if coprime_filter and not (
            {v for v, _ in a.lm} & {v for v, _ in b.lm}
        ):
            continue
        out.append((a, b, pi, pi2))
    return out


def pres(B, coprime_filter=False):
    """S-polynomials presenting every S-polynomial of renamed generators."""
    _require_engine_domain(B.domain)
    out = []
    for i, gi in enumerate(B.gens):
        for j, gj in enumerate(B.gens):
            for a, b, _, _ in _pair_spolys(B.domain, gi, gj, coprime_filter):
                out.append(spoly(B.domain, a, b))
    return out


# -- lifts: expressing generators through the input basis ---------------------
#
# A lift is a dict mapping (h, base_index, embedding_graph) -> coefficient and
# stands for the sum of coefficient * h * embedding(base_gen).


def _lift_vars(lift):
    out = set()
    for h, _, graph in lift:
        out.update(v for v, _ in h)
        out.update(b for _, b in graph)
    return out


def _lift_rename(D, lift, pi):
    ext = D.extend(pi.graph, set(pi) | _lift_vars(lift))
    out = {}
    for (h, base, graph), c in lift.items():
        key = (rename_monomial(ext, h), base, tuple((a, ext[b]) for a, b in graph))
        _lift_acc(out, key, c)
    return out


def _lift_acc(out, key, c):
    total = out.get(key, 0) + c
    if total:
        out[key] = total
    else:
        out.pop(key, None)


def _lift_addmul(target, c, h, lift):
    for (hh, base, graph), x in lift.items():
        _lift_acc(target, (K.mono_mul(hh, h), base, graph), c * x)


def _cert_lift(D, lifts, steps):
    """Lift of ``sum r * h * renaming(g)`` over the certificate's steps."""
    out = {}
    for s in steps:
        _lift_addmul(out, s.r, s.h, _lift_rename(D, lifts[s.gen_index], s.renaming))
    return out


def expand_lift(base, lift):
    """Evaluate a lift against the input basis (used by tests and checks)."""
    total = Polynomial()
    for (h, bi, graph), c in sorted(lift.items(), key=repr):
        g = base.gens[bi].rename_monotone(dict(graph))
        total = total.addmul(c, h, g)
    return total


def buchberger(
    B,
    fuel_steps=DEFAULT_FUEL_STEPS,
    fuel_passes=DEFAULT_FUEL_PASSES,
    coprime_filter=False,
    track_lifts=False,
    stats=None,
):
    """Equivariant Buchberger completion.

    Each pass reduces the S-polynomials of pairs that involve a generator
    added by the previous pass (the first pass takes all pairs), in
    ascending order of leading monomial, against the growing basis.
    S-polynomials already seen (up to a scalar) are skipped: their earlier
    reduction path to a remainder that was added or was zero still exists.
    """
    D = B.domain
    _require_engine_domain(D)
    stats = stats if stats is not None else Stats()
    reducer = Reducer(D, B.gens)
    gens = reducer.gens
    lifts = None
    if track_lifts:
        lifts = [
            {(ONE, i, tuple((v, v) for v in sorted(g.vars))): 1}
            for i, g in enumerate(B.gens)
        ]
    seen = set()
    history = []
    done = 0
    steps_left = fuel_steps
    while True:
        if stats.passes >= fuel_passes:
            raise ResourceError(
                f"completion did not stabilise within {fuel_passes} passes",
                state=Basis(D, gens, tuple(history)),
            )
        stats.passes += 1
        n = len(gens)
        batch = []
        for i in range(n):
            for j in range(n):
                if max(i, j) < done:
                    continue
                for a, b, pi, pi2 in _pair_spolys(D, gens[i], gens[j], coprime_filter):
                    s = spoly(D, a, b)
                    if s.is_zero():
                        continue
                    key = s.monic()
                    if key in seen:
                        continue
                    seen.add(key)
                    batch.append((s, i, j, pi, pi2, a, b))
        done = n
        batch.sort(key=lambda item: item[0].lm)
        added = 0
        for s, i, j, pi, pi2, a, b in batch:
            before = stats.steps
            try:
                cert = reducer.reduce(s, steps_left, stats)
            except InternalInvariantError as exc:
                exc.state = Basis(D, gens, tuple(history))
                raise
            steps_left -= stats.steps - before
            rem = cert.remainder
            if rem.is_zero():
                continue
            if lifts is not None:
                lift = {}
                _lift_addmul(lift, 1 / a.lc, K.mono_div(K.mono_lcm(a.lm, b.lm), a.lm),
                             _lift_rename(D, lifts[i], pi))
                _lift_addmul(lift, -1 / b.lc, K.mono_div(K.mono_lcm(a.lm, b.lm), b.lm),
                             _lift_rename(D, lifts[j], pi2))
                _lift_addmul(lift, -1, ONE, _cert_lift(D, lifts, cert.steps))
                scaled = {}
                _lift_addmul(scaled, 1 / rem.lc, ONE, lift)
                lifts.append(scaled)
            reducer.add(rem.monic())
            added += 1
        stats.added += added
        history.append((stats.passes, added))
        if added == 0:
            break
    return Basis(D, gens, tuple(history), tuple(lifts) if lifts is not None else None)


def member(B, f, fuel_steps=DEFAULT_FUEL_STEPS, fuel_passes=DEFAULT_FUEL_PASSES,
           coprime_filter=False, stats=None, track_lifts=False):
    """Decide ``f in <B>``; the certificate reduces f against the completed basis."""
    _require_engine_domain(B.domain)
    stats = stats if stats is not None else Stats()
    G = buchberger(B, fuel_steps, fuel_passes, coprime_filter, track_lifts, stats)
    cert = reduce(G, f, fuel_steps, stats)
    return cert.remainder.is_zero(), cert


def decompose(cert):
    """Express ``f - remainder`` through the *input* basis of a tracked completion.

    Returns a dict ``(h, base_index, embedding_graph) -> coefficient``.
    """
    G = cert.basis
    if G is None or G.lifts is None:
        raise DomainError("certificate basis was computed without lift tracking")
    return _cert_lift(G.domain, G.lifts, cert.steps)


def autoreduce(B):
    """Drop generators whose leading monomial is dominated by another's; make monic."""
    from .poly import mono_wqo_leq

    D = B.domain
    keep = list(range(len(B.gens)))
    for i in range(len(B.gens)):
        lm_i = B.gens[i].lm
        for j in keep:
            if j == i:
                continue
            lm_j = B.gens[j].lm
            if mono_wqo_leq(D, lm_j, lm_i) is None:
                continue
            if j < i or mono_wqo_leq(D, lm_i, lm_j) is None:
                keep.remove(i)
                break
    return Basis(D, [B.gens[i].monic() for i in keep])


def verify_certificate(B, f, c):
    """Replay a certificate exactly; also require the remainder to be reduced."""
    D = B.domain
    try:
        cur = f
        for s in c.steps:
            if not 0 <= s.gen_index < len(B.gens):
                return False
            g = B.gens[s.gen_index]
            if not g.vars <= set(s.renaming) or not ca1_extends(D, s.renaming):
                return False
            mapping = dict(s.renaming.graph)
            if K.mono_mul(s.h, rename_monomial(mapping, g.lm)) != s.head:
                return False
            if cur.coefficient(s.head) != s.r * g.lc or not s.r:
                return False
            cur = cur.addmul(-s.r, s.h, g.rename_monotone(mapping))
        if cur != c.remainder:
            return False
        return Reducer(D, B.gens).first_step(cur) is None
    except (DomainError, KeyError, ZeroDivisionError, TypeError):
        return False


# -- classical oracle -----------------------------------------------------------


def _classical_reduce(gens, f):
    lms = [g.lm for g in gens]
    while True:
        for m, c in f.terms:
            for g, lm in zip(gens, lms):
                q = K.mono_div(m, lm)
                if q is not None:
                    f = f.addmul(-c / g.lc, q, g)
                    break
            else:
                continue
            break
        else:
            return f


def classical_gb(variables, gens):
    """Textbook Buchberger over a fixed finite set of variables."""
    variables = set(variables)
    G = [g for g in gens if not g.is_zero()]
    for g in G:
        if not g.vars <= variables:
            raise DomainError("generator uses a variable outside the fixed set")
    pairs = [(i, j) for j in range(len(G)) for i in range(j)]
    while pairs:
        i, j = pairs.pop(0)
        f, g = G[i], G[j]
        h = K.mono_lcm(f.lm, g.lm)
        s = f.scale(1 / f.lc, K.mono_div(h, f.lm)).addmul(-1 / g.lc, K.mono_div(h, g.lm), g)
        r = _classical_reduce(G, s)
        if not r.is_zero():
            G.append(r.monic())
            pairs.extend((k, len(G) - 1) for k in range(len(G) - 1))
    return G


def classical_member(variables, gens, f):
    G = classical_gb(variables, gens)
    if not G:
        return f.is_zero()
    return _classical_reduce(G, f).is_zero()
