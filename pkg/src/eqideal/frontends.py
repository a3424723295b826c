"""Reductions to well-ordered instances, and the two applications built on them.

* :func:`reduce_instance` moves a membership problem over rational-order
  (``q``) or equality (``eq``) variables onto ``ord[2]``.
* Reversible Petri nets with data: reachability as binomial membership.
* Orbit-finite linear systems: solvability as membership of encodings.
"""

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .domain import Eq, Fin, Lex, Ord, Rat, ca2_presentation, flatten_factors
from .errors import ResourceError, ShapeError, ValidationError
from .gb import ONE, Basis, decompose, member
from .ordinal import Ordinal
from .poly import Polynomial, monomial

DEFAULT_SYMMETRIZE_BOUND = 7

# -- domain trees ----------------------------------------------------------------


def _leaves(D, e):
    """Coordinates of an element, one per factor of the lexicographic chain."""
    if isinstance(D, Lex):
        return _leaves(D.left, e[0]) + _leaves(D.right, e[1])
    return [e]


def _build(D, values):
    it = iter(values)

    def go(node):
        if isinstance(node, Lex):
            a = go(node.left)
            return (a, go(node.right))
        return next(it)

    return go(D)


def _replace_factors(D, fn):
    if isinstance(D, Lex):
        return Lex(_replace_factors(D.left, fn), _replace_factors(D.right, fn))
    return fn(D)


def instance_shape(D):
    """``'q'``, ``'eq'`` or ``None`` (atom-free); raises ShapeError otherwise."""
    factors = flatten_factors(D)
    if not D.contains_atoms():
        return None
    if Eq() in factors:
        if factors == [Eq()] or (len(factors) == 2 and factors[0] == Eq() and isinstance(factors[1], Fin)):
            return "eq"
        raise ShapeError(f"unsupported shape {D}: eq is accepted only as eq or lex(eq,fin[d])")
    body = factors[:-1] if isinstance(factors[-1], Fin) else factors
    if body and all(f == Rat() for f in body):
        return "q"
    raise ShapeError(f"unsupported shape {D}: q must form a chain q,...,q optionally followed by fin[d]")


def _data_values(D, polys):
    """Per-factor sets of coordinate values across the variables of ``polys``."""
    n = len(flatten_factors(D))
    out = [set() for _ in range(n)]
    for p in polys:
        for v in p.vars:
            for i, c in enumerate(_leaves(D, v)):
                out[i].add(c)
    return out


# -- equality atoms --------------------------------------------------------------


def _eq_values(D, g):
    return sorted({_leaves(D, v)[0] for v in g.vars})


def symmetrize_equality(B, bound=DEFAULT_SYMMETRIZE_BOUND, provenance=False):
    """Replace each generator by its renamings under permutations of its atoms.

    The result lives over the matching ``q`` shape.  With ``provenance``
    also return ``(generator index, permutation dict)`` per output generator.
    """
    D = B.domain
    if instance_shape(D) != "eq":
        raise ShapeError(f"{D} is not an equality-atom domain")
    Q = _replace_factors(D, lambda f: Rat() if f == Eq() else f)
    out, prov, seen = [], [], set()
    for gi, g in enumerate(B.gens):
        vals = _eq_values(D, g)
        if len(vals) > bound:
            raise ResourceError(
                f"generator {gi} has {len(vals)} atoms; symmetrization is capped at {bound}",
                state=None,
            )
        for perm in itertools.permutations(vals):
            pm = dict(zip(vals, perm))
            mapping = {}
            for v in g.vars:
                leaves = _leaves(D, v)
                mapping[v] = _build(D, [pm[leaves[0]]] + leaves[1:])
            h = g.substitute(mapping)
            if h in seen:
                continue
            seen.add(h)
            out.append(h)
            prov.append((gi, pm))
    result = Basis(Q, out)
    return (result, prov) if provenance else result


# -- reduction to ord[2] -------------------------------------------------------


@dataclass(frozen=True)
class ReducedInstance:
    """A membership instance over an atom-free domain plus how it was built."""

    basis: Basis
    poly: Polynomial
    source_domain: object
    # For each generator of ``basis``: (source generator index, atom permutation or None).
    gen_origin: tuple
    # Per factor: dict source value -> target value, for basis and query values.
    basis_maps: tuple
    query_maps: tuple
    symmetrized: bool = False


def _ord2(factor):
    return Ord(2) if factor in (Rat(), Eq()) else factor


def reduce_instance(D, gens, f, symmetrize_bound=DEFAULT_SYMMETRIZE_BOUND):
    """Translate ``f in <gens>`` over a q/eq shape into an ``ord[2]`` instance.

    Basis values of each atom coordinate go to an initial segment
    ``<0,0>, <0,1>, ...``; query values to ``<1,0>, <2,0>, ...``.  Variables
    shared by ``f`` and the basis are deliberately renamed differently.
    """
    shape = instance_shape(D)
    gens = tuple(gens)
    if shape is None:
        raise ShapeError(f"{D} has no q/eq atoms; nothing to reduce")
    origin = tuple((i, None) for i in range(len(gens)))
    symmetrized = False
    if shape == "eq":
        B, prov = symmetrize_equality(Basis(D, gens), symmetrize_bound, provenance=True)
        gens_q, origin, symmetrized = B.gens, tuple(prov), True
    else:
        gens_q = gens
    factors = flatten_factors(D)
    atom = [fac in (Rat(), Eq()) for fac in factors]
    S = _data_values(D, gens_q)
    T = _data_values(D, [f])
    bmaps, qmaps = [], []
    for i, is_atom in enumerate(atom):
        if is_atom:
            bmaps.append({v: Ordinal((0, j)) for j, v in enumerate(sorted(S[i]))})
            qmaps.append({v: Ordinal((j + 1, 0)) for j, v in enumerate(sorted(T[i]))})
        else:
            bmaps.append({v: v for v in S[i]})
            qmaps.append({v: v for v in T[i]})
    target = _replace_factors(D, _ord2)

    def translate(p, maps):
        mapping = {
            v: _build(target, [maps[i][c] for i, c in enumerate(_leaves(D, v))])
            for v in p.vars
        }
        return p.rename_monotone(mapping)

    new_gens = [translate(g, bmaps) for g in gens_q]
    return ReducedInstance(
        basis=Basis(target, new_gens),
        poly=translate(f, qmaps),
        source_domain=D,
        gen_origin=origin,
        basis_maps=tuple(bmaps),
        query_maps=tuple(qmaps),
        symmetrized=symmetrized,
    )


def member_any(D, gens, f, **kw):
    """Membership over any supported domain, routing atoms through the reduction.

    Returns ``(answer, certificate, reduced)`` where ``reduced`` is None for
    atom-free domains.
    """
    if not D.contains_atoms():
        ans, cert = member(Basis(D, gens), f, **kw)
        return ans, cert, None
    red = reduce_instance(D, gens, f)
    ans, cert = member(red.basis, red.poly, **kw)
    return ans, cert, red


# -- Petri nets with data --------------------------------------------------------


@dataclass(frozen=True)
class PetriNet:
    data_domain: object  # None for a plain net
    places: int
    rules: tuple
    reversible: bool = field(default=False, compare=False)

    def __post_init__(self):
        if self.places < 1:
            raise ValidationError("a net needs at least one place")
        object.__setattr__(self, "rules", tuple(self.rules))

    @property
    def variable_domain(self):
        if self.data_domain is None:
            return Fin(self.places)
        return Lex(self.data_domain, Fin(self.places))


def _mono_vars(m):
    return [v for v, _ in m]


def _rule_instance(V, rule, target):
    """Whether ``target`` is a renaming of ``rule`` by a local embedding of V."""
    src = sorted(set(_mono_vars(rule[0])) | set(_mono_vars(rule[1])))
    dst = sorted(set(_mono_vars(target[0])) | set(_mono_vars(target[1])))
    if len(src) != len(dst):
        return False
    if Eq() in flatten_factors(V):
        candidates = (list(zip(src, p)) for p in itertools.permutations(dst))
    else:
        # An order-preserving bijection between finite chains is unique.
        candidates = [list(zip(src, dst))]
    for pairs in candidates:
        if not V.ca1(pairs):
            continue
        pm = dict(pairs)
        if all(monomial((pm[v], d) for v, d in m) == t for m, t in zip(rule, target)):
            return True
    return False


def petri_validate(net, symmetrize=False):
    """Check closure under rule inversion; optionally add the missing inverses."""
    V = net.variable_domain
    for h, h2 in net.rules:
        for v in _mono_vars(h) + _mono_vars(h2):
            V.check(v)
    rules = list(net.rules)
    missing = [
        (h2, h) for h, h2 in net.rules
        if not any(_rule_instance(V, r, (h2, h)) for r in net.rules)
    ]
    if missing and not symmetrize:
        raise ValidationError(f"net is not reversible: {len(missing)} rule(s) lack an inverse")
    rules.extend(missing)
    return PetriNet(net.data_domain, net.places, rules, reversible=True)


@dataclass(frozen=True)
class ReachResult:
    answer: bool
    certificate: object
    basis: Basis
    poly: Polynomial
    reduced: ReducedInstance = None
    exact: bool = True


def petri_reach(net, s, t, approximate=False, **kw):
    """Decide ``s ->* t`` for a reversible net via binomial ideal membership.

    With ``approximate`` a non-reversible net is accepted and a negative
    answer is still sound, while a positive answer only means reachability
    was not ruled out.
    """
    V = net.variable_domain
    exact = True
    try:
        net = petri_validate(net)
    except ValidationError:
        if not approximate:
            raise
        exact = False
    for m in (s, t):
        for v in _mono_vars(m):
            V.check(v)
    gens, seen = [], set()
    for h, h2 in net.rules:
        b = Polynomial.monomial(h2) - Polynomial.monomial(h)
        if b and b.monic() not in seen:
            seen.add(b.monic())
            gens.append(b)
    f = Polynomial.monomial(t) - Polynomial.monomial(s)
    ans, cert, red = member_any(V, gens, f, **kw)
    B = red.basis if red else Basis(V, gens)
    return ReachResult(ans, cert, B, red.poly if red else f, red, exact)


# -- orbit-finite linear systems ----------------------------------------------------


def encode_tuple(t):
    """``prod x_{t_i}^(2^(i-1))``: injective, of total degree ``2^d - 1``."""
    acc = {}
    for i, e in enumerate(t):
        acc[e] = acc.get(e, 0) + (1 << i)
    return monomial(acc)


def encode_vector(v):
    """Linear extension of :func:`encode_tuple` to formal sums ``{tuple: coeff}``."""
    return Polynomial((encode_tuple(t), c) for t, c in v.items())


@dataclass(frozen=True)
class VectorFamily:
    domain: object
    dim: int
    arity: int
    rows: tuple  # ((index tuple, {d-tuple: coeff}), ...)

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple((tuple(t), dict(v)) for t, v in self.rows))


def _vector_points(v):
    return {e for u in v for e in u}


def _rename_vector(pm, v):
    return {tuple(pm[e] for e in u): c for u, c in v.items()}


def _check_shape(fam):
    D = fam.domain
    seen = set()
    for t, v in fam.rows:
        if len(t) != fam.arity:
            raise ValidationError(f"index {t!r} does not have arity {fam.arity}")
        for e in t:
            D.check(e)
        if D.canonical(t) != t:
            raise ValidationError(f"index {t!r} is not canonical (expected {D.canonical(t)!r})")
        if t in seen:
            raise ValidationError(f"duplicate index {t!r}")
        seen.add(t)
        for u in v:
            if len(u) != fam.dim:
                raise ValidationError(f"vector entry {u!r} does not have length {fam.dim}")
            for e in u:
                D.check(e)


def validate_family(fam):
    """Whether the equivariant closure of the rows is a well-defined family.

    Over atom-free domains every pair of rows is checked on the finite
    presentation of pairs of local embeddings of their supports.  Over q/eq
    the condition is exactly that every vector uses only index values,
    because embeddings fixing the index can move any other point.
    """
    _check_shape(fam)
    D = fam.domain
    if D.contains_atoms():
        instance_shape(D)
        return all(_vector_points(v) <= set(t) for t, v in fam.rows)
    rows = [(t, v, sorted(set(t) | _vector_points(v))) for t, v in fam.rows]
    for (t, v, pts), (t2, v2, pts2) in itertools.combinations_with_replacement(rows, 2):
        for pi, pi2 in ca2_presentation(D, pts, pts2):
            if tuple(pi[e] for e in t) != tuple(pi2[e] for e in t2):
                continue
            a = {u: c for u, c in _rename_vector(pi, v).items() if c}
            b = {u: c for u, c in _rename_vector(pi2, v2).items() if c}
            if a != b:
                return False
    return True


@dataclass(frozen=True)
class LinsolveResult:
    answer: bool
    certificate: object
    basis: Basis
    poly: Polynomial
    combination: tuple = ()  # ((coeff, index tuple, vector), ...)


def _interpolate_back(D, used, anchors):
    """A monotone map from the set ``used`` of target values into q fixing ``anchors``."""
    order = sorted(used)
    pos = {w: Fraction(i) for i, w in enumerate(order)}
    ext = Rat().extend([(pos[w], anchors[w]) for w in order if w in anchors], list(pos.values()))
    return {w: ext[pos[w]] for w in order}


def linsolve(fam, b, check=True, **kw):
    """Decide whether ``b`` is a finite linear combination of the family's vectors."""
    if check and not validate_family(fam):
        raise ValidationError("family is not equivariant-consistent")
    D = fam.domain
    for u in b:
        if len(u) != fam.dim:
            raise ValidationError(f"target entry {u!r} does not have length {fam.dim}")
    rows = [(t, v) for t, v in fam.rows if any(v.values())]
    gens = [encode_vector(v) for _, v in rows]
    f = encode_vector(b)
    kw.setdefault("track_lifts", True)
    if D.contains_atoms():
        red = reduce_instance(D, gens, f)
        E, B, f_used = red.basis.domain, red.basis, red.poly
    else:
        red, E, B, f_used = None, D, Basis(D, gens), f
    ans, cert = member(B, f_used, **kw)
    combo = ()
    if ans:
        combo = _combination(fam, rows, red, E, B, cert)
    return LinsolveResult(ans, cert, B, f_used, combo)


def _combination(fam, rows, red, E, B, cert):
    """Read a spanning combination off the lift of a positive certificate."""
    D = fam.domain
    terms = [(k, c) for k, c in decompose(cert).items() if c and k[0] == ONE]
    back = None
    if red is not None:
        # Query values return to their source; everything else slots in monotonically.
        used = set()
        for (_, bi, graph), _ in terms:
            used.update(w for _, w in graph)
        flat = len(flatten_factors(red.source_domain))
        anchors = [{} for _ in range(flat)]
        for i, qm in enumerate(red.query_maps):
            for src, dst in qm.items():
                anchors[i][dst] = src
        back = []
        for i in range(flat):
            vals = {_leaves(E, w)[i] for w in used}
            if isinstance(flatten_factors(red.source_domain)[i], Fin):
                back.append({w: w for w in vals})
            else:
                back.append(_interpolate_back(D, vals | set(anchors[i]), anchors[i]))
    acc = {}
    for (_, bi, graph), c in terms:
        if red is None:
            row = bi
            pm = dict(graph)
        else:
            row, perm = red.gen_origin[bi]
            src = red.source_domain
            inv = {}
            g_src = encode_vector(rows[row][1])
            # source var -> (perm) -> (basis map) -> (embedding) -> (back to q)
            for v in g_src.vars:
                leaves = _leaves(src, v)
                if perm is not None:
                    leaves = [perm[leaves[0]]] + leaves[1:]
                mid = _build(E, [red.basis_maps[i][x] for i, x in enumerate(leaves)])
                w = dict(graph)[mid]
                inv[v] = _build(src, [back[i][x] for i, x in enumerate(_leaves(E, w))])
            pm = inv
        t, v = rows[row]
        pts = sorted(set(t) | _vector_points(v))
        # Index values outside the vector's support are filled in deterministically.
        full = D.extend(sorted(pm.items()), pts)
        t2 = tuple(full[e] for e in t)
        vec = _rename_vector(full, v)
        key = (t2, tuple(sorted(vec.items())))
        acc[key] = acc.get(key, 0) + c
    out = []
    for (t2, vec), c in sorted(acc.items(), key=lambda kv: (kv[0][0], kv[0][1])):
        if c:
            out.append((c, t2, dict(vec)))
    return tuple(out)


def evaluate_combination(combo):
    """Exact sum of ``coeff * vector`` over a combination."""
    acc = {}
    for c, _, vec in combo:
        for u, x in vec.items():
            acc[u] = acc.get(u, 0) + c * x
    return {u: x for u, x in acc.items() if x}

