"""Pure-Python monomial and term-list kernels.

A monomial is a tuple of ``(variable, degree)`` pairs sorted by variable in
descending order.  With that layout, native tuple comparison *is* the
lexicographic term order (the largest differing variable decides), so
sorting and comparing monomials costs nothing extra.

A term list is a tuple of ``(monomial, coefficient)`` pairs sorted by
monomial in descending order with no zero coefficients.
"""

ONE = ()


def mono_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    na, nb = len(a), len(b)
    while i < na and j < nb:
        va, da = a[i]
        vb, db = b[j]
        if va == vb:
            out.append((va, da + db))
            i += 1
            j += 1
        elif va > vb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def mono_divides(a, b):
    """Whether ``a`` divides ``b``."""
    j = 0
    nb = len(b)
    for va, da in a:
        while j < nb and b[j][0] > va:
            j += 1
        if j == nb or b[j][0] != va or b[j][1] < da:
            return False
        j += 1
    return True


def mono_div(b, a):
    """``b / a``; returns None when ``a`` does not divide ``b``."""
    out = []
    i = 0
    na = len(a)
    for vb, db in b:
        if i < na and a[i][0] == vb:
            d = db - a[i][1]
            if d < 0:
                return None
            if d:
                out.append((vb, d))
            i += 1
        elif i < na and a[i][0] > vb:
            return None
        else:
            out.append((vb, db))
    if i < na:
        return None
    return tuple(out)


def mono_lcm(a, b):
    out = []
    i = j = 0
    na, nb = len(a), len(b)
    while i < na and j < nb:
        va, da = a[i]
        vb, db = b[j]
        if va == vb:
            out.append((va, da if da >= db else db))
            i += 1
            j += 1
        elif va > vb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def mono_degree(a):
    return sum(d for _, d in a)


def terms_add(f, g):
    out = []
    i = j = 0
    nf, ng = len(f), len(g)
    while i < nf and j < ng:
        mf, cf = f[i]
        mg, cg = g[j]
        if mf == mg:
            c = cf + cg
            if c:
                out.append((mf, c))
            i += 1
            j += 1
        elif mf > mg:
            out.append(f[i])
            i += 1
        else:
            out.append(g[j])
            j += 1
    out.extend(f[i:])
    out.extend(g[j:])
    return tuple(out)


def terms_scale(f, c, h=ONE):
    """``c * h * f``; multiplying by a monomial keeps the order."""
    if not c:
        return ()
    if h:
        return tuple((mono_mul(m, h), x * c) for m, x in f)
    return tuple((m, x * c) for m, x in f)


def terms_addmul(f, c, h, g):
    """``f + c * h * g`` in one merge."""
    return terms_add(f, terms_scale(g, c, h))


def terms_mul(f, g):
    acc = {}
    for mf, cf in f:
        for mg, cg in g:
            m = mono_mul(mf, mg)
            c = acc.get(m)
            acc[m] = cf * cg if c is None else c + cf * cg
    return tuple(sorted(((m, c) for m, c in acc.items() if c), reverse=True))


def terms_rename(f, mapping):
    """Rename variables by an order-preserving map (no re-sorting needed)."""
    return tuple(
        (tuple((mapping[v], d) for v, d in m), c) for m, c in f
    )
