# cython: boundscheck=False, wraparound=False
"""Compiled versions of the monomial and term-list kernels.

Same data layout and semantics as ``_pykernels``; only the loops are typed.
"""

ONE = ()


cpdef tuple mono_mul(tuple a, tuple b):
    cdef Py_ssize_t i = 0, j = 0, na = len(a), nb = len(b)
    cdef tuple pa, pb
    cdef list out
    if na == 0:
        return b
    if nb == 0:
        return a
    out = []
    while i < na and j < nb:
        pa = <tuple>a[i]
        pb = <tuple>b[j]
        if pa[0] == pb[0]:
            out.append((pa[0], pa[1] + pb[1]))
            i += 1
            j += 1
        elif pa[0] > pb[0]:
            out.append(pa)
            i += 1
        else:
            out.append(pb)
            j += 1
    while i < na:
        out.append(a[i])
        i += 1
    while j < nb:
        out.append(b[j])
        j += 1
    return tuple(out)


cpdef bint mono_divides(tuple a, tuple b):
    cdef Py_ssize_t i, j = 0, na = len(a), nb = len(b)
    cdef tuple pa, pb
    for i in range(na):
        pa = <tuple>a[i]
        while j < nb and (<tuple>b[j])[0] > pa[0]:
            j += 1
        if j == nb:
            return False
        pb = <tuple>b[j]
        if pb[0] != pa[0] or pb[1] < pa[1]:
            return False
        j += 1
    return True


cpdef object mono_div(tuple b, tuple a):
    cdef Py_ssize_t i = 0, j, na = len(a), nb = len(b)
    cdef tuple pa, pb
    cdef list out = []
    for j in range(nb):
        pb = <tuple>b[j]
        if i < na:
            pa = <tuple>a[i]
            if pa[0] == pb[0]:
                d = pb[1] - pa[1]
                if d < 0:
                    return None
                if d:
                    out.append((pb[0], d))
                i += 1
                continue
            if pa[0] > pb[0]:
                return None
        out.append(pb)
    if i < na:
        return None
    return tuple(out)


cpdef tuple mono_lcm(tuple a, tuple b):
    cdef Py_ssize_t i = 0, j = 0, na = len(a), nb = len(b)
    cdef tuple pa, pb
    cdef list out = []
    while i < na and j < nb:
        pa = <tuple>a[i]
        pb = <tuple>b[j]
        if pa[0] == pb[0]:
            out.append(pa if pa[1] >= pb[1] else pb)
            i += 1
            j += 1
        elif pa[0] > pb[0]:
            out.append(pa)
            i += 1
        else:
            out.append(pb)
            j += 1
    while i < na:
        out.append(a[i])
        i += 1
    while j < nb:
        out.append(b[j])
        j += 1
    return tuple(out)


cpdef object mono_degree(tuple a):
    cdef object s = 0
    cdef tuple p
    for p in a:
        s += p[1]
    return s


cpdef tuple terms_add(tuple f, tuple g):
    cdef Py_ssize_t i = 0, j = 0, nf = len(f), ng = len(g)
    cdef tuple tf, tg
    cdef list out = []
    while i < nf and j < ng:
        tf = <tuple>f[i]
        tg = <tuple>g[j]
        mf = tf[0]
        mg = tg[0]
        if mf == mg:
            c = tf[1] + tg[1]
            if c:
                out.append((mf, c))
            i += 1
            j += 1
        elif mf > mg:
            out.append(tf)
            i += 1
        else:
            out.append(tg)
            j += 1
    while i < nf:
        out.append(f[i])
        i += 1
    while j < ng:
        out.append(g[j])
        j += 1
    return tuple(out)


cpdef tuple terms_scale(tuple f, object c, tuple h=ONE):
    cdef tuple t
    cdef list out = []
    if not c:
        return ()
    if len(h):
        for t in f:
            out.append((mono_mul(<tuple>t[0], h), t[1] * c))
    else:
        for t in f:
            out.append((t[0], t[1] * c))
    return tuple(out)


cpdef tuple terms_addmul(tuple f, object c, tuple h, tuple g):
    return terms_add(f, terms_scale(g, c, h))


cpdef tuple terms_mul(tuple f, tuple g):
    cdef dict acc = {}
    cdef tuple tf, tg, m
    for tf in f:
        for tg in g:
            m = mono_mul(<tuple>tf[0], <tuple>tg[0])
            c = acc.get(m)
            if c is None:
                acc[m] = tf[1] * tg[1]
            else:
                acc[m] = c + tf[1] * tg[1]
    return tuple(sorted([(m, c) for m, c in acc.items() if c], reverse=True))


cpdef tuple terms_rename(tuple f, dict mapping):
    cdef tuple t, p
    cdef list out = []
    cdef list mono
    for t in f:
        mono = []
        for p in <tuple>t[0]:
            mono.append((mapping[p[0]], p[1]))
        out.append((tuple(mono), t[1]))
    return tuple(out)
