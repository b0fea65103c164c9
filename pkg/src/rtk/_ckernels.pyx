# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the hot loops in ``_pykernels``.

Same signatures and semantics; scalars stay Python objects (Fraction or
QuadExt), so the gain comes from typed indices and list access.
"""


def row_reduce(list m, Py_ssize_t ncols):
    cdef Py_ssize_t nrows = len(m)
    cdef Py_ssize_t r = 0, c, i, j, piv, t, nnz
    cdef list pivots = []
    cdef list prow, row, nz
    cdef object p, f
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if (<list>m[i])[c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        prow = <list>m[r]
        p = prow[c]
        nz = []
        for j in range(c, ncols):
            if prow[j]:
                prow[j] = prow[j] / p
                nz.append(j)
        nnz = len(nz)
        for i in range(nrows):
            if i == r:
                continue
            row = <list>m[i]
            f = row[c]
            if f:
                for t in range(nnz):
                    j = <Py_ssize_t>nz[t]
                    row[j] = row[j] - f * prow[j]
        pivots.append(c)
        r += 1
    return pivots


def matmul(list a, list b):
    cdef Py_ssize_t n = len(a), k = len(b), m, i, j, t
    cdef list ai, bt, row, out = []
    cdef object x, y, zero
    m = len(b[0]) if k else 0
    zero = a[0][0] * 0 if n and k else 0
    for i in range(n):
        ai = <list>a[i]
        row = [zero] * m
        for t in range(k):
            x = ai[t]
            if x:
                bt = <list>b[t]
                for j in range(m):
                    y = bt[j]
                    if y:
                        row[j] = row[j] + x * y
        out.append(row)
    return out


def sparse_table(list c, Py_ssize_t dim):
    cdef Py_ssize_t i, j, k
    cdef list out = [], outi, cij, entry
    for i in range(dim):
        outi = []
        for j in range(dim):
            cij = <list>(<list>c[i])[j]
            entry = []
            for k in range(dim):
                if cij[k]:
                    entry.append((k, cij[k]))
            outi.append(entry)
        out.append(outi)
    return out


def bracket(list nz, Py_ssize_t dim, x, y, zero):
    cdef list out = [zero] * dim
    cdef list row, terms
    cdef Py_ssize_t i, j, k, t
    cdef object xi, yj, f, v
    for i in range(dim):
        xi = x[i]
        if not xi:
            continue
        row = <list>nz[i]
        for j in range(dim):
            yj = y[j]
            if not yj:
                continue
            f = xi * yj
            terms = <list>row[j]
            for t in range(len(terms)):
                k, v = terms[t]
                out[k] = out[k] + f * v
    return out


def jacobi_failures(list c, Py_ssize_t dim, zero, Py_ssize_t limit=-1):
    cdef list nz = sparse_table(c, dim)
    cdef list bad = [], acc, rowa, inner, outer
    cdef Py_ssize_t i, j, k, a, b, cc, s, u, m, t, q
    cdef object v, w
    cdef bint nonzero
    cdef Py_ssize_t trip[9]
    for i in range(dim):
        for j in range(i + 1, dim):
            for k in range(j + 1, dim):
                trip[0] = i; trip[1] = j; trip[2] = k
                trip[3] = j; trip[4] = k; trip[5] = i
                trip[6] = k; trip[7] = i; trip[8] = j
                acc = [zero] * dim
                for s in range(3):
                    a = trip[3 * s]
                    b = trip[3 * s + 1]
                    cc = trip[3 * s + 2]
                    rowa = <list>nz[a]
                    inner = <list>(<list>nz[b])[cc]
                    for u in range(len(inner)):
                        m, v = inner[u]
                        outer = <list>rowa[m]
                        for q in range(len(outer)):
                            t, w = outer[q]
                            acc[t] = acc[t] + v * w
                nonzero = False
                for t in range(dim):
                    if acc[t]:
                        nonzero = True
                        break
                if nonzero:
                    bad.append((i, j, k))
                    if limit >= 0 and len(bad) >= limit:
                        return bad
    return bad


def killing_matrix(list c, Py_ssize_t dim, zero):
    cdef list nz = sparse_table(c, dim)
    cdef list out = [[zero] * dim for _ in range(dim)]
    cdef list terms
    cdef Py_ssize_t i, j, k, l, u
    cdef object s, v, w
    for i in range(dim):
        for j in range(i, dim):
            s = zero
            for k in range(dim):
                terms = <list>(<list>nz[i])[k]
                for u in range(len(terms)):
                    l, v = terms[u]
                    w = (<list>(<list>c[j])[l])[k]
                    if w:
                        s = s + v * w
            (<list>out[i])[j] = s
            (<list>out[j])[i] = s
    return out
