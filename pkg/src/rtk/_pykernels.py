"""Pure-Python hot loops.  Mirrors ``_ckernels.pyx`` function for function.

All routines are generic over exact scalar objects (Fraction, QuadExt):
they only use ``+ - * /`` and truthiness.  Inputs must already be exact
scalars; plain ints would turn divisions into floats.
"""


def row_reduce(m, ncols):
    """Gauss-Jordan elimination of the row list ``m`` in place.

    Returns the list of pivot columns; afterwards the first ``len(pivots)``
    rows are the reduced row echelon form and the rest are zero.
    """
    nrows = len(m)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        prow = m[r]
        p = prow[c]
        for j in range(c, ncols):
            if prow[j]:
                prow[j] = prow[j] / p
        nz = [j for j in range(c, ncols) if prow[j]]
        for i in range(nrows):
            if i == r:
                continue
            row = m[i]
            f = row[c]
            if f:
                for j in nz:
                    row[j] = row[j] - f * prow[j]
        pivots.append(c)
        r += 1
    return pivots


def matmul(a, b):
    n = len(a)
    k = len(b)
    m = len(b[0]) if k else 0
    zero = a[0][0] * 0 if n and k else 0
    out = []
    for i in range(n):
        ai = a[i]
        row = [zero] * m
        for t in range(k):
            x = ai[t]
            if x:
                bt = b[t]
                for j in range(m):
                    y = bt[j]
                    if y:
                        row[j] = row[j] + x * y
        out.append(row)
    return out


def sparse_table(c, dim):
    """``nz[i][j]`` = list of ``(k, c[i][j][k])`` with nonzero coefficient."""
    return [[[(k, v) for k, v in enumerate(c[i][j]) if v] for j in range(dim)]
            for i in range(dim)]


def bracket(nz, dim, x, y, zero):
    out = [zero] * dim
    for i in range(dim):
        xi = x[i]
        if not xi:
            continue
        row = nz[i]
        for j in range(dim):
            yj = y[j]
            if not yj:
                continue
            f = xi * yj
            for k, v in row[j]:
                out[k] = out[k] + f * v
    return out


def jacobi_failures(c, dim, zero, limit=-1):
    """Basis triples ``i < j < k`` violating Jacobi for structure constants c.

    ``c[i][j][k]`` is the coefficient of ``x_k`` in ``[x_i, x_j]``.
    """
    nz = sparse_table(c, dim)
    bad = []
    for i in range(dim):
        for j in range(i + 1, dim):
            for k in range(j + 1, dim):
                acc = [zero] * dim
                for a, b, cc in ((i, j, k), (j, k, i), (k, i, j)):
                    # [x_a, [x_b, x_c]]
                    rowa = nz[a]
                    for m, v in nz[b][cc]:
                        for t, w in rowa[m]:
                            acc[t] = acc[t] + v * w
                if any(acc):
                    bad.append((i, j, k))
                    if limit >= 0 and len(bad) >= limit:
                        return bad
    return bad


def killing_matrix(c, dim, zero):
    """``B[i][j] = Tr(ad x_i ad x_j) = sum_{k,l} c[i][k][l] c[j][l][k]``."""
    nz = sparse_table(c, dim)
    out = [[zero] * dim for _ in range(dim)]
    for i in range(dim):
        for j in range(i, dim):
            s = zero
            for k in range(dim):
                for l, v in nz[i][k]:
                    w = c[j][l][k]
                    if w:
                        s = s + v * w
            out[i][j] = s
            out[j][i] = s
    return out
