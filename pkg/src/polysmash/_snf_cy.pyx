# cython: language_level=3
# cython: boundscheck=False
"""Compiled Smith normal form kernel.

Same sparse elimination as _snf_py (smallest-pivot with Markowitz tie break),
with typed index bookkeeping.  Matrix values stay Python ints, so arbitrary
precision is preserved; the speedup comes from the typed inner loops and the
reduced interpreter overhead in the axpy helpers.
"""


cdef inline void _row_axpy(dict rows, dict colrows, Py_ssize_t i, Py_ssize_t k, c):
    # row_i += c * row_k (c nonzero)
    cdef dict target = rows.setdefault(i, {})
    cdef dict source = <dict> rows[k]
    cdef set col
    for j, v in source.items():
        w = target.get(j, 0) + c * v
        if w:
            target[j] = w
            col = <set> colrows.setdefault(j, set())
            col.add(i)
        elif j in target:
            del target[j]
            col = <set> colrows[j]
            col.discard(i)
            if not col:
                del colrows[j]
    if not target:
        del rows[i]


cdef inline void _col_axpy(dict rows, dict colrows, Py_ssize_t j, Py_ssize_t k, c):
    # col_j += c * col_k (c nonzero)
    cdef dict row
    cdef set col
    for i in list(<set> colrows.get(k, set())):
        row = <dict> rows[i]
        w = row.get(j, 0) + c * row[k]
        if w:
            row[j] = w
            col = <set> colrows.setdefault(j, set())
            col.add(i)
        elif j in row:
            del row[j]
            if not row:
                del rows[i]
            col = <set> colrows[j]
            col.discard(i)
            if not col:
                del colrows[j]


cdef inline void _drop_entry(dict rows, dict colrows, Py_ssize_t i, Py_ssize_t j):
    del (<dict> rows[i])[j]
    cdef set col = <set> colrows[j]
    col.discard(i)
    if not col:
        del colrows[j]


def snf_diagonal(dict entries, Py_ssize_t nrows, Py_ssize_t ncols):
    """Diagonalize an integer matrix by elementary row/column operations.

    Returns the nonzero diagonal (absolute values, in pivot order,
    divisibility not yet enforced).
    """
    cdef dict rows = {}
    cdef dict colrows = {}
    cdef dict row, prow
    cdef set col
    cdef Py_ssize_t i, j, pi, pj, rlen, fill
    cdef bint done, found_unit

    for key, v in entries.items():
        if v:
            i = <Py_ssize_t> key[0]
            j = <Py_ssize_t> key[1]
            rows.setdefault(i, {})[j] = v
            colrows.setdefault(j, set()).add(i)

    diagonal = []
    while rows:
        best_i = best_j = -1
        best_abs = None
        best_fill = 0
        found_unit = False
        for ik, rowo in rows.items():
            row = <dict> rowo
            rlen = len(row)
            for jk, v in row.items():
                a = -v if v < 0 else v
                fill = (rlen - 1) * (len(<set> colrows[jk]) - 1)
                if best_abs is None or a < best_abs or (a == best_abs and fill < best_fill):
                    best_abs = a
                    best_fill = fill
                    best_i = <Py_ssize_t> ik
                    best_j = <Py_ssize_t> jk
                    if a == 1 and fill == 0:
                        found_unit = True
                        break
            if found_unit:
                break
        pi = best_i
        pj = best_j

        while True:
            p = (<dict> rows[pi])[pj]
            done = True
            for io in list(<set> colrows[pj]):
                i = <Py_ssize_t> io
                if i == pi:
                    continue
                a = (<dict> rows[i])[pj]
                q = a // p
                if q:
                    _row_axpy(rows, colrows, i, pi, -q)
                row = <dict> rows.get(i, {})
                if row.get(pj):
                    # remainder smaller than |p|: promote it to pivot
                    pi = i
                    done = False
                    break
            if not done:
                continue
            prow = <dict> rows[pi]
            done = True
            for jo in list(prow):
                j = <Py_ssize_t> jo
                if j == pj:
                    continue
                a = prow[j]
                q = a // p
                if q:
                    _col_axpy(rows, colrows, j, pj, -q)
                if (<dict> rows[pi]).get(j):
                    pj = j
                    done = False
                    break
            if done:
                break
        p = (<dict> rows[pi])[pj]
        diagonal.append(-p if p < 0 else p)
        _drop_entry(rows, colrows, pi, pj)
        if pi in rows and not <dict> rows[pi]:
            del rows[pi]
    return diagonal
