"""Pure-Python Smith normal form kernel.

Sparse elimination over arbitrary-precision integers.  The compiled twin
(polysmash._snf_cy) implements the same algorithm; polysmash.exactlin picks
whichever is available at import time.

The matrix is handed over as a dict {(row, col): value} with no zero values.
"""


def snf_diagonal(entries, nrows, ncols):
    """Diagonalize an integer matrix by elementary row/column operations.

    Returns the list of nonzero diagonal values (absolute values, in pivot
    order, divisibility NOT yet enforced).  Pivot choice: smallest absolute
    value, ties broken by Markowitz fill count, to limit coefficient growth.
    """
    # row -> {col: val}, col -> set of rows
    rows = {}
    colrows = {}
    for (i, j), v in entries.items():
        if v:
            rows.setdefault(i, {})[j] = v
            colrows.setdefault(j, set()).add(i)

    diagonal = []
    while rows:
        # pivot selection
        best = None
        best_key = None
        for i, row in rows.items():
            rlen = len(row)
            for j, v in row.items():
                key = (abs(v), (rlen - 1) * (len(colrows[j]) - 1))
                if best_key is None or key < best_key:
                    best_key = key
                    best = (i, j)
                    if key[0] == 1 and key[1] == 0:
                        break
            else:
                continue
            break
        pi, pj = best

        while True:
            p = rows[pi][pj]
            # clear the pivot column by row operations
            for i in list(colrows[pj]):
                if i == pi:
                    continue
                a = rows[i][pj]
                q = a // p
                if q:
                    _row_axpy(rows, colrows, i, pi, -q)
                if rows.get(i, {}).get(pj):
                    # remainder left: it is smaller than |p|, make it the pivot
                    pi = i
                    break
            else:
                # column clear; clear the pivot row by column operations
                prow = rows[pi]
                for j in list(prow):
                    if j == pj:
                        continue
                    a = prow[j]
                    q = a // p
                    if q:
                        _col_axpy(rows, colrows, j, pj, -q)
                    if rows.get(pi, {}).get(j):
                        pj = j
                        break
                else:
                    break
                continue
        diagonal.append(abs(rows[pi][pj]))
        _drop_entry(rows, colrows, pi, pj)
        # pivot row/col are now empty except the removed pivot
        if pi in rows and not rows[pi]:
            del rows[pi]
    return diagonal


def _row_axpy(rows, colrows, i, k, c):
    """row_i += c * row_k (c nonzero)."""
    target = rows.setdefault(i, {})
    for j, v in rows[k].items():
        w = target.get(j, 0) + c * v
        if w:
            target[j] = w
            colrows.setdefault(j, set()).add(i)
        elif j in target:
            del target[j]
            colrows[j].discard(i)
            if not colrows[j]:
                del colrows[j]
    if not target:
        del rows[i]


def _col_axpy(rows, colrows, j, k, c):
    """col_j += c * col_k (c nonzero)."""
    for i in list(colrows.get(k, ())):
        v = rows[i][k]
        w = rows[i].get(j, 0) + c * v
        if w:
            rows[i][j] = w
            colrows.setdefault(j, set()).add(i)
        elif j in rows[i]:
            del rows[i][j]
            if not rows[i]:
                del rows[i]
            colrows[j].discard(i)
            if not colrows[j]:
                del colrows[j]


def _drop_entry(rows, colrows, i, j):
    del rows[i][j]
    colrows[j].discard(i)
    if not colrows[j]:
        del colrows[j]
