"""Pure-Python/numpy versions of the hot kernels.

Same signatures and results as the compiled ``_ckernels`` module; used
when the extension is missing or ``AGFUZZY_PURE=1`` is set.
"""

import numpy as np


def sup_min(table, f, g):
    """Sup-min product of two grade vectors over ``table``."""
    n = table.shape[0]
    out = np.zeros(n, dtype=np.int64)
    for y in range(n):
        fy = f[y]
        if fy == 0:
            continue
        row = table[y]
        for z in range(n):
            v = fy if fy < g[z] else g[z]
            x = row[z]
            if v > out[x]:
                out[x] = v
    return out


def product_table(table, grades, radix):
    """Index table of ``f o g`` for every pair of rows of ``grades``.

    ``grades`` is the (m, n) array of all grade vectors in big-endian
    mixed-radix order, so row ``i`` encodes index ``i``.
    """
    m, n = grades.shape
    g = grades.astype(np.int16)
    res = np.zeros((m, m, n), dtype=np.int16)
    for y in range(n):
        fy = g[:, y][:, None]
        for z in range(n):
            x = table[y, z]
            np.maximum(res[:, :, x], np.minimum(fy, g[:, z][None, :]), out=res[:, :, x])
    weights = radix ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return (res.astype(np.int64) @ weights).astype(np.int32)


def _propagate(t, n, trail, head):
    # drain the trail from ``head``, forcing products implied by the law
    def force(cell, v):
        if t[cell] < 0:
            t[cell] = v
            trail.append(cell)
            return True
        return t[cell] == v

    while head < len(trail):
        cell = trail[head]
        head += 1
        a, b = divmod(cell, n)
        u = t[cell]
        # (a b) z = (z b) a
        for z in range(n):
            w = t[z * n + b]
            if w < 0:
                continue
            lhs = t[u * n + z]
            if lhs >= 0:
                if not force(w * n + a, lhs):
                    return False
            else:
                rhs = t[w * n + a]
                if rhs >= 0:
                    force(u * n + z, rhs)
        # (x y) b = (b y) x with x y = a
        for x in range(n):
            for y in range(n):
                if t[x * n + y] != a:
                    continue
                w = t[b * n + y]
                if w >= 0 and not force(w * n + x, u):
                    return False
    return True


def ag_search(n, first=-1, limit=-1):
    """All labeled tables on n elements satisfying (ab)c = (cb)a.

    Decisions fill unassigned cells row-major with ascending values, and
    every instance of the law with three known products forces the
    fourth. Output is in lexicographic order of the flattened table.
    ``first`` pins cell (0, 0); ``limit`` stops after that many tables.
    """
    cells = n * n
    t = [-1] * cells
    trail = []
    found = []

    def extend(pos):
        while pos < cells and t[pos] >= 0:
            pos += 1
        if pos == cells:
            found.append(tuple(t))
            return limit >= 0 and len(found) >= limit
        values = [first] if (pos == 0 and first >= 0) else range(n)
        for v in values:
            mark = len(trail)
            t[pos] = v
            trail.append(pos)
            stop = _propagate(t, n, trail, mark) and extend(pos + 1)
            while len(trail) > mark:
                t[trail.pop()] = -1
            if stop:
                return True
        return False

    extend(0)
    return np.array(found, dtype=np.int8).reshape(len(found), cells)


def canonical_forms(tables, perms):
    """Lexicographically least relabeling of each flattened table."""
    count, cells = tables.shape
    inverses = np.argsort(perms, axis=1)
    out = np.empty_like(tables)
    n_perms, n = perms.shape
    for i in range(count):
        t = tables[i].reshape(n, n).astype(np.int64)
        # relabeled_p[a][b] = p(t[p^-1 a][p^-1 b])
        inner = t[inverses[:, :, None], inverses[:, None, :]].reshape(n_perms, cells)
        cand = np.take_along_axis(perms, inner, axis=1)
        out[i] = cand[np.lexsort(cand.T[::-1])[0]]
    return out
