# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; see ``_kernels_py`` for the reference semantics."""

import numpy as np
cimport numpy as cnp
from libc.stdlib cimport malloc, free

cnp.import_array()


def sup_min(table, f, g):
    cdef const long[:, :] t = np.ascontiguousarray(table, dtype=np.int64)
    cdef const long[:] fv = np.ascontiguousarray(f, dtype=np.int64)
    cdef const long[:] gv = np.ascontiguousarray(g, dtype=np.int64)
    cdef Py_ssize_t n = t.shape[0], y, z
    cdef long v, fy
    out = np.zeros(n, dtype=np.int64)
    cdef long[:] o = out
    for y in range(n):
        fy = fv[y]
        if fy == 0:
            continue
        for z in range(n):
            v = fy if fy < gv[z] else gv[z]
            if v > o[t[y, z]]:
                o[t[y, z]] = v
    return out


def product_table(table, grades, long radix):
    cdef const long[:, :] t = np.ascontiguousarray(table, dtype=np.int64)
    cdef const unsigned char[:, :] gr = np.ascontiguousarray(grades, dtype=np.uint8)
    cdef Py_ssize_t m = gr.shape[0], n = gr.shape[1]
    cdef Py_ssize_t i, j, y, z, x
    cdef unsigned char fy, v
    cdef long idx
    cdef unsigned char buf[64]
    cdef long weights[64]
    if n > 64:
        raise ValueError("carrier too large for product_table")
    weights[n - 1] = 1
    for x in range(n - 2, -1, -1):
        weights[x] = weights[x + 1] * radix
    out = np.empty((m, m), dtype=np.int32)
    cdef int[:, :] o = out
    for i in range(m):
        for j in range(m):
            for x in range(n):
                buf[x] = 0
            for y in range(n):
                fy = gr[i, y]
                if fy == 0:
                    continue
                for z in range(n):
                    v = fy if fy < gr[j, z] else gr[j, z]
                    x = t[y, z]
                    if v > buf[x]:
                        buf[x] = v
            idx = 0
            for x in range(n):
                idx += buf[x] * weights[x]
            o[i, j] = <int>idx
    return out


cdef inline bint _force(int *t, int *trail, int *top, int cell, int v) nogil:
    if t[cell] < 0:
        t[cell] = v
        trail[top[0]] = cell
        top[0] += 1
        return True
    return t[cell] == v


cdef bint _propagate(int *t, int n, int *trail, int *top, int head) nogil:
    # drain the trail from ``head``; each entry is a freshly assigned cell
    cdef int cell, a, b, u, w, lhs, rhs, x, y, z
    while head < top[0]:
        cell = trail[head]
        head += 1
        a = cell // n
        b = cell % n
        u = t[cell]
        # (a b) z = (z b) a
        for z in range(n):
            w = t[z * n + b]
            if w < 0:
                continue
            lhs = t[u * n + z]
            rhs = t[w * n + a]
            if lhs >= 0:
                if not _force(t, trail, top, w * n + a, lhs):
                    return False
            elif rhs >= 0:
                _force(t, trail, top, u * n + z, rhs)
        # (x y) b = (b y) x with x y = a
        for x in range(n):
            for y in range(n):
                if t[x * n + y] != a:
                    continue
                w = t[b * n + y]
                if w < 0:
                    continue
                if not _force(t, trail, top, w * n + x, u):
                    return False
    return True


def ag_search(int n, int first=-1, long limit=-1):
    cdef int cells = n * n
    if cells > 64:
        raise ValueError("order too large for ag_search")
    cdef int t[64]
    cdef int trail[64]
    cdef int dcell[64]
    cdef int dmark[64]
    cdef int top = 0, depth = 0, pos, v, hi, c, mark
    cdef bytearray found = bytearray()
    cdef signed char row[64]
    cdef long count = 0
    cdef bint ok
    for c in range(cells):
        t[c] = -1
    # decisions go row-major over unassigned cells, values ascending;
    # forced cells live on the trail and are undone with their decision
    pos = 0
    v = first if first >= 0 else 0
    while True:
        while pos < cells and t[pos] >= 0:
            pos += 1
        if pos == cells:
            for c in range(cells):
                row[c] = <signed char>t[c]
            found.extend((<char *>row)[:cells])
            count += 1
            if limit >= 0 and count >= limit:
                break
            ok = False
        else:
            hi = first + 1 if (pos == 0 and first >= 0) else n
            ok = False
            while v < hi:
                mark = top
                t[pos] = v
                trail[top] = pos
                top += 1
                if _propagate(t, n, trail, &top, mark):
                    dcell[depth] = pos
                    dmark[depth] = mark
                    depth += 1
                    ok = True
                    break
                while top > mark:
                    top -= 1
                    t[trail[top]] = -1
                v += 1
            if ok:
                pos += 1
                v = 0
                continue
        # backtrack to the latest decision with values left
        if depth == 0:
            break
        depth -= 1
        pos = dcell[depth]
        v = t[pos] + 1
        mark = dmark[depth]
        while top > mark:
            top -= 1
            t[trail[top]] = -1
    return np.frombuffer(bytes(found), dtype=np.int8).reshape(count, cells).copy()


def canonical_forms(tables, perms):
    cdef const signed char[:, :] tb = np.ascontiguousarray(tables, dtype=np.int8)
    cdef const long[:, :] pm = np.ascontiguousarray(perms, dtype=np.int64)
    cdef const long[:, :] inv = np.ascontiguousarray(np.argsort(perms, axis=1), dtype=np.int64)
    cdef Py_ssize_t count = tb.shape[0], cells = tb.shape[1]
    cdef Py_ssize_t n_perms = pm.shape[0], n = pm.shape[1]
    cdef Py_ssize_t i, p, c, a, b
    cdef signed char cand[64]
    cdef signed char v
    cdef int state
    if cells > 64:
        raise ValueError("order too large for canonical_forms")
    out = np.empty((count, cells), dtype=np.int8)
    cdef signed char[:, :] o = out
    for i in range(count):
        for c in range(cells):
            o[i, c] = tb[i, c]
        for p in range(n_perms):
            # state: 0 undecided, -1 candidate smaller so far, 1 larger
            state = 0
            for c in range(cells):
                a = c // n
                b = c % n
                v = <signed char>pm[p, tb[i, inv[p, a] * n + inv[p, b]]]
                cand[c] = v
                if state == 0:
                    if v < o[i, c]:
                        state = -1
                    elif v > o[i, c]:
                        state = 1
                        break
            if state == -1:
                for c in range(cells):
                    o[i, c] = cand[c]
    return out
