# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled state-sum kernels; same contracts as uindep._kernels_py."""

import numpy as np
cimport numpy as cnp

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


cdef inline int _find(int* parent, int x) noexcept nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def state_loop_counts(pairs0, pairs1, int n_edges):
    cdef long long[:, ::1] p0 = np.ascontiguousarray(pairs0, dtype=np.int64)
    cdef long long[:, ::1] p1 = np.ascontiguousarray(pairs1, dtype=np.int64)
    cdef int n = p0.shape[0]
    out_arr = np.empty(1 << n, dtype=np.int32)
    cdef int[::1] out = out_arr
    if n_edges == 0:
        out[0] = 1
        return out_arr
    if n_edges > 64:
        raise ValueError("too many edges for the compiled kernel")
    cdef int parent[64]
    cdef long long g
    cdef int i, j, comps, a, b, ra, rb
    with nogil:
        for g in range(1LL << n):
            for j in range(n_edges):
                parent[j] = j
            comps = n_edges
            for i in range(n):
                for j in range(2):
                    if (g >> i) & 1:
                        a = <int>p1[i, 2 * j]
                        b = <int>p1[i, 2 * j + 1]
                    else:
                        a = <int>p0[i, 2 * j]
                        b = <int>p0[i, 2 * j + 1]
                    ra = _find(parent, a)
                    rb = _find(parent, b)
                    if ra != rb:
                        parent[ra] = rb
                        comps -= 1
            out[g] = comps
    return out_arr


def switch_histograms(loops, int n, targets):
    if n > 30:
        raise ValueError("n too large for the compiled kernel")
    cdef int[::1] lp = np.ascontiguousarray(loops, dtype=np.int32)
    cdef long long[::1] tg = np.ascontiguousarray(targets, dtype=np.int64)
    cdef int width = n + 2
    cdef int cells = (n + 1) * width
    cdef Py_ssize_t m_count = tg.shape[0]
    out_arr = np.zeros((m_count, cells), dtype=np.int64)
    cdef long long[:, ::1] out = out_arr
    cdef long long hist[1024]
    cdef Py_ssize_t m
    cdef int c
    cdef long long g, t, size = 1LL << n
    with nogil:
        for m in range(m_count):
            t = tg[m]
            for c in range(cells):
                hist[c] = 0
            for g in range(size):
                hist[__builtin_popcountll(<unsigned long long>(g ^ t)) * width + lp[g]] += 1
            for c in range(cells):
                out[m, c] = hist[c]
    return out_arr.reshape(m_count, n + 1, width)
