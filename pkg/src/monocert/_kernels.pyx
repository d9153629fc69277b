# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled lattice kernels; mirrors monocert._kernels_py exactly."""

import numpy as np

cimport numpy as cnp

cnp.import_array()

INF = 1 << 20

cdef cnp.int32_t C_INF = 1 << 20

ctypedef fused value_t:
    cnp.uint8_t
    cnp.float64_t


def weight_table(int n):
    cdef cnp.int64_t size = 1 << n
    out_arr = np.zeros(size, dtype=np.uint8)
    cdef cnp.uint8_t[::1] out = out_arr
    cdef cnp.int64_t x
    for x in range(1, size):
        out[x] = out[x >> 1] + (x & 1)
    return out_arr


def dnf_table(int n, masks):
    cdef const cnp.int64_t[::1] ms = np.ascontiguousarray(masks, dtype=np.int64)
    cdef cnp.int64_t size = 1 << n
    out_arr = np.zeros(size, dtype=np.uint8)
    cdef cnp.uint8_t[::1] out = out_arr
    cdef cnp.int64_t x, m
    cdef Py_ssize_t j, count = ms.shape[0]
    for x in range(size):
        for j in range(count):
            m = ms[j]
            if (x & m) == m:
                out[x] = 1
                break
    return out_arr


cdef void _propagate_up(cnp.int32_t[::1] m, int n) noexcept:
    # after this, m[x] = min over subsets y of x of the original m[y]
    cdef cnp.int64_t size = m.shape[0]
    cdef cnp.int64_t step, base, lo, x0, x1
    cdef int i
    for i in range(n):
        step = 1 << i
        base = 0
        while base < size:
            for lo in range(step):
                x0 = base + lo
                x1 = x0 + step
                if m[x0] < m[x1]:
                    m[x1] = m[x0]
            base += step << 1


cdef void _propagate_down(cnp.int32_t[::1] m, int n) noexcept:
    # after this, m[x] = min over supersets y of x of the original m[y]
    cdef cnp.int64_t size = m.shape[0]
    cdef cnp.int64_t step, base, lo, x0, x1
    cdef int i
    for i in range(n):
        step = 1 << i
        base = 0
        while base < size:
            for lo in range(step):
                x0 = base + lo
                x1 = x0 + step
                if m[x1] < m[x0]:
                    m[x0] = m[x1]
            base += step << 1


def min_true_weight_below(table, int n):
    cdef const cnp.uint8_t[::1] t = np.ascontiguousarray(table, dtype=np.uint8)
    cdef cnp.int64_t size = 1 << n
    w = weight_table(n)
    cdef cnp.uint8_t[::1] wv = w
    out_arr = np.empty(size, dtype=np.int32)
    cdef cnp.int32_t[::1] out = out_arr
    cdef cnp.int64_t x
    for x in range(size):
        out[x] = wv[x] if t[x] != 0 else C_INF
    _propagate_up(out, n)
    return out_arr


def min_false_coweight_above(table, int n):
    cdef const cnp.uint8_t[::1] t = np.ascontiguousarray(table, dtype=np.uint8)
    cdef cnp.int64_t size = 1 << n
    w = weight_table(n)
    cdef cnp.uint8_t[::1] wv = w
    out_arr = np.empty(size, dtype=np.int32)
    cdef cnp.int32_t[::1] out = out_arr
    cdef cnp.int64_t x
    for x in range(size):
        out[x] = (n - wv[x]) if t[x] == 0 else C_INF
    _propagate_down(out, n)
    return out_arr


def certificate_sizes(table, int n):
    cdef const cnp.uint8_t[::1] t = np.ascontiguousarray(table, dtype=np.uint8)
    below_arr = min_true_weight_below(table, n)
    above_arr = min_false_coweight_above(table, n)
    cdef cnp.int32_t[::1] below = below_arr
    cdef cnp.int32_t[::1] above = above_arr
    cdef cnp.int64_t size = 1 << n
    out_arr = np.empty(size, dtype=np.int32)
    cdef cnp.int32_t[::1] out = out_arr
    cdef cnp.int64_t x
    for x in range(size):
        out[x] = below[x] if t[x] != 0 else above[x]
    return out_arr


def certificate_sizes_real(values, int n):
    cdef const cnp.float64_t[::1] v = np.ascontiguousarray(values, dtype=np.float64)
    cdef cnp.int64_t size = 1 << n
    cdef cnp.int64_t full = size - 1
    w = weight_table(n)
    cdef cnp.uint8_t[::1] wv = w
    order_arr = np.argsort(w, kind="stable").astype(np.int64)
    cdef cnp.int64_t[::1] order = order_arr
    out_arr = np.full(size, C_INF, dtype=np.int32)
    cdef cnp.int32_t[::1] out = out_arr
    cdef cnp.int64_t idx, s, x, unset = size
    cdef cnp.int32_t ws
    for idx in range(size):
        s = order[idx]
        ws = wv[s]
        for x in range(size):
            if out[x] == C_INF and v[x & s] == v[x | (full ^ s)]:
                out[x] = ws
                unset -= 1
        if unset == 0:
            break
    return out_arr


def first_monotone_violation(const value_t[::1] values, int n):
    cdef cnp.int64_t size = values.shape[0]
    cdef cnp.int64_t step, base, lo, x
    cdef int i
    for i in range(n):
        step = 1 << i
        base = 0
        while base < size:
            for lo in range(step):
                x = base + lo
                if values[x] > values[x + step]:
                    return (x << 6) | i
            base += step << 1
    return -1
