"""Compiled kernels: SPF sieve, prime-power split tables, and the value
recurrences over 1..n. Contracts match unitring.kernels.fallback."""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def build_spf(long long limit):
    limit = max(limit, 1)
    if limit >= 2**31:
        raise ValueError("sieve limit must fit in int32")
    spf_arr = np.arange(limit + 1, dtype=np.int32)
    cdef cnp.int32_t[::1] spf = spf_arr
    cdef long long root = 1, p, m, i
    while (root + 1) * (root + 1) <= limit:
        root += 1
    # conditional sieve on the tiny range below sqrt(limit) to find the
    # primes; then one unconditional store pass per prime, largest prime
    # first, so every slot ends on its smallest prime factor. The strided
    # loops are while loops on purpose: range() with a variable step stays
    # a Python-level iterator.
    primes = []
    for p in range(2, root + 1):
        if spf[p] == p:
            primes.append(p)
            m = p * p
            while m <= root:
                if spf[m] == m:
                    spf[m] = <cnp.int32_t> p
                m += p
    for i in range(len(primes) - 1, -1, -1):
        p = primes[i]
        m = p * p
        while m <= limit:
            spf[m] = <cnp.int32_t> p
            m += p
    return spf_arr


def split_tables(cnp.int32_t[::1] spf, long long n):
    if n + 1 > spf.shape[0]:
        raise ValueError("spf table smaller than requested range")
    comp_arr = np.zeros(n + 1, dtype=np.int64)
    cof_arr = np.zeros(n + 1, dtype=np.int64)
    cdef cnp.int64_t[::1] comp = comp_arr
    cdef cnp.int64_t[::1] cof = cof_arr
    cdef long long m, p, q, c
    if n >= 1:
        comp[1] = 1
        cof[1] = 1
    for m in range(2, n + 1):
        p = spf[m]
        q = p
        c = m // p
        while c > 1 and spf[c] == p:
            q *= p
            c //= p
        comp[m] = q
        cof[m] = c
    return comp_arr, cof_arr


def multiplicative_values(double complex[::1] ppval,
                          cnp.int64_t[::1] component,
                          cnp.int64_t[::1] cofactor):
    cdef Py_ssize_t n = component.shape[0] - 1
    if ppval.shape[0] != n + 1 or cofactor.shape[0] != n + 1:
        raise ValueError("table length mismatch")
    out_arr = np.zeros(n + 1, dtype=np.complex128)
    cdef double complex[::1] out = out_arr
    cdef Py_ssize_t m
    if n >= 1:
        out[1] = 1.0
    for m in range(2, n + 1):
        out[m] = out[cofactor[m]] * ppval[component[m]]
    return out_arr


def additive_values(double complex[::1] ppval,
                    cnp.int64_t[::1] component,
                    cnp.int64_t[::1] cofactor):
    cdef Py_ssize_t n = component.shape[0] - 1
    if ppval.shape[0] != n + 1 or cofactor.shape[0] != n + 1:
        raise ValueError("table length mismatch")
    out_arr = np.zeros(n + 1, dtype=np.complex128)
    cdef double complex[::1] out = out_arr
    cdef Py_ssize_t m
    for m in range(2, n + 1):
        out[m] = out[cofactor[m]] + ppval[component[m]]
    return out_arr
