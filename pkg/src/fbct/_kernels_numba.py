"""numba-compiled table kernels.

Signatures mirror ``_kernels_numpy`` exactly. ``s`` is the lookup table of the
function (int64, length 2^n). Kernels release the GIL so the thread-pool
partitioning in ``fbct.parallel`` gets real concurrency.
"""

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def fbct_block(s, a_arr, b_arr):
    size = s.shape[0]
    out = np.zeros((a_arr.shape[0], b_arr.shape[0]), dtype=np.int64)
    t = np.empty(size, dtype=np.int64)
    for i in range(a_arr.shape[0]):
        a = a_arr[i]
        for x in range(size):
            t[x] = s[x] ^ s[x ^ a]
        for j in range(b_arr.shape[0]):
            b = b_arr[j]
            cnt = 0
            for x in range(size):
                if t[x] == t[x ^ b]:
                    cnt += 1
            out[i, j] = cnt
    return out


@njit(cache=True, nogil=True)
def ddt_rows(s, a_arr):
    size = s.shape[0]
    out = np.zeros((a_arr.shape[0], size), dtype=np.int64)
    for i in range(a_arr.shape[0]):
        a = a_arr[i]
        for x in range(size):
            out[i, s[x] ^ s[x ^ a]] += 1
    return out


@njit(cache=True, nogil=True)
def bct_rows(s, a_arr):
    size = s.shape[0]
    out = np.zeros((a_arr.shape[0], size), dtype=np.int64)
    for i in range(a_arr.shape[0]):
        a = a_arr[i]
        for x in range(size):
            sx = s[x]
            sxa = s[x ^ a]
            for y in range(size):
                b = sx ^ s[y]
                if b == (sxa ^ s[y ^ a]):
                    out[i, b] += 1
    return out


@njit(cache=True, nogil=True)
def _bct_entry_csr(s, order, starts, a, b):
    cnt = 0
    for x in range(s.shape[0]):
        v = s[x] ^ b
        target = s[x ^ a] ^ b
        for k in range(starts[v], starts[v + 1]):
            if s[order[k] ^ a] == target:
                cnt += 1
    return cnt


def bct_entry(s, a, b):
    # y ranges over preimages of F(x)+b only, so the cost is O(2^n) for permutations
    order = np.argsort(s, kind="stable").astype(np.int64)
    starts = np.zeros(s.shape[0] + 1, dtype=np.int64)
    np.cumsum(np.bincount(s, minlength=s.shape[0]), out=starts[1:])
    return int(_bct_entry_csr(s, order, starts, np.int64(a), np.int64(b)))
