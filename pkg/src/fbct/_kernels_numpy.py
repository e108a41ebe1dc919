"""Pure-numpy table kernels; same signatures as ``_kernels_numba``."""

import numpy as np

# cap on temporaries, in elements
_BLOCK = 1 << 22


def fbct_block(s, a_arr, b_arr):
    size = s.shape[0]
    xs = np.arange(size, dtype=np.int64)
    b_arr = np.asarray(b_arr, dtype=np.int64)
    out = np.zeros((len(a_arr), len(b_arr)), dtype=np.int64)
    rows = max(1, _BLOCK // size)
    for i, a in enumerate(a_arr):
        t = s ^ s[xs ^ a]
        for lo in range(0, len(b_arr), rows):
            bs = b_arr[lo:lo + rows]
            m = t[xs[None, :] ^ bs[:, None]]
            out[i, lo:lo + rows] = np.count_nonzero(m == t[None, :], axis=1)
    return out


def ddt_rows(s, a_arr):
    size = s.shape[0]
    xs = np.arange(size, dtype=np.int64)
    out = np.zeros((len(a_arr), size), dtype=np.int64)
    for i, a in enumerate(a_arr):
        out[i] = np.bincount(s ^ s[xs ^ a], minlength=size)
    return out


def bct_rows(s, a_arr):
    size = s.shape[0]
    xs = np.arange(size, dtype=np.int64)
    out = np.zeros((len(a_arr), size), dtype=np.int64)
    chunk = max(1, _BLOCK // size)
    for i, a in enumerate(a_arr):
        sa = s[xs ^ a]
        for lo in range(0, size, chunk):
            b1 = s[lo:lo + chunk, None] ^ s[None, :]
            b2 = sa[lo:lo + chunk, None] ^ sa[None, :]
            out[i] += np.bincount(b1[b1 == b2], minlength=size)
    return out


def bct_entry(s, a, b):
    size = s.shape[0]
    xs = np.arange(size, dtype=np.int64)
    order = np.argsort(s, kind="stable")
    counts = np.bincount(s, minlength=size)
    starts = np.concatenate([[0], np.cumsum(counts)])
    v = s ^ b
    reps = counts[v]
    total = int(reps.sum())
    if total == 0:
        return 0
    x_rep = np.repeat(xs, reps)
    first = np.repeat(starts[v], reps)
    offset = np.arange(total) - np.repeat(np.cumsum(reps) - reps, reps)
    y = order[first + offset]
    return int(np.count_nonzero(s[y ^ a] == (s[x_rep ^ a] ^ b)))
