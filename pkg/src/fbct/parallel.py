"""Partition-and-merge driver shared by the table computations.

Work is split into contiguous chunks of the outer index, each chunk is handed
to a kernel on a thread pool, and the partial results are reassembled in
chunk order. Partial results never depend on the worker count, so the merged
output is identical for any ``threads`` value.
"""

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

THREADS_ENV = "SBOX_DEFAULT_THREADS"


def resolve_threads(threads: int | None = None) -> int:
    if threads is None:
        env = os.environ.get(THREADS_ENV, "").strip()
        threads = int(env) if env else (os.cpu_count() or 1)
    if threads < 1:
        raise ValueError(f"thread count must be positive, got {threads}")
    return threads


def map_chunks(fn, items: np.ndarray, threads: int | None = None) -> list:
    """Apply ``fn`` to contiguous chunks of ``items``; results in chunk order."""
    threads = resolve_threads(threads)
    chunks = [c for c in np.array_split(items, min(threads, max(1, len(items)))) if len(c)]
    if threads == 1 or len(chunks) <= 1:
        return [fn(c) for c in chunks]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, chunks))
