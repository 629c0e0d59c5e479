"""Deterministic sweeps over the space of set systems.

A system on [n] is encoded as an n*n-bit integer (field j holds the
characteristic vector of V_j); sweeps walk the encodings in ascending
order, optionally with a fixed stride for sampling, so "the first
counterexample" is well defined and runs are reproducible.

Parallel runs split the encoding range into contiguous chunks, process
chunks in separate workers, and merge the per-chunk results in chunk
order - the aggregate is byte-identical for any worker count.
"""

from __future__ import annotations

import multiprocessing as mp
from typing import Any, Callable, Iterator, Sequence

CHUNKS_PER_WORKER = 4


def system_count(n: int) -> int:
    return 1 << (n * n)


def encodings(n: int, stride: int = 1) -> Iterator[int]:
    return iter(range(0, system_count(n), stride))


def chunk_ranges(n: int, stride: int,
                 chunks: int) -> list[tuple[int, int, int]]:
    """Split the strided encoding walk into contiguous (start, stop,
    stride) pieces covering it exactly, in order."""
    total = (system_count(n) + stride - 1) // stride
    chunks = max(1, min(chunks, total))
    out = []
    per = (total + chunks - 1) // chunks
    for c in range(chunks):
        lo = c * per
        hi = min(total, (c + 1) * per)
        if lo >= hi:
            break
        out.append((lo * stride, hi * stride, stride))
    return out


def run_chunked(chunk_fn: Callable[[tuple], Any], args: Sequence[tuple],
                workers: int) -> list[Any]:
    """Apply chunk_fn to each args tuple, in parallel when workers > 1,
    returning results in input order."""
    if workers <= 1 or len(args) <= 1:
        return [chunk_fn(a) for a in args]
    ctx = mp.get_context("fork")
    with ctx.Pool(processes=workers) as pool:
        return list(pool.imap(chunk_fn, args))
