from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence, TypeVar

T = TypeVar("T")


def default_workers() -> int:
    env = os.environ.get("PERSYM_WORKERS")
    if env:
        return max(1, int(env))
    return 1


def split_range(lo: int, hi: int, parts: int) -> list[tuple[int, int]]:
    """Contiguous, deterministic split of ``[lo, hi)`` into at most ``parts`` pieces."""
    total = hi - lo
    parts = max(1, min(parts, total)) if total > 0 else 1
    step, extra = divmod(total, parts)
    out = []
    start = lo
    for p in range(parts):
        end = start + step + (1 if p < extra else 0)
        out.append((start, end))
        start = end
    return out


def map_chunks(fn: Callable[..., T], chunks: Sequence[tuple], workers: int) -> list[T]:
    """Apply ``fn(*chunk)`` to every chunk, in a process pool when ``workers > 1``.

    Results come back in chunk order regardless of scheduling.
    """
    if workers <= 1 or len(chunks) <= 1:
        return [fn(*c) for c in chunks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(fn, *c) for c in chunks]
        return [f.result() for f in futures]
