"""Order-preserving work mapping with an environment-controlled thread cap.

HAMFIX_THREADS caps the pool size (default: all cores).  Results always come
back in input order, so every downstream report is byte-identical no matter
how the work was scheduled.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def thread_count() -> int:
    raw = os.environ.get("HAMFIX_THREADS", "")
    if raw.strip():
        try:
            value = int(raw)
        except ValueError as err:
            raise ValueError(f"HAMFIX_THREADS must be an integer, got {raw!r}") from err
        if value < 1:
            raise ValueError("HAMFIX_THREADS must be at least 1")
        return value
    return os.cpu_count() or 1


def parallel_map(fn: Callable[[T], R], items: Iterable[T]) -> List[R]:
    work = list(items)
    threads = min(thread_count(), max(len(work), 1))
    if threads == 1 or len(work) < 2:
        return [fn(item) for item in work]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, work))
