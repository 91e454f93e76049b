"""Order-preserving map over a process pool; results never depend on the worker count."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")
R = TypeVar("R")

ENV_VAR = "CANON_THREADS"


def resolve_threads(threads: int | str | None = None) -> int:
    """Explicit value, else $CANON_THREADS, else 1.  "auto" means os.cpu_count()."""
    if threads is None:
        threads = os.environ.get(ENV_VAR, 1)
    if threads == "auto":
        return os.cpu_count() or 1
    value = int(threads)
    if value < 1:
        raise ValueError(f"thread count must be positive, got {value}")
    return value


def pmap(fn: Callable[[T], R], items: Iterable[T], threads: int | str | None = None) -> list[R]:
    items = list(items)
    workers = resolve_threads(threads)
    if workers == 1 or len(items) < 2:
        return [fn(x) for x in items]
    chunk = max(1, len(items) // (4 * workers))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=chunk))
