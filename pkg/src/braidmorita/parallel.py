"""Deterministic fan-out capped by the BRAIDMORITA_THREADS environment variable."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")
U = TypeVar("U")


def max_workers() -> int:
    try:
        n = int(os.environ.get("BRAIDMORITA_THREADS", "1"))
    except ValueError:
        return 1
    return max(1, n)


def ordered_map(fn: Callable[[T], U], items: Iterable[T]) -> list[U]:
    """``list(map(fn, items))``, possibly on a thread pool; order is preserved."""
    items = list(items)
    workers = min(max_workers(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
