"""Brute-force counts and classical recurrences used as independent checks.

Nothing here touches Stirling-number code; everything is either direct
enumeration or a textbook recurrence.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import comb
from typing import Iterator


def set_partitions(n: int) -> Iterator[list[int]]:
    """Yield restricted growth strings: ``a[i]`` is the block label of element i+1."""
    if n == 0:
        yield []
        return

    def grow(prefix: list[int], top: int) -> Iterator[list[int]]:
        if len(prefix) == n:
            yield list(prefix)
            return
        for label in range(top + 2):
            prefix.append(label)
            yield from grow(prefix, max(top, label))
            prefix.pop()

    yield from grow([0], 0)


def count_r_partitions(n: int, k: int, r: int) -> int:
    """Partitions of {1..n} into k blocks with 1..r in distinct blocks."""
    total = 0
    for labels in set_partitions(n):
        blocks = max(labels) + 1 if labels else 0
        if blocks != k:
            continue
        if len(set(labels[:r])) == min(r, n):
            total += 1
    return total


def count_ordered_partitions(n: int) -> int:
    """Ordered set partitions of an n-set, counted as surjections onto [k]."""
    total = 1 if n == 0 else 0
    for k in range(1, n + 1):
        total += sum(1 for f in product(range(k), repeat=n) if len(set(f)) == k)
    return total


@lru_cache(maxsize=None)
def ordered_bell_recurrence(n: int) -> int:
    # a(n) = sum_{k=1}^{n} C(n, k) a(n-k), a(0) = 1
    if n == 0:
        return 1
    return sum(comb(n, k) * ordered_bell_recurrence(n - k) for k in range(1, n + 1))
