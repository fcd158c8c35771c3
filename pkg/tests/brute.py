"""Brute-force counts for tests, written without any package code."""

from itertools import product
from math import factorial


def surjections(n, k, distinct_prefix=0):
    """Maps {1..n} -> {0..k-1} hitting every label, with the first r elements on distinct labels."""
    r = min(distinct_prefix, n)
    return sum(
        1
        for f in product(range(k), repeat=n)
        if len(set(f)) == k and len(set(f[:r])) == r
    )


def partitions(n, k, r=0):
    """Set partitions of {1..n} into k blocks with 1..r in distinct blocks."""
    if k == 0:
        return 1 if n == 0 else 0
    return surjections(n, k, r) // factorial(k)


def ordered_partitions(n):
    return sum(surjections(n, k) for k in range(n + 1)) if n else 1
