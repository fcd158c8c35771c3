"""Stirling and r-Stirling numbers of the second kind.

Two independent routes are provided: the triangular recurrence
``S_r(n, k) = k S_r(n-1, k) + S_r(n-1, k-1)`` seeded at row ``n = r``, and the
alternating binomial sums

    S(n, k)          = 1/k! * sum_l (-1)^(k-l) C(k, l) l^n
    S_r(n+r, k+r)    = 1/k! * sum_j (-1)^(k-j) C(k, j) (j+r)^n

The r-explicit sum takes the *shifted* indices (n, k), i.e. it returns
``S_r(n+r, k+r)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exact_arith import ConsistencyError, DomainError, binomial, factorial

__all__ = [
    "StirlingTriangle",
    "stirling2_explicit",
    "r_stirling_explicit",
    "r_stirling_recurrence",
    "triangle_build",
]


def _exact_div(total: int, k: int) -> int:
    q, rem = divmod(total, factorial(k))
    if rem:
        raise ConsistencyError(f"alternating sum {total} not divisible by {k}!")
    return q


def stirling2_explicit(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise DomainError(f"S(n, k) needs n, k >= 0, got ({n}, {k})")
    if k > n:
        return 0
    # Python's 0**0 == 1 supplies S(0, 0) = 1.
    total = sum((-1) ** (k - l) * binomial(k, l) * l**n for l in range(k + 1))
    return _exact_div(total, k)


def r_stirling_explicit(n: int, k: int, r: int) -> int:
    """Return ``S_r(n + r, k + r)`` from the closed-form sum."""
    if n < 0 or k < 0 or r < 0:
        raise DomainError(f"shifted S_r needs n, k, r >= 0, got ({n}, {k}, {r})")
    if k > n:
        return 0
    total = sum((-1) ** (k - j) * binomial(k, j) * (j + r) ** n for j in range(k + 1))
    return _exact_div(total, k)


@dataclass(frozen=True)
class StirlingTriangle:
    """Rows ``S_r(n, 0..n)`` for ``r <= n <= n_max``."""

    r: int
    n_max: int
    rows: tuple[tuple[int, ...], ...]

    def row(self, n: int) -> tuple[int, ...]:
        if not self.r <= n <= self.n_max:
            raise DomainError(f"row {n} outside [{self.r}, {self.n_max}]")
        return self.rows[n - self.r]

    def __getitem__(self, nk: tuple[int, int]) -> int:
        n, k = nk
        row = self.row(n)
        if 0 <= k <= n:
            return row[k]
        return 0


def triangle_build(r: int, n_max: int) -> StirlingTriangle:
    if r < 0:
        raise DomainError(f"r must be >= 0, got {r}")
    if n_max < r:
        raise DomainError(f"n_max={n_max} is below r={r}")
    base = [0] * (r + 1)
    base[r] = 1
    rows = [tuple(base)]
    prev = base
    for n in range(r + 1, n_max + 1):
        cur = [0] * (n + 1)
        for k in range(r, n + 1):
            stay = k * prev[k] if k < n else 0
            cur[k] = stay + prev[k - 1] if k >= 1 else stay
        # k < r entries stay zero for r >= 1; k = 0 stays zero for n >= 1
        rows.append(tuple(cur))
        prev = cur
    return StirlingTriangle(r=r, n_max=n_max, rows=tuple(rows))


@lru_cache(maxsize=64)
def _cached_triangle(r: int, n_max: int) -> StirlingTriangle:
    return triangle_build(r, n_max)


def r_stirling_recurrence(n: int, k: int, r: int) -> int:
    """Return ``S_r(n, k)`` (unshifted indices) from the recurrence triangle."""
    if r < 0:
        raise DomainError(f"r must be >= 0, got {r}")
    if n < r:
        raise DomainError(f"S_r(n, k) is only defined here for n >= r, got n={n}, r={r}")
    # Round the row bound up so nearby queries share one cached triangle.
    n_max = r + 32 * ((n - r) // 32 + 1)
    return _cached_triangle(r, n_max)[n, k]
