"""Integer partitions of m into exactly k positive parts.

Both the counting function and the enumerator work with the partition count
P_k(m) that every bound in this package is phrased in.  Counting uses the
classical two-term recurrence

    P_k(m) = P_{k-1}(m-1) + P_k(m-k)

(split on whether the smallest part equals 1), which is exact at arbitrary
precision and fills an O(m*k) memo table.  Enumeration emits partitions in
strictly decreasing lexicographic order of their part tuples; nothing in the
underlying mathematics prefers an order, but a fixed one keeps golden files
and pair indexing stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator


@dataclass(frozen=True)
class DegreePartition:
    """A non-increasing tuple of positive integers with fixed length and sum.

    Instances are the one-sided degree sequences of spanning trees of
    K_{a,b}: ``length`` vertices whose degrees sum to ``total``.
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise ValueError("a partition needs at least one part")
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"part {i} is {p}; every part must be >= 1")
            if i and parts[i - 1] < p:
                raise ValueError(f"parts must be non-increasing, got {parts}")

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self):
        return "+".join(str(p) for p in self.parts)


@lru_cache(maxsize=None)
def _count(m: int, k: int) -> int:
    # P_k(m) with the conventions P_0(0) = 1 and P_k(m) = 0 for k > m.
    if k == 0:
        return 1 if m == 0 else 0
    if k > m:
        return 0
    return _count(m - 1, k - 1) + _count(m - k, k)


def count_partitions(m: int, k: int) -> int:
    """Return P_k(m), the number of partitions of m into exactly k parts.

    Zero or negative arguments are rejected: the quantities this package
    needs always have m, k >= 1, and a silent 0 would mask caller bugs.
    """
    if m < 1 or k < 1:
        raise ValueError(f"count_partitions requires m, k >= 1, got ({m}, {k})")
    return _count(m, k)


def _emit(m: int, k: int, cap: int) -> Iterator[tuple[int, ...]]:
    # Partitions of m into exactly k parts, each <= cap, decreasing lex.
    if k == 1:
        if 1 <= m <= cap:
            yield (m,)
        return
    top = min(cap, m - k + 1)
    low = -(-m // k)  # smallest feasible leading part: ceil(m / k)
    for first in range(top, low - 1, -1):
        for rest in _emit(m - first, k - 1, first):
            yield (first,) + rest


def enumerate_partitions(m: int, k: int) -> Iterator[DegreePartition]:
    """Yield every partition of m into exactly k parts, decreasing lex order.

    The stream is empty when k > m and its length is always
    ``count_partitions(m, k)``.
    """
    if m < 1 or k < 1:
        raise ValueError(
            f"enumerate_partitions requires m, k >= 1, got ({m}, {k})"
        )

    def gen():
        for parts in _emit(m, k, m):
            yield DegreePartition(parts)

    return gen()
