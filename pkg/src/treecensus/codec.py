"""Bijection between labeled spanning trees of K_{a,b} and A^{b-1} x B^{a-1}.

The code of a tree is read off by repeatedly deleting the smallest leaf
(under the total vertex order: all A vertices by index, then all B vertices)
until two vertices remain, recording each deleted leaf's neighbor.  Neighbors
of deleted B-leaves are A vertices and form ``a_seq`` (length b-1); neighbors
of deleted A-leaves form ``b_seq`` (length a-1).  Decoding inverts this with
the usual pending-degree bookkeeping, so the map is a bijection and the code
space size a^{b-1} * b^{a-1} equals the labeled spanning tree count.

Codes are ordered lexicographically as the concatenation a_seq + b_seq; a
code's index is that mixed-radix number, which is what makes contiguous
index ranges usable as shards for parallel enumeration.  Uniform sampling
draws a code index with Python's Mersenne Twister (``random.Random``), whose
output for a fixed seed is platform independent; one ``randrange`` call over
the full code space per sample.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import _kernel
from .bigraph import BipartiteLabeledTree
from .errors import DimensionMismatch, InvalidTree

_BATCH = 1 << 15


@dataclass(frozen=True)
class BipartiteCode:
    """A point of A^{b-1} x B^{a-1}; the side sizes are implied by lengths."""

    a_seq: tuple[int, ...]
    b_seq: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a_seq", tuple(int(x) for x in self.a_seq))
        object.__setattr__(self, "b_seq", tuple(int(x) for x in self.b_seq))
        a, b = self.a_size, self.b_size
        for x in self.a_seq:
            if not 0 <= x < a:
                raise DimensionMismatch(
                    f"a_seq entry {x} out of range for a={a}")
        for x in self.b_seq:
            if not 0 <= x < b:
                raise DimensionMismatch(
                    f"b_seq entry {x} out of range for b={b}")

    @property
    def a_size(self) -> int:
        return len(self.b_seq) + 1

    @property
    def b_size(self) -> int:
        return len(self.a_seq) + 1

    def to_text(self) -> str:
        """Debug form ``a_seq|b_seq``, comma separated (e.g. ``0,1|2``)."""
        return (",".join(str(x) for x in self.a_seq) + "|"
                + ",".join(str(x) for x in self.b_seq))

    @classmethod
    def from_text(cls, text: str) -> "BipartiteCode":
        left, _, right = text.partition("|")
        a_seq = tuple(int(x) for x in left.split(",") if x != "")
        b_seq = tuple(int(x) for x in right.split(",") if x != "")
        return cls(a_seq, b_seq)


def code_space_size(a: int, b: int) -> int:
    """Cardinality of the code space, a^{b-1} * b^{a-1}."""
    _check_sides(a, b)
    return a ** (b - 1) * b ** (a - 1)


def _check_sides(a: int, b: int) -> None:
    if a < 1 or b < 1:
        raise ValueError(f"side sizes must be >= 1, got ({a}, {b})")
    if a + b < 3:
        raise ValueError("the codec needs a + b >= 3")


def code_at(a: int, b: int, index: int) -> BipartiteCode:
    """The code with the given lexicographic index."""
    _check_sides(a, b)
    total = code_space_size(a, b)
    if not 0 <= index < total:
        raise ValueError(f"index {index} outside [0, {total})")
    digits = []
    x = index
    for p in range(a + b - 3, -1, -1):
        base = a if p < b - 1 else b
        digits.append(x % base)
        x //= base
    digits.reverse()
    return BipartiteCode(tuple(digits[: b - 1]), tuple(digits[b - 1:]))


def encode(tree: BipartiteLabeledTree) -> BipartiteCode:
    """Code of a labeled spanning tree (leaf-deletion record, see module doc)."""
    a, b = tree.a_size, tree.b_size
    if a + b < 3:
        raise InvalidTree("the codec needs a_size + b_size >= 3")
    n = a + b
    deg = [0] * n
    nsum = [0] * n  # sum of remaining neighbors; for a leaf, its neighbor
    for ai, bi in tree.edges:
        u, v = ai, a + bi
        deg[u] += 1
        deg[v] += 1
        nsum[u] += v
        nsum[v] += u
    a_seq: list[int] = []
    b_seq: list[int] = []
    ptr = 0
    while deg[ptr] != 1:
        ptr += 1
    leaf = ptr
    for k in range(n - 2):
        u = nsum[leaf]
        if leaf < a:
            b_seq.append(u - a)
        else:
            a_seq.append(u)
        deg[leaf] = 0
        deg[u] -= 1
        nsum[u] -= leaf
        if k == n - 3:
            break
        if deg[u] == 1 and u < ptr:
            leaf = u
        else:
            ptr += 1
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
    return BipartiteCode(tuple(a_seq), tuple(b_seq))


def decode(code: BipartiteCode, a: int, b: int) -> BipartiteLabeledTree:
    """The unique tree with ``encode(decode(code)) == code``."""
    _check_sides(a, b)
    if not isinstance(code, BipartiteCode):
        code = BipartiteCode(tuple(code[0]), tuple(code[1]))
    if len(code.a_seq) != b - 1 or len(code.b_seq) != a - 1:
        raise DimensionMismatch(
            f"code has lengths ({len(code.a_seq)}, {len(code.b_seq)}); "
            f"(a, b) = ({a}, {b}) needs ({b - 1}, {a - 1})"
        )
    n = a + b
    deg = [1] * n
    for x in code.a_seq:
        deg[x] += 1
    for x in code.b_seq:
        deg[a + x] += 1
    pa = 0
    pb = 0
    ptr = 0
    while deg[ptr] != 1:
        ptr += 1
    leaf = ptr
    edges: list[tuple[int, int]] = []
    for k in range(n - 2):
        if leaf < a:
            u = a + code.b_seq[pb]
            pb += 1
            edges.append((leaf, u - a))
        else:
            u = code.a_seq[pa]
            pa += 1
            edges.append((u, leaf - a))
        deg[leaf] = 0
        deg[u] -= 1
        if k == n - 3:
            break
        if deg[u] == 1 and u < ptr:
            leaf = u
        else:
            ptr += 1
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
    last = [v for v in range(n) if deg[v] == 1]
    u, v = last
    edges.append((u, v - a))
    return BipartiteLabeledTree(a, b, edges)


def enumerate_labeled(a: int, b: int, start: int = 0,
                      stop: int | None = None) -> Iterator[BipartiteLabeledTree]:
    """Decode every code index in [start, stop) in lexicographic order.

    The full stream (default range) has length a^{b-1} * b^{a-1} and its
    members are pairwise distinct labeled trees.  The range arguments carve
    the code space into contiguous shards for independent workers; shard
    results merge by canonical-form set union with no ordering dependence.
    """
    _check_sides(a, b)
    total = code_space_size(a, b)
    stop = total if stop is None else stop
    if not 0 <= start <= stop <= total:
        raise ValueError(f"bad range [{start}, {stop}) for space of {total}")

    n = a + b
    if stop <= _kernel.MAX_INDEX and max(a, b) < 30000:
        return _enumerate_batched(a, b, start, stop, n)
    return _enumerate_simple(a, b, start, stop)


def _enumerate_batched(a, b, start, stop, n):
    from_flat = BipartiteLabeledTree._from_flat
    width = 2 * (n - 1)
    lo = start
    while lo < stop:
        cnt = min(_BATCH, stop - lo)
        out = np.empty((cnt, width), dtype=np.int16)
        _kernel.decode_batch(a, b, lo, cnt, out)
        for row in out.tolist():
            yield from_flat(a, b, tuple(row))
        lo += cnt


def _enumerate_simple(a, b, start, stop):
    for index in range(start, stop):
        yield decode(code_at(a, b, index), a, b)


def sample_uniform(a: int, b: int, seed: int) -> BipartiteLabeledTree:
    """One labeled spanning tree drawn uniformly, reproducible from seed."""
    return next(sample_trees(a, b, seed, 1))


def sample_trees(a: int, b: int, seed: int,
                 count: int) -> Iterator[BipartiteLabeledTree]:
    """A reproducible stream of ``count`` independent uniform samples.

    The first element equals ``sample_uniform(a, b, seed)``.
    """
    _check_sides(a, b)
    if count < 0:
        raise ValueError("count must be >= 0")
    total = code_space_size(a, b)

    def gen():
        rng = random.Random(seed)
        for _ in range(count):
            yield decode(code_at(a, b, rng.randrange(total)), a, b)

    return gen()
