"""Build a spanning tree of K_{a,b} realizing any admissible degree pair.

Given partitions s (length a) and t (length b) of a+b-1, there is a spanning
tree of K_{a,b} whose A-side degrees are exactly s and B-side degrees exactly
t.  The construction is inductive: with the roles oriented so the B side is
weakly larger, the smallest B part must be 1 and the largest A part at least
2 (otherwise the sums could not both be a+b-1), so one can build the tree for
(s with its largest part decremented, t without its trailing 1) and then
attach a fresh B leaf to an A vertex whose degree is one short.

Two choices the induction leaves open are fixed here for determinism:

* when recursion would make the B side smaller than the A side, the roles
  are swapped (and the result flipped back), keeping the guarantees above
  valid at every level;
* the attachment vertex is the lowest-index A vertex with the required
  degree.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .bigraph import BipartiteLabeledTree
from .errors import NotMonotone, SumMismatch
from .partitions import DegreePartition, enumerate_partitions


def _as_parts(seq: Sequence[int] | DegreePartition,
              name: str) -> tuple[int, ...]:
    parts = tuple(int(p) for p in seq)
    if not parts:
        raise NotMonotone(f"{name} must have at least one part")
    for i, p in enumerate(parts):
        if p < 1:
            raise NotMonotone(f"{name} has nonpositive part {p}")
        if i and parts[i - 1] < p:
            raise NotMonotone(f"{name} is not non-increasing: {parts}")
    return parts


def construct_tree(s: Sequence[int] | DegreePartition,
                   t: Sequence[int] | DegreePartition) -> BipartiteLabeledTree:
    """Spanning tree of K_{len(s),len(t)} with A-degrees s and B-degrees t.

    Requires sum(s) == sum(t) == len(s) + len(t) - 1 and both sequences
    non-increasing.  Output is deterministic.
    """
    sp = _as_parts(s, "s")
    tp = _as_parts(t, "t")
    a, b = len(sp), len(tp)
    need = a + b - 1
    if sum(sp) != sum(tp):
        raise SumMismatch(f"sum mismatch ({sum(sp)} != {sum(tp)})")
    if sum(sp) != need:
        raise SumMismatch(
            f"degree total must be a+b-1 = {need}, got {sum(sp)}"
        )
    return _build(sp, tp)


def _build(s: tuple[int, ...], t: tuple[int, ...]) -> BipartiteLabeledTree:
    a, b = len(s), len(t)
    if b < a:
        return _build(t, s).flipped()
    # now a <= b
    if a == 1:
        # Star: the only tree, s = (b,) and t = all ones.
        return BipartiteLabeledTree(1, b, [(0, j) for j in range(b)])
    if a == 2 and b == 2:
        # Only ((2,1),(2,1)) reaches here: the path b1-a0-b0-a1.
        return BipartiteLabeledTree(2, 2, [(0, 0), (0, 1), (1, 0)])
    # a >= 2, b >= 3: the sums force t[-1] == 1 and s[0] >= 2.
    s_dec = tuple(sorted((s[0] - 1,) + s[1:], reverse=True))
    inner = _build(s_dec, t[:-1])
    deg = [0] * a
    for u, _ in inner.edges:
        deg[u] += 1
    target = s[0] - 1
    u = deg.index(target)
    return BipartiteLabeledTree(
        a, b, list(inner.edges) + [(u, b - 1)]
    )


def realize_all_pairs(
    a: int, b: int
) -> Iterator[tuple[DegreePartition, DegreePartition, BipartiteLabeledTree]]:
    """Realize every ordered pair of degree partitions for K_{a,b}.

    Iterates enumerate_partitions(a+b-1, a) x enumerate_partitions(a+b-1, b)
    in enumeration order and yields (s, t, construct_tree(s, t)); the stream
    length is P_a(a+b-1) * P_b(a+b-1).
    """
    if a < 2 or b < 2:
        raise ValueError(f"realize_all_pairs requires a, b >= 2, got ({a}, {b})")

    def gen():
        m = a + b - 1
        for s in enumerate_partitions(m, a):
            for t in enumerate_partitions(m, b):
                yield s, t, construct_tree(s.parts, t.parts)

    return gen()
