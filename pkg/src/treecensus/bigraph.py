"""Bipartite labeled trees and canonical forms deciding tree isomorphism.

A ``BipartiteLabeledTree`` is a spanning tree of K_{a,b}: vertices are the
disjoint index sets A = {0..a-1} and B = {0..b-1}, and its a+b-1 edges all
cross sides.  Isomorphism here is abstract tree isomorphism (the 2-coloring
is ignored); since a tree's bipartition is unique up to swapping sides, this
matches counting unlabeled shapes, and for a != b the side sizes are shape
invariants anyway.

Canonical form
--------------
The fingerprint of a tree is a tuple of unsigned integers built by rooted
subtree sorting, anchored at the tree's center (found by iterative leaf
stripping):

* the encoding of a vertex is its subtree size followed by the encodings of
  its children, with the child blocks ordered lexicographically ascending;
* the fingerprint of the tree is the root encoding when the center is a
  single vertex, and the lexicographically smaller of the two root encodings
  when the center is an edge.

Every vertex contributes exactly one integer (its subtree size), so the
fingerprint has length a+b and is uniquely decodable: a block starts with
its own length.  Two trees have equal fingerprints iff they are isomorphic.
The stable textual form is the fingerprint as 2-byte big-endian values in
hex, which preserves both equality and lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidTree
from .partitions import DegreePartition


class BipartiteLabeledTree:
    """A labeled spanning tree of K_{a_size,b_size}.

    Edges are (a_index, b_index) pairs; they are normalized to sorted order
    at construction so equality and hashing mean equality as labeled trees.
    Invariants (edge count a+b-1, indices in range, no duplicates, connected)
    are checked at construction; a duplicate edge is rejected rather than
    deduplicated, because a duplicate indicates a decode bug upstream.

    Edge pairs are stored flattened; ``edges`` materializes them on access.
    The enumeration core constructs instances through a trusted path that
    skips re-validation, which is what lets a full census stream tens of
    millions of trees.
    """

    __slots__ = ("a_size", "b_size", "_flat")

    def __init__(self, a_size: int, b_size: int,
                 edges: Iterable[tuple[int, int]]):
        pairs = sorted((int(u), int(v)) for u, v in edges)
        _validate(a_size, b_size, pairs)
        self.a_size = a_size
        self.b_size = b_size
        self._flat = tuple(x for e in pairs for x in e)

    @classmethod
    def _from_flat(cls, a_size: int, b_size: int,
                   flat: tuple[int, ...]) -> "BipartiteLabeledTree":
        # Trusted constructor: `flat` must already be sorted (a,b) pairs of a
        # valid tree, as produced by the decoders.
        t = object.__new__(cls)
        t.a_size = a_size
        t.b_size = b_size
        t._flat = flat
        return t

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        f = self._flat
        return tuple((f[i], f[i + 1]) for i in range(0, len(f), 2))

    @property
    def n_vertices(self) -> int:
        return self.a_size + self.b_size

    def flipped(self) -> "BipartiteLabeledTree":
        """The same tree with the A and B sides exchanged."""
        return BipartiteLabeledTree(
            self.b_size, self.a_size, ((v, u) for u, v in self.edges)
        )

    def __eq__(self, other):
        if not isinstance(other, BipartiteLabeledTree):
            return NotImplemented
        return (self.a_size == other.a_size
                and self.b_size == other.b_size
                and self._flat == other._flat)

    def __hash__(self):
        return hash((self.a_size, self.b_size, self._flat))

    def __repr__(self):
        return (f"BipartiteLabeledTree(a_size={self.a_size}, "
                f"b_size={self.b_size}, edges={list(self.edges)})")


def _validate(a_size: int, b_size: int, pairs: list[tuple[int, int]]) -> None:
    if a_size < 1 or b_size < 1:
        raise InvalidTree(f"side sizes must be >= 1, got ({a_size}, {b_size})")
    n = a_size + b_size
    if len(pairs) != n - 1:
        raise InvalidTree(
            f"a spanning tree of K_{{{a_size},{b_size}}} has {n - 1} edges, "
            f"got {len(pairs)}"
        )
    seen = set()
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in pairs:
        if not (0 <= u < a_size and 0 <= v < b_size):
            raise InvalidTree(f"edge ({u}, {v}) out of range")
        if (u, v) in seen:
            raise InvalidTree(f"duplicate edge ({u}, {v})")
        seen.add((u, v))
        ru, rv = find(u), find(a_size + v)
        if ru == rv:
            raise InvalidTree("edges contain a cycle, so the graph is "
                              "not a tree")
        parent[ru] = rv
    # n-1 edges and no cycle imply connectivity.


def degrees(tree: BipartiteLabeledTree) -> tuple[DegreePartition,
                                                 DegreePartition]:
    """Both sides' degree sequences, each sorted non-increasing.

    For a spanning tree each side's degrees sum to a_size + b_size - 1,
    i.e. each is a partition of the edge count.
    """
    da = [0] * tree.a_size
    db = [0] * tree.b_size
    f = tree._flat
    for i in range(0, len(f), 2):
        da[f[i]] += 1
        db[f[i + 1]] += 1
    return (DegreePartition(tuple(sorted(da, reverse=True))),
            DegreePartition(tuple(sorted(db, reverse=True))))


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Total-order-comparable fingerprint of a tree's isomorphism class."""

    fingerprint: tuple[int, ...]

    def hex(self) -> str:
        """Stable textual form: 2-byte big-endian values, hex encoded."""
        out = bytearray()
        for v in self.fingerprint:
            if not 0 <= v < 1 << 16:
                raise ValueError(f"fingerprint value {v} out of 16-bit range")
            out += v.to_bytes(2, "big")
        return out.hex()

    @classmethod
    def from_hex(cls, text: str) -> "CanonicalForm":
        raw = bytes.fromhex(text)
        if len(raw) % 2:
            raise ValueError("hex form must have an even number of bytes")
        return cls(tuple(int.from_bytes(raw[i:i + 2], "big")
                         for i in range(0, len(raw), 2)))


def _adjacency(tree: BipartiteLabeledTree) -> list[list[int]]:
    # Global vertex ids: A block 0..a-1 then B block a..a+b-1.
    n = tree.n_vertices
    a = tree.a_size
    adj: list[list[int]] = [[] for _ in range(n)]
    f = tree._flat
    for i in range(0, len(f), 2):
        u, v = f[i], a + f[i + 1]
        adj[u].append(v)
        adj[v].append(u)
    return adj


def _centers(adj: list[list[int]]) -> list[int]:
    # Iterative leaf stripping; the last one or two vertices are the center.
    n = len(adj)
    if n <= 2:
        return list(range(n))
    deg = [len(nbrs) for nbrs in adj]
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            deg[v] = 0
            for w in adj[v]:
                if deg[w] > 0:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    return sorted(layer)


def _rooted_encoding(adj: list[list[int]], root: int) -> tuple[int, ...]:
    # Subtree-size prefix, children blocks sorted ascending; see module doc.
    n = len(adj)
    parent = [-1] * n
    parent[root] = root
    order = [root]
    for v in order:
        for w in adj[v]:
            if parent[w] == -1:
                parent[w] = v
                order.append(w)
    enc: list[tuple[int, ...] | None] = [None] * n
    for v in reversed(order):
        kids = sorted(enc[w] for w in adj[v] if w != v and parent[w] == v)
        size = 1
        flat: list[int] = [0]
        for e in kids:
            size += e[0]
            flat.extend(e)
        flat[0] = size
        enc[v] = tuple(flat)
    return enc[root]  # type: ignore[return-value]


def canonical_form(tree: BipartiteLabeledTree) -> CanonicalForm:
    """Fingerprint that is equal for two trees iff they are isomorphic.

    Invariant under any relabeling of vertices, including exchanging the
    A and B sides.
    """
    adj = _adjacency(tree)
    centers = _centers(adj)
    if len(centers) == 1:
        fp = _rooted_encoding(adj, centers[0])
    else:
        fp = min(_rooted_encoding(adj, centers[0]),
                 _rooted_encoding(adj, centers[1]))
    return CanonicalForm(fp)


def are_isomorphic(t1: BipartiteLabeledTree, t2: BipartiteLabeledTree) -> bool:
    """True iff the two trees are isomorphic as abstract (uncolored) trees."""
    return canonical_form(t1) == canonical_form(t2)


def to_dot(tree: BipartiteLabeledTree) -> str:
    """Deterministic DOT form; A-side nodes a0..a{a-1}, B-side b0..b{b-1}."""
    lines = ["graph {"]
    lines += [f"  a{i};" for i in range(tree.a_size)]
    lines += [f"  b{j};" for j in range(tree.b_size)]
    lines += [f"  a{u} -- b{v};" for u, v in tree.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"
