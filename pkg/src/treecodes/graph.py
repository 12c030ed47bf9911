"""Labelled trees and forests on vertex set {0, ..., n-1}.

Edge sets are stored twice: as a sorted tuple of ``(u, v)`` pairs with
``u < v`` and as an integer bitmask over the ``C(n, 2)`` edge slots of
``K_n``.  The bitmask turns ``|E1 & E2|`` into a single popcount, which is
the kernel behind every distance computation in the package.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import DimensionError, ResourceError, StructureError

Edge = tuple[int, int]

ENUMERATION_CAP = 8


def edge_index(n: int, u: int, v: int) -> int:
    """Slot of edge {u, v} in the lexicographic order of C(n, 2) pairs."""
    if u > v:
        u, v = v, u
    return u * (2 * n - u - 1) // 2 + (v - u - 1)


@lru_cache(maxsize=None)
def _edge_table(n: int) -> tuple[Edge, ...]:
    return tuple(itertools.combinations(range(n), 2))


def edge_from_index(n: int, k: int) -> Edge:
    return _edge_table(n)[k]


def canonical_edge(u: int, v: int) -> Edge:
    u, v = int(u), int(v)
    if u == v:
        raise StructureError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


def _popcount(x: int) -> int:
    return bin(x).count("1")


class DisjointSet:
    """Union-find with path halving and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        """Merge the classes of a and b; False if they were already joined."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True


@dataclass(frozen=True, eq=False)
class EdgeSet:
    """Sorted, duplicate-free set of edges of K_n."""

    n: int
    edges: tuple[Edge, ...]
    mask: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = int(self.n)
        if n < 1:
            raise StructureError(f"n must be positive, got {n}")
        canon = sorted({canonical_edge(u, v) for u, v in self.edges})
        if len(canon) != len(self.edges):
            raise StructureError("duplicate edges")
        mask = 0
        for u, v in canon:
            if not 0 <= u < v < n:
                raise StructureError(f"edge {(u, v)} out of range for n={n}")
            mask |= 1 << edge_index(n, u, v)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(canon))
        object.__setattr__(self, "mask", mask)

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "EdgeSet":
        table = _edge_table(n)
        edges = []
        while mask:
            low = mask & -mask
            edges.append(table[low.bit_length() - 1])
            mask ^= low
        return cls(n, tuple(edges))

    @classmethod
    def from_labels(cls, n: int, edges: Iterable[Sequence], label_map) -> "EdgeSet":
        """Build from externally labelled edges, e.g. 1-based published tables.

        ``label_map`` is a mapping or callable sending an external label to a
        vertex id in ``range(n)``.
        """
        get = label_map if callable(label_map) else label_map.__getitem__
        return cls(n, tuple((get(u), get(v)) for u, v in edges))

    def __eq__(self, other) -> bool:
        if not isinstance(other, EdgeSet):
            return NotImplemented
        return self.n == other.n and self.mask == other.mask

    def __hash__(self) -> int:
        return hash((self.n, self.mask))

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges)

    def __contains__(self, e) -> bool:
        u, v = canonical_edge(*e)
        return v < self.n and bool(self.mask >> edge_index(self.n, u, v) & 1)

    def issubset(self, other: "EdgeSet") -> bool:
        _check_same_n(self, other)
        return self.mask & ~other.mask == 0

    def relabel(self, label_map) -> list[tuple]:
        """Edges as pairs of external labels (inverse direction of from_labels)."""
        get = label_map if callable(label_map) else label_map.__getitem__
        return [(get(u), get(v)) for u, v in self.edges]

    def to_json(self) -> list[list[int]]:
        return [[u, v] for u, v in self.edges]

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg


class Forest(EdgeSet):
    """Acyclic edge set; component count is n - |edges|."""

    def __post_init__(self):
        super().__post_init__()
        if not is_acyclic(self):
            raise StructureError("edge set contains a cycle")

    @property
    def component_count(self) -> int:
        return self.n - len(self.edges)


class LabeledTree(Forest):
    """Spanning tree of K_n."""

    def __post_init__(self):
        EdgeSet.__post_init__(self)
        if not is_spanning_tree(self.n, self):
            raise StructureError(
                f"not a spanning tree: {len(self.edges)} edges on {self.n} nodes"
            )


def _check_same_n(a: EdgeSet, b: EdgeSet) -> None:
    if a.n != b.n:
        raise DimensionError(f"vertex counts differ: {a.n} != {b.n}")


def is_acyclic(edges: EdgeSet) -> bool:
    ds = DisjointSet(edges.n)
    return all(ds.union(u, v) for u, v in edges.edges)


def is_spanning_tree(n: int, edges) -> bool:
    if isinstance(edges, EdgeSet):
        if edges.n != n:
            return False
        pairs = edges.edges
    else:
        pairs = [tuple(e) for e in edges]
    if len(pairs) != n - 1:
        return False
    ds = DisjointSet(n)
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < n) or u == v or not ds.union(u, v):
            return False
    return True


def components(f: EdgeSet) -> list[list[int]]:
    """Vertex classes of the graph, each sorted, ordered by smallest member."""
    ds = DisjointSet(f.n)
    for u, v in f.edges:
        ds.union(u, v)
    groups: dict[int, list[int]] = {}
    for x in range(f.n):
        groups.setdefault(ds.find(x), []).append(x)
    return sorted(groups.values())


def shared_edges(t1: EdgeSet, t2: EdgeSet) -> int:
    _check_same_n(t1, t2)
    return _popcount(t1.mask & t2.mask)


def tree_distance(t1: EdgeSet, t2: EdgeSet) -> int:
    """n - 1 - |E1 & E2|, the number of edge swaps turning t1 into t2."""
    return t1.n - 1 - shared_edges(t1, t2)


def star(n: int, center: int) -> LabeledTree:
    return LabeledTree(n, tuple((center, x) for x in range(n) if x != center))


def path(n: int, order: Sequence[int]) -> LabeledTree:
    if sorted(order) != list(range(n)):
        raise StructureError("path order must visit every vertex once")
    return LabeledTree(n, tuple(zip(order[:-1], order[1:])))


# --- Pruefer codec -----------------------------------------------------------


def prufer_decode(seq: Sequence[int], n: int | None = None) -> LabeledTree:
    """Tree for a Pruefer sequence; ``n`` defaults to ``len(seq) + 2``."""
    if n is None:
        n = len(seq) + 2
    if len(seq) != n - 2:
        raise StructureError(f"sequence length {len(seq)} != n - 2 = {n - 2}")
    return LabeledTree(n, _prufer_edges(seq, n))


def _prufer_edges(seq: Sequence[int], n: int) -> tuple[Edge, ...]:
    degree = [1] * n
    for s in seq:
        if not 0 <= s < n:
            raise StructureError(f"symbol {s} out of range for n={n}")
        degree[s] += 1
    leaves = [x for x in range(n) if degree[x] == 1]
    heapq.heapify(leaves)
    edges = []
    for s in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, s) if leaf < s else (s, leaf))
        degree[s] -= 1
        if degree[s] == 1:
            heapq.heappush(leaves, s)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return tuple(edges)


def prufer_encode(t: EdgeSet) -> list[int]:
    """Smallest-leaf-first elimination."""
    n = t.n
    if not is_spanning_tree(n, t):
        raise StructureError("input is not a spanning tree")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in t.edges:
        adj[u].add(v)
        adj[v].add(u)
    leaves = [x for x in range(n) if len(adj[x]) == 1]
    heapq.heapify(leaves)
    seq = []
    for _ in range(n - 2):
        leaf = heapq.heappop(leaves)
        (nb,) = adj[leaf]
        seq.append(nb)
        adj[nb].discard(leaf)
        if len(adj[nb]) == 1:
            heapq.heappush(leaves, nb)
    return seq


def enumerate_spanning_trees(n: int, cap: int = ENUMERATION_CAP) -> Iterator[LabeledTree]:
    """All n**(n-2) trees, in lexicographic order of their Pruefer sequences."""
    if n < 2:
        raise StructureError("need at least two vertices")
    if n > cap:
        raise ResourceError(f"n={n} exceeds enumeration cap {cap} ({n}**{n - 2} trees)")
    for seq in itertools.product(range(n), repeat=n - 2):
        yield LabeledTree(n, _prufer_edges(seq, n))


@lru_cache(maxsize=8)
def tree_masks(n: int, cap: int = ENUMERATION_CAP) -> tuple[int, ...]:
    """Bitmasks of all spanning trees of K_n, indexed by Pruefer rank."""
    if n > cap:
        raise ResourceError(f"n={n} exceeds enumeration cap {cap}")
    if n == 1:
        return (0,)
    out = []
    for seq in itertools.product(range(n), repeat=n - 2):
        m = 0
        for u, v in _prufer_edges(seq, n):
            m |= 1 << edge_index(n, u, v)
        out.append(m)
    return tuple(out)


def to_dot(g: EdgeSet, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {x};" for x in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"
