"""Brute-force ground truth for small n.

Forest and tree counts by exhaustive enumeration (checked against their
closed forms), and exact A(n, d) as a maximum independent set in the
conflict graph whose vertices are all spanning trees and whose edges join
trees sharing at least n - d edges.
"""

from __future__ import annotations

import itertools
import math
import random
import sys
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

import numpy as np

from .codes import TreeCode
from .errors import ParameterError, ResourceError, TreeCodeError
from .graph import (ENUMERATION_CAP, DisjointSet, EdgeSet, LabeledTree, _edge_table,
                    components, tree_masks)

COUNTING_CAP = 7
EXACT_DEFAULT_MAX_N = 5  # n = 6 needs opt_in; see the README for timings


class IdentityError(TreeCodeError, AssertionError):
    """An enumerated count disagreed with its closed form."""


# --- forest counts -----------------------------------------------------------


@lru_cache(maxsize=None)
def forest_count(n: int, k: int) -> int:
    """|F(n, k)|, forests on n labelled nodes with exactly k components.

    Root the component holding the largest label; it has s nodes, chosen
    as C(n-1, s-1) companions, and s**(s-2) tree shapes.
    """
    if n == 0:
        return 1 if k == 0 else 0
    if k <= 0 or k > n:
        return 0
    total = 0
    for s in range(1, n - k + 2):
        total += comb(n - 1, s - 1) * (s ** (s - 2) if s >= 2 else 1) * forest_count(n - s, k - 1)
    return total


def _acyclic_subsets(n: int, size: int):
    table = _edge_table(n)
    for combo in itertools.combinations(range(len(table)), size):
        ds = DisjointSet(n)
        if all(ds.union(*table[e]) for e in combo):
            yield combo


def count_forests(n: int, d: int, cap: int = ENUMERATION_CAP) -> int:
    """|F(n, d)| by enumerating every (n-d)-subset of E(K_n)."""
    if n > cap:
        raise ResourceError(f"n={n} exceeds forest enumeration cap {cap}")
    if not 1 <= d <= n:
        raise ParameterError(f"need 1 <= d <= n, got n={n}, d={d}")
    return sum(1 for _ in _acyclic_subsets(n, n - d))


def rooted_forest_formula(n: int, d: int) -> int:
    """d n^(n-1-d): forests with d components, each holding one of d fixed roots."""
    if d == n:
        return 1
    return d * n ** (n - 1 - d)


def count_rooted_forests(n: int, X, cap: int = COUNTING_CAP, check: bool = True) -> int:
    """Forests whose components each contain exactly one vertex of X."""
    X = sorted(set(X))
    if not X or not all(0 <= x < n for x in X):
        raise ParameterError("X must be a nonempty subset of range(n)")
    if n > cap:
        raise ResourceError(f"n={n} exceeds counting cap {cap}")
    d = len(X)
    table = _edge_table(n)
    count = 0
    for combo in _acyclic_subsets(n, n - d):
        ds = DisjointSet(n)
        for e in combo:
            ds.union(*table[e])
        if len({ds.find(x) for x in X}) == d:
            count += 1
    if check and count != rooted_forest_formula(n, d):
        raise IdentityError(f"rooted forests n={n}, |X|={d}: {count} != {rooted_forest_formula(n, d)}")
    return count


def trees_containing_formula(f: EdgeSet) -> int:
    """q1 q2 ... qd n^(d-2) for a forest with component sizes q1..qd."""
    sizes = [len(c) for c in components(f)]
    d = len(sizes)
    q = math.prod(sizes)
    return q * f.n ** (d - 2) if d >= 2 else q // f.n


def count_trees_containing(f: EdgeSet, cap: int = COUNTING_CAP, check: bool = True) -> int:
    """Number of spanning trees of K_n containing every edge of f."""
    if f.n > cap:
        raise ResourceError(f"n={f.n} exceeds counting cap {cap}")
    fm = f.mask
    count = sum(1 for m in tree_masks(f.n) if fm & ~m == 0)
    if check and count != trees_containing_formula(f):
        raise IdentityError(f"trees containing {f.edges}: {count} != {trees_containing_formula(f)}")
    return count


def random_forest(n: int, rng: random.Random) -> EdgeSet:
    """Random forest: shuffle all edges, keep a random-length acyclic prefix."""
    edges = list(_edge_table(n))
    rng.shuffle(edges)
    target = rng.randrange(n)
    ds, kept = DisjointSet(n), []
    for u, v in edges:
        if len(kept) == target:
            break
        if ds.union(u, v):
            kept.append((u, v))
    return EdgeSet(n, tuple(kept))


# --- conflict graph and exact search ------------------------------------------


def _conflict_rows(masks: tuple[int, ...], n: int, threshold: int) -> list[int]:
    """Bitset of trees sharing >= threshold edges with each tree, row by row."""
    N = len(masks)
    if comb(n, 2) <= 64:
        arr = np.array(masks, dtype=np.uint64)
        rows = []
        for i in range(N):
            hit = np.bitwise_count(arr & arr[i]) >= threshold
            hit[i] = False
            rows.append(int.from_bytes(np.packbits(hit, bitorder="little").tobytes(), "little"))
        return rows
    rows = []
    for i, mi in enumerate(masks):
        r = 0
        for j, mj in enumerate(masks):
            if j != i and (mi & mj).bit_count() >= threshold:
                r |= 1 << j
        rows.append(r)
    return rows


@dataclass(frozen=True)
class ConflictGraph:
    """Trees indexed by Pruefer rank; adjacency as Python-int bitsets."""

    n: int
    d: int
    masks: tuple[int, ...] = field(repr=False)
    adjacency: tuple[int, ...] = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.masks)

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    @property
    def max_degree(self) -> int:
        return max(self.degree(v) for v in range(self.order))

    def is_independent(self, vertices) -> bool:
        s = 0
        for v in vertices:
            s |= 1 << v
        return all(self.adjacency[v] & s == 0 for v in vertices)


@lru_cache(maxsize=16)
def conflict_graph(n: int, d: int, cap: int = ENUMERATION_CAP) -> ConflictGraph:
    if not 1 <= d <= n - 1:
        raise ParameterError(f"need 1 <= d <= n-1, got n={n}, d={d}")
    masks = tree_masks(n, cap)
    return ConflictGraph(n, d, masks, tuple(_conflict_rows(masks, n, n - d)))


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 50_000_000

    def __post_init__(self):
        if self.max_nodes <= 0:
            raise ParameterError("budget must be positive")


@dataclass(frozen=True)
class ExactResult:
    n: int
    d: int
    value: int
    certified: bool
    nodes: int
    witness: tuple[int, ...]

    def as_dict(self) -> dict:
        return {"n": self.n, "d": self.d, "value": self.value, "certified": self.certified,
                "nodes": self.nodes, "witness": list(self.witness)}


class _BudgetExceeded(Exception):
    pass


def _greedy_independent(g: ConflictGraph, order: list[int]) -> list[int]:
    chosen, blocked = [], 0
    for v in order:
        if not blocked >> v & 1:
            chosen.append(v)
            blocked |= g.adjacency[v] | (1 << v)
    return chosen


def exact_A(n: int, d: int, budget: SearchBudget | None = None, opt_in: bool = False) -> ExactResult:
    """Maximum independent set of the conflict graph by branch and bound.

    Max-clique search on the complement with a greedy colouring bound
    (equivalently, a clique cover of the conflict graph).  Vertices are
    ordered by conflict degree, largest first, ties by Pruefer rank.  The
    result is certified only if the search finished within ``budget``;
    otherwise ``value`` is the best code found, still a valid lower bound.
    """
    if n > EXACT_DEFAULT_MAX_N and not opt_in:
        raise ResourceError(f"exact search at n={n} is opt-in (pass opt_in=True)")
    budget = budget or SearchBudget()
    g = conflict_graph(n, d)
    N = g.order
    if not any(g.adjacency):
        return ExactResult(n, d, N, True, 0, tuple(range(N)))

    order = sorted(range(N), key=lambda v: (-g.degree(v), v))
    pos = {v: i for i, v in enumerate(order)}
    full = (1 << N) - 1

    def remap(m: int) -> int:
        r = 0
        while m:
            low = m & -m
            r |= 1 << pos[low.bit_length() - 1]
            m ^= low
        return r

    comp = [0] * N
    for v in range(N):
        i = pos[v]
        comp[i] = full & ~remap(g.adjacency[v]) & ~(1 << i)

    # warm start: greedy scan from the least-conflicted tree
    warm = _greedy_independent(g, sorted(range(N), key=lambda v: (g.degree(v), v)))
    best = [len(warm), [pos[v] for v in warm]]
    nodes = [0]

    def expand(chosen: list[int], P: int):
        nodes[0] += 1
        if nodes[0] > budget.max_nodes:
            raise _BudgetExceeded
        verts, cols, U, k = [], [], P, 0
        while U:
            k += 1
            Q = U
            while Q:
                low = Q & -Q
                v = low.bit_length() - 1
                Q &= ~low & ~comp[v]
                U &= ~low
                verts.append(v)
                cols.append(k)
        r = len(chosen)
        for i in range(len(verts) - 1, -1, -1):
            if r + cols[i] <= best[0]:
                return
            v = verts[i]
            NP = P & comp[v]
            chosen.append(v)
            if NP:
                expand(chosen, NP)
            elif r + 1 > best[0]:
                best[0], best[1] = r + 1, list(chosen)
            chosen.pop()
            P &= ~(1 << v)

    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, N + 200))
    certified = True
    try:
        expand([], full)
    except _BudgetExceeded:
        certified = False
    finally:
        sys.setrecursionlimit(old)
    witness = tuple(sorted(order[i] for i in best[1]))
    return ExactResult(n, d, best[0], certified, min(nodes[0], budget.max_nodes), witness)


def greedy_code(n: int, d: int, seed: int = 0) -> TreeCode:
    """Maximal code from a greedy scan over a seeded random tree order."""
    g = conflict_graph(n, d)
    order = list(range(g.order))
    random.Random(seed).shuffle(order)
    chosen = _greedy_independent(g, order)
    words = tuple(LabeledTree.from_mask(n, g.masks[v]) for v in chosen)
    return TreeCode(n, words, claimed_distance=d, family_tag="greedy",
                    meta={"seed": seed, "pruefer_ranks": chosen})


def containment_double_count(n: int, d: int) -> tuple[int, int]:
    """(sum over (n-d)-edge forests F of #trees containing F, C(n-1, n-d) n^(n-2))."""
    masks = tree_masks(n)
    total = 0
    for combo in _acyclic_subsets(n, n - d):
        fm = 0
        for e in combo:
            fm |= 1 << e
        total += sum(1 for m in masks if fm & ~m == 0)
    return total, comb(n - 1, n - d) * n ** (n - 2)
