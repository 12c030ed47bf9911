"""Tree-codes: minimum distance, verification, and decoding."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping

from .errors import (AmbiguityError, DecodingError, DimensionError,
                     StructureError, UndefinedDistanceError)
from .graph import EdgeSet, LabeledTree, is_spanning_tree


@dataclass(frozen=True)
class TreeCode:
    n: int
    codewords: tuple[LabeledTree, ...]
    claimed_distance: int | None = None
    family_tag: str = ""
    meta: Mapping[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        words = tuple(self.codewords)
        object.__setattr__(self, "codewords", words)
        seen: dict[int, int] = {}
        for i, t in enumerate(words):
            if t.n != self.n:
                raise DimensionError(f"codeword {i} has n={t.n}, code has n={self.n}")
            if t.mask in seen:
                raise StructureError(f"duplicate of codeword {seen[t.mask]}", index=i)
            seen[t.mask] = i

    def __len__(self) -> int:
        return len(self.codewords)

    def __iter__(self):
        return iter(self.codewords)

    def __getitem__(self, i: int) -> LabeledTree:
        return self.codewords[i]

    @property
    def masks(self) -> list[int]:
        return [t.mask for t in self.codewords]


@dataclass(frozen=True)
class DistanceReport:
    min_distance: int
    argmin_pair: tuple[int, int]
    max_shared_edges: int
    pair_count_checked: int


def _popcount(x: int) -> int:
    return bin(x).count("1")


def min_distance(code: TreeCode) -> DistanceReport:
    """Exact minimum over all codeword pairs.

    The reported pair is the lexicographically first one attaining it.
    """
    masks = code.masks
    m = len(masks)
    if m < 2:
        raise UndefinedDistanceError(f"minimum distance undefined for {m} codeword(s)")
    best, arg = -1, (0, 1)
    for i in range(m - 1):
        mi = masks[i]
        for j in range(i + 1, m):
            s = _popcount(mi & masks[j])
            if s > best:
                best, arg = s, (i, j)
    return DistanceReport(code.n - 1 - best, arg, best, m * (m - 1) // 2)


def verify(code: TreeCode, expected_d: int) -> tuple[bool, DistanceReport]:
    """Re-validate every codeword, then compare the minimum distance."""
    for i, t in enumerate(code.codewords):
        if not is_spanning_tree(code.n, t.edges):
            raise StructureError("not a spanning tree", index=i)
    report = min_distance(code)
    return report.min_distance >= expected_d, report


@dataclass(frozen=True)
class DecodeResult:
    """Codewords closest to a received word, in index order."""

    candidates: tuple[int, ...]
    distance: int
    code: TreeCode = field(repr=False)

    @property
    def unique(self) -> bool:
        return len(self.candidates) == 1

    @property
    def index(self) -> int:
        if not self.unique:
            raise AmbiguityError(f"{len(self.candidates)} candidates", self.candidates)
        return self.candidates[0]

    @property
    def tree(self) -> LabeledTree:
        return self.code.codewords[self.index]

    @property
    def trees(self) -> list[LabeledTree]:
        return [self.code.codewords[i] for i in self.candidates]


def _as_edgeset(code: TreeCode, received) -> EdgeSet:
    if not isinstance(received, EdgeSet):
        received = EdgeSet(code.n, tuple(tuple(e) for e in received))
    if received.n != code.n:
        raise DimensionError(f"received word has n={received.n}, code has n={code.n}")
    return received


def decode_erasures(code: TreeCode, received, permissive: bool = False) -> DecodeResult:
    """Codewords containing every surviving edge.

    With at least n - d surviving edges the containing codeword is unique
    for a distance-d code.  In strict mode more than one candidate raises
    AmbiguityError; permissive mode returns them all.
    """
    received = _as_edgeset(code, received)
    r = received.mask
    hits = tuple(i for i, m in enumerate(code.masks) if r & ~m == 0)
    if not hits:
        raise DecodingError("received edges are not contained in any codeword")
    if len(hits) > 1 and not permissive:
        raise AmbiguityError(
            f"{len(hits)} codewords contain the received edges: {list(hits)}", hits)
    return DecodeResult(hits, code.n - 1 - len(received), code)


def decode_errors(code: TreeCode, received) -> DecodeResult:
    """Nearest codewords to a received set of n - 1 edges (need not be a tree).

    Ties are returned, never broken.
    """
    received = _as_edgeset(code, received)
    if len(received) != code.n - 1:
        raise DimensionError(f"received word must have {code.n - 1} edges, got {len(received)}")
    r = received.mask
    shared = [_popcount(r & m) for m in code.masks]
    top = max(shared)
    hits = tuple(i for i, s in enumerate(shared) if s == top)
    return DecodeResult(hits, code.n - 1 - top, code)


def code_from_edge_lists(n: int, trees: Iterable[Iterable], **kwargs) -> TreeCode:
    words = []
    for i, edges in enumerate(trees):
        try:
            words.append(LabeledTree(n, tuple(tuple(e) for e in edges)))
        except StructureError as exc:
            raise StructureError(str(exc), index=i) from None
    return TreeCode(n, tuple(words), **kwargs)
