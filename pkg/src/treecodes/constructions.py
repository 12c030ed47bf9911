"""Generators for the explicit tree-code families.

=================  ===========================  =====================
family             parameters                   (n, size, distance)
=================  ===========================  =====================
stars              n >= 3                       (n, n, n-2)
hamiltonian_paths  n >= 4                       (n, n//2, n-1)
paths_and_stars    n >= 5                       (n, n + n//2, n-3)
affine_triple      prime p >= 5, n = 3p         (n, (p-1)(p-3), n-4)
cubic_pp           q = 3^m, m >= 2, n = 2q      (n, q((q-1)/2)^2, n-13)
bibd_two_star      --                           (8, 28, 5)
furedi_sigma       --                           (11, 35, 8)
=================  ===========================  =====================
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from itertools import combinations
from pathlib import Path

from .codes import TreeCode, min_distance
from .errors import DataIntegrityError, ParameterError, StructureError
from .field import FieldSpec, gf3, is_prime, prime_field
from .graph import EdgeSet, LabeledTree, canonical_edge, is_spanning_tree, star

DATA_DIR_ENV = "TREECODE_DATA_DIR"


# --- simple families ---------------------------------------------------------


def stars(n: int) -> TreeCode:
    if n < 3:
        raise ParameterError("stars need n >= 3")
    return TreeCode(n, tuple(star(n, c) for c in range(n)), n - 2, "stars",
                    {"centers": list(range(n))})


def hamiltonian_path_orders(n: int) -> list[list[int]]:
    """Vertex orders of n//2 pairwise edge-disjoint Hamiltonian paths of K_n.

    Even n: zigzag k, k+1, k-1, k+2, ... on Z_n.  Odd n: the same zigzag on
    Z_{n-1} preceded by the extra vertex n-1, i.e. the Walecki cycle with its
    closing edge dropped.
    """
    m = n if n % 2 == 0 else n - 1
    orders = []
    for k in range(m // 2):
        seq = [k]
        for step in range(1, m):
            off = (step + 1) // 2
            seq.append((k + off) % m if step % 2 else (k - off) % m)
        if m != n:
            seq = [n - 1] + seq
        orders.append(seq)
    return orders


def _path_tree(n: int, order) -> LabeledTree:
    return LabeledTree(n, tuple(zip(order[:-1], order[1:])))


def hamiltonian_paths(n: int) -> TreeCode:
    if n < 4:
        raise ParameterError("hamiltonian_paths needs n >= 4")
    orders = hamiltonian_path_orders(n)
    return TreeCode(n, tuple(_path_tree(n, o) for o in orders), n - 1,
                    "ham-paths", {"orders": orders})


def paths_and_stars(n: int) -> TreeCode:
    if n < 5:
        raise ParameterError("paths_and_stars needs n >= 5")
    words = hamiltonian_paths(n).codewords + stars(n).codewords
    return TreeCode(n, words, n - 3, "paths-stars")


# --- algebraic constructions -------------------------------------------------


def affine_triple_paths(p: int) -> TreeCode:
    """Hamiltonian paths (1,j)-(2,aj+b)-(3,bj+a)-(1,j+1)-... on 3p vertices.

    Vertex (i, j) is node (i-1)*p + j; one path per (a, b) with a, b nonzero
    and a != +-b, enumerated with a outer, b inner.
    """
    if p < 5 or not is_prime(p):
        raise ParameterError(f"p must be a prime >= 5, got {p}")
    F = prime_field(p)
    n = 3 * p
    words, params = [], []
    for a in range(1, p):
        for b in range(1, p):
            if F.sub(a, b) == 0 or F.add(a, b) == 0:
                continue
            order = []
            for j in range(p):
                order += [j, p + F.add(F.mul(a, j), b), 2 * p + F.add(F.mul(b, j), a)]
            words.append(_path_tree(n, order))
            params.append([a, b])
    return TreeCode(n, tuple(words), n - 4, "affine-n4", {"p": p, "params": params})


def affine_edge_class(p: int, e) -> tuple[int, int]:
    """Which pair of vertex blocks V1, V2, V3 (numbered 1..3) the edge joins."""
    u, v = e
    return tuple(sorted((u // p + 1, v // p + 1)))


def _field_for(q_spec) -> FieldSpec:
    if isinstance(q_spec, FieldSpec):
        return q_spec
    q = int(q_spec)
    m, r = 0, q
    while r % 3 == 0:
        r //= 3
        m += 1
    if r != 1 or m == 0:
        raise ParameterError(f"q={q} is not a power of 3")
    return gf3(m)


def cubic_pp_params(F: FieldSpec) -> list[tuple[int, int, int]]:
    """(a, b, c) with dlog a in {2,4,...,q-1}, dlog b in {1,3,...,q-2}.

    Exponent q-1 is read mod q-1, so a = 1 is included.
    """
    q = F.order
    out = []
    for i in range(2, q, 2):
        a = F.power_of_generator(i)
        for j in range(1, q - 1, 2):
            b = F.power_of_generator(j)
            for c in range(q):
                out.append((a, b, c))
    return out


def _cubic_f(F: FieldSpec, a: int, b: int, c: int, x: int) -> int:
    return F.add(F.sub(F.mul(a, F.pow(x, 3)), F.mul(b, x)), c)


def cubic_pp_edges(F: FieldSpec, a: int, b: int, c: int) -> dict[tuple[int, int], str]:
    """Edges of the tree for (a, b, c), each tagged with its structural type.

    Types: ``direct`` (1,x)-(2,f(x)); ``shifted`` (1,wx)-(2,f(x));
    ``branch_v1`` (1,0)-(1,a); ``branch_v2`` (1,0)-(2,c).
    Node of (i, x) is (i-1)*q + x.
    """
    q = F.order
    out: dict[tuple[int, int], str] = {}
    for j in range(q - 1):
        x = F.power_of_generator(j)
        fx = _cubic_f(F, a, b, c, x)
        out[canonical_edge(x, q + fx)] = "direct"
        if j < q - 2:
            out[canonical_edge(F.power_of_generator(j + 1), q + fx)] = "shifted"
    out[canonical_edge(0, a)] = "branch_v1"
    out[canonical_edge(0, q + c)] = "branch_v2"
    return out


CUBIC_CASE_OF = {
    ("direct", "direct"): 1,
    ("shifted", "shifted"): 2,
    ("direct", "shifted"): 3,
    ("shifted", "direct"): 4,
    ("branch_v1", "branch_v1"): 5,
    ("branch_v2", "branch_v2"): 6,
}
CUBIC_CASE_CAPS = {1: 3, 2: 3, 3: 3, 4: 3, 5: 1, 6: 1}


def cubic_case_breakdown(e1: dict, e2: dict) -> dict[int, int]:
    """Shared edges of two tagged edge maps, counted per proof case."""
    counts = {k: 0 for k in CUBIC_CASE_CAPS}
    for e, t in e1.items():
        t2 = e2.get(e)
        if t2 is not None:
            counts[CUBIC_CASE_OF[(t, t2)]] += 1
    return counts


def cubic_pp_trees(q_spec) -> TreeCode:
    """Stem path plus a two-edge branch, one tree per (a, b, c).

    ``q_spec`` is a FieldSpec of characteristic 3 or the integer q = 3^m.
    """
    F = _field_for(q_spec)
    if F.characteristic != 3:
        raise ParameterError("cubic_pp_trees needs a field of characteristic 3")
    if F.degree < 2:
        raise ParameterError("q = 3 gives distance n - 13 < 0; need m >= 2")
    q = F.order
    n = 2 * q
    words, params = [], []
    for a, b, c in cubic_pp_params(F):
        words.append(LabeledTree(n, tuple(cubic_pp_edges(F, a, b, c))))
        params.append([a, b, c])
    return TreeCode(n, tuple(words), n - 13, "cubic-n13",
                    {"q": q, "field": str(F), "params": params})


# --- embedded tables ---------------------------------------------------------


def _digest(obj) -> str:
    blob = json.dumps(obj, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def load_table(name: str, key: str):
    """Read a shipped table, honouring TREECODE_DATA_DIR, and check its hash."""
    override = os.environ.get(DATA_DIR_ENV)
    if override:
        text = (Path(override) / name).read_text()
    else:
        text = resources.files("treecodes.data").joinpath(name).read_text()
    doc = json.loads(text)
    if _digest(doc[key]) != doc.get("sha256"):
        raise DataIntegrityError(f"{name}: content hash mismatch")
    return doc


@dataclass(frozen=True)
class BlockTable:
    """8x8 table of 3-subsets N[i][j] of {0..7}, 0-based, diagonal empty."""

    entries: tuple[tuple[frozenset, ...], ...]
    order: int = 8

    def violations(self) -> list[str]:
        """Every failed instance of properties P1, P2, P3 (empty if valid)."""
        N, k = self.entries, self.order
        full = set(range(k))
        bad = []
        for i in range(k):
            if N[i][i]:
                bad.append(f"diagonal ({i},{i}) nonempty")
        for i, j in combinations(range(k), 2):
            if N[i][j] & N[j][i] or N[i][j] | N[j][i] != full - {i, j}:
                bad.append(f"P1 fails at ({i},{j})")
        lines = [("row", i, [(j, N[i][j]) for j in range(k) if j != i]) for i in range(k)]
        lines += [("column", j, [(i, N[i][j]) for i in range(k) if i != j]) for j in range(k)]
        for kind, idx, cells in lines:
            for (x, bx), (y, by) in combinations(cells, 2):
                if len(bx & by) != 1:
                    bad.append(f"P2 fails in {kind} {idx} at {x},{y}")
                if (y in bx) == (x in by):
                    bad.append(f"P3 fails in {kind} {idx} at {x},{y}")
        return bad


@lru_cache(maxsize=None)
def block_table() -> BlockTable:
    doc = load_table("block_table.json", "entries")
    raw = doc["entries"]
    if len(raw) != 8 or any(len(r) != 8 for r in raw):
        raise DataIntegrityError("block table must be 8x8")
    table = BlockTable(tuple(tuple(frozenset(x - 1 for x in cell) for cell in row) for row in raw))
    bad = table.violations()
    if bad:
        raise DataIntegrityError("block table: " + "; ".join(bad[:5]))
    return table


def bibd_two_star_code() -> TreeCode:
    """S_{i,j}: edge {i,j}, i joined to N[i][j], j joined to N[j][i]."""
    N = block_table().entries
    words = []
    for i, j in combinations(range(8), 2):
        edges = [(i, j)] + [(i, x) for x in N[i][j]] + [(j, x) for x in N[j][i]]
        try:
            words.append(LabeledTree(8, tuple(edges)))
        except StructureError as exc:
            raise DataIntegrityError(f"S_{{{i},{j}}}: {exc}") from None
    return TreeCode(8, tuple(words), 5, "bibd-8-28-5",
                    {"pairs": [list(p) for p in combinations(range(8), 2)]})


# --- Fueredi-style family and the edge permutation ---------------------------


@dataclass(frozen=True)
class EdgePermutation:
    """Bijection on the edges of K_n; edges not in ``mapping`` are fixed."""

    n: int
    mapping: dict = field(hash=False)
    cycles: tuple = ()

    def __post_init__(self):
        if sorted(self.mapping) != sorted(self.mapping.values()):
            raise ParameterError("edge mapping is not a bijection")

    @classmethod
    def from_cycles(cls, n: int, cycles) -> "EdgePermutation":
        """Each cycle lists edges e0 -> e1 -> ... -> e0; supports must be disjoint."""
        mapping: dict = {}
        canon = []
        for cyc in cycles:
            cyc = [canonical_edge(*e) for e in cyc]
            for k, e in enumerate(cyc):
                if e in mapping:
                    raise ParameterError(f"edge {e} appears in two cycles")
                mapping[e] = cyc[(k + 1) % len(cyc)]
            canon.append(tuple(cyc))
        return cls(n, mapping, tuple(canon))

    def __call__(self, e) -> tuple[int, int]:
        e = canonical_edge(*e)
        return self.mapping.get(e, e)

    def apply(self, g: EdgeSet) -> EdgeSet:
        return EdgeSet(g.n, tuple(self(e) for e in g.edges))


SIGMA_11_CYCLES = (
    ((2, 3), (0, 9), (2, 8), (0, 8), (3, 6), (2, 4), (1, 8), (7, 8), (0, 6), (0, 1)),
    ((4, 6), (1, 10), (8, 10)),
    ((4, 9), (6, 10), (5, 10)),
    ((0, 10), (4, 8)),
    ((1, 5), (2, 9)),
    ((3, 8), (4, 5)),
    ((0, 2), (0, 3)),
)


def sigma_11() -> EdgePermutation:
    return EdgePermutation.from_cycles(11, SIGMA_11_CYCLES)


@dataclass(frozen=True)
class AffineGraphFamily:
    p: int
    graphs: tuple[tuple[int, int, EdgeSet], ...]

    def __len__(self):
        return len(self.graphs)


def inverse_pair_representatives(p: int) -> list[int]:
    """min(w, 1/w) over w in Z_p minus {0, 1, -1}."""
    return sorted({min(w, pow(w, p - 2, p)) for w in range(2, p - 1)})


def furedi_family(p: int) -> AffineGraphFamily:
    """G_{a,b}: edges {x, bx + a} for b in I_p; G_{a,1}: {x, x + a}, x < p-1."""
    if p < 5 or not is_prime(p):
        raise ParameterError(f"p must be a prime >= 5, got {p}")
    graphs = []
    for b in inverse_pair_representatives(p):
        for a in range(p):
            edges = {canonical_edge(x, (b * x + a) % p) for x in range(p) if (b * x + a) % p != x}
            graphs.append((a, b, EdgeSet(p, tuple(edges))))
    for a in range(1, (p - 1) // 2 + 1):
        graphs.append((a, 1, EdgeSet(p, tuple((x, (x + a) % p) for x in range(p - 1)))))
    for a, b, g in graphs:
        if len(g) != p - 1:
            raise StructureError(f"G_{{{a},{b}}} has {len(g)} edges, expected {p - 1}")
    return AffineGraphFamily(p, tuple(graphs))


@dataclass(frozen=True)
class TableCrossCheck:
    """Comparison of sigma(G_{a,b}) trees against the printed tree list."""

    derived_trees: int
    table_rows: int
    matched: int
    only_derived: tuple
    only_table: tuple
    label_mismatches: tuple  # (row, printed (a, b), derived (a, b))

    @property
    def edge_sets_agree(self) -> bool:
        return not self.only_derived and not self.only_table


def printed_tree_rows() -> list[dict]:
    return load_table("printed_trees_11.json", "rows")["rows"]


def furedi_sigma_trees(p: int = 11, sigma: EdgePermutation | None = None):
    """(a, b, tree) for every family member whose image under sigma is a tree."""
    sigma = sigma or sigma_11()
    out = []
    for a, b, g in furedi_family(p).graphs:
        img = sigma.apply(g)
        if is_spanning_tree(p, img):
            out.append((a, b, LabeledTree(p, img.edges)))
    return out


def crosscheck_printed_trees() -> TableCrossCheck:
    derived = {t.mask: (a, b) for a, b, t in furedi_sigma_trees()}
    rows = printed_tree_rows()
    printed = {}
    for r in rows:
        printed[EdgeSet(11, tuple(tuple(e) for e in r["edges"])).mask] = r
    matched = [m for m in printed if m in derived]
    labels = tuple(
        (printed[m]["row"], (printed[m]["a"], printed[m]["b"]), derived[m])
        for m in matched if (printed[m]["a"], printed[m]["b"]) != derived[m]
    )
    return TableCrossCheck(
        derived_trees=len(derived),
        table_rows=len(rows),
        matched=len(matched),
        only_derived=tuple(sorted(derived[m] for m in derived if m not in printed)),
        only_table=tuple(sorted(printed[m]["row"] for m in printed if m not in derived)),
        label_mismatches=labels,
    )


def code_11_35_8() -> TreeCode:
    """The 35 printed trees, validated independently of the sigma derivation."""
    words = []
    for r in printed_tree_rows():
        try:
            words.append(LabeledTree(11, tuple(tuple(e) for e in r["edges"])))
        except StructureError as exc:
            raise DataIntegrityError(f"printed tree row {r['row']}: {exc}") from None
    try:
        code = TreeCode(11, tuple(words), 8, "furedi-11-35-8")
    except StructureError as exc:
        raise DataIntegrityError(f"printed trees: {exc}") from None
    report = min_distance(code)
    if report.min_distance < 8:
        raise DataIntegrityError(f"printed trees: min distance {report.min_distance} < 8 at rows {report.argmin_pair}")
    check = crosscheck_printed_trees()
    meta = {
        "rows": [[r["row"], r["a"], r["b"]] for r in printed_tree_rows()],
        "sigma_crosscheck": {
            "derived_trees": check.derived_trees,
            "matched": check.matched,
            "only_derived": [list(x) for x in check.only_derived],
            "only_table": list(check.only_table),
            "label_mismatches": [[r, list(pr), list(dv)] for r, pr, dv in check.label_mismatches],
        },
    }
    return TreeCode(11, code.codewords, 8, "furedi-11-35-8", meta)


FAMILIES = {
    "stars": stars,
    "ham-paths": hamiltonian_paths,
    "paths-stars": paths_and_stars,
    "affine-n4": affine_triple_paths,
    "cubic-n13": cubic_pp_trees,
    "bibd-8-28-5": bibd_two_star_code,
    "furedi-11-35-8": code_11_35_8,
}


def family_size(family: str, n: int) -> int | None:
    """Closed-form size of a family on n nodes, or None if it has no member there."""
    if family == "stars":
        return n if n >= 3 else None
    if family == "ham-paths":
        return n // 2 if n >= 4 else None
    if family == "paths-stars":
        return n + n // 2 if n >= 5 else None
    if family == "affine-n4":
        p = n // 3
        return (p - 1) * (p - 3) if n % 3 == 0 and p >= 5 and is_prime(p) else None
    if family == "cubic-n13":
        q = n // 2
        m, r = 0, q
        while r > 1 and r % 3 == 0:
            r //= 3
            m += 1
        return q * ((q - 1) // 2) ** 2 if n % 2 == 0 and r == 1 and m >= 2 else None
    if family == "bibd-8-28-5":
        return 28 if n == 8 else None
    if family == "furedi-11-35-8":
        return 35 if n == 11 else None
    raise ParameterError(f"unknown family {family!r}")


FAMILY_DISTANCE = {
    "stars": lambda n: n - 2,
    "ham-paths": lambda n: n - 1,
    "paths-stars": lambda n: n - 3,
    "affine-n4": lambda n: n - 4,
    "cubic-n13": lambda n: n - 13,
    "bibd-8-28-5": lambda n: 5,
    "furedi-11-35-8": lambda n: 8,
}
