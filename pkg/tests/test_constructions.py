from __future__ import annotations

import itertools
import json

import pytest

from treecodes import constructions as C
from treecodes.codes import min_distance
from treecodes.errors import DataIntegrityError, ParameterError, StructureError
from treecodes.graph import EdgeSet, is_spanning_tree


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8, 9])
def test_simple_families(n):
    assert min_distance(C.stars(n)).min_distance == n - 2
    hp = C.hamiltonian_paths(n)
    assert len(hp) == n // 2 and min_distance(hp).min_distance == n - 1
    assert all(max(t.degrees()) <= 2 for t in hp)
    if n >= 5:
        ps = C.paths_and_stars(n)
        assert len(ps) == n + n // 2 and min_distance(ps).min_distance >= n - 3


def test_family_sizes_agree_with_generators():
    for n in range(3, 12):
        for fam in ("stars", "ham-paths", "paths-stars"):
            size = C.family_size(fam, n)
            if size is not None:
                assert size == len(C.FAMILIES[fam](n))
    assert C.family_size("affine-n4", 21) == 24 and C.family_size("affine-n4", 27) is None
    assert C.family_size("cubic-n13", 18) == 144 and C.family_size("cubic-n13", 6) is None


def test_parameter_errors():
    with pytest.raises(ParameterError):
        C.stars(2)
    with pytest.raises(ParameterError):
        C.affine_triple_paths(9)
    with pytest.raises(ParameterError):
        C.affine_triple_paths(3)
    with pytest.raises(ParameterError):
        C.cubic_pp_trees(3)
    with pytest.raises(ParameterError):
        C.cubic_pp_trees(25)


def test_affine_exact_distance():
    # pairwise overlap reaches the cap of 3, so n - 4 is attained
    for p in (5, 7, 11):
        code = C.affine_triple_paths(p)
        assert len(code) == (p - 1) * (p - 3)
        assert min_distance(code).min_distance == 3 * p - 4


def test_cubic_case_caps_hold():
    F = C._field_for(9)
    params = C.cubic_pp_params(F)
    trees = [C.cubic_pp_edges(F, *prm) for prm in params]
    assert all(len(t) == 17 for t in trees)
    worst = {k: 0 for k in C.CUBIC_CASE_CAPS}
    for t1, t2 in itertools.combinations(trees, 2):
        for case, cnt in C.cubic_case_breakdown(t1, t2).items():
            worst[case] = max(worst[case], cnt)
    assert all(worst[k] <= cap for k, cap in C.CUBIC_CASE_CAPS.items())


def test_block_table_properties_and_tamper_detection(tmp_path, monkeypatch):
    assert C.block_table().violations() == []
    src = C.load_table("block_table.json", "entries")
    bad = dict(src)
    bad["entries"] = [row[:] for row in src["entries"]]
    bad["entries"][0][1] = [3, 4, 6]
    (tmp_path / "block_table.json").write_text(json.dumps(bad))
    monkeypatch.setenv(C.DATA_DIR_ENV, str(tmp_path))
    C.block_table.cache_clear()
    try:
        with pytest.raises(DataIntegrityError):
            C.block_table()
    finally:
        monkeypatch.delenv(C.DATA_DIR_ENV)
        C.block_table.cache_clear()


def test_block_table_violations_are_reported():
    N = [list(r) for r in C.block_table().entries]
    N[0][1], N[0][2] = N[0][2], N[0][1]
    assert C.BlockTable(tuple(tuple(r) for r in N)).violations()


def test_bibd_code():
    code = C.bibd_two_star_code()
    assert len(code) == 28 and min_distance(code).min_distance == 5


def test_sigma_is_a_permutation_with_disjoint_cycles():
    s = C.sigma_11()
    edges = list(itertools.combinations(range(11), 2))
    assert sorted(s(e) for e in edges) == edges
    with pytest.raises(ParameterError):
        C.EdgePermutation.from_cycles(11, [[(0, 1), (0, 2)], [(0, 2), (0, 3)]])


def test_furedi_family_shape():
    fam = C.furedi_family(11)
    assert len(fam) == 49
    fam5 = C.furedi_family(5)
    assert len(fam5) == 7 and all(len(g) == 4 for _, _, g in fam5.graphs)


def test_printed_trees_crosscheck():
    chk = C.crosscheck_printed_trees()
    assert chk.derived_trees == 35 and chk.matched == 35 and chk.edge_sets_agree
    # rows 2-5 carry swapped (a, b) labels relative to the derivation
    assert [r for r, _, _ in chk.label_mismatches] == [2, 3, 4, 5]
    for _, printed, derived in chk.label_mismatches:
        assert tuple(printed) == tuple(reversed(derived))


def test_code_11_35_8():
    code = C.code_11_35_8()
    assert len(code) == 35 and all(is_spanning_tree(11, t) for t in code)
    assert min_distance(code).min_distance >= 8
