from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from treecodes.errors import DimensionError, ResourceError, StructureError
from treecodes.graph import (EdgeSet, Forest, LabeledTree, components, edge_from_index,
                             edge_index, enumerate_spanning_trees, is_spanning_tree, path,
                             prufer_decode, prufer_encode, shared_edges, star, to_dot,
                             tree_distance, tree_masks)


def test_edge_index_is_lexicographic():
    for n in range(2, 8):
        pairs = list(itertools.combinations(range(n), 2))
        assert [edge_index(n, u, v) for u, v in pairs] == list(range(len(pairs)))
        assert all(edge_from_index(n, k) == e for k, e in enumerate(pairs))


def test_edgeset_canonicalizes_and_rejects_bad_input():
    s = EdgeSet(4, ((2, 0), (3, 1)))
    assert s.edges == ((0, 2), (1, 3))
    with pytest.raises(StructureError):
        EdgeSet(4, ((1, 1),))
    with pytest.raises(StructureError):
        EdgeSet(4, ((0, 1), (1, 0)))
    with pytest.raises(StructureError):
        EdgeSet(4, ((0, 4),))


def test_tree_and_forest_validation():
    with pytest.raises(StructureError):
        Forest(3, ((0, 1), (1, 2), (0, 2)))
    with pytest.raises(StructureError):
        LabeledTree(4, ((0, 1), (2, 3)))
    assert Forest(4, ((0, 1), (2, 3))).component_count == 2
    assert not is_spanning_tree(4, [(0, 1), (1, 2), (0, 2)])


def test_equal_edge_sets_compare_equal_across_types():
    t = star(4, 0)
    assert t == EdgeSet(4, t.edges)
    assert hash(t) == hash(EdgeSet(4, t.edges))


def test_distance_examples():
    assert tree_distance(star(5, 0), star(5, 1)) == 3
    assert tree_distance(star(6, 2), star(6, 2)) == 0
    p1, p2 = path(4, [0, 1, 2, 3]), path(4, [1, 3, 0, 2])
    assert shared_edges(p1, p2) == 0 and tree_distance(p1, p2) == 3
    with pytest.raises(DimensionError):
        shared_edges(star(4, 0), star(5, 0))


def test_components_sorted():
    f = EdgeSet(6, ((4, 5), (0, 3)))
    assert components(f) == [[0, 3], [1], [2], [4, 5]]


def test_prufer_known_and_errors():
    assert prufer_encode(star(5, 2)) == [2, 2, 2]
    assert prufer_decode([3, 3, 3, 4]) == LabeledTree(6, ((0, 3), (1, 3), (2, 3), (3, 4), (4, 5)))
    with pytest.raises(StructureError):
        prufer_decode([0, 7])
    with pytest.raises(StructureError):
        prufer_decode([0], n=5)


@given(st.integers(3, 9).flatmap(lambda n: st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2)))
@settings(max_examples=200)
def test_prufer_roundtrip_random(seq):
    assert prufer_encode(prufer_decode(seq)) == seq


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_enumeration_counts_and_distinct(n):
    trees = list(enumerate_spanning_trees(n))
    assert len(trees) == n ** (n - 2) == len(set(trees))
    assert [t.mask for t in trees] == list(tree_masks(n))


def test_enumeration_cap():
    with pytest.raises(ResourceError):
        next(enumerate_spanning_trees(9))


def test_distance_is_a_metric_on_trees():
    trees = list(enumerate_spanning_trees(4))
    for a, b, c in itertools.product(trees, repeat=3):
        assert tree_distance(a, b) == tree_distance(b, a)
        assert tree_distance(a, c) <= tree_distance(a, b) + tree_distance(b, c)
        assert (tree_distance(a, b) == 0) == (a == b)


def test_dot_output():
    text = to_dot(star(4, 0))
    assert text.count("--") == 3 and text.startswith("graph G {")
