from __future__ import annotations

import pytest

from treecodes.codes import (TreeCode, code_from_edge_lists, decode_erasures, decode_errors,
                             min_distance, verify)
from treecodes.constructions import hamiltonian_paths, stars
from treecodes.errors import (AmbiguityError, DecodingError, DimensionError, StructureError,
                              UndefinedDistanceError)
from treecodes.graph import star


def test_min_distance_and_argmin():
    rep = min_distance(stars(6))
    assert rep.min_distance == 4 and rep.argmin_pair == (0, 1)
    assert rep.max_shared_edges == 1 and rep.pair_count_checked == 15
    assert verify(stars(6), 4)[0] and not verify(stars(6), 5)[0]


def test_undefined_distance():
    with pytest.raises(UndefinedDistanceError):
        min_distance(TreeCode(4, (star(4, 0),)))


def test_duplicates_and_dimension_are_rejected():
    with pytest.raises(StructureError, match="codeword 1"):
        TreeCode(4, (star(4, 0), star(4, 0)))
    with pytest.raises(DimensionError):
        TreeCode(5, (star(4, 0),))
    with pytest.raises(StructureError, match="codeword 1"):
        code_from_edge_lists(3, [[(0, 1), (1, 2)], [(0, 1)]])


def test_erasure_decoding():
    code = stars(6)
    assert decode_erasures(code, [(2, 0), (2, 5)]).index == 2
    with pytest.raises(AmbiguityError) as exc:
        decode_erasures(code, [(0, 1)])
    assert exc.value.candidates == [0, 1]
    assert decode_erasures(code, [(0, 1)], permissive=True).candidates == (0, 1)
    with pytest.raises(DecodingError):
        decode_erasures(code, [(0, 1), (2, 3)])


def test_error_decoding():
    code = hamiltonian_paths(8)
    sent = code[1]
    received = list(sent.edges[:-3]) + [e for e in [(0, 7), (1, 6), (2, 5), (3, 4)] if e not in sent][:3]
    res = decode_errors(code, received)
    assert res.candidates == (1,)
    with pytest.raises(DimensionError):
        decode_errors(code, received[:-1])


def test_error_decoding_reports_ties():
    code = stars(4)
    res = decode_errors(code, [(0, 1), (2, 3), (0, 2)])
    assert not res.unique and len(res.candidates) > 1
