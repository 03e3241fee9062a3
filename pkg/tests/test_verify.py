import itertools

import pytest
from hypothesis import given

from conftest import digraphs, naive_is_ids
from idsdigraph.digraph import Digraph, VertexSet
from idsdigraph.errors import NotAnIds, VertexOutOfRange
from idsdigraph.harness import all_digon_free, all_digraphs
from idsdigraph.oracle import iter_ids
from idsdigraph.verify import (
    complement_dominates_reversal,
    is_dominating,
    is_ids,
    is_independent,
    lifts_to_underlying,
    mandatory_vertices,
)

P5 = Digraph(5, [(i, i + 1) for i in range(4)])
TT3 = Digraph(3, [(0, 1), (0, 2), (1, 2)])
C3 = Digraph(3, [(0, 1), (1, 2), (2, 0)])


def test_independence(c4):
    assert is_independent(c4, {0, 2})
    assert not is_independent(c4, {0, 1})
    assert is_independent(c4, set())


def test_domination(c4):
    assert is_dominating(c4, {0, 2})
    assert not is_dominating(c4, {0, 1})
    assert is_dominating(c4, range(4))


def test_domination_is_out_domination():
    # sink 1 dominates nobody
    D = Digraph(2, [(0, 1)])
    assert is_dominating(D, {0})
    assert not is_dominating(D, {1})


def test_out_of_range(c4):
    with pytest.raises(VertexOutOfRange):
        is_independent(c4, {4})


def test_is_ids_examples(fig2):
    cert = is_ids(fig2, {0, 3})
    assert cert.independent and cert.dominating and cert.is_ids
    assert is_ids(TT3, {0}).is_ids
    for v in range(3):
        assert not is_ids(C3, {v}).dominating


def test_mandatory(c4, fig2):
    assert mandatory_vertices(P5) == VertexSet([0])
    assert mandatory_vertices(c4) == VertexSet()
    assert mandatory_vertices(fig2) == VertexSet([0, 3])


def test_lifts(c4):
    assert lifts_to_underlying(c4, {0, 2})
    assert lifts_to_underlying(P5, {0, 2, 4})
    assert lifts_to_underlying(TT3, {0})
    with pytest.raises(NotAnIds):
        lifts_to_underlying(c4, {0})


def test_complement_dominates_reversal_examples(c4):
    assert complement_dominates_reversal(c4, {0, 2})
    assert complement_dominates_reversal(Digraph(2, [(0, 1)]), {0})
    out_star = Digraph(4, [(0, 1), (0, 2), (0, 3)])
    assert complement_dominates_reversal(out_star, {0})
    with pytest.raises(NotAnIds):
        complement_dominates_reversal(c4, {0, 1})


def test_complement_dominates_reversal_fails_when_ids_has_a_sink():
    # 0 -> 1 -> 2 has the single IDS {0, 2}; in the reversal only 1 -> 0
    # and 2 -> 1 exist, so {1} cannot reach 2.
    P3 = Digraph(3, [(0, 1), (1, 2)])
    assert not complement_dominates_reversal(P3, {0, 2})


@given(digraphs())
def test_full_set_dominates_and_empty_is_independent(D):
    assert is_dominating(D, D.vertices)
    assert is_independent(D, VertexSet())


@given(digraphs(digons=True))
def test_lift_holds_for_every_oracle_ids(D):
    for S in iter_ids(D):
        assert lifts_to_underlying(D, VertexSet.from_mask(S))


@pytest.mark.parametrize("n", range(0, 5))
def test_is_ids_agrees_with_naive(n):
    for D in all_digraphs(n):
        for r in range(n + 1):
            for combo in itertools.combinations(range(n), r):
                assert is_ids(D, combo).is_ids == naive_is_ids(n, D.arcs, combo)


@given(digraphs(max_n=8, digons=True))
def test_is_ids_agrees_with_naive_sampled(D):
    for r in range(D.n + 1):
        for combo in itertools.combinations(range(D.n), r):
            assert is_ids(D, combo).is_ids == naive_is_ids(D.n, D.arcs, combo)


def test_mandatory_contained_in_every_ids_n5():
    for D in all_digon_free(5):
        need = mandatory_vertices(D).mask
        for S in iter_ids(D):
            assert need & ~S == 0
