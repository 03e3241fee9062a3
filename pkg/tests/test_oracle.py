import pytest
from hypothesis import given

from conftest import digraphs, naive_all_ids
from idsdigraph.digraph import Digraph, VertexSet
from idsdigraph.errors import TooLarge
from idsdigraph.harness import all_digon_free, all_digraphs
from idsdigraph.oracle import count_ids, enumerate_ids, exists_ids, is_unique_ids
from idsdigraph.orientations import gen_directed
from idsdigraph.verify import is_ids


def _tuples(enum):
    return [s.to_tuple() for s in enum.sets]


def test_directed_c4(c4):
    enum = enumerate_ids(c4)
    assert _tuples(enum) == [(0, 2), (1, 3)]
    assert enum.exhaustive


def test_directed_c3_has_none():
    assert _tuples(enumerate_ids(gen_directed("cycle", 3))) == []


def test_figure2_matches_brute_force(fig2):
    assert naive_all_ids(fig2) == [(0, 3)]
    assert _tuples(enumerate_ids(fig2)) == [(0, 3)]


def test_exists():
    assert not exists_ids(gen_directed("cycle", 5))
    assert exists_ids(gen_directed("cycle", 6))
    assert not exists_ids(Digraph(3, [(0, 1), (1, 2), (2, 0)]))


def test_unique(c4):
    assert is_unique_ids(Digraph(3, [(0, 1), (0, 2), (1, 2)])) == VertexSet([0])
    K22 = Digraph(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    assert is_unique_ids(K22) == VertexSet([0, 1])
    assert is_unique_ids(c4) is None


def test_empty_digraph():
    assert _tuples(enumerate_ids(Digraph(0))) == [()]


def test_cap_reports_truncation():
    edgeless = Digraph(3)  # single IDS: everything
    assert enumerate_ids(edgeless, cap=1).exhaustive
    C8 = gen_directed("cycle", 8)
    enum = enumerate_ids(C8, cap=1)
    assert len(enum) == 1 and not enum.exhaustive
    assert enumerate_ids(C8, cap=2).exhaustive


def test_too_large():
    with pytest.raises(TooLarge):
        enumerate_ids(gen_directed("path", 33))
    assert exists_ids(gen_directed("path", 32))


@pytest.mark.parametrize("n", range(0, 5))
def test_equals_naive_filtering_digon_free(n):
    for D in all_digon_free(n):
        assert _tuples(enumerate_ids(D)) == naive_all_ids(D)


@pytest.mark.parametrize("n", range(2, 5))
def test_equals_naive_filtering_with_digons(n):
    for D in all_digraphs(n):
        assert _tuples(enumerate_ids(D)) == naive_all_ids(D)


@given(digraphs(max_n=9))
def test_equals_naive_sampled(D):
    assert _tuples(enumerate_ids(D)) == naive_all_ids(D)


@given(digraphs(max_n=12, digons=True))
def test_sets_are_distinct_sorted_ids(D):
    enum = enumerate_ids(D)
    assert list(enum.sets) == sorted(set(enum.sets))
    assert all(is_ids(D, s).is_ids for s in enum.sets)
    assert count_ids(D) == len(enum)
