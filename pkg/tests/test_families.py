import pytest
from hypothesis import given

from conftest import digraphs
from idsdigraph.digraph import Digraph, VertexSet
from idsdigraph.errors import NotInFamily, NotOrientation
from idsdigraph.families import (
    Status,
    classify,
    solve_anti_arborescence,
    solve_arborescence,
    solve_bipartite,
    solve_dag_greedy,
    solve_directed_cycle,
    solve_directed_path,
    solve_dispatch,
    solve_oriented_cycle,
    solve_oriented_tree,
    solve_tournament,
)
from idsdigraph.harness import all_tournaments
from idsdigraph.oracle import enumerate_ids, iter_ids
from idsdigraph.orientations import enumerate_orientations, gen_base, gen_directed, GeneratorSpec
from idsdigraph.verify import is_ids, mandatory_vertices

OUT_STAR = Digraph(4, [(0, 1), (0, 2), (0, 3)])
IN_STAR = Digraph(4, [(1, 0), (2, 0), (3, 0)])
TT3 = Digraph(3, [(0, 1), (0, 2), (1, 2)])
CYCLIC3 = Digraph(3, [(0, 1), (1, 2), (2, 0)])
DIAMOND = Digraph(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
K22 = Digraph(4, [(0, 2), (0, 3), (1, 2), (1, 3)])


def S(*vs):
    return VertexSet(vs)


class TestClassify:
    def test_directed_c4(self, c4):
        assert set(classify(c4)) == {"orientation", "oriented_cycle", "directed_cycle", "bipartite"}

    def test_out_star(self):
        # an out-star is also the directed complete bipartite graph K_{1,3}
        assert set(classify(OUT_STAR)) == {
            "orientation", "oriented_tree", "arborescence", "dag", "bipartite", "complete_bipartite_directed",
        }

    def test_transitive_tournament(self):
        # K3 is a 3-cycle, so every 3-tournament is an oriented cycle too
        assert set(classify(TT3)) == {"orientation", "tournament", "dag", "oriented_cycle"}

    def test_cyclic_triangle(self):
        assert set(classify(CYCLIC3)) == {"orientation", "tournament", "oriented_cycle", "directed_cycle"}

    def test_directed_path(self):
        tags = classify(gen_directed("path", 4))
        for t in ("directed_path", "oriented_path", "oriented_tree", "arborescence", "dag", "bipartite"):
            assert t in tags

    def test_complete_bipartite_directed(self):
        assert "complete_bipartite_directed" in classify(K22)
        assert "complete_bipartite_directed" not in classify(Digraph(4, [(0, 2), (0, 3), (1, 2)]))

    def test_digon(self):
        assert "orientation" not in classify(Digraph(2, [(0, 1), (1, 0)]))

    @given(digraphs(max_n=7))
    def test_tag_implications(self, D):
        tags = classify(D)
        chain = ["directed_path", "oriented_path", "oriented_tree", "dag"]
        for a, b in zip(chain, chain[1:]):
            assert a not in tags or b in tags
        assert "directed_cycle" not in tags or "oriented_cycle" in tags
        for t in ("arborescence", "anti_arborescence"):
            assert t not in tags or "oriented_tree" in tags
        assert "oriented_tree" not in tags or "bipartite" in tags
        # a 2-vertex tournament is a single arc, which is bipartite
        if "tournament" in tags and D.n >= 3:
            assert "bipartite" not in tags


class TestTournament:
    def test_transitive(self):
        assert solve_tournament(TT3).set == S(0)

    def test_cyclic(self):
        out = solve_tournament(CYCLIC3)
        assert out.status is Status.NONE_EXISTS

    def test_vertex_beating_all(self):
        for D in all_tournaments(4):
            if len(D.out_adj[2]) == 3:
                assert solve_tournament(D).set == S(2)

    def test_not_in_family(self):
        with pytest.raises(NotInFamily):
            solve_tournament(DIAMOND)


class TestPaths:
    @pytest.mark.parametrize("n, expect", [(5, S(0, 2, 4)), (1, S(0)), (2, S(0))])
    def test_directed_path(self, n, expect):
        assert solve_directed_path(gen_directed("path", n)).set == expect

    def test_directed_path_relabelled(self):
        D = Digraph(4, [(3, 1), (1, 0), (0, 2)])
        assert solve_directed_path(D).set == S(3, 0)


class TestDagGreedy:
    def test_diamond(self):
        assert solve_dag_greedy(DIAMOND).set == S(0, 3)
        assert [s.to_tuple() for s in enumerate_ids(DIAMOND).sets] == [(0, 3)]

    def test_directed_p5_matches_closed_form(self):
        P5 = gen_directed("path", 5)
        assert solve_dag_greedy(P5).set == solve_directed_path(P5).set == S(0, 2, 4)

    def test_source_in_middle(self):
        assert solve_dag_greedy(Digraph(3, [(1, 0), (1, 2)])).set == S(1)

    def test_cycle_rejected(self, c4):
        with pytest.raises(NotInFamily):
            solve_dag_greedy(c4)

    @given(digraphs(max_n=9))
    def test_greedy_rule(self, D):
        if "dag" not in classify(D):
            return
        chosen = solve_dag_greedy(D).set
        for v in range(D.n):
            if v in chosen:
                assert not any(u in chosen for u in D.in_adj[v])
            else:
                assert any(u in chosen for u in D.in_adj[v])
        assert mandatory_vertices(D).issubset(chosen)
        assert chosen.mask in list(iter_ids(D))


class TestTrees:
    def test_in_star(self):
        assert solve_oriented_tree(IN_STAR).set == S(1, 2, 3)
        assert solve_anti_arborescence(IN_STAR).set == S(1, 2, 3)

    def test_out_star(self):
        assert solve_oriented_tree(OUT_STAR).set == S(0)
        assert solve_arborescence(OUT_STAR).set == S(0)

    def test_zigzag_path(self):
        D = Digraph(4, [(0, 1), (2, 1), (2, 3)])
        assert solve_oriented_tree(D).set == S(0, 2)
        assert [s.to_tuple() for s in enumerate_ids(D).sets] == [(0, 2)]

    def test_forest_accepted(self):
        D = Digraph(5, [(0, 1), (3, 2)])
        assert solve_oriented_tree(D).set == S(0, 3, 4)

    def test_arborescence_depth_parity(self):
        assert solve_arborescence(gen_directed("path", 3)).set == S(0, 2)
        D = Digraph(5, [(0, 1), (0, 2), (1, 3), (1, 4)])
        assert solve_arborescence(D).set == S(0, 3, 4)
        assert len(enumerate_ids(D)) == 1

    def test_anti_arborescence(self):
        D = Digraph(3, [(2, 1), (1, 0)])
        assert solve_anti_arborescence(D).set == S(0, 2)
        assert len(enumerate_ids(D)) == 1
        assert solve_anti_arborescence(Digraph(1)).set == S(0)

    def test_arborescence_rejects_anti(self):
        with pytest.raises(NotInFamily):
            solve_arborescence(IN_STAR)


class TestCycles:
    def test_directed_c4_both_sets(self, c4):
        out = solve_directed_cycle(c4)
        assert out.set == S(0, 2)
        assert out.both_sets == (S(0, 2), S(1, 3))

    def test_directed_c5(self):
        out = solve_directed_cycle(gen_directed("cycle", 5))
        assert out.status is Status.NONE_EXISTS and out.reason == "directed-odd-cycle"

    def test_digon_is_not_a_cycle(self):
        with pytest.raises(NotInFamily):
            solve_directed_cycle(Digraph(2, [(0, 1), (1, 0)]))

    def test_alternating_c4_is_out_degree_two_vertices(self):
        D = Digraph(4, [(0, 1), (2, 1), (2, 3), (0, 3)])
        out = solve_oriented_cycle(D)
        assert out.set == S(0, 2)
        assert out.set == S(*(v for v in range(4) if len(D.out_adj[v]) == 2))

    def test_directed_c7(self):
        assert solve_oriented_cycle(gen_directed("cycle", 7)).status is Status.NONE_EXISTS

    def test_one_arc_flipped_c5(self):
        D = Digraph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
        out = solve_oriented_cycle(D)
        assert out.set == S(0, 2)
        assert is_ids(D, out.set).is_ids
        assert [s.to_tuple() for s in enumerate_ids(D).sets] == [(0, 2)]

    @pytest.mark.parametrize("n", range(3, 9))
    def test_alternating_orientations(self, n):
        if n % 2:
            return
        G = gen_base(GeneratorSpec("cycle", (n,)))
        for D in enumerate_orientations(G):
            outdeg = [len(a) for a in D.out_adj]
            if sorted(set(outdeg)) == [0, 2]:
                assert solve_oriented_cycle(D).set == S(*(v for v in range(n) if outdeg[v] == 2))


class TestBipartite:
    def test_figure2(self, fig2):
        assert solve_bipartite(fig2).set == S(0, 3)

    def test_directed_k22(self):
        assert solve_bipartite(K22).set == S(0, 1)

    def test_no_in_degree_zero_takes_partite_set(self, c4):
        assert solve_bipartite(c4).set == S(0, 2)

    def test_odd_cycle_rejected(self):
        with pytest.raises(NotInFamily):
            solve_bipartite(Digraph(3, [(0, 1), (1, 2), (0, 2)]))

    def test_disconnected_remainder(self):
        # two disjoint directed 4-cycles: each component gets its own class
        D = Digraph(8, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)])
        assert solve_bipartite(D).set == S(0, 2, 4, 6)


class TestDispatch:
    def test_directed_c5(self):
        assert solve_dispatch(gen_directed("cycle", 5)).status is Status.NONE_EXISTS

    def test_tree_goes_through_dag(self):
        out = solve_dispatch(Digraph(4, [(0, 1), (2, 1), (2, 3)]))
        assert out.route == "dag" and out.set == S(0, 2)

    def test_digon(self):
        with pytest.raises(NotOrientation):
            solve_dispatch(Digraph(2, [(0, 1), (1, 0)]))

    def test_oracle_fallback(self):
        # directed triangle with a pendant: cyclic, not bipartite, not a cycle
        D = Digraph(4, [(0, 1), (1, 2), (2, 0), (3, 0)])
        out = solve_dispatch(D)
        assert out.route == "oracle"
        assert [out.set.to_tuple()] == [s.to_tuple() for s in enumerate_ids(D).sets][:1]

    @given(digraphs(max_n=8))
    def test_sound_and_complete(self, D):
        out = solve_dispatch(D)
        exists = next(iter_ids(D), None) is not None
        assert out.found == exists
        if out.found:
            assert is_ids(D, out.set).is_ids
            assert mandatory_vertices(D).issubset(out.set)
