"""Unit tests for the undirected-graph layer: construction, metrics,
class recognizers, and extension sequences."""

import pytest

from arbornet.graphs import (
    FalseTwin,
    Graph,
    Initial,
    NotDistanceHereditary,
    Pendant,
    TrueTwin,
    classify,
    complement,
    connected_components,
    disjoint_union,
    distance_matrix,
    extension_sequence,
    find_house_gem_domino,
    find_induced_cycle,
    find_p4,
    induced_subgraph,
    is_chordal,
    is_cograph,
    is_connected,
    is_distance_hereditary,
    is_hole_free,
    is_ptolemaic,
    ptolemy_inequality_holds,
    replay,
)

from helpers import (
    C4,
    C5,
    DOMINO,
    GEM,
    HOUSE,
    K2,
    K3,
    P4,
    complete_graph,
    cycle_graph,
    empty_graph,
    floyd_warshall_distances,
    path_graph,
)


class TestGraphBasics:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            Graph(2, frozenset({(1, 1)}))

    def test_rejects_out_of_range_edge(self):
        with pytest.raises(ValueError):
            Graph.from_edges(2, [(0, 2)])

    def test_from_edges_normalizes_orientation(self):
        g = Graph.from_edges(3, [(2, 0), (1, 0)])
        assert g.edges == frozenset({(0, 2), (0, 1)})
        assert g.has_edge(2, 0) and g.has_edge(0, 1)

    def test_adjacency_and_degree(self):
        assert P4.adj[1] == frozenset({0, 2})
        assert P4.degree(0) == 1 and P4.degree(2) == 2


class TestInducedSubgraph:
    def test_c4_minus_vertex_is_path(self):
        h, mapping = induced_subgraph(C4, {0, 1, 2})
        assert mapping == (0, 1, 2)
        assert h == path_graph(3)

    def test_full_subset_is_identity(self):
        h, mapping = induced_subgraph(GEM, range(5))
        assert h == GEM and mapping == (0, 1, 2, 3, 4)

    def test_gem_minus_apex_is_p4(self):
        # the gem template is P4 0-1-2-3 plus apex 4
        h, _ = induced_subgraph(GEM, {0, 1, 2, 3})
        assert h == P4

    def test_out_of_range_vertex_rejected(self):
        with pytest.raises(ValueError):
            induced_subgraph(C4, {0, 7})


class TestDistances:
    def test_p4_end_to_end(self):
        assert distance_matrix(P4)[0][3] == 3

    def test_unreachable_pair(self):
        assert distance_matrix(empty_graph(2))[0][1] is None

    def test_c5_distances_small(self):
        d = distance_matrix(C5)
        offdiag = {d[i][j] for i in range(5) for j in range(5) if i != j}
        assert offdiag == {1, 2}

    @pytest.mark.parametrize("g", [P4, C4, C5, GEM, DOMINO, empty_graph(4),
                                   disjoint_union(P4, K3)])
    def test_agrees_with_floyd_warshall(self, g):
        assert distance_matrix(g) == floyd_warshall_distances(g)


class TestComponents:
    def test_disjoint_union_components(self):
        g = disjoint_union(P4, K3)
        assert connected_components(g) == [(0, 1, 2, 3), (4, 5, 6)]
        assert not is_connected(g)

    def test_single_vertex_connected(self):
        assert is_connected(empty_graph(1))

    def test_complement_of_path(self):
        assert complement(path_graph(3)) == Graph.from_edges(3, [(0, 2)])


class TestCographRecognition:
    def test_p4_witness_in_path_order(self):
        w = find_p4(P4)
        assert w in ((0, 1, 2, 3), (3, 2, 1, 0))
        assert not is_cograph(P4)

    def test_single_vertex_is_cograph(self):
        assert is_cograph(empty_graph(1))

    def test_c4_is_cograph(self):
        assert is_cograph(C4)

    def test_found_p4_replays_as_path(self):
        g = disjoint_union(K2, HOUSE)
        w = find_p4(g)
        h, _ = induced_subgraph(g, w)
        assert sorted(len(h.adj[v]) for v in range(4)) == [1, 1, 2, 2]
        assert all(g.has_edge(w[i], w[i + 1]) for i in range(3))
        assert not g.has_edge(w[0], w[3]) and not g.has_edge(w[0], w[2])
        assert not g.has_edge(w[1], w[3])


class TestChordalAndHoleFree:
    def test_c4(self):
        assert not is_chordal(C4)
        assert is_hole_free(C4)

    def test_c5_not_hole_free(self):
        assert not is_hole_free(C5)

    def test_trees_are_chordal(self):
        assert is_chordal(path_graph(6))

    def test_found_cycle_is_induced_and_ordered(self):
        g = disjoint_union(K2, cycle_graph(6))
        cyc = find_induced_cycle(g, 5)
        assert len(cyc) == 6
        for i, v in enumerate(cyc):
            assert g.has_edge(v, cyc[(i + 1) % len(cyc)])
        h, _ = induced_subgraph(g, cyc)
        assert len(h.edges) == len(cyc)

    @pytest.mark.parametrize("g", [P4, C4, C5, cycle_graph(6), GEM, HOUSE])
    def test_chordal_agrees_with_networkx(self, g):
        import networkx as nx
        from helpers import to_networkx
        assert is_chordal(g) == nx.is_chordal(to_networkx(g))


class TestForbiddenTemplates:
    def test_gem_found(self):
        w = find_house_gem_domino(GEM)
        assert w.kind == "gem"

    def test_house_found(self):
        w = find_house_gem_domino(HOUSE)
        assert w.kind == "house"

    def test_domino_found(self):
        w = find_house_gem_domino(DOMINO)
        assert w.kind == "domino"

    def test_small_graphs_have_none(self):
        assert find_house_gem_domino(C4) is None
        assert find_house_gem_domino(complete_graph(4)) is None

    @pytest.mark.parametrize("g,kind", [(HOUSE, "house"), (GEM, "gem"),
                                        (DOMINO, "domino")])
    def test_witness_replays_to_template(self, g, kind):
        padded = disjoint_union(K3, g)
        w = find_house_gem_domino(padded)
        assert w.kind == kind
        template = {"house": HOUSE, "gem": GEM, "domino": DOMINO}[kind]
        pos = {v: i for i, v in enumerate(w.vertices)}
        for a in w.vertices:
            for b in w.vertices:
                if a < b:
                    assert padded.has_edge(a, b) == template.has_edge(
                        min(pos[a], pos[b]), max(pos[a], pos[b]))


class TestDistanceHereditary:
    def test_c5_fails_with_hole_witness(self):
        flag, w = is_distance_hereditary(C5)
        assert not flag and w.kind == "hole" and len(w.vertices) == 5

    def test_c4_is_dh(self):
        assert is_distance_hereditary(C4) == (True, None)

    def test_domino_fails(self):
        flag, w = is_distance_hereditary(DOMINO)
        assert not flag and w.kind == "domino"

    def test_agrees_with_distance_preservation_definition(self):
        from helpers import distance_hereditary_by_definition
        # spot-check the characterization against the literal definition
        for g in (P4, C4, C5, HOUSE, GEM, DOMINO, cycle_graph(6),
                  complete_graph(5), disjoint_union(P4, K2)):
            if not is_connected(g):
                continue
            assert is_distance_hereditary(g)[0] == \
                distance_hereditary_by_definition(g)


class TestPtolemaic:
    def test_k3_true(self):
        assert is_ptolemaic(K3)
        assert ptolemy_inequality_holds(K3)

    def test_c4_false_by_distances(self):
        assert not ptolemy_inequality_holds(C4)
        assert not is_ptolemaic(C4)

    def test_p4_true(self):
        assert ptolemy_inequality_holds(P4)
        assert is_ptolemaic(P4)

    def test_gem_chordal_but_not_ptolemaic(self):
        assert is_chordal(GEM)
        assert not is_ptolemaic(GEM)


class TestClassify:
    def test_p4_report(self):
        r = classify(P4)
        assert not r.cograph and r.chordal and r.hole_free
        assert r.ptolemaic and r.distance_hereditary
        assert r.witness.kind == "P4"

    def test_c5_report(self):
        r = classify(C5)
        assert not r.distance_hereditary and r.witness.kind == "hole"

    def test_cograph_and_ptolemaic_imply_dh_small(self):
        from arbornet.oracle import enumerate_graphs
        for g in enumerate_graphs(5):
            r = classify(g)
            if r.cograph or r.ptolemaic:
                assert r.distance_hereditary


class TestExtensionSequence:
    def test_k2(self):
        # degree-1 classification prefers the pendant rule; replays to K2
        seq = extension_sequence(K2)
        assert seq == (Initial(0), Pendant(1, 0))
        assert replay(seq) == K2

    def test_p4_golden_trace(self):
        assert extension_sequence(P4) == (
            Initial(0), Pendant(1, 0), Pendant(2, 1), Pendant(3, 2))

    def test_c5_raises(self):
        with pytest.raises(NotDistanceHereditary):
            extension_sequence(C5)

    def test_empty_graph_rejected(self):
        with pytest.raises(ValueError):
            extension_sequence(empty_graph(0))

    def test_round_trip_exhaustive_n4(self):
        from arbornet.oracle import enumerate_graphs
        for g in enumerate_graphs(4):
            assert replay(extension_sequence(g)) == g

    def test_true_twin_picked_on_k3(self):
        seq = extension_sequence(K3)
        assert isinstance(seq[2], TrueTwin)
        assert replay(seq) == K3

    def test_false_twin_picked_on_empty(self):
        seq = extension_sequence(empty_graph(3))
        assert isinstance(seq[1], FalseTwin) and isinstance(seq[2], FalseTwin)
        assert replay(seq) == empty_graph(3)


class TestReplay:
    def test_pendant_makes_k2(self):
        assert replay((Initial(0), Pendant(1, 0))) == K2

    def test_false_twin_of_isolated_vertex(self):
        assert replay((Initial(0), FalseTwin(1, 0))) == empty_graph(2)

    def test_unknown_anchor_rejected(self):
        with pytest.raises(ValueError):
            replay((Initial(0), Pendant(1, 5)))

    def test_duplicate_vertex_rejected(self):
        with pytest.raises(ValueError):
            replay((Initial(0), Pendant(1, 0), Pendant(1, 0)))

    def test_missing_initial_rejected(self):
        with pytest.raises(ValueError):
            replay((Pendant(1, 0),))
