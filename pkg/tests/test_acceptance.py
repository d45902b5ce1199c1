"""Acceptance gate: one test per acceptance criterion, each reporting a
single pass/fail line (the pytest -v line for the test). All criteria
are exact (no tolerances)."""

import random
from itertools import combinations

import numpy as np
import pytest

from arbornet import io
from arbornet.compat import build_symbolic_map, check_axioms_A, check_conditions_E
from arbornet.construct import (
    basic_galled_to_two_root,
    certify_basic_galled,
    classify_cycle,
    explain_dh,
    leaf_id,
    merge_disjoint,
    normalize_basic_to_zero,
    restrict_to,
    two_root_to_basic_galled,
    CycleKind,
)
from arbornet.graphs import (
    Graph,
    disjoint_union,
    extension_sequence,
    find_p4,
    induced_subgraph,
    is_connected,
    is_distance_hereditary,
    is_ptolemaic,
    NotDistanceHereditary,
    ptolemy_inequality_holds,
)
from arbornet.networks import (
    explained_graph,
    is_binary,
    label_arboreal_network,
    lca,
    leaf_descendants,
    relabel_leaves,
    root_hybrid_surplus,
    shared_ancestry_graph,
    validate_network,
    verify_explains,
)
from arbornet.oracle import (
    EnumerationBudget,
    enumerate_graphs,
    explainable_bruteforce,
    random_dh_graph,
    run_suite,
)

from helpers import C5, GEM, HOUSE


def test_criterion_01_dh_recognizer_agreement():
    """extension_sequence succeeds iff the forbidden-subgraph check
    passes, over all labeled graphs with n <= 6."""
    report = run_suite("dh-equivalence", max_n=6)
    assert report.passed, report.summary_lines()
    assert report.cases == sum(1 << (n * (n - 1) // 2) for n in range(1, 7))


def test_criterion_02_construction_round_trip(corpus6):
    """Every DH graph on 2..6 vertices round-trips through explain_dh
    with a binary, balance-satisfying output."""
    assert len(corpus6) > 0
    for g, ln in corpus6:
        assert verify_explains(ln, g)
        assert is_binary(ln.net)
        lhs, rhs = root_hybrid_surplus(ln.net)
        assert lhs == rhs


def test_criterion_03_bruteforce_converse():
    """Brute-force explainability equals DH membership for all graphs on
    <= 4 leaves (all true), and rejects gem, house and C5 at 5 leaves."""
    for n in (2, 3, 4):
        for g in enumerate_graphs(n):
            assert explainable_bruteforce(g)
            assert is_distance_hereditary(g)[0]
    budget = EnumerationBudget(max_leaves=5, time_cap=600)
    for g in (GEM, HOUSE, C5):
        assert not is_distance_hereditary(g)[0]
        assert not explainable_bruteforce(g, budget)


def test_criterion_04_ptolemaic_dual_methods():
    """Ptolemy-inequality and chordal+gem-free methods agree on all
    connected graphs with n <= 6."""
    report = run_suite("ptolemaic-methods", max_n=6)
    assert report.passed, report.summary_lines()
    # sanity: the two methods are genuinely both exercised
    assert ptolemy_inequality_holds(C5) == is_ptolemaic(C5) is False


def test_criterion_05_shared_ancestry_laws(corpus6):
    """A(N) is connected and Ptolemaic, C(N,t) is a subgraph of A(N),
    and the all-ones relabelling makes them equal, over the corpus."""
    for g, ln in corpus6:
        a = shared_ancestry_graph(ln.net, dict(ln.leaf_map))
        assert is_connected(a) and is_ptolemaic(a)
        assert explained_graph(ln).edges <= a.edges
        ones = label_arboreal_network(
            ln.net, {v: 1 for v in ln.net.branching}, dict(ln.leaf_map))
        assert explained_graph(ones) == a


def _connectivity_batch_ok(ln, rng, trials):
    """Vectorized check of connected(C) <=> all roots labeled 1 over
    random labelings: build the (trials, n, n) adjacency stack from the
    per-pair lca indices, then take boolean matrix powers."""
    net = ln.net
    leaves = sorted(net.leaves)
    n = len(leaves)
    branching = sorted(net.branching)
    bidx = {v: i for i, v in enumerate(branching)}
    root_cols = [bidx[r] for r in sorted(net.roots)]
    labels = rng.integers(0, 2, size=(trials, len(branching)), dtype=np.uint8)
    adj = np.zeros((trials, n, n), dtype=np.uint8)
    for i, j in combinations(range(n), 2):
        u = lca(net, leaves[i], leaves[j])
        if u is not None:
            adj[:, i, j] = adj[:, j, i] = labels[:, bidx[u]]
    reach = adj | np.eye(n, dtype=np.uint8)
    for _ in range(3):  # (2^3 = 8) > max path length at n <= 6
        reach = (reach @ reach > 0).astype(np.uint8)
    connected = reach.reshape(trials, -1).all(axis=1)
    all_roots_one = labels[:, root_cols].all(axis=1)
    return np.array_equal(connected, all_roots_one)


def test_criterion_06_connectivity_iff_roots_one(corpus6):
    """C(N,t) is connected exactly when every root is labeled 1, over
    1000 random relabelings of each corpus network."""
    rng = np.random.default_rng(0)
    for _g, ln in corpus6:
        assert _connectivity_batch_ok(ln, rng, trials=1000)


def test_criterion_07_composition_laws():
    """Root-count identity of merge_disjoint and restrict_to as its
    inverse, on 500 random pairs of explanations."""
    rng = random.Random(2024)
    for trial in range(500):
        g1 = random_dh_graph(rng, rng.randint(2, 6))
        ln1 = explain_dh(g1)
        if trial % 10 == 0:
            merged = merge_disjoint(ln1, "solo")
            assert len(merged.net.roots) == len(ln1.net.roots)
            assert explained_graph(merged) == \
                disjoint_union(g1, Graph.from_edges(1, []))
            keep = {x for x, i in merged.leaf_map.items() if i < g1.n}
        else:
            g2 = random_dh_graph(rng, rng.randint(2, 6))
            ln2 = relabel_leaves(explain_dh(g2),
                                 {leaf_id(i): f"y{i}" for i in range(g2.n)})
            merged = merge_disjoint(ln1, ln2)
            assert len(merged.net.roots) == \
                len(ln1.net.roots) + len(ln2.net.roots) - 1
            assert explained_graph(merged) == disjoint_union(g1, g2)
            keep = {x for x, i in merged.leaf_map.items() if i < g1.n}
        assert explained_graph(restrict_to(merged, keep)) == g1


def test_criterion_08_descendant_sets_induce_cographs(corpus6):
    """C(N,t)[L_v] is P4-free for every vertex of every corpus
    explanation."""
    for _g, ln in corpus6:
        c = explained_graph(ln)
        for v in ln.net.vertices:
            idx = sorted(ln.leaf_map[x] for x in leaf_descendants(ln.net, v))
            sub, _ = induced_subgraph(c, idx)
            assert find_p4(sub) is None


def test_criterion_09_compatibility_equivalence(corpus6):
    """(E1^E2^E3) <=> (A1^A2^A3^A4) over all nested pairs on <= 5
    vertices with the subgraph connected and DH; and every (C, A) pair
    from a connected corpus explanation passes E1-E3."""
    report = run_suite("e-vs-a", max_n=5)
    assert report.passed, report.summary_lines()
    for g, ln in corpus6:
        if not is_connected(g):
            continue
        c = explained_graph(ln)
        a = shared_ancestry_graph(ln.net, dict(ln.leaf_map))
        e = check_conditions_E(c, a)
        assert e.compatible, (sorted(g.edges), e)
        assert check_axioms_A(build_symbolic_map(c, a)).all_hold


def test_criterion_10_two_root_machinery():
    """Capping/uncapping are mutually inverse and preserve the explained
    graph on every enumerated small 2-root network under every labelling
    plus 200 random instances; every explained graph is DH with at most
    one non-cograph component."""
    report = run_suite("two-root", trials=200)
    assert report.passed, report.summary_lines()


def _decorated_instance(rng, long_len):
    """A basic galled tree in the rewirable shape (cycle path lengths
    {2, long_len}) with the proof's label pattern and a random leaf or
    labelled cherry hung on each cycle vertex and under the hybrid."""
    counter = [0]
    vertices = set()
    arcs = set()
    labels = {}

    def hang(parent):
        # either a single leaf or a cherry of two leaves with random label
        if rng.random() < 0.5:
            leaf = f"l{counter[0]}"
            counter[0] += 1
            vertices.add(leaf)
            arcs.add((parent, leaf))
        else:
            mid = f"m{counter[0]}"
            counter[0] += 1
            vertices.add(mid)
            arcs.add((parent, mid))
            labels[mid] = rng.randint(0, 1)
            for _ in range(2):
                leaf = f"l{counter[0]}"
                counter[0] += 1
                vertices.add(leaf)
                arcs.add((mid, leaf))

    vertices |= {"rho", "u1", "eta"}
    arcs |= {("rho", "u1"), ("u1", "eta"), ("rho", "q1")}
    labels.update({"rho": 1, "u1": 0, "q1": 0})
    hang("u1")
    prev = "q1"
    pattern = {2: 1, 3: 0}  # t(v2)=1 and, for the longer shape, t(w2)=0
    for k in range(2, long_len):
        v = f"q{k}"
        vertices.add(v)
        arcs.add((prev, v))
        labels[v] = pattern[k]
        hang(prev)
        prev = v
    hang(prev)
    arcs.add((prev, "eta"))
    vertices |= {a for arc in arcs for a in arc}
    hang("eta")
    vertices |= {a for arc in arcs for a in arc}
    net = validate_network(vertices, arcs)
    return certify_basic_galled(net, labels)


def test_criterion_11_normalization_preserves_graph():
    """normalize_basic_to_zero preserves the explained graph on >= 20
    randomized decorations of each rewirable shape."""
    rng = random.Random(99)
    for long_len in (3, 4):
        for _ in range(20):
            bgt = _decorated_instance(rng, long_len)
            assert classify_cycle(bgt) is CycleKind.NEITHER
            before = explained_graph(bgt)
            out = normalize_basic_to_zero(bgt)
            assert out.labels[out.root] == 0
            assert explained_graph(out) == before
            # and the 0-rooted result uncaps into a lawful 2-root network
            back = basic_galled_to_two_root(out)
            assert explained_graph(back) == before


def test_criterion_12_format_round_trips():
    """Serialize/parse identity for 1000 generated graphs (edge list and
    graph6) and 1000 generated networks (JSON document). Bit-exact."""
    rng = random.Random(5)
    for _ in range(1000):
        n = rng.randint(0, 12)
        pairs = list(combinations(range(n), 2))
        edges = [p for p in pairs if rng.random() < 0.4]
        g = Graph.from_edges(n, edges)
        el = io.serialize_edgelist(g)
        assert io.parse_edgelist(el) == g
        assert io.serialize_edgelist(io.parse_edgelist(el)) == el
        g6 = io.serialize_graph6(g)
        assert io.parse_graph6(g6) == g
        assert io.serialize_graph6(io.parse_graph6(g6)) == g6
    for _ in range(1000):
        ln = explain_dh(random_dh_graph(rng, rng.randint(2, 7)))
        doc = io.serialize_network_document(ln)
        net, labels, leaf_map = io.parse_network_document(doc)
        back = label_arboreal_network(net, labels, leaf_map)
        assert back == ln
        assert io.serialize_network_document(back) == doc
