"""Brute-force enumeration and cross-checking oracles.

Everything here is deliberately independent of the constructive code
paths: graphs are enumerated exhaustively, arboreal networks are built
from underlying trees plus arc orientations, and the suites replay the
library's claimed equivalences at desk scale.
"""

from __future__ import annotations

import bisect
import os
import random
import time
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable, Optional

from . import compat, construct, graphs, networks
from .graphs import Graph
from .networks import DirectedNetwork, validate_network, find_network_violations


class EnumerationTruncated(RuntimeError):
    """A budget cap was hit before the enumeration finished."""


@dataclass(frozen=True)
class EnumerationBudget:
    max_leaves: int = 4
    max_internal_vertices: Optional[int] = None  # default 3n-5 for n leaves
    max_networks: int = 1_000_000
    time_cap: float = 600.0

    def internal_cap(self, n_leaves: int) -> int:
        if self.max_internal_vertices is not None:
            return self.max_internal_vertices
        return 3 * n_leaves - 5

    def __post_init__(self):
        if self.max_leaves <= 0 or self.max_networks <= 0 or self.time_cap <= 0:
            raise ValueError("budget caps must be positive")
        if self.max_internal_vertices is not None and self.max_internal_vertices <= 0:
            raise ValueError("budget caps must be positive")


def default_budget() -> EnumerationBudget:
    """Budget with caps optionally overridden by environment variables."""
    kwargs = {}
    if os.environ.get("ARBORNET_MAX_NETWORKS"):
        kwargs["max_networks"] = int(os.environ["ARBORNET_MAX_NETWORKS"])
    if os.environ.get("ARBORNET_TIME_CAP"):
        kwargs["time_cap"] = float(os.environ["ARBORNET_TIME_CAP"])
    return EnumerationBudget(**kwargs)


def enumerate_graphs(n: int):
    """All labeled graphs on n vertices, streamed in a fixed order."""
    if n > 7:
        raise ValueError("graph enumeration is capped at 7 vertices")
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[i] for i in range(len(pairs))
                                   if bits >> i & 1])


# -- underlying-tree enumeration ---------------------------------------------

def _prufer_trees(vertices):
    """All labeled trees on the given vertices via their coding sequences."""
    m = len(vertices)
    if m < 2:
        return
    if m == 2:
        yield [(vertices[0], vertices[1])]
        return
    for seq in product(vertices, repeat=m - 2):
        degree = {v: 1 for v in vertices}
        for v in seq:
            degree[v] += 1
        edges = []
        avail = sorted(v for v in vertices if degree[v] == 1)
        for v in seq:
            u = avail.pop(0)
            edges.append((u, v))
            degree[v] -= 1
            if degree[v] == 1:
                bisect.insort(avail, v)
        edges.append((avail[0], avail[1]))
        yield edges


def _reduced_trees(leaves):
    """Underlying trees on the leaf set plus internal vertices of degree
    >= 3, deduplicated under internal relabeling."""
    L = len(leaves)
    leaves = sorted(leaves)
    seen = set()
    max_b = max(L - 2, 0)
    b_values = [0] if L == 2 else range(1, max_b + 1)
    for b in b_values:
        internal = [f"i{j}" for j in range(b)]
        for edges in _prufer_trees(leaves + internal):
            deg = {}
            for u, v in edges:
                deg[u] = deg.get(u, 0) + 1
                deg[v] = deg.get(v, 0) + 1
            if any(deg.get(x, 0) != 1 for x in leaves):
                continue
            if any(deg.get(i, 0) < 3 for i in internal):
                continue
            key = _canonical_tree_key(edges, leaves, internal)
            if key in seen:
                continue
            seen.add(key)
            yield sorted(tuple(sorted(e)) for e in edges), internal


def _canonical_tree_key(edges, leaves, internal):
    """Order internal vertices by their leaf-distance vectors; in a tree
    whose internal vertices all have degree >= 2 this vector is unique per
    vertex, so the renaming is canonical."""
    nbrs = {}
    for u, v in edges:
        nbrs.setdefault(u, set()).add(v)
        nbrs.setdefault(v, set()).add(u)
    vectors = {v: tuple(_tree_distances(nbrs, v, leaves)) for v in internal}
    order = sorted(internal, key=lambda v: vectors[v])
    rename = {v: f"I{k}" for k, v in enumerate(order)}
    return frozenset(tuple(sorted((rename.get(u, u), rename.get(v, v))))
                     for u, v in edges)


def _tree_distances(nbrs, start, targets):
    from collections import deque
    dist = {start: 0}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in nbrs[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return [dist[t] for t in targets]


def _canonicalize_network(vertices, arcs, leaves):
    """Rename internal vertices by leaf-distance-vector order, yielding a
    canonical arc list with leaves fixed."""
    nbrs = {v: set() for v in vertices}
    for u, v in arcs:
        nbrs[u].add(v)
        nbrs[v].add(u)
    leaves = sorted(leaves)
    internal = sorted(v for v in vertices if v not in set(leaves))
    vectors = {v: tuple(_tree_distances(nbrs, v, leaves)) for v in internal}
    order = sorted(internal, key=lambda v: vectors[v])
    rename = {v: f"n{k}" for k, v in enumerate(order)}
    new_arcs = frozenset((rename.get(u, u), rename.get(v, v)) for u, v in arcs)
    return new_arcs


def enumerate_arboreal_networks(leaves: Iterable[str],
                                budget: Optional[EnumerationBudget] = None):
    """Every arboreal network on the given leaf set with at most the
    budgeted number of internal vertices, deduplicated by canonical form.

    Built by enumerating underlying trees (leaves of degree 1, internal
    vertices of degree >= 3, optional degree-2 vertices on edges) and then
    orienting: degree-2 vertices must point both ways down, leaf edges
    must point at the leaf, and only internal-internal edges are free.
    """
    leaves = sorted(str(x) for x in leaves)
    if len(leaves) < 2:
        raise ValueError("no valid network has fewer than 2 leaves")
    if len(set(leaves)) != len(leaves):
        raise ValueError("leaf names must be distinct")
    if budget is None:
        budget = default_budget()
    if len(leaves) > budget.max_leaves:
        raise ValueError(
            f"{len(leaves)} leaves exceeds the budget cap {budget.max_leaves}")
    cap_internal = budget.internal_cap(len(leaves))
    deadline = time.monotonic() + budget.time_cap
    emitted = 0
    seen = set()
    leaf_set = set(leaves)
    for edges, internal in _reduced_trees(leaves):
        for bits in range(1 << len(edges)):
            if time.monotonic() > deadline:
                raise EnumerationTruncated("time cap reached")
            sub = {i for i in range(len(edges)) if bits >> i & 1}
            if len(internal) + len(sub) > cap_internal:
                continue
            forced = []
            free = []
            vertices = set(leaf_set) | set(internal)
            bad = False
            for i, (a, b) in enumerate(edges):
                if i in sub:
                    s = f"s{i}"
                    vertices.add(s)
                    forced.extend([(s, a), (s, b)])
                elif b in leaf_set and a in leaf_set:
                    bad = True  # a bare leaf-leaf edge cannot be oriented
                    break
                elif a in leaf_set:
                    forced.append((b, a))
                elif b in leaf_set:
                    forced.append((a, b))
                else:
                    free.append((a, b))
            if bad:
                continue
            for orient_bits in range(1 << len(free)):
                arcs = list(forced)
                for j, (a, b) in enumerate(free):
                    arcs.append((a, b) if orient_bits >> j & 1 else (b, a))
                if find_network_violations(vertices, arcs):
                    continue
                canon = _canonicalize_network(vertices, arcs, leaves)
                if canon in seen:
                    continue
                seen.add(canon)
                canon_vertices = {v for a in canon for v in a}
                net = validate_network(canon_vertices, canon)
                assert networks.is_arboreal(net)
                emitted += 1
                if emitted > budget.max_networks:
                    raise EnumerationTruncated("network cap reached")
                yield net


def forced_labelling(net: DirectedNetwork, g: Graph, leaf_map):
    """The unique labelling making ``net`` explain ``g``, or ``None`` if no
    labelling can. Each leaf pair's least common ancestor must be labelled
    1 exactly when the pair is an edge, which forces every label."""
    labels = {}
    inverse = sorted(net.leaves)
    for x, y in combinations(inverse, 2):
        u = networks.lca(net, x, y)
        want = 1 if g.has_edge(leaf_map[x], leaf_map[y]) else 0
        if u is None:
            if want == 1:
                return None
            continue
        if labels.setdefault(u, want) != want:
            return None
    for v in net.branching:
        labels.setdefault(v, 0)
    return labels


def explainable_bruteforce(g: Graph,
                           budget: Optional[EnumerationBudget] = None) -> bool:
    """Whether some enumerated arboreal network with some labelling
    explains ``g`` exactly."""
    if g.n < 2:
        raise ValueError("explainability needs at least 2 vertices")
    leaf_map = {construct.leaf_id(i): i for i in range(g.n)}
    for net in enumerate_arboreal_networks(sorted(leaf_map), budget):
        labels = forced_labelling(net, g, leaf_map)
        if labels is None:
            continue
        ln = networks.label_arboreal_network(net, labels, leaf_map)
        if networks.verify_explains(ln, g):
            return True
    return False


# -- randomized instance generators ------------------------------------------

def random_extension_sequence(rng: random.Random, n: int, pendant_steps=None):
    """A random valid extension sequence on n vertices; if given,
    ``pendant_steps`` fixes how many steps use the pendant rule."""
    if n < 1:
        raise ValueError("need at least one vertex")
    order = list(range(n))
    rng.shuffle(order)
    steps = [graphs.Initial(order[0])]
    rules = []
    for i in range(1, n):
        rules.append(None)
    if pendant_steps is not None:
        if not 0 <= pendant_steps <= n - 1:
            raise ValueError("bad pendant step count")
        kinds = ["pendant"] * pendant_steps + \
            [rng.choice(["false", "true"]) for _ in range(n - 1 - pendant_steps)]
        rng.shuffle(kinds)
    else:
        kinds = [rng.choice(["pendant", "false", "true"]) for _ in range(n - 1)]
    for i in range(1, n):
        anchor = rng.choice(order[:i])
        kind = kinds[i - 1]
        if kind == "pendant":
            steps.append(graphs.Pendant(order[i], anchor))
        elif kind == "false":
            steps.append(graphs.FalseTwin(order[i], anchor))
        else:
            steps.append(graphs.TrueTwin(order[i], anchor))
    return tuple(steps)


def random_dh_graph(rng: random.Random, n: int, pendant_steps=None) -> Graph:
    return graphs.replay(random_extension_sequence(rng, n, pendant_steps))


def random_two_root_network(rng: random.Random, n: int):
    """A random labelled arboreal network with exactly two roots, found by
    explaining a random graph whose extension sequence has exactly one
    pendant step (each pendant step contributes one extra root)."""
    if n < 3:
        raise ValueError("need at least 3 vertices for a 2-root instance")
    while True:
        seq = random_extension_sequence(rng, n, pendant_steps=1)
        if not isinstance(seq[1], graphs.Pendant):
            # a pendant step in position 2 is absorbed by the initial root
            g = graphs.replay(seq)
            ln = construct.explain_dh(g)
            if len(ln.net.roots) == 2:
                return ln


# -- suites ------------------------------------------------------------------

@dataclass
class SuiteReport:
    name: str
    passed: bool
    cases: int
    failures: list = field(default_factory=list)
    elapsed: float = 0.0

    def summary_lines(self):
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{status} suite={self.name} cases={self.cases} "
                 f"elapsed={self.elapsed:.2f}s"]
        for f in self.failures[:20]:
            lines.append(f"  counterexample: {f}")
        return lines


def _suite_dh_equivalence(max_n=5, **_):
    cases = 0
    failures = []
    for n in range(1, max_n + 1):
        for g in enumerate_graphs(n):
            cases += 1
            try:
                graphs.extension_sequence(g)
                greedy_ok = True
            except graphs.NotDistanceHereditary:
                greedy_ok = False
            forbidden_ok, _w = graphs.is_distance_hereditary(g)
            if greedy_ok != forbidden_ok:
                failures.append(f"n={n} edges={sorted(g.edges)} "
                                f"greedy={greedy_ok} forbidden={forbidden_ok}")
    return cases, failures


def _suite_ptolemaic_methods(max_n=5, **_):
    cases = 0
    failures = []
    for n in range(1, max_n + 1):
        for g in enumerate_graphs(n):
            if not graphs.is_connected(g):
                continue
            cases += 1
            m1 = graphs.ptolemy_inequality_holds(g)
            m2 = graphs.is_ptolemaic(g)
            if m1 != m2:
                failures.append(f"n={n} edges={sorted(g.edges)} m1={m1} m2={m2}")
    return cases, failures


def _dh_corpus(max_n):
    for n in range(2, max_n + 1):
        for g in enumerate_graphs(n):
            if graphs.is_distance_hereditary(g)[0]:
                yield g


def _suite_round_trip(max_n=5, **_):
    cases = 0
    failures = []
    for g in _dh_corpus(max_n):
        cases += 1
        ln = construct.explain_dh(g)
        if not networks.verify_explains(ln, g):
            failures.append(f"explained graph mismatch for {sorted(g.edges)}")
            continue
        if not networks.is_binary(ln.net):
            failures.append(f"non-binary output for {sorted(g.edges)}")
        lhs, rhs = networks.root_hybrid_surplus(ln.net)
        if lhs != rhs:
            failures.append(f"root/hybrid balance off for {sorted(g.edges)}")
    return cases, failures


def _suite_connectivity(max_n=4, relabelings=100, seed=0, **_):
    rng = random.Random(seed)
    cases = 0
    failures = []
    for g in _dh_corpus(max_n):
        ln = construct.explain_dh(g)
        branching = sorted(ln.net.branching)
        roots = ln.net.roots
        for _ in range(relabelings):
            cases += 1
            labels = {v: rng.randint(0, 1) for v in branching}
            relabelled = networks.label_arboreal_network(
                ln.net, labels, dict(ln.leaf_map))
            connected = networks.connectivity_check(relabelled)
            all_roots_one = all(labels[r] for r in roots)
            if connected != all_roots_one:
                failures.append(f"graph={sorted(g.edges)} labels={labels}")
    return cases, failures


def _suite_e_vs_a(max_n=4, **_):
    cases = 0
    failures = []
    for n in range(2, max_n + 1):
        for gstar in enumerate_graphs(n):
            star_edges = sorted(gstar.edges)
            for bits in range(1 << len(star_edges)):
                g = Graph.from_edges(n, [star_edges[i]
                                         for i in range(len(star_edges))
                                         if bits >> i & 1])
                if not graphs.is_connected(g):
                    continue
                if not graphs.is_distance_hereditary(g)[0]:
                    continue
                cases += 1
                e = compat.check_conditions_E(g, gstar).compatible
                a = compat.check_axioms_A(
                    compat.build_symbolic_map(g, gstar)).all_hold
                if e != a:
                    failures.append(
                        f"g={sorted(g.edges)} gstar={star_edges} e={e} a={a}")
    return cases, failures


def _two_root_instances(budget=None):
    """All labelled 2-root networks over the enumerated 4-leaf (and
    3-leaf) arboreal networks, labels swept exhaustively."""
    for n_leaves in (3, 4):
        leaves = [construct.leaf_id(i) for i in range(n_leaves)]
        for net in enumerate_arboreal_networks(leaves, budget):
            if len(net.roots) != 2:
                continue
            branching = sorted(net.branching)
            for bits in range(1 << len(branching)):
                labels = {v: bits >> i & 1 for i, v in enumerate(branching)}
                yield networks.label_arboreal_network(net, labels)


def _check_two_root_instance(ln):
    """Round-trip and forward-direction checks for one 2-root instance;
    returns an error string or None."""
    g = networks.explained_graph(ln)
    bgt = construct.two_root_to_basic_galled(ln)
    if networks.explained_graph(bgt) != g:
        return "capping changed the explained graph"
    back = construct.basic_galled_to_two_root(bgt)
    if networks.explained_graph(back) != g:
        return "uncapping changed the explained graph"
    stats = (len(ln.net.roots), len(ln.net.hybrids), networks.is_binary(ln.net))
    back_stats = (len(back.net.roots), len(back.net.hybrids),
                  networks.is_binary(back.net))
    if stats != back_stats:
        return f"round trip changed structure {stats} -> {back_stats}"
    dh, _w = graphs.is_distance_hereditary(g)
    if not dh:
        return "explained graph of a 2-root network is not DH"
    non_cog = sum(
        1 for comp in graphs.connected_components(g)
        if not graphs.is_cograph(graphs.induced_subgraph(g, comp)[0]))
    if non_cog > 1:
        return f"{non_cog} non-cograph components"
    return None


def _suite_two_root(trials=50, seed=0, **_):
    rng = random.Random(seed)
    cases = 0
    failures = []
    for ln in _two_root_instances():
        cases += 1
        err = _check_two_root_instance(ln)
        if err:
            failures.append(err)
    for _ in range(trials):
        cases += 1
        ln = random_two_root_network(rng, rng.randint(3, 7))
        err = _check_two_root_instance(ln)
        if err:
            failures.append(err)
    return cases, failures


def _suite_lcc_root_count(pairs=100, seed=0, **_):
    rng = random.Random(seed)
    cases = 0
    failures = []
    for _ in range(pairs):
        cases += 1
        g1 = random_dh_graph(rng, rng.randint(2, 6))
        g2 = random_dh_graph(rng, rng.randint(2, 6))
        ln1 = construct.explain_dh(g1)
        ln2 = networks.relabel_leaves(
            construct.explain_dh(g2),
            {construct.leaf_id(i): f"y{i}" for i in range(g2.n)})
        merged = construct.merge_disjoint(ln1, ln2)
        r1, r2 = len(ln1.net.roots), len(ln2.net.roots)
        if len(merged.net.roots) != r1 + r2 - 1:
            failures.append(f"root count {len(merged.net.roots)} != {r1}+{r2}-1")
            continue
        if networks.explained_graph(merged) != graphs.disjoint_union(g1, g2):
            failures.append("merged network does not explain the disjoint union")
            continue
        part1 = {x for x, i in merged.leaf_map.items() if i < g1.n}
        restricted = construct.restrict_to(merged, part1)
        if networks.explained_graph(restricted) != g1:
            failures.append("restriction does not invert the merge")
    return cases, failures


def _suite_indcog(max_n=4, **_):
    cases = 0
    failures = []
    for g in _dh_corpus(max_n):
        ln = construct.explain_dh(g)
        c = networks.explained_graph(ln)
        inverse = {i: x for x, i in ln.leaf_map.items()}
        for v in sorted(ln.net.vertices):
            cases += 1
            lv = networks.leaf_descendants(ln.net, v)
            idx = sorted(ln.leaf_map[x] for x in lv)
            sub, _m = graphs.induced_subgraph(c, idx)
            if not graphs.is_cograph(sub):
                failures.append(f"graph={sorted(g.edges)} vertex={v}")
    return cases, failures


_SUITES = {
    "dh-equivalence": _suite_dh_equivalence,
    "ptolemaic-methods": _suite_ptolemaic_methods,
    "round-trip": _suite_round_trip,
    "connectivity": _suite_connectivity,
    "e-vs-a": _suite_e_vs_a,
    "two-root": _suite_two_root,
    "lcc-root-count": _suite_lcc_root_count,
    "indcog": _suite_indcog,
}

SUITE_NAMES = tuple(sorted(_SUITES))


def run_suite(name: str, **params) -> SuiteReport:
    """Run one registered cross-check suite and report pass/fail with
    counterexamples."""
    if name not in _SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITE_NAMES}")
    start = time.monotonic()
    cases, failures = _SUITES[name](**params)
    return SuiteReport(name=name, passed=not failures, cases=cases,
                       failures=failures, elapsed=time.monotonic() - start)
