"""Shared fixtures-in-code for the test suite: named small graphs,
independent re-implementations used as oracles, and conversions to
networkx values for cross-checking."""

from itertools import combinations

import networkx as nx

from arbornet.graphs import Graph


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])


# The three fixed obstructions, in template vertex order.
HOUSE = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 4)])
GEM = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)])
DOMINO = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4)])

P4 = path_graph(4)
C4 = cycle_graph(4)
C5 = cycle_graph(5)
K2 = complete_graph(2)
K3 = complete_graph(3)
K4 = complete_graph(4)


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def floyd_warshall_distances(g: Graph):
    """Independent all-pairs shortest paths; None marks unreachable."""
    inf = float("inf")
    d = [[inf] * g.n for _ in range(g.n)]
    for v in range(g.n):
        d[v][v] = 0
    for u, v in g.edges:
        d[u][v] = d[v][u] = 1
    for k in range(g.n):
        for i in range(g.n):
            for j in range(g.n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return tuple(tuple(None if x == inf else int(x) for x in row) for row in d)


def distance_hereditary_by_definition(g: Graph) -> bool:
    """Literal definition oracle: every connected induced subgraph
    preserves the distances of the whole graph. Only usable at desk
    scale."""
    from arbornet.graphs import induced_subgraph, is_connected

    dist = floyd_warshall_distances(g)
    for size in range(2, g.n + 1):
        for subset in combinations(range(g.n), size):
            h, mapping = induced_subgraph(g, subset)
            if not is_connected(h):
                continue
            sub = floyd_warshall_distances(h)
            for i in range(h.n):
                for j in range(i + 1, h.n):
                    if sub[i][j] != dist[mapping[i]][mapping[j]]:
                        return False
    return True


def lca_by_reachability(net, x, y):
    """Independent least-common-ancestor oracle: compute reachability
    with networkx, intersect ancestor sets, and filter by minimality."""
    d = nx.DiGraph()
    d.add_nodes_from(net.vertices)
    d.add_edges_from(net.arcs)
    anc_x = nx.ancestors(d, x) | {x}
    anc_y = nx.ancestors(d, y) | {y}
    common = anc_x & anc_y
    least = [u for u in common if not (set(d.successors(u)) & common)]
    if not common:
        return None
    assert len(least) == 1
    return least[0]
