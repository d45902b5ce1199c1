"""Undirected graphs and recognition of the hereditary classes built on them.

Vertices are dense integer indices; names only appear at the I/O layer.
All values are immutable after construction and all operations are pure,
so everything in here is safe to share between threads.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, permutations
from typing import Iterable, Optional


class NotDistanceHereditary(ValueError):
    """No pruning sequence exists for the given graph."""


@dataclass(frozen=True)
class Graph:
    """A finite simple graph on vertices 0..n-1 with an unordered edge set."""

    n: int
    edges: frozenset

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop on vertex {u}")
            if not (0 <= u < v < self.n):
                raise ValueError(f"bad edge {e!r} for vertex count {self.n}")

    @staticmethod
    def from_edges(n: int, edges: Iterable) -> "Graph":
        norm = frozenset((min(u, v), max(u, v)) for u, v in edges)
        return Graph(n, norm)

    @cached_property
    def adj(self):
        sets = [set() for _ in range(self.n)]
        for u, v in self.edges:
            sets[u].add(v)
            sets[v].add(u)
        return tuple(frozenset(s) for s in sets)

    @cached_property
    def masks(self):
        """Adjacency rows as bitmasks, for the subset-scanning recognizers."""
        rows = [0] * self.n
        for u, v in self.edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return tuple(rows)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def vertices(self):
        return range(self.n)


@dataclass(frozen=True)
class ForbiddenWitness:
    """An induced subgraph certifying that a class flag is false.

    ``vertices`` are listed in template order, so extracting them in this
    order reproduces the named configuration exactly.
    """

    kind: str  # P4 | hole | house | gem | domino
    vertices: tuple


@dataclass(frozen=True)
class GraphClassReport:
    cograph: bool
    chordal: bool
    hole_free: bool
    ptolemaic: bool
    distance_hereditary: bool
    witness: Optional[ForbiddenWitness]


# -- extension-sequence steps ------------------------------------------------

@dataclass(frozen=True)
class Initial:
    vertex: int


@dataclass(frozen=True)
class Pendant:
    new: int
    anchor: int


@dataclass(frozen=True)
class FalseTwin:
    new: int
    anchor: int


@dataclass(frozen=True)
class TrueTwin:
    new: int
    anchor: int


# -- basic operations --------------------------------------------------------

def induced_subgraph(g: Graph, subset) -> tuple:
    """Return ``(h, mapping)`` where ``h`` is the induced subgraph on
    ``subset`` and ``mapping[i]`` is the original index of vertex ``i``."""
    mapping = tuple(sorted(set(subset)))
    for v in mapping:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    index = {v: i for i, v in enumerate(mapping)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return Graph.from_edges(len(mapping), edges), mapping


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shifted = [(u + g1.n, v + g1.n) for u, v in g2.edges]
    return Graph.from_edges(g1.n + g2.n, list(g1.edges) + shifted)


def complement(g: Graph) -> Graph:
    edges = [(u, v) for u, v in combinations(range(g.n), 2) if not g.has_edge(u, v)]
    return Graph.from_edges(g.n, edges)


def distance_matrix(g: Graph):
    """All-pairs shortest path lengths via BFS; ``None`` marks unreachable."""
    rows = []
    for s in range(g.n):
        dist = [None] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if dist[w] is None:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        rows.append(tuple(dist))
    return tuple(rows)


def connected_components(g: Graph):
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = []
        queue = deque([s])
        seen[s] = True
        while queue:
            u = queue.popleft()
            comp.append(u)
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


# -- forbidden-subgraph recognizers ------------------------------------------

def find_p4(g: Graph):
    """An induced path on 4 vertices, returned in path order, or ``None``."""
    masks = g.masks
    for quad in combinations(range(g.n), 4):
        sub = 0
        for v in quad:
            sub |= 1 << v
        degs = [bin(masks[v] & sub & ~(1 << v)).count("1") for v in quad]
        if sorted(degs) != [1, 1, 2, 2]:
            continue
        ends = [v for v, d in zip(quad, degs) if d == 1]
        a, d = ends
        # a path needs its two endpoints non-adjacent and connected via the mids
        if masks[a] >> d & 1:
            continue
        b = next(v for v in quad if masks[a] >> v & 1 and v != d)
        c = next(v for v in quad if masks[d] >> v & 1 and v != a)
        if b != c and masks[b] >> c & 1:
            return (a, b, c, d)
    return None


def is_cograph(g: Graph) -> bool:
    return find_p4(g) is None


def find_induced_cycle(g: Graph, min_size: int):
    """Smallest induced cycle of size >= ``min_size``, in cycle order."""
    masks = g.masks
    for size in range(min_size, g.n + 1):
        for subset in combinations(range(g.n), size):
            sub = 0
            for v in subset:
                sub |= 1 << v
            if any(bin(masks[v] & sub & ~(1 << v)).count("1") != 2 for v in subset):
                continue
            order = _cycle_order(masks, subset)
            if order is not None:
                return order
    return None


def _cycle_order(masks, subset):
    sub = 0
    for v in subset:
        sub |= 1 << v
    start = subset[0]
    order = [start]
    prev = None
    cur = start
    while True:
        nbrs = [w for w in subset if masks[cur] >> w & 1 and w != prev]
        if not nbrs:
            return None
        nxt = nbrs[0]
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
        if len(order) > len(subset):
            return None
    return tuple(order) if len(order) == len(subset) else None


def is_chordal(g: Graph) -> bool:
    return find_induced_cycle(g, 4) is None


def is_hole_free(g: Graph) -> bool:
    return find_induced_cycle(g, 5) is None


# Fixed adjacency templates for the three five/six-vertex obstructions.
_HOUSE = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 4)])
_GEM = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)])
_DOMINO = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4)])

_TEMPLATES = (
    ("house", _HOUSE, tuple(sorted(_HOUSE.degree(v) for v in range(5)))),
    ("gem", _GEM, tuple(sorted(_GEM.degree(v) for v in range(5)))),
    ("domino", _DOMINO, tuple(sorted(_DOMINO.degree(v) for v in range(6)))),
)


def _match_template(g: Graph, subset, template: Graph):
    masks = g.masks
    sub = 0
    for v in subset:
        sub |= 1 << v
    degs = {v: bin(masks[v] & sub & ~(1 << v)).count("1") for v in subset}
    k = template.n
    tdeg = [template.degree(i) for i in range(k)]
    edge_count = sum(degs.values()) // 2
    if edge_count != len(template.edges):
        return None
    if sorted(degs.values()) != sorted(tdeg):
        return None
    for perm in permutations(subset):
        if any(degs[perm[i]] != tdeg[i] for i in range(k)):
            continue
        ok = True
        for u, v in combinations(range(k), 2):
            if template.has_edge(u, v) != bool(masks[perm[u]] >> perm[v] & 1):
                ok = False
                break
        if ok:
            return perm
    return None


def find_house_gem_domino(g: Graph):
    """First induced house, gem or domino (template order), or ``None``."""
    for kind, template, _ in _TEMPLATES:
        if g.n < template.n:
            continue
        for subset in combinations(range(g.n), template.n):
            perm = _match_template(g, subset, template)
            if perm is not None:
                return ForbiddenWitness(kind, perm)
    return None


def is_distance_hereditary(g: Graph):
    """Return ``(flag, witness)`` via the forbidden-subgraph characterization:
    hole-free with no induced house, gem or domino."""
    hole = find_induced_cycle(g, 5)
    if hole is not None:
        return False, ForbiddenWitness("hole", hole)
    hgd = find_house_gem_domino(g)
    if hgd is not None:
        return False, hgd
    return True, None


def ptolemy_inequality_holds(g: Graph) -> bool:
    """Check the distance inequality on every pairwise-connected 4-subset,
    under all three pairings of the four vertices."""
    dist = distance_matrix(g)
    for a, b, c, d in combinations(range(g.n), 4):
        ds = {}
        ok = True
        for u, v in combinations((a, b, c, d), 2):
            if dist[u][v] is None:
                ok = False
                break
            ds[(u, v)] = ds[(v, u)] = dist[u][v]
        if not ok:
            continue
        p1 = ds[(a, b)] * ds[(c, d)]
        p2 = ds[(a, c)] * ds[(b, d)]
        p3 = ds[(a, d)] * ds[(b, c)]
        if p1 > p2 + p3 or p2 > p1 + p3 or p3 > p1 + p2:
            return False
    return True


def is_ptolemaic(g: Graph) -> bool:
    """Chordal and gem-free. Agreement with the distance inequality on
    connected graphs is a test obligation, not assumed here."""
    if not is_chordal(g):
        return False
    if g.n < 5:
        return True
    for subset in combinations(range(g.n), 5):
        if _match_template(g, subset, _GEM) is not None:
            return False
    return True


def classify(g: Graph) -> GraphClassReport:
    dh, witness = is_distance_hereditary(g)
    cograph = is_cograph(g)
    chordal = is_chordal(g)
    if witness is None and not cograph:
        witness = ForbiddenWitness("P4", find_p4(g))
    if witness is None and not chordal:
        witness = ForbiddenWitness("hole", find_induced_cycle(g, 4))
    return GraphClassReport(
        cograph=cograph,
        chordal=chordal,
        hole_free=is_hole_free(g),
        ptolemaic=is_ptolemaic(g),
        distance_hereditary=dh,
        witness=witness,
    )


# -- pruning sequences -------------------------------------------------------

def _classify_removal(adj, present, y):
    """Rule under which ``y`` can be pruned from the remaining vertex set,
    or ``None``. Rule preference: pendant, then false twin, then true twin;
    the anchor is the lowest-index qualifying vertex."""
    ny = adj[y] & present
    if len(ny) == 1:
        return Pendant(y, min(ny))
    for u in sorted(present):
        if u == y:
            continue
        nu = adj[u] & present
        if u not in ny:
            if nu - {y} == ny and y not in nu:
                return FalseTwin(y, u)
        else:
            if (nu - {y}) | {u} == ny:
                return TrueTwin(y, u)
    return None


def extension_sequence(g: Graph):
    """A one-vertex-extension ordering rebuilding ``g``, found by greedy
    reverse pruning. The highest-index prunable vertex goes first, which
    keeps the surviving initial vertex as low as possible; deterministic
    by construction so golden tests can pin the output."""
    if g.n == 0:
        raise ValueError("empty graph has no extension sequence")
    adj = [set(s) for s in g.adj]
    present = set(range(g.n))
    removed = []
    while len(present) > 1:
        step = None
        for y in sorted(present, reverse=True):
            step = _classify_removal(adj, present, y)
            if step is not None:
                break
        if step is None:
            raise NotDistanceHereditary(
                f"no pendant or twin vertex among remaining {sorted(present)}"
            )
        removed.append(step)
        present.discard(step.new)
    (survivor,) = present
    return (Initial(survivor), *reversed(removed))


def replay(seq) -> Graph:
    """Rebuild the graph described by an extension sequence."""
    if not seq or not isinstance(seq[0], Initial):
        raise ValueError("sequence must start with an initial vertex")
    placed = {seq[0].vertex}
    adj = {seq[0].vertex: set()}
    for step in seq[1:]:
        if isinstance(step, Initial):
            raise ValueError("duplicate initial step")
        if step.new in placed:
            raise ValueError(f"vertex {step.new} added twice")
        if step.anchor not in placed:
            raise ValueError(f"unknown anchor {step.anchor}")
        if isinstance(step, Pendant):
            nbrs = {step.anchor}
        elif isinstance(step, FalseTwin):
            nbrs = set(adj[step.anchor])
        elif isinstance(step, TrueTwin):
            nbrs = set(adj[step.anchor]) | {step.anchor}
        else:
            raise ValueError(f"unknown step {step!r}")
        adj[step.new] = nbrs
        for u in nbrs:
            adj[u].add(step.new)
        placed.add(step.new)
    n = len(placed)
    if placed != set(range(n)):
        raise ValueError("sequence vertices must be exactly 0..k-1")
    edges = [(u, v) for u in adj for v in adj[u] if u < v]
    return Graph.from_edges(n, edges)
