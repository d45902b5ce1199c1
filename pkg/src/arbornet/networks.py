"""Directed networks, arboreal certification, ancestry queries, and
evaluation of labelled networks into the graph they explain.

Vertex ids are strings. A ``Digraph`` is a plain immutable directed graph
used for intermediate rewiring states; a ``DirectedNetwork`` is a digraph
that passed ``validate_network``. Labelled networks pair a certified
network with a {0,1} labelling of the out-branching vertices and a map
from leaf ids to dense graph indices.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from types import MappingProxyType
from typing import Iterable, Mapping, Optional

from .graphs import Graph, is_connected


class NetworkViolation(ValueError):
    """One or more network axioms fail; ``violations`` lists each breach."""

    def __init__(self, violations):
        self.violations = tuple(violations)
        super().__init__("; ".join(v[0] + ": " + str(v[1]) for v in self.violations))


class Digraph:
    """Immutable directed graph on string vertex ids (no axioms enforced)."""

    __slots__ = ("vertices", "arcs", "_children", "_parents")

    def __init__(self, vertices: Iterable[str], arcs: Iterable):
        object.__setattr__(self, "vertices", frozenset(vertices))
        object.__setattr__(self, "arcs", frozenset((str(u), str(v)) for u, v in arcs))
        children = {v: set() for v in self.vertices}
        parents = {v: set() for v in self.vertices}
        for u, v in self.arcs:
            if u not in children or v not in children:
                raise ValueError(f"arc ({u},{v}) uses an undeclared vertex")
            if u == v:
                raise ValueError(f"self-arc on {u}")
            children[u].add(v)
            parents[v].add(u)
        object.__setattr__(self, "_children",
                           {v: frozenset(s) for v, s in children.items()})
        object.__setattr__(self, "_parents",
                           {v: frozenset(s) for v, s in parents.items()})

    def __setattr__(self, name, value):
        raise AttributeError("Digraph values are immutable")

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.vertices == other.vertices and self.arcs == other.arcs

    def __hash__(self):
        return hash((self.vertices, self.arcs))

    def __repr__(self):
        return f"Digraph({sorted(self.vertices)}, {sorted(self.arcs)})"

    def children(self, v: str):
        return self._children[v]

    def parents(self, v: str):
        return self._parents[v]

    def indeg(self, v: str) -> int:
        return len(self._parents[v])

    def outdeg(self, v: str) -> int:
        return len(self._children[v])

    @property
    def roots(self):
        return frozenset(v for v in self.vertices if self.indeg(v) == 0)

    @property
    def leaves(self):
        return frozenset(v for v in self.vertices if self.outdeg(v) == 0)

    @property
    def hybrids(self):
        """H(N): vertices of indegree >= 2."""
        return frozenset(v for v in self.vertices if self.indeg(v) >= 2)

    @property
    def branching(self):
        """V*(N): vertices of outdegree >= 2 (the label domain)."""
        return frozenset(v for v in self.vertices if self.outdeg(v) >= 2)

    def underlying_edges(self):
        return frozenset((min(u, v), max(u, v)) for u, v in self.arcs)

    def is_underlying_connected(self) -> bool:
        if not self.vertices:
            return True
        nbrs = {v: set() for v in self.vertices}
        for u, v in self.arcs:
            nbrs[u].add(v)
            nbrs[v].add(u)
        start = next(iter(self.vertices))
        seen = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in nbrs[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == len(self.vertices)

    def find_directed_cycle(self):
        """A directed cycle as a vertex tuple, or ``None``."""
        color = {v: 0 for v in self.vertices}
        stack_path = []

        def visit(v):
            color[v] = 1
            stack_path.append(v)
            for w in sorted(self._children[v]):
                if color[w] == 1:
                    i = stack_path.index(w)
                    return tuple(stack_path[i:])
                if color[w] == 0:
                    found = visit(w)
                    if found is not None:
                        return found
            stack_path.pop()
            color[v] = 2
            return None

        for v in sorted(self.vertices):
            if color[v] == 0:
                found = visit(v)
                if found is not None:
                    return found
        return None

    def fresh_id(self, prefix: str = "s") -> str:
        """Next unused id of the form prefix+k; counters only move forward."""
        k = 0
        for v in self.vertices:
            if v.startswith(prefix) and v[len(prefix):].isdigit():
                k = max(k, int(v[len(prefix):]) + 1)
        return f"{prefix}{k}"

    def subdivide(self, arc, new_id: Optional[str] = None) -> "Digraph":
        """Replace arc (u,v) by (u,w),(w,v) with a fresh vertex w."""
        u, v = arc
        if (u, v) not in self.arcs:
            raise ValueError(f"arc ({u},{v}) not present")
        w = new_id if new_id is not None else self.fresh_id()
        if w in self.vertices:
            raise ValueError(f"vertex id {w} already in use")
        arcs = (self.arcs - {(u, v)}) | {(u, w), (w, v)}
        return Digraph(self.vertices | {w}, arcs)

    def suppress(self, v: str) -> "Digraph":
        """Remove a vertex of indegree 1 and outdegree 1, joining its ends."""
        if v not in self.vertices:
            raise ValueError(f"unknown vertex {v}")
        if self.indeg(v) != 1 or self.outdeg(v) != 1:
            raise ValueError(f"vertex {v} does not have indegree 1 and outdegree 1")
        (p,) = self._parents[v]
        (c,) = self._children[v]
        arcs = (self.arcs - {(p, v), (v, c)}) | {(p, c)}
        return Digraph(self.vertices - {v}, arcs)

    def without(self, drop_vertices=(), drop_arcs=(), add_arcs=()) -> "Digraph":
        drop_vertices = set(drop_vertices)
        arcs = {a for a in self.arcs
                if a not in set(drop_arcs)
                and a[0] not in drop_vertices and a[1] not in drop_vertices}
        arcs |= set(add_arcs)
        return Digraph(self.vertices - drop_vertices, arcs)


class DirectedNetwork(Digraph):
    """A ``Digraph`` certified to satisfy the network axioms.

    Only ``validate_network`` constructs these.
    """

    __slots__ = ()


def find_network_violations(vertices, arcs):
    """All axiom breaches of the candidate network, with offending items."""
    try:
        d = Digraph(vertices, arcs)
    except ValueError as exc:
        return [("malformed", str(exc))]
    violations = []
    for u, v in d.arcs:
        if (v, u) in d.arcs and u < v:
            violations.append(("antiparallel arcs", (u, v)))
    cycle = d.find_directed_cycle()
    if cycle is not None:
        violations.append(("directed cycle", cycle))
    if not d.is_underlying_connected():
        violations.append(("disconnected", sorted(d.vertices)))
    for v in sorted(d.vertices):
        ind, outd = d.indeg(v), d.outdeg(v)
        if ind == 0 and outd < 2:
            violations.append(("root outdegree below 2", v))
        if outd == 0 and ind != 1:
            violations.append(("leaf indegree not 1", v))
        if ind == 1 and outd == 1:
            violations.append(("indegree 1 and outdegree 1", v))
    return violations


def validate_network(vertices, arcs) -> DirectedNetwork:
    """Certify the candidate as a network or raise with every breach."""
    violations = find_network_violations(vertices, arcs)
    if violations:
        raise NetworkViolation(violations)
    net = DirectedNetwork.__new__(DirectedNetwork)
    Digraph.__init__(net, vertices, arcs)
    return net


def is_arboreal(net: DirectedNetwork) -> bool:
    """The underlying undirected graph is a tree."""
    return len(net.underlying_edges()) == len(net.vertices) - 1


def root_hybrid_surplus(net: DirectedNetwork):
    """The two sides of the root/hybrid balance: (sum over hybrids of
    indegree-1, root count - 1). Equality characterizes arboreality."""
    lhs = sum(net.indeg(h) - 1 for h in net.hybrids)
    return lhs, len(net.roots) - 1


def is_binary(net: DirectedNetwork) -> bool:
    """All branching vertices have outdegree 2 and indegree at most 1, and
    all hybrid vertices have indegree 2 and outdegree 1."""
    for v in net.branching:
        if net.outdeg(v) != 2 or net.indeg(v) > 1:
            return False
    for v in net.hybrids:
        if net.indeg(v) != 2 or net.outdeg(v) != 1:
            return False
    return True


def ancestors(net: Digraph, v: str):
    """All vertices with a directed path to ``v``, including ``v``."""
    if v not in net.vertices:
        raise ValueError(f"unknown vertex {v}")
    seen = {v}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for p in net.parents(u):
            if p not in seen:
                seen.add(p)
                queue.append(p)
    return frozenset(seen)


def leaf_descendants(net: Digraph, v: str):
    """L_v: leaves reachable from ``v`` by directed paths."""
    if v not in net.vertices:
        raise ValueError(f"unknown vertex {v}")
    seen = {v}
    queue = deque([v])
    out = set()
    while queue:
        u = queue.popleft()
        if net.outdeg(u) == 0:
            out.add(u)
        for c in net.children(u):
            if c not in seen:
                seen.add(c)
                queue.append(c)
    return frozenset(out)


def lca(net: Digraph, x: str, y: str):
    """The least common ancestor of two distinct leaves: the common
    ancestor none of whose children is also a common ancestor. Returns
    ``None`` when the ancestor sets are disjoint; uniqueness is guarded."""
    if x == y:
        raise ValueError("lca arguments must be distinct leaves")
    for v in (x, y):
        if v not in net.vertices:
            raise ValueError(f"unknown vertex {v}")
        if net.outdeg(v) != 0:
            raise ValueError(f"{v} is not a leaf")
    common = ancestors(net, x) & ancestors(net, y)
    if not common:
        return None
    least = [u for u in common if not (net.children(u) & common)]
    if len(least) != 1:
        raise RuntimeError(
            f"least common ancestor of {x},{y} is not unique: {sorted(least)}"
        )
    return least[0]


@dataclass(frozen=True)
class LabelledArborealNetwork:
    """A certified arboreal network with labels on exactly V*(N) and a
    bijection from leaf ids to dense graph vertex indices."""

    net: DirectedNetwork
    labels: Mapping
    leaf_map: Mapping

    def __post_init__(self):
        object.__setattr__(self, "labels",
                           MappingProxyType(dict(self.labels)))
        object.__setattr__(self, "leaf_map",
                           MappingProxyType(dict(self.leaf_map)))

    def __eq__(self, other):
        if not isinstance(other, LabelledArborealNetwork):
            return NotImplemented
        return (self.net == other.net
                and dict(self.labels) == dict(other.labels)
                and dict(self.leaf_map) == dict(other.leaf_map))

    def __hash__(self):
        return hash((self.net,
                     tuple(sorted(self.labels.items())),
                     tuple(sorted(self.leaf_map.items()))))


def label_arboreal_network(net: DirectedNetwork, labels: Mapping,
                           leaf_map: Optional[Mapping] = None
                           ) -> LabelledArborealNetwork:
    """Certify a labelled arboreal network.

    Checks arboreality, that the label domain is exactly V*(N) with values
    in {0,1}, the root/hybrid balance equality, and that the leaf map is a
    bijection onto 0..|L|-1 (defaulting to sorted leaf order).
    """
    if not isinstance(net, DirectedNetwork):
        raise TypeError("net must come from validate_network")
    if not is_arboreal(net):
        raise NetworkViolation([("not arboreal", sorted(net.vertices))])
    lhs, rhs = root_hybrid_surplus(net)
    if lhs != rhs:
        raise NetworkViolation([("root/hybrid balance violated", (lhs, rhs))])
    if set(labels) != set(net.branching):
        raise NetworkViolation(
            [("label domain must be exactly the branching vertices",
              sorted(set(labels) ^ set(net.branching)))])
    if any(t not in (0, 1) for t in labels.values()):
        raise NetworkViolation([("labels must be 0 or 1", dict(labels))])
    leaves = sorted(net.leaves)
    if leaf_map is None:
        leaf_map = {x: i for i, x in enumerate(leaves)}
    if set(leaf_map) != set(leaves) or sorted(leaf_map.values()) != list(range(len(leaves))):
        raise NetworkViolation(
            [("leaf map must be a bijection from leaves onto 0..n-1",
              dict(leaf_map))])
    return LabelledArborealNetwork(net, labels, leaf_map)


def relabel_leaves(ln: LabelledArborealNetwork, mapping: Mapping
                   ) -> LabelledArborealNetwork:
    """Rename some leaves of a labelled network; indices are unchanged."""
    unknown = set(mapping) - ln.net.leaves
    if unknown:
        raise ValueError(f"not leaves: {sorted(unknown)}")
    clash = (set(mapping.values()) & (ln.net.vertices - set(mapping)))
    if clash or len(set(mapping.values())) != len(mapping):
        raise ValueError("new leaf names collide with existing vertices")

    def nm(v):
        return mapping.get(v, v)

    net = validate_network({nm(v) for v in ln.net.vertices},
                           {(nm(u), nm(v)) for u, v in ln.net.arcs})
    return label_arboreal_network(net, dict(ln.labels),
                                  {nm(x): i for x, i in ln.leaf_map.items()})


def shared_ancestry_graph(net: Digraph, leaf_map: Optional[Mapping] = None) -> Graph:
    """Graph on the leaves with an edge where two leaves share an ancestor."""
    leaves = sorted(net.leaves)
    if leaf_map is None:
        leaf_map = {x: i for i, x in enumerate(leaves)}
    anc = {x: ancestors(net, x) for x in leaves}
    edges = []
    for x, y in combinations(leaves, 2):
        if anc[x] & anc[y]:
            edges.append((leaf_map[x], leaf_map[y]))
    return Graph.from_edges(len(leaves), edges)


def explained_graph(ln) -> Graph:
    """C(N,t): edge {x,y} exactly when the leaves have a least common
    ancestor and its label is 1. Works for any labelled structure with
    ``net``, ``labels`` and ``leaf_map`` fields and unique lcas."""
    net = ln.net
    leaves = sorted(net.leaves)
    edges = []
    for x, y in combinations(leaves, 2):
        u = lca(net, x, y)
        if u is not None and ln.labels[u] == 1:
            edges.append((ln.leaf_map[x], ln.leaf_map[y]))
    return Graph.from_edges(len(leaves), edges)


def verify_explains(ln, g: Graph) -> bool:
    """Edge-set-exact comparison of the explained graph against ``g``."""
    if len(ln.net.leaves) != g.n:
        raise ValueError("leaf set and vertex set sizes differ")
    return explained_graph(ln) == g


def connectivity_check(ln) -> bool:
    """Whether the explained graph is connected (needs at least 2 leaves)."""
    if len(ln.net.leaves) < 2:
        raise ValueError("connectivity check needs at least 2 leaves")
    return is_connected(explained_graph(ln))
