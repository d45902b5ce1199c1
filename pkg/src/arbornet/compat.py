"""Symbolic maps over vertex pairs and the compatibility test deciding
when a connected distance-hereditary graph and a Ptolemaic supergraph can
be realized together.

A symbolic map sends every unordered vertex pair to One, Zero or Absent.
The induced map of a nested pair (g, gstar) marks edges of g with One,
edges of gstar only with Zero, and non-edges with Absent. Two equivalent
test batteries are implemented side by side: the four axioms on the map
itself and the three direct conditions on the graph pair. Their agreement
is a test obligation, never assumed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations, permutations
from types import MappingProxyType
from typing import Mapping, Optional

from .graphs import Graph, is_connected, is_ptolemaic


class Symbol(enum.Enum):
    ZERO = 0
    ONE = 1
    ABSENT = "absent"


def _key(x, y):
    return (x, y) if x < y else (y, x)


@dataclass(frozen=True)
class SymbolicMap:
    """A total symmetric map from unordered pairs of distinct vertices in
    0..n-1 to Zero / One / Absent."""

    n: int
    values: Mapping

    def __post_init__(self):
        vals = {}
        for (x, y), s in dict(self.values).items():
            if not isinstance(s, Symbol):
                raise ValueError(f"value for ({x},{y}) is not a Symbol")
            vals[_key(x, y)] = s
        expected = {(x, y) for x, y in combinations(range(self.n), 2)}
        if set(vals) != expected:
            raise ValueError("map must cover every unordered pair exactly once")
        object.__setattr__(self, "values", MappingProxyType(vals))

    def __call__(self, x, y) -> Symbol:
        return self.values[_key(x, y)]

    def __eq__(self, other):
        if not isinstance(other, SymbolicMap):
            return NotImplemented
        return self.n == other.n and dict(self.values) == dict(other.values)

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.values.items(),
                                          key=lambda kv: kv[0]))))


def _check_supergraph(g: Graph, gstar: Graph):
    if g.n != gstar.n:
        raise ValueError("graphs must share a vertex set")
    missing = g.edges - gstar.edges
    if missing:
        raise ValueError(f"not a supergraph: missing edges {sorted(missing)}")


def build_symbolic_map(g: Graph, gstar: Graph) -> SymbolicMap:
    """The induced map of a nested pair: One on edges of g, Zero on edges
    of gstar only, Absent elsewhere."""
    _check_supergraph(g, gstar)
    values = {}
    for x, y in combinations(range(g.n), 2):
        if g.has_edge(x, y):
            values[(x, y)] = Symbol.ONE
        elif gstar.has_edge(x, y):
            values[(x, y)] = Symbol.ZERO
        else:
            values[(x, y)] = Symbol.ABSENT
    return SymbolicMap(g.n, values)


def support_graph(d: SymbolicMap) -> Graph:
    """Edge wherever the map value is not Absent."""
    edges = [p for p, s in d.values.items() if s is not Symbol.ABSENT]
    return Graph.from_edges(d.n, edges)


@dataclass(frozen=True)
class AxiomVerdicts:
    a1: bool
    a2: bool
    a3: bool
    a4: bool
    witnesses: Mapping

    @property
    def all_hold(self) -> bool:
        return self.a1 and self.a2 and self.a3 and self.a4


def check_axioms_A(d: SymbolicMap) -> AxiomVerdicts:
    """Evaluate the four realizability axioms by exhaustive quantifier
    sweep.

    A1: the support graph is connected and Ptolemaic. A2: three pairwise
    distinct values on a triple force an Absent among them. A3: on any
    quadruple split into two equal value triples with different values,
    one of the two reference pairs is Absent. A4: an Absent pair whose
    other five pairs are all present forces the two end vertices to see
    the absent pair's endpoints identically.
    """
    witnesses = {}
    support = support_graph(d)
    a1 = is_connected(support) and is_ptolemaic(support)
    if not a1:
        witnesses["a1"] = support

    a2 = True
    for x, y, z in combinations(range(d.n), 3):
        vals = (d(x, y), d(y, z), d(x, z))
        if len(set(vals)) == 3 and Symbol.ABSENT not in vals:
            a2 = False
            witnesses["a2"] = (x, y, z)
            break

    a3 = True
    for quad in combinations(range(d.n), 4):
        for x, y, z, u in permutations(quad):
            if not (d(x, y) == d(y, z) == d(z, u)):
                continue
            if not (d(y, u) == d(u, x) == d(x, z)):
                continue
            if d(x, y) == d(y, u):
                continue
            if d(x, y) is not Symbol.ABSENT and d(x, z) is not Symbol.ABSENT:
                a3 = False
                witnesses["a3"] = (x, y, z, u)
                break
        if not a3:
            break

    a4 = True
    for quad in combinations(range(d.n), 4):
        for x, y, z, u in permutations(quad):
            if d(z, u) is not Symbol.ABSENT:
                continue
            others = (d(x, y), d(x, z), d(x, u), d(y, z), d(y, u))
            if any(s is Symbol.ABSENT for s in others):
                continue
            if d(x, z) != d(y, z) or d(x, u) != d(y, u):
                a4 = False
                witnesses["a4"] = (x, y, z, u)
                break
        if not a4:
            break

    return AxiomVerdicts(a1, a2, a3, a4, MappingProxyType(witnesses))


def find_asymmetric_diamond(g: Graph, gstar: Graph):
    """An ordered quadruple (x,y,z,u) where gstar holds every pair except
    {z,u}, g holds {x,z} but not {y,z}; ``None`` if there is none.

    Returns ``(quadruple, kind)`` where ``kind`` is the g-edge pattern on
    the pairs ({x,u},{y,u},{x,y}), distinguishing the eight shapes such a
    diamond can take.
    """
    _check_supergraph(g, gstar)
    for quad in combinations(range(g.n), 4):
        for x, y, z, u in permutations(quad):
            if gstar.has_edge(z, u):
                continue
            if not all(gstar.has_edge(a, b)
                       for a, b in ((x, y), (x, z), (x, u), (y, z), (y, u))):
                continue
            if g.has_edge(x, z) and not g.has_edge(y, z):
                kind = (g.has_edge(x, u), g.has_edge(y, u), g.has_edge(x, y))
                return (x, y, z, u), kind
    return None


@dataclass(frozen=True)
class CompatibilityReport:
    e1: bool
    e2: bool
    e3: bool
    e2_witness: Optional[tuple]
    e3_witness: Optional[tuple]

    @property
    def compatible(self) -> bool:
        return self.e1 and self.e2 and self.e3


def check_conditions_E(g: Graph, gstar: Graph) -> CompatibilityReport:
    """The three direct compatibility conditions on a nested pair with g
    connected and distance-hereditary: the supergraph is connected and
    Ptolemaic; no quadruple induces a path in g and a clique in gstar; and
    there is no asymmetric diamond."""
    _check_supergraph(g, gstar)
    e1 = is_connected(gstar) and is_ptolemaic(gstar)

    e2 = True
    e2_witness = None
    for quad in combinations(range(g.n), 4):
        if not all(gstar.has_edge(a, b) for a, b in combinations(quad, 2)):
            continue
        sub_edges = [(a, b) for a, b in combinations(quad, 2) if g.has_edge(a, b)]
        if len(sub_edges) != 3:
            continue
        degs = {v: 0 for v in quad}
        for a, b in sub_edges:
            degs[a] += 1
            degs[b] += 1
        if sorted(degs.values()) == [1, 1, 2, 2]:
            e2 = False
            e2_witness = quad
            break

    found = find_asymmetric_diamond(g, gstar)
    e3 = found is None
    e3_witness = found[0] if found else None
    return CompatibilityReport(e1, e2, e3, e2_witness, e3_witness)
