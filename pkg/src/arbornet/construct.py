"""Constructive directions: building a labelled arboreal network that
explains a distance-hereditary graph, cotrees for cographs, composition
and restriction of explanations, and the two-root / galled-tree
transforms.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping, Optional, Union

from .graphs import (
    FalseTwin,
    ForbiddenWitness,
    Graph,
    Pendant,
    TrueTwin,
    complement,
    connected_components,
    extension_sequence,
    find_p4,
    induced_subgraph,
    is_cograph,
    is_distance_hereditary,
)
from .networks import (
    DirectedNetwork,
    LabelledArborealNetwork,
    NetworkViolation,
    explained_graph,
    label_arboreal_network,
    leaf_descendants,
    root_hybrid_surplus,
    validate_network,
)


class NotCograph(ValueError):
    """A cotree was requested for a graph containing an induced P4."""


def leaf_id(vertex: int) -> str:
    """Stable leaf id for a graph vertex index."""
    return f"x{vertex}"


# -- building an explanation of a distance-hereditary graph ------------------

def _incoming_arc(arcs, v):
    for a in arcs:
        if a[1] == v:
            return a
    raise AssertionError(f"no incoming arc for {v}")


def explain_dh(g: Graph) -> LabelledArborealNetwork:
    """Build a labelled arboreal network explaining the distance-hereditary
    graph ``g`` by replaying its one-vertex-extension sequence.

    Start with one root over the first two vertices; for each later vertex,
    subdivide the incoming arc of its anchor leaf and either hang the new
    leaf from the subdivision vertex (twin steps, label = 1 exactly for a
    true twin) or from a fresh root above it (pendant steps, label 1).
    """
    if g.n < 2:
        raise ValueError("explaining a graph needs at least 2 vertices")
    seq = extension_sequence(g)
    states = list(_explain_states(g, seq))
    return states[-1][1]


def explain_dh_trace(g: Graph):
    """Like ``explain_dh`` but returning every intermediate state as a list
    of ``(vertex_subset, labelled_network)`` pairs, one per prefix of the
    extension sequence starting at length 2."""
    if g.n < 2:
        raise ValueError("explaining a graph needs at least 2 vertices")
    return list(_explain_states(g, extension_sequence(g)))


def _explain_states(g: Graph, seq):
    order = [seq[0].vertex] + [step.new for step in seq[1:]]
    x1, x2 = order[0], order[1]
    arcs = {("v0", leaf_id(x1)), ("v0", leaf_id(x2))}
    vertices = {"v0", leaf_id(x1), leaf_id(x2)}
    labels = {"v0": 1 if g.has_edge(x1, x2) else 0}
    v_counter = 1
    u_counter = 1
    placed = [x1, x2]
    yield _freeze_state(g, placed, vertices, arcs, labels)
    for step in seq[2:]:
        xi = step.new
        if isinstance(step, (TrueTwin, FalseTwin)):
            anchor = leaf_id(step.anchor)
            p, _ = _incoming_arc(arcs, anchor)
            v = f"v{v_counter}"
            v_counter += 1
            arcs -= {(p, anchor)}
            arcs |= {(p, v), (v, anchor), (v, leaf_id(xi))}
            vertices |= {v, leaf_id(xi)}
            labels[v] = 1 if g.has_edge(step.anchor, xi) else 0
        elif isinstance(step, Pendant):
            anchor = leaf_id(step.anchor)
            p, _ = _incoming_arc(arcs, anchor)
            v = f"v{v_counter}"
            v_counter += 1
            u = f"u{u_counter}"
            u_counter += 1
            arcs -= {(p, anchor)}
            arcs |= {(p, v), (v, anchor), (u, v), (u, leaf_id(xi))}
            vertices |= {v, u, leaf_id(xi)}
            labels[u] = 1
        else:
            raise ValueError(f"unexpected step {step!r}")
        placed.append(xi)
        yield _freeze_state(g, placed, vertices, arcs, labels)


def _freeze_state(g, placed, vertices, arcs, labels):
    subset = tuple(sorted(placed))
    rank = {v: i for i, v in enumerate(subset)}
    net = validate_network(set(vertices), set(arcs))
    leaf_map = {leaf_id(v): rank[v] for v in placed}
    return subset, label_arboreal_network(net, dict(labels), leaf_map)


# -- cotrees -----------------------------------------------------------------

def cotree(g: Graph) -> LabelledArborealNetwork:
    """A single-rooted labelled tree explaining the cograph ``g``, built by
    recursive decomposition into components / complement components."""
    if not is_cograph(g):
        raise NotCograph(f"induced P4 found: {find_p4(g)}")
    if g.n < 2:
        raise ValueError("a network needs at least 2 leaves")
    arcs = set()
    labels = {}
    counter = [0]

    def build(sub: Graph, names) -> str:
        if sub.n == 1:
            return leaf_id(names[0])
        comps = connected_components(sub)
        if len(comps) >= 2:
            label = 0
        else:
            comps = connected_components(complement(sub))
            label = 1
        node = f"c{counter[0]}"
        counter[0] += 1
        labels[node] = label
        for comp in comps:
            h, mapping = induced_subgraph(sub, comp)
            child = build(h, [names[v] for v in mapping])
            arcs.add((node, child))
        return node

    build(g, list(range(g.n)))
    vertices = {v for a in arcs for v in a}
    net = validate_network(vertices, arcs)
    return label_arboreal_network(net, labels,
                                  {leaf_id(v): v for v in range(g.n)})


# -- composition and restriction ---------------------------------------------

def _fresh(prefix, used):
    k = 0
    while f"{prefix}{k}" in used:
        k += 1
    return f"{prefix}{k}"


def merge_disjoint(ln1: LabelledArborealNetwork,
                   ln2: Union[LabelledArborealNetwork, str]
                   ) -> LabelledArborealNetwork:
    """Join two explanations under a new 0-labelled top vertex placed over
    one root of each operand; the result explains the disjoint union.

    The second operand may be a bare leaf id, standing in for a singleton
    component that no network can represent on its own.
    """
    n1 = len(ln1.net.leaves)
    if isinstance(ln2, str):
        if ln2 in ln1.net.vertices:
            raise ValueError(f"leaf name {ln2} overlaps the first operand")
        used = set(ln1.net.vertices) | {ln2}
        rho = _fresh("m", used)
        r1 = min(ln1.net.roots)
        vertices = set(ln1.net.vertices) | {ln2, rho}
        arcs = set(ln1.net.arcs) | {(rho, r1), (rho, ln2)}
        labels = dict(ln1.labels)
        labels[rho] = 0
        leaf_map = dict(ln1.leaf_map)
        leaf_map[ln2] = n1
        net = validate_network(vertices, arcs)
        return label_arboreal_network(net, labels, leaf_map)
    if ln1.net.leaves & ln2.net.leaves:
        raise ValueError(
            f"overlapping leaf names: {sorted(ln1.net.leaves & ln2.net.leaves)}")
    rename = {}
    used = set(ln1.net.vertices) | set(ln2.net.vertices)
    for v in sorted(ln2.net.vertices - ln2.net.leaves):
        if v in ln1.net.vertices:
            rename[v] = _fresh("w", used)
            used.add(rename[v])

    def nm(v):
        return rename.get(v, v)

    rho = _fresh("m", used)
    r1 = min(ln1.net.roots)
    r2 = nm(min(ln2.net.roots))
    vertices = set(ln1.net.vertices) | {nm(v) for v in ln2.net.vertices} | {rho}
    arcs = (set(ln1.net.arcs)
            | {(nm(u), nm(v)) for u, v in ln2.net.arcs}
            | {(rho, r1), (rho, r2)})
    labels = dict(ln1.labels)
    labels.update({nm(v): t for v, t in ln2.labels.items()})
    labels[rho] = 0
    leaf_map = dict(ln1.leaf_map)
    leaf_map.update({x: i + n1 for x, i in ln2.leaf_map.items()})
    net = validate_network(vertices, arcs)
    return label_arboreal_network(net, labels, leaf_map)


def _cleanup(vertices, arcs):
    """Repeatedly drop indegree-0/outdegree-1 (and isolated) vertices and
    suppress indegree-1/outdegree-1 vertices until none remain."""
    vertices = set(vertices)
    arcs = set(arcs)
    while True:
        ind = {v: 0 for v in vertices}
        outd = {v: 0 for v in vertices}
        parent = {}
        child = {}
        for u, v in arcs:
            outd[u] += 1
            ind[v] += 1
            parent[v] = u if ind[v] == 1 else None
            child[u] = v if outd[u] == 1 else None
        removed = False
        for v in sorted(vertices):
            if ind[v] == 0 and outd[v] == 1:
                vertices.discard(v)
                arcs = {a for a in arcs if v not in a}
                removed = True
                break
            if ind[v] == 0 and outd[v] == 0:
                vertices.discard(v)
                removed = True
                break
            if ind[v] == 1 and outd[v] == 1:
                p, c = parent[v], child[v]
                vertices.discard(v)
                arcs = (arcs - {(p, v), (v, c)}) | {(p, c)}
                removed = True
                break
        if not removed:
            return vertices, arcs


def _relabel_after_surgery(old_ln, vertices, arcs, kept_leaves):
    net = validate_network(vertices, arcs)
    extra = net.branching - set(old_ln.labels)
    if extra:
        raise AssertionError(f"surgery created unlabelled branching vertices {extra}")
    labels = {v: old_ln.labels[v] for v in net.branching}
    order = sorted(kept_leaves, key=lambda x: old_ln.leaf_map[x])
    leaf_map = {x: i for i, x in enumerate(order)}
    return label_arboreal_network(net, labels, leaf_map)


def restrict_to(ln: LabelledArborealNetwork, keep) -> LabelledArborealNetwork:
    """Restrict an explanation to a union of connected components of its
    explained graph, given as a set of leaf ids."""
    keep = set(keep)
    unknown = keep - ln.net.leaves
    if unknown:
        raise ValueError(f"unknown leaves {sorted(unknown)}")
    g = explained_graph(ln)
    keep_idx = {ln.leaf_map[x] for x in keep}
    for comp in connected_components(g):
        inter = keep_idx & set(comp)
        if inter and inter != set(comp):
            raise ValueError(
                "restriction set must be a union of connected components")
    if not keep:
        raise ValueError("restriction set must be nonempty")
    drop = {v for v in ln.net.vertices
            if not (leaf_descendants(ln.net, v) & keep)}
    vertices = set(ln.net.vertices) - drop
    arcs = {a for a in ln.net.arcs if a[0] not in drop and a[1] not in drop}
    vertices, arcs = _cleanup(vertices, arcs)
    return _relabel_after_surgery(ln, vertices, arcs, keep)


def remove_leaf(ln: LabelledArborealNetwork, x: str) -> LabelledArborealNetwork:
    """Delete one leaf whose parent has outdegree at least 2, then clean up."""
    if x not in ln.net.leaves:
        raise ValueError(f"{x} is not a leaf")
    (p,) = ln.net.parents(x)
    if ln.net.outdeg(p) < 2:
        raise ValueError(f"parent {p} of {x} has outdegree 1")
    vertices = set(ln.net.vertices) - {x}
    arcs = set(ln.net.arcs) - {(p, x)}
    vertices, arcs = _cleanup(vertices, arcs)
    return _relabel_after_surgery(ln, vertices, arcs, ln.net.leaves - {x})


# -- two-root networks and basic galled trees --------------------------------

class CycleKind(enum.Enum):
    WEAK = "Weak"
    WELL_PROPORTIONED = "WellProportioned"
    NEITHER = "Neither"


@dataclass(frozen=True)
class BasicGalledTree:
    """A labelled single-rooted network whose unique cycle is rooted at the
    network root; built only through ``certify_basic_galled``."""

    net: DirectedNetwork
    labels: Mapping
    leaf_map: Mapping
    root: str
    hybrid: str
    path1: tuple
    path2: tuple

    def __post_init__(self):
        object.__setattr__(self, "labels", MappingProxyType(dict(self.labels)))
        object.__setattr__(self, "leaf_map", MappingProxyType(dict(self.leaf_map)))


def certify_basic_galled(net: DirectedNetwork, labels: Mapping,
                         leaf_map: Optional[Mapping] = None) -> BasicGalledTree:
    """Certify a basic galled tree: one root of outdegree 2, exactly one
    indegree-2 vertex, and the two root-to-hybrid paths meeting only at
    their endpoints."""
    if not isinstance(net, DirectedNetwork):
        raise TypeError("net must come from validate_network")
    roots = net.roots
    if len(roots) != 1:
        raise NetworkViolation([("basic galled tree needs one root", sorted(roots))])
    (rho,) = roots
    if net.outdeg(rho) != 2:
        raise NetworkViolation([("cycle root must have outdegree 2", rho)])
    hybrids = net.hybrids
    if len(hybrids) != 1 or net.indeg(next(iter(hybrids))) != 2:
        raise NetworkViolation(
            [("exactly one indegree-2 vertex required", sorted(hybrids))])
    (eta,) = hybrids
    paths = []
    for p in sorted(net.parents(eta)):
        path = [eta, p]
        while path[-1] != rho:
            ps = net.parents(path[-1])
            if len(ps) != 1:
                raise NetworkViolation([("cycle path not unique above", path[-1])])
            path.append(next(iter(ps)))
        paths.append(tuple(reversed(path)))
    p1, p2 = sorted(paths, key=lambda p: (len(p), p))
    if set(p1) & set(p2) != {rho, eta}:
        raise NetworkViolation(
            [("cycle paths must meet only at root and hybrid", (p1, p2))])
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
    return BasicGalledTree(net, labels, leaf_map, rho, eta, p1, p2)


def two_root_to_basic_galled(ln: LabelledArborealNetwork) -> BasicGalledTree:
    """Cap a 2-root arboreal network with a fresh 0-labelled root over both
    roots; the result is a basic galled tree explaining the same graph."""
    roots = sorted(ln.net.roots)
    if len(roots) != 2:
        raise ValueError(f"expected exactly 2 roots, found {len(roots)}")
    rho = _fresh("g", ln.net.vertices)
    vertices = set(ln.net.vertices) | {rho}
    arcs = set(ln.net.arcs) | {(rho, roots[0]), (rho, roots[1])}
    labels = dict(ln.labels)
    labels[rho] = 0
    net = validate_network(vertices, arcs)
    return certify_basic_galled(net, labels, dict(ln.leaf_map))


def basic_galled_to_two_root(bgt: BasicGalledTree) -> LabelledArborealNetwork:
    """Remove the 0-labelled cycle root of a basic galled tree, recovering
    a 2-root arboreal network explaining the same graph."""
    if bgt.labels[bgt.root] != 0:
        raise ValueError("cycle root must be labelled 0")
    vertices = set(bgt.net.vertices) - {bgt.root}
    arcs = {a for a in bgt.net.arcs if bgt.root not in a}
    vertices, arcs = _cleanup(vertices, arcs)
    net = validate_network(vertices, arcs)
    extra = net.branching - set(bgt.labels)
    if extra:
        raise AssertionError(f"unlabelled branching vertices {extra}")
    labels = {v: bgt.labels[v] for v in net.branching}
    ln = label_arboreal_network(net, labels, dict(bgt.leaf_map))
    lhs, rhs = root_hybrid_surplus(net)
    assert lhs == rhs
    return ln


def classify_cycle(bgt: BasicGalledTree) -> CycleKind:
    """Weak, well-proportioned, or neither, by the two cycle path lengths."""
    l1 = len(bgt.path1) - 1
    l2 = len(bgt.path2) - 1
    lo, hi = min(l1, l2), max(l1, l2)
    if lo == 1 or (lo == 2 and hi == 2):
        return CycleKind.WEAK
    if hi >= 5 or lo >= 3:
        return CycleKind.WELL_PROPORTIONED
    return CycleKind.NEITHER


def normalize_basic_to_zero(bgt: BasicGalledTree) -> BasicGalledTree:
    """Rewire a basic galled tree whose cycle root is labelled 1 into one
    whose cycle root is labelled 0, preserving the explained graph.

    Only the two rewirable shapes are handled: the shorter cycle path has
    length 2 and the longer one length 3 or 4, with the exact alternating
    label pattern required by those shapes. A 0-rooted input is returned
    unchanged; anything else is an error.
    """
    if bgt.labels[bgt.root] == 0:
        return bgt
    kind = classify_cycle(bgt)
    if kind is not CycleKind.NEITHER:
        raise ValueError(f"cycle is {kind.value}; rewiring is only defined "
                         "for path lengths {2,3} or {2,4}")
    p1, p2 = sorted((bgt.path1, bgt.path2), key=len)
    rho, eta = bgt.root, bgt.hybrid
    u1 = p1[1]
    u2, v2 = p2[1], p2[2]
    w2 = p2[3] if len(p2) == 5 else None
    if bgt.net.outdeg(eta) != 1:
        raise ValueError("hybrid vertex must have outdegree 1")
    for v in (u1, u2, v2) + ((w2,) if w2 else ()):
        if bgt.net.outdeg(v) != 2:
            raise ValueError(f"cycle vertex {v} must have outdegree 2")
    want = {u1: 0, u2: 0, v2: 1}
    if w2 is not None:
        want[w2] = 0
    for v, t in want.items():
        if bgt.labels[v] != t:
            raise ValueError(f"label pattern mismatch at {v}")
    labels = dict(bgt.labels)
    if w2 is None:
        drop_arcs = {(u1, eta), (rho, u2), (v2, eta)}
        add_arcs = {(rho, eta), (eta, v2), (u1, u2)}
        labels.update({rho: 0, u1: 1, eta: 1})
    else:
        drop_arcs = {(u1, eta), (rho, u2), (u2, v2), (v2, w2), (w2, eta)}
        add_arcs = {(rho, eta), (eta, v2), (u1, u2), (u2, w2), (w2, v2)}
        labels.update({rho: 0, u1: 1, w2: 1, eta: 1})
    del labels[v2]
    arcs = (set(bgt.net.arcs) - drop_arcs) | add_arcs
    net = validate_network(set(bgt.net.vertices), arcs)
    return certify_basic_galled(net, labels, dict(bgt.leaf_map))


# -- necessary conditions for two-root explainability ------------------------

@dataclass(frozen=True)
class TwoRootConditionReport:
    distance_hereditary: bool
    witness: Optional[ForbiddenWitness]
    non_cograph_components: int
    necessary_conditions_met: bool
    gatex: str = "Unevaluated"


def check_two_root_conditions(g: Graph) -> TwoRootConditionReport:
    """Audit the checkable necessary conditions for a 2-root explanation:
    the graph must be distance-hereditary with exactly one component that
    is not a cograph. The galled-tree-specific obstruction family from
    prior work is not encoded here and stays unevaluated."""
    if is_cograph(g):
        raise ValueError("graph is a cograph; a single-rooted cotree applies")
    dh, witness = is_distance_hereditary(g)
    non_cograph = 0
    for comp in connected_components(g):
        h, _ = induced_subgraph(g, comp)
        if not is_cograph(h):
            non_cograph += 1
    return TwoRootConditionReport(
        distance_hereditary=dh,
        witness=witness,
        non_cograph_components=non_cograph,
        necessary_conditions_met=dh and non_cograph == 1,
    )
