"""File formats: edge-list and graph6 for graphs, a JSON document for
labelled networks, and DOT export. All serializers are deterministic so
round trips are bit-exact."""

from __future__ import annotations

import json
from typing import Tuple

from .graphs import Graph
from .networks import validate_network


class ParseError(ValueError):
    """Malformed input file; carries a 1-based line number when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


# -- edge list ---------------------------------------------------------------

def parse_edgelist(text: str) -> Graph:
    """`n m` header then m lines `u v`; `#` starts a comment line."""
    lines = text.splitlines()
    header = None
    edges = []
    expected = None
    for i, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
            raise ParseError(f"expected two integers, got {line!r}", i)
        a, b = int(parts[0]), int(parts[1])
        if header is None:
            if a < 0 or b < 0:
                raise ParseError("vertex and edge counts must be nonnegative", i)
            header = (a, b)
            expected = b
            continue
        edges.append(((a, b), i))
    if header is None:
        raise ParseError("missing `n m` header", 1)
    n, m = header
    if len(edges) != m:
        raise ParseError(f"header promises {m} edges, found {len(edges)}")
    out = []
    for (u, v), i in edges:
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise ParseError(f"bad edge {u} {v} for {n} vertices", i)
        out.append((u, v))
    g = Graph.from_edges(n, out)
    if len(g.edges) != m:
        raise ParseError("duplicate edges in input")
    return g


def serialize_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {len(g.edges)}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


# -- graph6 ------------------------------------------------------------------

def parse_graph6(text: str) -> Graph:
    """Standard graph6 encoding for graphs on up to 62 vertices."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(b < 0 or b > 63 for b in data):
        raise ParseError("invalid graph6 character")
    n = data[0]
    if n > 62:
        raise ParseError("graph6 inputs above 62 vertices are not supported")
    bits_needed = n * (n - 1) // 2
    bitstream = []
    for b in data[1:]:
        for k in range(5, -1, -1):
            bitstream.append(b >> k & 1)
    if len(bitstream) < bits_needed:
        raise ParseError("graph6 string too short")
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bitstream[idx]:
                edges.append((u, v))
            idx += 1
    return Graph.from_edges(n, edges)


def serialize_graph6(g: Graph) -> str:
    if g.n > 62:
        raise ValueError("graph6 output above 62 vertices is not supported")
    bits = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(1 if g.has_edge(u, v) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = val << 1 | b
        chars.append(chr(val + 63))
    return "".join(chars)


def parse_graph_auto(text: str, fmt: str = "auto") -> Graph:
    """Dispatch on format; `auto` treats a two-integer first line as an
    edge list and anything else as graph6."""
    if fmt == "edgelist":
        return parse_edgelist(text)
    if fmt == "graph6":
        return parse_graph6(text)
    if fmt != "auto":
        raise ValueError(f"unknown graph format {fmt!r}")
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) == 2 and all(p.isdigit() for p in parts):
            return parse_edgelist(text)
        return parse_graph6(text)
    raise ParseError("empty graph file")


# -- network JSON ------------------------------------------------------------

_NETWORK_FIELDS = {"vertices", "arcs", "leaves", "labels"}


def parse_network_document(text: str) -> Tuple:
    """Parse the network document into ``(net, labels, leaf_map)`` with the
    network certified; unknown fields are rejected."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("network document must be a JSON object")
    unknown = set(doc) - _NETWORK_FIELDS
    if unknown:
        raise ParseError(f"unknown fields {sorted(unknown)}")
    missing = _NETWORK_FIELDS - set(doc)
    if missing:
        raise ParseError(f"missing fields {sorted(missing)}")
    vertices = doc["vertices"]
    if (not isinstance(vertices, list)
            or not all(isinstance(v, str) for v in vertices)):
        raise ParseError("`vertices` must be a list of string ids")
    arcs = doc["arcs"]
    if (not isinstance(arcs, list)
            or not all(isinstance(a, list) and len(a) == 2
                       and all(isinstance(x, str) for x in a) for a in arcs)):
        raise ParseError("`arcs` must be a list of [parent, child] pairs")
    leaves = doc["leaves"]
    if (not isinstance(leaves, dict)
            or not all(isinstance(i, int) and not isinstance(i, bool)
                       for i in leaves.values())):
        raise ParseError("`leaves` must map leaf ids to integer indices")
    labels = doc["labels"]
    if not isinstance(labels, dict) or not all(t in (0, 1) for t in labels.values()):
        raise ParseError("`labels` must map vertex ids to 0 or 1")
    net = validate_network(vertices, [tuple(a) for a in arcs])
    return net, dict(labels), dict(leaves)


def serialize_network_document(ln) -> str:
    """Serialize any labelled network value (arboreal or galled) carrying
    ``net``, ``labels`` and ``leaf_map`` fields."""
    doc = {
        "vertices": sorted(ln.net.vertices),
        "arcs": [list(a) for a in sorted(ln.net.arcs)],
        "leaves": {x: i for x, i in sorted(ln.leaf_map.items())},
        "labels": {v: t for v, t in sorted(ln.labels.items())},
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


# -- DOT export --------------------------------------------------------------

def dot_export(ln) -> str:
    """DOT digraph with arcs drawn downward; label-1 vertices filled,
    label-0 vertices hollow, leaves as boxes."""
    lines = ["digraph network {", "  rankdir=TB;"]
    for v in sorted(ln.net.vertices):
        if v in ln.net.leaves:
            lines.append(f'  "{v}" [shape=box];')
        elif ln.labels.get(v) == 1:
            lines.append(f'  "{v}" [shape=circle, style=filled, '
                         'fillcolor=black, fontcolor=white];')
        elif ln.labels.get(v) == 0:
            lines.append(f'  "{v}" [shape=circle, style=solid];')
        else:
            lines.append(f'  "{v}" [shape=point];')
    for u, v in sorted(ln.net.arcs):
        lines.append(f'  "{u}" -> "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
