"""Figure rendering for report output: layered drawings of labelled
networks and circular drawings of graphs, written straight to image
files."""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def _network_layout(net, leaf_map):
    """Leaves evenly spaced on the bottom row by index; internal vertices
    at depth rows, x at the mean of their children."""
    depth = {}
    order = _topo(net)
    for v in reversed(order):
        if net.outdeg(v) == 0:
            depth[v] = 0
        else:
            depth[v] = 1 + max(depth[c] for c in net.children(v))
    pos = {}
    for x in net.leaves:
        pos[x] = (float(leaf_map[x]), 0.0)
    for v in order[::-1]:
        if v in pos:
            continue
        xs = [pos[c][0] for c in net.children(v) if c in pos]
        pos[v] = (sum(xs) / len(xs) if xs else 0.0, float(depth[v]))
    return pos


def _topo(net):
    indeg = {v: net.indeg(v) for v in net.vertices}
    ready = sorted(v for v in net.vertices if indeg[v] == 0)
    order = []
    while ready:
        v = ready.pop(0)
        order.append(v)
        for c in sorted(net.children(v)):
            indeg[c] -= 1
            if indeg[c] == 0:
                ready.append(c)
        ready.sort()
    return order


def draw_network(ln, path: str, title: str = ""):
    """Render a labelled network: filled markers for label 1, hollow for
    label 0, squares for leaves, small dots for unlabelled vertices."""
    net = ln.net
    pos = _network_layout(net, ln.leaf_map)
    fig, ax = plt.subplots(figsize=(6, 4))
    for u, v in sorted(net.arcs):
        (x1, y1), (x2, y2) = pos[u], pos[v]
        ax.annotate("", xy=(x2, y2), xytext=(x1, y1),
                    arrowprops=dict(arrowstyle="-|>", color="gray", lw=1))
    for v in sorted(net.vertices):
        x, y = pos[v]
        if v in net.leaves:
            ax.plot(x, y, marker="s", color="tab:blue", markersize=9)
        elif ln.labels.get(v) == 1:
            ax.plot(x, y, marker="o", color="black", markersize=9)
        elif ln.labels.get(v) == 0:
            ax.plot(x, y, marker="o", markerfacecolor="white",
                    markeredgecolor="black", markersize=9)
        else:
            ax.plot(x, y, marker=".", color="black", markersize=6)
        ax.annotate(v, (x, y), textcoords="offset points", xytext=(6, 4),
                    fontsize=8)
    ax.set_title(title)
    ax.axis("off")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def draw_graph(g, path: str, title: str = ""):
    """Render an undirected graph on a circle."""
    fig, ax = plt.subplots(figsize=(4.5, 4.5))
    pos = {}
    for v in range(g.n):
        angle = 2 * math.pi * v / max(g.n, 1)
        pos[v] = (math.cos(angle), math.sin(angle))
    for u, v in sorted(g.edges):
        (x1, y1), (x2, y2) = pos[u], pos[v]
        ax.plot([x1, x2], [y1, y2], color="gray", lw=1.2)
    for v in range(g.n):
        x, y = pos[v]
        ax.plot(x, y, marker="o", color="tab:blue", markersize=10)
        ax.annotate(str(v), (x, y), textcoords="offset points", xytext=(6, 6),
                    fontsize=9)
    ax.set_title(title)
    ax.axis("off")
    ax.set_aspect("equal")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def draw_suite_report(report, path: str):
    """Bar chart of checked cases vs failures for one suite run."""
    fig, ax = plt.subplots(figsize=(4.5, 3))
    ax.bar(["cases", "failures"], [report.cases, len(report.failures)],
           color=["tab:green" if report.passed else "tab:orange", "tab:red"])
    ax.set_title(f"suite {report.name}: {'pass' if report.passed else 'fail'}")
    ax.set_ylabel("count")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
