"""Command-line front end.

Exit codes: 0 on pass/true, 1 on fail/false, 2 on input or precondition
errors. Report directories receive tab-delimited summaries plus rendered
figures next to them.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import compat, construct, io, networks, oracle
from .graphs import NotDistanceHereditary, classify, is_distance_hereditary
from .networks import NetworkViolation


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise io.ParseError(f"cannot read {path}: {exc.strerror}") from exc


def _write(path: str, text: str):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _load_graph(path: str, fmt: str):
    return io.parse_graph_auto(_read(path), fmt)


def _load_labelled_network(path: str):
    """Certify a parsed network document as arboreal when it is a tree,
    otherwise as a basic galled tree."""
    net, labels, leaf_map = io.parse_network_document(_read(path))
    if networks.is_arboreal(net):
        return "arboreal", networks.label_arboreal_network(net, labels, leaf_map)
    return "galled", construct.certify_basic_galled(net, labels, leaf_map)


def _ensure_report_dir(path):
    os.makedirs(path, exist_ok=True)
    return path


def cmd_recognize(args) -> int:
    g = _load_graph(args.graph, args.format)
    report = classify(g)
    lines = [
        f"vertices\t{g.n}",
        f"edges\t{len(g.edges)}",
        f"cograph\t{str(report.cograph).lower()}",
        f"chordal\t{str(report.chordal).lower()}",
        f"hole_free\t{str(report.hole_free).lower()}",
        f"ptolemaic\t{str(report.ptolemaic).lower()}",
        f"distance_hereditary\t{str(report.distance_hereditary).lower()}",
    ]
    if report.witness is not None:
        lines.append(f"witness\t{report.witness.kind}\t"
                     + ",".join(str(v) for v in report.witness.vertices))
    text = "\n".join(lines) + "\n"
    print(text, end="")
    if args.report_dir:
        from . import plotting
        d = _ensure_report_dir(args.report_dir)
        _write(os.path.join(d, "recognize.tsv"), text)
        plotting.draw_graph(g, os.path.join(d, "graph.png"), "input graph")
    return 0 if report.distance_hereditary else 1


def cmd_explain(args) -> int:
    g = _load_graph(args.graph, args.format)
    try:
        ln = construct.explain_dh(g)
    except NotDistanceHereditary as exc:
        _, witness = is_distance_hereditary(g)
        print(f"error: not distance-hereditary: {exc}", file=sys.stderr)
        if witness is not None:
            print(f"witness: {witness.kind} "
                  + ",".join(str(v) for v in witness.vertices), file=sys.stderr)
        return 2
    if not networks.verify_explains(ln, g):
        print("error: self-verification failed", file=sys.stderr)
        return 2
    doc = io.serialize_network_document(ln)
    if args.output:
        _write(args.output, doc)
    else:
        print(doc, end="")
    if args.dot:
        _write(args.dot, io.dot_export(ln))
    if args.report_dir:
        from . import plotting
        d = _ensure_report_dir(args.report_dir)
        _write(os.path.join(d, "network.json"), doc)
        _write(os.path.join(d, "explain.tsv"),
               "roots\t{}\nhybrids\t{}\nbinary\t{}\n".format(
                   len(ln.net.roots), len(ln.net.hybrids),
                   str(networks.is_binary(ln.net)).lower()))
        plotting.draw_network(ln, os.path.join(d, "network.png"), "explanation")
        plotting.draw_graph(g, os.path.join(d, "graph.png"), "input graph")
    return 0


def cmd_eval(args) -> int:
    kind, ln = _load_labelled_network(args.network)
    explained = networks.explained_graph(ln)
    shared = networks.shared_ancestry_graph(ln.net, dict(ln.leaf_map))
    out = ["# explained graph", io.serialize_edgelist(explained).rstrip("\n"),
           "# shared ancestry graph",
           io.serialize_edgelist(shared).rstrip("\n")]
    text = "\n".join(out) + "\n"
    print(text, end="")
    if args.report_dir:
        from . import plotting
        d = _ensure_report_dir(args.report_dir)
        rows = ["graph\tu\tv"]
        rows += [f"explained\t{u}\t{v}" for u, v in sorted(explained.edges)]
        rows += [f"shared_ancestry\t{u}\t{v}" for u, v in sorted(shared.edges)]
        _write(os.path.join(d, "eval.tsv"), "\n".join(rows) + "\n")
        plotting.draw_network(ln, os.path.join(d, "network.png"),
                              f"{kind} network")
        plotting.draw_graph(explained, os.path.join(d, "explained.png"),
                            "explained graph")
        plotting.draw_graph(shared, os.path.join(d, "shared_ancestry.png"),
                            "shared ancestry graph")
    return 0


def cmd_verify(args) -> int:
    _kind, ln = _load_labelled_network(args.network)
    g = _load_graph(args.graph, args.format)
    ok = networks.verify_explains(ln, g)
    print("verified" if ok else "mismatch")
    return 0 if ok else 1


def cmd_compat(args) -> int:
    g = _load_graph(args.graph, args.format)
    gstar = _load_graph(args.supergraph, args.format)
    from .graphs import is_connected
    if not is_connected(g):
        print("error: the subgraph must be connected", file=sys.stderr)
        return 2
    if not is_distance_hereditary(g)[0]:
        print("error: the subgraph must be distance-hereditary", file=sys.stderr)
        return 2
    report = compat.check_conditions_E(g, gstar)
    lines = [
        f"E1_supergraph_connected_ptolemaic\t{str(report.e1).lower()}",
        f"E2_no_path_over_clique\t{str(report.e2).lower()}",
        f"E3_no_asymmetric_diamond\t{str(report.e3).lower()}",
        f"compatible\t{str(report.compatible).lower()}",
    ]
    if report.e2_witness:
        lines.append("E2_witness\t" + ",".join(map(str, report.e2_witness)))
    if report.e3_witness:
        lines.append("E3_witness\t" + ",".join(map(str, report.e3_witness)))
    if args.axioms:
        verdicts = compat.check_axioms_A(compat.build_symbolic_map(g, gstar))
        for name in ("a1", "a2", "a3", "a4"):
            lines.append(f"{name.upper()}\t{str(getattr(verdicts, name)).lower()}")
    print("\n".join(lines))
    return 0 if report.compatible else 1


def cmd_two_root(args) -> int:
    if args.graph:
        g = _load_graph(args.graph, args.format)
        report = construct.check_two_root_conditions(g)
        lines = [
            f"distance_hereditary\t{str(report.distance_hereditary).lower()}",
            f"non_cograph_components\t{report.non_cograph_components}",
            f"necessary_conditions_met\t{str(report.necessary_conditions_met).lower()}",
            f"gatex_obstructions\t{report.gatex}",
        ]
        if report.witness is not None:
            lines.append(f"witness\t{report.witness.kind}\t"
                         + ",".join(map(str, report.witness.vertices)))
        print("\n".join(lines))
        return 0 if report.necessary_conditions_met else 1
    kind, ln = _load_labelled_network(args.network)
    if kind == "arboreal":
        result = construct.two_root_to_basic_galled(ln)
    else:
        if ln.labels[ln.root] == 1:
            ln = construct.normalize_basic_to_zero(ln)
        result = construct.basic_galled_to_two_root(ln)
    doc = io.serialize_network_document(result)
    if args.output:
        _write(args.output, doc)
    else:
        print(doc, end="")
    return 0


def cmd_oracle(args) -> int:
    params = {}
    if args.max_n is not None:
        params["max_n"] = args.max_n
    if args.trials is not None:
        params["trials"] = args.trials
    if args.pairs is not None:
        params["pairs"] = args.pairs
    if args.relabelings is not None:
        params["relabelings"] = args.relabelings
    if args.seed is not None:
        params["seed"] = args.seed
    report = oracle.run_suite(args.suite, **params)
    text = "\n".join(report.summary_lines()) + "\n"
    print(text, end="")
    if args.report_dir:
        from . import plotting
        d = _ensure_report_dir(args.report_dir)
        rows = ["suite\tpassed\tcases\tfailures\telapsed_s",
                f"{report.name}\t{str(report.passed).lower()}\t{report.cases}"
                f"\t{len(report.failures)}\t{report.elapsed:.2f}"]
        _write(os.path.join(d, "oracle.tsv"), "\n".join(rows) + "\n")
        plotting.draw_suite_report(report, os.path.join(d, "suite.png"))
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arbornet",
        description="Recognize distance-hereditary graphs and explain them "
                    "with labelled multi-rooted arboreal networks.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("auto", "edgelist", "graph6"),
                       default="auto", help="graph input format")

    p = sub.add_parser("recognize", help="report graph class flags")
    p.add_argument("graph")
    add_format(p)
    p.add_argument("--report-dir")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("explain", help="build an explaining network")
    p.add_argument("graph")
    add_format(p)
    p.add_argument("-o", "--output")
    p.add_argument("--dot")
    p.add_argument("--report-dir")
    p.set_defaults(func=cmd_explain)

    p = sub.add_parser("eval", help="evaluate a labelled network")
    p.add_argument("network")
    p.add_argument("--report-dir")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="check a network explains a graph")
    p.add_argument("network")
    p.add_argument("graph")
    add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("compat", help="supergraph compatibility conditions")
    p.add_argument("graph")
    p.add_argument("supergraph")
    add_format(p)
    p.add_argument("--axioms", action="store_true",
                   help="also print the symbolic-map axiom verdicts")
    p.set_defaults(func=cmd_compat)

    p = sub.add_parser("two-root", help="two-root transforms and conditions")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--graph")
    group.add_argument("--network")
    add_format(p)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_two_root)

    p = sub.add_parser("oracle", help="run a brute-force cross-check suite")
    p.add_argument("suite", choices=oracle.SUITE_NAMES)
    p.add_argument("--max-n", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--pairs", type=int)
    p.add_argument("--relabelings", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--report-dir")
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (io.ParseError, NetworkViolation, NotDistanceHereditary,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry():
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
