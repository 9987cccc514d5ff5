"""Command-line front end.

Exit codes: 0 success, 1 verification failed, 2 bad input or usage,
3 graph outside the rc case analysis.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path
from typing import Any, Optional, Sequence

from .chordal import build_clique_tree, labeled_degrees
from .corpus import FAMILIES, FamilySpec, generate, random_block_graph
from .formats import format_coloring, format_graph, parse_coloring, parse_graph, parse_graph_with_pairs
from .graph import Graph, GraphError, recognize
from .oracle import exact_rc, exact_src, is_rainbow_connected, is_strong_rainbow_connected
from .rc import OUTSIDE, classify_rc_small, rc_upper_bound
from .reduction import build_split_instance, format_instance
from .src import src_number, strong_rainbow_color

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_OUTSIDE = 3


class _Run:
    """Per-invocation state: the parsed args, the input digest and output sink."""

    def __init__(self, args: argparse.Namespace, out):
        self.args = args
        self.out = out
        self.digest: Optional[str] = None

    def read(self, path: str) -> str:
        data = Path(path).read_bytes()
        if self.digest is None:
            self.digest = hashlib.sha256(data).hexdigest()
        return data.decode("utf-8")

    def graph(self, path: str) -> Graph:
        return parse_graph(self.read(path))

    def emit(self, text: str, payload: dict[str, Any]) -> None:
        if self.args.json:
            doc = {"command": self.args.command, "input_sha256": self.digest, "result": payload}
            self.out.write(json.dumps(doc, sort_keys=True) + "\n")
        else:
            self.out.write(text if text.endswith("\n") else text + "\n")


def _cmd_recognize(run: _Run) -> int:
    rep = recognize(run.graph(run.args.graph))
    yn = {True: "yes", False: "no"}
    lines = [
        f"chordal: {yn[rep.is_chordal]}",
        f"block graph: {yn[rep.is_block_graph]}",
        f"split: {yn[rep.is_split]}",
        f"bridgeless: {yn[rep.is_bridgeless]}",
    ]
    if rep.bridge_edges:
        lines.append("bridges: " + " ".join(f"{u}-{v}" for u, v in rep.bridge_edges))
    if rep.split_partition:
        clique, indep = rep.split_partition
        lines.append("split clique: " + " ".join(map(str, sorted(clique))))
        lines.append("split independent: " + " ".join(map(str, sorted(indep))))
    if rep.peo is not None:
        lines.append("peo: " + " ".join(map(str, rep.peo)))
    payload = {
        "is_chordal": rep.is_chordal,
        "peo": list(rep.peo) if rep.peo is not None else None,
        "is_block_graph": rep.is_block_graph,
        "is_split": rep.is_split,
        "split_clique": sorted(rep.split_partition[0]) if rep.split_partition else None,
        "split_independent": sorted(rep.split_partition[1]) if rep.split_partition else None,
        "is_bridgeless": rep.is_bridgeless,
        "bridges": [list(e) for e in rep.bridge_edges],
    }
    run.emit("\n".join(lines), payload)
    return EXIT_OK


def _cmd_clique_tree(run: _Run) -> int:
    t = build_clique_tree(run.graph(run.args.graph))
    ldeg = labeled_degrees(t)
    if run.args.dot:
        lines = ["graph clique_tree {"]
        for i, c in enumerate(t.nodes):
            lines.append(f'  n{i} [label="{" ".join(map(str, c))}"];')
        for i, j, lab in t.tree_edges:
            lines.append(f'  n{i} -- n{j} [label="{" ".join(map(str, lab))}"];')
        lines.append("}")
    else:
        lines = [
            f"clique {i}: {' '.join(map(str, c))} (labeled degree {ldeg[i]})" for i, c in enumerate(t.nodes)
        ]
        lines += [f"edge {i} {j}: {' '.join(map(str, lab))}" for i, j, lab in t.tree_edges]
    payload = {
        "nodes": [list(c) for c in t.nodes],
        "edges": [[i, j, list(lab)] for i, j, lab in t.tree_edges],
        "labeled_degrees": ldeg,
    }
    run.emit("\n".join(lines), payload)
    return EXIT_OK


def _cmd_src(run: _Run) -> int:
    k = src_number(run.graph(run.args.graph))
    run.emit(str(k), {"src": k})
    return EXIT_OK


def _cmd_color(run: _Run) -> int:
    coloring = strong_rainbow_color(run.graph(run.args.graph))
    Path(run.args.output).write_text(format_coloring(coloring), encoding="utf-8")
    run.emit(str(coloring.color_count), {"color_count": coloring.color_count})
    return EXIT_OK


def _cmd_rc_bound(run: _Run) -> int:
    b = rc_upper_bound(run.graph(run.args.graph))
    run.emit(str(b), {"rc_upper_bound": b})
    return EXIT_OK


def _cmd_rc_classify(run: _Run) -> int:
    res = classify_rc_small(run.graph(run.args.graph))
    lines = [res.describe(), f"diameter = {res.diameter}"]
    if res.core_block_count is not None:
        lines.append(f"core blocks = {res.core_block_count}")
        lines.append(f"outer blocks = {res.outer_block_count}")
    if run.args.witness and res.witness is not None:
        Path(run.args.witness).write_text(format_coloring(res.witness), encoding="utf-8")
    payload = {
        "outcome": res.outcome,
        "value": res.value,
        "diameter": res.diameter,
        "reason": res.reason,
        "core_block_count": res.core_block_count,
        "outer_block_count": res.outer_block_count,
    }
    run.emit("\n".join(lines), payload)
    return EXIT_OUTSIDE if res.outcome == OUTSIDE else EXIT_OK


def _cmd_verify(run: _Run) -> int:
    g = run.graph(run.args.graph)
    coloring = parse_coloring(Path(run.args.coloring).read_text(encoding="utf-8"), g)
    check = is_rainbow_connected if run.args.mode == "rc" else is_strong_rainbow_connected
    ok = check(g, coloring)
    word = "rainbow connected" if run.args.mode == "rc" else "strong rainbow connected"
    run.emit(f"{word}: {'yes' if ok else 'no'}", {"mode": run.args.mode, "connected": ok})
    return EXIT_OK if ok else EXIT_FAILED


def _cmd_oracle(run: _Run) -> int:
    g = run.graph(run.args.graph)
    cap = g.m if run.args.cap is None else run.args.cap
    value = (exact_rc if run.args.mode == "rc" else exact_src)(g, cap)
    run.emit(str(value), {"mode": run.args.mode, "cap": cap, "value": value})
    return EXIT_OK


def _write_or_print(run: _Run, text: str) -> None:
    if run.args.output:
        Path(run.args.output).write_text(text, encoding="utf-8")
    elif not run.args.json:
        run.out.write(text)


def _cmd_reduce(run: _Run) -> int:
    star, pairs = parse_graph_with_pairs(run.read(run.args.input))
    inst = build_split_instance(star, pairs)
    _write_or_print(run, format_instance(inst))
    g = inst.graph
    if run.args.output or run.args.json:
        run.emit(f"{g.n} {g.m}", {"vertices": g.n, "edges": g.m})
    return EXIT_OK


def _parse_params(text: str) -> tuple[int, ...]:
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise GraphError(f"bad --params {text!r}: expected comma-separated integers") from None


def _cmd_gen(run: _Run) -> int:
    params = _parse_params(run.args.params)
    run.digest = hashlib.sha256(f"{run.args.family}:{run.args.params}:{run.args.seed}".encode()).hexdigest()
    if run.args.family == "random":
        if len(params) not in (2, 3):
            raise GraphError("family random takes block_count,max_block_size[,bridgeless]")
        g = random_block_graph(run.args.seed, params[0], params[1], bool(params[2]) if len(params) == 3 else False)
    else:
        g = generate(FamilySpec(run.args.family, params))
    _write_or_print(run, format_graph(g))
    if run.args.output or run.args.json:
        run.emit(f"{g.n} {g.m}", {"vertices": g.n, "edges": g.m})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")

    parser = argparse.ArgumentParser(
        prog="blockrainbow",
        description="Rainbow and strong rainbow connectivity of block and split graphs.",
    )
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("recognize", _cmd_recognize, "chordal / block / split / bridgeless tests")
    p.add_argument("graph")
    p = add("clique-tree", _cmd_clique_tree, "clique tree with separator labels")
    p.add_argument("graph")
    p.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    p = add("src", _cmd_src, "strong rainbow connection number of a block graph")
    p.add_argument("graph")
    p = add("color", _cmd_color, "optimal strong rainbow coloring of a block graph")
    p.add_argument("graph")
    p.add_argument("-o", "--output", required=True, help="coloring file to write")
    p = add("rc-bound", _cmd_rc_bound, "upper bound |S| + 2 on rc")
    p.add_argument("graph")
    p = add("rc-classify", _cmd_rc_classify, "decide rc <= 4 for a bridgeless block graph")
    p.add_argument("graph")
    p.add_argument("--witness", help="write the witness coloring here")
    p = add("verify", _cmd_verify, "check a coloring")
    p.add_argument("--mode", choices=("rc", "src"), required=True)
    p.add_argument("graph")
    p.add_argument("coloring")
    p = add("oracle", _cmd_oracle, "exact rc or src by exhaustive search")
    p.add_argument("--mode", choices=("rc", "src"), required=True)
    p.add_argument("--cap", type=int, default=None, help="largest k tried (default: edge count)")
    p.add_argument("graph")
    p = add("reduce", _cmd_reduce, "star + pairs to split graph instance")
    p.add_argument("input")
    p.add_argument("-o", "--output")
    p = add("gen", _cmd_gen, "generate a graph family member")
    p.add_argument("--family", required=True, choices=sorted([*FAMILIES, "random"]))
    p.add_argument("--params", default="", help="comma-separated integer parameters")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    return parser


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(_Run(args, out))
    except (GraphError, ValueError, OSError, UnicodeDecodeError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
