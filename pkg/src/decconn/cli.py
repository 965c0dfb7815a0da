"""Batch driver: run a deletion/query script against a graph file.

Exit codes: 0 ok, 1 usage, 2 bad input (parse error or invalid command), 3 verification failure.
"""
from __future__ import annotations

import argparse
import random
import sys
import time
from typing import Callable, TextIO

from .generators import omv_instance, random_digraph, reducible_flowgraph, strongly_connected
from .graph import GraphError, parse_graph, serialize_graph
from .reducible import NotReducible
from .session import MODES, ScriptError, Session

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2, 3

# command -> number of integer arguments
ARITY = {
    "del": 2, "q-conn": 3, "q-nscc": 1, "q-sizes": 1, "q-report": 1, "q-seps": 2,
    "dom": 2, "parent": 1, "bridges": 0,
    "q-conn-e": 4, "q-nscc-e": 2, "q-sizes-e": 2, "q-report-e": 2, "q-seps-e": 2,
    "vrc": 0, "2vcs": 0, "2ecc": 0, "2ecs": 0,
}
REDUCIBLE_OK = {"del", "parent", "dom"}

Command = tuple[int, str, list[int]]


def parse_script(text: str) -> tuple[int | None, list[Command]]:
    """Returns (source vertex from a 'source s' header or None, commands)."""
    source = None
    cmds: list[Command] = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        name, *rest = line.split()
        try:
            args = [int(a) for a in rest]
        except ValueError:
            raise GraphError("arguments must be integers", no) from None
        if name == "source":
            if cmds or source is not None or len(args) != 1:
                raise GraphError("'source s' must be a single header line", no)
            source = args[0]
            continue
        if name not in ARITY:
            raise GraphError(f"unknown command {name!r}", no)
        if len(args) != ARITY[name]:
            raise GraphError(f"{name} takes {ARITY[name]} arguments", no)
        cmds.append((no, name, args))
    return source, cmds


def fmt_set(xs) -> str:
    return ",".join(map(str, xs))


def fmt_edges(es) -> str:
    return ",".join(f"({u},{v})" for u, v in es)


def fmt_parts(parts: list[list[int]]) -> str:
    return "\n".join(fmt_set(p) for p in parts)


def fmt_bool(b: bool) -> str:
    return "true" if b else "false"


def answer(s: Session, name: str, a: list[int]) -> str | None:
    if name == "del":
        s.delete(*a)
        return None
    if name == "dom":
        r = s.dominates(*a)
        return "unreachable" if r is None else fmt_bool(r)
    if name == "parent":
        p = s.parent(*a)
        return "unreachable" if p is None else ("none" if p == 0 else str(p))
    table: dict[str, Callable[[], str]] = {
        "q-conn": lambda: fmt_bool(s.same_without_vertex(*a)),
        "q-nscc": lambda: str(s.count_without_vertex(*a)),
        "q-sizes": lambda: "%d %d" % s.sizes_without_vertex(*a),
        "q-report": lambda: fmt_parts(s.report_without_vertex(*a)),
        "q-seps": lambda: fmt_set(s.separating_vertices(*a)),
        "bridges": lambda: fmt_edges(s.bridges()),
        "q-conn-e": lambda: fmt_bool(s.same_without_edge(*a)),
        "q-nscc-e": lambda: str(s.count_without_edge(*a)),
        "q-sizes-e": lambda: "%d %d" % s.sizes_without_edge(*a),
        "q-report-e": lambda: fmt_parts(s.report_without_edge(*a)),
        "q-seps-e": lambda: fmt_edges(s.separating_edges(*a)),
        "vrc": lambda: fmt_parts(s.resilient_components()),
        "2vcs": lambda: fmt_parts(s.two_vertex_subgraphs()),
        "2ecc": lambda: fmt_parts(s.two_edge_components()),
        "2ecs": lambda: fmt_parts(s.two_edge_subgraphs()),
    }
    return table[name]()


def run(graph_text: str, script_text: str, mode: str = "joint", seed: int = 0,
        verify: bool = False, stats: bool = False, degenerate: bool = False,
        out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        g = parse_graph(graph_text)
    except GraphError as exc:
        print(f"graph: {exc}", file=err)
        return EXIT_INPUT
    try:
        source, cmds = parse_script(script_text)
    except GraphError as exc:
        print(f"script: {exc}", file=err)
        return EXIT_INPUT
    try:
        s = Session(g, mode, seed, source, degenerate)
    except (ScriptError, NotReducible) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    rng = random.Random(seed)
    for no, name, args in cmds:
        if mode == "reducible" and name not in REDUCIBLE_OK:
            print(f"script: line {no}: {name} is not available in reducible mode", file=err)
            return EXIT_INPUT
        try:
            text = answer(s, name, args)
        except ScriptError as exc:
            print(f"script: line {no}: {exc}", file=err)
            return EXIT_INPUT
        if text is not None:
            print(text, file=out)
        if verify:
            bad = [r for r in s.verify(rng, samples=5) if not r.ok]
            if bad:
                for r in bad:
                    print(f"verify: line {no}: {r}", file=err)
                return EXIT_VERIFY
    if stats:
        for k, v in sorted(s.stats().items()):
            print(f"{k}={v}", file=out)
    return EXIT_OK


def full_deletion_script(text: str, seed: int) -> str:
    g = parse_graph(text)
    edges = list(g.edges())
    random.Random(seed).shuffle(edges)
    return "\n".join(f"del {u} {v}" for u, v in edges) + "\n"


def bench(graph_text: str, script_text: str, modes: list[str], seed: int, out: TextIO) -> int:
    """Time each mode on the same script and print one row per mode."""
    print(f"{'mode':<10} {'seconds':>9} {'scans':>12} {'a_rewrites':>12}", file=out)
    for mode in modes:
        g = parse_graph(graph_text)
        source, cmds = parse_script(script_text)
        t0 = time.perf_counter()
        s = Session(g, mode, seed, source if source is not None or mode != "reducible" else 1)
        if mode != "reducible":
            s.cols
        for _, name, args in cmds:
            answer(s, name, args)
        dt = time.perf_counter() - t0
        st = s.stats()
        print(f"{mode:<10} {dt:>9.3f} {st.get('scans', 0):>12} {st.get('a_rewrites', 0):>12}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="decconn", description=__doc__.splitlines()[0])
    p.add_argument("--graph", help="graph file: 'n m' then m lines 'u v'")
    p.add_argument("--script", help="command script; omit for an empty script")
    p.add_argument("--mode", choices=MODES, default="joint")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--verify", action="store_true", help="cross-check against brute force after every command")
    p.add_argument("--stats", action="store_true", help="append key=value counters")
    p.add_argument("--degenerate", action="store_true", help="include mutually adjacent pairs in 2vcs")
    p.add_argument("--bench", action="store_true", help="time joint and naive modes on the script")
    gen = p.add_argument_group("instance generation")
    gen.add_argument("--gen", choices=("random", "omv"))
    gen.add_argument("--class", dest="klass", choices=("digraph", "strong", "reducible"), default="digraph")
    gen.add_argument("-n", type=int, default=10)
    gen.add_argument("-m", type=int, default=20)
    gen.add_argument("--n1", type=int, default=1)
    gen.add_argument("--n2", type=int, default=1)
    gen.add_argument("--n3", type=int, default=1)
    gen.add_argument("--density", type=float, default=0.5)
    gen.add_argument("--script-out", help="where --gen omv writes its script")
    return p


def _generate(args, out: TextIO) -> int:
    rng = random.Random(args.seed)
    if args.gen == "random":
        if args.n < 0 or args.m < 0:
            print("error: -n and -m must be non-negative", file=sys.stderr)
            return EXIT_USAGE
        make = {"digraph": random_digraph, "strong": strongly_connected,
                "reducible": reducible_flowgraph}[args.klass]
        out.write(serialize_graph(make(args.n, args.m, rng)))
        return EXIT_OK
    try:
        g, script, _ = omv_instance(args.n1, args.n2, args.n3, args.density, rng)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out.write(serialize_graph(g))
    if args.script_out:
        with open(args.script_out, "w") as fh:
            fh.write("\n".join(script) + "\n")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    p = build_parser()
    try:
        args = p.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if args.gen:
        return _generate(args, sys.stdout)
    if not args.graph:
        p.print_usage(sys.stderr)
        print("error: --graph is required", file=sys.stderr)
        return EXIT_USAGE
    try:
        with open(args.graph) as fh:
            graph_text = fh.read()
        script_text = ""
        if args.script:
            with open(args.script) as fh:
                script_text = fh.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.bench:
        if not args.script:
            script_text = full_deletion_script(graph_text, args.seed)
        modes = ["joint", "naive"] + (["reducible"] if args.mode == "reducible" else [])
        try:
            return bench(graph_text, script_text, modes, args.seed, sys.stdout)
        except (GraphError, ScriptError, NotReducible) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INPUT
    return run(graph_text, script_text, args.mode, args.seed, args.verify, args.stats,
               args.degenerate)


if __name__ == "__main__":
    sys.exit(main())
