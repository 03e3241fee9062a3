"""Command-line front end.

Exit status: 0 for a positive answer, 1 for a mathematically negative one
(no IDS, statement falsified), 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from . import families, harness, idomatic, oracle, orientations, verify
from .digraph import Digraph, UGraph, VertexSet, underlying_graph
from .edgelist import format_edge_list, parse_edge_list
from .errors import IdsError

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR = 0, 1, 2

SOLVERS = {
    "tournament": families.solve_tournament,
    "dag": families.solve_dag_greedy,
    "cycle": families.solve_oriented_cycle,
    "bipartite": families.solve_bipartite,
}


class UsageError(Exception):
    pass


def _parse_set(text: str) -> VertexSet:
    text = text.strip()
    if not text:
        return VertexSet()
    try:
        return VertexSet(int(tok) for tok in text.split(","))
    except ValueError:
        raise UsageError(f"bad vertex set {text!r}; expected comma-separated ids such as 0,2,4") from None


def _read(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_edge_list(text)


def _digraph(args) -> Digraph:
    G = _read(args.input)
    if not isinstance(G, Digraph):
        raise UsageError("expected a 'digraph' edge list")
    return G


def _digest(G) -> str:
    return "sha256:" + hashlib.sha256(format_edge_list(G).encode()).hexdigest()


def _ids(s: VertexSet) -> list:
    return list(s)


def _line(s: VertexSet) -> str:
    return " ".join(map(str, s))


def _graph_json(G) -> dict:
    if isinstance(G, Digraph):
        return {"kind": "digraph", "n": G.n, "arcs": [list(a) for a in G.arcs]}
    return {"kind": "graph", "n": G.n, "edges": [list(e) for e in G.edges]}


# Each handler returns (exit code, text lines, json result, json witness, input graph).

def cmd_check(args):
    D = _digraph(args)
    cert = verify.is_ids(D, _parse_set(args.set))
    yn = lambda b: "yes" if b else "no"
    lines = [f"independent {yn(cert.independent)}", f"dominating {yn(cert.dominating)}", f"ids {yn(cert.is_ids)}"]
    result = {"independent": cert.independent, "dominating": cert.dominating, "ids": cert.is_ids}
    return (EXIT_OK if cert.is_ids else EXIT_NEGATIVE), lines, result, [_ids(cert.set)], D


def _solve(D, family):
    if family == "auto":
        return families.solve_dispatch(D)
    if family == "path":
        if families._is_directed_path(D):
            return families.solve_directed_path(D)
        return families.solve_oriented_path(D)
    if family == "tree":
        if families._is_arborescence(D):
            return families.solve_arborescence(D)
        if families._is_anti_arborescence(D):
            return families.solve_anti_arborescence(D)
        return families.solve_oriented_tree(D)
    return SOLVERS[family](D)


def cmd_solve(args):
    D = _digraph(args)
    out = _solve(D, args.family)
    result = {"status": out.status.value, "reason": out.reason, "route": out.route}
    if out.found:
        witness = [_ids(s) for s in out.both_sets] if out.both_sets else [_ids(out.set)]
        return EXIT_OK, [f"found {_line(out.set)}".rstrip()], result, witness, D
    if out.status is families.Status.NONE_EXISTS:
        return EXIT_NEGATIVE, [f"none {out.reason}"], result, [], D
    return EXIT_ERROR, [f"not-in-family {out.reason}"], result, [], D


def cmd_enumerate(args):
    D = _digraph(args)
    enum = oracle.enumerate_ids(D, args.cap)
    lines = [_line(s) for s in enum.sets]
    if not enum.exhaustive:
        print(f"# truncated after {args.cap} sets", file=sys.stderr)
    result = {"count": len(enum.sets), "exhaustive": enum.exhaustive}
    code = EXIT_OK if enum.sets else EXIT_NEGATIVE
    return code, lines, result, [_ids(s) for s in enum.sets], D


def cmd_idomatic(args):
    D = _digraph(args)
    res = idomatic.idomatic_number(D, args.method, args.cap)
    lines = [f"idomatic {res.value} {res.method}"] + [f"witness {_line(s)}".rstrip() for s in res.witness]
    result = {"value": res.value, "method": res.method}
    return (EXIT_OK if res.value else EXIT_NEGATIVE), lines, result, [_ids(s) for s in res.witness], D


def cmd_classify(args):
    D = _digraph(args)
    tags = list(families.classify(D))
    return EXIT_OK, [" ".join(tags)], tags, [], D


def cmd_verify(args):
    if args.statement == "all":
        if args.bound is not None:
            raise UsageError("--bound applies to a single statement, not 'all'")
        reports = harness.verify_all(args.profile, args.seed)
    else:
        reports = [harness.verify_statement(args.statement, args.bound, args.profile, args.seed)]
    text = harness.format_reports(reports, timing=args.timing)
    result = [
        {
            "statement": r.statement,
            "instances": r.instances_checked,
            "failures": len(r.failures),
            "bound": r.bound,
            "elapsed_ms": int(round(r.elapsed * 1000)) if args.timing else 0,
        }
        for r in reports
    ]
    witness = [
        {"statement": r.statement, "digraph": text_, "set": list(members) if members is not None else None,
         "note": note}
        for r in reports
        for text_, members, note in r.failures
    ]
    code = EXIT_OK if all(r.ok for r in reports) else EXIT_NEGATIVE
    return code, text.rstrip("\n").splitlines(), result, witness, None


def cmd_orient(args):
    G = _read(args.input)
    base = underlying_graph(G) if isinstance(G, Digraph) else G
    S = _parse_set(args.set)
    if args.mode == "away":
        D = orientations.orient_away(base, S)
    else:
        D = orientations.orient_toward(base, S)
    return EXIT_OK, format_edge_list(D).splitlines(), _graph_json(D), [], G


def cmd_gen(args):
    kind = args.kind.replace("-", "_")
    sizes = tuple(args.sizes)
    if kind in ("directed_path", "directed_cycle"):
        if len(sizes) != 1:
            raise UsageError(f"{args.kind} takes exactly one size")
        G = orientations.gen_directed(kind.split("_")[1], sizes[0])
    else:
        if kind == "labeled_tree":
            sizes = sizes + (args.index,)
        G = orientations.gen_base(orientations.GeneratorSpec(kind, sizes))
        if not args.undirected:
            if not 0 <= args.orientation < (1 << len(G.edges)):
                raise UsageError(f"--orientation must lie in 0..{(1 << len(G.edges)) - 1}")
            G = orientations.orientation(G, args.orientation)
    return EXIT_OK, format_edge_list(G).splitlines(), _graph_json(G), [], None


def _cap(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("cap must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="idsdigraph",
        description="Independent dominating sets of digraphs. Vertices are 0-based ids.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="emit one JSON object")
        p.add_argument("--no-timing", dest="timing", action="store_false",
                       help="report elapsed_ms as 0 so output is reproducible byte for byte")
        return p

    def with_input(p):
        p.add_argument("input", nargs="?", default="-", help="edge-list file, or - for stdin")
        return p

    p = with_input(verb("check", "test whether a vertex set is an IDS"))
    p.add_argument("--set", required=True, help="comma-separated vertex ids, e.g. 0,2,4")
    p.set_defaults(func=cmd_check)

    p = with_input(verb("solve", "construct an IDS with a family solver"))
    p.add_argument("--family", default="auto",
                   choices=["auto", "tournament", "path", "tree", "dag", "cycle", "bipartite"])
    p.set_defaults(func=cmd_solve)

    p = with_input(verb("enumerate", "list every IDS, one per line"))
    p.add_argument("--cap", type=_cap, default=oracle.DEFAULT_CAP)
    p.set_defaults(func=cmd_enumerate)

    p = with_input(verb("idomatic", "idomatic number with witness sets"))
    p.add_argument("--method", default="auto", choices=["auto", "closed", "exact"])
    p.add_argument("--cap", type=_cap, default=oracle.DEFAULT_CAP)
    p.set_defaults(func=cmd_idomatic)

    p = with_input(verb("classify", "list structural family tags"))
    p.set_defaults(func=cmd_classify)

    p = verb("verify", "check a statement exhaustively on small instances")
    p.add_argument("statement", help="statement id or 'all'; ids: " + ", ".join(harness.STATEMENTS))
    p.add_argument("--bound", type=int)
    p.add_argument("--profile", default="quick", choices=sorted(harness.PROFILES))
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = with_input(verb("orient", "orient a graph away from or toward an IDS"))
    p.add_argument("--set", required=True)
    p.add_argument("--mode", default="away", choices=["away", "toward"])
    p.set_defaults(func=cmd_orient)

    p = verb("gen", "generate a graph or one of its orientations")
    p.add_argument("kind", choices=["path", "cycle", "complete", "complete_bipartite", "labeled_tree",
                                    "directed_path", "directed_cycle", "complete-bipartite",
                                    "labeled-tree", "directed-path", "directed-cycle"])
    p.add_argument("sizes", type=int, nargs="+", help="n, or m n for complete_bipartite")
    p.add_argument("--index", type=int, default=0, help="Prüfer index for labeled_tree")
    p.add_argument("--orientation", type=int, default=0,
                   help="orientation index; bit i reverses the i-th sorted edge")
    p.add_argument("--undirected", action="store_true", help="emit the undirected graph")
    p.set_defaults(func=cmd_gen)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    start = time.perf_counter()
    try:
        code, lines, result, witness, source = args.func(args)
    except (IdsError, UsageError) as exc:
        name = type(exc).__name__
        if args.json:
            print(json.dumps({"verb": args.verb, "error": {"type": name, "message": str(exc)}}, sort_keys=True))
        else:
            print(f"error {name}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    elapsed_ms = int(round((time.perf_counter() - start) * 1000)) if args.timing else 0
    if args.json:
        obj = {
            "verb": args.verb,
            "input_digest": _digest(source) if source is not None else None,
            "result": result,
            "witness": witness,
            "elapsed_ms": elapsed_ms,
        }
        print(json.dumps(obj, sort_keys=True))
    else:
        for line in lines:
            print(line)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
