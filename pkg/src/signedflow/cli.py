"""Command-line entry point: ``signedflow <command> ...``.

Exit codes: 0 success, 1 domain error (bad graph, failed verification,
no flow), 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import generators
from .classify import Verdict, construct_flow, flow_number
from .errors import InvalidArgument, SignedFlowError
from .flows import verify_flow
from .graph import negative_parity, switch
from .groups import GroupSpec
from .io import parse_flow, parse_graph, serialize_flow, serialize_graph
from .oracle import (
    DEFAULT_MAX_K,
    EnumSpec,
    brute_force_flow_number,
    brute_force_group_flow,
    brute_force_triply_odd,
    edge_string,
    enumerate_graphs,
    sweep,
)

GEN_HELP = """\
Prototype generators.  The class prototypes are rebuilt from the
classification conditions, not transcribed from a figure; they are
class-correct stand-ins for the smallest examples.

  neg-loop                    one negative loop (no nowhere-zero flow: deleting it balances)
  pos-loop                    one positive loop (flow number 2)
  neg-digon                   two negative parallel edges (even, flow number 2)
  bouquet K                   K negative loops at one vertex (K=3: flow number 3)
  phi4-prototype              odd, admissible, not triply odd (flow number 4)
  barbell L1 L2 P             two unbalanced circuits joined by a positive path of length P
  six-regular-antibalanced N [SEED]
                              connected all-negative 6-regular multigraph, N odd
"""


class UsageError(Exception):
    pass


def _read_graph(path: str):
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _ids(edges) -> str:
    return "[" + " ".join(str(e) for e in sorted(edges)) + "]"


def cmd_classify(args) -> int:
    g = _read_graph(args.file)
    fc = flow_number(g, args.budget)
    print(f"flow-number: {fc.verdict.value}")
    print(f"parity: {negative_parity(g).value}")
    if fc.witness_edge is not None:
        print(f"witness-edge: {fc.witness_edge}")
    if fc.triple is not None:
        label = "triple" if fc.verdict is Verdict.THREE else "odd-triple"
        print(f"{label}: " + " ".join(_ids(p) for p in fc.triple.parts))
        if fc.triple.common_vertex is not None:
            print(f"common-vertex: {fc.triple.common_vertex}")
    if fc.cover is not None:
        print(f"even-cover: {_ids(fc.cover.h1)} {_ids(fc.cover.h2)}")
    if args.certificate and fc.flow is not None:
        print("certificate:")
        sys.stdout.write(serialize_flow(fc.flow))
    return 0


def cmd_construct(args) -> int:
    g = _read_graph(args.file)
    verdict = flow_number(g, args.budget).verdict
    if verdict is Verdict.NOT_ADMISSIBLE:
        print("error: graph admits no nowhere-zero flow", file=sys.stderr)
        return 1
    _write(serialize_flow(construct_flow(g, verdict, args.budget)), args.output)
    return 0


def cmd_verify(args) -> int:
    g = _read_graph(args.graph)
    f = parse_flow(Path(args.flow).read_text(encoding="utf-8"), g)
    r = verify_flow(g, f)
    print(f"kirchhoff: {'ok' if r.kirchhoff_ok else 'FAIL'}")
    if r.violating_vertices:
        print(f"violating-vertices: {_ids(r.violating_vertices)}")
    print(f"zero-edges: {_ids(r.zero_edges)}")
    if r.max_abs is not None:
        print(f"max-abs: {r.max_abs}")
    ok = r.kirchhoff_ok and r.nowhere_zero
    if args.max_abs is not None:
        if r.max_abs is None:
            raise UsageError("--max-abs only applies to integer flows")
        bound_ok = r.max_abs <= args.max_abs
        print(f"bound: {'ok' if bound_ok else 'FAIL'} (max-abs <= {args.max_abs})")
        ok = ok and bound_ok
    print("result: " + ("pass" if ok else "FAIL"))
    return 0 if ok else 1


def _vertex_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"--at expects comma-separated vertices, got {text!r}") from None


def cmd_switch(args) -> int:
    g = _read_graph(args.file)
    _write(serialize_graph(switch(g, _vertex_list(args.at))), args.output)
    return 0


def cmd_gen(args) -> int:
    try:
        params = [int(p) for p in args.params]
        g = generators.generate(args.name, params)
    except (ValueError, InvalidArgument) as exc:
        raise UsageError(str(exc)) from None
    _write(serialize_graph(g), args.output)
    return 0


def _parse_spec(text: str) -> GroupSpec:
    try:
        return GroupSpec.parse(text)
    except InvalidArgument as exc:
        raise UsageError(str(exc)) from None


def cmd_oracle(args) -> int:
    if args.what == "sweep":
        if args.max_vertices is None or args.max_edges is None:
            raise UsageError("oracle sweep needs --max-vertices and --max-edges")
        spec = EnumSpec(args.max_vertices, args.max_edges, True, True)
        print("graph-index,edges,parity,classifier-verdict,oracle-verdict,triply-odd-classifier,triply-odd-oracle,status")
        failures = 0
        for row in sweep(spec, args.max_k, args.budget, args.jobs):
            failures += not row.passed
            print(
                f"{row.index},{row.edges},{row.parity},{row.classifier},{row.oracle},"
                f"{int(row.triply_odd_classifier)},{int(row.triply_odd_oracle)},"
                f"{'pass' if row.passed else 'FAIL'}"
            )
        return 1 if failures else 0
    if args.file is None:
        raise UsageError(f"oracle {args.what} needs a graph file")
    g = _read_graph(args.file)
    if args.what == "flow-number":
        k = brute_force_flow_number(g, args.max_k)
        print(f"flow-number: {'none' if k is None else k} (searched k <= {args.max_k})")
    elif args.what == "group-flow":
        if args.group is None:
            raise UsageError("oracle group-flow needs --group")
        f = brute_force_group_flow(g, _parse_spec(args.group))
        print(f"group-flow: {'present' if f is not None else 'absent'}")
        if f is not None:
            sys.stdout.write(serialize_flow(f))
    else:
        print(f"triply-odd: {'present' if brute_force_triply_odd(g) else 'absent'}")
    return 0


def cmd_enumerate(args) -> int:
    spec = EnumSpec(args.max_vertices, args.max_edges, args.eulerian, args.connected)
    for i, g in enumerate(enumerate_graphs(spec)):
        print(f"{i}\t{g.vertex_count}\t{edge_string(g)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="signedflow", description="Flow numbers of signed eulerian multigraphs.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="classify a graph by flow number")
    c.add_argument("file")
    c.add_argument("--certificate", action="store_true", help="append the certificate flow")
    c.add_argument("--budget", type=int, default=None, help="node budget for the triply-odd search")
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("construct", help="write a certificate flow")
    c.add_argument("file")
    c.add_argument("-o", "--output", default=None)
    c.add_argument("--budget", type=int, default=None)
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("verify", help="check a flow file against a graph")
    c.add_argument("graph")
    c.add_argument("flow")
    c.add_argument("--max-abs", type=int, default=None)
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("switch", help="switch a graph at a vertex set")
    c.add_argument("file")
    c.add_argument("--at", required=True, help="comma-separated vertices")
    c.add_argument("-o", "--output", default=None)
    c.set_defaults(func=cmd_switch)

    c = sub.add_parser(
        "gen",
        help="write a prototype graph",
        description=GEN_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    c.add_argument("name", choices=generators.NAMES)
    c.add_argument("params", nargs="*")
    c.add_argument("-o", "--output", default=None)
    c.set_defaults(func=cmd_gen)

    c = sub.add_parser("oracle", help="brute-force checks")
    c.add_argument("what", choices=("flow-number", "group-flow", "triply-odd", "sweep"))
    c.add_argument("file", nargs="?")
    c.add_argument("--max-k", type=int, default=DEFAULT_MAX_K)
    c.add_argument("--group", default=None)
    c.add_argument("--max-vertices", type=int, default=None)
    c.add_argument("--max-edges", type=int, default=None)
    c.add_argument("--budget", type=int, default=None)
    c.add_argument("--jobs", type=int, default=1)
    c.set_defaults(func=cmd_oracle)

    c = sub.add_parser("enumerate", help="list labeled graphs")
    c.add_argument("--max-vertices", type=int, required=True)
    c.add_argument("--max-edges", type=int, required=True)
    c.add_argument("--eulerian", action="store_true")
    c.add_argument("--connected", action="store_true")
    c.set_defaults(func=cmd_enumerate)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (SignedFlowError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
