"""Command-line front end.

Every subcommand is a thin adapter over the library: inputs are parsed,
one library call runs, and the result is printed either as text or as
JSON (``--json``).  Exit codes: 0 success, 1 check/verification failure,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .construct import g5_family, h_catalog, theta, bound_even_girth, bound_girth5
from .graphs import (
    Graph,
    cutvertices,
    decode_graph6,
    edge_count,
    encode_graph6,
    is_connected,
    to_dot,
)
from .invariants import canonical_form, find_k4_minor, girth, is_k4_minor_free
from .search import SearchConfig, count_at_edges, extremal_search
from .structure import bridges, check_bridges, chords, crossing, cut_reduction, make_two_connected
from .verify import ITEM_KEYS, run_suite

USAGE_ERROR = 2
CHECK_FAILED = 1


def _parse_construct_spec(spec: str) -> Graph:
    kind, _, args = spec.partition(":")
    try:
        if kind == "theta":
            k, s = (int(x) for x in args.split(","))
            return theta(k, s)
        if kind == "g5":
            return g5_family(int(args))
        if kind == "h":
            i = int(args)
            if not 1 <= i <= 8:
                raise ValueError("catalog index must be 1..8")
            return h_catalog()[i - 1]
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"bad construction {spec!r}: {exc}") from None
    raise argparse.ArgumentTypeError(
        f"unknown construction {spec!r}; use theta:k,s | g5:s | h:i"
    )


def _add_input_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--g6", action="append", default=[], metavar="STR",
                   help="graph6 string (repeatable)")
    p.add_argument("--file", action="append", default=[], metavar="PATH",
                   help="file with one graph6 string per line (repeatable)")
    p.add_argument("--construct", action="append", default=[], metavar="SPEC",
                   help="theta:k,s | g5:s | h:i (repeatable)")


def _collect_inputs(args, parser) -> list[Graph]:
    graphs: list[Graph] = []
    try:
        for s in args.g6:
            graphs.append(decode_graph6(s))
        for path in args.file:
            for line in Path(path).read_text().splitlines():
                if line.strip():
                    graphs.append(decode_graph6(line))
        for spec in args.construct:
            graphs.append(_parse_construct_spec(spec))
    except (OSError, ValueError, argparse.ArgumentTypeError) as exc:
        parser.error(str(exc))
    if not graphs:
        parser.error("no input graphs (use --g6 / --file / --construct)")
    return graphs


def _emit(payload, as_json: bool, text_lines) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


# -- subcommands ---------------------------------------------------------------


def cmd_bound(args, parser) -> int:
    g = args.girth
    try:
        if g % 2 == 0:
            value = bound_even_girth(args.n, g // 2)
        elif g == 5:
            value = bound_girth5(args.n)
        else:
            parser.error(f"no closed-form bound for odd girth {g} (only girth 5 and even girths)")
    except ValueError as exc:
        parser.error(str(exc))
    _emit({"n": args.n, "g": g, "bound": value}, args.json, [str(value)])
    return 0


def cmd_construct(args, parser) -> int:
    for spec in args.spec:
        try:
            G = _parse_construct_spec(spec)
        except argparse.ArgumentTypeError as exc:
            parser.error(str(exc))
        if args.json:
            print(json.dumps({
                "construction": spec,
                "graph6": encode_graph6(G),
                "n": G.n,
                "edges": edge_count(G),
                "girth": None if G.n == 0 or girth(G) > G.n else girth(G),
            }, sort_keys=True))
        elif args.dot:
            sys.stdout.write(to_dot(G))
        else:
            print(encode_graph6(G))
    return 0


def cmd_check(args, parser) -> int:
    graphs = _collect_inputs(args, parser)
    failed = False
    for G in graphs:
        g = girth(G)
        free = is_k4_minor_free(G)
        info = {
            "graph6": encode_graph6(G),
            "n": G.n,
            "edges": edge_count(G),
            "girth": g if isinstance(g, int) else None,
            "k4_minor_free": free,
            "connected": is_connected(G),
            "cutvertices": cutvertices(G),
        }
        if args.canonical and G.n <= 14:
            info["canonical"] = canonical_form(G)
        if args.certificate and not free and G.n <= 14:
            cert = find_k4_minor(G)
            info["k4_branch_sets"] = [sorted(s) for s in cert] if cert else None
        if args.require_minor_free and not free:
            failed = True
        if args.require_girth is not None and not (g >= args.require_girth):
            failed = True
        text = (f"{info['graph6']}: n={G.n} edges={info['edges']} girth={g} "
                f"k4-minor-free={str(free).lower()}")
        if "canonical" in info:
            text += f" canonical={info['canonical']}"
        _emit(info, args.json, [text])
    return CHECK_FAILED if failed else 0


def cmd_bridges(args, parser) -> int:
    graphs = _collect_inputs(args, parser)
    if len(graphs) != 1:
        parser.error("bridges takes exactly one input graph")
    G = graphs[0]
    if args.cycle:
        try:
            cyc = tuple(int(x) for x in args.cycle.split(","))
            bs = bridges(G, cyc)
            cds = chords(G, cyc)
        except ValueError as exc:
            parser.error(str(exc))
        payload = {
            "graph6": encode_graph6(G),
            "cycle": list(cyc),
            "chords": [list(c) for c in cds],
            "bridges": [
                {
                    "interior": sorted(b.interior),
                    "legs": [list(l) for l in b.legs],
                    "attachments": list(b.attachments),
                }
                for b in bs
            ],
            "crossing_pairs": [
                [i, j]
                for i in range(len(bs))
                for j in range(i + 1, len(bs))
                if crossing(bs[i], bs[j], cyc)
            ],
        }
        lines = [f"cycle {','.join(map(str, cyc))}: {len(bs)} bridge(s), {len(cds)} chord(s)"]
        for b in bs:
            lines.append(f"  interior={sorted(b.interior)} legs={list(b.legs)} "
                         f"attachments={list(b.attachments)}")
        for i, j in payload["crossing_pairs"]:
            lines.append(f"  CROSSING: bridges {i} and {j}")
        _emit(payload, args.json, lines)
        return 0
    try:
        rep = check_bridges(G, diagnostic=args.diagnostic)
    except ValueError as exc:
        parser.error(str(exc))
    lines = [
        f"{rep.graph6}: {rep.cycles_checked} cycles, {rep.bridges_checked} bridges, "
        f"{rep.chords_seen} chords, max legs {rep.max_leg_count}: "
        + ("OK" if rep.ok else f"{len(rep.violations)} violation(s)")
    ]
    lines += [f"  {v.kind} on cycle {','.join(map(str, v.cycle))}: {v.detail}"
              for v in rep.violations]
    _emit(rep.to_json_dict(), args.json, lines)
    return 0 if rep.ok else CHECK_FAILED


def cmd_reduce2conn(args, parser) -> int:
    graphs = _collect_inputs(args, parser)
    if len(graphs) != 1:
        parser.error("reduce2conn takes exactly one input graph")
    G = graphs[0]
    try:
        if args.step:
            parts = [int(x) for x in args.step.split(",")]
            if len(parts) == 1:
                H = cut_reduction(G, parts[0])
            elif len(parts) == 3:
                H = cut_reduction(G, *parts)
            else:
                parser.error("--step takes X or X,V1,V2")
        else:
            H = make_two_connected(G)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return CHECK_FAILED
    payload = {
        "input": encode_graph6(G),
        "output": encode_graph6(H),
        "n": H.n,
        "edges": edge_count(H),
        "cutvertices": cutvertices(H),
    }
    _emit(payload, args.json, [encode_graph6(H)])
    return 0


def cmd_enumerate(args, parser) -> int:
    try:
        if args.count_at is not None:
            cfg = SearchConfig(
                n=args.n, g=args.girth, mode="count", target_edges=args.count_at,
                upper_bound_pruning=not args.no_bound_pruning,
                parallel_width=args.jobs, two_connected=not args.all_graphs,
            )
            res = extremal_search(cfg)
            count = len(res.extremal)
            lines = [str(count)] + (list(res.extremal) if args.list else [])
        else:
            cfg = SearchConfig(
                n=args.n, g=args.girth,
                mode="enumerate" if args.list else "max",
                upper_bound_pruning=not args.no_bound_pruning,
                parallel_width=args.jobs, two_connected=not args.all_graphs,
            )
            res = extremal_search(cfg)
            lines = [str(res.max_edges)] + list(res.extremal)
    except ValueError as exc:
        parser.error(str(exc))
    if args.save:
        Path(args.save).write_text("".join(f"{g6}\n" for g6 in res.extremal))
    _emit(res.to_json_dict(), args.json, lines)
    return 0


def cmd_verify_paper(args, parser) -> int:
    only = args.only.split(",") if args.only else None
    try:
        results = run_suite(only=only, jobs=args.jobs, catalog_path=args.catalog)
    except ValueError as exc:
        parser.error(str(exc))
    if args.json:
        print(json.dumps([r.to_json_dict() for r in results], indent=2))
    else:
        for r in results:
            print(r.line())
        npass = sum(r.passed for r in results)
        print(f"{npass}/{len(results)} items passed")
    return 0 if all(r.passed for r in results) else CHECK_FAILED


def cmd_export(args, parser) -> int:
    graphs = _collect_inputs(args, parser)
    if not args.dot:
        parser.error("export currently only supports --dot")
    if args.out:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        for i, G in enumerate(graphs):
            (outdir / f"graph{i:03d}.dot").write_text(to_dot(G, name=f"g{i}"))
        print(f"wrote {len(graphs)} DOT file(s) to {outdir}")
    else:
        for i, G in enumerate(graphs):
            sys.stdout.write(to_dot(G, name=f"g{i}"))
    return 0


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sp-extremal",
        description="Extremal edge counts of K4-minor-free graphs under girth constraints.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="closed-form maximum edge count")
    p.add_argument("--girth", type=int, required=True, help="girth constraint (even, or 5)")
    p.add_argument("--n", type=int, required=True, help="vertex count")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_bound)

    p = sub.add_parser("construct", help="build a named graph, print graph6")
    p.add_argument("spec", nargs="+", help="theta:k,s | g5:s | h:i")
    p.add_argument("--json", action="store_true")
    p.add_argument("--dot", action="store_true", help="print DOT instead of graph6")
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("check", help="girth, K4-minor-freeness, connectivity")
    _add_input_args(p)
    p.add_argument("--canonical", action="store_true", help="include the canonical form")
    p.add_argument("--certificate", action="store_true",
                   help="include K4 branch sets when a minor exists")
    p.add_argument("--require-minor-free", action="store_true",
                   help="exit 1 unless every input is K4-minor-free")
    p.add_argument("--require-girth", type=int, metavar="G",
                   help="exit 1 unless every input has girth >= G")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("bridges", help="bridge decomposition / whole-graph bridge audit")
    _add_input_args(p)
    p.add_argument("--cycle", metavar="V0,V1,...",
                   help="decompose against this cycle (default: audit all cycles)")
    p.add_argument("--diagnostic", action="store_true",
                   help="audit even when the graph has a K4 minor")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_bridges)

    p = sub.add_parser("reduce2conn", help="rewrite away cutvertices, keeping n, e, girth")
    _add_input_args(p)
    p.add_argument("--step", metavar="X[,V1,V2]",
                   help="apply a single rewrite at cutvertex X instead of the full loop")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_reduce2conn)

    p = sub.add_parser("enumerate", help="exhaustive extremal search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--girth", type=int, required=True)
    p.add_argument("--list", action="store_true", help="list extremal graphs (graph6)")
    p.add_argument("--count-at", type=int, metavar="M",
                   help="count classes with exactly M edges instead")
    p.add_argument("--jobs", type=int, default=1, help="parallel subtree tasks (default 1)")
    p.add_argument("--no-bound-pruning", action="store_true")
    p.add_argument("--all-graphs", action="store_true",
                   help="drop the 2-connectivity restriction on results")
    p.add_argument("--save", metavar="FILE", help="write the graph list as .g6 lines")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("verify-paper", help="run the built-in verification suite")
    p.add_argument("--only", metavar="KEYS",
                   help="comma-separated item keys: " + ",".join(ITEM_KEYS))
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--catalog", metavar="PATH", help="override the packaged catalog file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_verify_paper)

    p = sub.add_parser("export", help="write graphs as DOT files")
    _add_input_args(p)
    p.add_argument("--dot", action="store_true", help="DOT format (required)")
    p.add_argument("--out", metavar="DIR", help="output directory (default: stdout)")
    p.set_defaults(fn=cmd_export)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.fn(args, parser)


if __name__ == "__main__":
    sys.exit(main())
