"""Command-line front end: ``mccolor {generate,color,verify,witness,bench,export}``.

Exit codes: 0 ok, 1 verification failure, 2 invalid input, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import sys
from pathlib import Path
from typing import Any, Sequence

from . import graph as gio
from .bench import ALGOS, fit_records, records_to_csv, run_algorithm, run_bench
from .errors import BudgetExhaustedError, InvalidInputError, MccError
from .generators import FAMILIES, generate, rebuild_meta
from .outerplanar import solve_mcc2, table_stats
from .tree3 import extract_monochromatic_path, extract_outer_wheel

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


def parse_values(text: str) -> list[int]:
    """``"6:13"`` (inclusive range), ``"100,1000"`` or a single integer."""
    try:
        if ":" in text:
            lo, hi = text.split(":")
            return list(range(int(lo), int(hi) + 1))
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InvalidInputError(f"cannot parse value list {text!r}") from None


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _family_params(args: argparse.Namespace) -> dict[str, Any]:
    fam = args.family
    if fam in ("wheel", "double-wheel"):
        params: dict[str, Any] = {"n": args.n}
        if fam == "double-wheel":
            params["centers_adjacent"] = args.centers_adjacent
    elif fam == "snowflake":
        params = {"h": args.h}
    elif fam == "complete-3tree":
        params = {"k": args.k}
    elif fam == "outerpath":
        if args.fan_sizes is None:
            raise InvalidInputError("outerpath needs --fan-sizes")
        params = {"fan_sizes": parse_values(args.fan_sizes)}
    elif fam == "random-mop":
        params = {"n": args.n, "seed": args.seed}
    else:
        raise InvalidInputError(f"unknown family {fam!r}")
    missing = [k for k, v in params.items() if v is None]
    if missing:
        raise InvalidInputError(f"family {fam} needs --{missing[0].replace('_', '-')}")
    return params


def cmd_generate(args: argparse.Namespace) -> int:
    g, _ = generate(args.family, **_family_params(args))
    if args.format == "dot":
        _emit(gio.graph_to_dot(g), args.out)
    else:
        _emit(gio.dumps(gio.graph_to_dict(g)), args.out)
    return EXIT_OK


def cmd_color(args: argparse.Namespace) -> int:
    g = gio.load_graph(args.graph)
    if args.algo == "dp2" and args.dump_tables:
        sol = solve_mcc2(g)
        with open(args.dump_tables, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["node", "u", "v", "w", "states"])
            for node, face, count in table_stats(sol):
                w.writerow([node, *face, count])
    out = run_algorithm(g, args.algo, t=args.colors, budget=args.budget, threads=args.threads)
    _emit(gio.dumps(gio.coloring_to_dict(out.coloring)), args.out)
    if args.report:
        rep = gio.report_to_dict(out.report)
        if out.value is not None:
            rep["value"] = out.value
        if out.claimed_bound is not None:
            rep["claimed_bound"] = out.claimed_bound
        gio.save_json(rep, args.report)
    parts = [f"algo={args.algo}", f"max_component={out.report.max_component}"]
    if out.value is not None:
        parts.append(f"value={out.value}")
    if out.claimed_bound is not None:
        parts.append(f"claimed_bound={out.claimed_bound}")
    print(" ".join(parts), file=sys.stderr)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = gio.load_graph(args.graph)
    c = gio.load_coloring(args.coloring)
    t = args.colors if args.colors is not None else c.t
    if len(c) != g.n:
        raise InvalidInputError(f"coloring has {len(c)} entries, graph has {g.n} vertices")
    if not gio.validate_coloring(g, c, t):
        print(f"invalid coloring for this graph with {t} colors", file=sys.stderr)
        return EXIT_VERIFY
    rep = gio.monochromatic_components(g, c)
    _emit(gio.dumps(gio.report_to_dict(rep)), args.out)
    if args.max_component is not None and rep.max_component > args.max_component:
        print(f"max component {rep.max_component} exceeds {args.max_component}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_witness(args: argparse.Namespace) -> int:
    g = gio.load_graph(args.graph)
    meta = rebuild_meta(g, "complete-3tree")
    if args.kind == "wheel":
        w = extract_outer_wheel(g, meta, args.outer_index)
        _emit(gio.dumps(gio.graph_to_dict(w)), args.out)
        return EXIT_OK
    if args.coloring is not None:
        c = gio.load_coloring(args.coloring)
    else:
        # seeded random coloring with a rainbow outer face
        rng = random.Random(args.seed)
        cols = [rng.randrange(3) for _ in range(g.n)]
        perm = [0, 1, 2]
        rng.shuffle(perm)
        for v, col in zip(meta.outer, perm):
            cols[v] = col
        c = gio.Coloring.of(3, cols)
    pw = extract_monochromatic_path(g, meta, c)
    data = {"format": "mcc-path/1", "vertices": list(pw.vertices), "color": pw.color, "length": pw.length}
    _emit(gio.dumps(data), args.out)
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    raw = {"complete-3tree": args.k, "snowflake": args.h, "outerpath": args.delta}.get(args.family, args.n)
    if raw is None:
        raise InvalidInputError("bench needs a parameter range (--k, --h, --n or --delta)")
    values = parse_values(raw)
    if not values:
        raise InvalidInputError("empty parameter range")
    seeds = range(args.seed, args.seed + args.seeds)
    records = run_bench(args.family, values, args.algo, seeds=seeds, t=args.colors)
    _emit(records_to_csv(records), args.out)
    over = [r for r in records if r.claimed_bound is not None and r.max_component > r.claimed_bound]
    if len(values) >= 2:
        fit = fit_records(records, "delta" if args.family == "outerpath" else "n")
        print(
            f"fit: log(max_component) ~ {fit.slope:.4f} * log({fit.x_axis}) + {fit.intercept:.4f}"
            f"  (rms residual {fit.residual:.4f}, {fit.points} points)",
            file=sys.stderr,
        )
    return EXIT_VERIFY if over else EXIT_OK


def cmd_export(args: argparse.Namespace) -> int:
    g = gio.load_graph(args.graph)
    c = gio.load_coloring(args.coloring) if args.coloring else None
    if c is not None and len(c) != g.n:
        raise InvalidInputError("coloring length does not match the graph")
    if args.format == "json":
        _emit(gio.dumps(gio.graph_to_dict(g)), args.out)
    else:
        _emit(gio.graph_to_dot(g, c), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mccolor", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write a graph of one of the supported families")
    gen.add_argument("--family", required=True, choices=FAMILIES)
    gen.add_argument("--n", type=int)
    gen.add_argument("--h", type=int)
    gen.add_argument("--k", type=int)
    gen.add_argument("--fan-sizes", help="comma-separated fan sizes, e.g. 4,3,4")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--centers-adjacent", action="store_true", help="double wheel: join the two centers")
    gen.add_argument("--format", choices=("json", "dot"), default="json")
    gen.add_argument("--out")
    gen.set_defaults(func=cmd_generate)

    col = sub.add_parser("color", help="color a graph file and verify the result")
    col.add_argument("graph")
    col.add_argument("--algo", required=True, choices=ALGOS)
    col.add_argument("--colors", type=int, default=2, help="number of colors (oracle only)")
    col.add_argument("--budget", type=int, help="oracle search-node budget")
    col.add_argument("--threads", type=int, default=1)
    col.add_argument("--out", help="coloring JSON path (default stdout)")
    col.add_argument("--report", help="report JSON path")
    col.add_argument("--dump-tables", help="dp2: per-node state counts as CSV")
    col.set_defaults(func=cmd_color)

    ver = sub.add_parser("verify", help="report monochromatic components of a coloring")
    ver.add_argument("graph")
    ver.add_argument("coloring")
    ver.add_argument("--colors", type=int)
    ver.add_argument("--max-component", type=int, help="fail when a component is larger")
    ver.add_argument("--out")
    ver.set_defaults(func=cmd_verify)

    wit = sub.add_parser("witness", help="lower-bound witnesses on complete planar 3-trees")
    wit.add_argument("graph")
    wit.add_argument("--kind", required=True, choices=("path", "wheel"))
    wit.add_argument("--coloring", help="3-coloring with rainbow outer face (path)")
    wit.add_argument("--seed", type=int, default=0, help="random rainbow coloring when --coloring is absent")
    wit.add_argument("--outer-index", type=int, default=1, choices=(1, 2, 3))
    wit.add_argument("--out")
    wit.set_defaults(func=cmd_witness)

    ben = sub.add_parser("bench", help="sweep a family, write CSV rows and a log-log fit")
    ben.add_argument("--family", required=True, choices=FAMILIES)
    ben.add_argument("--algo", required=True, choices=ALGOS)
    ben.add_argument("--k", help="range such as 6:13")
    ben.add_argument("--h")
    ben.add_argument("--n")
    ben.add_argument("--delta", help="outerpath maximum degrees")
    ben.add_argument("--seed", type=int, default=0)
    ben.add_argument("--seeds", type=int, default=1, help="instances per value for random families")
    ben.add_argument("--colors", type=int, default=2)
    ben.add_argument("--threads", type=int, default=1)
    ben.add_argument("--format", choices=("csv",), default="csv")
    ben.add_argument("--out")
    ben.set_defaults(func=cmd_bench)

    exp = sub.add_parser("export", help="convert a graph (and coloring) to DOT")
    exp.add_argument("graph")
    exp.add_argument("--coloring")
    exp.add_argument("--format", choices=("dot", "json"), default="dot")
    exp.add_argument("--out")
    exp.set_defaults(func=cmd_export)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExhaustedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except AssertionError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (MccError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
