"""Benchmark rows and log-log growth fits for the coloring algorithms."""

from __future__ import annotations

import csv
import io
import json
import math
import time
from dataclasses import dataclass
from typing import Any, Iterable, Sequence

import numpy as np

from .errors import InvalidInputError, InvalidParameterError
from .generators import generate, random_fan_sizes, rebuild_meta
from .graph import Coloring, Graph, MccReport, max_degree, monochromatic_components
from .oracle import exact_mcc
from .outerplanar import solve_mcc2
from .schemes import color_outerpath, color_snowflake, color_wheel
from .tree3 import color_3tree_2colors, color_3tree_3colors

CSV_COLUMNS = ("family", "params", "n", "delta", "algorithm", "max_component", "claimed_bound", "wall_time")

SCHEME_ALGOS = {
    "wheel2": (None, lambda g, meta: color_wheel(g)),
    "snowflake2": ("snowflake", color_snowflake),
    "outerpath2": ("outerpath", color_outerpath),
    "tree3-3col": ("complete-3tree", color_3tree_3colors),
    "tree3-2col": ("complete-3tree", color_3tree_2colors),
}
ALGOS = ("dp2", "oracle") + tuple(SCHEME_ALGOS)


@dataclass(frozen=True)
class BenchRecord:
    family: str
    params: dict[str, Any]
    n: int
    delta: int
    algorithm: str
    max_component: int
    claimed_bound: int | None
    wall_time: float

    def row(self) -> list[Any]:
        return [
            self.family,
            json.dumps(self.params, separators=(",", ":"), sort_keys=True),
            self.n,
            self.delta,
            self.algorithm,
            self.max_component,
            "" if self.claimed_bound is None else self.claimed_bound,
            f"{self.wall_time:.6f}",
        ]


@dataclass(frozen=True)
class ColorOutcome:
    coloring: Coloring
    report: MccReport
    claimed_bound: int | None
    value: int | None = None


def run_algorithm(
    g: Graph, algo: str, meta: Any = None, t: int = 2, budget: int | None = None, threads: int = 1,
    with_components: bool = True,
) -> ColorOutcome:
    """Run ``algo`` on ``g`` and re-verify the coloring it produced."""
    if algo == "dp2":
        sol = solve_mcc2(g)
        rep = monochromatic_components(g, sol.coloring, with_components)
        if rep.max_component != sol.value:
            raise AssertionError(f"dp2 witness has max component {rep.max_component}, solver said {sol.value}")
        return ColorOutcome(sol.coloring, rep, None, sol.value)
    if algo == "oracle":
        res = exact_mcc(g, t, budget=budget, threads=threads)
        rep = monochromatic_components(g, res.witness, with_components)
        if rep.max_component != res.value:
            raise AssertionError("oracle witness does not realize its value")
        return ColorOutcome(res.witness, rep, None, res.value)
    if algo not in SCHEME_ALGOS:
        raise InvalidParameterError(f"unknown algorithm {algo!r}")
    family, fn = SCHEME_ALGOS[algo]
    if family is not None and meta is None:
        meta = rebuild_meta(g, family)
    res = fn(g, meta)
    return ColorOutcome(res.coloring, res.report, res.claimed_bound)


def family_instances(family: str, values: Sequence[int], seeds: Sequence[int] = (0,)) -> Iterable[tuple[dict[str, Any], Graph, Any]]:
    """Instances for a benchmark sweep over the family's size parameter."""
    for val in values:
        if family == "complete-3tree":
            params_list = [{"k": val}]
        elif family == "snowflake":
            params_list = [{"h": val}]
        elif family in ("wheel", "double-wheel"):
            params_list = [{"n": val}]
        elif family == "random-mop":
            params_list = [{"n": val, "seed": s} for s in seeds]
        elif family == "outerpath":
            params_list = [{"fan_sizes": random_fan_sizes(val, s)} for s in seeds]
        else:
            raise InvalidParameterError(f"unknown family {family!r}")
        for params in params_list:
            g, meta = generate(family, **params)
            yield params, g, meta


def run_bench(
    family: str, values: Sequence[int], algo: str, seeds: Sequence[int] = (0,), t: int = 2
) -> list[BenchRecord]:
    if not values:
        raise InvalidInputError("empty parameter range")
    records = []
    for params, g, meta in family_instances(family, values, seeds):
        start = time.perf_counter()
        out = run_algorithm(g, algo, meta, t=t, with_components=False)
        elapsed = time.perf_counter() - start
        records.append(
            BenchRecord(family, params, g.n, max_degree(g), algo, out.report.max_component, out.claimed_bound, elapsed)
        )
    return records


@dataclass(frozen=True)
class LogLogFit:
    slope: float
    intercept: float
    residual: float
    points: int
    x_axis: str


def fit_loglog(xs: Sequence[float], ys: Sequence[float], x_axis: str = "n") -> LogLogFit:
    """Least-squares line through ``(log x, log y)``; residual is the RMS error."""
    if len(xs) < 2:
        raise InvalidInputError("need at least two points for a fit")
    lx, ly = np.log(np.asarray(xs, float)), np.log(np.asarray(ys, float))
    slope, intercept = np.polyfit(lx, ly, 1)
    resid = ly - (slope * lx + intercept)
    return LogLogFit(float(slope), float(intercept), float(math.sqrt(np.mean(resid**2))), len(xs), x_axis)


def fit_records(records: Sequence[BenchRecord], x_axis: str = "n") -> LogLogFit:
    """Fit the largest component per x value (instances sharing x are maxed)."""
    worst: dict[int, int] = {}
    for r in records:
        x = r.delta if x_axis == "delta" else r.n
        worst[x] = max(worst.get(x, 0), r.max_component)
    xs = sorted(worst)
    return fit_loglog(xs, [worst[x] for x in xs], x_axis)


def records_to_csv(records: Sequence[BenchRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in records:
        w.writerow(r.row())
    return buf.getvalue()
