"""Command-line front end: ``labelvns {solve,generate,oracle,bench}``.

Documents (JSON or CSV) go to stdout; every diagnostic goes to stderr.
Exit status is 0 on success, 1 on usage or parse errors and 2 when an MLST
instance has no spanning tree.
"""

from __future__ import annotations

import argparse
import csv
import glob
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import List, Optional, Sequence

from .exceptions import LabelVNSError, OracleLimitError, UnsolvableInstanceError
from .graph import LabelledGraph, extract_forest
from .instance_io import GeneratorParams, generate, generate_connected, parse_instance, write_instance
from .oracle import exact_solve
from .problems import ProblemSpec
from .vns import SolverConfig, Variant, solve

SCHEMA_VERSION = 1
CSV_COLUMNS = ["schema", "instance", "variant", "problem", "kbar", "seed", "label_count",
               "component_count", "feasible", "iterations", "wall_ms", "opt_match", "status"]
VARIANTS = {v.value: v for v in Variant}

EXIT_OK, EXIT_USAGE, EXIT_UNSOLVABLE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class UsageError(Exception):
    pass


@dataclass
class RunRecord:
    instance: str
    variant: str
    problem: str
    kbar: Optional[int]
    seed: int
    label_count: Optional[int] = None
    component_count: Optional[int] = None
    feasible: Optional[bool] = None
    iterations: Optional[int] = None
    wall_ms: Optional[float] = None
    opt_match: Optional[bool] = None
    status: str = "ok"

    def csv_row(self) -> list:
        def cell(value):
            if value is None:
                return ""
            if isinstance(value, bool):
                return "true" if value else "false"
            if isinstance(value, float):
                return f"{value:.3f}"
            return str(value)
        return [str(SCHEMA_VERSION)] + [cell(getattr(self, name)) for name in CSV_COLUMNS[1:]]


def _csv_document(records: Sequence[RunRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for record in records:
        writer.writerow(record.csv_row())
    return buf.getvalue()


def _problem_from_args(args) -> ProblemSpec:
    if args.problem == "klsf":
        if args.kbar is None:
            raise UsageError("--kbar is required for --problem klsf")
        return ProblemSpec.klsf(args.kbar)
    if args.kbar is not None:
        raise UsageError("--kbar is only valid with --problem klsf")
    return ProblemSpec.mlst()


def _budget_from_args(args):
    if args.max_iter is None and args.max_time_ms is None:
        raise UsageError("give at least one of --max-iter / --max-time-ms")
    if args.max_iter is not None and args.max_iter < 1:
        raise UsageError("--max-iter must be positive")
    if args.max_time_ms is not None and args.max_time_ms < 1:
        raise UsageError("--max-time-ms must be positive")
    elapsed = None if args.max_time_ms is None else args.max_time_ms / 1000.0
    return args.max_iter, elapsed


def _read_instance(path: str) -> LabelledGraph:
    with open(path, encoding="ascii") as fh:
        return parse_instance(fh.read())


def _run(graph: LabelledGraph, instance: str, variant: str, problem: ProblemSpec, seed: int,
         max_iter, max_elapsed, reproducible: bool):
    record = RunRecord(instance, variant, problem.kind.value, problem.label_budget, seed)
    config = SolverConfig(VARIANTS[variant], max_iter, max_elapsed, seed)
    problem.check_graph(graph)
    result = solve(graph, problem, config)
    ev = result.evaluation
    record.label_count = ev.label_count
    record.component_count = ev.component_count
    record.feasible = ev.feasible
    record.iterations = result.iterations_used
    if not reproducible:
        record.wall_ms = round(result.wall_time * 1000.0, 3)
    return record, result


def cmd_solve(args) -> int:
    problem = _problem_from_args(args)
    max_iter, max_elapsed = _budget_from_args(args)
    try:
        graph = _read_instance(args.instance)
    except (OSError, UnicodeDecodeError, LabelVNSError) as exc:
        print(f"{args.instance}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        record, result = _run(graph, args.instance, args.variant, problem, args.seed,
                              max_iter, max_elapsed, args.reproducible)
    except UnsolvableInstanceError as exc:
        print(f"{args.instance}: unsolvable: {exc}", file=sys.stderr)
        return EXIT_UNSOLVABLE
    except LabelVNSError as exc:
        print(f"{args.instance}: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.output == "csv":
        sys.stdout.write(_csv_document([record]))
    else:
        doc = {"schema": SCHEMA_VERSION, **asdict(record)}
        doc["labels"] = sorted(result.labels)
        doc["forest"] = list(result.forest.edges)
        if args.trace:
            doc["trace"] = [{"iteration": it, **asdict(ev)} for it, ev in result.trace]
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    return EXIT_OK if result.evaluation.feasible else EXIT_UNSOLVABLE


def cmd_generate(args) -> int:
    params = GeneratorParams(args.nodes, args.labels, args.density, args.seed)
    try:
        if args.connected:
            graph, attempts = generate_connected(params, args.max_attempts)
            if graph is None:
                print(f"no connected instance after {attempts} attempts", file=sys.stderr)
                return EXIT_USAGE
        else:
            graph, attempts = generate(params), 1
    except LabelVNSError as exc:
        print(f"generate: {exc}", file=sys.stderr)
        return EXIT_USAGE
    connected = graph.is_connected(graph.all_labels)
    print(f"generate: nodes={params.node_count} labels={params.label_count} "
          f"density={params.edge_density} seed={params.rng_seed} edges={graph.edge_count} "
          f"connected={str(connected).lower()} attempts={attempts} -> {args.out}", file=sys.stderr)
    with open(args.out, "w", encoding="ascii", newline="\n") as fh:
        fh.write(write_instance(graph))
    return EXIT_OK


def cmd_oracle(args) -> int:
    problem = _problem_from_args(args)
    try:
        graph = _read_instance(args.instance)
        result = exact_solve(graph, problem)
    except UnsolvableInstanceError as exc:
        print(f"{args.instance}: unsolvable: {exc}", file=sys.stderr)
        return EXIT_UNSOLVABLE
    except (OSError, UnicodeDecodeError, LabelVNSError) as exc:
        print(f"{args.instance}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    doc = {
        "schema": SCHEMA_VERSION,
        "instance": args.instance,
        "problem": problem.kind.value,
        "kbar": problem.label_budget,
        **asdict(result.evaluation),
        "subsets_examined": result.subsets_examined,
        "labels": sorted(result.optimum),
        "forest": list(extract_forest(graph, result.optimum).edges),
    }
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    return EXIT_OK


def parse_seeds(text: str) -> List[int]:
    """``"3"``, ``"0..9"`` / ``"0-9"`` (inclusive) or ``"1,4,7"``."""
    seeds = []
    for part in text.split(","):
        part = part.strip()
        for sep in ("..", "-"):
            if sep in part:
                lo, hi = part.split(sep, 1)
                seeds.extend(range(int(lo), int(hi) + 1))
                break
        else:
            seeds.append(int(part))
    if not seeds or any(s < 0 for s in seeds):
        raise ValueError(f"bad seed range {text!r}")
    return sorted(set(seeds))


def _bench_task(task):
    graph, instance, variant, problem, seed, max_iter, max_elapsed, reproducible, optimum = task
    try:
        record, _ = _run(graph, instance, variant, problem, seed, max_iter, max_elapsed, reproducible)
    except UnsolvableInstanceError:
        return RunRecord(instance, variant, problem.kind.value, problem.label_budget, seed,
                         status="unsolvable")
    except LabelVNSError as exc:
        return RunRecord(instance, variant, problem.kind.value, problem.label_budget, seed,
                         status=f"error: {exc}")
    if optimum is not None:
        if problem.is_mlst:
            record.opt_match = record.feasible and record.label_count == optimum.label_count
        else:
            record.opt_match = record.feasible and record.component_count == optimum.component_count
    return record


def cmd_bench(args) -> int:
    problem = _problem_from_args(args)
    max_iter, max_elapsed = _budget_from_args(args)
    try:
        variants = sorted({v.strip() for v in args.variants.split(",") if v.strip()})
        seeds = parse_seeds(args.seeds)
    except ValueError as exc:
        raise UsageError(str(exc))
    unknown = [v for v in variants if v not in VARIANTS]
    if unknown or not variants:
        raise UsageError(f"unknown variant(s) {unknown}; choose from {sorted(VARIANTS)}")
    instances = sorted(glob.glob(args.instances))
    if not instances:
        raise UsageError(f"no instance matches {args.instances!r}")

    tasks, records = [], {}
    for instance in instances:
        try:
            graph = _read_instance(instance)
        except (OSError, UnicodeDecodeError, LabelVNSError) as exc:
            print(f"{instance}: {exc}", file=sys.stderr)
            for variant in variants:
                for seed in seeds:
                    records[(instance, variant, seed)] = RunRecord(
                        instance, variant, problem.kind.value, problem.label_budget, seed,
                        status=f"parse-error: {exc}")
            continue
        optimum = None
        if args.with_oracle:
            try:
                optimum = exact_solve(graph, problem).evaluation
            except OracleLimitError as exc:
                print(f"{instance}: oracle skipped: {exc}", file=sys.stderr)
            except LabelVNSError:
                pass  # reported per run below
        for variant in variants:
            for seed in seeds:
                tasks.append((graph, instance, variant, problem, seed, max_iter, max_elapsed,
                              args.reproducible, optimum))

    if args.workers > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            results = list(pool.map(_bench_task, tasks, chunksize=4))
    else:
        results = [_bench_task(t) for t in tasks]
    for record in results:
        records[(record.instance, record.variant, record.seed)] = record

    sys.stdout.write(_csv_document([records[key] for key in sorted(records)]))
    return EXIT_OK


def _add_problem_flags(p):
    p.add_argument("--problem", choices=["mlst", "klsf"], required=True)
    p.add_argument("--kbar", type=int, help="label budget, required for klsf")


def _add_budget_flags(p):
    p.add_argument("--max-iter", type=int, help="outer iterations")
    p.add_argument("--max-time-ms", type=int, help="wall-clock budget in milliseconds")
    p.add_argument("--reproducible", action="store_true",
                   help="leave wall_ms empty so output depends only on inputs and seed")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="labelvns", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="run one solver on one instance")
    p.add_argument("--instance", required=True)
    _add_problem_flags(p)
    p.add_argument("--variant", choices=sorted(VARIANTS), required=True)
    p.add_argument("--seed", type=int, default=0)
    _add_budget_flags(p)
    p.add_argument("--output", choices=["json", "csv"], default="json")
    p.add_argument("--trace", action="store_true", help="include best-improvement records (json)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("generate", help="write a random instance")
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--labels", type=int, required=True)
    p.add_argument("--density", type=float, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--connected", action="store_true",
                   help="resample until every label together connects the graph")
    p.add_argument("--max-attempts", type=int, default=1000)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("oracle", help="exact brute-force optimum (at most 24 labels)")
    p.add_argument("--instance", required=True)
    _add_problem_flags(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("bench", help="seeded sweep over instances x variants x seeds, CSV out")
    p.add_argument("--instances", required=True, help="glob pattern")
    p.add_argument("--variants", default=",".join(sorted(VARIANTS)))
    p.add_argument("--seeds", required=True, help="e.g. 0..9, 0-9 or 1,2,5")
    _add_problem_flags(p)
    _add_budget_flags(p)
    p.add_argument("--with-oracle", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"labelvns {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
