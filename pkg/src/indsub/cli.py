"""Command-line front end.

    indsub count GRAPH --property scorpion --ell 1 --k 5 [--algo fast|oracle]
    indsub verify --lemma fossil-charac --ell 1 --k 5
    indsub gen --kind skeleton --ell 1 --k 5
    indsub bench --ell 1 --k 5 --sizes 50,100,200 --p 0.5 --seed 1 --repeats 3

Results go to stdout, diagnostics to stderr. ``--json`` switches stdout to
one JSON object per run. Exit codes: 0 ok, 2 parse error, 3 parameter
error, 4 budget exceeded, 5 verification counterexample.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from . import basis
from .bench import run_bench
from .errors import BudgetExceeded, GraphFormatError, GraphKindMismatch, ParameterError
from .fast_count import count_scorpions, count_sinks_slice
from .generators import gen_augmented_biclique, gen_skeleton, random_graph
from .io import read_graph, serialize_graph
from .oracle import DEFAULT_SUBSET_BUDGET, brute_count
from .recognition import PropertySpec

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PARAM = 3
EXIT_BUDGET = 4
EXIT_COUNTEREXAMPLE = 5


@dataclass
class RunReport:
    command: str
    params: dict
    results: dict
    wall_us: int
    budget: dict = field(default_factory=dict)

    def to_json(self) -> str:
        # exact integers stay integers; JSON has no width limit on them
        return json.dumps(
            {"command": self.command, "params": self.params, "results": self.results,
             "wall_us": self.wall_us, "budget": self.budget},
            sort_keys=True,
        )

    def to_text(self) -> str:
        lines = [f"command: {self.command}"]
        lines += [f"  {k}: {v}" for k, v in self.params.items()]
        lines += [f"{k}: {v}" for k, v in self.results.items()]
        lines += [f"budget.{k}: {v}" for k, v in self.budget.items()]
        lines.append(f"wall_us: {self.wall_us}")
        return "\n".join(lines)


def _emit(report: RunReport, as_json: bool) -> None:
    print(report.to_json() if as_json else report.to_text())


def _probability(text: str) -> Fraction:
    try:
        p = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a probability: {text!r}") from None
    return p


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def cmd_count(args: argparse.Namespace) -> int:
    directed = args.property == "sink"
    G = read_graph(args.graph, directed=directed, strict=args.strict)
    if args.property == "sink":
        spec = PropertySpec.sink()
    else:
        if args.ell is None:
            raise ParameterError("--ell is required for --property scorpion")
        spec = PropertySpec.scorpion(args.ell)
    start = time.monotonic_ns()
    budget = {}
    if args.algo == "oracle":
        value = brute_count(G, args.k, spec, budget=args.budget)
        budget = {"subsets_limit": args.budget}
    elif args.property == "sink":
        value = count_sinks_slice(G, args.k)
    else:
        value = count_scorpions(G, args.ell, args.k, workers=args.workers)
    wall = (time.monotonic_ns() - start) // 1000
    params = {"graph": args.graph, "n": G.n, "m": G.num_edges, "property": spec.label, "k": args.k, "algo": args.algo}
    _emit(RunReport("count", params, {"count": value}, wall, budget), args.json)
    return EXIT_OK


VERIFIERS: dict[str, Callable[..., basis.VerificationReport]] = {
    "anatomy": basis.verify_anatomy,
    "fossil-charac": basis.verify_fossil_characterization,
    "tau": basis.verify_tau,
    "weights": basis.verify_weights,
}


def cmd_verify(args: argparse.Namespace) -> int:
    start = time.monotonic_ns()
    report = VERIFIERS[args.lemma](args.ell, args.k, max_pairs=args.max_pairs)
    wall = (time.monotonic_ns() - start) // 1000
    results = {
        "status": "pass" if report.passed else "fail",
        "graphs_scanned": report.graphs_scanned,
        "counterexamples": len(report.counterexamples),
        **report.details,
    }
    params = {"lemma": args.lemma, "ell": args.ell, "k": args.k}
    _emit(RunReport("verify", params, results, wall, {"max_pairs": args.max_pairs}), args.json)
    print(report.line(), file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_COUNTEREXAMPLE


def cmd_gen(args: argparse.Namespace) -> int:
    if args.kind == "skeleton":
        if args.ell is None or args.k is None:
            raise ParameterError("skeleton needs --ell and --k")
        G, _ = gen_skeleton(args.ell, args.k)
    elif args.kind == "biclique":
        if args.a is None or args.b is None:
            raise ParameterError("biclique needs --a and --b")
        G = gen_augmented_biclique(args.a, args.b)
    else:
        if args.n is None or args.p is None:
            raise ParameterError("random needs --n and --p")
        G = random_graph(args.n, args.p, args.seed)
    sys.stdout.write(serialize_graph(G))
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    if args.repeats < 1:
        raise ParameterError("--repeats must be >= 1")
    start = time.monotonic_ns()
    points, slope = run_bench(args.ell, args.k, args.sizes, args.p, args.seed, args.repeats)
    wall = (time.monotonic_ns() - start) // 1000
    results: dict = {
        "sizes": [pt.n for pt in points],
        "counts": [pt.count for pt in points],
        "median_us": [pt.median_us for pt in points],
        "times_us": [pt.times_us for pt in points],
    }
    if slope is not None:
        results["loglog_slope"] = round(slope, 4)
    params = {"ell": args.ell, "k": args.k, "p": str(args.p), "seed": args.seed, "repeats": args.repeats}
    _emit(RunReport("bench", params, results, wall), args.json)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARAM, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="indsub", description="Exact induced-subgraph counting for sink and scorpion properties.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("count", help="count induced k-vertex subgraphs with a property")
    p.add_argument("graph", help="edge-list file")
    p.add_argument("--property", choices=["sink", "scorpion"], required=True)
    p.add_argument("--ell", type=int)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--algo", choices=["fast", "oracle"], default="fast")
    p.add_argument("--budget", type=int, default=DEFAULT_SUBSET_BUDGET, help="oracle subset budget")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--strict", action="store_true", help="reject duplicate edges")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="exhaustive structural checks over labeled graphs")
    p.add_argument("--lemma", choices=sorted(VERIFIERS), required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-pairs", type=int, default=basis.DEFAULT_CENSUS_PAIRS,
                   help="census budget: largest C(k,2) accepted")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write a generated graph in edge-list format")
    p.add_argument("--kind", choices=["skeleton", "biclique", "random"], required=True)
    p.add_argument("--ell", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=_probability)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time the scorpion counter on random graphs")
    p.add_argument("--ell", type=int, default=1)
    p.add_argument("--k", type=int, default=5)
    p.add_argument("--sizes", type=_int_list, required=True)
    p.add_argument("--p", type=_probability, default=Fraction(1, 2))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeats", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GraphFormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ParameterError, GraphKindMismatch) as exc:
        print(f"parameter error: {exc}", file=sys.stderr)
        return EXIT_PARAM
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
