"""Command-line interface.

Exit codes: 0 success or verified, 1 verification failure or method
disagreement, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from bgrank import congruence, counting
from bgrank.core_quotient import Decomposition, compose, decompose, two_core_by_removal
from bgrank.partitions import (
    PartitionParseError,
    Staircase,
    bg_rank,
    bg_rank_naive,
    format_partition,
    parse_partition,
)
from bgrank.series import expand_product

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


@dataclass(frozen=True)
class CliConfig:
    output_format: str = "text"
    enumeration_bound: int = counting.DEFAULT_ENUMERATION_BOUND
    series_order: int = 500

    def __post_init__(self) -> None:
        if self.enumeration_bound < 1 or self.series_order < 1:
            raise ValueError("bounds must be positive")

    @property
    def json(self) -> bool:
        return self.output_format == "json"


# default sweep bound per family, as used by "verify all"
VERIFY_DEFAULTS = {
    "fifteen-pairs": 15,
    "reduction": 500,
    "pp-mod5": 5000,
    "refined": 500,
    "jacobi": 1000,
    "mod5-factor": 500,
    "triangular": 10000,
    "ramanujan": 200,
}

VERIFIERS: dict[str, Callable[[int, CliConfig], congruence.CongruenceReport]] = {
    "fifteen-pairs": lambda n, cfg: congruence.verify_fifteen_pairs(),
    "reduction": lambda n, cfg: congruence.verify_reduction_identity(n),
    "pp-mod5": lambda n, cfg: congruence.verify_pp_mod5(n),
    "refined": lambda n, cfg: congruence.verify_refined_congruences(
        n, enum_bound=min(30, cfg.enumeration_bound), enumeration_limit=cfg.enumeration_bound
    ),
    "jacobi": lambda n, cfg: congruence.verify_jacobi_cube(n),
    "mod5-factor": lambda n, cfg: congruence.verify_mod5_factor(n),
    "triangular": lambda n, cfg: congruence.triangular_residue_analysis(n),
    "ramanujan": lambda n, cfg: congruence.ramanujan_check(n),
}


class UsageError(Exception):
    pass


def _emit(cfg: CliConfig, payload, text: str) -> None:
    if cfg.json:
        print(json.dumps(payload))
    else:
        print(text)


def _partition_arg(text: str):
    try:
        return parse_partition(text)
    except PartitionParseError as exc:
        raise UsageError(str(exc)) from None


def cmd_bgrank(args, cfg: CliConfig) -> int:
    p = _partition_arg(args.partition)
    rank = bg_rank(p)
    payload = {"partition": format_partition(p), "bg_rank": rank}
    text = str(rank)
    status = EXIT_OK
    if args.check:
        naive = bg_rank_naive(p)
        payload["naive"] = naive
        payload["agree"] = naive == rank
        text += f"\nnaive={naive} agree={'yes' if naive == rank else 'no'}"
        if naive != rank:
            status = EXIT_FAILED
    _emit(cfg, payload, text)
    return status


def cmd_core(args, cfg: CliConfig) -> int:
    p = _partition_arg(args.partition)
    core = two_core_by_removal(p)
    _emit(cfg, {"partition": format_partition(p), "core": format_partition(core)}, format_partition(core))
    return EXIT_OK


def cmd_decompose(args, cfg: CliConfig) -> int:
    d = decompose(_partition_arg(args.partition))
    # a decomposition is always reported as JSON
    print(json.dumps(d.to_dict()))
    return EXIT_OK


def cmd_compose(args, cfg: CliConfig) -> int:
    if args.height < 0:
        raise UsageError(f"core height must be nonnegative, got {args.height}")
    d = Decomposition(Staircase(args.height), _partition_arg(args.q0), _partition_arg(args.q1))
    p = compose(d)
    _emit(cfg, {**d.to_dict(), "partition": format_partition(p)}, format_partition(p))
    return EXIT_OK


def _count(kind: str, n: int, j: Optional[int], method: str, bound: int) -> int:
    if kind == "p":
        if method == "formula":
            return counting.partition_count(n)
        if n > bound:
            raise counting.EnumerationBoundError(f"n={n} exceeds the enumeration bound {bound}")
        return sum(1 for _ in counting.enumerate_partitions(n))
    if kind == "pp":
        if method == "formula":
            return counting.pair_count(n)
        return counting.pair_count_by_enumeration(n, bound=bound)
    if method == "formula":
        return counting.pj_formula(n, j)
    return counting.pj_enumerate(n, j, bound=bound)


def cmd_count(args, cfg: CliConfig) -> int:
    if args.n < 0:
        raise UsageError(f"n must be nonnegative, got {args.n}")
    if args.kind == "pj" and args.j is None:
        raise UsageError("count pj needs both n and j")
    if args.kind != "pj" and args.j is not None:
        raise UsageError(f"count {args.kind} takes only n")
    methods = ["formula", "enumerate"] if args.method == "both" else [args.method]
    try:
        values = {m: _count(args.kind, args.n, args.j, m, cfg.enumeration_bound) for m in methods}
    except counting.EnumerationBoundError as exc:
        raise UsageError(str(exc)) from None
    distinct = set(values.values())
    value = values[methods[0]]
    payload = {"kind": args.kind, "n": args.n, "j": args.j, "count": str(value)}
    if len(distinct) > 1:
        payload["methods"] = {m: str(v) for m, v in values.items()}
        _emit(cfg, payload, "methods disagree: " + ", ".join(f"{m}={v}" for m, v in values.items()))
        return EXIT_FAILED
    _emit(cfg, payload, str(value))
    return EXIT_OK


def _report_text(report: congruence.CongruenceReport) -> str:
    status = "PASS" if report.passed else "FAIL"
    lines = [f"{status} {report.family} (range {report.range}, {report.checked} checks)"]
    for f in report.failures:
        j = "" if f.j is None else f" j={f.j}"
        note = f" ({f.note})" if f.note else ""
        lines.append(f"  counterexample n={f.n}{j} value={f.value}{note}")
    return "\n".join(lines)


def cmd_verify(args, cfg: CliConfig) -> int:
    families = list(VERIFIERS) if args.family == "all" else [args.family]
    reports = []
    for family in families:
        bound = args.max_n if args.max_n is not None else VERIFY_DEFAULTS[family]
        if bound < 0:
            raise UsageError(f"--max-n must be nonnegative, got {bound}")
        reports.append(VERIFIERS[family](bound, cfg))
    passed = all(r.passed for r in reports)
    if cfg.json:
        if len(reports) == 1:
            print(json.dumps(reports[0].to_dict()))
        else:
            print(json.dumps({"passed": passed, "reports": [r.to_dict() for r in reports]}))
    else:
        print("\n".join(_report_text(r) for r in reports))
    return EXIT_OK if passed else EXIT_FAILED


def cmd_series(args, cfg: CliConfig) -> int:
    order = args.order if args.order is not None else cfg.series_order
    if order < 0:
        raise UsageError(f"order must be nonnegative, got {order}")
    factors = []
    for token in args.factors:
        try:
            step, exponent = (int(x) for x in token.split(":"))
        except ValueError:
            raise UsageError(f"factor must look like STEP:EXPONENT, got {token!r}") from None
        if step < 1:
            raise UsageError(f"factor step must be positive, got {step}")
        factors.append((step, exponent))
    s = expand_product(factors, order, args.modulus)
    _emit(cfg, s.to_dict(), " ".join(map(str, s.coeffs)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bgrank", description="BG-rank, 2-cores and mod-5 congruences for partitions."
    )
    parser.add_argument("--json", action="store_true", help="emit one JSON document on stdout")
    parser.add_argument("--enum-bound", type=int, default=counting.DEFAULT_ENUMERATION_BOUND,
                        help="largest n allowed for brute-force enumeration (default %(default)s)")
    # the same flags are accepted after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--enum-bound", type=int, default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bgrank", parents=[common], help="BG-rank of a partition such as 4+3+3+1+1+1")
    p.add_argument("partition")
    p.add_argument("--check", action="store_true", help="also compare against the cell-by-cell sum")
    p.set_defaults(func=cmd_bgrank)

    p = sub.add_parser("core", parents=[common], help="2-core by repeated domino removal")
    p.add_argument("partition")
    p.set_defaults(func=cmd_core)

    p = sub.add_parser("decompose", parents=[common], help="2-core height and 2-quotient as JSON")
    p.add_argument("partition")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("compose", parents=[common], help="rebuild a partition from core height and quotients")
    p.add_argument("height", type=int)
    p.add_argument("q0")
    p.add_argument("q1")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("count", parents=[common], help="p(n), pp(n) or p_j(n)")
    p.add_argument("kind", choices=["p", "pp", "pj"])
    p.add_argument("n", type=int)
    p.add_argument("j", type=int, nargs="?")
    p.add_argument("--method", choices=["formula", "enumerate", "both"], default="formula")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", parents=[common], help="run a congruence or identity check")
    p.add_argument("family", choices=["all", *VERIFIERS])
    p.add_argument("--max-n", type=int, default=None, help="override the family's default bound")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("series", parents=[common], help="expand prod (1 - x^(s i))^e as a coefficient list")
    p.add_argument("factors", nargs="+", metavar="STEP:EXPONENT")
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--modulus", type=int, default=None)
    p.set_defaults(func=cmd_series)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = CliConfig("json" if args.json else "text", enumeration_bound=args.enum_bound)
        return args.func(args, cfg)
    except (UsageError, ValueError) as exc:
        print(f"bgrank: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
