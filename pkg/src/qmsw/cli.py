"""
Command line front end.

Commands::

    compute    evaluate one sum and print its JSON value
    verify     run a verification suite and write a JSON report
    transport  evaluate a connected-sum chain and check that it is constant
    bench      time the DP evaluator against the naive enumerator (CSV)

Exit codes: 0 success, 1 counterexample, 2 usage error, 3 pole.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from typing import List, Optional

from .combinat import DiagIndex, LinearIndex, ShapeError, indices_up_to
from .connect import RegionVariant, transport_chain_linear, transport_chain_schur
from .exactq import PoleError, specialize_q1, to_cyclo
from .exactq.backends import FAST, CountingBackend
from .exactq.serialize import cyclo_to_json, ratfunc_to_json, rational_to_json
from .report import SweepConfig, parse_range
from .sums import DEFAULT_READING, Reading, SumKind, evaluate
from .suites import SUITES, run_suite

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE, EXIT_POLE = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _parse_index(text: str):
    try:
        return LinearIndex.parse(text).parts
    except ValueError as exc:
        raise UsageError(f"bad index {text!r}: {exc}") from None


def _load_shape(path: str) -> DiagIndex:
    try:
        with open(path, encoding="utf-8") as fh:
            return DiagIndex.from_json(json.load(fh))
    except OSError as exc:
        raise UsageError(f"cannot read shape file: {exc}") from None
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise UsageError(f"malformed shape file {path}: {exc}") from None


def _readings(text: str) -> List[Reading]:
    if text in ("both", "all"):
        return list(Reading)
    return [Reading(r) for r in text.split(",")]


def _variants(text: str) -> List[RegionVariant]:
    if text == "all":
        return list(RegionVariant)
    return [RegionVariant(v) for v in text.split(",")]


# ---------------------------------------------------------------------------
# compute


def _resolve_target(args):
    """The sum kind and index the arguments describe, after row/column mapping."""
    kind = SumKind(args.sum)
    if args.as_row and args.as_column:
        raise UsageError("--as-row and --as-column are exclusive")
    if args.as_row or args.as_column:
        if args.index is None:
            raise UsageError("--as-row/--as-column need --index")
        parts = _parse_index(args.index)
        star = kind in (SumKind.BZ_STAR, SumKind.QSTAR_FLAT)
        plain = kind in (SumKind.BZ, SumKind.QFLAT)
        # one row carries the star sums, one column the plain ones
        if (args.as_row and plain) or (args.as_column and star):
            raise UsageError(f"{kind.value} does not correspond to a one-{'row' if args.as_row else 'column'} shape")
        K = DiagIndex.row(parts) if args.as_row else DiagIndex.column(parts)
        bz_side = kind in (SumKind.BZ, SumKind.BZ_STAR, SumKind.SCHUR_BZ)
        return (SumKind.SCHUR_BZ if bz_side else SumKind.SCHUR_QFLAT), K
    if kind.is_schur:
        if args.shape is None:
            raise UsageError(f"{kind.value} needs --shape (or --index with --as-row/--as-column)")
        return kind, _load_shape(args.shape)
    if args.shape is not None:
        raise UsageError(f"{kind.value} takes --index, not --shape")
    return kind, _parse_index(args.index or "")


def cmd_compute(args) -> int:
    kind, index = _resolve_target(args)
    if args.upper < 1:
        raise UsageError("--upper must be positive")
    if args.at_q1 and args.root is not None:
        raise UsageError("--at-q1 and --root are exclusive")
    value = evaluate(kind, index, args.upper, Reading(args.reading), args.method)
    if args.at_q1:
        out = rational_to_json(specialize_q1(value))
    elif args.root is not None:
        if args.root < 2:
            raise UsageError("--root must be at least 2")
        out = cyclo_to_json(to_cyclo(value, args.root))
    else:
        out = ratfunc_to_json(value)
    print(_dump(out))
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def _config_from_args(args) -> SweepConfig:
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                return SweepConfig.from_json(json.load(fh))
        except (OSError, json.JSONDecodeError, TypeError) as exc:
            raise UsageError(f"bad config file: {exc}") from None
    kw = {}
    if args.max_weight is not None:
        kw["max_weight"] = args.max_weight
    if args.max_depth is not None:
        kw["max_depth"] = args.max_depth
    if args.uppers is not None:
        kw["uppers"] = parse_range(args.uppers)
    if args.levels is not None:
        kw["levels"] = parse_range(args.levels)
    if args.shapes not in (None, "builtin"):
        try:
            with open(args.shapes, encoding="utf-8") as fh:
                obj = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"bad shapes file: {exc}") from None
        kw["shapes"] = obj if isinstance(obj, list) else [obj]
    if args.max_cells is not None:
        kw["max_cells"] = args.max_cells
    if args.readings is not None:
        kw["readings"] = _readings(args.readings)
    if args.variants is not None:
        kw["variants"] = _variants(args.variants)
    if args.evaluators is not None:
        kw["evaluators"] = args.evaluators.split(",")
    kw["jobs"] = args.jobs
    return SweepConfig(**kw)


def cmd_verify(args) -> int:
    if args.theorem not in SUITES:
        raise UsageError(f"unknown theorem {args.theorem!r}; choose from {', '.join(sorted(SUITES))}")
    cfg = _config_from_args(args)
    cfg.diag_indices()  # validate shape input before running anything
    report = run_suite(args.theorem, cfg)
    text = report.dumps()
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    summary = {"theorem": report.theorem, **report.summary, "resolved_variants": report.resolved_variants}
    print(_dump(summary))
    return EXIT_OK if report.ok else EXIT_COUNTEREXAMPLE


# ---------------------------------------------------------------------------
# transport


def cmd_transport(args) -> int:
    if args.upper < 1:
        raise UsageError("--upper must be positive")
    if (args.index is None) == (args.shape is None):
        raise UsageError("give exactly one of --index and --shape")
    if args.index is not None:
        k = _parse_index(args.index)
        if not k:
            raise UsageError("the transport chain needs a non-empty index")
        chain = [(label, v) for label, v in transport_chain_linear(k, args.upper, RegionVariant(args.variant), args.method)]
    else:
        K = _load_shape(args.shape)
        chain = [(f"Z(K;{a})", v) for a, v in transport_chain_schur(K, args.upper, Reading(args.reading), args.method)]
    constant = all(v == chain[0][1] for _, v in chain)
    if args.trace:
        for label, v in chain:
            print(_dump({"member": label, "value": ratfunc_to_json(v)}))
    print(_dump({"constant": constant, "members": len(chain)}))
    return EXIT_OK if constant else EXIT_COUNTEREXAMPLE


# ---------------------------------------------------------------------------
# bench


def cmd_bench(args) -> int:
    kind = SumKind(args.sum)
    if args.upper < 1:
        raise UsageError("--upper must be positive")
    if kind.is_schur:
        if args.shape is None:
            raise UsageError(f"{kind.value} needs --shape")
        targets = [(_load_shape(args.shape), "shape")]
    elif args.index is not None:
        targets = [(_parse_index(args.index), None)]
    elif args.max_weight is not None:
        targets = [(k, None) for k in indices_up_to(args.max_weight, include_empty=True) if sum(k) == args.max_weight]
    else:
        raise UsageError("give --index or --max-weight")
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["kind", "index", "N", "evaluator", "ring_ops", "wall_ms"])
    agree = True
    for index, _ in targets:
        label = ",".join(map(str, index)) if not isinstance(index, DiagIndex) else json.dumps(index.to_json(), sort_keys=True)
        values = []
        for method in ("dp", "naive"):
            B = CountingBackend(FAST)
            start = time.perf_counter()
            values.append(evaluate(kind, index, args.upper, Reading(args.reading), method, B))
            ms = (time.perf_counter() - start) * 1000
            writer.writerow([kind.value, label, args.upper, method, B.ring_ops, f"{ms:.3f}"])
        agree = agree and values[0] == values[1]
    return EXIT_OK if agree else EXIT_COUNTEREXAMPLE


# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qmsw", description="Exact q-series sums and identity checks.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    kinds = [k.value for k in SumKind]
    readings = [r.value for r in Reading]

    c = sub.add_parser("compute", help="evaluate one sum")
    c.add_argument("--sum", required=True, choices=kinds)
    c.add_argument("--index")
    c.add_argument("--shape", help="JSON file with cells and weights")
    c.add_argument("--upper", type=int, required=True)
    c.add_argument("--reading", choices=readings, default=DEFAULT_READING.value)
    c.add_argument("--at-q1", action="store_true")
    c.add_argument("--root", type=int)
    c.add_argument("--as-row", action="store_true")
    c.add_argument("--as-column", action="store_true")
    c.add_argument("--method", choices=["dp", "naive"], default="dp")
    c.set_defaults(func=cmd_compute)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--theorem", required=True, help=", ".join(sorted(SUITES)))
    v.add_argument("--config", help="JSON sweep configuration")
    v.add_argument("--max-weight", type=int)
    v.add_argument("--max-depth", type=int)
    v.add_argument("--uppers")
    v.add_argument("--levels")
    v.add_argument("--shapes", help="'builtin' or a JSON file of shapes")
    v.add_argument("--max-cells", type=int)
    v.add_argument("--readings", help="comma list, or 'both'/'all'")
    v.add_argument("--variants", help="comma list of region variants, or 'all'")
    v.add_argument("--evaluators", help="comma list from dp,naive")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--report", help="where to write the JSON report")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("transport", help="evaluate a connected-sum chain")
    t.add_argument("--index")
    t.add_argument("--shape")
    t.add_argument("--upper", type=int, required=True)
    t.add_argument("--variant", choices=[x.value for x in RegionVariant], default=RegionVariant.SHIFTED.value)
    t.add_argument("--reading", choices=readings, default=DEFAULT_READING.value)
    t.add_argument("--method", choices=["dp", "naive"], default="dp")
    t.add_argument("--trace", action="store_true")
    t.set_defaults(func=cmd_transport)

    b = sub.add_parser("bench", help="DP versus naive timing table")
    b.add_argument("--sum", required=True, choices=kinds)
    b.add_argument("--index")
    b.add_argument("--max-weight", type=int)
    b.add_argument("--shape")
    b.add_argument("--upper", type=int, required=True)
    b.add_argument("--reading", choices=readings, default=DEFAULT_READING.value)
    b.set_defaults(func=cmd_bench)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except PoleError as exc:
        print(f"pole: {exc}", file=sys.stderr)
        return EXIT_POLE
    except (UsageError, ShapeError, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
