"""Command-line interface: search bytes, inspect preprocessing, benchmark, report stats.

Exit codes follow grep: 0 when at least one match was found, 1 when none,
2 on usage or input errors. Offsets are 0-based byte offsets. All input is
handled as raw bytes, so NUL and non-ASCII values round-trip unchanged.
Output is deterministic for a fixed seed except the wall_ns bench column.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .baselines import horspool_find_all, kmp_find_all, naive_find_all
from .errors import InvalidArguments, InvalidPattern, OracleMismatch
from .experiments import (
    KNOWN_ALGOS,
    bench_compare,
    estimate_sparse_len,
    simulate_waiting_time,
)
from .pattern import preprocess
from .search import SearchConfig, find_all

BENCH_HEADER = ("algo,n,m,sigma,seed,trials,mean_text_comparisons,"
                "comparisons_per_text_char,mean_shift,type1,type2,type3,matches,wall_ns")
SPARSE_LEN_HEADER = ("sigma,n,trials,seed,mean_distinct,mean_sparse_len,"
                     "bound_value,min_sparse_len,lemma5_violations")
COUPON_HEADER = "sigma,r,trials,seed,exact,simulated"

_BASELINES = {
    "naive": naive_find_all,
    "horspool": horspool_find_all,
    "kmp": kmp_find_all,
}


def _real(value: float) -> str:
    # plain decimal, at most six fractional digits
    s = f"{value:.6f}".rstrip("0")
    return s + "0" if s.endswith(".") else s


def _char(b: int) -> str:
    return chr(b) if 32 <= b <= 126 else f"\\x{b:02x}"


def _render(data: bytes) -> str:
    if all(32 <= b <= 126 for b in data):
        return data.decode("ascii")
    return "hex:" + data.hex()


def _pattern_from_args(args: argparse.Namespace) -> bytes:
    if args.pattern_file is not None:
        with open(args.pattern_file, "rb") as fh:
            data = fh.read()
    else:
        data = os.fsencode(args.pattern)
    if not data:
        raise InvalidPattern("pattern must be non-empty")
    return data


def _text_from_path(path: str | None) -> bytes:
    if path is None or path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _cmd_search(args: argparse.Namespace) -> int:
    pattern = _pattern_from_args(args)
    text = _text_from_path(args.text)
    if args.algo == "sparse":
        pp = preprocess(pattern)
        offsets, stats = find_all(pp, text, SearchConfig(seed=args.seed))
        stat_fields: dict[str, int] = stats.as_dict()
    else:
        result = _BASELINES[args.algo](pattern, text)
        offsets = result.offsets
        stat_fields = {"text_comparisons": result.text_comparisons}
    if args.json:
        payload = {
            "algo": args.algo,
            "pattern_len": len(pattern),
            "text_len": len(text),
            "count": len(offsets),
            "offsets": offsets,
            "stats": stat_fields,
        }
        sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")
    elif args.count_only:
        sys.stdout.write(f"{len(offsets)}\n")
    else:
        sys.stdout.writelines(f"{offset}\n" for offset in offsets)
    return 0 if offsets else 1


def _cmd_inspect(args: argparse.Namespace) -> int:
    pp = preprocess(_pattern_from_args(args))
    sparse = pp.sparse
    body = pp.pattern[sparse.start_pos:sparse.end_pos + 1]
    default = sparse.end_pos + 1
    entries = [(c, s) for c, s in enumerate(pp.shifts) if s != default]
    if args.json:
        payload = {
            "pattern_len": pp.n,
            "delta": pp.delta,
            "sparse_hex": body.hex(),
            "sparse_len": sparse.length,
            "start_pos": sparse.start_pos,
            "end_pos": sparse.end_pos,
            "start_char": sparse.start_char,
            "end_char": sparse.end_char,
            "anchor_shift": pp.shifts[sparse.end_char],
            "default_shift": default,
            "shifts": [[c, s] for c, s in entries],
        }
        sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")
        return 0
    lines = [
        f"pattern_len={pp.n}",
        f"delta={pp.delta}",
        f"sparse={_render(body)}",
        f"sparse_len={sparse.length}",
        f"start_pos={sparse.start_pos}",
        f"end_pos={sparse.end_pos}",
        f"start_char={_char(sparse.start_char)}",
        f"end_char={_char(sparse.end_char)}",
        f"anchor_shift={pp.shifts[sparse.end_char]}",
        f"default_shift={default}",
    ]
    lines.extend(f"shift[{_char(c)}]={s}" for c, s in entries)
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    report = bench_compare(args.n, args.m, args.sigma, args.trials, args.seed, algos)
    lines = [BENCH_HEADER]
    for row in report.rows:
        lines.append(",".join([
            row.algo,
            str(row.n),
            str(row.m),
            str(row.sigma),
            str(row.seed),
            str(row.trials),
            _real(row.mean_text_comparisons),
            _real(row.comparisons_per_text_char),
            _real(row.mean_shift),
            str(row.type1),
            str(row.type2),
            str(row.type3),
            str(row.matches),
            str(row.wall_ns),
        ]))
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _cmd_stats(args: argparse.Namespace) -> int:
    if args.kind == "sparse-len":
        report = estimate_sparse_len(args.n, args.sigma, args.trials, args.seed)
        row = ",".join([
            str(report.sigma),
            str(report.n),
            str(report.trials),
            str(report.seed),
            _real(report.mean_distinct),
            _real(report.mean_sparse_len),
            _real(report.bound_value),
            str(report.min_sparse_len),
            str(report.lemma5_violations),
        ])
        sys.stdout.write(SPARSE_LEN_HEADER + "\n" + row + "\n")
    else:
        report = simulate_waiting_time(args.sigma, args.r, args.trials, args.seed)
        row = ",".join([
            str(report.sigma),
            str(report.r),
            str(report.trials),
            str(report.seed),
            _real(report.exact),
            _real(report.simulated),
        ])
        sys.stdout.write(COUPON_HEADER + "\n" + row + "\n")
    return 0


def _add_pattern_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--pattern", help="pattern given as literal command-line bytes")
    group.add_argument("--pattern-file", help="file holding the raw pattern bytes")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sparsematch",
        description="Exact byte-string matching anchored on a sparse substring.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_search = sub.add_parser(
        "search", help="print the 0-based offset of every occurrence")
    _add_pattern_flags(p_search)
    p_search.add_argument(
        "text", nargs="?", default=None,
        help="text file; omitted or '-' reads stdin")
    p_search.add_argument("--algo", choices=KNOWN_ALGOS, default="sparse")
    p_search.add_argument("--seed", type=int, default=0,
                          help="verifier seed (sparse algo only)")
    output = p_search.add_mutually_exclusive_group()
    output.add_argument("--json", action="store_true",
                        help="emit offsets and run counters as one JSON object")
    output.add_argument("--count-only", action="store_true",
                        help="print only the number of matches")

    p_inspect = sub.add_parser(
        "inspect", help="dump preprocessing results for a pattern")
    _add_pattern_flags(p_inspect)
    p_inspect.add_argument("--json", action="store_true")

    p_bench = sub.add_parser(
        "bench", help="comparison-count benchmark, CSV on stdout")
    p_bench.add_argument("--n", type=int, default=16, help="pattern length")
    p_bench.add_argument("--m", type=int, default=100000, help="text length")
    p_bench.add_argument("--sigma", type=int, default=16, help="alphabet size")
    p_bench.add_argument("--trials", type=int, default=5)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--algos", default=",".join(KNOWN_ALGOS),
                         help="comma-separated subset of: " + ", ".join(KNOWN_ALGOS))

    p_stats = sub.add_parser("stats", help="statistics reports, CSV on stdout")
    stats_sub = p_stats.add_subparsers(dest="kind", required=True)
    p_len = stats_sub.add_parser(
        "sparse-len", help="sparse-substring length over random patterns")
    p_len.add_argument("--sigma", type=int, default=16)
    p_len.add_argument("--n", type=int, default=64)
    p_len.add_argument("--trials", type=int, default=1000)
    p_len.add_argument("--seed", type=int, default=0)
    p_coupon = stats_sub.add_parser(
        "coupon", help="waiting time until r distinct values are drawn")
    p_coupon.add_argument("--sigma", type=int, default=16)
    p_coupon.add_argument("--r", type=int, default=9)
    p_coupon.add_argument("--trials", type=int, default=100000)
    p_coupon.add_argument("--seed", type=int, default=0)
    return parser


_HANDLERS = {
    "search": _cmd_search,
    "inspect": _cmd_inspect,
    "bench": _cmd_bench,
    "stats": _cmd_stats,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args)
    except (InvalidArguments, InvalidPattern, OracleMismatch, OSError) as exc:
        print(f"sparsematch: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
