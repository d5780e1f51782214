"""Command-line front end: ``table``, ``matrix``, ``recover`` and ``verify``.

Exit status is 0 on success, 1 when a verification suite fails and 2 for
usage or input errors.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import json
import sys
from collections.abc import Iterator, Sequence

from .arithmetic import PAIR_NAMES, FunctionPair, get_pair
from .factorization import InconsistencyError, a_f_sequence, build_A, build_A_inverse, compute_B, recover_f, sigma_recurrence
from .tabulated import CsvFormatError, read_values_csv, tabulated_pair
from .verify import SUITES, run_suites

EXIT_OK, EXIT_VERIFY_FAILED, EXIT_USAGE = 0, 1, 2
COLUMNS = ("f", "g", "B", "a_f", "sigma")
DEFAULT_MATRIX_CAP = 2000


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _columns(text: str) -> list[str]:
    cols = [c.strip() for c in text.split(",") if c.strip()]
    bad = [c for c in cols if c not in COLUMNS]
    if bad or not cols:
        raise argparse.ArgumentTypeError(f"columns must be drawn from {','.join(COLUMNS)}")
    return cols


def _suites(text: str) -> list[str]:
    names = [c.strip() for c in text.split(",") if c.strip()]
    bad = [c for c in names if c not in SUITES]
    if bad or not names:
        raise argparse.ArgumentTypeError(f"unknown suite(s) {bad}; choose from {','.join(SUITES)}")
    return names


def _load_pair(args: argparse.Namespace) -> tuple[FunctionPair, int | None]:
    """The requested pair and, for CSV input, the number of tabulated rows."""
    path = getattr(args, "g_csv", None) or getattr(args, "csv", None)
    if path:
        try:
            column, values = read_values_csv(path)
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
        except CsvFormatError as exc:
            raise UsageError(f"{path}: {exc}") from None
        if getattr(args, "g_csv", None) and column != "g":
            raise UsageError(f"{path}: --g-csv needs a header 'n,g'")
        return tabulated_pair(column, values, name=str(path)), len(values)
    if args.pair is None:
        raise UsageError("one of --pair or a CSV source is required")
    return get_pair(args.pair, args.alpha), None


def _format_int(v: int) -> str:
    return str(int(v))


def _emit(records: Iterator[dict], columns: Sequence[str], fmt: str, out) -> None:
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(columns)
        for rec in records:
            w.writerow(_format_int(rec[c]) for c in columns)
    else:
        for rec in records:
            row = {c: (rec[c] if c == "n" else _format_int(rec[c])) for c in columns}
            out.write(json.dumps(row, separators=(",", ":")) + "\n")


def table_records(pair: FunctionPair, N: int, columns: Sequence[str]) -> Iterator[dict]:
    """Rows n = 1..N; the B column at row n holds B_{g_f, n-1}."""
    cols = {}
    if "f" in columns:
        cols["f"] = [pair.f(n) for n in range(1, N + 1)]
    if "g" in columns:
        cols["g"] = [pair.g(n) for n in range(1, N + 1)]
    if "B" in columns:
        cols["B"] = list(compute_B(pair, N).values)
    if "a_f" in columns:
        cols["a_f"] = list(a_f_sequence(pair, N).values[1:])
    if "sigma" in columns:
        cols["sigma"] = list(sigma_recurrence(pair, N).values[1:])
    for k in range(N):
        rec = {"n": k + 1}
        rec.update({c: cols[c][k] for c in columns})
        yield rec


def cmd_table(args: argparse.Namespace, out) -> int:
    pair, rows = _load_pair(args)
    N = args.n if args.n is not None else rows
    if N is None:
        raise UsageError("--n is required with --pair")
    if rows is not None and N > rows:
        raise UsageError(f"CSV has {rows} rows, fewer than --n {N}")
    columns = ["n", *args.cols]
    _emit(table_records(pair, N, args.cols), columns, args.format, out)
    return EXIT_OK


def cmd_matrix(args: argparse.Namespace, out) -> int:
    if args.n > args.max_n:
        raise UsageError(f"--n {args.n} exceeds the matrix cap {args.max_n} (raise it with --max-n)")
    M = build_A(args.n) if args.which == "A" else build_A_inverse(args.n)
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        for row in M.rows:
            w.writerow(_format_int(v) for v in row)
    else:
        for i, row in enumerate(M.rows, start=1):
            out.write(json.dumps({"row": i, "entries": [_format_int(v) for v in row]}, separators=(",", ":")) + "\n")
    return EXIT_OK


def cmd_recover(args: argparse.Namespace, out) -> int:
    pair, rows = _load_pair(args)
    N = args.n if args.n is not None else rows
    if N is None:
        raise UsageError("--n is required with --pair")
    if rows is not None and N > rows:
        raise UsageError(f"g CSV has {rows} rows, fewer than --n {N}")
    fs = recover_f(pair, N)
    _emit(({"n": k, "f": v} for k, v in enumerate(fs, start=1)), ["n", "f"], args.format, out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, out) -> int:
    results = run_suites(args.n, args.suite)
    ok = all(r.passed for r in results)
    report = {"n": args.n, "passed": ok, "suites": [r.to_dict() for r in results]}
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2)
            fh.write("\n")
    if args.format == "jsonl":
        out.write(json.dumps(report, separators=(",", ":")) + "\n")
        return EXIT_OK if ok else EXIT_VERIFY_FAILED
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        out.write(f"{status} {r.name:<10} n={r.n} checks={r.checks} ({r.seconds:.2f}s)\n")
        for msg in r.failures:
            out.write(f"    {msg}\n")
        if r.name == "sigma":
            out.write(f"    selected interpretation: {r.details['selected']}\n")
            for name, x in r.details["first_failure"].items():
                verdict = "matches prefix sums" if x is None else f"first fails at x={x}"
                out.write(f"    {name}: {verdict}\n")
    out.write(("all suites passed" if ok else "verification FAILED") + "\n")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lambert-factor", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, *, with_n_required: bool = False) -> None:
        p.add_argument("--n", type=_positive, required=with_n_required)
        p.add_argument("--format", choices=("csv", "jsonl"), default="csv")
        p.add_argument("--out", metavar="PATH", help="write output here instead of stdout")

    def source(p: argparse.ArgumentParser) -> None:
        p.add_argument("--pair", choices=PAIR_NAMES)
        p.add_argument("--alpha", type=_nonneg, default=1, help="exponent for --pair sigma")

    p = sub.add_parser("table", help="tabulate f, g, B, a_f and prefix sums")
    source(p)
    p.add_argument("--csv", metavar="PATH", help="tabulated pair, header n,f or n,g")
    p.add_argument("--g-csv", metavar="PATH", help="g values, header n,g")
    p.add_argument("--cols", type=_columns, default=["f", "g"])
    common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("matrix", help="dump A_n or its inverse")
    p.add_argument("--which", choices=("A", "Ainv"), default="A")
    p.add_argument("--max-n", type=_positive, default=DEFAULT_MATRIX_CAP)
    common(p, with_n_required=True)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("recover", help="recover f(1..n) from g by the matrix factorization")
    source(p)
    p.add_argument("--g-csv", metavar="PATH", help="g values, header n,g")
    common(p)
    p.set_defaults(func=cmd_recover)

    p = sub.add_parser("verify", help="run invariant sweeps")
    p.add_argument("--suite", type=_suites, default=list(SUITES), help=f"comma list from {','.join(SUITES)}")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--format", choices=("text", "jsonl"), default="text", help="jsonl prints the JSON report")
    p.add_argument("--out", metavar="PATH", help="write the JSON report here")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with contextlib.ExitStack() as stack:
            out = sys.stdout
            if args.out and args.command != "verify":
                out = stack.enter_context(open(args.out, "w", encoding="utf-8", newline=""))
            return args.func(args, out)
    except UsageError as exc:
        print(f"lambert-factor: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except KeyError as exc:
        print(f"lambert-factor: error: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    except InconsistencyError as exc:
        print(f"lambert-factor: internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAILED


if __name__ == "__main__":
    sys.exit(main())
