"""Command line: ``madelung {compute,table,trace,verify}``.

Every command writes one table, as CSV (header row, LF line endings) or as
a JSON array with one object per row.  Floats carry 15 significant digits.

Exit status: 0 success, 1 a verification check failed, 2 usage error,
3 a series did not converge.
"""

import argparse
import csv
import io
import json
import sys

from .core import (
    MadelungQuery,
    coefficient_direct,
    convergence_trace,
    heuristic_m_max,
    madelung,
    madelung_ladder,
)
from .cusp import e12
from .errors import BoundsError, ConvergenceError, DomainError
from .squares import odd_squares_row, squares_row
from .verify import run_suite

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_CONVERGENCE = 0, 1, 2, 3

TABLE_I_DIMS = (2, 3, 4, 6, 8, 10)
TABLE_II_EXPONENTS = (0.5, 1.5, 3.0, 6.0)
MAX_DIM_FOUR_COLUMN = 20
MAX_DIM = 100


class UsageError(Exception):
    pass


def fmt(x):
    """15 significant digits for floats; ints and strings unchanged."""
    if isinstance(x, float):
        return f"{x + 0.0:.15g}"
    return x


def _json_value(x):
    if isinstance(x, float):
        return float(fmt(x))
    return None if x == "" else x


def render(header, rows, kind="csv"):
    """Serialise rows as CSV text or as a JSON array of objects."""
    if kind == "json":
        recs = [{h: _json_value(v) for h, v in zip(header, row)} for row in rows]
        return json.dumps(recs, indent=1) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows([fmt(v) for v in row] for row in rows)
    return buf.getvalue()


def _inclusive(start, stop, step):
    if step < 1:
        raise UsageError("--step must be >= 1")
    return range(start, stop + 1, step)


# --- commands -------------------------------------------------------------------


def cmd_compute(args):
    if args.N < 1:
        raise UsageError(f"-N must be >= 1, got {args.N}")
    v = madelung(args.N, args.s, args.tol, args.method)
    header = ["N", "s", "value", "m_max_used", "remainder_estimate", "method_used"]
    return header, [[args.N, args.s, v.value, v.m_max_used, v.remainder_estimate, v.method_used]]


def _table_coefficients(args):
    header = ["m", "c_1/2(m)"] + [f"r_{N}(m)" for N in TABLE_I_DIMS]
    ms = list(_inclusive(args.start, args.stop, args.step))
    if ms and ms[0] < 1:
        raise UsageError("m starts at 1")
    top = ms[-1] if ms else 0
    rows_r = {N: squares_row(N, top) for N in TABLE_I_DIMS}
    rows = [[m, coefficient_direct(0.5, m)] + [rows_r[N][m] for N in TABLE_I_DIMS] for m in ms]
    return header, rows


def _table_madelung(args):
    exps = tuple(args.exponents)
    dims = list(_inclusive(args.start, args.stop, args.step))
    if dims and dims[0] < 1:
        raise UsageError("N starts at 1")
    top = dims[-1] if dims else 0
    limit = MAX_DIM if exps == (0.5,) else MAX_DIM_FOUR_COLUMN
    if top > limit:
        raise UsageError(f"N <= {limit} for exponents {exps}")
    header = ["N", "m_max"] + [f"M_N({s:g})" for s in exps]
    if not dims:
        return header, []
    ladders = [madelung_ladder(top, s, args.tol) for s in exps]
    rows = []
    for N in dims:
        m_max = heuristic_m_max(N) if N > 1 else 0
        rows.append([N, m_max] + [lad[N - 1].value for lad in ladders])
    return header, rows


def _table_squares(args):
    if args.N < 1:
        raise UsageError(f"-N must be >= 1, got {args.N}")
    ms = list(_inclusive(args.start, args.stop, args.step))
    if ms and ms[0] < 0:
        raise UsageError("m starts at 0")
    top = ms[-1] if ms else 0
    if args.odd:
        row = odd_squares_row(args.N, top)
        label = f"r_{args.N}^odd(m)"
    else:
        row = squares_row(args.N, top)
        label = f"r_{args.N}(m)"
    return ["m", label], [[m, row[m]] for m in ms]


def _table_cusp(args):
    ns = list(_inclusive(args.start, args.stop, args.step))
    if ns and ns[0] < 1:
        raise UsageError("n starts at 1")
    return ["n", "e12(n)"], [[n, e12(n)] for n in ns]


TABLES = {
    "coefficients": _table_coefficients,
    "madelung": _table_madelung,
    "squares": _table_squares,
    "cusp": _table_cusp,
}


def cmd_table(args):
    return TABLES[args.which](args)


def cmd_trace(args):
    if args.N < 1:
        raise UsageError(f"-N must be >= 1, got {args.N}")
    tr = convergence_trace(MadelungQuery(args.N, args.s, args.tol, args.method))
    a = tr.terms_a if args.method != "recursive" else ()
    b = tr.terms_paired if args.method != "recursive" else ()
    d = tr.terms_d if args.method != "direct" else ()
    n_rows = max(len(a) + 1, len(d))
    rows = []
    for m in range(n_rows):
        am = a[m - 1] if 1 <= m <= len(a) else ""
        bm = b[m // 2 - 1] if m >= 2 and m % 2 == 0 and m // 2 <= len(b) else ""
        dm = d[m] if m < len(d) else ""
        rows.append([m, am, bm, dm])
    return ["m", "a", "b_pair", "d"], rows


def cmd_verify(args):
    checks = run_suite(args.suite)
    rows = [[c.suite, c.name, "pass" if c.passed else "FAIL", c.detail] for c in checks]
    failed = sum(not c.passed for c in checks)
    return ["suite", "check", "result", "detail"], rows, (EXIT_FAILED if failed else EXIT_OK)


# --- parser -----------------------------------------------------------------------


def _exponent_list(text):
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad exponent list {text!r}")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", default=None, help="output file (default: standard output)")

    p = argparse.ArgumentParser(prog="madelung", description="N-dimensional Madelung constants")
    sub = p.add_subparsers(dest="command", required=True)

    def series_flags(q):
        q.add_argument("-N", type=int, required=True, help="dimension")
        q.add_argument("-s", type=float, required=True, help="exponent")
        q.add_argument("--method", choices=("auto", "direct", "recursive"), default="auto")
        q.add_argument("--tol", type=float, default=1e-14)

    c = sub.add_parser("compute", parents=[common], help="one value M_N(s)")
    series_flags(c)
    c.set_defaults(func=cmd_compute)

    t = sub.add_parser("table", parents=[common], help="regenerate a table")
    t.add_argument("which", choices=tuple(TABLES))
    t.add_argument("--start", type=int, default=1)
    t.add_argument("--stop", type=int, default=20, help="last index, inclusive")
    t.add_argument("--step", type=int, default=1)
    t.add_argument("-N", type=int, default=4, help="dimension for the squares table")
    t.add_argument("--odd", action="store_true", help="odd squares only (squares table)")
    t.add_argument("--exponents", type=_exponent_list, default=list(TABLE_II_EXPONENTS))
    t.add_argument("--tol", type=float, default=1e-14)
    t.set_defaults(func=cmd_table)

    r = sub.add_parser("trace", parents=[common], help="unsummed series terms")
    series_flags(r)
    r.set_defaults(func=cmd_trace)

    v = sub.add_parser("verify", parents=[common], help="run consistency checks")
    v.add_argument("suite", nargs="?", default="all", choices=("all", "squares", "zucker", "cusp", "continuation"))
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    status = EXIT_OK
    try:
        result = args.func(args)
    except (UsageError, DomainError, BoundsError) as exc:
        parser.error(str(exc))  # exits with status 2
    except ConvergenceError as exc:
        print(f"madelung: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    if len(result) == 3:
        header, rows, status = result
    else:
        header, rows = result
    text = render(header, rows, args.format)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
