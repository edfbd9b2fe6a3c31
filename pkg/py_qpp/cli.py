"""
cli contains the command line front end: verify identities, print named series, dump
the overpartition pair table and inspect single coefficients of (q;q)_inf S(z,q).
"""
from __future__ import annotations
import argparse
import csv
import fractions
import json
import os
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence, Union

from loguru import logger

from py_qpp import log
from py_qpp import model as md
from py_qpp import series as sr
from py_qpp import qtoolkit as qt
from py_qpp import combinatorics as cb
from py_qpp import chebyshev as ch
from py_qpp.identity import REPORT_HEADER, IdentityReport, UnknownCheckId
from py_qpp.identity import registry


EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

DEFAULT_ORDER = 40
DEFAULT_NTABLE_LIMIT = 12

FORMATS = ("text", "json", "csv")
SERIES_HEADER = ("m", "n", "num", "den")


class UnknownSeriesName(LookupError):
    """
    UnknownSeriesName is raised when the series command is given a name it cannot build.
    """


class EnumerationBudgetExceeded(ValueError):
    """
    EnumerationBudgetExceeded is raised when an enumeration beyond the table limit is
    requested without --force.
    """


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"ignoring non-integer {name}={raw!r}")
        return default


def default_order() -> int:
    return _env_int("QPP_DEFAULT_ORDER", DEFAULT_ORDER)


def ntable_limit() -> int:
    return _env_int("QPP_NTABLE_LIMIT", DEFAULT_NTABLE_LIMIT)


SeriesBuilder = Callable[[int], Union[sr.QSeries, sr.BivarSeries]]

SERIES: Dict[str, SeriesBuilder] = {
    "euler": qt.euler,
    "partition": qt.partition_series,
    "overpartition": qt.overpartition_series,
    "overpartition-pairs": qt.overpartition_pair_series,
    "selfconj": lambda order: qt.qpoch_infinite(qt.Monomial(-1, 0, 1, 2), order),
    "gordon": qt.gordon_series,
    "psi": qt.psi_series,
    "jtp": qt.jtp_square_series,
    "spt": qt.spt_series,
    "lambert-all": qt.lambert_all,
    "lambert-odd": qt.lambert_odd,
    "lambert-even": qt.lambert_even,
    "quintuple": qt.quintuple_lhs,
    "D": qt.quintuple_d,
    "S": qt.s_series,
}

FRAC_SERIES: Dict[str, Callable[[int], sr.FracQSeries]] = {
    "theta-shimura": qt.theta_shimura,
}

ETA_PREFIX = "eta:"


def named_series(name: str, order: int) -> Union[sr.QSeries, sr.BivarSeries, sr.FracQSeries]:
    """
    named_series builds the series registered under the name, or the eta quotient
    "eta:d^e,...".

    Args:
        name (str): The series name.
        order (int): The truncation order.

    Raises:
        UnknownSeriesName: If the name is not known or the eta spec is malformed.

    Returns:
        Union[QSeries, BivarSeries, FracQSeries]: The series.
    """
    if name.startswith(ETA_PREFIX):
        try:
            spec = qt.parse_eta_spec(name[len(ETA_PREFIX):])
            return qt.eta_quotient(spec, order)
        except (TypeError, ValueError) as e:
            raise UnknownSeriesName(f"Bad eta quotient {name!r}: {e}") from None
    if name in SERIES:
        return SERIES[name](order)
    if name in FRAC_SERIES:
        return FRAC_SERIES[name](order)
    raise UnknownSeriesName(f"Unknown series name {name!r}")


def _write_csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> None:
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)


def _series_rows(s: Union[sr.QSeries, sr.BivarSeries]) -> List[List[Any]]:
    return [[r["m"] if r["m"] is not None else "", r["n"], r["num"], r["den"]] for r in sr.series_to_json(s)]


def _print_series(s: Union[sr.QSeries, sr.BivarSeries, sr.FracQSeries], fmt: str) -> None:
    offset: Optional[fractions.Fraction] = None
    if isinstance(s, sr.FracQSeries):
        offset, s = s.offset, s.body
    if fmt == "json":
        records = sr.series_to_json(s)
        out: Any = records if offset is None else {"offset": sr.format_rational(offset), "body": records}
        print(json.dumps(out, indent=2))
    elif fmt == "csv":
        _write_csv(SERIES_HEADER, _series_rows(s))
    else:
        if offset is not None:
            print(f"q^({sr.format_rational(offset)}) *")
        if isinstance(s, sr.QSeries):
            print(", ".join(sr.format_rational(c) for c in s))
        else:
            for n, c in enumerate(s):
                print(f"q^{n}: {c}")


def _print_reports(reports: Sequence[IdentityReport], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps([r.to_json() for r in reports], indent=2))
    elif fmt == "csv":
        _write_csv(REPORT_HEADER, [r.to_row() for r in reports])
    else:
        for r in reports:
            print(r)
        passed = sum(r.passed for r in reports)
        print(f"{passed}/{len(reports)} checks passed")


def cmd_verify(args: argparse.Namespace) -> int:
    """
    cmd_verify runs the selected checks, or all of them, and prints their reports.

    Args:
        args (argparse.Namespace): The parsed arguments.

    Raises:
        UnknownCheckId: If an id is not registered.

    Returns:
        int: EXIT_OK if every check passes, EXIT_FAILED otherwise.
    """
    order = args.order
    if order is None and os.getenv("QPP_DEFAULT_ORDER"):
        order = default_order()
    reports = registry.run_all(order, args.id)
    _print_reports(reports, args.format)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def cmd_series(args: argparse.Namespace) -> int:
    order = default_order() if args.order is None else args.order
    _print_series(named_series(args.name, order), args.format)
    return EXIT_OK


def _check_budget(n: int, force: bool) -> None:
    limit = ntable_limit()
    if n > limit and not force:
        raise EnumerationBudgetExceeded(f"n = {n} is beyond the enumeration limit {limit}; pass --force to override")


def cmd_ntable(args: argparse.Namespace) -> int:
    _check_budget(args.n, args.force)
    table = cb.build_ntable(args.n)
    # the empty pair of n = 0 is left out
    if args.format == "json":
        print(json.dumps(table.to_json(min_n=1), indent=2))
    elif args.format == "csv":
        sys.stdout.write(table.to_csv(min_n=1))
    else:
        print(" ".join(f"{h:>6}" for h in cb.NTable.HEADER))
        for row in table.to_rows(min_n=1):
            print(" ".join(f"{v:>6}" for v in row))
    return EXIT_OK


def coefficient_report(m: int, n: int, order: Optional[int] = None, force: bool = False) -> Dict[str, Any]:
    """
    coefficient_report compares the z^m q^n coefficient of (q;q)_inf S(z,q) with the
    Chebyshev prediction and, within the enumeration limit, with the N-table multi-sum.

    Args:
        m (int): The power of z.
        n (int): The power of q.
        order (Optional[int], optional): The truncation order, at least n. Defaults to n.
        force (bool, optional): Enumerate the table beyond the limit. Defaults to False.

    Raises:
        ValueError: If n exceeds the order.

    Returns:
        Dict[str, Any]: The order the series was built at, the series value, the
        prediction, the multi-sum (None when out of reach) and the agreement flag.
    """
    order = n if order is None else order
    if n > order:
        raise ValueError(f"n = {n} exceeds the order {order}")
    value = (qt.euler(order) * qt.s_series(order)).coeff(m, n)
    prediction = ch.piecewise_coeff(m, n)
    multisum = None
    if force or n <= ntable_limit():
        multisum = cb.blocoeff_multisum(m, n, cb.build_ntable(n))
    agree = value == prediction and (multisum is None or multisum == value)
    return {
        "m": m,
        "n": n,
        "order": order,
        "series": sr.format_rational(value),
        "prediction": sr.format_rational(prediction),
        "multisum": None if multisum is None else sr.format_rational(multisum),
        "agree": agree,
    }


def cmd_coeff(args: argparse.Namespace) -> int:
    if args.order is not None and args.n > args.order:
        print(f"error: n = {args.n} exceeds the order {args.order}", file=sys.stderr)
        return EXIT_USAGE
    report = coefficient_report(args.m, args.n, args.order, args.force)
    if args.format == "json":
        print(json.dumps(report, indent=2))
    elif args.format == "csv":
        _write_csv(list(report), [list(report.values())])
    else:
        multisum = "n/a" if report["multisum"] is None else report["multisum"]
        flag = "agree" if report["agree"] else "DISAGREE"
        print(
            f"z^{args.m} q^{args.n}: series {report['series']}, prediction {report['prediction']}, "
            f"multisum {multisum}, {flag}"
        )
    return EXIT_OK if report["agree"] else EXIT_FAILED


def cmd_list(args: argparse.Namespace) -> int:
    checks = [registry.CheckMap.get_check_cls(i) for i in registry.CheckMap.ids()]
    if args.format == "json":
        out = [{"id": c.ID, "default_order": c.DEFAULT_ORDER, "description": c.DESCRIPTION} for c in checks]
        print(json.dumps(out, indent=2))
    elif args.format == "csv":
        _write_csv(("id", "default_order", "description"), [(c.ID, c.DEFAULT_ORDER, c.DESCRIPTION) for c in checks])
    else:
        width = max(len(c.ID) for c in checks)
        for c in checks:
            print(f"{c.ID:<{width}}  {c.DEFAULT_ORDER:>4}  {c.DESCRIPTION}")
    return EXIT_OK


def _int_at_least(lo: int) -> Callable[[str], int]:
    def parse(text: str) -> int:
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
        if v < lo:
            raise argparse.ArgumentTypeError(f"{v} is below {lo}")
        return v

    return parse


_positive_int = _int_at_least(1)
_non_negative_int = _int_at_least(0)


def _check_id(text: str) -> str:
    try:
        return md.CheckID(text).data
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text", help="Output format (default: text)")
    common.add_argument("--verbose", action="store_true", help="Emit library log records on stderr")

    parser = argparse.ArgumentParser(prog="qpp", description="Verify q-series identities with exact arithmetic.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="Run identity checks")
    p.add_argument("--id", type=_check_id, action="append", default=None, help="Check id to run. Repeatable. Default: all checks.")
    p.add_argument("--order", type=_positive_int, default=None, help="Truncation order (default: each check's own)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("series", parents=[common], help="Print a named series")
    p.add_argument("--name", required=True, help="Series name, or eta:d^e,... for an eta quotient")
    p.add_argument("--order", type=_non_negative_int, default=None, help="Truncation order (default: QPP_DEFAULT_ORDER or 40)")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("ntable", parents=[common], help="Dump the overpartition pair table N(r,s,m,n)")
    p.add_argument("--n", type=_non_negative_int, required=True, help="Largest n to enumerate")
    p.add_argument("--force", action="store_true", help="Enumerate beyond QPP_NTABLE_LIMIT")
    p.set_defaults(func=cmd_ntable)

    p = sub.add_parser("coeff", parents=[common], help="Inspect one coefficient of (q;q)_inf S(z,q)")
    p.add_argument("--m", type=int, required=True, help="Power of z")
    p.add_argument("--n", type=_non_negative_int, required=True, help="Power of q")
    p.add_argument("--order", type=_non_negative_int, default=None, help="Truncation order, at least n (default: n)")
    p.add_argument("--force", action="store_true", help="Enumerate the multi-sum beyond QPP_NTABLE_LIMIT")
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("list", parents=[common], help="List the registered checks")
    p.set_defaults(func=cmd_list)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    main parses the arguments, runs the command and maps errors to exit statuses:
    1 for a failed check, 2 for usage errors and 3 for internal errors.

    Args:
        argv (Optional[Sequence[str]], optional): The arguments. Defaults to sys.argv[1:].

    Returns:
        int: The exit status.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    if args.verbose:
        log.enable()
    try:
        return args.func(args)
    except (UnknownCheckId, UnknownSeriesName, EnumerationBudgetExceeded) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as e:
        logger.exception(e)
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
