"""Command-line front end.

    umbralkit compute --family mixed -n 1 -r 2 -k 1
    umbralkit table --family stirling2 --n-range 0..4 --format csv
    umbralkit verify all --out reports.json
    umbralkit series --gf bernoulli-factor --precision 4

Exit codes: 0 success, 1 audit deviates from the golden expectations,
2 invalid input (bad parameters, unknown identity, Laurent obstruction).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Optional

from . import identities
from .combinat import stirling1_unsigned, stirling2
from .errors import UmbralError
from .families import (
    bernoulli_factor,
    euler_factor,
    euler_poly,
    frobenius_euler_factor,
    frobenius_euler_poly,
    g_mixed,
    higher_bernoulli,
    mixed_factor,
    mixed_poly,
    one_minus_exp_neg,
    poly_bernoulli,
    poly_bernoulli_factor,
    polylog_series,
)
from .poly import Poly
from .rational import rat, rat_str
from .series import Series, series_div

FAMILIES = {
    # name: (parameters used, is polynomial family)
    "mixed": (("n", "r", "k"), True),
    "poly-bernoulli": (("n", "k"), True),
    "higher-bernoulli": (("n", "r"), True),
    "euler": (("n", "s"), True),
    "frobenius-euler": (("n", "s", "lambda"), True),
    "stirling1": (("n", "m"), False),
    "stirling2": (("n", "m"), False),
}

GENERATING_FUNCTIONS = {
    "exp": "e^t",
    "u": "1 - e^{-t}",
    "polylog": "Li_k(1 - e^{-t})",
    "polylog-reciprocal": "1 / Li_k(1 - e^{-t})  (Laurent: always exits 2)",
    "poly-bernoulli-factor": "Li_k(1 - e^{-t}) / (1 - e^{-t})",
    "bernoulli-factor": "(t / (e^t - 1))^r",
    "mixed-factor": "(t/(e^t - 1))^r Li_k(1 - e^{-t})/(1 - e^{-t}) = 1/g_{r,k}(t)",
    "g": "g_{r,k}(t)",
    "euler-factor": "((e^t + 1)/2)^s",
    "frobenius-euler-factor": "((e^t - lambda)/(1 - lambda))^s",
}

GOLDEN_NAME = "golden.json"


class UsageError(Exception):
    """Invalid user input; reported on stderr with exit code 2."""


def parse_range(text: str) -> tuple[int, int]:
    """``"A..B"`` or ``"A"`` -> inclusive (A, B)."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            bounds = (int(lo), int(hi))
        else:
            bounds = (int(text), int(text))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B or A, got {text!r}") from None
    return bounds


def parse_rat(text: str) -> Fraction:
    try:
        return rat(text)
    except (ValueError, ZeroDivisionError, TypeError):
        raise argparse.ArgumentTypeError(f"expected an exact rational p/q, got {text!r}") from None


# -- family evaluation -------------------------------------------------------


def evaluate(family: str, n: int, r: int = 0, k: int = 1, s: int = 0,
             lam: Optional[Fraction] = None, m: Optional[int] = None,
             at: Optional[Fraction] = None):
    if family not in FAMILIES:
        raise UsageError(f"unknown family {family!r}")
    if n < 0:
        raise UsageError("n must be >= 0")
    used, is_poly = FAMILIES[family]
    if at is not None and not is_poly:
        raise UsageError(f"--at is only valid for polynomial families, not {family}")
    if family == "mixed":
        return mixed_poly(n, r, k, at)
    if family == "poly-bernoulli":
        return poly_bernoulli(n, k, at)
    if family == "higher-bernoulli":
        return higher_bernoulli(n, r, at)
    if s < 0:
        raise UsageError("s must be >= 0")
    if family == "euler":
        return euler_poly(n, s, at)
    if family == "frobenius-euler":
        if lam is None:
            raise UsageError("frobenius-euler needs --lambda")
        if lam == 1:
            raise UsageError("lambda must differ from 1")
        return frobenius_euler_poly(n, s, lam, at)
    if m is None:
        raise UsageError(f"{family} needs -m")
    if family == "stirling1":
        return stirling1_unsigned(n, m)
    return stirling2(n, m)


def _row(family: str, params: dict, value) -> dict:
    row = {"family": family}
    row.update(params)
    row["value"] = value
    return row


def _params_for(family: str, n, r, k, s, lam, m, at) -> dict:
    used, _ = FAMILIES[family]
    out = {"n": n}
    for name, val in (("r", r), ("k", k), ("s", s), ("lambda", lam), ("m", m)):
        if name in used:
            out[name] = val
    if at is not None:
        out["at"] = at
    return out


def _value_json(value):
    return value.to_json() if isinstance(value, Poly) else rat_str(value)


def _value_plain(value) -> str:
    return str(value) if isinstance(value, Poly) else rat_str(value)


def _param_str(v) -> str:
    return rat_str(v) if isinstance(v, Fraction) else str(v)


def _row_json(row: dict) -> dict:
    return {
        key: (_value_json(val) if key == "value" else (_param_str(val) if isinstance(val, Fraction) else val))
        for key, val in row.items()
    }


def format_rows(rows: list[dict], fmt: str, single: bool) -> str:
    if fmt == "json":
        payload = _row_json(rows[0]) if single else [_row_json(r) for r in rows]
        return json.dumps(payload, sort_keys=True) + "\n"
    if fmt == "plain":
        if single:
            return _value_plain(rows[0]["value"]) + "\n"
        lines = []
        for row in rows:
            label = " ".join(f"{k}={_param_str(v)}" for k, v in row.items() if k not in ("family", "value"))
            lines.append(f"{label}: {_value_plain(row['value'])}")
        return "\n".join(lines) + "\n"
    buf = io.StringIO()
    keys = [k for k in rows[0] if k != "value"]
    is_poly = isinstance(rows[0]["value"], Poly)
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(keys + (["coeffs"] if is_poly else ["value"]))
    for row in rows:
        value = row["value"]
        cell = " ".join(rat_str(c) for c in value.coeffs) if is_poly else rat_str(value)
        writer.writerow([_param_str(row[k]) for k in keys] + [cell])
    return buf.getvalue()


def cmd_compute(args) -> str:
    value = evaluate(args.family, args.n, args.r, args.k, args.s, args.lam, args.m, args.at)
    params = _params_for(args.family, args.n, args.r, args.k, args.s, args.lam, args.m, args.at)
    return format_rows([_row(args.family, params, value)], args.format, single=True)


def cmd_table(args) -> str:
    used, _ = FAMILIES[args.family]
    ranges = {
        "n": args.n_range,
        "r": args.r_range or (args.r, args.r),
        "k": args.k_range or (args.k, args.k),
        "s": args.s_range or (args.s, args.s),
    }
    for name, (lo, hi) in ranges.items():
        if hi < lo:
            raise UsageError(f"empty range for {name}: {lo}..{hi}")
    if ranges["n"][0] < 0:
        raise UsageError("n must be >= 0")
    rows = []
    for n in range(ranges["n"][0], ranges["n"][1] + 1):
        if args.family in ("stirling1", "stirling2"):
            m_lo, m_hi = args.m_range or ((args.m, args.m) if args.m is not None else (0, n))
            if m_hi < m_lo:
                raise UsageError(f"empty range for m: {m_lo}..{m_hi}")
            for m in range(m_lo, m_hi + 1):
                value = evaluate(args.family, n, m=m)
                rows.append(_row(args.family, _params_for(args.family, n, 0, 1, 0, None, m, None), value))
            continue
        for r in range(ranges["r"][0], ranges["r"][1] + 1) if "r" in used else [args.r]:
            for k in range(ranges["k"][0], ranges["k"][1] + 1) if "k" in used else [args.k]:
                for s in range(ranges["s"][0], ranges["s"][1] + 1) if "s" in used else [args.s]:
                    value = evaluate(args.family, n, r, k, s, args.lam, None, args.at)
                    params = _params_for(args.family, n, r, k, s, args.lam, None, args.at)
                    rows.append(_row(args.family, params, value))
    if not rows:
        raise UsageError("table is empty")
    return format_rows(rows, args.format, single=False)


def build_series(name: str, N: int, r: int, k: int, s: int, lam: Optional[Fraction]) -> Series:
    if N < 1:
        raise UsageError("precision must be >= 1")
    if name == "exp":
        return Series.exp(N)
    if name == "polylog":
        return polylog_series(k, N)
    if name == "polylog-reciprocal":
        return series_div(Series.one(N), polylog_series(k, N))
    if name == "poly-bernoulli-factor":
        return poly_bernoulli_factor(k, N)
    if name == "bernoulli-factor":
        return bernoulli_factor(r, N)
    if name == "mixed-factor":
        return mixed_factor(r, k, N)
    if name == "g":
        return g_mixed(r, k, N)
    if name == "euler-factor":
        return euler_factor(s, N)
    if name == "frobenius-euler-factor":
        if lam is None or lam == 1:
            raise UsageError("frobenius-euler-factor needs --lambda different from 1")
        return frobenius_euler_factor(s, lam, N)
    if name == "u":
        return one_minus_exp_neg(N)
    raise UsageError(f"unknown generating function {name!r}")


def cmd_series(args) -> str:
    f = build_series(args.gf, args.precision, args.r, args.k, args.s, args.lam)
    if args.format == "json":
        return json.dumps(f.to_json(), sort_keys=True) + "\n"
    if args.format == "csv":
        lines = ["index,coeff"] + [f"{i},{rat_str(c)}" for i, c in enumerate(f.coeffs)]
        return "\n".join(lines) + "\n"
    return repr(f) + "\n"


# -- verify ------------------------------------------------------------------


def default_golden_path() -> Path:
    return Path(str(resources.files("umbralkit") / "data" / GOLDEN_NAME))


def load_golden(path: Optional[Path] = None) -> dict:
    path = path or default_golden_path()
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def golden_entry(report: identities.IdentityReport) -> dict:
    return {
        "status": report.status,
        "pass": report.pass_count,
        "fail": report.fail_count,
        "counterexamples": [c.params.to_json() for c in report.counterexamples],
    }


def compare_to_golden(reports, golden: dict, grid: identities.AuditGrid) -> list[str]:
    """Deviations of ``reports`` from the committed expectations.

    On the default grid every field must match. On any other grid only the
    direction that cannot be explained by the grid change is flagged: an
    identity that holds on the default grid must keep holding.
    """
    deviations = []
    expected = golden.get("identities", {})
    on_default = grid.to_json() == golden.get("grid")
    for rep in reports:
        entry = expected.get(rep.identity_id)
        if entry is None:
            deviations.append(f"{rep.identity_id}: no golden expectation recorded")
            continue
        if on_default:
            got = golden_entry(rep)
            if got != entry:
                deviations.append(f"{rep.identity_id}: expected {entry}, got {got}")
        elif entry["status"] == identities.HOLDS and rep.status != identities.HOLDS:
            deviations.append(f"{rep.identity_id}: holds on the default grid but failed here")
    return deviations


def cmd_verify(args) -> tuple[str, int]:
    if args.identity == "all":
        ids = identities.identity_ids()
    elif args.identity in identities.REGISTRY:
        ids = [args.identity]
    else:
        raise UsageError(
            f"unknown identity {args.identity!r}; known: all, " + ", ".join(identities.identity_ids())
        )
    grid = identities.AuditGrid(
        n_range=args.grid_n or identities.DEFAULT_GRID.n_range,
        r_range=args.grid_r or identities.DEFAULT_GRID.r_range,
        k_range=args.grid_k or identities.DEFAULT_GRID.k_range,
    )
    reports = identities.audit_all(grid, ids)
    text = identities.reports_to_json(reports)
    golden_path = Path(args.golden) if args.golden else default_golden_path()

    if args.regen_golden:
        if grid != identities.DEFAULT_GRID:
            raise UsageError("--regen-golden only works on the default grid")
        try:
            golden = load_golden(golden_path)
        except FileNotFoundError:
            golden = {}
        golden["grid"] = grid.to_json()
        entries = golden.setdefault("identities", {})
        for rep in reports:
            entries[rep.identity_id] = golden_entry(rep)
        golden["identities"] = dict(sorted(entries.items()))
        golden_path.write_text(json.dumps(golden, indent=2, sort_keys=True) + "\n", encoding="utf-8")
        deviations = []
    else:
        deviations = compare_to_golden(reports, load_golden(golden_path), grid)

    for rep in reports:
        print(
            f"{rep.identity_id:18s} {rep.status:26s} pass={rep.pass_count} fail={rep.fail_count}",
            file=sys.stderr,
        )
    for d in deviations:
        print(f"DEVIATION {d}", file=sys.stderr)

    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        text = ""
    return text, 1 if deviations else 0


# -- argument parsing -------------------------------------------------------------


def _add_family_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("-r", type=int, default=0, help="Bernoulli order r (any integer)")
    p.add_argument("-k", type=int, default=1, help="polylogarithm index k (any integer)")
    p.add_argument("-s", type=int, default=0, help="Euler / Frobenius-Euler order s >= 0")
    p.add_argument("-m", type=int, default=None, help="column index for Stirling families")
    p.add_argument("--lambda", dest="lam", type=parse_rat, default=None,
                   help="Frobenius-Euler parameter p/q, != 1")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="umbralkit",
        description="Exact higher-order Bernoulli / poly-Bernoulli mixed-type polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="one family value")
    p.add_argument("--family", required=True, choices=sorted(FAMILIES))
    p.add_argument("-n", type=int, required=True)
    _add_family_params(p)
    p.add_argument("--at", type=parse_rat, default=None, help="evaluate at a rational point")
    p.add_argument("--format", choices=("plain", "json", "csv"), default="plain")

    p = sub.add_parser("table", help="family values over parameter ranges")
    p.add_argument("--family", required=True, choices=sorted(FAMILIES))
    p.add_argument("--n-range", type=parse_range, required=True, metavar="A..B")
    p.add_argument("--r-range", type=parse_range, default=None, metavar="A..B")
    p.add_argument("--k-range", type=parse_range, default=None, metavar="A..B")
    p.add_argument("--s-range", type=parse_range, default=None, metavar="A..B")
    p.add_argument("--m-range", type=parse_range, default=None, metavar="A..B")
    _add_family_params(p)
    p.add_argument("--at", type=parse_rat, default=None)
    p.add_argument("--format", choices=("plain", "json", "csv"), default="csv")

    p = sub.add_parser("verify", help="audit identities against the golden expectations")
    p.add_argument("identity", nargs="?", default="all")
    p.add_argument("--grid-n", type=parse_range, default=None, metavar="A..B")
    p.add_argument("--grid-r", type=parse_range, default=None, metavar="A..B")
    p.add_argument("--grid-k", type=parse_range, default=None, metavar="A..B")
    p.add_argument("--out", default=None, help="write the report JSON here instead of stdout")
    p.add_argument("--golden", default=None, help=argparse.SUPPRESS)
    p.add_argument("--regen-golden", action="store_true",
                   help="rewrite the golden expectations from this run")

    p = sub.add_parser("series", help="truncated generating function")
    p.add_argument("--gf", required=True, choices=sorted(GENERATING_FUNCTIONS))
    p.add_argument("--precision", type=int, required=True)
    _add_family_params(p)
    p.add_argument("--format", choices=("plain", "json", "csv"), default="json")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits on bad input and on --help; report its code instead
        return exc.code if isinstance(exc.code, int) else 2
    try:
        if args.command == "compute":
            out, code = cmd_compute(args), 0
        elif args.command == "table":
            out, code = cmd_table(args), 0
        elif args.command == "series":
            out, code = cmd_series(args), 0
        else:
            out, code = cmd_verify(args)
    except (UsageError, UmbralError, ValueError) as exc:
        print(f"umbralkit: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
