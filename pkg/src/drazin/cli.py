"""Command-line front end with JSON matrix files and machine-readable reports.

Matrices travel as JSON objects

    {"rows": 2, "cols": 2, "entries": [[re, im], [re, im], ...]}

with the entries flattened row by row; each component is an integer or a
"p/q" string, and output components are always strings so every scalar
survives a round trip exactly.  Polynomial results carry their coefficient
matrices under the same schema next to a variable tag.

One subcommand exists per library operation.  Reports land on stdout as
JSON (or aligned text with --emit text) and include the index profile,
the minor-sum denominator, restriction flags, and the intermediate
vectors of the two-sided solver, so agreement between representations
can be checked from the command line alone.  Failures produce a report
with an "error" object and a distinct exit status per failure class:
2 for unreadable input, 3 for the dimension guard, 4 for a group-inverse
request on a matrix of higher index, 5 for shape mismatches, 1 otherwise.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .inverses import (
    GroupIndexError,
    drazin_col,
    drazin_oracle,
    drazin_row,
    group_inverse,
    index_of,
    verify_drazin,
)
from .matrices import (
    CMatrix,
    DimensionLimitError,
    ShapeError,
    max_dimension,
    set_max_dimension,
)
from .minors import sum_principal_minors
from .ode import MatrixPolynomial, ode_left_partial, ode_right_partial
from .scalars import ONE, GaussianRational
from .solvers import solve_ax, solve_axb, solve_xa

EXIT_OTHER = 1
EXIT_PARSE = 2
EXIT_DIMENSION = 3
EXIT_GROUP_INDEX = 4
EXIT_SHAPE = 5

ENV_MAX_DIM = "DRAZIN_MAX_DIM"


class InputError(ValueError):
    """A matrix file or option could not be read as specified."""


def _component_from_json(value) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise InputError(
            "matrix components must be integers or 'p/q' strings, got %r"
            % (value,)
        )
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError("bad rational component %r: %s" % (value, exc))


def matrix_from_json(obj) -> CMatrix:
    """Build a matrix from the JSON schema, validating every field."""
    if not isinstance(obj, dict):
        raise InputError("a matrix must be a JSON object")
    try:
        rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
    except KeyError as exc:
        raise InputError("matrix object lacks the %s field" % exc)
    if not (isinstance(rows, int) and isinstance(cols, int)) or rows < 1 or cols < 1:
        raise InputError("rows and cols must be positive integers")
    if not isinstance(entries, list) or len(entries) != rows * cols:
        raise InputError("expected %d entries, got %r" % (rows * cols, entries))
    scalars = []
    for pair in entries:
        if not isinstance(pair, list) or len(pair) != 2:
            raise InputError("each entry must be a [re, im] pair, got %r" % (pair,))
        scalars.append(
            GaussianRational(
                _component_from_json(pair[0]), _component_from_json(pair[1])
            )
        )
    data = [scalars[i * cols : (i + 1) * cols] for i in range(rows)]
    return CMatrix(data)


def matrix_to_json(m: CMatrix) -> dict:
    entries = [
        [str(m.entry(i, j).re), str(m.entry(i, j).im)]
        for i in range(1, m.rows + 1)
        for j in range(1, m.cols + 1)
    ]
    return {"rows": m.rows, "cols": m.cols, "entries": entries}


def load_matrix(path: str) -> CMatrix:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            payload = json.load(handle)
    except OSError as exc:
        raise InputError("cannot read %s: %s" % (path, exc))
    except json.JSONDecodeError as exc:
        raise InputError("%s is not valid JSON: %s" % (path, exc))
    return matrix_from_json(payload)


def _jsonify(value):
    if isinstance(value, CMatrix):
        return matrix_to_json(value)
    if isinstance(value, MatrixPolynomial):
        return {
            "variable": value.variable,
            "rows": value.rows,
            "cols": value.cols,
            "coefficients": [matrix_to_json(c) for c in value.coefficients],
        }
    if isinstance(value, GaussianRational):
        return [str(value.re), str(value.im)]
    if isinstance(value, (tuple, list)):
        return [_jsonify(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonify(v) for k, v in value.items()}
    return value


def _plain(value) -> str:
    if isinstance(value, (tuple, list)):
        return "(%s)" % ", ".join(_plain(v) for v in value)
    return str(value)


def _textify(report: dict) -> str:
    lines = []
    for key, value in report.items():
        if isinstance(value, (CMatrix, MatrixPolynomial)):
            lines.append("%s:" % key)
            lines.extend("  " + line for line in str(value).splitlines())
        elif isinstance(value, dict):
            lines.append("%s:" % key)
            for sub, inner in value.items():
                if isinstance(inner, (CMatrix, MatrixPolynomial)):
                    lines.append("  %s:" % sub)
                    lines.extend(
                        "    " + line for line in str(inner).splitlines()
                    )
                else:
                    lines.append("  %s: %s" % (sub, _plain(inner)))
        else:
            lines.append("%s: %s" % (key, _plain(value)))
    return "\n".join(lines)


def _profile_dict(profile) -> dict:
    return {"index": profile.k, "rank": profile.r}


def _denominator_of(a: CMatrix):
    profile = index_of(a)
    if profile.r == 0:
        return profile, ONE
    den = sum_principal_minors(a ** (profile.k + 1), profile.r)
    return profile, den


def _run_drazin(args) -> dict:
    a = load_matrix(args.input)
    methods = (
        ("column", "row", "oracle") if args.method == "all" else (args.method,)
    )
    results = {}
    profile = None
    denominator = None
    for name in methods:
        if name == "column":
            outcome = drazin_col(a)
            results[name] = outcome.inverse
            profile, denominator = outcome.profile, outcome.denominator
        elif name == "row":
            outcome = drazin_row(a)
            results[name] = outcome.inverse
            profile, denominator = outcome.profile, outcome.denominator
        else:
            results[name] = drazin_oracle(a)
    if profile is None:
        profile, denominator = _denominator_of(a)
    report = {
        "command": "drazin",
        "profile": _profile_dict(profile),
        "denominator": denominator,
        "methods": results,
        "inverse": results[methods[0]],
    }
    if len(results) > 1:
        first = results[methods[0]]
        report["methods_agree"] = all(m == first for m in results.values())
    return report


def _run_group(args) -> dict:
    a = load_matrix(args.input)
    outcome = group_inverse(a)
    return {
        "command": "group",
        "profile": _profile_dict(outcome.profile),
        "denominator": outcome.denominator,
        "inverse": outcome.inverse,
    }


def _solve_report(command: str, report) -> dict:
    out = {
        "command": command,
        "x": report.x,
        "restriction_satisfied": report.restriction_satisfied,
        "profile_a": _profile_dict(report.profile_a),
        "denominator": report.denominator,
    }
    if report.profile_b is not None:
        out["profile_b"] = _profile_dict(report.profile_b)
        out["db_columns"] = report.db_columns
        out["da_rows"] = report.da_rows
    return out


def _run_solve_ax(args) -> dict:
    return _solve_report("solve-ax", solve_ax(load_matrix(args.A), load_matrix(args.B)))


def _run_solve_xa(args) -> dict:
    return _solve_report("solve-xa", solve_xa(load_matrix(args.A), load_matrix(args.B)))


def _run_solve_axb(args) -> dict:
    report = solve_axb(load_matrix(args.A), load_matrix(args.B), load_matrix(args.D))
    return _solve_report("solve-axb", report)


def _run_ode(command: str, args) -> dict:
    a = load_matrix(args.A)
    b = load_matrix(args.B)
    solver = ode_left_partial if command == "ode-left" else ode_right_partial
    solution = solver(a, b)
    profile, denominator = _denominator_of(a)
    return {
        "command": command,
        "solution": solution,
        "profile": _profile_dict(profile),
        "denominator": denominator,
    }


def _run_verify(args) -> dict:
    axioms = verify_drazin(load_matrix(args.A), load_matrix(args.X))
    return {
        "command": "verify",
        "axioms": {
            "power_left": axioms.power_left,
            "outer": axioms.outer,
            "commute": axioms.commute,
            "power_right": axioms.power_right,
        },
        "all_hold": axioms.all_hold,
    }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="drazin",
        description="Exact generalized inverses and restricted-equation solvers.",
    )
    parser.add_argument(
        "--max-dimension",
        type=int,
        default=None,
        help="combinatorial size guard (overrides %s)" % ENV_MAX_DIM,
    )
    parser.add_argument(
        "--emit",
        choices=("json", "text"),
        default="json",
        help="report format, json unless told otherwise",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    one = sub.add_parser("drazin", help="Drazin inverse of a square matrix")
    one.add_argument("--input", required=True, help="matrix JSON file")
    one.add_argument(
        "--method",
        choices=("column", "row", "oracle", "all"),
        default="all",
        help="which representation to evaluate",
    )
    one.set_defaults(handler=_run_drazin)

    grp = sub.add_parser("group", help="group inverse (index at most 1)")
    grp.add_argument("--input", required=True, help="matrix JSON file")
    grp.set_defaults(handler=_run_group)

    for name, handler, wants in (
        ("solve-ax", _run_solve_ax, "AB"),
        ("solve-xa", _run_solve_xa, "AB"),
        ("solve-axb", _run_solve_axb, "ABD"),
    ):
        cmd = sub.add_parser(name, help="solve the %s system" % name[6:].upper())
        cmd.add_argument("--A", required=True, help="coefficient matrix file")
        if "B" in wants:
            cmd.add_argument("--B", required=True, help="matrix file")
        if "D" in wants:
            cmd.add_argument("--D", required=True, help="right-hand side file")
        cmd.set_defaults(handler=handler)

    for name in ("ode-left", "ode-right"):
        side = "X' + AX = B" if name == "ode-left" else "X' + XA = B"
        cmd = sub.add_parser(name, help="polynomial solution of %s" % side)
        cmd.add_argument("--A", required=True, help="coefficient matrix file")
        cmd.add_argument("--B", required=True, help="right-hand side file")
        cmd.set_defaults(handler=lambda args, _n=name: _run_ode(_n, args))

    ver = sub.add_parser("verify", help="check the defining axioms for a candidate")
    ver.add_argument("--A", required=True, help="matrix file")
    ver.add_argument("--X", required=True, help="candidate inverse file")
    ver.set_defaults(handler=_run_verify)
    return parser


def _resolve_limit(args) -> int:
    if args.max_dimension is not None:
        limit = args.max_dimension
        source = "--max-dimension"
    else:
        raw = os.environ.get(ENV_MAX_DIM)
        if raw is None:
            return max_dimension()
        source = ENV_MAX_DIM
        try:
            limit = int(raw)
        except ValueError:
            raise InputError("%s must be an integer, got %r" % (ENV_MAX_DIM, raw))
    if limit < 1:
        raise InputError("%s must be a positive integer, got %d" % (source, limit))
    return limit


def _emit(report: dict, mode: str) -> None:
    if mode == "json":
        print(json.dumps(_jsonify(report), indent=2))
    else:
        print(_textify(report))


_ERROR_KINDS = (
    (InputError, "parse", EXIT_PARSE),
    (DimensionLimitError, "dimension", EXIT_DIMENSION),
    (GroupIndexError, "group-index", EXIT_GROUP_INDEX),
    (ShapeError, "shape", EXIT_SHAPE),
)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    previous = max_dimension()
    try:
        set_max_dimension(_resolve_limit(args))
        report = args.handler(args)
    except Exception as exc:  # noqa: BLE001 - every failure becomes a report
        for kind_type, kind, code in _ERROR_KINDS:
            if isinstance(exc, kind_type):
                break
        else:
            kind, code = "other", EXIT_OTHER
        _emit(
            {"command": args.command, "error": {"kind": kind, "message": str(exc)}},
            args.emit,
        )
        return code
    finally:
        set_max_dimension(previous)
    _emit(report, args.emit)
    return 0


if __name__ == "__main__":
    sys.exit(main())
