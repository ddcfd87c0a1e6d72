"""Command-line front end.

Subcommands: `fit` (CSV -> fitted model JSON), `derive` (model -> production
function JSON with an invariance check), `check` (model + function ->
constancy report and plot-ready table), `simulate` (model -> trajectory CSV)
and `export` (CSV -> normalized CSV).

Output is deterministic: JSON keys are emitted in a fixed order and all
floats are printed with 17 significant digits, which is lossless for binary
64-bit floats, so reports can be fed back into other subcommands without
drift.  Exit codes: 0 success, 1 failed check, 2 usage error, 3 data or
parse error, 4 math or degeneracy error.  Set PRODFN_LOG=debug|info|warning
for diagnostics on stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import os
import sys
import warnings

import numpy as np

from .core import (
    CES,
    CobbDouglas,
    DomainError,
    ExponentialModel,
    Factor,
    GeneralizedCES,
    PowerLaw,
    ProductionFunction,
    evaluate,
    trajectory,
)
from .fit import SeriesAlignmentError, fit_system
from .ingest import CsvFormatError, load_series, normalize_base100, write_series
from .invariants import (
    DegenerateRateError,
    NotReducibleError,
    ces_like_member,
    ces_reduction,
    cobb_douglas_member,
    constancy_check,
    crs_elasticities,
    fundamental_invariant_K,
    fundamental_invariant_L,
)
from .modelspec import ModelSpecError, parse_model, to_model

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_DATA = 3
EXIT_MATH = 4

DEFAULT_HORIZON = 24.0  # years; matches the span of classic annual index data
DEFAULT_STEP = 0.25
DEFAULT_TOL = 1e-9

FAMILIES = ("cobb-douglas", "ces-like", "ces", "fundamental")


class InputFormatError(CsvFormatError):
    """A JSON input file does not match the documented report schema."""


# ---------------------------------------------------------------------------
# deterministic JSON emission


def _fmt_float(x: float) -> str:
    if math.isnan(x) or math.isinf(x):
        raise ValueError(f"cannot serialize non-finite float {x!r}")
    return format(x, ".17g")


def emit_json(obj, indent: int = 0) -> str:
    """Serialize to JSON with insertion-ordered keys and %.17g floats."""
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(k)}: {emit_json(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + f"\n{pad}}}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [f"{inner}{emit_json(v, indent + 1)}" for v in obj]
        return "[\n" + ",\n".join(items) + f"\n{pad}]"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt_float(float(obj))
    if isinstance(obj, str):
        return json.dumps(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


# ---------------------------------------------------------------------------
# wire formats


def model_to_dict(model: ExponentialModel) -> dict:
    return {
        "b1": model.b1,
        "b2": model.b2,
        "b3": model.b3,
        "ln_L0": model.ln_L0,
        "ln_K0": model.ln_K0,
        "ln_Y0": model.ln_Y0,
        "base_year": model.base_year,
    }


def model_from_dict(obj: dict) -> ExponentialModel:
    if not isinstance(obj, dict):
        raise InputFormatError("model JSON must be an object")
    try:
        return ExponentialModel(
            b1=float(obj["b1"]),
            b2=float(obj["b2"]),
            b3=float(obj["b3"]),
            ln_L0=float(obj["ln_L0"]),
            ln_K0=float(obj["ln_K0"]),
            ln_Y0=float(obj["ln_Y0"]),
            base_year=int(obj.get("base_year", 0)),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise InputFormatError(f"bad model JSON: {exc}") from None


def function_to_dict(fn: ProductionFunction) -> dict:
    if isinstance(fn, PowerLaw):
        return {
            "type": "power-law",
            "input": fn.input.value,
            "coeff": fn.coeff,
            "exponent": fn.exponent,
        }
    if isinstance(fn, CobbDouglas):
        return {"type": "cobb-douglas", "A": fn.A, "alpha": fn.alpha, "beta": fn.beta}
    if isinstance(fn, GeneralizedCES):
        return {
            "type": "generalized-ces",
            "cK": fn.cK,
            "cL": fn.cL,
            "alpha": fn.alpha,
            "eK": fn.eK,
            "eL": fn.eL,
            "outer": fn.outer,
        }
    if isinstance(fn, CES):
        return {
            "type": "ces",
            "A": fn.A,
            "alpha": fn.alpha,
            "p": fn.p,
            "v": fn.v,
            "sigma": fn.sigma,
        }
    raise TypeError(f"not a production function: {fn!r}")


def function_from_dict(obj: dict) -> ProductionFunction:
    if not isinstance(obj, dict):
        raise InputFormatError("function JSON must be an object")
    if "function" in obj and isinstance(obj["function"], dict):
        obj = obj["function"]  # accept a whole derive report
    elif "functions" in obj:
        raise InputFormatError(
            "this derive report holds several functions; pass one entry's "
            "\"function\" object instead"
        )
    kind = obj.get("type")
    try:
        if kind == "power-law":
            return PowerLaw(
                coeff=float(obj["coeff"]),
                exponent=float(obj["exponent"]),
                input=Factor(obj["input"]),
            )
        if kind == "cobb-douglas":
            return CobbDouglas(A=float(obj["A"]), alpha=float(obj["alpha"]), beta=float(obj["beta"]))
        if kind == "generalized-ces":
            return GeneralizedCES(
                cK=float(obj["cK"]),
                cL=float(obj["cL"]),
                alpha=float(obj["alpha"]),
                eK=float(obj["eK"]),
                eL=float(obj["eL"]),
                outer=float(obj["outer"]),
            )
        if kind == "ces":
            # sigma, when present, is informational and recomputed from p
            return CES(A=float(obj["A"]), alpha=float(obj["alpha"]), p=float(obj["p"]), v=float(obj["v"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputFormatError(f"bad function JSON: {exc}") from None
    raise InputFormatError(f"unknown function type {kind!r}")


def diagnostics_to_dict(diag) -> dict:
    return {
        "slope": diag.slope,
        "intercept": diag.intercept,
        "r_squared": diag.r_squared,
        "residual_max_abs": diag.residual_max_abs,
        "n_points": diag.n_points,
    }


# ---------------------------------------------------------------------------
# input loading helpers


def _read_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"{path}: not valid JSON ({exc})") from None


def load_model_source(path: str, *, kind: str = "auto") -> ExponentialModel:
    """Load a model from a fit-report JSON file or a model text file.

    kind="auto" sniffs the content: valid JSON is treated as a fit report or
    bare model object, anything else as model text.
    """
    if kind == "fit-json" or kind == "auto":
        try:
            obj = _read_json(path)
        except InputFormatError:
            if kind == "fit-json":
                raise
        else:
            if isinstance(obj, dict) and "model" in obj:
                obj = obj["model"]
            return model_from_dict(obj)
    with open(path, "r", encoding="utf-8") as fh:
        return to_model(parse_model(fh.read()))


def _parse_grid(spec: str) -> np.ndarray:
    """Parse 'start:stop:step' into an inclusive, nonempty time grid."""
    parts = spec.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"grid must be START:STOP:STEP, got {spec!r}")
    try:
        start, stop, step = (float(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid must be numeric, got {spec!r}") from None
    if step <= 0.0 or stop < start:
        raise argparse.ArgumentTypeError("grid needs STOP >= START and STEP > 0")
    n = int(math.floor((stop - start) / step + 1e-9)) + 1
    return start + step * np.arange(n)


# ---------------------------------------------------------------------------
# subcommands


def cmd_fit(args) -> int:
    series = load_series(
        args.csv,
        year_col=args.year_col,
        value_cols=[args.labor_col, args.capital_col, args.output_col],
    )
    if args.normalize:
        series = [normalize_base100(s) for s in series]
    model, (diag_l, diag_k, diag_y) = fit_system(*series)
    report = {
        "model": model_to_dict(model),
        "diagnostics": {
            "labor": diagnostics_to_dict(diag_l),
            "capital": diagnostics_to_dict(diag_k),
            "output": diagnostics_to_dict(diag_y),
        },
    }
    print(emit_json(report))
    return EXIT_OK


def _default_alpha(model: ExponentialModel, notes: list[str]) -> float:
    between = model.b1 < model.b3 < model.b2 or model.b2 < model.b3 < model.b1
    if model.b1 != model.b2 and between:
        alpha, _ = crs_elasticities(model)
        return alpha
    notes.append(
        "b3 is not strictly between b1 and b2, so no constant-returns share "
        "exists in (0, 1); defaulting alpha to 0.5"
    )
    return 0.5


def cmd_derive(args) -> int:
    if args.from_fit:
        model = load_model_source(args.from_fit, kind="fit-json")
    else:
        with open(args.from_spec, "r", encoding="utf-8") as fh:
            model = to_model(parse_model(fh.read()))

    notes: list[str] = []
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        alpha = args.alpha if args.alpha is not None else _default_alpha(model, notes)

        if args.family == "fundamental":
            fns = [fundamental_invariant_L(model), fundamental_invariant_K(model)]
        elif args.family == "cobb-douglas":
            fns = [cobb_douglas_member(model, alpha)]
        elif args.family == "ces-like":
            fns = [ces_like_member(model, alpha)]
        else:
            fns = [ces_reduction(model, alpha, tol=args.tol)]

        crs = None
        if model.b1 != model.b2:
            a, b = crs_elasticities(model)
            crs = {"alpha": a, "beta": b}

        grid = np.arange(0.0, args.horizon + DEFAULT_STEP / 2.0, DEFAULT_STEP)
        checks = [constancy_check(fn, model, grid) for fn in fns]

    messages = notes + [str(w.message) for w in caught]

    report: dict = {"family": args.family}
    report["alpha"] = None if args.family == "fundamental" else alpha
    if args.family == "fundamental":
        report["functions"] = [
            {
                "function": function_to_dict(fn),
                "constancy": {
                    "horizon": args.horizon,
                    "step": DEFAULT_STEP,
                    "max_relative_deviation": dev,
                },
            }
            for fn, dev in zip(fns, checks)
        ]
    else:
        report["function"] = function_to_dict(fns[0])
        report["constancy"] = {
            "horizon": args.horizon,
            "step": DEFAULT_STEP,
            "max_relative_deviation": checks[0],
        }
    report["crs"] = crs
    report["warnings"] = messages
    report["model"] = model_to_dict(model)
    print(emit_json(report))
    return EXIT_OK


def cmd_check(args) -> int:
    model = load_model_source(args.model)
    fn = function_from_dict(_read_json(args.function))
    t = args.grid

    max_dev = constancy_check(fn, model, t)
    L, K, Y = trajectory(model, t)
    y_fn = np.asarray(evaluate(fn, L, K))
    rel = np.abs(y_fn - Y) / Y

    if args.table:
        with open(args.table, "w", encoding="utf-8", newline="") as fh:
            fh.write("t,Y_model,Y_fn,rel_dev\n")
            for row in zip(t, np.asarray(Y), y_fn, rel):
                fh.write(",".join(_fmt_float(float(x)) for x in row) + "\n")

    report = {
        "grid": {
            "start": float(t[0]),
            "stop": float(t[-1]),
            "step": float(t[1] - t[0]) if len(t) > 1 else 0.0,
            "n": int(len(t)),
        },
        "tol": args.tol,
        "max_relative_deviation": max_dev,
        "pass": bool(max_dev <= args.tol),
    }
    print(emit_json(report))
    return EXIT_OK if max_dev <= args.tol else EXIT_CHECK_FAILED


def cmd_simulate(args) -> int:
    model = load_model_source(args.model)
    t = args.grid
    L, K, Y = trajectory(model, t)
    out = sys.stdout
    out.write("t,L,K,Y\n")
    for row in zip(t, np.asarray(L), np.asarray(K), np.asarray(Y)):
        out.write(",".join(_fmt_float(float(x)) for x in row) + "\n")
    return EXIT_OK


def cmd_export(args) -> int:
    series = load_series(args.csv, year_col=args.year_col, value_cols=args.value_col)
    if args.normalize:
        series = [normalize_base100(s) for s in series]
    if args.out:
        write_series(series, args.out)
    else:
        write_series(series, sys.stdout)
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing and dispatch


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prodfn",
        description="Fit exponential growth systems and derive production functions as their invariants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_fit = sub.add_parser("fit", help="fit an exponential model to CSV index series")
    p_fit.add_argument("--csv", required=True, help="input CSV path")
    p_fit.add_argument("--year-col", required=True, help="name of the year column")
    p_fit.add_argument("--labor-col", required=True, help="column with the labor index")
    p_fit.add_argument("--capital-col", required=True, help="column with the capital index")
    p_fit.add_argument("--output-col", required=True, help="column with the output index")
    p_fit.add_argument(
        "--normalize", action="store_true", help="rescale each series to a base-100 index first"
    )
    p_fit.set_defaults(func=cmd_fit)

    p_derive = sub.add_parser("derive", help="derive a production function from a model")
    src = p_derive.add_mutually_exclusive_group(required=True)
    src.add_argument("--from-fit", help="JSON report produced by 'prodfn fit'")
    src.add_argument("--from-spec", help="model text file")
    p_derive.add_argument("--family", required=True, choices=FAMILIES)
    p_derive.add_argument(
        "--alpha",
        type=float,
        default=None,
        help="share parameter in (0,1); default is the constant-returns value when it exists",
    )
    p_derive.add_argument(
        "--tol", type=float, default=DEFAULT_TOL, help="tolerance of the CES reducibility gate"
    )
    p_derive.add_argument(
        "--horizon",
        type=float,
        default=DEFAULT_HORIZON,
        help="invariance is checked on t in [0, horizon] years",
    )
    p_derive.set_defaults(func=cmd_derive)

    p_check = sub.add_parser("check", help="verify a function stays on a model's trajectory")
    p_check.add_argument("--model", required=True, help="fit JSON or model text file")
    p_check.add_argument("--function", required=True, help="function JSON (or derive report)")
    p_check.add_argument("--grid", required=True, type=_parse_grid, help="time grid START:STOP:STEP")
    p_check.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p_check.add_argument("--table", help="also write a CSV table (t,Y_model,Y_fn,rel_dev) here")
    p_check.set_defaults(func=cmd_check)

    p_sim = sub.add_parser("simulate", help="print the closed-form trajectory as CSV")
    p_sim.add_argument("--model", required=True, help="fit JSON or model text file")
    p_sim.add_argument("--grid", required=True, type=_parse_grid, help="time grid START:STOP:STEP")
    p_sim.set_defaults(func=cmd_simulate)

    p_exp = sub.add_parser("export", help="re-serialize (optionally normalized) CSV series")
    p_exp.add_argument("--csv", required=True, help="input CSV path")
    p_exp.add_argument("--year-col", required=True)
    p_exp.add_argument(
        "--value-col", action="append", required=True, help="value column; repeatable"
    )
    p_exp.add_argument("--normalize", action="store_true")
    p_exp.add_argument("--out", help="output path (default: stdout)")
    p_exp.set_defaults(func=cmd_export)

    return parser


def _configure_logging() -> None:
    level_name = os.environ.get("PRODFN_LOG", "").strip().upper()
    if level_name:
        level = getattr(logging, level_name, None)
        if isinstance(level, int):
            logging.basicConfig(stream=sys.stderr, level=level)


def _error(kind: str, message: str, code: int) -> int:
    sys.stderr.write(json.dumps({"error": {"type": kind, "message": message}}) + "\n")
    return code


def main(argv=None) -> int:
    _configure_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ModelSpecError, CsvFormatError, SeriesAlignmentError) as exc:
        return _error(type(exc).__name__, str(exc), EXIT_DATA)
    except FileNotFoundError as exc:
        return _error("FileNotFoundError", str(exc), EXIT_DATA)
    except (DomainError, DegenerateRateError, NotReducibleError, OverflowError) as exc:
        return _error(type(exc).__name__, str(exc), EXIT_MATH)


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
