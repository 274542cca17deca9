"""Command-line interface.

Subcommands map one-to-one onto library entry points and print JSON
(CSV for survey). Exit codes: 0 success, 2 invalid input, 1 a
constructed object failed its own verification.
"""

from __future__ import annotations

import argparse
import json
import sys

from .designs import (
    DesignParams,
    construct_integral_design,
    find_t_design_fp,
    integral_design_exists,
    poset_X,
)
from .h1 import brute_force_h1, classify, survey, survey_csv
from .hemmer import (
    SelfCheckError,
    construct_auto,
    construct_base_case,
    construct_james,
    construct_pointed,
    find_hemmer_by_solver,
    verify_hemmer,
)
from .tabloid import element_from_json, element_to_json

__all__ = ["main", "build_parser"]


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="spechtdesigns",
        description="Exact tabloid designs, spectra, and H^1 verification mod p",
    )
    ap.add_argument("--pretty", action="store_true", help="indent JSON output")
    sub = ap.add_subparsers(dest="command", required=True)

    def shape_args(sp):
        sp.add_argument("--a", type=int, required=True, help="first row length")
        sp.add_argument("--b", type=int, required=True, help="second row length")
        sp.add_argument("--p", type=int, required=True, help="odd prime modulus")

    sp = sub.add_parser("classify", help="kind of (a, b) mod p")
    shape_args(sp)

    sp = sub.add_parser("construct", help="build a certified element")
    shape_args(sp)
    sp.add_argument(
        "--method",
        choices=["auto", "base", "james", "pointed", "solve"],
        default="auto",
    )
    sp.add_argument("--out", help="write element JSON to this file")

    sp = sub.add_parser("verify", help="check the three conditions for an element")
    sp.add_argument("--file", required=True, help="element JSON file")

    sp = sub.add_parser("design", help="find a design with constant level sums")
    sp.add_argument("--g", type=int, required=True, help="ground set size")
    sp.add_argument("--b", type=int, required=True, help="block size")
    sp.add_argument("--t", type=int, required=True, help="strength")
    sp.add_argument("--mode", choices=["fp", "integral"], default="fp")
    sp.add_argument("--p", type=int, help="odd prime modulus (fp mode)")
    sp.add_argument("--target", type=int, default=1, help="level-t constant (fp mode)")
    sp.add_argument(
        "--mu", type=_int_list, help="level constants mu_0..mu_t (integral mode)"
    )

    sp = sub.add_parser("poset", help="digit-compatible levels and components")
    shape_args(sp)

    sp = sub.add_parser("h1dim", help="brute-force quotient dimension")
    shape_args(sp)
    sp.add_argument("--budget", type=int, default=4000)

    sp = sub.add_parser("survey", help="CSV of brute force vs prediction")
    sp.add_argument("--nmax", type=int, required=True, help="max a + b")
    sp.add_argument("--p", type=_int_list, required=True, help="primes, e.g. 3,5")
    sp.add_argument("--budget", type=int, default=4000)
    sp.add_argument("--out", help="write CSV to this file")

    return ap


def _emit(args, payload: dict) -> None:
    indent = 2 if args.pretty else None
    print(json.dumps(payload, indent=indent))


def _cmd_classify(args) -> None:
    _emit(args, classify(args.a, args.b, args.p).to_json())


def _cmd_construct(args) -> None:
    builders = {
        "auto": construct_auto,
        "base": construct_base_case,
        "james": construct_james,
        "pointed": construct_pointed,
    }
    if args.method == "solve":
        u = find_hemmer_by_solver(args.a, args.b, args.p)
        if u is None:
            raise ValueError(
                f"no qualifying element exists for (a={args.a}, b={args.b}) mod {args.p}"
            )
    else:
        u = builders[args.method](args.a, args.b, args.p)
    doc = element_to_json(u)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2 if args.pretty else None)
            fh.write("\n")
    else:
        _emit(args, doc)


def _cmd_verify(args) -> None:
    with open(args.file, encoding="utf-8") as fh:
        doc = json.load(fh)
    u = element_from_json(doc)
    _emit(args, verify_hemmer(u).to_json())


def _cmd_design(args) -> None:
    if args.mode == "fp":
        if args.p is None:
            raise ValueError("fp mode needs --p")
        u = find_t_design_fp(DesignParams(args.g, args.b, args.t, args.p), args.target)
        if u is None:
            _emit(args, {"exists": False})
        else:
            _emit(args, {"exists": True, "element": element_to_json(u)})
    else:
        if args.mu is None:
            raise ValueError("integral mode needs --mu with t + 1 values")
        ratio_ok = integral_design_exists(args.g, args.b, args.t, args.mu)
        design = construct_integral_design(args.g, args.b, args.t, args.mu)
        out: dict = {"ratio_ok": ratio_ok, "exists": design is not None}
        if design is not None:
            out["coeffs"] = list(design.coeffs)
        _emit(args, out)


def _cmd_poset(args) -> None:
    _emit(args, poset_X(args.a, args.b, args.p).to_json())


def _cmd_h1dim(args) -> None:
    _emit(args, brute_force_h1(args.a, args.b, args.p, budget=args.budget).to_json())


def _cmd_survey(args) -> None:
    text = survey_csv(survey(args.nmax, args.p, budget=args.budget))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


_HANDLERS = {
    "classify": _cmd_classify,
    "construct": _cmd_construct,
    "verify": _cmd_verify,
    "design": _cmd_design,
    "poset": _cmd_poset,
    "h1dim": _cmd_h1dim,
    "survey": _cmd_survey,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        _HANDLERS[args.command](args)
    except (SelfCheckError, AssertionError) as exc:
        print(f"self-check failed: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
