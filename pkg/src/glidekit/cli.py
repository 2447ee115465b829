"""Command line interface: one subcommand per operation, JSON in and out.

All output is a single JSON document on stdout with a top-level schema tag;
rationals are "p/q" strings.  Exit codes: 0 success, 1 domain error, 2 usage
error.  Identical argv on the same build produces byte-identical output
(timing is only included on request, since it would break that guarantee).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Any

from . import __version__
from .errors import GlidekitError
from .glides import GLIDE_METHODS, glide_polynomial
from .jsonio import (
    comp_map_from_json,
    comp_map_to_json,
    parse_composition,
    parse_partition_tuple,
    poly_to_json,
    string_key,
)
from .ktheory import chern_substitute, knutson_class
from .poset import build_poset
from .qsym import QSymElement, glide_expand, glide_structure_constants, m_multiply, overlapping_shuffle
from .schur import buk_structure_constant, lr_coefficient
from .verify import run_all

SCHEMA = "glidekit/1"


def _cmd_poset(args: argparse.Namespace) -> dict[str, Any]:
    alpha = parse_composition(args.alpha)
    p = build_poset(alpha, args.n)
    out: dict[str, Any] = {"elements": [list(e) for e in p.elements]}
    if args.hasse:
        out["covers"] = [list(pair) for pair in p.covers()]
    if args.mobius:
        mu = p.mobius()
        out["mobius"] = {string_key(e): mu[e] for e in p.elements}
    return out


def _cmd_glide(args: argparse.Namespace) -> dict[str, Any]:
    alpha = parse_composition(args.alpha)
    return {"polynomial": poly_to_json(glide_polynomial(alpha, args.n, args.method))}


def _cmd_shuffle(args: argparse.Namespace) -> dict[str, Any]:
    product = overlapping_shuffle(parse_composition(args.a), parse_composition(args.b))
    return {"product": comp_map_to_json(product)}


def _cmd_mprod(args: argparse.Namespace) -> dict[str, Any]:
    f = QSymElement.monomial(parse_composition(args.a))
    g = QSymElement.monomial(parse_composition(args.b))
    return {"product": comp_map_to_json(m_multiply(f, g).coords)}


def _cmd_glide_expand(args: argparse.Namespace) -> dict[str, Any]:
    with open(args.input, encoding="utf-8") as fh:
        payload = json.load(fh)
    items = payload["coords"] if isinstance(payload, dict) else payload
    element = QSymElement(comp_map_from_json(items), args.degree)
    return {"coords": comp_map_to_json(glide_expand(element, args.degree))}


def _cmd_glide_struct(args: argparse.Namespace) -> dict[str, Any]:
    coords = glide_structure_constants(
        parse_composition(args.a), parse_composition(args.b), args.degree
    )
    return {"coords": comp_map_to_json(coords)}


def _cmd_kclass(args: argparse.Namespace) -> dict[str, Any]:
    alpha = parse_composition(args.alpha)
    element = knutson_class(alpha, args.n, args.m)
    out: dict[str, Any] = {"kclass": poly_to_json(element.poly)}
    if args.chern:
        out["chern"] = poly_to_json(chern_substitute(element))
    return out


def _cmd_lr(args: argparse.Namespace) -> dict[str, Any]:
    coeff = lr_coefficient(
        parse_composition(args.lam), parse_composition(args.mu), parse_composition(args.nu)
    )
    return {"coefficient": coeff}


def _cmd_buk(args: argparse.Namespace) -> dict[str, Any]:
    coeff = buk_structure_constant(
        parse_partition_tuple(args.lam),
        parse_partition_tuple(args.mu),
        parse_partition_tuple(args.nu),
        args.k,
    )
    return {"coefficient": coeff}


def _cmd_verify(args: argparse.Namespace) -> dict[str, Any]:
    rows = run_all(jobs=args.jobs)
    return {
        "rows": [row.as_json() for row in rows],
        "total": len(rows),
        "failed": sum(1 for row in rows if not row.passed),
        "all_pass": all(row.passed for row in rows),
    }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="glidekit",
        description=(
            "Exact computations with monomial quasisymmetric functions, string-poset "
            "Mobius data, glide polynomials, truncated K-ring classes, and tableau "
            "structure constants.  Compositions are comma lists ('1,3'; empty string "
            "for the empty composition); partition tuples are semicolon-separated."
        ),
    )
    parser.add_argument("--version", action="version", version=f"glidekit {__version__}")
    parser.add_argument("--pretty", action="store_true", help="indent the JSON output")
    parser.add_argument(
        "--timing", action="store_true", help="include elapsed milliseconds (non-deterministic)"
    )
    parser.add_argument(
        "--jobs", type=int, default=1, help="parallel workers for independent work items"
    )

    # the same flags are accepted after the subcommand; SUPPRESS keeps the
    # subparser from clobbering values parsed at the top level
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--timing", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS)

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "poset", parents=[common], help="string poset of a composition's zero-paddings"
    )
    p.add_argument("--alpha", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--hasse", action="store_true", help="include cover relations")
    p.add_argument("--mobius", action="store_true", help="include the Mobius table")
    p.set_defaults(func=_cmd_poset)

    p = sub.add_parser("glide", parents=[common], help="glide polynomial of a composition")
    p.add_argument("--alpha", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=GLIDE_METHODS, default="closed")
    p.set_defaults(func=_cmd_glide)

    p = sub.add_parser("shuffle", parents=[common], help="overlapping shuffle product of two compositions")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(func=_cmd_shuffle)

    p = sub.add_parser("mprod", parents=[common], help="monomial-basis product of two compositions")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(func=_cmd_mprod)

    p = sub.add_parser("glide-expand", parents=[common], help="expand monomial coordinates over the glide basis")
    p.add_argument("--input", required=True, help="JSON file with monomial coordinates")
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=_cmd_glide_expand)

    p = sub.add_parser("glide-struct", parents=[common], help="glide-basis structure constants of two glides")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=_cmd_glide_struct)

    p = sub.add_parser("kclass", parents=[common], help="structure-sheaf class of the dual Schubert union")
    p.add_argument("--alpha", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--chern", action="store_true", help="include the Chern character image")
    p.set_defaults(func=_cmd_kclass)

    p = sub.add_parser("lr", parents=[common], help="Littlewood-Richardson coefficient by ballot tableaux")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.set_defaults(func=_cmd_lr)

    p = sub.add_parser("buk", parents=[common], help="structure constant for tuples of length-k partitions")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--m", dest="mu", required=True)
    p.add_argument("--n", dest="nu", required=True)
    p.set_defaults(func=_cmd_buk)

    p = sub.add_parser("verify-paper", parents=[common], help="replay the built-in reference fixtures")
    p.set_defaults(func=_cmd_verify)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.monotonic()
    try:
        output = args.func(args)
    except GlidekitError as exc:
        error = {
            "schema": SCHEMA,
            "command": args.command,
            "error": {"code": exc.code, "message": str(exc)},
        }
        print(json.dumps(error), file=sys.stderr)
        return 1
    result: dict[str, Any] = {
        "schema": SCHEMA,
        "command": args.command,
        "inputs": _echo_inputs(args),
        "exact": True,
        "output": output,
    }
    if args.timing:
        result["elapsed_ms"] = round((time.monotonic() - started) * 1000, 3)
    indent = 2 if args.pretty else None
    print(json.dumps(result, indent=indent))
    if args.command == "verify-paper" and not output["all_pass"]:
        return 1
    return 0


def _echo_inputs(args: argparse.Namespace) -> dict[str, Any]:
    skip = {"func", "command", "pretty", "timing", "jobs"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
