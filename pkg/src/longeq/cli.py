"""Command-line front end.

Exit codes: 0 all requested checks pass; 1 a check failed; 2 usage or
parse error; 70 internal disagreement between redundant checkers.
Reports are JSON on stdout; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import jsonio, kz
from .bialgebra import AXIOMS, check_axioms
from .errors import (
    DimensionCap,
    InternalCheckFailed,
    LongeqError,
    NotALongSolution,
    PathTooClose,
)
from .frt import build_LR, presentation_text, round_trip
from .scalars import parse_frac
from .tensor_ops import (
    LAWS,
    GradedActionData,
    check_laws,
    check_long_componentwise,
    long_witness,
    make_conjugate,
    make_diag,
    make_graded,
    make_homothety,
    make_pair,
    make_phi,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 70


def _load_json(path):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _emit(obj):
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _report(command, verdicts, witnesses, started):
    return {
        "format_version": jsonio.FORMAT_VERSION,
        "command": command,
        "verdicts": verdicts,
        "witnesses": witnesses,
        "elapsed_s": round(time.monotonic() - started, 6),
    }


def _frac_list(text):
    return [parse_frac(tok) for tok in text.split(",")]


def _square(values, what):
    n = int(len(values) ** 0.5)
    if n * n != len(values):
        raise ValueError(f"{what} must have a square number of entries")
    return [values[r * n:(r + 1) * n] for r in range(n)]


def cmd_check(args):
    started = time.monotonic()
    r = jsonio.operator_from_json(_load_json(args.op))
    laws = [tok.strip() for tok in args.laws.split(",") if tok.strip()]
    unknown = set(laws) - set(LAWS)
    if unknown:
        raise ValueError(f"unknown laws: {sorted(unknown)}; choose from {LAWS}")
    verdicts = check_laws(r, laws)
    witnesses = {}
    if "long" in laws:
        componentwise = check_long_componentwise(r)
        if componentwise != verdicts["long"]:
            raise InternalCheckFailed(
                "matrix-level and componentwise Long checks disagree"
            )
        if not verdicts["long"]:
            eq_no, idx = long_witness(r)
            witnesses["long"] = {"equation": eq_no, "indices": list(idx)}
    _emit(_report("check", verdicts, witnesses, started))
    return EXIT_OK if all(verdicts.values()) else EXIT_FAIL


def cmd_construct(args):
    if args.kind == "phi":
        r = make_phi(args.n, [int(tok) for tok in args.map.split(",")])
    elif args.kind == "diag":
        r = make_diag(args.n, _square(_frac_list(args.a), "--a"))
    elif args.kind == "pair":
        r = make_pair(_square(_frac_list(args.f), "--f"),
                      _square(_frac_list(args.g), "--g"))
    elif args.kind == "conjugate":
        base = jsonio.operator_from_json(_load_json(args.op))
        r = make_conjugate(_square(_frac_list(args.u), "--u"), base)
    elif args.kind == "graded":
        spec = _load_json(args.spec)
        elements = spec["elements"]
        table = {
            (elements[i], elements[j]): elements[spec["table"][i][j]]
            for i in range(len(elements))
            for j in range(len(elements))
        }
        actions = {
            g: [[parse_frac(x) for x in row] for row in m]
            for g, m in spec["actions"].items()
        }
        r = make_graded(GradedActionData(elements, table, actions, spec["degrees"]))
    elif args.kind == "homothety":
        spec = _load_json(args.spec)
        rep = [[[parse_frac(x) for x in row] for row in m] for m in spec["rep"]]
        element = [
            (parse_frac(c), int(li), int(ri)) for c, li, ri in spec["element"]
        ]
        r = make_homothety(rep, element)
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown constructor {args.kind}")
    _emit(jsonio.operator_to_json(r))
    return EXIT_OK


def _build_presentation(args):
    r = jsonio.operator_from_json(_load_json(args.op))
    naming = _load_json(args.naming) if getattr(args, "naming", None) else None
    pres = build_LR(r, naming=naming)
    again = round_trip(pres)
    if again != r:
        raise InternalCheckFailed("round trip does not reproduce the operator")
    return r, pres


def cmd_frt(args):
    _, pres = _build_presentation(args)
    if args.present:
        sys.stdout.write(presentation_text(pres))
        sys.stdout.write("\n")
    else:
        _emit(jsonio.presentation_to_json(pres))
    return EXIT_OK


def cmd_roundtrip(args):
    started = time.monotonic()
    _build_presentation(args)
    _emit(_report("roundtrip", {"round_trip": True}, {}, started))
    return EXIT_OK


def cmd_kz(args):
    started = time.monotonic()
    r = jsonio.operator_from_json(_load_json(args.op))
    loop_obj = _load_json(args.loop)
    loop = jsonio.loop_from_json(loop_obj)
    if args.steps:
        loop = loop.with_steps(args.steps)
    if loop.N != args.points:
        raise ValueError("--points disagrees with the loop base configuration")
    re, _, im = args.h.partition(",")
    h = complex(float(re), float(im) if im else 0.0)
    residuals = kz.flatness_residuals(r, args.points)
    system = kz.KZSystem.from_op(r, args.points, h)
    w = kz.integrate_holonomy(system, loop)
    out = jsonio.holonomy_to_json(w, h, args.points, r.dim)
    out["format_version"] = jsonio.FORMAT_VERSION
    out["residuals"] = residuals
    out["elapsed_s"] = round(time.monotonic() - started, 6)
    code = EXIT_OK
    if args.compare:
        if not system.symmetric:
            print(
                "comparison mode requires a symmetric operator (flip-invariant)",
                file=sys.stderr,
            )
            return EXIT_USAGE
        if loop.kind != "circle" or not isinstance(loop_obj.get("center"), int):
            print(
                "comparison mode requires a circle loop centered on a fixed point",
                file=sys.stderr,
            )
            return EXIT_USAGE
        from scipy.linalg import expm
        import numpy as np

        moving = loop_obj["moving"] - 1
        center = loop_obj["center"] - 1
        oracle = expm(
            2.0j * np.pi * h * kz.lift_float(system.r_float, r.dim, moving,
                                             center, args.points)
        )
        out["oracle_distance"] = float(np.max(np.abs(w - oracle)))
        if not all(residuals.values()):
            code = EXIT_FAIL
    _emit(out)
    return code


def cmd_bialgebra_check(args):
    started = time.monotonic()
    b = jsonio.bialgebra_from_json(_load_json(args.bialgebra))
    s = jsonio.sigma_from_json(_load_json(args.sigma))
    if s.d != b.d:
        raise ValueError("sigma table size disagrees with the bialgebra dimension")
    axioms = (
        [tok.strip() for tok in args.axioms.split(",") if tok.strip()]
        if args.axioms
        else ["L1", "L2", "L3", "L4", "L5"]
    )
    unknown = set(axioms) - set(AXIOMS)
    if unknown:
        raise ValueError(f"unknown axioms: {sorted(unknown)}; choose from {AXIOMS}")
    results = check_axioms(b, s, axioms)
    verdicts = {name: ok for name, (ok, _) in results.items()}
    witnesses = {
        name: list(w) for name, (ok, w) in results.items() if not ok and w
    }
    _emit(_report("bialgebra-check", verdicts, witnesses, started))
    return EXIT_OK if all(verdicts.values()) else EXIT_FAIL


def build_parser():
    p = argparse.ArgumentParser(
        prog="longeq",
        description="Exact Long-equation toolkit: checks, constructions, "
        "FRT-type presentations, and KZ holonomy.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="verify equational laws of an operator")
    c.add_argument("--op", required=True, help="operator JSON file")
    c.add_argument("--laws", default="long", help="comma-separated law names")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("construct", help="emit a constructed solution as JSON")
    kinds = c.add_subparsers(dest="kind", required=True)
    k = kinds.add_parser("phi")
    k.add_argument("--n", type=int, required=True)
    k.add_argument("--map", required=True, help="comma-separated values of phi")
    k = kinds.add_parser("diag")
    k.add_argument("--n", type=int, required=True)
    k.add_argument("--a", required=True, help="row-major n*n fraction list")
    k = kinds.add_parser("pair")
    k.add_argument("--n", type=int, required=True)
    k.add_argument("--f", required=True, help="row-major n*n fraction list")
    k.add_argument("--g", required=True, help="row-major n*n fraction list")
    k = kinds.add_parser("conjugate")
    k.add_argument("--op", required=True, help="base operator JSON file")
    k.add_argument("--u", required=True, help="row-major n*n fraction list")
    k = kinds.add_parser("graded")
    k.add_argument("--spec", required=True, help="graded-action JSON file")
    k = kinds.add_parser("homothety")
    k.add_argument("--spec", required=True, help="homothety JSON file")
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("frt", help="build the induced bialgebra presentation")
    c.add_argument("--op", required=True)
    c.add_argument("--present", action="store_true", help="emit text, not JSON")
    c.add_argument("--naming", help="JSON file mapping c_i_j to display names")
    c.set_defaults(func=cmd_frt)

    c = sub.add_parser("roundtrip", help="verify the presentation round trip")
    c.add_argument("--op", required=True)
    c.set_defaults(func=cmd_roundtrip, naming=None)

    c = sub.add_parser("kz", help="integrate loop holonomy of the connection")
    c.add_argument("--op", required=True)
    c.add_argument("--points", type=int, required=True)
    c.add_argument("--h", required=True, help="complex parameter as RE or RE,IM")
    c.add_argument("--loop", required=True, help="loop JSON file")
    c.add_argument("--steps", type=int, help="override the loop step count")
    c.add_argument(
        "--compare",
        action="store_true",
        help="compare against the exponential oracle (symmetric circle loops)",
    )
    c.set_defaults(func=cmd_kz)

    c = sub.add_parser("bialgebra-check", help="check sigma-table axioms")
    c.add_argument("--bialgebra", required=True)
    c.add_argument("--sigma", required=True)
    c.add_argument("--axioms", help="comma-separated subset of the axiom names")
    c.set_defaults(func=cmd_bialgebra_check)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InternalCheckFailed as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except NotALongSolution as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (PathTooClose, DimensionCap, LongeqError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, KeyError, IndexError, OSError,
            json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
