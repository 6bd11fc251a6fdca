"""Command-line front end.

Exit codes: 0 success, 1 input/parse error, 2 mathematical precondition
failed, 3 identity or internal-consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .chow import ChowExprError, NonIntegralClassError, NotAUnitError, degree_int, parse_ambient, parse_chow_expr
from .classes import (
    HypersurfaceSpec,
    IdentityMismatchError,
    chi_complement_routes,
    hypersurface_report,
)
from .fixtures import standard_nodal
from .milnor import (
    SingularityData,
    SingularityPreconditionError,
    check_complete,
    default_max_cutoff,
    milnor_at,
    parse_points,
    total_milnor_affine,
)
from .poly import NotHomogeneousError, PolySyntaxError, parse_poly
from .verify import SCENARIOS, HypothesisError, default_grid

EXIT_OK, EXIT_INPUT, EXIT_PRECONDITION, EXIT_MISMATCH = 0, 1, 2, 3


class InputError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def parse_range(text: str) -> list[int]:
    """``3``, ``2..5`` or ``1,2,4``."""
    out = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if ".." in chunk:
            lo, hi = chunk.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        elif chunk:
            out.append(int(chunk))
    if not out:
        raise InputError(f"empty range {text!r}")
    return out


def _variables(text: str) -> list[str]:
    names = [v.strip() for v in text.split(",") if v.strip()]
    if not names:
        raise InputError("--vars is empty")
    return names


def _charts(text: str | None, variables: list[str], npoints: int):
    if text is None:
        return None
    items = [c.strip() for c in text.split(",")]
    if len(items) == 1:
        items = items * npoints
    if len(items) != npoints:
        raise InputError("--chart needs one entry, or one per singular point")
    return [variables.index(c) if c in variables else int(c) for c in items]


def _hypersurface(args) -> HypersurfaceSpec:
    if not args.poly or not args.vars:
        raise InputError("--poly and --vars are required")
    variables = _variables(args.vars)
    f = parse_poly(args.poly, variables)
    if args.ambient:
        amb = parse_ambient(args.ambient)
        if amb.is_blowup or amb.n + 1 != len(variables):
            raise InputError(f"ambient {amb} does not match {len(variables)} homogeneous variables")
    if not f.is_homogeneous():
        raise NotHomogeneousError(f"{f} is not homogeneous")
    points = parse_points(args.sing or "")
    return HypersurfaceSpec.from_polynomial(f, points, _charts(args.chart, variables, len(points)),
                                            args.max_cutoff)


def _completeness(spec: HypersurfaceSpec, max_cutoff: int) -> dict:
    table = check_complete(spec.polynomial, spec.singularities, max_cutoff)
    complete = all(a == b for a, b in table.values())
    return {
        "complete": complete,
        "charts": {spec.polynomial.variables[k]: {"supplied": a, "found": b} for k, (a, b) in table.items()},
    }


def cmd_csm(args) -> tuple[dict, int]:
    spec = _hypersurface(args)
    report = hypersurface_report(spec)
    code = EXIT_OK
    if args.check_complete:
        report["completeness"] = _completeness(spec, args.max_cutoff)
        if not report["completeness"]["complete"]:
            code = EXIT_PRECONDITION
    return report, code


def cmd_chi_complement(args) -> tuple[dict, int]:
    spec = _hypersurface(args)
    via_log, via_csm = chi_complement_routes(spec)
    if via_log != via_csm:
        raise IdentityMismatchError(f"chi of complement routes disagree: {via_log} vs {via_csm}")
    report = {"ambient": str(spec.ambient), "polynomial": str(spec.polynomial),
              "chi_complement": via_log, "log_route": via_log, "csm_route": via_csm}
    code = EXIT_OK
    if args.check_complete:
        report["completeness"] = _completeness(spec, args.max_cutoff)
        if not report["completeness"]["complete"]:
            code = EXIT_PRECONDITION
    return report, code


def cmd_milnor(args) -> tuple[dict, int]:
    f = parse_poly(args.poly, _variables(args.vars))
    result = milnor_at(f, args.max_cutoff)
    report = {"polynomial": str(f), **result.to_json()}
    if args.check_complete:
        report["total_affine"] = total_milnor_affine(f, args.max_cutoff)
    return report, EXIT_OK


def _singularities_for(args, n: int, d: int) -> SingularityData:
    points = parse_points(args.sing or "")
    if not points:
        return SingularityData.empty()
    if args.poly:
        if not args.vars:
            raise InputError("--vars is required with --poly")
        f = parse_poly(args.poly, _variables(args.vars))
    else:
        if d not in (3, 4):
            raise InputError("without --poly the built-in nodal family covers d = 3, 4 only")
        f = standard_nodal(n, d)
    if f.nvars != n + 1 or f.degree() != d or not f.is_homogeneous():
        raise InputError(f"polynomial does not define a degree-{d} hypersurface in P^{n}")
    return SingularityData.from_polynomial(f, points, _charts(args.chart, list(f.variables), len(points)),
                                           args.max_cutoff)


def cmd_verify(args) -> tuple[dict, int]:
    name = args.scenario
    if name == "all":
        reports = default_grid()
    elif name == "thm12-blowup":
        reports = [SCENARIOS[name](n) for n in parse_range(args.n or "2..5")]
    elif name in ("thm12-identity", "cor13"):
        if not args.n or not args.d:
            raise InputError(f"{name} needs --n and --d")
        reports = [SCENARIOS[name](n, d, _singularities_for(args, n, d))
                   for n in parse_range(args.n) for d in parse_range(args.d)]
    elif name in ("aluffi-nc", "multilog"):
        if not (args.n and args.d1 and args.d2):
            raise InputError(f"{name} needs --n, --d1 and --d2")
        grid = [(n, a, b) for n in parse_range(args.n) for a in parse_range(args.d1) for b in parse_range(args.d2)]
        if name == "aluffi-nc":
            reports = [SCENARIOS[name](n, [a, b]) for n, a, b in grid]
        else:
            reports = [SCENARIOS[name](n, a, b) for n, a, b in grid]
    else:
        raise InputError(f"unknown scenario {name!r}")
    all_equal = all(r.equal for r in reports)
    return {"scenario": name, "all_equal": all_equal, "reports": [r.to_json() for r in reports],
            "_lines": [r.line() for r in reports]}, (EXIT_OK if all_equal else EXIT_MISMATCH)


def cmd_chow(args) -> tuple[dict, int]:
    amb = parse_ambient(args.ambient)
    c = parse_chow_expr(args.expr, amb)
    deg = degree_int(c)
    return {"ambient": str(amb), "expr": args.expr, "class": str(c), "vector": c.to_json(),
            "degree": str(deg)}, EXIT_OK


COMMANDS = {
    "csm": cmd_csm,
    "chi-complement": cmd_chi_complement,
    "milnor": cmd_milnor,
    "verify": cmd_verify,
    "chow": cmd_chow,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="charclass", description="Characteristic classes of singular projective hypersurfaces.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--format", choices=["text", "json"], default="text")
        p.add_argument("--max-cutoff", type=int, default=None,
                       help="largest truncation degree for Milnor numbers (default 32, env CHARCLASS_MAX_CUTOFF)")

    for name in ("csm", "chi-complement"):
        p = sub.add_parser(name)
        common(p)
        p.add_argument("--ambient")
        p.add_argument("--vars", required=True)
        p.add_argument("--poly", required=True)
        p.add_argument("--sing", default="")
        p.add_argument("--chart")
        p.add_argument("--check-complete", action="store_true")

    p = sub.add_parser("milnor")
    common(p)
    p.add_argument("--vars", required=True)
    p.add_argument("--poly", required=True)
    p.add_argument("--check-complete", action="store_true",
                   help="also report the total Milnor number over all affine critical points")

    p = sub.add_parser("verify")
    common(p)
    p.add_argument("scenario", choices=sorted(SCENARIOS) + ["all"])
    for flag in ("--n", "--d", "--d1", "--d2"):
        p.add_argument(flag)
    p.add_argument("--sing", default="")
    p.add_argument("--poly")
    p.add_argument("--vars")
    p.add_argument("--chart")

    p = sub.add_parser("chow")
    common(p)
    p.add_argument("--ambient", required=True)
    p.add_argument("--expr", required=True)
    return parser


def render_text(command: str, report: dict) -> str:
    if command == "verify":
        lines = list(report["_lines"])
        lines.append(f"all equal: {report['all_equal']}")
        return "\n".join(lines)
    if command == "chow":
        return f"{report['class']}\ndegree: {report['degree']}"
    out = []
    for key, value in report.items():
        if isinstance(value, dict) and "h" in value:
            value = _class_text(value)
        elif isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True)
        out.append(f"{key}: {value}")
    return "\n".join(out)


def _class_text(vec: dict) -> str:
    """Full vector, zeros included: ``c0 + c1*h + ... + d1*e1 + d2*e1^2``."""
    def mono(gen, k):
        return gen if k == 1 else f"{gen}^{k}"

    parts = [vec["h"][0]] + [f"{c}*{mono('h', k)}" for k, c in enumerate(vec["h"]) if k]
    for i, block in enumerate(vec["e"], start=1):
        parts += [f"{c}*{mono(f'e{i}', k)}" for k, c in enumerate(block, start=1)]
    return " + ".join(parts)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # --help, or a usage error already reported by argparse
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    if args.max_cutoff is None:
        args.max_cutoff = default_max_cutoff()
    try:
        report, code = COMMANDS[args.command](args)
    except (IdentityMismatchError, NonIntegralClassError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (SingularityPreconditionError, NotAUnitError, HypothesisError, NotHomogeneousError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (PolySyntaxError, ChowExprError, InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.format == "json":
        report = {k: v for k, v in report.items() if not k.startswith("_")}
        print(json.dumps(report, indent=2))
    else:
        print(render_text(args.command, report))
    return code


if __name__ == "__main__":
    sys.exit(main())
