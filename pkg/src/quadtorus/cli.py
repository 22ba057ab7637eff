"""Command-line front end.

Subcommands: decide a single point, verify the stored tables of a case,
certify a denominator, scan a rational grid, print period tables, and run
the Thue-Morse run-length check.  All point input uses the exact text
grammar of the quadratic-field elements; decimals are rejected because they
cannot represent ring elements exactly.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .cases import CaseData, all_tags, load_case
from .certify import (
    certificate_json,
    certify_Q,
    period_table,
    scan_aperiodic,
)
from .dynamics import Point, mat_pow
from .qfield import QuadElem, parse
from .renorm import (
    DataError,
    decide,
    first_return,
    iterate_return,
    verify_substitution_conditions,
    verify_witness,
)
from .sampling import sample_cell
from .subst import thue_morse_check

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def parse_point(text: str) -> Point:
    """Parse "(x,y)" or "x,y" with exact coordinate grammar."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    depth = 0
    split = None
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            if split is not None:
                raise ValueError(f"not a point: {text!r}")
            split = i
    if split is None:
        raise ValueError(f"not a point: {text!r}")
    return (parse(s[:split]), parse(s[split + 1 :]))


def _point_text(z: Point) -> list[str]:
    return [str(z[0]), str(z[1])]


def _write(out_path: str | None, text: str) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w") as fh:
            fh.write(text)


def cmd_decide(args) -> int:
    cd = load_case(args.case)
    z = parse_point(args.point)
    verdict = decide(cd, z)
    if args.format == "json":
        payload = {
            "case": cd.case.tag,
            "point": _point_text(z),
            "verdict": verdict.kind,
            "period": verdict.period,
            "via": verdict.via,
            "cycle": [_point_text(w) for w in verdict.cycle],
        }
        _write(args.out, json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        lines = [f"case {cd.case.tag}: ({z[0]}, {z[1]}) is {verdict.kind}"]
        if verdict.period is not None:
            lines.append(f"minimal period {verdict.period}")
        if verdict.kind == "aperiodic":
            lines.append("S-cycle:")
            lines.extend(f"  ({w[0]}, {w[1]})" for w in verdict.cycle)
        _write(args.out, "\n".join(lines) + "\n")
    return EXIT_OK


def _verify_case(cd: CaseData, samples: int, report: list[str]) -> bool:
    ok = True

    def check(name: str, fn) -> None:
        nonlocal ok
        try:
            extra = fn()
            report.append(f"  PASS {name}" + (f" ({extra})" if extra else ""))
        except Exception as exc:  # noqa: BLE001 - report and fail the command
            ok = False
            report.append(f"  FAIL {name}: {exc}")

    def order_check():
        a = cd.case.matrix
        one = QuadElem.from_int(1)
        zero = QuadElem.from_int(0)
        ident = ((one, zero), (zero, one))
        if mat_pow(a, cd.case.order) != ident:
            raise DataError("A^order is not the identity")
        if any(mat_pow(a, k) == ident for k in range(1, cd.case.order)):
            raise DataError("matrix order is not minimal")
        return f"order {cd.case.order}"

    check("step-matrix order", order_check)

    for dom in cd.domains:

        def scaling_check(dom=dom):
            kappa = dom.scaling.kappa
            norm = kappa.norm()
            if abs(norm) != 1:
                raise DataError(f"kappa is not a unit (norm {norm})")
            if (norm > 0) != (dom.epsilon == 1):
                raise DataError("epsilon does not match the sign of N(kappa)")
            return f"N(kappa) = {norm}, epsilon = {dom.epsilon}"

        check(f"domain {dom.id} scaling unit", scaling_check)

        def tau_check(dom=dom):
            rng = random.Random(20260826)
            n = 0
            for cell in dom.cells:
                for z in sample_cell(cd, dom, cell, samples, rng):
                    first_return(cd, dom, z)  # raises on any tau mismatch
                    n += 1
            return f"{n} sampled returns"

        check(f"domain {dom.id} return-time table", tau_check)

        def subst_check(dom=dom):
            rng = random.Random(20260826)
            rep = verify_substitution_conditions(cd, dom, samples, rng)
            if not rep.ok:
                raise DataError("; ".join(rep.failures[:3]))
            return f"{rep.checked} checks"

        check(f"domain {dom.id} substitution conditions", subst_check)

        if dom.witness is not None:

            def witness_check(dom=dom):
                cycle = verify_witness(cd, dom)
                return f"cycle length {len(cycle)}"

            check(f"domain {dom.id} aperiodic witness", witness_check)

    star = cd.extras.get("star_point")
    if star is not None:

        def star_check():
            dom = cd.domains[0]
            z = dom.scaling.V_inv(star)
            step = first_return(cd, dom, z)
            if step.steps_T != 183:
                raise DataError(f"return time {step.steps_T} != 183")
            if iterate_return(cd, dom, z, 10) != z:
                raise DataError("not fixed by the 10th return")
            return "return time 183, 10th return fixes"

        check("isolated-point return data", star_check)

    return ok


def cmd_verify(args) -> int:
    tags = all_tags() if args.case == "all" else [args.case]
    report: list[str] = []
    all_ok = True
    for tag in tags:
        cd = load_case(tag)
        report.append(f"case {tag}:")
        if not _verify_case(cd, args.samples, report):
            all_ok = False
    report.append("VERIFY " + ("PASS" if all_ok else "FAIL"))
    _write(args.out, "\n".join(report) + "\n")
    return EXIT_OK if all_ok else EXIT_FAIL


def cmd_certify(args) -> int:
    cd = load_case(args.case)
    cert = certify_Q(cd, args.q, threads=args.threads)
    if args.format == "json":
        _write(args.out, certificate_json(cert))
    else:
        lines = [
            f"case {cert.case}, Q = {cert.Q}: {cert.conclusion}",
            f"candidates decided: {len(cert.results)}",
        ]
        for r in cert.results:
            if r.verdict.kind == "aperiodic":
                lines.append(f"  aperiodic: ({r.point[0]}, {r.point[1]})")
        _write(args.out, "\n".join(lines) + "\n")
    return EXIT_OK


_SVG_COLORS = {"periodic": "#c8c8c8", "aperiodic": "#d62728"}


def _scan_svg(rows, q: int) -> str:
    size = 600
    cell = size / q
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="#ffffff"/>',
    ]
    for (x, y), kind, _period in rows:
        i = int(x.as_fraction() * q) if x.is_rational else None
        j = int(y.as_fraction() * q) if y.is_rational else None
        if i is None or j is None:
            continue
        px = i * cell
        py = size - (j + 1) * cell  # y axis upward
        parts.append(
            f'<rect x="{px:.2f}" y="{py:.2f}" width="{cell:.2f}" height="{cell:.2f}" '
            f'fill="{_SVG_COLORS[kind]}"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def cmd_scan(args) -> int:
    cd = load_case(args.case)
    rows = scan_aperiodic(cd, args.q, threads=args.threads)
    if args.format == "csv":
        lines = ["x,y,verdict,period"]
        for z, kind, period in rows:
            lines.append(f"{z[0]},{z[1]},{kind},{'' if period is None else period}")
        _write(args.out, "\n".join(lines) + "\n")
    elif args.format == "json":
        payload = [
            {"point": _point_text(z), "verdict": kind, "period": period}
            for z, kind, period in rows
        ]
        _write(args.out, json.dumps(payload, sort_keys=True, indent=2) + "\n")
    elif args.format == "svg":
        _write(args.out, _scan_svg(rows, args.q))
    else:
        n_ap = sum(1 for _, kind, _ in rows if kind == "aperiodic")
        lines = [f"case {cd.case.tag}, grid 1/{args.q}: {len(rows)} points, {n_ap} aperiodic"]
        for z, kind, _ in rows:
            if kind == "aperiodic":
                lines.append(f"  aperiodic: ({z[0]}, {z[1]})")
        _write(args.out, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_period_table(args) -> int:
    cd = load_case(args.case)
    results = period_table(cd, n_max=args.n, brute_cap=args.budget)
    ok = all(r.ok for r in results)
    if args.format == "csv":
        lines = ["row,level,expected,computed,brute,ok"]
        for r in results:
            lines.append(
                f"\"{r.label}\",{'' if r.level is None else r.level},"
                f"{r.expected},{r.computed},{'' if r.brute is None else r.brute},{r.ok}"
            )
        _write(args.out, "\n".join(lines) + "\n")
    elif args.format == "json":
        payload = [
            {
                "row": r.label,
                "level": r.level,
                "expected": r.expected,
                "computed": r.computed,
                "brute": r.brute,
                "ok": r.ok,
            }
            for r in results
        ]
        _write(args.out, json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        lines = [f"case {cd.case.tag} minimal periods (levels 0..{args.n}):"]
        for r in results:
            lvl = "const" if r.level is None else f"n={r.level}"
            mark = "ok" if r.ok else "MISMATCH"
            lines.append(f"  {r.label:24s} {lvl:6s} {r.expected:>12d}  {mark}")
        _write(args.out, "\n".join(lines) + "\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_thue_morse(args) -> int:
    ok = thue_morse_check(args.n)
    _write(args.out, f"thue-morse run-length check up to {args.n}: {'pass' if ok else 'FAIL'}\n")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadtorus",
        description="Exact periodicity analysis of piecewise affine torus maps "
        "at quadratic parameters.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, case=True):
        if case:
            p.add_argument(
                "--case",
                required=True,
                help="parameter tag, e.g. gamma, neg-inv-gamma, sqrt2, neg-sqrt3",
            )
        p.add_argument("--out", default=None, help="output file (default stdout)")

    p = sub.add_parser("decide", help="decide periodicity of one exact point")
    add_common(p)
    p.add_argument("--point", required=True, help='exact point, e.g. "(0,1/3)"')
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(fn=cmd_decide)

    p = sub.add_parser("verify", help="check the stored tables of a case")
    p.add_argument("--case", required=True, help="parameter tag or 'all'")
    p.add_argument("--out", default=None)
    p.add_argument("--samples", type=int, default=3, help="samples per cell")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("certify", help="certify one denominator Q")
    add_common(p)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(fn=cmd_certify)

    p = sub.add_parser("scan", help="classify a rational grid")
    add_common(p)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--format", choices=["text", "csv", "json", "svg"], default="text")
    p.set_defaults(fn=cmd_scan)

    p = sub.add_parser("period-table", help="evaluate the stored period rows")
    add_common(p)
    p.add_argument("--n", type=int, default=3, help="highest renormalization level")
    p.add_argument(
        "--budget", type=int, default=10**6, help="brute-force confirmation cap"
    )
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.set_defaults(fn=cmd_period_table)

    p = sub.add_parser("thue-morse", help="run-length check of the Thue-Morse word")
    p.add_argument("--n", type=int, default=1000)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_thue_morse)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "q", 1) < 1 or getattr(args, "n", 1) < 0:
        parser.error("budgets and denominators must be positive")
    try:
        return args.fn(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DataError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
