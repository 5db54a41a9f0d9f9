"""Command line front end: ``luroth psi | luroth | verify``.

Exit codes: 0 when every check passes (or the input is degenerate as
reported), 1 when a mathematical check fails, 2 on usage or input errors.
Reports are deterministic: sorted JSON keys, no timestamps.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
from fractions import Fraction

from luroth.algebra import Form, HomPoint, dumps, format_rational, proportionality
from luroth.bateman import (
    RobertsData,
    branch_quartic,
    fifth_line,
    luroth_closed_form,
    pentalateral_ops,
    reverse_roberts,
)
from luroth.config7 import (
    FANO_TO_QUOTIENT_RATIO,
    Config7,
    morley_invariant_fano,
    morley_pfaffian,
    q_values,
)
from luroth.errors import DegenerateError
from luroth.generators import random_roberts
from luroth.suites import SUITES, _as_dicts, check, run_suite


class InputError(Exception):
    pass


def _digest(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def _read_input(path: str) -> tuple[object, bytes]:
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(raw), raw
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from None


def _report(command, digest, outputs, checks) -> dict:
    statuses = {c["status"] for c in checks}
    if "fail" in statuses:
        status = "fail"
    elif "degenerate" in statuses:
        status = "degenerate"
    else:
        status = "pass"
    return {"command": command, "input_digest": digest, "outputs": outputs, "checks": checks, "status": status}


def _fr(x):
    return None if x is None else format_rational(x)


def cmd_psi(data, digest) -> dict:
    try:
        z = Config7.from_json(data)
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"not a seven-point configuration: {exc}") from None
    if not z.pairwise_distinct or z.all_on_conic:
        why = "points are not pairwise distinct" if not z.pairwise_distinct else "the seven points lie on a conic"
        return _report("psi", digest, {"reason": why}, [{"name": "configuration", "status": "degenerate"}])
    qs = q_values(z)
    f = morley_pfaffian(z)
    prod = Fraction(1)
    for q in qs:
        prod *= q
    psi = f / prod if prod else None
    psi_fano = morley_invariant_fano(z.points)
    outputs = {
        "Q_values": [_fr(q) for q in qs],
        "F": _fr(f),
        "psi": _fr(psi),
        "psi_fano": _fr(psi_fano),
        "fano_to_quotient_ratio": _fr(FANO_TO_QUOTIENT_RATIO),
    }
    checks = []
    if psi is not None:
        checks.append(check("routes-consistent", psi_fano == FANO_TO_QUOTIENT_RATIO * psi))
    else:
        checks.append(check("F-zero-with-six-on-conic", f == 0, _fr(f)))
    return _report("psi", digest, outputs, _as_dicts(checks))


def _line_json(l: Form):
    return [format_rational(l.coefficient(e)) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]


def cmd_luroth(r: RobertsData, digest) -> dict:
    try:
        inp = reverse_roberts(r)
        b, big_l = luroth_closed_form(r)
        pent, _ = pentalateral_ops(list(r.lines) + [big_l])
    except DegenerateError as exc:
        return _report("luroth", digest, {"reason": str(exc)}, [{"name": "roberts-data", "status": "degenerate"}])
    bq = branch_quartic(inp)
    outputs = {
        "roberts": r.to_json(),
        "theta": inp.theta.form.to_json(),
        "D": inp.d_cubic.to_json(),
        "branch_quartic": bq.to_json(),
        "closed_form_quartic": b.to_json(),
        "fifth_line": _line_json(big_l),
        "vertices": [v.to_json() for v in pent.vertices],
    }
    checks = [
        check("branch-proportional", proportionality(bq, b) is not None),
        check("vertices-on-quartic", all(b(v.coords) == 0 for v in pent.vertices)),
    ]
    try:
        recovered = fifth_line(b, r.lines)
        checks.append(check("fifth-line-recovered", proportionality(recovered, big_l) is not None))
    except DegenerateError:
        checks.append(("fifth-line-recovered", "degenerate", None))
    return _report("luroth", digest, outputs, _as_dicts(checks))


def reverify_luroth(report: dict) -> list:
    """Re-check a saved luroth report from its serialized outputs alone."""
    out = report["outputs"]
    b = Form.from_json(out["closed_form_quartic"], 3)
    bq = Form.from_json(out["branch_quartic"], 3)
    vertices = [HomPoint.from_json(v) for v in out["vertices"]]
    return [
        check("branch-proportional", proportionality(bq, b) is not None),
        check("vertices-on-quartic", len(vertices) == 10 and all(b(v.coords) == 0 for v in vertices)),
    ]


def cmd_verify(suite, seed, count, report_data=None, digest=None) -> dict:
    if suite == "luroth-report":
        if report_data is None:
            raise InputError("suite luroth-report needs --input")
        try:
            checks = reverify_luroth(report_data)
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"not a luroth report: {exc}") from None
        return _report("verify", digest, {"suite": suite}, _as_dicts(checks))
    cases = run_suite(suite, seed, count)
    flat = []
    for case in cases:
        for c in case["checks"]:
            d = dict(c)
            d["name"] = f"{case['index']}:{c['name']}"
            flat.append(d)
    key = _digest(f"suite={suite};seed={seed};count={count}".encode())
    outputs = {"suite": suite, "seed": seed, "count": count, "cases": len(cases)}
    notes = {str(c["index"]): c["note"] for c in cases if "note" in c}
    if notes:
        outputs["degenerate_cases"] = notes
    return _report("verify", key, outputs, flat)


def _text(report: dict) -> str:
    lines = [f"command: {report['command']}", f"input: {report['input_digest']}"]
    for k in sorted(report["outputs"]):
        v = report["outputs"][k]
        lines.append(f"{k}: {json.dumps(v, sort_keys=True)}")
    for c in report["checks"]:
        extra = f"  residual={c['residual']}" if "residual" in c else ""
        lines.append(f"{c['status'].upper():<10} {c['name']}{extra}")
    lines.append(f"status: {report['status']}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="luroth", description="Exact Morley invariant and Lüroth quartic computations.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("json", "text"), default="json")

    sp = sub.add_parser("psi", help="Q values, pfaffian and Morley invariant of seven points")
    sp.add_argument("--input", required=True, help='JSON file {"points": [[x0, x1, x2], ...]}')
    common(sp)

    sp = sub.add_parser("luroth", help="Lüroth quartic and pentalateral from Roberts data")
    sp.add_argument("--input", help='JSON file {"lines": [...], "a": [...], "b": [...]}')
    sp.add_argument("--seed", type=int, help="generate Roberts data from this seed instead of reading --input")
    common(sp)

    sp = sub.add_parser("verify", help="run a seeded property suite")
    sp.add_argument("suite", choices=sorted(SUITES) + ["luroth-report"])
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--count", type=int, default=10)
    sp.add_argument("--input", help="saved luroth report (suite luroth-report only)")
    common(sp)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "psi":
            data, raw = _read_input(args.input)
            report = cmd_psi(data, _digest(raw))
        elif args.command == "luroth":
            if (args.input is None) == (args.seed is None):
                raise InputError("give exactly one of --input and --seed")
            if args.input is not None:
                data, raw = _read_input(args.input)
                try:
                    r = RobertsData.from_json(data)
                except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
                    raise InputError(f"not Roberts data: {exc}") from None
                except DegenerateError as exc:
                    rep = _report("luroth", _digest(raw), {"reason": str(exc)}, [{"name": "roberts-data", "status": "degenerate"}])
                    sys.stdout.write(dumps(rep) if args.format == "json" else _text(rep))
                    return 0
                digest = _digest(raw)
            else:
                r = random_roberts(random.Random(f"luroth:{args.seed}"))
                digest = _digest(f"seed={args.seed}".encode())
            report = cmd_luroth(r, digest)
        else:
            if args.count < 0:
                raise InputError("--count must be nonnegative")
            data = digest = None
            if args.input is not None:
                data, raw = _read_input(args.input)
                digest = _digest(raw)
            report = cmd_verify(args.suite, args.seed, args.count, data, digest)
    except InputError as exc:
        print(f"luroth: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(dumps(report) if args.format == "json" else _text(report))
    return 1 if report["status"] == "fail" else 0


if __name__ == "__main__":
    sys.exit(main())
