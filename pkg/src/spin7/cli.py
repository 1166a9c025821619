"""Command line surface over the verifier and the classification data.

Every command emits a single JSON envelope on stdout (or a markdown
rendering with --format markdown) and communicates success through the
exit code: 0 when all checks in the command passed, 1 when a check
failed (the envelope then carries a structured diff), 2 for malformed
invocations.  JSON output is validated against the schema shipped with
the package before it is printed, and is byte-identical across runs
with the same seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

import jsonschema

from .classify import admissible_pairs, reconstruct_lie_algebra
from .curvature import CASE_HOLONOMY, build_rc, cyclic_residue
from .exterior import (FormSyntaxError, _format_coeff, format_form,
                       parse_form)
from .liealg import algebra, invariant_forms, invariant_spinors, iso_algebra
from .scalars import SQRT3, Scalar, rational
from .structure import FAMILIES, diagonal, is_diagonal, ricci_solver
from .verification import run_all, write_golden


class UsageError(Exception):
    """Invocation problem: unknown name, bad parameter, bad form string."""


@dataclass
class CommandResult:
    exit_code: int
    payload: str = ""
    diagnostics: str = ""


# ---------------------------------------------------------------------------
# argument helpers

def _resolve_algebra(label: str) -> tuple[str, list]:
    """Catalog lookup, case-insensitive, accepting slope labels "t1[1,0]"."""
    name = label.strip().lower()
    try:
        if "[" in name:
            base, rest = name.split("[", 1)
            parts = [p.strip() for p in rest.rstrip("]").split(",")]
            if len(parts) != 2:
                raise UsageError(f"bad slope in algebra label {label!r}")
            k, l = (Scalar.parse(p) for p in parts)
            return f"{base}[{parts[0]},{parts[1]}]", algebra(base, k, l)
        return name, algebra(name)
    except KeyError:
        raise UsageError(f"unknown algebra {label!r}") from None
    except ValueError as exc:
        raise UsageError(f"bad algebra label {label!r}: {exc}") from None


def _parse_set(text: str) -> dict[str, Scalar]:
    out: dict[str, Scalar] = {}
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        key, eq, value = chunk.partition("=")
        if not eq or not key.strip():
            raise UsageError(
                f"--set entries look like name=value, got {chunk!r}")
        try:
            out[key.strip()] = Scalar.parse(value.strip())
        except ValueError as exc:
            raise UsageError(f"bad value for {key.strip()!r}: {exc}") from None
    return out


def _match_key(arg: str, keys: list[str], kind: str) -> str:
    for key in keys:
        if key.lower() == arg.strip().lower():
            return key
    raise UsageError(
        f"unknown {kind} {arg!r}; choose from {', '.join(keys)}")


def _format_spinor(s: dict[int, Scalar]) -> str:
    if not s:
        return "0"
    chunks = []
    for k in sorted(s):
        body, negative = _format_coeff(s[k], f"psi{k + 1}")
        if not chunks:
            chunks.append(f"-{body}" if negative else body)
        else:
            chunks.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(chunks)


# ---------------------------------------------------------------------------
# command handlers; each returns (ok, payload, diff, seed)

def _cmd_verify_all(ns) -> tuple:
    reports = run_all(ns.seed)
    payload = {"suites": [r.to_dict() for r in reports]}
    diff = []
    for rep in reports:
        for check in rep.checks:
            if not check.ok:
                diff.append({"where": f"{rep.name}: {check.label}",
                             "expected": "pass",
                             "actual": check.detail or "fail"})
    return not diff, payload, diff, ns.seed


def _cmd_table(ns) -> tuple:
    grouped = admissible_pairs()
    rows = [{"isotropy": iso,
             "k_nonzero": list(cols["k_nonzero"]),
             "k_zero": list(cols["k_zero"])}
            for iso, cols in grouped.items()]
    return True, {"rows": rows}, [], None


def _cmd_invariants(ns) -> tuple:
    label, gens = _resolve_algebra(ns.algebra)
    if ns.space == "forms3":
        forms = invariant_forms(gens, 3)
        basis = [format_form(a) for a in forms]
    else:
        basis = [_format_spinor(s) for s in invariant_spinors(gens)]
    payload = {"algebra": label, "space": ns.space,
               "dim": len(basis), "basis": basis}
    return True, payload, [], None


def _cmd_ricci(ns) -> tuple:
    fam_id = _match_key(ns.family, list(FAMILIES), "family")
    fam = FAMILIES[fam_id]
    params = _parse_set(ns.set)
    hol_name, h = _resolve_algebra(
        ns.hol if ns.hol is not None else fam.iso_name)
    try:
        t = fam.torsion(params)
        closed = fam.ricci_diag(params)
    except KeyError as exc:
        raise UsageError(f"family {fam_id}: {exc.args[0]}") from None
    ric = ricci_solver(t, h)
    payload = {"family": fam_id, "holonomy": hol_name,
               "params": {k: str(v) for k, v in sorted(params.items())},
               "torsion": format_form(t),
               "closed_form": [str(v) for v in closed]}
    diff = []
    if ric is None:
        payload.update(solver=None, consistent=False, matches=False)
        diff.append({"where": "ricci solver",
                     "expected": payload["closed_form"],
                     "actual": "inconsistent"})
    else:
        got = diagonal(ric)
        matches = is_diagonal(ric) and got == closed
        payload.update(solver=[str(v) for v in got],
                       consistent=True, matches=matches)
        if not matches:
            diff.append({"where": "ricci solver",
                         "expected": payload["closed_form"],
                         "actual": payload["solver"]})
    return not diff, payload, diff, None


def _case_torsion(case: str, params: dict[str, Scalar]):
    if case in ("5.1.1", "5.1.2"):
        fam_id = "5.1"
    elif case in ("5.2.1", "5.2.2"):
        fam_id = "5.2-II" if "a2" in params else "5.2-I"
    elif case == "5.3.1-I":
        fam_id = "5.3-I"
    else:
        fam_id = "5.3-II"
    return FAMILIES[fam_id].torsion(params)


def _cmd_curvature(ns) -> tuple:
    case = _match_key(ns.case, list(CASE_HOLONOMY), "case")
    params = _parse_set(ns.set)
    try:
        rc = build_rc(case, params)
        t = _case_torsion(case, params)
    except (KeyError, ValueError) as exc:
        raise UsageError(f"case {case}: {exc}") from None
    h = algebra(CASE_HOLONOMY[case])
    checks = {"symmetric": rc.is_symmetric(),
              "torsion_identity": cyclic_residue(rc, t),
              "values_in_holonomy": rc.range_inside(h),
              "invariant": rc.invariant_under(h)}
    payload = {"case": case, "holonomy": CASE_HOLONOMY[case],
               "params": {k: str(v) for k, v in sorted(params.items())},
               "ricci": [str(v) for v in diagonal(rc.ricci())],
               "checks": checks}
    diff = [{"where": f"case {case} {name}", "expected": True,
             "actual": False}
            for name, good in checks.items() if not good]
    return not diff, payload, diff, None


def _structure_json(rec) -> dict:
    out = {}
    for (i, j), row in sorted(rec.structure.items()):
        live = {rec.labels[k]: str(v)
                for k, v in sorted(row.items()) if not v.is_zero}
        if live:
            out[f"[{rec.labels[i]},{rec.labels[j]}]"] = live
    return out


def _cmd_reconstruct(ns) -> tuple:
    which = ns.example
    if which == "1":
        t = FAMILIES["5.1"].torsion({"a1": 1, "b1": -1, "b2": 0})
        rec = reconstruct_lie_algebra(t, None, [])
        expect_killing = False
    elif which == "2":
        t = FAMILIES["5.1"].torsion(
            {"a1": rational(4, 7), "b1": rational(3, 7), "b2": SQRT3})
        rec = reconstruct_lie_algebra(t, None, [])
        expect_killing = True
    else:
        t = FAMILIES["5.2-I"].torsion({"a1": 1})
        rc = build_rc("5.2.2", {"a1": 1})
        rec = reconstruct_lie_algebra(t, rc, algebra("t2"),
                                      dims=range(1, 8))
        expect_killing = True
    killing = rec.killing_nondegenerate()
    payload = {"example": which, "torsion": format_form(t),
               "dim": rec.dim, "labels": list(rec.labels),
               "jacobi": rec.jacobi_ok,
               "killing_nondegenerate": killing,
               "structure": _structure_json(rec)}
    diff = []
    if not rec.jacobi_ok:
        diff.append({"where": f"example {which} jacobi",
                     "expected": True, "actual": False})
    if killing != expect_killing:
        diff.append({"where": f"example {which} killing form",
                     "expected": expect_killing, "actual": killing})
    return not diff, payload, diff, None


def _cmd_iso(ns) -> tuple:
    try:
        a = parse_form(ns.form)
    except FormSyntaxError as exc:
        raise UsageError(f"--form: {exc}") from None
    name, basis = iso_algebra(a)
    payload = {"form": format_form(a), "algebra": name, "dim": len(basis),
               "basis": [format_form(w) for w in basis]}
    return True, payload, [], None


def _cmd_regen_golden(ns) -> tuple:
    written = write_golden(Path(ns.out))
    return True, {"out": ns.out, "written": written}, [], None


_HANDLERS = {
    "verify-all": _cmd_verify_all,
    "table": _cmd_table,
    "invariants": _cmd_invariants,
    "ricci": _cmd_ricci,
    "curvature": _cmd_curvature,
    "reconstruct": _cmd_reconstruct,
    "iso": _cmd_iso,
    "regen-golden": _cmd_regen_golden,
}


# ---------------------------------------------------------------------------
# rendering

@lru_cache(maxsize=1)
def _schema() -> dict:
    path = resources.files("spin7") / "schema.json"
    return json.loads(path.read_text(encoding="utf-8"))


def _validate(envelope: dict) -> None:
    jsonschema.validate(envelope, _schema())


def _combo(row: dict[str, str]) -> str:
    parts = []
    for label, c in row.items():
        if c == "1":
            parts.append(label)
        elif c == "-1":
            parts.append(f"-{label}")
        elif " " in c:
            parts.append(f"({c})*{label}")
        else:
            parts.append(f"{c}*{label}")
    return " + ".join(parts)


def _markdown(cmd: str, env: dict) -> str:
    p = env["payload"]
    lines: list[str] = []
    if cmd == "verify-all":
        for s in p["suites"]:
            word = "PASS" if s["passed"] else "FAIL"
            unit = "check" if s["checks"] == 1 else "checks"
            lines.append(f"{word} {s['name']} ({s['checks']} {unit})")
            for failure in s["failures"]:
                tail = f" [{failure['detail']}]" if failure["detail"] else ""
                lines.append(f"  failed: {failure['label']}{tail}")
            for note in s["notes"]:
                lines.append(f"  note: {note}")
        total = sum(s["checks"] for s in p["suites"])
        bad = sum(len(s["failures"]) for s in p["suites"])
        lines.append("")
        lines.append(f"{total} checks, "
                     + (f"{bad} failures" if bad else "all passed"))
    elif cmd == "table":
        lines.append("| isotropy | holonomy, curved operators | "
                     "holonomy, flat only |")
        lines.append("| --- | --- | --- |")
        for row in p["rows"]:
            curved = ", ".join(row["k_nonzero"]) or "(none)"
            flat = ", ".join(row["k_zero"]) or "(none)"
            lines.append(f"| {row['isotropy']} | {curved} | {flat} |")
    elif cmd == "invariants":
        lines.append(f"invariants of {p['algebra']} in {p['space']}: "
                     f"dim {p['dim']}")
        for b in p["basis"]:
            lines.append(f"- {b}")
    elif cmd == "ricci":
        head = f"family {p['family']}, holonomy {p['holonomy']}"
        if p["params"]:
            head += ", " + ", ".join(f"{k} = {v}"
                                     for k, v in p["params"].items())
        lines.append(head)
        lines.append(f"torsion: {p['torsion']}")
        lines.append("closed form: diag(" + ", ".join(p["closed_form"]) + ")")
        if p["solver"] is None:
            lines.append("solver: inconsistent")
        else:
            lines.append("solver: diag(" + ", ".join(p["solver"]) + ")")
            lines.append("solver matches closed form" if p["matches"]
                         else "solver DISAGREES with closed form")
    elif cmd == "curvature":
        head = f"case {p['case']}, holonomy {p['holonomy']}"
        if p["params"]:
            head += ", " + ", ".join(f"{k} = {v}"
                                     for k, v in p["params"].items())
        lines.append(head)
        lines.append("Ricci: diag(" + ", ".join(p["ricci"]) + ")")
        for name, good in p["checks"].items():
            lines.append(f"- {name}: {'ok' if good else 'FAILED'}")
    elif cmd == "reconstruct":
        killing = ("non-degenerate" if p["killing_nondegenerate"]
                   else "degenerate")
        jac = "exact" if p["jacobi"] else "FAILED"
        lines.append(f"example {p['example']}: dim {p['dim']}, "
                     f"Jacobi {jac}, Killing form {killing}")
        lines.append(f"torsion: {p['torsion']}")
        for key, row in p["structure"].items():
            lines.append(f"{key} = {_combo(row)}")
    elif cmd == "iso":
        lines.append(f"stabilizer of {p['form']}: {p['algebra']} "
                     f"(dim {p['dim']})")
        for b in p["basis"]:
            lines.append(f"- {b}")
    else:
        lines.append(f"wrote {len(p['written'])} golden files to {p['out']}")
        for name in p["written"]:
            lines.append(f"- {name}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# dispatch

def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "markdown"),
                   default=argparse.SUPPRESS,
                   help="output rendering (default json)")
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                   help="seed for the randomized identity checks")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spin7",
        description="Exact checks and tables for the torsion classification "
                    "on the 8-dimensional model space.")
    parser.add_argument("--format", choices=("json", "markdown"),
                        default="json",
                        help="output rendering (default json)")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for the randomized identity checks")
    sub = parser.add_subparsers(dest="cmd", required=True, metavar="command")

    p = sub.add_parser("verify-all", help="run every check suite")
    _add_common(p)

    p = sub.add_parser("table", help="print a classification table")
    p.add_argument("which", choices=("admissibility",),
                   help="which table to print")
    _add_common(p)

    p = sub.add_parser("invariants",
                       help="invariant 3-forms or spinors of an algebra")
    p.add_argument("--algebra", required=True,
                   help="catalog name, case-insensitive; t1[k,l] for lines")
    p.add_argument("--space", choices=("forms3", "spinors"), required=True)
    _add_common(p)

    p = sub.add_parser("ricci",
                       help="Ricci tensor of a torsion family member")
    p.add_argument("--family", required=True,
                   help="family id, e.g. 5.1 or 5.3-I")
    p.add_argument("--set", default="", metavar="NAME=VALUE[,...]",
                   help="parameter assignment, exact scalar values")
    p.add_argument("--hol", default=None,
                   help="holonomy algebra for the spinor equations "
                        "(default: the family's isotropy algebra)")
    _add_common(p)

    p = sub.add_parser("curvature",
                       help="closed-form curvature operator of a subcase")
    p.add_argument("--case", required=True,
                   help="case id, e.g. 5.1.1 or 5.3.1-I")
    p.add_argument("--set", default="", metavar="NAME=VALUE[,...]")
    _add_common(p)

    p = sub.add_parser("reconstruct",
                       help="Lie algebra rebuilt from flat or torus data")
    p.add_argument("--example", choices=("1", "2", "t2"), required=True)
    _add_common(p)

    p = sub.add_parser("iso",
                       help="stabilizer of a form inside the 21-dim kernel")
    p.add_argument("--form", required=True, metavar="FORM",
                   help='form string, e.g. "e_135 - e_245"')
    _add_common(p)

    p = sub.add_parser("regen-golden",
                       help="recompute golden data into a directory")
    p.add_argument("--out", required=True, metavar="DIR",
                   help="target directory (never the packaged data)")
    _add_common(p)
    return parser


def dispatch(argv: list[str]) -> CommandResult:
    """Parse argv, run the command, render the result; never exits."""
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 2
        return CommandResult(code)
    try:
        ok, payload, diff, seed = _HANDLERS[ns.cmd](ns)
    except UsageError as exc:
        return CommandResult(2, diagnostics=f"spin7: {exc}")
    envelope = {"command": ns.cmd, "seed": seed, "ok": ok, "payload": payload}
    if diff:
        envelope["diff"] = diff
    if ns.format == "json":
        _validate(envelope)
        text = json.dumps(envelope, indent=2, sort_keys=True) + "\n"
    else:
        text = _markdown(ns.cmd, envelope)
    diag = "" if ok else (
        f"spin7 {ns.cmd}: {len(diff)} failed check(s)")
    return CommandResult(0 if ok else 1, text, diag)


def main(argv: list[str] | None = None) -> int:
    result = dispatch(sys.argv[1:] if argv is None else list(argv))
    if result.payload:
        sys.stdout.write(result.payload)
    if result.diagnostics:
        print(result.diagnostics, file=sys.stderr)
    return result.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
