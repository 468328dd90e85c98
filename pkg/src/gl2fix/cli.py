"""Command-line front end.

Usage examples::

    gl2fix count translation --p 2 --subspace 1 --degree 4 --brute-force
    gl2fix pgl-scan --p 2 --max-degree 8
    gl2fix verify all --max-q 5 --max-degree 6 --json

Exit status is 0 on success, 1 when any check in the report fails and the
error's own status (2) when the input is rejected.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field as dc_field, fields
from typing import Any, Callable, Sequence

from . import __version__, verify
from .action import MODES, PROJECTIVE, act, fixed_by_set, pgl_fixed_scan
from .errors import Gl2FixError, MissingArgument
from .ff import Field, element_order, make_field
from .invariant import (
    CountReport,
    count_homothety_invariant,
    count_translation_invariant,
    decompose_homothety,
    decompose_translation_invariant,
    enumerate_homothety_invariant,
    enumerate_translation_invariant,
    homothety_formula,
    homothety_polynomial,
    subspace_polynomial,
    translation_invariant_formula,
)
from .parse import parse_element, parse_generators, parse_matrix, parse_modulus, parse_poly, parse_subspace
from .poly import normalize_monic
from .psubgroup import closure, conjugate_to_translations, count_fixed_by_p_subgroup

TARGETS = {
    "count": ("translation", "homothety", "psubgroup"),
    "enumerate": ("translation", "homothety"),
    "decompose": ("translation", "homothety"),
    "psubgroup": ("conjugate",),
    "verify": ("all",),
    "act": (),
    "fixed": (),
    "pgl-scan": (),
}


@dataclass(frozen=True)
class Command:
    verb: str
    target: str | None = None
    p: int | None = None
    k: int = 1
    modulus: str | None = None
    subspace: str | None = None
    scalar: str | None = None
    degree: int | None = None
    max_degree: int | None = None
    matrix: str | None = None
    generators: str | None = None
    poly: str | None = None
    mode: str = PROJECTIVE
    max_q: int | None = None
    seed: int = 0
    brute_force: bool = False
    cap: int | None = None
    json: bool = False

    @property
    def name(self) -> str:
        return f"{self.verb} {self.target}" if self.target else self.verb

    def to_argv(self) -> list[str]:
        """Arguments that parse back to this command."""
        argv = [self.verb] + ([self.target] if self.target else [])
        defaults = Command(self.verb)
        for f in fields(self):
            if f.name in ("verb", "target"):
                continue
            value = getattr(self, f.name)
            if value == getattr(defaults, f.name):
                continue
            flag = "--" + f.name.replace("_", "-")
            if isinstance(value, bool):
                argv.append(flag)
            else:
                argv += [flag, str(value)]
        return argv


@dataclass
class Report:
    command: str
    params: dict[str, Any]
    result: Any
    checks: list[dict[str, Any]] = dc_field(default_factory=list)
    version: str = __version__

    @property
    def ok(self) -> bool:
        return all(c["passed"] for c in self.checks)

    def to_dict(self) -> dict[str, Any]:
        return {"version": self.version, "command": self.command, "params": self.params,
                "result": self.result, "checks": self.checks}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    def to_table(self) -> str:
        lines = [f"{self.command}  (gl2fix {self.version})"]
        for key, value in self.params.items():
            lines.append(f"  {key:<18} {value}")
        lines += _table_rows(self.result)
        for c in self.checks:
            mark = "PASS" if c["passed"] else "FAIL"
            lines.append(f"{mark}  {c['name']}" + (f"  [{c['detail']}]" if c["detail"] else ""))
        return "\n".join(lines)


def _table_rows(result: Any, indent: str = "") -> list[str]:
    rows = []
    if isinstance(result, dict):
        for key, value in result.items():
            if isinstance(value, (dict, list)):
                rows.append(f"{indent}{key}:")
                rows += _table_rows(value, indent + "  ")
            else:
                rows.append(f"{indent}{key:<20} {value}")
    elif isinstance(result, list):
        if not result:
            rows.append(f"{indent}(none)")
        rows += [f"{indent}{item}" for item in result]
    elif result is not None:
        rows.append(f"{indent}{result}")
    return rows


# -- argument parsing --

def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, help="field characteristic")
    common.add_argument("--k", type=_positive, default=1, help="extension degree")
    common.add_argument("--modulus", help="defining polynomial in t, e.g. 't^2+1'")
    common.add_argument("--subspace", help="comma-separated F_p-spanning elements")
    common.add_argument("--scalar", help="homothety scalar a")
    common.add_argument("--degree", type=int, help="polynomial degree n")
    common.add_argument("--max-degree", type=int, help="largest degree to scan")
    common.add_argument("--matrix", help="matrix [[a,b],[c,d]]")
    common.add_argument("--generators", help="';'-separated matrices")
    common.add_argument("--poly", help="polynomial in x")
    common.add_argument("--mode", choices=MODES, default=PROJECTIVE, help="fixedness notion")
    common.add_argument("--max-q", type=int, help="largest field order for verify")
    common.add_argument("--seed", type=int, default=0, help="seed for random samples")
    common.add_argument("--brute-force", action="store_true", help="also count by enumeration")
    common.add_argument("--cap", type=_positive, help="largest q^n to enumerate")
    common.add_argument("--json", action="store_true", help="print the JSON report")

    parser = argparse.ArgumentParser(
        prog="gl2fix", description="Irreducible polynomials over F_q fixed by subgroups of GL2(F_q).")
    parser.add_argument("--version", action="version", version=f"gl2fix {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True)
    for verb, targets in TARGETS.items():
        sp = sub.add_parser(verb, parents=[common])
        if targets:
            sp.add_argument("target", choices=targets)
    return parser


def parse_command(argv: Sequence[str]) -> Command:
    ns = build_parser().parse_args(list(argv))
    values = vars(ns)
    values.setdefault("target", None)
    return Command(**values)


# -- dispatch --

def _require(cmd: Command, *names: str) -> None:
    missing = [n for n in names if getattr(cmd, n) is None]
    if missing:
        flags = ", ".join("--" + n.replace("_", "-") for n in missing)
        raise MissingArgument(f"{cmd.name} needs {flags}")


def _field(cmd: Command) -> Field:
    _require(cmd, "p")
    modulus = parse_modulus(cmd.p, cmd.modulus) if cmd.modulus else None
    return make_field(cmd.p, cmd.k, modulus)


def _field_params(F: Field) -> dict[str, Any]:
    return {"p": F.p, "k": F.k, "q": F.q, "modulus": F.format_modulus()}


def _count_report(cmd: Command, r: CountReport) -> Report:
    checks = []
    if r.match is not None:
        checks.append({"name": "formula matches brute force", "passed": r.match,
                       "detail": f"{r.formula_count} vs {r.brute_force_count}"})
    aux = r.auxiliary.get("composition_count")
    if aux is not None:
        checks.append({"name": "count equals irreducible x^k compositions",
                       "passed": aux == r.formula_count, "detail": f"{r.formula_count} vs {aux}"})
    result = r.to_dict()
    del result["params"]
    return Report(cmd.name, r.params, result, checks)


def _count(cmd: Command) -> Report:
    F = _field(cmd)
    _require(cmd, "degree")
    if cmd.target == "translation":
        _require(cmd, "subspace")
        S = parse_subspace(F, cmd.subspace)
        r = count_translation_invariant(S, cmd.degree, cmd.brute_force, cmd.cap)
    elif cmd.target == "homothety":
        _require(cmd, "scalar")
        a = parse_element(F, cmd.scalar)
        r = count_homothety_invariant(a, cmd.degree, cmd.brute_force, cmd.cap)
    else:
        _require(cmd, "generators")
        H = closure(F, parse_generators(F, cmd.generators), cmd.cap)
        r = count_fixed_by_p_subgroup(H, cmd.degree, cmd.brute_force, cmd.cap)
    return _count_report(cmd, r)


def _enumerate(cmd: Command) -> Report:
    F = _field(cmd)
    _require(cmd, "degree")
    params = _field_params(F) | {"degree": cmd.degree}
    if cmd.target == "translation":
        _require(cmd, "subspace")
        S = parse_subspace(F, cmd.subspace)
        found = enumerate_translation_invariant(S, cmd.degree, cmd.cap)
        expected = translation_invariant_formula(F, S.dim, cmd.degree)
        params["subspace"] = str(S)
    else:
        _require(cmd, "scalar")
        a = parse_element(F, cmd.scalar)
        found = enumerate_homothety_invariant(a, cmd.degree, cmd.cap)
        expected = homothety_formula(F, element_order(a), cmd.degree)
        params["scalar"] = str(a)
    result = {"count": len(found), "polynomials": [str(f) for f in found]}
    checks = [{"name": "listed count equals formula", "passed": len(found) == expected,
               "detail": f"{len(found)} vs {expected}"}]
    return Report(cmd.name, params, result, checks)


def _decompose(cmd: Command) -> Report:
    F = _field(cmd)
    _require(cmd, "poly")
    g = parse_poly(F, cmd.poly)
    params = _field_params(F) | {"poly": str(g)}
    if cmd.target == "translation":
        _require(cmd, "subspace")
        S = parse_subspace(F, cmd.subspace)
        P = subspace_polynomial(S)
        f = decompose_translation_invariant(g, S)
        params["subspace"] = str(S)
    else:
        _require(cmd, "scalar")
        a = parse_element(F, cmd.scalar)
        P = homothety_polynomial(a)
        f = decompose_homothety(g, a)
        params["scalar"] = str(a)
    result = {"inner": str(P), "outer": str(f)}
    checks = [{"name": "outer(inner) reproduces the input", "passed": f(P) == g, "detail": ""}]
    return Report(cmd.name, params, result, checks)


def _act(cmd: Command) -> Report:
    F = _field(cmd)
    _require(cmd, "matrix", "poly")
    A, f = parse_matrix(F, cmd.matrix), parse_poly(F, cmd.poly)
    g = act(A, f)
    params = _field_params(F) | {"matrix": str(A), "poly": str(f)}
    result = {"image": str(g), "monic": str(normalize_monic(g)) if not g.is_zero() else "0"}
    return Report(cmd.name, params, result)


def _fixed(cmd: Command) -> Report:
    F = _field(cmd)
    _require(cmd, "poly")
    if cmd.matrix is None and cmd.generators is None:
        raise MissingArgument("fixed needs --matrix or --generators")
    mats = [parse_matrix(F, cmd.matrix)] if cmd.matrix else parse_generators(F, cmd.generators)
    f = parse_poly(F, cmd.poly)
    params = _field_params(F) | {"matrices": ";".join(map(str, mats)), "poly": str(f),
                                 "mode": cmd.mode}
    return Report(cmd.name, params, {"fixed": fixed_by_set(f, mats, cmd.mode)})


def _pgl_scan(cmd: Command) -> Report:
    F = _field(cmd)
    _require(cmd, "max_degree")
    found = pgl_fixed_scan(F, cmd.max_degree, cmd.mode, cmd.cap)
    params = _field_params(F) | {"max_degree": cmd.max_degree, "mode": cmd.mode}
    return Report(cmd.name, params, {"polynomials": [str(f) for f in found]})


def _psubgroup(cmd: Command) -> Report:
    F = _field(cmd)
    _require(cmd, "generators")
    H = closure(F, parse_generators(F, cmd.generators), cmd.cap)
    A, S = conjugate_to_translations(H)
    params = _field_params(F) | {"generators": str(H)}
    result = {"order": H.order, "rank": H.rank, "conjugator": str(A), "subspace": str(S)}
    return Report(cmd.name, params, result)


def _verify(cmd: Command) -> Report:
    max_q = cmd.max_q if cmd.max_q is not None else 5
    max_degree = cmd.max_degree if cmd.max_degree is not None else 6
    params = {"max_q": max_q, "max_degree": max_degree, "seed": cmd.seed}
    checks = [c.to_dict() for c in verify.run_checks(max_q, max_degree, cmd.seed, cmd.cap)]
    passed = sum(c["passed"] for c in checks)
    return Report(cmd.name, params, {"passed": passed, "total": len(checks)}, checks)


HANDLERS: dict[str, Callable[[Command], Report]] = {
    "count": _count,
    "enumerate": _enumerate,
    "decompose": _decompose,
    "act": _act,
    "fixed": _fixed,
    "pgl-scan": _pgl_scan,
    "psubgroup": _psubgroup,
    "verify": _verify,
}


def run(cmd: Command) -> tuple[Report, int]:
    report = HANDLERS[cmd.verb](cmd)
    return report, 0 if report.ok else 1


def main(argv: Sequence[str] | None = None) -> int:
    cmd = parse_command(sys.argv[1:] if argv is None else argv)
    try:
        report, status = run(cmd)
    except Gl2FixError as exc:
        if cmd.json:
            print(json.dumps({"version": __version__, "command": cmd.name,
                              "error": {"code": exc.code, "message": str(exc)}}, indent=2))
        else:
            print(f"gl2fix: error[{exc.code}]: {exc}", file=sys.stderr)
        return exc.exit_status
    print(report.to_json() if cmd.json else report.to_table())
    return status


if __name__ == "__main__":
    sys.exit(main())
