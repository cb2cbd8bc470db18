"""Command line interface.

Subcommands: validate, analyze, scramble, verify-paper.  Exit codes:
0 success, 1 validation or check failure, 2 usage error, 3 internal
self-check failure.  All output is deterministic; --json output is
byte-stable across runs.
"""

from __future__ import annotations

import argparse
import itertools
import json
import re
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any

from . import exterior
from .capability import CapabilityDisagreement, catalog, decide_capability
from .decompose import DecompositionCheckError, heisenberg_decompose
from .exterior import ConstructionError
from .linalg import Subspace
from .lie import (
    InvalidAlgebraError,
    LieAlgebra,
    abelian,
    direct_sum,
    from_bracket_list,
    heisenberg,
    scramble,
)
from .multiplier import (
    abelian_multiplier_dim,
    classified_multiplier,
    direct_sum_multiplier_dim,
    heisenberg_exterior_square_dim,
    heisenberg_multiplier_dim,
)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")
_EXPR_RE = re.compile(r"^\s*[AH]\(\d+\)(\s*\+\s*[AH]\(\d+\))*\s*$")
_TERM_RE = re.compile(r"([AH])\((\d+)\)")


class InputError(Exception):
    """Bad algebra input; maps to exit code 1."""


class UsageError(Exception):
    """Bad invocation; maps to exit code 2."""


# ---------------------------------------------------------------------------
# input handling


def parse_expression(text: str) -> LieAlgebra:
    """Builtin expressions: terms A(n) or H(m) joined by '+'."""
    terms = []
    for kind, num in _TERM_RE.findall(text):
        value = int(num)
        if kind == "A":
            terms.append(abelian(value))
        else:
            if value < 1:
                raise UsageError("H(m) needs m >= 1")
            terms.append(heisenberg(value))
    algebra = terms[0]
    for t in terms[1:]:
        algebra = direct_sum(algebra, t)
    return algebra


def load_algebra_file(path: str) -> LieAlgebra:
    try:
        raw = Path(path).read_text()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e}") from None
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: not valid JSON ({e})") from None
    if not isinstance(doc, dict):
        raise InputError(f"{path}: top level must be an object")
    dim = doc.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
        raise InputError(f"{path}: 'dim' must be a non-negative integer")
    labels = doc.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != dim or not all(isinstance(s, str) for s in labels):
            raise InputError(f"{path}: 'labels' must be a list of {dim} strings")
    brackets = doc.get("brackets", [])
    if not isinstance(brackets, list):
        raise InputError(f"{path}: 'brackets' must be a list")
    entries = []
    for idx, entry in enumerate(brackets):
        where = f"{path}: brackets[{idx}]"
        if not isinstance(entry, dict):
            raise InputError(f"{where} must be an object")
        i, j = entry.get("i"), entry.get("j")
        if not isinstance(i, int) or not isinstance(j, int) or isinstance(i, bool) or isinstance(j, bool):
            raise InputError(f"{where}: 'i' and 'j' must be integers")
        if not (0 <= i < j < dim):
            raise InputError(f"{where}: need 0 <= i < j < dim, got ({i}, {j})")
        coeffs = entry.get("coeffs", {})
        if not isinstance(coeffs, dict):
            raise InputError(f"{where}: 'coeffs' must be an object")
        parsed: dict[int, Fraction] = {}
        for key, val in coeffs.items():
            if not isinstance(key, str) or not key.isdigit():
                raise InputError(f"{where}: coefficient key {key!r} is not a basis index")
            k = int(key)
            if not 0 <= k < dim:
                raise InputError(f"{where}: coefficient index {k} out of range")
            if isinstance(val, int) and not isinstance(val, bool):
                parsed[k] = Fraction(val)
            elif isinstance(val, str) and _RATIONAL_RE.match(val):
                parsed[k] = Fraction(val)
            else:
                raise InputError(f"{where}: coefficient {val!r} is not an exact rational string")
        entries.append((i, j, parsed))
    try:
        return from_bracket_list(dim, entries, labels=labels)
    except InvalidAlgebraError as e:
        raise InputError(f"{path}: {e}") from None


def load_input(text: str) -> tuple[LieAlgebra, str]:
    if _EXPR_RE.match(text):
        return parse_expression(text), text.strip()
    if Path(text).exists():
        return load_algebra_file(text), text
    raise UsageError(f"not a builtin expression or readable file: {text}")


def algebra_to_doc(algebra: LieAlgebra) -> dict[str, Any]:
    brackets = []
    for (i, j) in sorted(algebra.brackets):
        c = algebra.brackets[(i, j)]
        coeffs = {str(k): str(v) for k, v in enumerate(c) if v}
        brackets.append({"i": i, "j": j, "coeffs": coeffs})
    return {"dim": algebra.dim, "labels": list(algebra.labels), "brackets": brackets}


# ---------------------------------------------------------------------------
# analyze


def build_report(algebra: LieAlgebra, source: str, method: str) -> dict[str, Any]:
    derived = algebra.derived_subalgebra()
    series = algebra.lower_central_series()
    nilpotent = series[-1].is_zero()
    report: dict[str, Any] = {
        "input": {"source": source, "dim": algebra.dim, "labels": list(algebra.labels)},
        "validation": {"ok": True},
        "dims": {
            "dim": algebra.dim,
            "derived": derived.dim,
            "center": algebra.center().dim,
            "lower_central_series": [s.dim for s in series],
            "nilpotent": nilpotent,
        },
    }

    decomposition = None
    if nilpotent and derived.dim == 1:
        dec = heisenberg_decompose(algebra)
        decomposition = {"m": dec.m, "k": dec.k}
    report["decomposition"] = decomposition

    formula_m = formula_ext = None
    if method in ("formula", "both"):
        try:
            rep = classified_multiplier(algebra)
            formula_m, formula_ext = rep.dim_multiplier, rep.dim_exterior_square
        except ValueError:
            pass
    oracle_m = oracle_ext = center_dim = None
    if method in ("oracle", "both"):
        ext = exterior.exterior_square(algebra)
        oracle_m, oracle_ext = ext.multiplier_dim(), ext.quotient_dim
        center_dim = exterior.exterior_center(algebra).dim

    report["multiplier_dim"] = {"formula": formula_m, "oracle": oracle_m}
    report["exterior_square_dim"] = {"formula": formula_ext, "oracle": oracle_ext}
    report["exterior_center_dim"] = center_dim

    mode = {"formula": "classify", "oracle": "oracle", "both": "both"}[method]
    verdict = decide_capability(algebra, mode)
    report["capability"] = {
        "capable": verdict.capable,
        "family": verdict.family,
        "parameters": {
            key: value
            for key, value in (("n", verdict.n), ("m", verdict.m), ("k", verdict.k))
            if value is not None
        },
        "method": method,
        "reasons": list(verdict.reasons),
        "oracle_agreement": verdict.oracle_agreement,
    }
    return report


def render_report(report: dict[str, Any]) -> str:
    lines = []
    lines.append(f"source: {report['input']['source']}")
    lines.append(f"dim: {report['input']['dim']}")
    if report["input"]["labels"]:
        lines.append("labels: " + " ".join(report["input"]["labels"]))
    dims = report["dims"]
    lines.append(f"derived dim: {dims['derived']}")
    lines.append(f"center dim: {dims['center']}")
    lines.append("lower central series dims: " + " ".join(str(d) for d in dims["lower_central_series"]))
    lines.append(f"nilpotent: {'yes' if dims['nilpotent'] else 'no'}")
    if report["decomposition"] is not None:
        lines.append(f"decomposition: m={report['decomposition']['m']} k={report['decomposition']['k']}")
    for label, key in (("dim M", "multiplier_dim"), ("dim L^L", "exterior_square_dim")):
        for method in ("formula", "oracle"):
            value = report[key][method]
            if value is not None:
                lines.append(f"{label} ({method}): {value}")
    if report["exterior_center_dim"] is not None:
        lines.append(f"exterior center dim: {report['exterior_center_dim']}")
    cap = report["capability"]
    capable = cap["capable"]
    lines.append("capable: " + ("undecided" if capable is None else ("yes" if capable else "no")))
    lines.append(f"family: {cap['family']}")
    for reason in cap["reasons"]:
        lines.append(f"reason: {reason}")
    if cap["oracle_agreement"] is not None:
        lines.append(f"oracle agreement: {'yes' if cap['oracle_agreement'] else 'no'}")
    return "\n".join(lines)


def cmd_analyze(args: argparse.Namespace) -> int:
    algebra, source = load_input(args.algebra)
    violation = algebra.validate()
    if violation is not None:
        if args.json:
            doc = {"input": {"source": source}, "validation": {"ok": False, "jacobi_violation": list(violation)}}
            print(json.dumps(doc, indent=2))
        else:
            print(f"validation: Jacobi identity fails at basis triple {violation}", file=sys.stderr)
        return EXIT_INVALID
    report = build_report(algebra, source, args.method)
    print(json.dumps(report, indent=2) if args.json else render_report(report))
    return EXIT_OK


# ---------------------------------------------------------------------------
# validate / scramble


def cmd_validate(args: argparse.Namespace) -> int:
    algebra = load_algebra_file(args.file)
    violation = algebra.validate()
    if violation is not None:
        print(f"invalid: Jacobi identity fails at basis triple {violation}", file=sys.stderr)
        return EXIT_INVALID
    print(f"ok: dim={algebra.dim} brackets={len(algebra.brackets)}")
    return EXIT_OK


def cmd_scramble(args: argparse.Namespace) -> int:
    if not _EXPR_RE.match(args.expression):
        raise UsageError(f"scramble takes a builtin expression, got: {args.expression}")
    algebra = parse_expression(args.expression)
    scrambled = scramble(algebra, args.seed)
    print(json.dumps(algebra_to_doc(scrambled), indent=2))
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify-paper: the published closed-form results vs the construction


def _verify_checks() -> list[dict[str, Any]]:
    checks: list[dict[str, Any]] = []

    def add(claim: str, expected: Any, computed: Any) -> None:
        checks.append(
            {
                "claim": claim,
                "expected": str(expected),
                "computed": str(computed),
                "pass": str(expected) == str(computed),
            }
        )

    for n in range(1, 8):
        add(f"dim M(A({n}))", abelian_multiplier_dim(n), exterior.multiplier_dim(abelian(n)))
        add(
            f"commutator map of A({n}) is zero",
            True,
            exterior.exterior_square(abelian(n)).commutator_map.rank() == 0,
        )
    for m in (1, 2, 3):
        add(f"dim M(H({m}))", heisenberg_multiplier_dim(m), exterior.multiplier_dim(heisenberg(m)))
        add(
            f"dim(H({m}) ^ H({m}))",
            heisenberg_exterior_square_dim(m),
            exterior.exterior_square_dim(heisenberg(m)),
        )

    parts = [(f"A({n})", abelian(n)) for n in (1, 2, 3)]
    parts += [(f"H({m})", heisenberg(m)) for m in (1, 2)]
    for (name1, l1), (name2, l2) in itertools.combinations_with_replacement(parts, 2):
        expected = direct_sum_multiplier_dim(
            exterior.multiplier_dim(l1),
            exterior.multiplier_dim(l2),
            l1.dim - l1.derived_subalgebra().dim,
            l2.dim - l2.derived_subalgebra().dim,
        )
        add(f"dim M({name1}+{name2}) from summands", expected, exterior.multiplier_dim(direct_sum(l1, l2)))

    add("dim M(H(1)+A(1))", 4, exterior.multiplier_dim(direct_sum(heisenberg(1), abelian(1))))

    expected_capability = [(f"A({n})", abelian(n), n >= 2) for n in range(1, 7)]
    expected_capability += [(f"H({m})", heisenberg(m), m == 1) for m in (1, 2, 3)]
    expected_capability += [
        (f"H({m})+A({k})", direct_sum(heisenberg(m), abelian(k)), m == 1)
        for m in (1, 2, 3)
        for k in (1, 2, 3)
    ]
    for name, algebra, expected in expected_capability:
        verdict = decide_capability(algebra, "both")  # raises on disagreement
        add(f"{name} capable", expected, verdict.capable)

    for n in range(2, 7):
        add(f"dim Z^(A({n}))", 0, exterior.exterior_center(abelian(n)).dim)
    add("dim Z^(H(1))", 0, exterior.exterior_center(heisenberg(1)).dim)
    for m in (2, 3):
        add(
            f"Z^(H({m})) equals the derived subalgebra",
            True,
            exterior.exterior_center(heisenberg(m)) == heisenberg(m).derived_subalgebra(),
        )

    named = [(name, algebra) for name, algebra in catalog() if "scramble" not in name]
    for name, algebra in named:
        zc = exterior.exterior_center(algebra)
        quotient, _ = algebra.quotient(zc)
        add(
            f"dim({name} ^ {name}) survives the quotient by Z^",
            exterior.exterior_square_dim(algebra),
            exterior.exterior_square_dim(quotient),
        )

    h1 = heisenberg(1)
    add("dim((H(1)/Z) ^ (H(1)/Z))", 1, exterior.quotient_exterior_dim(h1, h1.derived_subalgebra()))
    for m in (2, 3):
        hm = heisenberg(m)
        add(
            f"derived subalgebra of H({m}) inside Z^",
            True,
            exterior.ideal_in_exterior_center(hm, hm.derived_subalgebra()),
        )
    h1a1 = direct_sum(heisenberg(1), abelian(1))
    apart = Subspace.span(4, [(0, 0, 0, 1)])
    add("abelian summand of H(1)+A(1) inside Z^", False, exterior.ideal_in_exterior_center(h1a1, apart))
    return checks


def cmd_verify_paper(args: argparse.Namespace) -> int:
    checks = _verify_checks()
    all_pass = all(c["pass"] for c in checks)
    if args.json:
        print(json.dumps({"checks": checks, "all_pass": all_pass}, indent=2))
    else:
        width = max(len(c["claim"]) for c in checks)
        for c in checks:
            status = "ok" if c["pass"] else "FAIL"
            line = f"{c['claim']:<{width}}  expected {c['expected']:>5}  computed {c['computed']:>5}  {status}"
            print(line)
        print(f"{len(checks)} checks, {'all passed' if all_pass else 'FAILURES above'}")
    return EXIT_OK if all_pass else EXIT_INVALID


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liecap",
        description="Exact exterior squares, Schur multipliers and capability of Lie algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a JSON structure-constant file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("analyze", help="full report for a file or builtin expression like H(2)+A(3)")
    p.add_argument("algebra")
    p.add_argument("--method", choices=("formula", "oracle", "both"), default="both")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("scramble", help="emit a builtin algebra in a seeded random basis")
    p.add_argument("expression")
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_scramble)

    p = sub.add_parser("verify-paper", help="check the published closed forms against the construction")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_paper)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (InputError, InvalidAlgebraError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    except (ConstructionError, DecompositionCheckError, CapabilityDisagreement) as e:
        print(f"internal check failed: {e}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
