"""Command line front end.

Exit codes: 0 success, 1 failed check, 2 bad arguments, 3 missing data.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from . import qforms
from .brauer import ker_b
from .lie_data import CartanType, admissible_types
from .number_field import NumberFieldProfile, parse_profile
from .solitude import (
    CSPPolicy,
    Outcome,
    cross_validate,
    finite_splitting_principle,
    report,
    solitude_verdict,
)

EXPECTED = {"solitary_or_ngr": Outcome.SOLITARY, "not_solitary": Outcome.NOT_SOLITARY}
EXAMPLES_RESOURCE = "named_examples.txt"
SWEEP_SIGNATURES = ((0, 1), (0, 2), (1, 0), (1, 1), (2, 0), (2, 1), (3, 0), (4, 0), (4, 2))

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DATA = 0, 1, 2, 3


class DataError(Exception):
    """Missing or unusable data file."""


@dataclass(frozen=True)
class NamedExample:
    display_name: str
    type: CartanType
    field: NumberFieldProfile
    expected: str


def parse_examples(text: str) -> list[NamedExample]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split(";")]
        if len(parts) != 4:
            raise DataError(f"line {lineno}: expected 4 fields, got {len(parts)}")
        name, tname, spec, expected = parts
        if expected not in EXPECTED:
            raise DataError(f"line {lineno}: unknown expectation {expected!r}")
        try:
            out.append(NamedExample(name, CartanType.parse(tname), parse_profile(spec), expected))
        except ValueError as exc:
            raise DataError(f"line {lineno}: {exc}") from exc
    return out


def load_examples(path: str | Path | None = None) -> list[NamedExample]:
    try:
        if path is None:
            text = resources.files("profsol.data").joinpath(EXAMPLES_RESOURCE).read_text("utf-8")
        else:
            text = Path(path).read_text("utf-8")
    except OSError as exc:
        raise DataError(f"cannot read examples: {exc}") from exc
    examples = parse_examples(text)
    if not examples:
        raise DataError("example fixture is empty")
    return examples


# -- argument parsing ----------------------------------------------------------

_POLICY = {"true": "assume_true", "false": "assume_false", "unknown": "unknown"}

# Tokens such as "-1,-1,-1,-1" would be read as option flags.
_NEGATIVE_LIST = re.compile(r"-[0-9][0-9/,\-\s]*")


def _global_flags(parser, suppress):
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--json", action="store_true", default=default(False),
                        help="emit machine-readable JSON")
    parser.add_argument("--policy-a1", choices=sorted(_POLICY), default=default("unknown"),
                        help="assume CSP for anisotropic higher rank A_1 forms")
    parser.add_argument("--policy-f4", choices=sorted(_POLICY), default=default("unknown"),
                        help="assume CSP for lattices in F4(-20)")


def _group_args(parser, required=True):
    parser.add_argument("--type", required=required,
                        help="family letter (with --rank) or a full type such as E7")
    parser.add_argument("--rank", type=int)
    parser.add_argument("--field", required=required,
                        help="profile such as deg=2,r1=2,r2=0[,ld=..][,label=..]")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="profsol",
        description="Profinite solitude verdicts for split simple groups over number fields.",
    )
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="solitude verdict with kernel sizes")
    _group_args(p)
    p = sub.add_parser("fsp", parents=[common], help="finite splitting principle")
    _group_args(p)
    p = sub.add_parser("kerb", parents=[common], help="kernel of b on H^2(k, Z(G))")
    _group_args(p)
    p = sub.add_parser("witness", parents=[common], help="witness group for NotSolitary")
    _group_args(p)
    p = sub.add_parser("examples", parents=[common], help="check the named example list")
    p.add_argument("--fixture", help="alternative example file")
    p = sub.add_parser("qform-check", parents=[common], help="compare two diagonal forms over Q")
    p.add_argument("form1", help="comma separated rationals, e.g. 1,1,1,1")
    p.add_argument("form2")
    p.add_argument("--primes", type=int, default=0,
                   help="also tabulate every prime up to this bound")
    p = sub.add_parser("crossval", parents=[common],
                       help="decision tree vs enumeration oracle (sweep by default)")
    _group_args(p, required=False)
    p.add_argument("--max-rank", type=int, default=8)
    return parser


def _cartan_type(args, parser) -> CartanType:
    try:
        if args.rank is None:
            return CartanType.parse(args.type)
        return CartanType(args.type.strip().upper(), args.rank)
    except ValueError as exc:
        parser.error(str(exc))


def _profile(args, parser) -> NumberFieldProfile:
    try:
        return parse_profile(args.field)
    except ValueError as exc:
        parser.error(str(exc))


def _policy(args) -> CSPPolicy:
    return CSPPolicy(_POLICY[args.policy_a1], _POLICY[args.policy_f4])


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))


def _table(rows: list[tuple[str, str]]) -> list[str]:
    width = max(len(k) for k, _ in rows)
    return [f"{k.ljust(width)}  {v}" for k, v in rows]


def _fmt(value) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if value is None:
        return "-"
    return str(value)


# -- subcommands -----------------------------------------------------------------

def cmd_classify(args, parser) -> int:
    t, k = _cartan_type(args, parser), _profile(args, parser)
    rep = report(t, k, _policy(args))
    rows = [(key, _fmt(rep[key])) for key in
            ("type", "rank", "field", "fsp", "outcome", "witness", "ker_b_count",
             "ker_g_count", "reason")]
    if rep["branches"]:
        rows.append(("if CSP holds", rep["branches"]["if_csp_holds"]))
        rows.append(("if CSP fails", rep["branches"]["if_csp_fails"]))
    rows += [("assumption", a) for a in rep["assumptions_used"]]
    _emit(args, rep, _table(rows))
    return EXIT_OK


def cmd_fsp(args, parser) -> int:
    t, k = _cartan_type(args, parser), _profile(args, parser)
    value = finite_splitting_principle(t, k)
    payload = {"type": t.family, "rank": t.rank, "field": k.to_spec(), "fsp": value}
    _emit(args, payload, [f"fsp: {_fmt(value)}"])
    return EXIT_OK


def _support(s) -> list[str]:
    return [str(v) for v in sorted(s)]


def cmd_kerb(args, parser) -> int:
    t, k = _cartan_type(args, parser), _profile(args, parser)
    d = ker_b(t, k)
    elements = [[_support(s) for s in e] for e in d.nontrivial_elements()]
    payload = {
        "type": t.family,
        "rank": t.rank,
        "field": k.to_spec(),
        "coordinate_count": d.coordinate_count,
        "f2_dimension_per_coordinate": d.f2_dimension_per_coordinate,
        "count": d.total_count,
        "nontrivial_count": d.total_count - 1,
        "generators": [_support(s) for s in d.generators],
        "nontrivial_elements": elements,
    }
    lines = [f"count: {d.total_count} ({d.total_count - 1} nontrivial)"]
    for e in elements:
        lines.append("  " + " | ".join("{" + ",".join(c) + "}" for c in e))
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_witness(args, parser) -> int:
    t, k = _cartan_type(args, parser), _profile(args, parser)
    v = solitude_verdict(t, k, _policy(args))
    payload = {
        "type": t.family, "rank": t.rank, "field": k.to_spec(),
        "outcome": v.outcome.value, "witness": v.witness,
        "assignment": [r.name for r in v.witness_assignment.forms]
        if v.witness_assignment else None,
    }
    if v.outcome is not Outcome.NOT_SOLITARY:
        _emit(args, payload, [f"no witness: outcome is {v.outcome.value}"])
        return EXIT_FAIL
    _emit(args, payload, [f"witness: {v.witness}"])
    return EXIT_OK


def cmd_examples(args, parser) -> int:
    try:
        examples = load_examples(args.fixture)
    except DataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    policy = _policy(args)
    results = []
    for ex in examples:
        got = solitude_verdict(ex.type, ex.field, policy).outcome
        ok = got is EXPECTED[ex.expected]
        results.append({"name": ex.display_name, "type": str(ex.type),
                        "expected": EXPECTED[ex.expected].value, "got": got.value, "pass": ok})
    failures = sum(not r["pass"] for r in results)
    lines = [f"{'PASS' if r['pass'] else 'FAIL'}  {r['name']:<20} {r['type']:<5} {r['got']}"
             for r in results]
    lines.append(f"{len(results) - failures}/{len(results)} passed")
    _emit(args, {"results": results, "passed": len(results) - failures,
                 "failed": failures}, lines)
    return EXIT_FAIL if failures else EXIT_OK


def _primes_up_to(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if all(p % d for d in range(2, int(p**0.5) + 1))]


def cmd_qform_check(args, parser) -> int:
    try:
        q1 = qforms.DiagonalForm.parse(args.form1)
        q2 = qforms.DiagonalForm.parse(args.form2)
    except ValueError as exc:
        parser.error(str(exc))
    primes = sorted(set(qforms.relevant_primes(q1, q2)) | set(_primes_up_to(args.primes)))
    rows = []
    for v in ["inf"] + primes:
        i1, i2 = qforms.local_invariants(q1, v), qforms.local_invariants(q2, v)
        rows.append({
            "place": "R" if v == "inf" else f"Q_{v}",
            "form1": {"dim": i1.dim, "disc": i1.disc_class, "hasse": i1.hasse},
            "form2": {"dim": i2.dim, "disc": i2.disc_class, "hasse": i2.hasse},
            "isometric": qforms.locally_isometric(q1, q2, v),
        })
        if v == "inf":
            rows[-1]["form1"]["signature"] = list(qforms.signature(q1))
            rows[-1]["form2"]["signature"] = list(qforms.signature(q2))
    finite = qforms.isometric_at_all_finite(q1, q2)
    real = qforms.locally_isometric(q1, q2, "inf")
    payload = {"form1": str(q1), "form2": str(q2), "places": rows,
               "finite_isometric": finite, "real_isometric": real}
    lines = [f"form1 {q1}", f"form2 {q2}",
             f"{'place':<6} {'dim':>3} {'disc1':>6} {'disc2':>6} {'hasse1':>6} {'hasse2':>6}  iso"]
    for r in rows:
        a, b = r["form1"], r["form2"]
        lines.append(f"{r['place']:<6} {a['dim']:>3} {a['disc']:>6} {b['disc']:>6} "
                     f"{a['hasse']:>6} {b['hasse']:>6}  {_fmt(r['isometric'])}")
    lines.append(f"finite-isometric: {_fmt(finite)}")
    lines.append(f"real-isometric: {_fmt(real)}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_crossval(args, parser) -> int:
    policies = CSPPolicy.all_combinations()
    if args.type or args.field:
        if not (args.type and args.field):
            parser.error("crossval needs both --type and --field, or neither")
        cases = [(_cartan_type(args, parser), _profile(args, parser))]
    else:
        cases = [
            (t, NumberFieldProfile.from_signature(r1, r2, ld_override="yes"))
            for t in admissible_types(args.max_rank)
            for r1, r2 in SWEEP_SIGNATURES
        ]
    disagreements = []
    try:
        for t, k in cases:
            for pol in policies:
                if not cross_validate(t, k, pol):
                    disagreements.append(f"{t} {k.to_spec()} {pol}")
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    checked = len(cases) * len(policies)
    payload = {"checked": checked, "disagreements": disagreements}
    lines = [f"checked {checked} cases, {len(disagreements)} disagreements"] + disagreements
    _emit(args, payload, lines)
    return EXIT_FAIL if disagreements else EXIT_OK


COMMANDS = {
    "classify": cmd_classify,
    "fsp": cmd_fsp,
    "kerb": cmd_kerb,
    "witness": cmd_witness,
    "examples": cmd_examples,
    "qform-check": cmd_qform_check,
    "crossval": cmd_crossval,
}


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    argv = [" " + a if _NEGATIVE_LIST.fullmatch(a) else a for a in argv]
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args, parser)
    except SystemExit as exc:
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
