"""The eight acceptance criteria, checked exactly.

Run under pytest, or directly with ``python tests/test_acceptance.py`` for
one PASS/FAIL line per criterion.
"""

from __future__ import annotations

import io
import json
import random
import sys
from contextlib import redirect_stdout
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import (  # noqa: E402
    SWEEP_SIGNATURES,
    brute_hilbert,
    brute_kernel_count,
    closed_form_center,
    fsp_truth_table,
    prime_divisors,
    primes_up_to,
)
from profsol.brauer import ker_b  # noqa: E402
from profsol.cli import main as cli_main  # noqa: E402
from profsol.lie_data import CartanType, admissible_types, cartan_matrix, center, determinant  # noqa: E402
from profsol.number_field import NumberFieldProfile  # noqa: E402
from profsol.qforms import (  # noqa: E402
    DiagonalForm,
    hilbert_symbol,
    isometric_at_all_finite,
    locally_isometric,
    signature,
)
from profsol.solitude import (  # noqa: E402
    CSPPolicy,
    cross_validate,
    enumerate_ker_g,
    finite_splitting_principle,
    report,
)


def _sweep_fields(**kw):
    return [NumberFieldProfile.from_signature(r1, r2, **kw) for r1, r2 in SWEEP_SIGNATURES]


def criterion_1():
    bad = []
    for t in admissible_types(9):
        z = center(t)
        if z.invariant_factors != closed_form_center(t.family, t.rank):
            bad.append(f"{t}: {z}")
        if z.order != determinant(cartan_matrix(t)):
            bad.append(f"{t}: |Z| != det")
    return not bad, f"{len(admissible_types(9))} types" if not bad else "; ".join(bad)


def criterion_2():
    bad = []
    n = 0
    for t in admissible_types(8):
        factors = center(t).invariant_factors
        for r1 in range(7):
            for r2 in range(3):
                if r1 + r2 == 0:
                    continue
                n += 1
                k = NumberFieldProfile.from_signature(r1, r2)
                if ker_b(t, k).total_count != brute_kernel_count(factors, r1, r2):
                    bad.append(f"{t} ({r1},{r2})")
    c2 = ker_b(CartanType("C", 2), NumberFieldProfile.from_signature(3, 0)).total_count - 1
    b3 = ker_b(CartanType("B", 3), NumberFieldProfile.from_signature(2, 0)).total_count - 1
    if (c2, b3) != (3, 1):
        bad.append(f"named counts C2={c2} B3={b3}")
    return not bad, f"{n} cases, C2 (3,0): {c2} nontrivial, B3 (2,0): {b3}" if not bad else "; ".join(bad)


def criterion_3():
    bad = []
    cases = 0
    for t in admissible_types(8):
        for k in _sweep_fields():
            cases += 1
            fsp = finite_splitting_principle(t, k)
            kernel = enumerate_ker_g(t, k)
            trivial = len(kernel) == 1 and kernel[0].is_trivial
            if not fsp == trivial == fsp_truth_table(t.family, t.rank, k.r1):
                bad.append(f"{t} {k.signature}")
    return not bad, f"{cases} cases" if not bad else "; ".join(bad)


def _random_rational(rng):
    return Fraction(rng.choice([-1, 1]) * rng.randint(1, 10**4), rng.randint(1, 10**3))


def criterion_4():
    bad = []
    nonzero = [x for x in range(-50, 51) if x]
    for p in primes_up_to(50):
        for a in nonzero:
            for b in nonzero:
                if hilbert_symbol(a, b, p) != brute_hilbert(a, b, p):
                    bad.append(f"({a},{b})_{p}")
    rng = random.Random(4)
    for _ in range(200):
        a, b, c = _random_rational(rng), _random_rational(rng), _random_rational(rng)
        primes = {2}
        for x in (a, b, c):
            primes |= prime_divisors(x.numerator) | prime_divisors(x.denominator)
        places = ["inf"] + sorted(primes)
        prod_ab = 1
        for v in places:
            h = hilbert_symbol(a, b, v)
            prod_ab *= h
            if h != hilbert_symbol(b, a, v):
                bad.append(f"symmetry {a},{b}@{v}")
            if hilbert_symbol(a, b * c, v) != h * hilbert_symbol(a, c, v):
                bad.append(f"bimultiplicativity {a},{b},{c}@{v}")
        if prod_ab != 1:
            bad.append(f"product formula {a},{b}")
    return not bad, "brute force, product formula, symmetry, bimultiplicativity" if not bad else "; ".join(bad[:5])


def criterion_5():
    bad = []
    pos, neg = DiagonalForm.signed(4, 0), DiagonalForm.signed(0, 4)
    for p in primes_up_to(100):
        if not locally_isometric(pos, neg, p):
            bad.append(f"<1,1,1,1> vs <-1,-1,-1,-1> at {p}")
    if locally_isometric(pos, neg, "inf"):
        bad.append("four signs isometric over R")
    for n in range(5, 10):
        q1, q2 = DiagonalForm.signed(n + 1, n), DiagonalForm.signed(n - 3, n + 4)
        if not isometric_at_all_finite(q1, q2) or signature(q1) == signature(q2):
            bad.append(f"n={n}")
    return not bad, "four-sign swaps certified for n = 5..9" if not bad else "; ".join(bad)


def criterion_6():
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = cli_main(["examples"])
    lines = buf.getvalue().splitlines()
    results = [line for line in lines if line.startswith(("PASS", "FAIL"))]
    ok = code == 0 and results and all(line.startswith("PASS") for line in results)
    return ok, lines[-1] if lines else "no output"


def criterion_7():
    bad = []
    n = 0
    for t in admissible_types(8):
        for k in _sweep_fields(ld_override="yes"):
            for pol in CSPPolicy.all_combinations():
                n += 1
                if not cross_validate(t, k, pol):
                    bad.append(f"{t} {k.signature} {pol}")
    return not bad, f"{n} cases agree" if not bad else "; ".join(bad[:5])


def _fuzz_inputs(seed=8, count=1000):
    rng = random.Random(seed)
    types = admissible_types(25)
    policies = CSPPolicy.all_combinations()
    out = []
    for _ in range(count):
        r1, r2 = rng.randint(0, 12), rng.randint(0, 8)
        if r1 + r2 == 0:
            r1 = 1
        ld = rng.choice(["auto", "yes", "no", "unknown"])
        label = rng.choice(["", "", "Q(8throot7)"])
        k = NumberFieldProfile.from_signature(r1, r2, ld_override=ld, label=label)
        out.append((rng.choice(types), k, rng.choice(policies)))
    return out


def criterion_8():
    inputs = _fuzz_inputs()
    try:
        first = [json.dumps(report(t, k, p), indent=2) for t, k, p in inputs]
        second = [json.dumps(report(t, k, p), indent=2) for t, k, p in _fuzz_inputs()]
    except Exception as exc:  # any failure is a criterion failure
        return False, f"{type(exc).__name__}: {exc}"
    return first == second, f"{len(inputs)} random inputs, byte-identical reruns"


CRITERIA = [
    ("1 center correctness", criterion_1),
    ("2 ker b counts", criterion_2),
    ("3 FSP truth table", criterion_3),
    ("4 Hilbert symbol oracle", criterion_4),
    ("5 spin witness certification", criterion_5),
    ("6 example-list fidelity", criterion_6),
    ("7 cross-validation", criterion_7),
    ("8 verdict totality and determinism", criterion_8),
]


def _line(name, ok, detail):
    return f"{'PASS' if ok else 'FAIL'}  criterion {name}: {detail}"


@pytest.mark.parametrize("name,check", CRITERIA, ids=[c[0].split()[0] for c in CRITERIA])
def test_criterion(name, check, capsys):
    ok, detail = check()
    with capsys.disabled():
        print("\n" + _line(name, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for name, check in CRITERIA:
        ok, detail = check()
        failed += not ok
        print(_line(name, ok, detail))
    sys.exit(1 if failed else 0)
