"""
Solitude verdicts across types and fields
=========================================

The verdict combines the finite splitting principle, local determinacy of
the field and the archimedean rank of the twists in ker g.  Two families
of cases depend on unproven congruence subgroup statements; a policy
decides what to assume there.
"""

from profsol.lie_data import CartanType
from profsol.number_field import NumberFieldProfile, parse_profile
from profsol.solitude import CSPPolicy, Outcome, cross_validate, solitude_verdict

SHORT = {
    Outcome.SOLITARY: "solitary",
    Outcome.NOT_SOLITARY: "NOT",
    Outcome.CSP_CONDITIONAL: "csp?",
    Outcome.OUTSIDE: "-",
}

signatures = [(1, 0), (0, 1), (1, 1), (2, 0), (3, 0), (2, 1)]
names = ["A1", "A2", "A3", "B3", "B4", "B5", "C2", "D4", "D5", "D6", "E6", "E7", "E8", "F4", "G2"]

print("type " + "".join(f"{r1},{r2}".rjust(10) for r1, r2 in signatures))
for name in names:
    t = CartanType.parse(name)
    row = [SHORT[solitude_verdict(t, NumberFieldProfile.from_signature(*s)).outcome]
           for s in signatures]
    print(f"{name:<5}" + "".join(f"{c:>10}" for c in row))

# Witnesses name a concrete twist.
for name, spec in [("B5", "r1=1,r2=0,label=Q"), ("C3", "r1=2,r2=0,label=Q(sqrt2)"),
                   ("E8", "r1=1,r2=0,label=Q"), ("A2", "r1=2,r2=3,label=Q(8throot7)")]:
    v = solitude_verdict(CartanType.parse(name), parse_profile(spec))
    print(f"\n{name} over {spec}: {v.outcome}\n  witness: {v.witness}\n  reason: {v.reason}")

# F_4 over Q under each policy.
f4, q = CartanType("F", 4), NumberFieldProfile.rationals()
for value in ("unknown", "assume_true", "assume_false"):
    v = solitude_verdict(f4, q, CSPPolicy(f4_rank_one_csp=value))
    print(f"F4 over Q, policy {value}: {v.outcome}")

# The decision tree agrees with the enumeration oracle.
k = NumberFieldProfile.from_signature(2, 1)
print("\ncross-validated:", all(cross_validate(CartanType.parse(n), k) for n in names))
