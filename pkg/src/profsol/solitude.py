"""Finite splitting principle, kernel of ``g``, and the solitude verdict.

``g`` localizes ``H^1(k, Aut G)`` at the finite places.  Its kernel is the
image of the classes in ``H^1(k, Ad G)`` that are trivial at every finite
place, and such a class is pinned down by one inner real form per real
place whose ``H^2`` invariants add up to zero.  :func:`enumerate_ker_g`
lists those choices as :class:`Assignment` objects.

:func:`solitude_verdict` is the closed-form decision tree.  :func:`cross_validate`
recomputes the verdict from the enumerated kernel and a small table of
resolution rules, and compares.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from .brauer import ker_b
from .lie_data import CartanType
from .number_field import NumberFieldProfile, local_determinacy
from .real_forms import RealFormRecord, inner_real_forms, invariant_length

MAX_ENUMERATION_R1 = 8
POLICY_VALUES = ("assume_true", "assume_false", "unknown")

# Raghunathan: isotropic groups with archimedean rank >= 2 have finite congruence kernel.
HIGHER_RANK = 2


class Outcome(str, enum.Enum):
    SOLITARY = "SolitaryOrNotGrothendieckRigid"
    NOT_SOLITARY = "NotSolitary"
    CSP_CONDITIONAL = "CSPConditional"
    OUTSIDE = "OutsideTheorems"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class CSPPolicy:
    """What to assume about the congruence subgroup property in open cases.

    ``serre_conjecture_a1`` concerns anisotropic higher rank ``A_1`` forms;
    ``f4_rank_one_csp`` concerns lattices in ``F4(-20)``.
    """

    serre_conjecture_a1: str = "unknown"
    f4_rank_one_csp: str = "unknown"

    def __post_init__(self):
        for name in ("serre_conjecture_a1", "f4_rank_one_csp"):
            if getattr(self, name) not in POLICY_VALUES:
                raise ValueError(f"{name} must be one of {POLICY_VALUES}")

    @classmethod
    def all_combinations(cls) -> list["CSPPolicy"]:
        return [cls(a, f) for a in POLICY_VALUES for f in POLICY_VALUES]


DEFAULT_POLICY = CSPPolicy()


@dataclass(frozen=True)
class Assignment:
    """One inner real form per real place of ``k`` (place ``i`` is ``v_i``)."""

    forms: tuple[RealFormRecord, ...]

    def invariant_sum(self) -> tuple[int, ...]:
        if not self.forms:
            return ()
        length = len(self.forms[0].h2_invariant)
        return tuple(sum(r.h2_invariant[i] for r in self.forms) % 2 for i in range(length))

    @property
    def is_realizable(self) -> bool:
        return not any(self.invariant_sum())

    @property
    def is_trivial(self) -> bool:
        return all(r.is_split for r in self.forms)

    def nonsplit_places(self) -> list[int]:
        return [i for i, r in enumerate(self.forms) if not r.is_split]

    def __str__(self):
        if not self.forms:
            return "()"
        return " x ".join(r.name for r in self.forms)


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    fsp: bool
    witness: str | None = None
    witness_assignment: Assignment | None = None
    if_csp_holds: Outcome | None = None
    if_csp_fails: Outcome | None = None
    reason: str = ""
    assumptions_used: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.outcome is Outcome.NOT_SOLITARY and not self.witness:
            raise ValueError("NotSolitary needs a witness")
        if self.outcome is Outcome.CSP_CONDITIONAL and (
            self.if_csp_holds is None or self.if_csp_fails is None
        ):
            raise ValueError("CSPConditional needs both branches")


def finite_splitting_principle(t: CartanType, k: NumberFieldProfile) -> bool:
    if k.r1 == 0:
        return True
    if t.family == "A" and t.rank % 2 == 0:
        return True
    return k.r1 == 1 and (t.family == "C" or (t.family == "A" and t.rank % 2 == 1))


def _check_enumerable(k: NumberFieldProfile) -> None:
    if k.r1 > MAX_ENUMERATION_R1:
        raise ValueError(
            f"enumeration is limited to r1 <= {MAX_ENUMERATION_R1}, field has r1 = {k.r1}"
        )


@lru_cache(maxsize=4096)
def _ker_g(t: CartanType, r1: int) -> tuple[Assignment, ...]:
    forms = inner_real_forms(t)
    out = []
    for combo in product(forms, repeat=r1):
        a = Assignment(combo)
        if a.is_realizable:
            out.append(a)
    return tuple(out)


def enumerate_ker_g(t: CartanType, k: NumberFieldProfile) -> list[Assignment]:
    """All realizable assignments, the trivial (all split) one first."""
    _check_enumerable(k)
    return list(_ker_g(t, k.r1))


def count_ker_g(t: CartanType, k: NumberFieldProfile) -> int:
    """Size of the modeled ``ker g`` without listing it (any ``r1``)."""
    length = invariant_length(t)
    counts: dict[tuple[int, ...], int] = {(0,) * length: 1}
    forms = inner_real_forms(t)
    for _ in range(k.r1):
        nxt: dict[tuple[int, ...], int] = {}
        for inv, c in counts.items():
            for r in forms:
                key = tuple((x + y) % 2 for x, y in zip(inv, r.h2_invariant))
                nxt[key] = nxt.get(key, 0) + c
        counts = nxt
    return counts.get((0,) * length, 0)


def archimedean_rank(a: Assignment, t: CartanType, k: NumberFieldProfile) -> int:
    """Sum of real ranks over the infinite places; complex places give ``rank(t)``."""
    if len(a.forms) != k.r1:
        raise ValueError(f"assignment covers {len(a.forms)} real places, field has {k.r1}")
    return sum(r.real_rank for r in a.forms) + k.r2 * t.rank


def trivial_assignment(t: CartanType, k: NumberFieldProfile) -> Assignment:
    return Assignment((inner_real_forms(t)[0],) * k.r1)


# -- witnesses ---------------------------------------------------------------

EXTRAPOLATED = "construction extrapolated: compact spin form at one real place"
ISOTROPY = "inner twists of split groups of type other than A_1 are k-isotropic"
CSP_HIGHER_RANK = "k-isotropic groups of archimedean rank >= 2 have finite congruence kernel"
ARITH_EQUIV = "arithmetically equivalent fields give profinitely commensurable Chevalley groups"


@dataclass(frozen=True)
class Witness:
    description: str
    assignment: Assignment | None
    assumptions: tuple[str, ...] = ()


def _find(t: CartanType, name: str) -> RealFormRecord:
    return next(r for r in inner_real_forms(t) if r.name == name)


def _place_phrase(places: list[int], r1: int) -> str:
    if len(places) == r1:
        if r1 == 1:
            return "at the real place"
        if r1 == 2:
            return "at both real places"
        return "at every real place"
    names = [f"v{i}" for i in places]
    if len(names) == 1:
        return f"at real place {names[0]}"
    return f"at real places {' and '.join(names)}"


def _assignment_text(a: Assignment, t: CartanType, k: NumberFieldProfile) -> str:
    nonsplit = a.nonsplit_places()
    form = a.forms[nonsplit[0]]
    name = f"compact {t}" if form.name == "compact" else form.name
    where = _place_phrase(nonsplit, k.r1)
    if k.r1 == 1:
        return f"{name} {where}"
    if len(nonsplit) == k.r1:
        return f"{name} {where}, split at finite places"
    return f"{name} {where}, split elsewhere"


def _one_place(t: CartanType, k: NumberFieldProfile, rec: RealFormRecord) -> Assignment:
    split = inner_real_forms(t)[0]
    return Assignment((rec,) + (split,) * (k.r1 - 1))


def _pair(t: CartanType, k: NumberFieldProfile, rec: RealFormRecord) -> Assignment:
    split = inner_real_forms(t)[0]
    return Assignment((rec, rec) + (split,) * (k.r1 - 2))


def _construct_witness(t: CartanType, k: NumberFieldProfile) -> Witness:
    """Explicit member of ``ker g`` of archimedean rank >= 2 (when one exists)."""
    n, f = t.rank, t.family
    field_name = k.display_name()
    if f in "BD":
        shift = 3 if f == "B" else 4
        big = n + 4
        small = n - shift
        if small == 0:
            # B_3, D_4 away from Q: compact form at a single real place.
            rec = _find(t, f"Spin({big},0)")
            a = _one_place(t, k, rec)
            return Witness(f"Spin(0,{big}) {_place_phrase([0], k.r1)}, split elsewhere", a, (ISOTROPY, EXTRAPOLATED))
        rec = _find(t, f"Spin({big},{small})")
        a = Assignment((rec,) * k.r1)
        return Witness(f"Spin({small},{big}) over {field_name}", a, (ISOTROPY,))
    if f in "EFG":
        rec = max((r for r in inner_real_forms(t) if not r.is_split), key=lambda r: r.real_rank)
        a = _one_place(t, k, rec)
        return Witness(_assignment_text(a, t, k), a, (ISOTROPY,))
    if f in "AC":
        candidates = [r for r in inner_real_forms(t) if not r.is_split]
        # Max real rank, then lexicographically smallest (p, q).
        rec = min(candidates, key=lambda r: (-r.real_rank, r.params or (0, 0)))
        a = _pair(t, k, rec)
        assumptions = () if t == CartanType("A", 1) else (ISOTROPY,)
        return Witness(_assignment_text(a, t, k), a, assumptions)
    raise AssertionError(f"unhandled family {f}")


def _arith_equivalent_witness(t: CartanType, k: NumberFieldProfile) -> Witness:
    return Witness(
        f"split {t} over a field arithmetically equivalent to {k.display_name()}",
        None,
        (ARITH_EQUIV,),
    )


# -- decision tree -----------------------------------------------------------

A1 = CartanType("A", 1)
QFORM_CASES_OVER_Q = frozenset(
    CartanType.parse(s) for s in ("B3", "B4", "D4", "D5", "G2")
)
A1_LOW_RANK_SIGNATURES = frozenset({(2, 0), (3, 0), (2, 1)})

GROTHENDIECK = "verdict is modulo Grothendieck rigidity"


def _solitary_by_splitting(t: CartanType, k: NumberFieldProfile) -> str | None:
    if k.r1 == 0:
        return "k totally imaginary"
    if t.family == "A" and t.rank % 2 == 0:
        return "type A_2n over any field"
    if k.r1 == 1 and (t.family == "C" or (t.family == "A" and t.rank % 2 == 1)):
        return "one real place and type A_(2n+1) or C_n"
    return None


def solitude_verdict(
    t: CartanType, k: NumberFieldProfile, policy: CSPPolicy = DEFAULT_POLICY
) -> Verdict:
    fsp = finite_splitting_principle(t, k)
    ld = local_determinacy(k)

    if t == A1 and (k.is_rationals or k.is_imaginary_quadratic):
        return Verdict(Outcome.OUTSIDE, fsp, reason="split group lacks CSP")

    if ld == "no":
        if t == A1:
            return Verdict(
                Outcome.OUTSIDE, fsp,
                reason="type A_1 over a field that is not locally determined",
            )
        w = _arith_equivalent_witness(t, k)
        return Verdict(
            Outcome.NOT_SOLITARY, fsp, w.description, None,
            reason="field is not locally determined", assumptions_used=w.assumptions,
        )

    if ld == "unknown":
        return Verdict(
            Outcome.OUTSIDE, fsp,
            reason="local determinacy undecided; set ld=yes or ld=no to resolve",
        )

    ld_note = (f"locally determined: ld={k.ld_override}" if k.ld_override != "auto"
               else "locally determined: degree <= 6")
    base = (ld_note, GROTHENDIECK)

    case = _solitary_by_splitting(t, k)
    if case is not None:
        return Verdict(Outcome.SOLITARY, fsp, reason=case, assumptions_used=base)

    if k.is_rationals and t in QFORM_CASES_OVER_Q:
        return Verdict(
            Outcome.SOLITARY, fsp,
            reason="nontrivial twists over Q are compact or rank one at infinity",
            assumptions_used=base,
        )

    if t == A1 and k.signature in A1_LOW_RANK_SIGNATURES:
        return Verdict(
            Outcome.SOLITARY, fsp,
            reason="nontrivial A_1 twists are compact, Fuchsian or Kleinian",
            assumptions_used=base,
        )

    if t == CartanType("F", 4) and k.is_rationals:
        w = _construct_witness(t, k)
        return _conditional(
            policy.f4_rank_one_csp, fsp, w,
            if_holds=Outcome.NOT_SOLITARY, if_fails=Outcome.SOLITARY,
            reason="kernel contains lattices in F4(-20); outcome hinges on their CSP",
            assumptions=base, label="F4(-20) lattices have CSP",
        )

    if t == A1:
        w = _construct_witness(t, k)
        return _conditional(
            policy.serre_conjecture_a1, fsp, w,
            if_holds=Outcome.NOT_SOLITARY, if_fails=Outcome.OUTSIDE,
            reason="kernel contains anisotropic higher rank A_1 forms; outcome hinges on CSP",
            assumptions=base, label="Serre's CSP conjecture for anisotropic A_1",
        )

    w = _construct_witness(t, k)
    return Verdict(
        Outcome.NOT_SOLITARY, fsp, w.description, w.assignment,
        reason="nontrivial higher rank element of ker g",
        assumptions_used=base + w.assumptions + (CSP_HIGHER_RANK,),
    )


def _conditional(value, fsp, w, *, if_holds, if_fails, reason, assumptions, label):
    if value == "assume_true":
        return Verdict(
            if_holds, fsp, w.description, w.assignment, reason=reason,
            assumptions_used=assumptions + w.assumptions + (f"assumed: {label}",),
        )
    if value == "assume_false":
        return Verdict(
            if_fails, fsp, reason=reason,
            assumptions_used=assumptions + (f"assumed: not ({label})",),
        )
    return Verdict(
        Outcome.CSP_CONDITIONAL, fsp, w.description, w.assignment,
        if_csp_holds=if_holds, if_csp_fails=if_fails, reason=reason,
        assumptions_used=assumptions,
    )


def witness_group(
    t: CartanType, k: NumberFieldProfile, policy: CSPPolicy = DEFAULT_POLICY
) -> str:
    """Description of a group witnessing that ``t`` over ``k`` is not solitary."""
    v = solitude_verdict(t, k, policy)
    if v.outcome is not Outcome.NOT_SOLITARY:
        raise ValueError(f"{t} over {k.display_name()} is not NotSolitary (got {v.outcome})")
    return v.witness


# -- enumeration oracle ------------------------------------------------------

# How a nontrivial element of ker g whose arithmetic groups are lattices in a
# Lie group of real rank <= 1 is ruled out (or left open).
RANK_ZERO_RULE = ("excluded", "arithmetic subgroups of a compact group are finite")
RANK_ONE_RULES = {
    "A": ("excluded", "lattice commensurable to a Fuchsian or non-elementary Kleinian group"),
    "B": ("excluded", "SO(n,1) lattices virtually retract onto geometrically finite subgroups"),
    "D": ("excluded", "SO(n,1) lattices virtually retract onto geometrically finite subgroups"),
    "F": ("csp_f4", "lattice in the rank one group F4(-20)"),
}


def classify_twist(a: Assignment, t: CartanType, k: NumberFieldProfile) -> str:
    """Resolution of one nontrivial assignment: excluded, witness, csp_a1, csp_f4 or open."""
    rank = archimedean_rank(a, t, k)
    if rank == 0:
        return RANK_ZERO_RULE[0]
    if rank == 1:
        return RANK_ONE_RULES.get(t.family, ("open", ""))[0]
    return "csp_a1" if t == A1 else "witness"


def oracle_outcome(
    t: CartanType, k: NumberFieldProfile, policy: CSPPolicy = DEFAULT_POLICY
) -> tuple[Outcome, Outcome | None, Outcome | None]:
    """Verdict recomputed from :func:`enumerate_ker_g` and the rule table.

    Returns ``(outcome, if_csp_holds, if_csp_fails)``; the branches are only
    set for ``CSPConditional``.
    """
    if archimedean_rank(trivial_assignment(t, k), t, k) < HIGHER_RANK:
        return Outcome.OUTSIDE, None, None
    kinds = {classify_twist(a, t, k) for a in enumerate_ker_g(t, k) if not a.is_trivial}
    if "witness" in kinds:
        return Outcome.NOT_SOLITARY, None, None
    if "open" in kinds:
        return Outcome.OUTSIDE, None, None
    if "csp_a1" in kinds:
        return _resolve(policy.serre_conjecture_a1, Outcome.NOT_SOLITARY, Outcome.OUTSIDE)
    if "csp_f4" in kinds:
        return _resolve(policy.f4_rank_one_csp, Outcome.NOT_SOLITARY, Outcome.SOLITARY)
    return Outcome.SOLITARY, None, None


def _resolve(value, holds, fails):
    if value == "assume_true":
        return holds, None, None
    if value == "assume_false":
        return fails, None, None
    return Outcome.CSP_CONDITIONAL, holds, fails


def cross_validate(
    t: CartanType, k: NumberFieldProfile, policy: CSPPolicy = DEFAULT_POLICY
) -> bool:
    """Whether the decision tree and the enumeration oracle agree."""
    if t.rank > 8:
        raise ValueError("cross validation is limited to rank <= 8")
    _check_enumerable(k)
    if local_determinacy(k) != "yes":
        raise ValueError("cross validation needs a locally determined field")
    v = solitude_verdict(t, k, policy)
    return (v.outcome, v.if_csp_holds, v.if_csp_fails) == oracle_outcome(t, k, policy)


# -- reports -----------------------------------------------------------------

def report(t: CartanType, k: NumberFieldProfile, policy: CSPPolicy = DEFAULT_POLICY) -> dict:
    """JSON-ready summary of the verdict and the kernel sizes."""
    v = solitude_verdict(t, k, policy)
    branches = None
    if v.outcome is Outcome.CSP_CONDITIONAL:
        branches = {"if_csp_holds": v.if_csp_holds.value, "if_csp_fails": v.if_csp_fails.value}
    return {
        "type": t.family,
        "rank": t.rank,
        "field": k.to_spec(),
        "fsp": v.fsp,
        "outcome": v.outcome.value,
        "witness": v.witness,
        "assumptions_used": list(v.assumptions_used),
        "ker_b_count": ker_b(t, k).total_count,
        "ker_g_count": count_ker_g(t, k),
        "reason": v.reason,
        "branches": branches,
    }
