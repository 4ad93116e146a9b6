"""Brauer classes as Hasse-invariant vectors, and the kernel of ``b``.

``b`` is the localization map ``H^2(k, Z(G)) -> (+)_{v finite} H^2(k_v, Z(G))``.
By Albert-Brauer-Hasse-Noether a Brauer class is determined by its local
invariants, so a class is stored as a finitely supported map from places to
``Q/Z`` and nothing else.  A class in the kernel of ``b`` vanishes at every
finite place; the finite places never need to be enumerated.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Mapping

from .lie_data import CartanType, center
from .number_field import NumberFieldProfile, Place

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class BrauerClass:
    order_bound: int
    invariants: Mapping[Place, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(
            self, "invariants", {v: Fraction(x) for v, x in dict(self.invariants).items()}
        )

    @property
    def support(self) -> frozenset[Place]:
        return frozenset(v for v, x in self.invariants.items() if x % 1 != 0)

    def __hash__(self):
        return hash((self.order_bound, frozenset(self.invariants.items())))


def validate_class(c: BrauerClass) -> bool:
    """True iff ``c`` is a legitimate element of ``Br(k)[n]``.

    Checks: local invariants lie in ``[0, 1)`` with denominator dividing the
    order bound, complex places carry 0, real places carry 0 or 1/2, and the
    invariants sum to an integer.
    """
    n = c.order_bound
    if not isinstance(n, int) or n < 1:
        return False
    total = Fraction(0)
    for v, x in c.invariants.items():
        if not 0 <= x < 1 or n % x.denominator:
            return False
        if v.kind == "complex" and x != 0:
            return False
        if v.kind == "real" and x not in (0, HALF):
            return False
        total += x
    return total.denominator == 1


@dataclass(frozen=True)
class KerBDescription:
    """The kernel of ``b`` as ``(F_2^d)^c``.

    ``generators`` is an F_2-basis of one coordinate, each element written
    as the set of real places where the class is nonsplit.  For center
    ``Z/2 x Z/2`` the kernel is the square of that space.
    """

    coordinate_count: int
    f2_dimension_per_coordinate: int
    total_count: int
    generators: tuple[frozenset[Place], ...]

    @property
    def is_trivial(self) -> bool:
        return self.total_count == 1

    def coordinate_elements(self) -> list[frozenset[Place]]:
        """Every element of one coordinate space (including the empty set)."""
        elems = {frozenset()}
        for g in self.generators:
            elems |= {e ^ g for e in elems}
        return sorted(elems, key=lambda s: (len(s), sorted(s)))

    def nontrivial_elements(self) -> list[tuple[frozenset[Place], ...]]:
        """All nonzero kernel elements as per-coordinate support tuples."""
        coord = self.coordinate_elements()
        out: list[tuple[frozenset[Place], ...]] = [()]
        for _ in range(self.coordinate_count):
            out = [e + (s,) for e in out for s in coord]
        return [e for e in out if any(e)]

    def to_brauer_classes(self, order_bound: int = 2) -> list[tuple[BrauerClass, ...]]:
        return [
            tuple(BrauerClass(order_bound, {v: HALF for v in s}) for s in e)
            for e in self.nontrivial_elements()
        ]


def _coordinate_orders(t: CartanType) -> tuple[int, ...]:
    z = center(t)
    return z.invariant_factors or (1,)


def ker_b(t: CartanType, k: NumberFieldProfile) -> KerBDescription:
    """Closed-form description of ``ker b`` for the split group of type ``t``.

    Real places carry invariants in ``{0, 1/2}``, so an odd-order center sees
    nothing.  An even cyclic coordinate contributes the even-cardinality
    subsets of the real places (dimension ``r1 - 1``).
    """
    orders = _coordinate_orders(t)
    even = [d for d in orders if d % 2 == 0]
    if not even or k.r1 <= 1:
        return KerBDescription(len(orders), 0, 1, ())
    dim = k.r1 - 1
    v0 = Place.real(0)
    gens = tuple(frozenset({v0, Place.real(i)}) for i in range(1, k.r1))
    # Odd cyclic coordinates never coexist with even ones for simple types.
    count = 2 ** (len(even) * dim)
    return KerBDescription(len(orders), dim, count, gens)


def is_b_injective(t: CartanType, k: NumberFieldProfile) -> bool:
    return center(t).exponent % 2 == 1 or k.r1 <= 1


def even_subsets(places: list[Place]) -> list[frozenset[Place]]:
    """All even-cardinality subsets of ``places``."""
    return [
        frozenset(c)
        for size in range(0, len(places) + 1, 2)
        for c in combinations(places, size)
    ]
