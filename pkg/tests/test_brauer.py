from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import brute_kernel_count
from profsol.brauer import (
    HALF,
    BrauerClass,
    even_subsets,
    is_b_injective,
    ker_b,
    validate_class,
)
from profsol.lie_data import CartanType, admissible_types, center
from profsol.number_field import NumberFieldProfile, Place

SIGNATURES_R1_LE_6 = [(r1, r2) for r1 in range(7) for r2 in range(3) if r1 + r2 > 0]


@pytest.mark.parametrize("t", admissible_types(8), ids=str)
def test_closed_form_matches_enumeration(t):
    factors = center(t).invariant_factors
    for r1, r2 in SIGNATURES_R1_LE_6:
        k = NumberFieldProfile.from_signature(r1, r2)
        d = ker_b(t, k)
        assert d.total_count == brute_kernel_count(factors, r1, r2), (t, r1, r2)
        assert len(d.nontrivial_elements()) == d.total_count - 1
        assert d.is_trivial == is_b_injective(t, k)


def test_named_counts():
    c2 = ker_b(CartanType("C", 2), NumberFieldProfile.from_signature(3, 0))
    assert c2.total_count - 1 == 3
    b3 = ker_b(CartanType("B", 3), NumberFieldProfile.from_signature(2, 0))
    assert b3.total_count - 1 == 1
    d4 = ker_b(CartanType("D", 4), NumberFieldProfile.from_signature(2, 0))
    assert d4.coordinate_count == 2 and d4.total_count == 4


@pytest.mark.parametrize("t", admissible_types(8), ids=str)
def test_elements_are_valid_classes(t):
    k = NumberFieldProfile.from_signature(4, 1)
    for classes in ker_b(t, k).to_brauer_classes():
        for c in classes:
            assert validate_class(c)
            assert all(v.kind == "real" for v in c.support)


def test_validate_class_rejects():
    v0, v1, w0 = Place.real(0), Place.real(1), Place.complex(0)
    assert validate_class(BrauerClass(2, {v0: HALF, v1: HALF}))
    assert not validate_class(BrauerClass(2, {v0: HALF}))
    assert not validate_class(BrauerClass(2, {w0: HALF, v0: HALF}))
    assert not validate_class(BrauerClass(2, {v0: Fraction(1, 4), v1: Fraction(3, 4)}))
    assert not validate_class(BrauerClass(0, {}))
    p3, p5 = Place.prime(3), Place.prime(5)
    assert validate_class(BrauerClass(3, {p3: Fraction(1, 3), p5: Fraction(2, 3)}))


@given(st.integers(0, 7))
def test_even_subsets_count(n):
    places = [Place.real(i) for i in range(n)]
    subs = even_subsets(places)
    assert len(subs) == 2 ** max(n - 1, 0)
    assert all(len(s) % 2 == 0 for s in subs)
    assert len(set(subs)) == len(subs)


@given(st.integers(1, 6), st.integers(0, 2))
def test_generators_span_even_subsets(r1, r2):
    k = NumberFieldProfile.from_signature(r1, r2)
    d = ker_b(CartanType("C", 3), k)
    assert set(d.coordinate_elements()) == set(even_subsets(k.real_places()))
