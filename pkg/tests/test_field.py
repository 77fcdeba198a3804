"""Ground arithmetic: exponent elements, power maps, automorphisms, involutions."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from f1q.field import (
    F1Element,
    FrobeniusMap,
    automorphism_group,
    brute_force_exponents,
    classify_involution,
    elements,
    embed,
    frobenius,
    involution_brute_force,
    multiply,
    one,
    parse_element,
    totient,
    unit,
    units,
    zero,
)

levels = st.integers(min_value=1, max_value=24)
exponents = st.integers(min_value=-100, max_value=100)


@st.composite
def level_elements(draw, min_level=1, max_level=24):
    l = draw(st.integers(min_value=min_level, max_value=max_level))
    if draw(st.booleans()):
        return zero(l)
    return unit(draw(exponents), l)


def test_element_basics():
    assert str(zero(3)) == "0"
    assert str(unit(0, 3)) == "w^0"
    assert str(unit(5, 3)) == "w^2"  # exponent reduced mod level
    assert zero(3).is_zero and not zero(3).is_unit
    assert unit(1, 3).is_unit and not unit(1, 3).is_zero
    assert one(7) == unit(0, 7)


def test_element_count():
    for l in range(1, 10):
        assert len(elements(l)) == l + 1
        assert len(units(l)) == l


def test_level_one_has_single_unit():
    # plain F_1: {0, w^0}, no special-casing anywhere
    assert units(1) == [one(1)]
    assert unit(17, 1) == one(1)
    assert one(1) * one(1) == one(1)


@given(level_elements(), level_elements())
def test_multiply_requires_matching_levels(x, y):
    if x.order == y.order:
        assert (x * y).order == x.order
    else:
        with pytest.raises(ValueError):
            multiply(x, y)


@given(st.integers(min_value=1, max_value=24), exponents, exponents)
def test_units_multiply_by_exponent_addition(l, a, b):
    assert unit(a, l) * unit(b, l) == unit(a + b, l)


@given(level_elements())
def test_zero_absorbs(x):
    assert x * zero(x.order) == zero(x.order)


@given(level_elements(), st.integers(min_value=1, max_value=50))
def test_power_matches_repeated_product(x, d):
    acc = x
    for _ in range(d - 1):
        acc = acc * x
    assert x**d == acc


def test_zero_power_rejects_nonpositive():
    with pytest.raises(ValueError):
        zero(3) ** 0


@given(st.integers(min_value=1, max_value=24), exponents)
def test_inverse(l, e):
    x = unit(e, l)
    assert x * x.inverse() == one(l)
    with pytest.raises(ZeroDivisionError):
        zero(l).inverse()


@given(st.integers(min_value=1, max_value=12), st.integers(min_value=1, max_value=12), level_elements(max_level=12))
def test_frobenius_composes_multiplicatively(d1, d2, x):
    assert frobenius(d1, frobenius(d2, x)) == frobenius(d1 * d2, x)


@given(st.integers(min_value=1, max_value=12), st.integers(min_value=1, max_value=24), exponents, exponents)
def test_frobenius_is_multiplicative(d, l, a, b):
    x, y = unit(a, l), unit(b, l)
    assert frobenius(d, x * y) == frobenius(d, x) * frobenius(d, y)


def test_frobenius_map_object():
    f = FrobeniusMap(degree=3, source_level=6)
    assert f(unit(1, 6)) == unit(3, 6)
    assert f(zero(6)) == zero(6)
    with pytest.raises(ValueError):
        FrobeniusMap(degree=0, source_level=6)


def test_embed_scales_exponents():
    # mu_3 inside mu_6: w -> w^2
    assert embed(unit(1, 3), 6) == unit(2, 6)
    assert embed(zero(3), 6) == zero(6)
    assert embed(one(3), 6) == one(6)
    with pytest.raises(ValueError):
        embed(unit(1, 4), 6)  # 4 does not divide 6


@given(st.integers(min_value=1, max_value=8), st.integers(min_value=1, max_value=5), exponents, exponents)
def test_embed_is_multiplicative(base, k, a, b):
    target = base * k
    x, y = unit(a, base), unit(b, base)
    assert embed(x * y, target) == embed(x, target) * embed(y, target)


@given(level_elements())
def test_parse_round_trips(x):
    assert parse_element(str(x), x.order) == x


def test_parse_accepts_negative_exponents():
    assert parse_element("w^-1", 3) == unit(2, 3)


def test_parse_rejects_garbage():
    for bad in ("w", "w^", "1", "w^1.5", "w^0 w^1", ""):
        with pytest.raises(ValueError):
            parse_element(bad, 3)


def test_totient_small_values():
    assert [totient(l) for l in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


def test_automorphism_group_frozen_values():
    assert automorphism_group(1) == [1]
    assert automorphism_group(2) == [1]
    assert automorphism_group(12) == [1, 5, 7, 11]


@given(st.integers(min_value=1, max_value=24))
def test_automorphism_count_is_totient(l):
    assert len(automorphism_group(l)) == totient(l)


@pytest.mark.parametrize("l", range(1, 13))
def test_automorphisms_against_permutation_search(l):
    # the oracle walks multiplication-preserving bijections of all l+1 elements
    assert sorted(brute_force_exponents(l)) == sorted(automorphism_group(l))


@given(st.integers(min_value=1, max_value=24), st.integers(min_value=1, max_value=24))
def test_automorphism_exponents_act_as_automorphisms(l, d):
    if d in automorphism_group(l):
        images = {frobenius(d, u) for u in units(l)}
        assert len(images) == l  # bijective on units


def test_involution_frozen_examples():
    assert classify_involution(8, 2).valid  # 8 | 2*4 and 8 does not divide 2
    assert not classify_involution(8, 8).valid  # trivial: v -> v^9 = v
    assert not classify_involution(5, 2).valid  # 5 does not divide 8
    assert classify_involution(3, 1).valid  # conjugation on mu_3
    assert not classify_involution(1, 1).valid
    assert not classify_involution(2, 1).valid


def test_involution_fixed_field():
    spec = classify_involution(8, 2)
    assert spec.fixed_field_order == 2
    assert spec.fixed_elements() == [zero(8), unit(0, 8), unit(4, 8)]


def test_involution_application():
    spec = classify_involution(3, 1)
    assert spec(unit(1, 3)) == unit(2, 3)
    assert spec(spec(unit(1, 3))) == unit(1, 3)
    with pytest.raises(ValueError):
        spec(unit(1, 5))  # level mismatch


@pytest.mark.parametrize("m", range(1, 21))
@pytest.mark.parametrize("r", range(1, 9))
def test_involution_predicate_matches_brute_force(m, r):
    assert classify_involution(m, r).valid == involution_brute_force(m, r)


@given(st.integers(min_value=1, max_value=36), st.integers(min_value=1, max_value=12))
def test_valid_involutions_square_to_identity(m, r):
    spec = classify_involution(m, r)
    if spec.valid:
        for x in elements(m):
            assert spec(spec(x)) == x
        assert any(spec(u) != u for u in units(m))  # nontrivial


@given(st.integers(min_value=1, max_value=36), st.integers(min_value=1, max_value=12))
def test_sub_condition_implies_coprime_exponent(m, r):
    from math import gcd

    spec = classify_involution(m, r)
    if spec.sub_ok:
        assert gcd(r + 1, m) == 1  # bijectivity comes free with SUB


@given(st.integers(min_value=1, max_value=36), st.integers(min_value=1, max_value=12))
def test_fixed_field_is_gcd_subfield(m, r):
    from math import gcd

    spec = classify_involution(m, r)
    if spec.valid:
        fixed_units = [u for u in units(m) if spec(u) == u]
        assert len(fixed_units) == gcd(m, r)


def test_element_equality_is_structural():
    assert unit(3, 5) == unit(8, 5)
    assert unit(1, 5) != unit(1, 10)
    assert F1Element(5, None) == zero(5)
