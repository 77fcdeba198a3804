"""Quadratic extension fields, Hermitian forms, and the comparison table."""

import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from f1q.mqt import (
    born_value,
    dictionary_table,
    gf_build,
    hermitian_form,
    monomial_unitary_entries,
)


def test_build_rejects_bad_q():
    for bad in (0, 1, 4, 6, 9, 15):
        with pytest.raises(ValueError):
            gf_build(bad)
    with pytest.raises(ValueError):
        gf_build(17)  # prime but above the desk-scale cap


def test_modulus_choice_is_lexicographic():
    assert gf_build(2).modulus == (1, 1)  # t^2+t+1, the only option
    assert gf_build(3).modulus == (0, 1)  # t^2+1
    assert gf_build(2).modulus_string() == "t^2+t+1"
    assert gf_build(3).modulus_string() == "t^2+1"


@pytest.mark.parametrize("q", [2, 3, 5, 7, 11, 13])
def test_modulus_is_irreducible(q):
    b, c = gf_build(q).modulus
    assert all((x * x + b * x + c) % q for x in range(q))


@pytest.mark.parametrize("q", [2, 3])
def test_field_axioms_exhaustive(q):
    f = gf_build(q)
    elems = f.elements()
    assert len(elems) == q * q
    for x in elems:
        assert f.add(x, f.zero) == x
        assert f.mul(x, f.one) == x
        assert f.add(x, f.neg(x)) == f.zero
        if x != f.zero:
            assert f.mul(x, f.inverse(x)) == f.one
    for x in elems:
        for y in elems:
            assert f.add(x, y) == f.add(y, x)
            assert f.mul(x, y) == f.mul(y, x)
            for z in elems:
                assert f.add(f.add(x, y), z) == f.add(x, f.add(y, z))
                assert f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z))
                assert f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z))


@st.composite
def field_and_elements(draw, count=3):
    q = draw(st.sampled_from([5, 7, 11, 13]))
    f = gf_build(q)
    xs = tuple(
        (draw(st.integers(0, q - 1)), draw(st.integers(0, q - 1)))
        for _ in range(count)
    )
    return f, xs


@given(field_and_elements())
@settings(max_examples=150)
def test_field_axioms_randomized(fx):
    f, (x, y, z) = fx
    assert f.add(x, y) == f.add(y, x)
    assert f.mul(x, y) == f.mul(y, x)
    assert f.add(f.add(x, y), z) == f.add(x, f.add(y, z))
    assert f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z))
    assert f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z))
    if x != f.zero:
        assert f.mul(x, f.inverse(x)) == f.one


@pytest.mark.parametrize("q", [2, 3, 5, 7])
def test_multiplicative_group_is_cyclic(q):
    f = gf_build(q)
    n = q * q - 1
    orders = set()
    for x in f.units():
        k = 1
        acc = x
        while acc != f.one:
            acc = f.mul(acc, x)
            k += 1
        orders.add(k)
        assert n % k == 0
    assert n in orders  # a generator exists


@pytest.mark.parametrize("q", [2, 3, 5, 7, 11, 13])
def test_conjugation_is_involutory_with_fixed_field_q(q):
    f = gf_build(q)
    fixed = [x for x in f.elements() if f.is_fixed(x)]
    assert len(fixed) == q
    assert fixed == [(c, 0) for c in range(q)]  # the prime subfield
    for x in f.elements():
        assert f.conj(f.conj(x)) == x
    for x in f.elements():
        for y in f.elements():
            assert f.conj(f.mul(x, y)) == f.mul(f.conj(x), f.conj(y))
            assert f.conj(f.add(x, y)) == f.add(f.conj(x), f.conj(y))


def test_conjugation_on_f4_swaps_the_two_generators():
    f = gf_build(2)
    assert f.conj(f.t) == f.mul(f.t, f.t)
    assert f.conj(f.t) != f.t


def test_element_formatting():
    f = gf_build(3)
    assert f.format_element(f.zero) == "0"
    assert f.format_element(f.one) == "1"
    assert f.format_element(f.t) == "t"
    assert f.format_element((2, 1)) == "t+2"
    assert f.format_element((0, 2)) == "2t"


def test_hermitian_form_basics():
    f = gf_build(2)
    e1 = (f.one, f.zero)
    assert hermitian_form(f, e1, e1) == f.one
    x = (f.t, f.zero)
    assert hermitian_form(f, x, x) == f.one  # t^2 * t = t^3 = 1
    assert hermitian_form(f, (f.one, f.zero), (f.zero, f.one)) == f.zero
    with pytest.raises(ValueError):
        hermitian_form(f, e1, (f.one,))


@pytest.mark.parametrize("m", [1, 2, 3])
def test_form_reflexivity_exhaustive_q2(m):
    import itertools

    f = gf_build(2)
    vectors = list(itertools.product(f.elements(), repeat=m))
    for x in vectors:
        for y in vectors:
            assert hermitian_form(f, y, x) == f.conj(hermitian_form(f, x, y))


@pytest.mark.parametrize("q", [2, 3])
def test_born_value_lands_in_fixed_field(q):
    import itertools

    f = gf_build(q)
    vectors = list(itertools.product(f.elements(), repeat=2))
    pairs = 0
    for x in vectors:
        for y in vectors:
            pairs += 1
            assert f.is_fixed(born_value(f, x, y))
    assert pairs == (q * q) ** 4
    if q == 2:
        assert pairs == 256


def test_born_value_examples():
    f = gf_build(2)
    # form value t: born value is conj(t)*t = t^3 = 1
    x, y = (f.one, f.zero), (f.t, f.zero)
    assert hermitian_form(f, x, y) == f.t
    assert born_value(f, x, y) == f.one
    zero_pair = ((f.one, f.zero), (f.zero, f.one))
    assert born_value(f, *zero_pair) == f.zero


@pytest.mark.parametrize("q", [2, 3])
def test_monomial_unitary_scalars_are_q_plus_first_roots(q):
    f = gf_build(q)
    scan = monomial_unitary_entries(q, 2)
    assert scan.scalar_group_order == q + 1
    want = {s for s in f.units() if f.pow(s, q + 1) == f.one}
    assert set(scan.allowed_scalars) == want
    assert scan.unitary_count == (q + 1) ** 2 * 2  # wreath product order at m=2


def test_monomial_unitary_identity_always_passes():
    scan = monomial_unitary_entries(2, 1)
    assert scan.unitary_count == 3  # diagonal cube roots in dimension 1
    assert (1, 0) in scan.allowed_scalars


def test_monomial_unitary_rejects_large_m():
    with pytest.raises(ValueError):
        monomial_unitary_entries(2, 5)


@pytest.mark.parametrize("q", [2, 3, 5])
def test_dictionary_alignment(q):
    table = dictionary_table(q)
    assert table.aligned
    assert table.r == q - 1
    assert table.modal_scalar_order == q + 1
    assert table.absolute_scalar_order == q + 1
    assert table.fixed_sizes == (q, q)


def test_dictionary_rows_q2():
    table = dictionary_table(2)
    by_theory = {row.theory: row for row in table.rows}
    assert set(by_theory) == {"Actual", "Modal", "General", "Absolute"}
    assert by_theory["Modal"].field == "F_4 = F_2[t]/(t^2+t+1)"
    assert by_theory["Modal"].involution == "v -> v^2"
    assert by_theory["Modal"].fixed_field == "F_2"
    assert by_theory["Absolute"].involution == "v -> v^2"
    assert by_theory["Absolute"].fixed_field == "F_1^1"
    assert "mu_3" in by_theory["Absolute"].unitary_scalars


def test_dictionary_rows_q3():
    table = dictionary_table(3)
    by_theory = {row.theory: row for row in table.rows}
    assert by_theory["Modal"].field == "F_9 = F_3[t]/(t^2+1)"
    assert by_theory["Modal"].involution == "v -> v^3"
    assert by_theory["Absolute"].field.startswith("F_1^8")
    assert by_theory["Absolute"].involution == "v -> v^3"
    assert by_theory["Absolute"].fixed_field == "F_1^2"


def test_dictionary_serializations():
    table = dictionary_table(2)
    data = table.to_json()
    assert json.dumps(data)  # JSON-serializable
    assert data["alignment"]["aligned"] is True
    assert data["q"] == 2 and data["r"] == 1
    assert len(data["rows"]) == 4

    md = table.to_markdown()
    assert md.count("\n") == 5  # header, separator, four rows
    assert md.splitlines()[0].startswith("| theory |")

    rows = table.csv_rows()
    assert rows[0][0] == "theory"
    assert len(rows) == 5
