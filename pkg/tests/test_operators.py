"""Monomial operators, wreath-product groups, observables, subunital matrices."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from f1q.budget import BudgetExceededError
from f1q.field import classify_involution, one, unit, zero
from f1q.frames import basis_state, enumerate_vectors, state, tensor
from f1q.operators import (
    MonomialMatrix,
    SubunitalMatrix,
    enumerate_GL,
    enumerate_subunital,
    format_matrix,
    gl_order,
    is_observable,
    is_unitary,
    kronecker,
    matrix_from_json,
    matrix_to_json,
    parse_matrix,
    subunital_count,
    unitary_group,
)


@st.composite
def monomials(draw, max_dim=4, max_level=6):
    m = draw(st.integers(min_value=1, max_value=max_dim))
    l = draw(st.integers(min_value=1, max_value=max_level))
    perm = draw(st.permutations(range(m)))
    exps = draw(st.lists(st.integers(min_value=0, max_value=l - 1), min_size=m, max_size=m))
    return MonomialMatrix(l, tuple(perm), tuple(unit(e, l) for e in exps))


@st.composite
def monomial_pairs(draw, max_dim=4, max_level=6):
    m = draw(st.integers(min_value=1, max_value=max_dim))
    l = draw(st.integers(min_value=1, max_value=max_level))

    def build():
        perm = draw(st.permutations(range(m)))
        exps = draw(
            st.lists(st.integers(min_value=0, max_value=l - 1), min_size=m, max_size=m)
        )
        return MonomialMatrix(l, tuple(perm), tuple(unit(e, l) for e in exps))

    return build(), build()


@st.composite
def subunitals(draw, max_dim=4, max_level=4):
    d = draw(st.integers(min_value=1, max_value=max_dim))
    l = draw(st.integers(min_value=1, max_value=max_level))
    k = draw(st.integers(min_value=0, max_value=d))
    rows = draw(st.permutations(range(d)))
    cols = sorted(draw(st.permutations(range(d)))[:k])
    cells = tuple(
        (rows[i], cols[i], unit(draw(st.integers(min_value=0, max_value=l - 1)), l))
        for i in range(k)
    )
    return SubunitalMatrix(d, l, cells)


def test_matrix_validation():
    with pytest.raises(ValueError):
        MonomialMatrix(2, (0, 0), (one(2), one(2)))  # not a permutation
    with pytest.raises(ValueError):
        MonomialMatrix(2, (0, 1), (zero(2), one(2)))  # zero scalar
    with pytest.raises(ValueError):
        MonomialMatrix(2, (0, 1), (one(3), one(2)))  # level mismatch
    with pytest.raises(ValueError):
        SubunitalMatrix(2, 2, ((0, 0, one(2)), (0, 1, one(2))))  # row reused


def test_entry_layout():
    # column j holds its scalar in row perm[j]
    a = MonomialMatrix(3, (1, 0), (unit(1, 3), unit(2, 3)))
    assert a.entry(1, 0) == unit(1, 3)
    assert a.entry(0, 1) == unit(2, 3)
    assert a.entry(0, 0).is_zero


def test_identity_swap_diagonal():
    eye = MonomialMatrix.identity(3, 2)
    x = state([0, 1, None], 2)
    assert eye.apply(x) == x
    sw = MonomialMatrix.swap(2)
    assert sw.apply(state([0, 1], 2)) == state([1, 0], 2)
    d = MonomialMatrix.diagonal((unit(1, 3), unit(2, 3)))
    assert d.apply(state([0, 0], 3)) == state([1, 2], 3)


@given(monomial_pairs())
def test_composition_agrees_with_application(pair):
    a, b = pair
    for x in enumerate_vectors(a.dim, a.order)[:8]:
        assert (a @ b).apply(x) == a.apply(b.apply(x))


@given(monomials())
def test_inverse_composes_to_identity(a):
    eye = MonomialMatrix.identity(a.dim, a.order)
    assert a @ a.inverse() == eye
    assert a.inverse() @ a == eye


@given(monomials())
def test_transpose_is_involutive(a):
    assert a.transpose().transpose() == a
    for i in range(a.dim):
        for j in range(a.dim):
            assert a.transpose().entry(i, j) == a.entry(j, i)


@given(monomial_pairs())
def test_transpose_reverses_products(pair):
    a, b = pair
    assert (a @ b).transpose() == b.transpose() @ a.transpose()


def test_conj_applies_involution_entrywise():
    sigma = classify_involution(3, 1)
    a = MonomialMatrix(3, (0, 1), (unit(1, 3), unit(2, 3)))
    c = a.conj(sigma)
    assert c.scalars == (unit(2, 3), unit(1, 3))
    assert a.conj(None) == a


@pytest.mark.parametrize("m,l", [(1, 1), (2, 1), (2, 2), (3, 2), (2, 3)])
def test_gl_enumeration_count(m, l):
    group = enumerate_GL(m, l)
    assert len(group) == gl_order(m, l) == l**m * math.factorial(m)
    assert len(set(group)) == len(group)


def test_gl_frozen_order():
    assert gl_order(2, 2) == 8


def test_enumeration_respects_budget():
    with pytest.raises(BudgetExceededError):
        enumerate_GL(4, 2, budget=100)
    with pytest.raises(BudgetExceededError):
        enumerate_subunital(4, 2, budget=10)


@given(monomials(max_dim=3, max_level=4))
def test_group_closure_under_product_and_inverse(a):
    # image of apply is again a frame vector with full support permuted
    x = state([0] * a.dim, a.order)
    y = a.apply(x)
    assert len(y.support()) == a.dim


def test_unitary_group_frozen_orders():
    assert len(unitary_group(2, 1)) == 18
    assert len(unitary_group(3, 1)) == 162
    assert len(unitary_group(2, 2)) == 32


@pytest.mark.parametrize("m,r", [(2, 1), (3, 1), (2, 2), (1, 3)])
def test_unitary_group_is_wreath_product(m, r):
    group = unitary_group(m, r)
    assert len(group) == (r + 2) ** m * math.factorial(m)
    # scalars of unitary matrices are exactly the (r+2)-nd roots inside mu_{r(r+2)}
    level = r * (r + 2)
    allowed = {s for u in group for s in u.scalars}
    assert allowed == {unit(r * k, level) for k in range(r + 2)}


@pytest.mark.parametrize("m,r", [(2, 1), (2, 2)])
def test_unitary_group_closure(m, r):
    group = unitary_group(m, r)
    members = set(group)
    sigma = classify_involution(r * (r + 2), r)
    for a in group[:6]:
        assert a.inverse() in members
        for b in group[:6]:
            assert a @ b in members
        assert a.transpose().conj(sigma) @ a == MonomialMatrix.identity(m, a.order)


@pytest.mark.parametrize("m", range(1, 5))
def test_level_two_unitary_is_whole_gl(m):
    gl = enumerate_GL(m, 2)
    assert all(is_unitary(a) for a in gl)
    assert len(gl) == gl_order(m, 2)


def test_singular_subunital_never_unitary():
    a = SubunitalMatrix(2, 2, ((0, 0, one(2)),))
    assert not is_unitary(a)


def test_observables_frozen_count():
    obs = [h for h in enumerate_GL(2, 2) if is_observable(h)]
    assert len(obs) == 6


@pytest.mark.parametrize("m", range(1, 5))
def test_level_two_observables_are_square_roots_of_identity(m):
    eye = MonomialMatrix.identity(m, 2)
    for h in enumerate_GL(m, 2):
        assert is_observable(h) == (h @ h == eye)


def test_observable_with_involution():
    sigma = classify_involution(3, 1)
    # diagonal w^1 is not self-adjoint: sigma(w^1) = w^2 != w^1
    d = MonomialMatrix.diagonal((unit(1, 3),))
    assert not is_observable(d, sigma)
    assert is_observable(MonomialMatrix.identity(2, 3), sigma)


@given(monomial_pairs(max_dim=3, max_level=4))
def test_kronecker_matches_tensor_application(pair):
    a, b = pair
    k = kronecker(a, b)
    xs = enumerate_vectors(a.dim, a.order)[:4]
    ys = enumerate_vectors(b.dim, b.order)[:4]
    for x in xs:
        for y in ys:
            assert k.apply(tensor(x, y)) == tensor(a.apply(x), b.apply(y))


def test_kronecker_entry_layout():
    a = MonomialMatrix.swap(2)
    b = MonomialMatrix.identity(2, 2)
    k = kronecker(a, b)
    # basis column (i, j) lands in row (a(i), b(j)) under row-major flattening
    e01 = tensor(basis_state(0, 2, 2), basis_state(1, 2, 2))
    assert k.apply(e01) == tensor(basis_state(1, 2, 2), basis_state(1, 2, 2))


@pytest.mark.parametrize("d,l", [(1, 1), (2, 2), (3, 2), (2, 3), (4, 2)])
def test_subunital_enumeration_count(d, l):
    all_matrices = enumerate_subunital(d, l)
    assert len(all_matrices) == subunital_count(d, l)
    assert len(set(all_matrices)) == len(all_matrices)
    want = sum(
        math.comb(d, k) ** 2 * math.factorial(k) * l**k for k in range(d + 1)
    )
    assert subunital_count(d, l) == want


def test_subunital_apply_never_needs_addition():
    # one entry per row means each output coordinate has at most one term
    a = SubunitalMatrix(3, 2, ((0, 1, one(2)), (2, 2, unit(1, 2))))
    y = a.apply(state([0, 0, 0], 2))
    assert y == state([0, None, 1], 2)


@given(subunitals())
def test_subunital_monomial_round_trip(a):
    if a.is_monomial:
        assert a.to_monomial().to_subunital() == a


def test_principal_submatrix_reindexes():
    a = SubunitalMatrix(3, 2, ((0, 1, one(2)), (2, 2, unit(1, 2))))
    b = a.principal_submatrix((0, 2))
    assert b.dim == 2
    assert b.cells == ((1, 1, unit(1, 2)),)  # the (2,2) cell, reindexed
    c = a.principal_submatrix((1, 2))
    assert c.cells == ((1, 1, unit(1, 2)),)


@given(monomials())
def test_text_format_round_trips(a):
    parsed = parse_matrix(format_matrix(a))
    assert parsed == a.to_subunital()


@given(subunitals())
def test_json_round_trips(a):
    assert matrix_from_json(matrix_to_json(a)) == a


def test_text_format_is_one_based():
    a = MonomialMatrix.swap(2)
    assert format_matrix(a).splitlines() == ["2@2", "1 2 w^0", "2 1 w^0"]
