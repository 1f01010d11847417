from fractions import Fraction as Fr

import pytest
from hypothesis import given
from hypothesis import strategies as st

from solvlie.exactfield import GF, QQ
from solvlie.linalg import (
    AmbientMismatch, NoSolution, NotContained, Subspace, complement, dims_direct, identity,
    image, intersect, kernel, mat_mul, rank, rref, solve, subspace_sum, vec_mat,
)

from conftest import field_elements

Q2 = [[Fr(1), Fr(1)], [Fr(1), Fr(1)]]


def test_rref_identity():
    m = identity(QQ, 2)
    red, rk, piv = rref(QQ, m)
    assert red == m and rk == 2 and piv == [0, 1]


def test_rref_rank_one():
    red, rk, _ = rref(QQ, Q2)
    assert red == [[1, 1], [0, 0]] and rk == 1


def test_rref_zero():
    assert rank(QQ, [[Fr(0)] * 2] * 2) == 0


def test_kernel_examples():
    assert kernel(QQ, Q2) == Subspace.span(QQ, 2, [(Fr(1), Fr(-1))])
    assert kernel(QQ, identity(QQ, 2)).is_zero()
    assert kernel(QQ, [[Fr(0)] * 2] * 2).is_full()


def test_kernel_is_left_kernel():
    m = [[Fr(1), Fr(2)], [Fr(0), Fr(0)]]
    assert kernel(QQ, m) == Subspace.span(QQ, 2, [(0, 1)])
    assert image(QQ, m) == Subspace.span(QQ, 2, [(1, 2)])


def test_subspace_lattice_examples():
    F = GF(3)
    e = [Subspace.span(F, 3, [v]) for v in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]]
    assert e[0] & e[0] == e[0]
    assert e[0] + e[1] == Subspace.span(F, 3, [(1, 0, 0), (0, 1, 0)])
    assert (e[0] + e[1]) & (e[1] + e[2]) == e[1]


def test_complement_examples():
    F = GF(2)
    full = Subspace.full(F, 2)
    assert complement(Subspace.zero(F, 2), full) == full
    assert complement(Subspace.span(F, 2, [(1, 0)]), full) == Subspace.span(F, 2, [(0, 1)])
    assert complement(full, full).is_zero()
    with pytest.raises(NotContained):
        complement(full, Subspace.span(F, 2, [(1, 0)]))


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatch):
        Subspace.full(GF(2), 2) + Subspace.full(GF(2), 3)


def test_solve_and_no_solution():
    x = solve(QQ, [[Fr(1), Fr(0)], [Fr(0), Fr(2)]], (Fr(3), Fr(4)))
    assert x == (3, 2)
    with pytest.raises(NoSolution):
        solve(QQ, Q2, (Fr(1), Fr(0)))


@st.composite
def matrices(draw, f, max_rows=4, max_cols=4):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    return [[draw(field_elements(f)) for _ in range(c)] for _ in range(r)], c


FIELDS = st.sampled_from([GF(2), GF(3), GF(5), GF(2, 2), QQ])


@given(FIELDS, st.data())
def test_rank_nullity(f, data):
    m, c = data.draw(matrices(f))
    assert kernel(f, m).dim + rank(f, m) == len(m)
    for v in kernel(f, m).basis:
        assert not any(vec_mat(f, v, m, c))


@given(FIELDS, st.data())
def test_rref_is_idempotent_and_canonical(f, data):
    m, c = data.draw(matrices(f))
    red, rk, piv = rref(f, m, c)
    again, rk2, piv2 = rref(f, red[:rk], c)
    assert again[:rk2] == red[:rk] and piv2 == piv
    assert Subspace.span(f, c, m) == Subspace.span(f, c, red[:rk])


@given(FIELDS, st.data())
def test_modular_dimension_formula(f, data):
    a, c = data.draw(matrices(f, max_cols=3))
    b = [[data.draw(field_elements(f)) for _ in range(c)] for _ in range(2)]
    u, w = Subspace.span(f, c, a), Subspace.span(f, c, b)
    assert (u + w).dim + (u & w).dim == u.dim + w.dim
    assert (u & w) <= u and u <= u + w


@given(FIELDS, st.data())
def test_complement_is_direct(f, data):
    a, c = data.draw(matrices(f, max_cols=4))
    u, full = Subspace.span(f, c, a), Subspace.full(f, c)
    comp = complement(u, full)
    assert dims_direct(u, comp) and (u + comp).is_full()


@given(FIELDS, st.data())
def test_solve_recovers_a_preimage(f, data):
    m, c = data.draw(matrices(f))
    x = [data.draw(field_elements(f)) for _ in range(len(m))]
    rhs = vec_mat(f, x, m, c)
    y = solve(f, m, rhs)
    assert tuple(vec_mat(f, y, m, c)) == tuple(rhs)


@given(st.sampled_from([GF(2), GF(3)]), st.data())
def test_matrix_product_associative(f, data):
    n = 3
    mats = [[[data.draw(field_elements(f)) for _ in range(n)] for _ in range(n)] for _ in range(3)]
    a, b, c = mats
    assert mat_mul(f, mat_mul(f, a, b), c) == mat_mul(f, a, mat_mul(f, b, c))


def test_subspace_sum_and_intersect_functions_match_operators():
    F = GF(5)
    u = Subspace.span(F, 3, [(1, 2, 0)])
    w = Subspace.span(F, 3, [(0, 1, 1), (1, 0, 4)])
    assert subspace_sum(u, w) == u + w
    assert intersect(u, w) == u & w
