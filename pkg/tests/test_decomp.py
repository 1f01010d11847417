import pytest
from hypothesis import given

from solvlie import generators as gen
from solvlie.decomp import (
    DecompositionMismatch, NotSolvable, SplitFailed, cartan_subalgebra, check_triangular,
    complement_subalgebra, fitting_single, fitting_subalgebra, ideal_decomposition, is_cartan,
    null_component, split_over_terminal_derived, triangular_decomposition,
)
from solvlie.exactfield import GF, QQ
from solvlie.liealg import derived_series, is_abelian_space, is_nilpotent, is_subalgebra, make_algebra
from solvlie.linalg import dims_direct
from solvlie.oracle import inventory, oracle_is_A

from conftest import small_a_candidate


def test_fitting_of_nilpotent_element(gf2):
    H = gen.heisenberg(gf2)
    pair = fitting_single(H, H.basis_vector(0))
    assert pair.L0.is_full() and pair.L1.is_zero()


def test_fitting_of_zero_and_of_nilpotent_algebra(gf3):
    S = gen.two_dim_nonabelian(gf3)
    assert null_component(S, S.zero_space()).is_full()
    H = gen.heisenberg(gf3)
    pair = fitting_subalgebra(H, H.full())
    assert pair.L0.is_full() and pair.L1.is_zero()


def test_fitting_of_semisimple_element(gf3):
    S = gen.two_dim_nonabelian(gf3)
    pair = fitting_single(S, S.basis_vector(1))
    assert pair.L0 == S.span([S.basis_vector(1)])
    assert pair.L1 == S.span([S.basis_vector(0)])


def test_cartan_examples(gf2):
    H = gen.heisenberg(gf2)
    assert cartan_subalgebra(H).is_full()
    S = gen.two_dim_nonabelian(GF(5))
    C = cartan_subalgebra(S)
    assert C == S.span([S.basis_vector(1)]) and is_cartan(S, C)
    assert not is_cartan(S, S.span([S.basis_vector(0)]))


def test_cartan_matches_oracle_on_example(gf2):
    L = gen.example_2_4(gf2)
    C = cartan_subalgebra(L)
    assert C in inventory(L).cartan_subalgebras


def test_split_examples(gf2):
    A, B = split_over_terminal_derived(gen.abelian(gf2, 3))
    assert A.is_full() and B.is_zero()
    S = gen.two_dim_nonabelian(gf2)
    assert split_over_terminal_derived(S) == (S.span([S.basis_vector(0)]), S.span([S.basis_vector(1)]))
    L = gen.example_2_4(gf2)
    A, B = split_over_terminal_derived(L)
    assert A == L.span([L.basis_vector(2), L.basis_vector(3)])
    assert B.dim == 2 and is_subalgebra(L, B) and dims_direct(A, B) and (A + B).is_full()


def test_triangular_examples(gf3):
    t = triangular_decomposition(gen.abelian(gf3, 3))
    assert len(t.A) == 1 and t.A[0].is_full()
    S = gen.two_dim_nonabelian(gf3)
    t = triangular_decomposition(S)
    assert t.A == (S.span([S.basis_vector(1)]), S.span([S.basis_vector(0)]))
    L = gen.example_2_4(gf3)
    t = triangular_decomposition(L)
    assert [a.dim for a in t.A] == [1, 1, 3]
    assert t.A[2] == L.span([L.basis_vector(i) for i in (2, 3, 4)])
    assert t.A[2] + t.A[1] == derived_series(L)[1]
    assert t.to_json()["derived_length"] == 3


def test_ideal_decomposition_edges(gf2):
    L = gen.example_2_4(gf2)
    t = triangular_decomposition(L)
    assert ideal_decomposition(L, L.full(), t) == list(reversed(t.A))
    assert all(p.is_zero() for p in ideal_decomposition(L, L.zero_space(), t))
    with pytest.raises(DecompositionMismatch):
        ideal_decomposition(L, L.span([L.basis_vector(0)]), t)


def test_non_a_algebra_has_no_triangular_split(gf2):
    # the Weyl block contains a Heisenberg subalgebra; no abelian complement exists
    with pytest.raises(SplitFailed):
        triangular_decomposition(gen.weyl_block(gf2))


def test_non_solvable_rejected():
    # sl2 over Q: [h,e]=2e, [h,f]=-2f, [e,f]=h
    sl2 = make_algebra(QQ, 3, {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}})
    with pytest.raises(NotSolvable):
        triangular_decomposition(sl2)


def test_complement_needs_abelian_ideal(gf2):
    H = gen.heisenberg(gf2)
    with pytest.raises(ValueError):
        complement_subalgebra(H, H.span([H.basis_vector(0)]))
    assert complement_subalgebra(H, H.span([H.basis_vector(2)])) is None


@given(small_a_candidate())
def test_triangular_postconditions_on_a_algebras(L):
    t = triangular_decomposition(L)
    assert check_triangular(L, list(t.A)) is None
    assert all(is_abelian_space(L, a) for a in t.A)
    assert len(t.A) == derived_series(L).length


@given(small_a_candidate(dim_max=4))
def test_every_ideal_splits_along_the_pieces(L):
    if not oracle_is_A(L).verdict:
        return
    t = triangular_decomposition(L)
    for k in inventory(L).ideals:
        parts = ideal_decomposition(L, k, t)
        assert sum(p.dim for p in parts) == k.dim


@given(small_a_candidate(dim_max=4))
def test_cartan_is_nilpotent_and_self_normalising(L):
    C = cartan_subalgebra(L)
    assert is_nilpotent(L, C) and is_cartan(L, C)
