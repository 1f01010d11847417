import pytest
from hypothesis import given
from hypothesis import strategies as st

from solvlie import generators as gen
from solvlie.aclass import lemma_5_3_check
from solvlie.exactfield import GF, QQ
from solvlie.liealg import (
    center, derived_length, derived_series, is_ideal, is_solvable, is_strongly_solvable,
    jacobi_defect, lower_central_series,
)
from solvlie.oracle import oracle_frattini, oracle_is_A
from solvlie.structure import monolith


def test_worked_example_dimensions():
    L = gen.example_2_4(GF(2))
    assert L.dim == 4 and derived_length(L) == 3
    L = gen.example_2_4(GF(3))
    assert L.dim == 5
    assert monolith(L) == L.span(L.basis_vector(i) for i in (2, 3, 4))
    with pytest.raises(gen.CharacteristicZero):
        gen.example_2_4(QQ)


def test_example_matches_matrix_model():
    # e the cyclic shift, f = diag(0..p-1): ef - fe = e
    f = GF(3)
    e, d = gen.example_2_4_matrices(f)
    from solvlie.linalg import mat_mul
    ed, de = mat_mul(f, e, d), mat_mul(f, d, e)
    comm = [[f.sub(a, b) for a, b in zip(r1, r2)] for r1, r2 in zip(ed, de)]
    assert comm == e


def test_diagonal_family_edges():
    f = GF(5)
    S = gen.theorem_6_1_algebra(gen.Theorem61Params(1, 1, [[1]]), f)
    assert S.table == gen.two_dim_nonabelian(f).table
    Z = gen.theorem_6_1_algebra(gen.Theorem61Params(2, 2, [[0, 0], [0, 0]]), f)
    assert Z.is_abelian()
    with pytest.raises(gen.GenerationError):
        gen.theorem_6_1_algebra(gen.Theorem61Params(2, 1, [[1]]), f)


def invariants(L):
    return (L.dim, derived_series(L).dims(), lower_central_series(L).dims(), center(L).dim,
            monolith(L).dim, oracle_is_A(L).verdict)


def test_single_block_over_gf2_looks_like_example():
    f = GF(2)
    assert invariants(gen.theorem_6_6_algebra(2, 1, [0], f)) == invariants(gen.example_2_4(f))


def test_block_algebra_sizes():
    L = gen.theorem_6_6_algebra(3, 1, [0], GF(3))
    assert L.dim == 5 and oracle_is_A(L).verdict
    L = gen.theorem_6_6_algebra(2, 2, [0, 1], GF(2))
    assert L.dim == 8 and oracle_is_A(L).verdict


def test_shared_block_needs_matching_lengths():
    with pytest.raises(gen.GenerationError):
        gen.shared_block_algebra(GF(2), [0, 0], [1])


def test_random_examples():
    L = gen.random_A_candidate(1, GF(3))
    assert lemma_5_3_check(L) and oracle_is_A(L).verdict
    assert is_solvable(gen.random_solvable(7, 5, GF(2)))
    H = gen.random_solvable(7, 3, GF(2), inject_heisenberg=True)
    assert oracle_is_A(H).verdict is False


def test_random_generation_is_seeded():
    a = gen.random_solvable(11, 5, GF(3))
    b = gen.random_solvable(11, 5, GF(3))
    assert a.table == b.table
    assert gen.random_A_candidate(4, GF(2, 2)).table == gen.random_A_candidate(4, GF(2, 2)).table


def test_case_lists_have_twenty_entries():
    cases = gen.split_metabelian_cases()
    misses = gen.near_miss_cases()
    assert len(cases) == 20 and len(misses) == 20
    assert len({name for name, _ in cases + misses}) == 40
    assert {L.field.characteristic for _, L in cases} == {2, 3}


@pytest.mark.parametrize("name,L", gen.near_miss_cases()[:8], ids=lambda x: x if isinstance(x, str) else "")
def test_weyl_blocks_are_phi_free_and_not_strongly_solvable(name, L):
    assert not is_strongly_solvable(L)
    if L.field.order ** L.dim <= 3**6:
        assert oracle_frattini(L).is_zero()


@given(st.integers(0, 10**6), st.sampled_from([GF(2), GF(3), GF(2, 2)]))
def test_random_solvable_is_a_valid_solvable_algebra(seed, f):
    L = gen.random_solvable(seed, 5, f)
    assert jacobi_defect(L) is None and is_solvable(L) and 2 <= L.dim <= 5


@given(st.integers(0, 10**6), st.sampled_from([GF(2), GF(3), GF(2, 2), GF(3, 2)]))
def test_random_a_candidates_pass_the_lemma(seed, f):
    L = gen.random_A_candidate(seed, f, 5)
    assert lemma_5_3_check(L)


@given(st.integers(0, 10**6), st.sampled_from([GF(2), GF(3)]))
def test_derivation_extension_is_an_ideal_extension(seed, f):
    L = gen.random_solvable(seed, 3, f)
    ders = gen.derivation_basis(L)
    M = gen.extend_by_derivation(L, ders[0]) if ders else gen.extend_by_derivation(L, [[f.zero] * L.dim] * L.dim)
    assert M.dim == L.dim + 1
    assert is_ideal(M, M.span(M.basis_vector(i) for i in range(L.dim)))
