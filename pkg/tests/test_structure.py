import json

import pytest
from hypothesis import given

from solvlie import generators as gen
from solvlie.exactfield import GF, QQ
from solvlie.liealg import direct_sum, induced_algebra, is_ideal, is_metabelian
from solvlie.oracle import oracle_frattini, oracle_frattini_of, oracle_is_A, oracle_minimal_ideals, oracle_nilradical
from solvlie.structure import (
    MethodInapplicable, NotMonolithic, abelian_socle, frattini, is_phi_free, is_phi_free_tagged,
    minimal_ideals, monolith, nilradical, nilradical_tagged, phi_free_structural, strongly_solvable,
    structure_report,
)

from conftest import small_a_candidate, small_solvable


def xs(L, p):
    return L.span(L.basis_vector(2 + i) for i in range(p))


def test_nilradical_examples(gf2):
    A = gen.abelian(gf2, 3)
    assert nilradical(A, "a_series").is_full()
    S = gen.two_dim_nonabelian(gf2)
    assert nilradical(S, "a_series") == S.span([S.basis_vector(0)])
    L = gen.example_2_4(gf2)
    for method in ("oracle", "a_series", "lifted"):
        assert nilradical(L, method) == xs(L, 2)


def test_nilradical_over_q_uses_trace_form():
    S = gen.two_dim_nonabelian(QQ)
    N, how = nilradical_tagged(S)
    assert how == "traceform" and N == S.span([S.basis_vector(0)])


def test_a_series_refuses_known_non_a(gf2):
    with pytest.raises(MethodInapplicable):
        nilradical(gen.heisenberg(gf2), "a_series", is_a=False)


def test_lifted_nilradical_on_non_a(gf2):
    W = gen.weyl_block(gf2)
    assert nilradical(W, "lifted") == oracle_nilradical(W)


def test_minimal_ideals_examples(gf3):
    H = gen.heisenberg(gf3)
    assert minimal_ideals(H) == [H.span([H.basis_vector(2)])]
    assert monolith(H) == H.span([H.basis_vector(2)])
    L = gen.example_2_4(gf3)
    assert monolith(L) == xs(L, 3)
    two = direct_sum(gen.two_dim_nonabelian(gf3), gen.two_dim_nonabelian(gf3))
    with pytest.raises(NotMonolithic):
        monolith(two)
    assert len(oracle_minimal_ideals(two)) == 2


def test_frattini_examples(gf2):
    L = gen.example_2_4(gf2)
    assert frattini(L).is_zero()
    B = L.span([L.basis_vector(i) for i in (0, 2, 3)])
    assert oracle_frattini_of(L, B) == L.span([(0, 0, 1, 1)])
    assert frattini(gen.abelian(gf2, 3)).is_zero()
    with pytest.raises(MethodInapplicable):
        frattini(gen.abelian(QQ, 2))


def test_phi_free_examples(gf2):
    L = gen.example_2_4(gf2)
    assert is_phi_free(L)
    K, _ = induced_algebra(L, L.span([L.basis_vector(i) for i in (0, 2, 3)]))
    assert not is_phi_free(K)
    assert is_phi_free(gen.two_dim_nonabelian(gf2))
    assert not is_phi_free(gen.heisenberg(gf2))


def test_phi_free_without_oracle_for_p5():
    L = gen.example_2_4(GF(5))
    ok, route = is_phi_free_tagged(L, "structural", is_a=True)
    assert ok and route == "monolith_equals_nilradical"


def test_strong_solvability(gf2):
    assert strongly_solvable(gen.two_dim_nonabelian(gf2))
    assert strongly_solvable(gen.abelian(gf2, 2))
    assert not strongly_solvable(gen.example_2_4(gf2))


def test_report_for_example(gf2):
    L = gen.example_2_4(gf2)
    rep = structure_report(L, is_a=True)
    assert rep.derived_length == 3
    assert rep.nilradical.value == xs(L, 2)
    assert rep.monolith.value == xs(L, 2)
    assert rep.frattini.value.is_zero() and rep.phi_free.value is True
    json.dumps(rep.to_json())


def test_report_on_heisenberg_records_reasons(gf3):
    rep = structure_report(gen.heisenberg(gf3)).to_json()
    assert rep["strongly_solvable"] is True


@given(small_solvable())
def test_minimal_ideals_match_oracle(L):
    got = sorted(minimal_ideals(L), key=lambda s: s.basis)
    want = sorted(oracle_minimal_ideals(L), key=lambda s: s.basis)
    assert got == want


@given(small_solvable())
def test_structural_phi_free_matches_oracle(L):
    is_a = oracle_is_A(L).verdict
    try:
        got = is_phi_free(L, "structural", is_a=is_a)
    except MethodInapplicable:
        return
    assert got == oracle_frattini(L).is_zero()


@given(small_a_candidate())
def test_sum_of_centres_is_nilradical_for_a_algebras(L):
    assert nilradical(L, "a_series", is_a=True) == oracle_nilradical(L)


@given(small_solvable())
def test_socle_and_lifted_nilradical(L):
    soc = abelian_socle(L)
    assert is_ideal(L, soc) and soc <= oracle_nilradical(L)
    assert nilradical(L, "lifted") == oracle_nilradical(L)


@given(small_solvable())
def test_metabelian_implies_strongly_solvable(L):
    if is_metabelian(L):
        assert strongly_solvable(L)


def test_phi_free_structural_rejects_non_solvable():
    sl2 = gen.make_algebra(QQ, 3, {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}})
    with pytest.raises(MethodInapplicable):
        phi_free_structural(sl2, is_a=False)
