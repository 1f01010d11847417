import json
from fractions import Fraction

import pytest
from hypothesis import given

from solvlie import generators as gen
from solvlie.aclass import (
    MethodInapplicable, NotMetabelian, SamplingInconclusive, Undecided, is_A, lemma_5_3_check,
    q_set, q_set_equals_nilradical, theorem_5_4_check, theorem_6_3_classify, theorem_6_5_form_check,
    theorem_6_6_check, witness_search,
)
from solvlie.exactfield import GF, QQ
from solvlie.liealg import direct_sum, is_abelian_space, is_metabelian, is_strongly_solvable, make_algebra
from solvlie.oracle import oracle_is_A, replay_witness
from solvlie.structure import NotMonolithic, monolith

from conftest import small_a_candidate, small_solvable

F5 = GF(5)

# Q^2 with b1 acting as the identity and b2 as a quarter turn
ROTATION_Q = make_algebra(QQ, 4, {(0, 2): {0: 1}, (1, 2): {1: 1}, (0, 3): {1: 1}, (1, 3): {0: -1}})


def test_is_a_named_examples(gf2):
    assert is_A(gen.example_2_4(gf2), "oracle_pairs").verdict
    assert is_A(gen.example_2_4(gf2), "structural").verdict
    cert = is_A(gen.heisenberg(gf2))
    assert cert.verdict is False and replay_witness(gen.heisenberg(gf2), cert.witness)
    assert is_A(gen.two_dim_nonabelian(gf2)).verdict


def test_is_a_over_q():
    assert is_A(gen.two_dim_nonabelian(QQ)).verdict
    assert is_A(gen.heisenberg(QQ)).verdict is False
    with pytest.raises(Undecided):
        is_A(ROTATION_Q)


def test_certificate_json(gf2):
    cert = is_A(gen.heisenberg(gf2))
    out = cert.to_json(gf2)
    assert out["verdict"] is False and len(out["witness"]) == 2
    json.dumps(out)


def test_q_set_examples():
    A = gen.abelian(F5, 2)
    assert q_set(A).span.is_full()
    S = gen.two_dim_nonabelian(F5)
    q = q_set(S)
    assert q.is_subspace and q.span == S.span([S.basis_vector(0)]) and len(q.elements) == 5
    assert q_set_equals_nilradical(S)
    H = gen.heisenberg(F5)
    assert not is_abelian_space(H, q_set(H).span)


def test_q_set_over_q_is_not_exhaustive():
    q = q_set(gen.two_dim_nonabelian(QQ))
    assert not q.exhaustive and q.span.dim == 1


def test_metabelian_lemma_examples():
    assert lemma_5_3_check(gen.two_dim_nonabelian(F5))
    assert lemma_5_3_check(gen.abelian(F5, 2))
    # b acting as diag(1, 0) on span{a1, a2}
    D = make_algebra(GF(3), 3, {(0, 2): {0: 1}})
    assert not lemma_5_3_check(D)
    with pytest.raises(NotMetabelian):
        lemma_5_3_check(gen.example_2_4(F5))
    with pytest.raises(SamplingInconclusive):
        lemma_5_3_check(ROTATION_Q)


def test_monolithic_criterion_examples(gf2):
    assert theorem_5_4_check(gen.two_dim_nonabelian(F5)) == (True, True)
    assert theorem_5_4_check(gen.example_2_4(gf2)) == (False, False)
    assert theorem_5_4_check(gen.heisenberg(gf2)) == (False, False)
    two = direct_sum(gen.two_dim_nonabelian(GF(3)), gen.two_dim_nonabelian(GF(3)))
    with pytest.raises(NotMonolithic):
        theorem_5_4_check(two)


def test_monolithic_classification():
    c = theorem_6_3_classify(gen.two_dim_nonabelian(F5))
    assert (c.case, c.lam, c.k, c.dim_W) == ("i", 1, 1, 1)
    c = theorem_6_3_classify(gen.example_2_4(GF(2)))
    assert c.case == "ii" and c.dim_W == 2 and c.mu == 1
    json.dumps(c.to_json(GF(2)))
    with pytest.raises(ValueError):
        theorem_6_3_classify(gen.abelian(F5, 1))


def test_diagonal_form():
    L = gen.theorem_6_1_algebra(gen.Theorem61Params(2, 1, [[1], [2]]), F5)
    ok, basis = theorem_6_5_form_check(L)
    assert ok and len(basis) == L.dim


def test_block_conditions_on_example(gf2):
    r = theorem_6_6_check(gen.example_2_4(gf2))
    assert r.conditions == (True, True, True, True) and r.conclusion
    assert len(r.params.blocks) == 1
    json.dumps(r.params.to_json(gf2))
    with pytest.raises(MethodInapplicable):
        theorem_6_6_check(gen.heisenberg(gf2))


def test_block_conditions_on_weyl_block(gf2):
    r = theorem_6_6_check(gen.weyl_block(gf2))
    assert not r.conditions[1] and not r.conclusion
    assert oracle_is_A(gen.weyl_block(gf2)).verdict is False


def test_witness_search_finds_heisenberg_over_q():
    x, y = witness_search(gen.heisenberg(QQ))
    assert replay_witness(gen.heisenberg(QQ), (x, y))


@given(small_a_candidate())
def test_lemma_constructed_algebras_are_a(L):
    assert is_metabelian(L)
    assert lemma_5_3_check(L)
    assert oracle_is_A(L).verdict


@given(small_solvable())
def test_structural_verdict_agrees_with_oracle(L):
    try:
        cert = is_A(L, "structural")
    except Undecided:
        return
    assert cert.verdict == oracle_is_A(L).verdict
    if cert.verdict is False:
        assert replay_witness(L, cert.witness)


@given(small_solvable())
def test_monolithic_criterion_sides_agree(L):
    try:
        monolith(L)
    except NotMonolithic:
        return
    lhs, rhs = theorem_5_4_check(L)
    assert lhs == rhs


@given(small_solvable())
def test_block_check_on_phi_free_non_strongly_solvable(L):
    from solvlie.oracle import oracle_frattini
    if is_strongly_solvable(L) or not oracle_frattini(L).is_zero():
        return
    r = theorem_6_6_check(L)
    assert r.conclusion == oracle_is_A(L).verdict


def test_q_set_over_q_contains_the_derived_line():
    S = gen.two_dim_nonabelian(QQ)
    assert q_set(S).span.contains((Fraction(3), Fraction(0)))
