import json

import pytest
from hypothesis import given

from solvlie import generators as gen
from solvlie.exactfield import GF
from solvlie.theorems import FAIL, NA, PASS, PROXY, THEOREM_IDS, has_failure, verify_theorems

from conftest import small_a_candidate, small_solvable

A_ONLY = ["C3.2", "T3.3", "L3.4", "T3.5(i)", "T3.5(ii)", "T3.5(iii)", "T3.5(iv)", "P3.6", "T5.1(i)", "T6.2"]


def test_example_suite(gf2):
    v = verify_theorems(gen.example_2_4(gf2))
    assert set(v) == set(THEOREM_IDS)
    assert v["T3.3"].status == PASS
    assert all(v[f"T5.1({part})"].status == PASS for part in ("i", "ii", "iii", "iv", "v"))
    assert v["T4.1"].status == NA
    assert v["T6.6"].status == PASS
    assert not has_failure(v)


def test_heisenberg_suite(gf2):
    v = verify_theorems(gen.heisenberg(gf2))
    assert v["L2.5"].status == PASS
    assert all(v[k].status == NA for k in A_ONLY)
    assert "A-algebra" in v["T3.3"].detail


def test_lemma_constructed_suite(gf2):
    v = verify_theorems(gen.random_A_candidate(3, GF(3)))
    assert v["L5.3"].status == PASS and v["T3.3"].status == PASS and v["C3.2"].status == PASS


def test_only_selects_checks(gf2):
    v = verify_theorems(gen.two_dim_nonabelian(gf2), only=["T3.3", "L2.5"])
    assert set(v) == {"T3.3", "L2.5"}


def test_verdicts_serialise(gf2):
    v = verify_theorems(gen.example_2_4(gf2))
    json.dumps({k: x.to_json() for k, x in v.items()})


def test_mutation_is_detected(monkeypatch, gf2):
    monkeypatch.setenv("SOLVLIE_MUTATE", "cor32")
    v = verify_theorems(gen.two_dim_nonabelian(gf2))
    assert v["C3.2"].status == FAIL and v["C3.2"].witness is not None
    assert has_failure(v)


def test_weyl_block_suite_has_no_failures(gf2):
    assert not has_failure(verify_theorems(gen.weyl_block(gf2)))


@given(small_solvable())
def test_no_failures_on_random_solvable(L):
    v = verify_theorems(L)
    bad = {k: x.detail for k, x in v.items() if x.status == FAIL}
    assert not bad


@given(small_a_candidate())
def test_a_candidates_exercise_the_a_checks(L):
    v = verify_theorems(L)
    assert not has_failure(v)
    assert all(v[k].status in (PASS, PROXY) for k in ("C3.2", "T3.3", "L3.4", "T6.2"))
