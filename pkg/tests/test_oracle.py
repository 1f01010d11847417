"""Oracle inventories against counts frozen from scripts/derive_frozen_values.py.

That script builds every subspace as an explicit set of vectors and shares no
code with the package.
"""

import pytest
from hypothesis import given

from solvlie import generators as gen
from solvlie.aclass import q_set
from solvlie.exactfield import GF, QQ, InfiniteField
from solvlie.liealg import is_nilpotent
from solvlie.oracle import (
    BudgetExceeded, EnumBudget, count_subspaces, gaussian_binomial, heisenberg_witness, inventory,
    iter_subspaces, oracle_frattini, oracle_frattini_of, oracle_is_A, oracle_is_elementary,
    oracle_minimal_ideals, oracle_nilradical, replay_witness,
)

from conftest import small_solvable

FROZEN = [
    # name, p, subalgebras, ideals, nilpotent, maximal, maximal nilpotent, minimal ideals, dim phi, A, square-zero
    ("example_2_4", 2, 31, 4, 19, 7, 11, 1, 0, True, 4),
    ("example_2_4", 3, 216, 4, 145, 31, 91, 1, 0, True, 27),
    ("heisenberg", 2, 12, 6, 12, 3, 1, 1, 1, False, 8),
    ("heisenberg", 3, 19, 7, 19, 4, 1, 1, 1, False, 27),
    ("two_dim", 5, 8, 3, 7, 6, 6, 1, 0, True, 5),
    ("two_dim", 3, 6, 3, 5, 4, 4, 1, 0, True, 3),
]

BUILD = {"example_2_4": gen.example_2_4, "heisenberg": gen.heisenberg, "two_dim": gen.two_dim_nonabelian}


@pytest.mark.parametrize("row", FROZEN, ids=lambda r: f"{r[0]}-p{r[1]}")
def test_inventory_matches_independent_counts(row):
    name, p, subs, ideals, nil, maxi, maxnil, mins, phi, is_a, sqz = row
    L = BUILD[name](GF(p))
    inv = inventory(L)
    assert len(inv.subalgebras) == subs
    assert len(inv.ideals) == ideals
    assert len(inv.nilpotent_subalgebras) == nil
    assert len(inv.maximal_subalgebras) == maxi
    assert len(inv.maximal_nilpotent_subalgebras) == maxnil
    assert len(oracle_minimal_ideals(L)) == mins
    assert oracle_frattini(L).dim == phi
    assert oracle_is_A(L).verdict is is_a
    assert len(q_set(L).elements) == sqz


def test_subspace_counts():
    assert count_subspaces(2, 2) == 5
    assert gaussian_binomial(4, 2, 2) == 35
    assert sum(1 for _ in iter_subspaces(GF(3), 3)) == count_subspaces(3, 3)
    assert len(inventory(gen.abelian(GF(2), 2)).subalgebras) == 5


def test_q_refused():
    with pytest.raises(InfiniteField):
        inventory(gen.abelian(QQ, 2))


def test_budget_enforced():
    tiny = EnumBudget(max_subspaces=10)
    with pytest.raises(BudgetExceeded):
        inventory(gen.example_2_4(GF(2)), tiny)
    with pytest.raises(ValueError):
        EnumBudget(max_pairs=0)


def test_example_claims(gf2):
    L = gen.example_2_4(gf2)
    assert oracle_is_A(L).verdict
    B = L.span([L.basis_vector(i) for i in (0, 2, 3)])
    assert oracle_frattini_of(L, B) == L.span([(0, 0, 1, 1)])
    assert not oracle_is_elementary(L)
    assert oracle_frattini(L).is_zero()


def test_frattini_of_cyclic_subalgebra_at_three():
    # frozen from the brute-force script: the sum-zero plane, not the all-ones line
    f = GF(3)
    L = gen.example_2_4(f)
    B = L.span([L.basis_vector(i) for i in (0, 2, 3, 4)])
    phi = oracle_frattini_of(L, B)
    assert phi == L.span([(0, 0, 1, 0, 2), (0, 0, 0, 1, 2)])
    assert phi.contains((0, 0, 1, 1, 1))


def test_small_named_cases(gf3):
    S = gen.two_dim_nonabelian(gf3)
    assert oracle_nilradical(S) == S.span([S.basis_vector(0)])
    assert oracle_is_elementary(S)
    assert oracle_is_elementary(gen.abelian(gf3, 2))
    H = gen.heisenberg(gf3)
    cert = oracle_is_A(H)
    assert cert.verdict is False and replay_witness(H, cert.witness)


@given(small_solvable(dim_max=3))
def test_three_oracle_methods_agree(L):
    verdicts = {oracle_is_A(L, method=m).verdict for m in ("heisenberg", "pairs", "subalgebras")}
    assert len(verdicts) == 1


@given(small_solvable())
def test_witness_replays(L):
    w = heisenberg_witness(L)
    if w is not None:
        assert replay_witness(L, w)


@given(small_solvable())
def test_nilradical_is_the_largest_nilpotent_ideal(L):
    N = oracle_nilradical(L)
    assert is_nilpotent(L, N)
    assert all(k <= N for k in inventory(L).ideals if is_nilpotent(L, k))


@given(small_solvable())
def test_frattini_inside_every_maximal(L):
    phi = oracle_frattini(L)
    assert all(phi <= m for m in inventory(L).maximal_subalgebras)
