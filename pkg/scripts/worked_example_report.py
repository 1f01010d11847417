"""Structure of the cyclic-shift example Fe + Ff + F^p for several primes.

For each p prints the derived series, nilradical and monolith dimensions, the
A verdict, phi(L), and phi of the subalgebra Fe + F^p when the lattice fits the
enumeration budget.
"""

import argparse
from dataclasses import dataclass

from solvlie import generators as gen
from solvlie.aclass import is_A
from solvlie.exactfield import GF
from solvlie.liealg import derived_length, derived_series
from solvlie.oracle import BudgetExceeded, EnumBudget, oracle_frattini, oracle_frattini_of
from solvlie.structure import is_phi_free, monolith, nilradical


@dataclass
class ReportConfig:
    primes: tuple[int, ...] = (2, 3, 5)
    max_subspaces: int = EnumBudget.max_subspaces


def describe(p: int, budget: EnumBudget) -> dict:
    L = gen.example_2_4(GF(p))
    e_and_x = L.span([L.basis_vector(0)] + [L.basis_vector(2 + i) for i in range(p)])
    row = {
        "p": p,
        "dim": L.dim,
        "derived dims": derived_series(L).dims(),
        "derived length": derived_length(L),
        "nilradical": nilradical(L).dim,
        "monolith": monolith(L).dim,
        "A": is_A(L, "structural").verdict,
        "phi-free": is_phi_free(L, "structural", is_a=True),
    }
    try:
        row["phi(L)"] = oracle_frattini(L, budget).dim
        phi_b = oracle_frattini_of(L, e_and_x, budget)
        row["phi(Fe+F^p)"] = phi_b.dim
        row["contains all-ones"] = phi_b.contains(tuple([0, 0] + [1] * p))
    except BudgetExceeded:
        row["phi(L)"] = row["phi(Fe+F^p)"] = "budget"
    return row


def main():
    d = ReportConfig()
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--primes", default=",".join(map(str, d.primes)))
    ap.add_argument("--max-subspaces", type=int, default=d.max_subspaces)
    a = ap.parse_args()
    cfg = ReportConfig(tuple(int(s) for s in a.primes.split(",")), a.max_subspaces)
    budget = EnumBudget(max_subspaces=cfg.max_subspaces)
    for p in cfg.primes:
        try:
            print("  ".join(f"{k}={v}" for k, v in describe(p, budget).items()))
        except BudgetExceeded as exc:
            print(f"p={p}  out of budget: {exc}")


if __name__ == "__main__":
    main()
