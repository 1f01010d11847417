"""Exhaustive ground truth over small finite fields.

Everything here works by enumerating subspaces (one RREF shape at a time) or
elements, so it is exact but exponential.  Budgets are hard limits: running
out raises :class:`BudgetExceeded` instead of returning a partial answer.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Iterator

import numpy as np

from .exactfield import Field, InfiniteField
from .linalg import Subspace, kernel, lin_comb, solve, vec_add
from .liealg import (
    LieAlgebra,
    ad_matrix,
    bracket_spaces,
    generated_subalgebra,
    ideal_core,
    induced_algebra,
    is_abelian_space,
    is_ideal,
    is_nilpotent,
    is_subalgebra,
)


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class EnumBudget:
    max_subspaces: int = 10**6
    max_pairs: int = 10**7
    wall_clock: float | None = None  # seconds

    def __post_init__(self):
        if self.max_subspaces <= 0 or self.max_pairs <= 0:
            raise ValueError("budgets must be positive")
        if self.wall_clock is not None and self.wall_clock <= 0:
            raise ValueError("wall clock cap must be positive")


DEFAULT_BUDGET = EnumBudget()


@dataclass
class _Clock:
    budget: EnumBudget
    start: float = dc_field(default_factory=time.monotonic)

    def tick(self):
        cap = self.budget.wall_clock
        if cap is not None and time.monotonic() - self.start > cap:
            raise BudgetExceeded(f"wall clock cap of {cap}s exceeded")


@dataclass(frozen=True)
class ACertificate:
    verdict: bool | None
    method: str
    witness: tuple | None = None  # (x, y) generating a nilpotent non-abelian subalgebra
    q_set: Subspace | None = None
    notes: tuple = ()

    def to_json(self, f: Field) -> dict:
        out = {"verdict": self.verdict, "method": self.method}
        if self.witness is not None:
            out["witness"] = [[f.encode(a) for a in v] for v in self.witness]
        if self.q_set is not None:
            out["q_set"] = self.q_set.to_json()
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def gaussian_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def count_subspaces(n: int, q: int) -> int:
    return sum(gaussian_binomial(n, k, q) for k in range(n + 1))


def _require_finite(f: Field):
    if not f.is_finite:
        raise InfiniteField(f"exhaustive enumeration needs a finite field, got {f}")


def iter_subspaces(f: Field, n: int, dims=None) -> Iterator[Subspace]:
    """Every subspace of F^n exactly once, by RREF shape (pivot sets in lexicographic order)."""
    _require_finite(f)
    elems = f.elements()
    zero, one = f.zero, f.one
    for k in (range(n + 1) if dims is None else dims):
        for piv in itertools.combinations(range(n), k):
            pset = set(piv)
            free = [(r, c) for r, pc in enumerate(piv) for c in range(pc + 1, n) if c not in pset]
            base = [[zero] * n for _ in range(k)]
            for r, pc in enumerate(piv):
                base[r][pc] = one
            for vals in itertools.product(elems, repeat=len(free)):
                rows = [row[:] for row in base]
                for (r, c), a in zip(free, vals):
                    rows[r][c] = a
                yield Subspace.from_rref(f, n, rows, piv)


def iter_vectors(f: Field, n: int, nonzero: bool = False) -> Iterator[tuple]:
    _require_finite(f)
    for v in itertools.product(f.elements(), repeat=n):
        if nonzero and not any(v):
            continue
        yield v


def projective_points(f: Field, space: Subspace) -> Iterator[tuple]:
    """One nonzero vector per line of ``space`` (leading coordinate 1)."""
    _require_finite(f)
    k = space.dim
    elems = f.elements()
    for lead in range(k):
        for tail in itertools.product(elems, repeat=k - lead - 1):
            coords = (f.zero,) * lead + (f.one,) + tail
            yield space.from_coords(coords)


def coset_points(L: LieAlgebra, u: Subspace) -> Iterator[tuple]:
    """Projective representatives of (L/u) minus 0, supported off u's pivots."""
    f = L.field
    free = [c for c in range(L.dim) if c not in set(u.pivots)]
    comp = Subspace.from_rref(f, L.dim, [[f.one if j == c else f.zero for j in range(L.dim)] for c in free], free)
    return projective_points(f, comp)


class Inventory:
    """The full subalgebra lattice of a small algebra, with derived inventories."""

    def __init__(self, L: LieAlgebra, budget: EnumBudget = DEFAULT_BUDGET):
        _require_finite(L.field)
        total = count_subspaces(L.dim, L.field.order)
        if total > budget.max_subspaces:
            raise BudgetExceeded(f"{total} subspaces exceed the budget of {budget.max_subspaces}")
        self.L = L
        self.budget = budget
        clock = _Clock(budget)
        subs = []
        for i, s in enumerate(iter_subspaces(L.field, L.dim)):
            if i % 4096 == 0:
                clock.tick()
            if is_subalgebra(L, s):
                subs.append(s)
        self.subalgebras: list[Subspace] = subs
        self._index = {s.basis: s for s in subs}

    @cached_property
    def ideals(self) -> list[Subspace]:
        return [s for s in self.subalgebras if is_ideal(self.L, s)]

    @cached_property
    def nilpotent_subalgebras(self) -> list[Subspace]:
        return [s for s in self.subalgebras if is_nilpotent(self.L, s)]

    @staticmethod
    def _maximal_among(spaces, exclude_full: bool) -> list[Subspace]:
        """Members of ``spaces`` not strictly inside another member (by dimension, then containment)."""
        pool = [s for s in spaces if not (exclude_full and s.is_full())]
        pool.sort(key=lambda s: -s.dim)
        out = []
        # anything strictly above s sits below some maximal member found earlier
        for s in pool:
            if not any(t.dim > s.dim and s <= t for t in out):
                out.append(s)
        out.sort(key=lambda s: (s.dim, s.basis))
        return out

    @cached_property
    def maximal_subalgebras(self) -> list[Subspace]:
        return self._maximal_among(self.subalgebras, exclude_full=True)

    @cached_property
    def maximal_nilpotent_subalgebras(self) -> list[Subspace]:
        return self._maximal_among(self.nilpotent_subalgebras, exclude_full=False)

    @cached_property
    def minimal_ideals(self) -> list[Subspace]:
        nz = [s for s in self.ideals if not s.is_zero()]
        return [s for s in nz if not any(t.dim < s.dim and t <= s for t in nz)]

    @cached_property
    def cartan_subalgebras(self) -> list[Subspace]:
        from .liealg import normalizer
        return [s for s in self.nilpotent_subalgebras if normalizer(self.L, s) == s]


_INVENTORY_CACHE: dict = {}


def inventory(L: LieAlgebra, budget: EnumBudget = DEFAULT_BUDGET) -> Inventory:
    key = (L, budget)
    inv = _INVENTORY_CACHE.get(key)
    if inv is None:
        if len(_INVENTORY_CACHE) > 64:
            _INVENTORY_CACHE.clear()
        inv = Inventory(L, budget)
        _INVENTORY_CACHE[key] = inv
    return inv


def enum_subalgebras(L, budget=DEFAULT_BUDGET):
    return list(inventory(L, budget).subalgebras)


def enum_ideals(L, budget=DEFAULT_BUDGET):
    return list(inventory(L, budget).ideals)


def enum_nilpotent_subalgebras(L, budget=DEFAULT_BUDGET):
    return list(inventory(L, budget).nilpotent_subalgebras)


def maximal_subalgebras(L, budget=DEFAULT_BUDGET):
    return list(inventory(L, budget).maximal_subalgebras)


def maximal_nilpotent_subalgebras(L, budget=DEFAULT_BUDGET):
    return list(inventory(L, budget).maximal_nilpotent_subalgebras)


# --- A-property ------------------------------------------------------------

def _structure_tensor(L: LieAlgebra) -> np.ndarray:
    n = L.dim
    T = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            T[i, j, :] = L.table[i][j]
    return T


def _tables(f: Field):
    from ._kernels import field_tables
    key = ("tables", f)
    t = _INVENTORY_CACHE.get(key)
    if t is None:
        t = field_tables(f)
        _INVENTORY_CACHE[key] = t
    return t


def heisenberg_witness(L: LieAlgebra, budget: EnumBudget = DEFAULT_BUDGET):
    """(x, y) spanning a Heisenberg subalgebra with y, x and [y, x], or None.

    A nilpotent non-abelian subalgebra U contains x in the penultimate term of
    its lower central series and y with z = [y, x] != 0 central in U, so L is an
    A-algebra iff no such pair exists.  For each x only y in ker(ad x)^2 can
    qualify, which is what keeps the pair count small.
    """
    f = L.field
    _require_finite(f)
    if L.dim == 0 or L.is_abelian():
        return None
    from ._kernels import heisenberg_search
    add, mul, neg, inv = _tables(f)
    status, pairs, x, y = heisenberg_search(_structure_tensor(L), L.dim, f.order, add, mul, neg, inv,
                                            budget.max_pairs)
    if status < 0:
        raise BudgetExceeded(f"more than {budget.max_pairs} candidate pairs")
    if status == 0:
        return None
    x = tuple(int(a) for a in x)
    y0 = tuple(int(a) for a in y)
    z = L.bracket(y0, x)
    k1 = kernel(f, ad_matrix(L, x), L.dim)
    rows = [L.bracket(z, b) for b in k1.basis]
    rhs = tuple(f.neg(a) for a in L.bracket(z, y0))
    c = solve(f, rows, rhs)
    y = vec_add(f, y0, lin_comb(f, c, k1.basis, L.dim))
    return x, y


def replay_witness(L: LieAlgebra, witness) -> bool:
    """Does the pair generate a nilpotent non-abelian subalgebra?"""
    x, y = witness
    if not any(L.bracket(x, y)):
        return False
    return is_nilpotent(L, generated_subalgebra(L, [x, y]))


def oracle_is_A(L: LieAlgebra, budget: EnumBudget = DEFAULT_BUDGET, method: str = "heisenberg") -> ACertificate:
    """Exhaustive A-verdict.

    methods: ``heisenberg`` (pairs restricted by ker(ad x)^2, complete),
    ``pairs`` (every ordered pair, generated subalgebra tested), ``subalgebras``
    (every nilpotent subalgebra tested for commutativity).
    """
    f = L.field
    _require_finite(f)
    if method == "heisenberg":
        w = heisenberg_witness(L, budget)
        return ACertificate(w is None, "oracle_pairs", w)
    if method == "pairs":
        q, n = f.order, L.dim
        if (q**n) ** 2 > budget.max_pairs:
            raise BudgetExceeded(f"{(q ** n) ** 2} pairs exceed the budget of {budget.max_pairs}")
        seen = {}
        vecs = list(iter_vectors(f, n))
        clock = _Clock(budget)
        for i, x in enumerate(vecs):
            clock.tick()
            for y in vecs[i + 1:]:
                if not any(L.bracket(x, y)):
                    continue
                span = L.span([x, y]).basis
                hit = seen.get(span)
                if hit is None:
                    hit = is_nilpotent(L, generated_subalgebra(L, [x, y]))
                    seen[span] = hit
                if hit:
                    return ACertificate(False, "oracle_pairs_generated", (x, y))
        return ACertificate(True, "oracle_pairs_generated")
    if method == "subalgebras":
        inv = inventory(L, budget)
        for s in inv.nilpotent_subalgebras:
            if not is_abelian_space(L, s):
                b = s.basis
                for i in range(len(b)):
                    for j in range(i + 1, len(b)):
                        if any(L.bracket(b[i], b[j])):
                            return ACertificate(False, "oracle_subalgebras", (b[i], b[j]))
        return ACertificate(True, "oracle_subalgebras")
    raise ValueError(f"unknown oracle method {method!r}")


# --- nilradical, Frattini, minimal ideals ---------------------------------

def oracle_nilradical(L: LieAlgebra, budget: EnumBudget = DEFAULT_BUDGET) -> Subspace:
    inv = inventory(L, budget)
    nil = [s for s in inv.ideals if is_nilpotent(L, s)]
    best = max(nil, key=lambda s: s.dim)
    assert all(s <= best for s in nil), "sum of nilpotent ideals must be nilpotent"
    return best


def oracle_frattini(L: LieAlgebra, budget: EnumBudget = DEFAULT_BUDGET) -> Subspace:
    """Largest ideal inside the intersection of all maximal subalgebras."""
    if L.dim == 0:
        return L.zero_space()
    inv = inventory(L, budget)
    inter = L.full()
    for m in inv.maximal_subalgebras:
        inter = inter & m
    return ideal_core(L, inter)


def oracle_frattini_of(L: LieAlgebra, sub: Subspace, budget: EnumBudget = DEFAULT_BUDGET) -> Subspace:
    """phi of the subalgebra ``sub``, returned inside L."""
    K, u = induced_algebra(L, sub)
    phi = oracle_frattini(K, budget)
    return L.span(u.from_coords(c) for c in phi.basis)


def oracle_minimal_ideals(L: LieAlgebra, budget: EnumBudget = DEFAULT_BUDGET) -> list[Subspace]:
    return list(inventory(L, budget).minimal_ideals)


def oracle_is_elementary(L: LieAlgebra, budget: EnumBudget = DEFAULT_BUDGET) -> bool:
    """phi(B) = 0 for every subalgebra B."""
    for s in inventory(L, budget).subalgebras:
        if s.is_zero():
            continue
        if not oracle_frattini_of(L, s, budget).is_zero():
            return False
    return True


def inventory_lines(spaces, f: Field):
    """JSON-lines payloads, one subspace per line."""
    import json
    for s in spaces:
        yield json.dumps({"dim": s.dim, "basis": s.to_json()}, sort_keys=True)
