"""Nilradical, minimal ideals, socle, monolith and the Frattini ideal."""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from .exactfield import Field
from .linalg import Subspace, kernel, lin_comb, mat_mul
from .liealg import (
    LieAlgebra,
    ad_matrix,
    bracket_spaces,
    center,
    centralizer,
    derived_algebra,
    derived_series,
    ideal_closure,
    is_abelian_space,
    is_ideal,
    is_nilpotent,
    is_solvable,
    is_strongly_solvable,
)
from .oracle import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    EnumBudget,
    count_subspaces,
    oracle_frattini,
    oracle_minimal_ideals,
    oracle_nilradical,
    projective_points,
)


class StructureError(ArithmeticError):
    pass


class MethodInapplicable(StructureError):
    pass


class VerificationFailed(StructureError):
    pass


class NotMonolithic(StructureError):
    def __init__(self, count):
        super().__init__(f"{count} minimal ideals")
        self.count = count


# Above this many subspaces the lattice oracle is too slow for "auto" use.
ORACLE_AUTO_LIMIT = 40_000
# Projective points enumerated by the exact minimal-ideal search.
POINT_LIMIT = 200_000


def oracle_feasible(L: LieAlgebra, limit: int = ORACLE_AUTO_LIMIT) -> bool:
    f = L.field
    return f.is_finite and count_subspaces(L.dim, f.order) <= limit


def strongly_solvable(L: LieAlgebra) -> bool:
    return is_strongly_solvable(L)


# --- nilradical ------------------------------------------------------------

def _nilradical_a_series(L: LieAlgebra) -> Subspace:
    """Sum of the centres of the derived terms; exact for solvable A-algebras."""
    ds = derived_series(L)
    if not ds.reaches_zero:
        raise MethodInapplicable("a_series needs a solvable algebra")
    acc = L.zero_space()
    for term in ds.terms[:-1]:
        acc = acc + center(L, term)
    # N contains acc; if N is abelian then N <= C(acc) = acc.  A nilpotent N
    # strictly above acc yields a nilpotent non-abelian subalgebra, so the
    # answer is exact for A-algebras and may be too small otherwise.
    if not is_ideal(L, acc) or not is_abelian_space(L, acc):
        raise VerificationFailed("sum of centres of derived terms is not an abelian ideal")
    if centralizer(L, acc) != acc:
        raise VerificationFailed("sum of centres of derived terms is not self-centralising")
    return acc


def _nilradical_lifted(L: LieAlgebra, budget: EnumBudget = DEFAULT_BUDGET) -> Subspace:
    """Exact over a finite field: lift the nilpotent ideals of L/N0 back to L.

    N0 is the sum of the centres of the derived terms, a nilpotent ideal and
    so inside N.  N is the largest preimage of an ideal of L/N0 that is
    nilpotent, and the quotient is usually small enough to enumerate.
    """
    from .liealg import preimage, quotient_algebra
    from .oracle import inventory
    ds = derived_series(L)
    if not ds.reaches_zero:
        raise MethodInapplicable("needs a solvable algebra")
    n0 = L.zero_space()
    for term in ds.terms[:-1]:
        n0 = n0 + center(L, term)
    Q, _ = quotient_algebra(L, n0)
    if not oracle_feasible(Q):
        raise MethodInapplicable("quotient by the centre sum is too large to enumerate")
    best = n0
    for I in inventory(Q, budget).ideals:
        P = preimage(L, n0, I)
        if P.dim > best.dim and is_nilpotent(L, P):
            best = P
    return best


def associative_envelope(L: LieAlgebra) -> list:
    """Basis (flattened n*n matrices) of the non-unital algebra generated by ad L."""
    f, n = L.field, L.dim
    gens = [ad_matrix(L, L.basis_vector(i)) for i in range(n)]
    flat = lambda m: tuple(a for row in m for a in row)
    space = Subspace.span(f, n * n, [flat(g) for g in gens])
    frontier = list(space.basis)
    while frontier:
        new = []
        for v in frontier:
            m = [list(v[r * n:(r + 1) * n]) for r in range(n)]
            for g in gens:
                w = flat(mat_mul(f, m, g, n))
                if not space.contains(w):
                    space = space + Subspace.span(f, n * n, [w])
                    new.append(w)
        frontier = new
    return [list(v) for v in space.basis]


def _nilradical_traceform(L: LieAlgebra) -> Subspace:
    """{x : tr(ad x . a) = 0 for all a in the envelope}; characteristic 0 only."""
    f, n = L.field, L.dim
    if f.characteristic != 0:
        raise MethodInapplicable("trace-form nilradical needs characteristic 0")
    if n == 0:
        return L.zero_space()
    env = associative_envelope(L)
    ads = [ad_matrix(L, L.basis_vector(i)) for i in range(n)]
    m = []
    for i in range(n):
        row = []
        for a in env:
            t = f.zero
            for r in range(n):
                for c in range(n):
                    x, y = ads[i][r][c], a[c * n + r]
                    if x != f.zero and y != f.zero:
                        t = f.add(t, f.mul(x, y))
            row.append(t)
        m.append(row)
    N = kernel(f, m, n) if env else L.full()
    if not is_ideal(L, N) or not is_nilpotent(L, N):
        raise VerificationFailed("trace-form radical is not a nilpotent ideal")
    return N


def nilradical(L: LieAlgebra, method: str = "auto", budget: EnumBudget = DEFAULT_BUDGET,
               is_a: bool | None = None) -> Subspace:
    return nilradical_tagged(L, method, budget, is_a)[0]


def nilradical_tagged(L: LieAlgebra, method: str = "auto", budget: EnumBudget = DEFAULT_BUDGET,
                      is_a: bool | None = None):
    """(N, method used).  ``is_a=False`` rules out the a_series method."""
    if method == "oracle":
        return oracle_nilradical(L, budget), "oracle"
    if method == "a_series":
        if is_a is False:
            raise MethodInapplicable("a_series is only exact for A-algebras")
        return _nilradical_a_series(L), "a_series"
    if method == "traceform":
        return _nilradical_traceform(L), "traceform"
    if method == "lifted":
        return _nilradical_lifted(L, budget), "lifted"
    if method != "auto":
        raise ValueError(f"unknown nilradical method {method!r}")
    if L.field.characteristic == 0:
        return _nilradical_traceform(L), "traceform"
    if oracle_feasible(L):
        return oracle_nilradical(L, budget), "oracle"
    try:
        return _nilradical_lifted(L, budget), "lifted"
    except MethodInapplicable:
        if is_a is False:
            raise
        return _nilradical_a_series(L), "a_series"


# --- minimal ideals ----------------------------------------------------------

def _minimal_by_points(L: LieAlgebra, space: Subspace) -> list[Subspace]:
    """Minimal ideals inside the ideal ``space``: minimal closures of its points."""
    closures = {}
    for v in projective_points(L.field, space):
        c = ideal_closure(L, L.span([v]))
        closures.setdefault(c.basis, c)
    found = sorted(closures.values(), key=lambda s: (s.dim, s.basis))
    out = []
    for s in found:
        if not any(t.dim < s.dim and t <= s for t in found):
            out.append(s)
    return out


def _random_in(rng: random.Random, f: Field, space: Subspace):
    if f.is_finite:
        coeffs = [rng.choice(f.elements()) for _ in range(space.dim)]
    else:
        coeffs = [f.from_int(rng.randint(-5, 5)) for _ in range(space.dim)]
    if not any(coeffs):
        coeffs[0] = f.one
    return space.from_coords(coeffs)


def _chop(L: LieAlgebra, start: Subspace, rng: random.Random, patience: int = 8) -> Subspace:
    """Shrink ``start`` to a (probably) minimal ideal by random generated sub-ideals."""
    cur = start
    misses = 0
    candidates = list(cur.basis)
    while misses < patience and cur.dim > 1:
        v = candidates.pop() if candidates else _random_in(rng, L.field, cur)
        sub = ideal_closure(L, L.span([v]))
        if sub.dim < cur.dim:
            cur = sub
            candidates = list(cur.basis)
            misses = 0
        else:
            misses += 1
    return cur


def minimal_ideals(L: LieAlgebra, method: str = "chop", seed: int = 0,
                   budget: EnumBudget = DEFAULT_BUDGET) -> list[Subspace]:
    return minimal_ideals_tagged(L, method, seed, budget)[0]


def minimal_ideals_tagged(L: LieAlgebra, method: str = "chop", seed: int = 0,
                          budget: EnumBudget = DEFAULT_BUDGET):
    """(minimal ideals, method tag).

    ``chop`` over a finite field enumerates the points of the nilradical (every
    minimal ideal of a solvable algebra is abelian, hence inside it) and keeps
    the minimal ideal closures: exact.  Over Q it chops with seeded random
    vectors and only returns the ideals it happened to reach.
    """
    if method == "oracle":
        return oracle_minimal_ideals(L, budget), "oracle"
    if method != "chop":
        raise ValueError(f"unknown minimal-ideal method {method!r}")
    if not is_solvable(L):
        raise MethodInapplicable("chop needs a solvable algebra")
    if L.dim == 0:
        return [], "chop"
    f = L.field
    N, _ = nilradical_tagged(L, "auto", budget)
    if f.is_finite:
        if f.order ** N.dim > POINT_LIMIT:
            raise BudgetExceeded(f"{f.order ** N.dim} points in the nilradical")
        return _minimal_by_points(L, N), "chop"
    rng = random.Random(seed)
    found = {}
    starts = [ideal_closure(L, L.span([v])) for v in N.basis]
    for s in starts:
        m = _chop(L, s, rng)
        found.setdefault(m.basis, m)
    return sorted(found.values(), key=lambda s: (s.dim, s.basis)), "chop_sampled"


def abelian_socle(L: LieAlgebra, seed: int = 0, budget: EnumBudget = DEFAULT_BUDGET) -> Subspace:
    acc = L.zero_space()
    for m in minimal_ideals(L, "chop", seed, budget):
        if is_abelian_space(L, m):
            acc = acc + m
    return acc


def monolith(L: LieAlgebra, seed: int = 0, budget: EnumBudget = DEFAULT_BUDGET) -> Subspace:
    mins = minimal_ideals(L, "chop", seed, budget)
    if len(mins) != 1:
        raise NotMonolithic(len(mins))
    return mins[0]


# --- Frattini --------------------------------------------------------------

def frattini(L: LieAlgebra, method: str = "oracle", budget: EnumBudget = DEFAULT_BUDGET) -> Subspace:
    if method != "oracle":
        raise MethodInapplicable("only the phi-free decision has a structural route")
    if not L.field.is_finite:
        raise MethodInapplicable("maximal subalgebras cannot be enumerated over an infinite field")
    return oracle_frattini(L, budget)


def splits_over(L: LieAlgebra, ideal: Subspace, within: Subspace | None = None) -> bool:
    from .decomp import complement_subalgebra
    return complement_subalgebra(L, ideal, within) is not None


def phi_free_structural(L: LieAlgebra, is_a: bool, seed: int = 0, budget: EnumBudget = DEFAULT_BUDGET):
    """(verdict, route) for a solvable algebra, or raise MethodInapplicable.

    Routes, in order: monolithic A-algebras (phi-free iff W = N), strongly
    solvable A-algebras (iff L^2 <= Asoc), and the general split test
    (N = Asoc with Asoc complemented by a subalgebra).  The first two need
    the A-property because the nilradical then comes from the derived series.
    """
    if not is_solvable(L):
        raise MethodInapplicable("structural phi-free routes need a solvable algebra")
    if L.dim == 0:
        return True, "trivial"
    N, _ = nilradical_tagged(L, "auto", budget, is_a=bool(is_a))
    mins = minimal_ideals(L, "chop", seed, budget)
    asoc = L.zero_space()
    for m in mins:
        asoc = asoc + m
    if is_a and len(mins) == 1:
        return mins[0] == N, "monolith_equals_nilradical"
    if is_a and is_strongly_solvable(L):
        return derived_algebra(L) <= asoc, "derived_in_socle"
    if asoc != N:
        return False, "nilradical_vs_socle"
    return splits_over(L, asoc), "socle_split"


def is_phi_free(L: LieAlgebra, method: str = "auto", is_a: bool | None = None, seed: int = 0,
                budget: EnumBudget = DEFAULT_BUDGET) -> bool:
    return is_phi_free_tagged(L, method, is_a, seed, budget)[0]


def is_phi_free_tagged(L: LieAlgebra, method: str = "auto", is_a: bool | None = None, seed: int = 0,
                       budget: EnumBudget = DEFAULT_BUDGET):
    if method == "oracle":
        return frattini(L, "oracle", budget).is_zero(), "oracle"
    if method not in ("structural", "auto"):
        raise ValueError(f"unknown phi-free method {method!r}")
    if method == "auto" and oracle_feasible(L):
        return frattini(L, "oracle", budget).is_zero(), "oracle"
    if is_a is None:
        from .aclass import Undecided, is_A
        try:
            is_a = is_A(L, "auto", budget=budget).verdict
        except (Undecided, BudgetExceeded):
            is_a = False
    return phi_free_structural(L, is_a, seed, budget)


# --- report ----------------------------------------------------------------

@dataclass
class Tagged:
    """A computed value with the method that produced it, or the reason it is absent."""

    value: object = None
    method: str = ""
    reason: str = ""

    @property
    def present(self) -> bool:
        return not self.reason

    def to_json(self, encode):
        if self.reason:
            return {"absent": self.reason}
        return {"value": encode(self.value), "method": self.method}


@dataclass
class StructureReport:
    nilradical: Tagged
    center: Subspace
    abelian_socle: Tagged
    minimal_ideals: Tagged
    monolith: Tagged
    frattini: Tagged
    solvable: bool
    strongly_solvable: bool
    derived_length: int | None
    derived_dims: list
    phi_free: Tagged
    notes: list = dc_field(default_factory=list)

    def to_json(self) -> dict:
        sub = lambda s: {"dim": s.dim, "basis": s.to_json()}
        subs = lambda xs: [sub(s) for s in xs]
        same = lambda v: v
        return {
            "solvable": self.solvable,
            "strongly_solvable": self.strongly_solvable,
            "derived_length": self.derived_length,
            "derived_dims": self.derived_dims,
            "nilradical": self.nilradical.to_json(sub),
            "center": sub(self.center),
            "abelian_socle": self.abelian_socle.to_json(sub),
            "minimal_ideals": self.minimal_ideals.to_json(subs),
            "monolith": self.monolith.to_json(sub),
            "frattini": self.frattini.to_json(sub),
            "phi_free": self.phi_free.to_json(same),
            "notes": list(self.notes),
        }


def _attempt(fn):
    try:
        return fn()
    except (StructureError, BudgetExceeded, ArithmeticError, ValueError) as exc:
        return Tagged(reason=f"{type(exc).__name__}: {exc}")


def structure_report(L: LieAlgebra, is_a: bool | None = None, seed: int = 0,
                     budget: EnumBudget = DEFAULT_BUDGET) -> StructureReport:
    """Every field by the best applicable method, absent fields carry a reason."""
    ds = derived_series(L)
    solv = ds.reaches_zero
    nil = _attempt(lambda: Tagged(*nilradical_tagged(L, "auto", budget)))
    mins = _attempt(lambda: Tagged(*minimal_ideals_tagged(L, "chop", seed, budget)))
    if mins.present:
        acc = L.zero_space()
        for m in mins.value:
            acc = acc + m
        asoc = Tagged(acc, mins.method)
        if len(mins.value) == 1:
            mono = Tagged(mins.value[0], mins.method)
        else:
            mono = Tagged(reason=f"NotMonolithic: {len(mins.value)} minimal ideals")
    else:
        asoc = Tagged(reason=mins.reason)
        mono = Tagged(reason=mins.reason)
    if oracle_feasible(L):
        phi = _attempt(lambda: Tagged(oracle_frattini(L, budget), "oracle"))
    else:
        phi = Tagged(reason="maximal-subalgebra enumeration out of budget")
    if phi.present:
        pf = Tagged(phi.value.is_zero(), "oracle")
    else:
        pf = _attempt(lambda: Tagged(*is_phi_free_tagged(L, "structural", is_a, seed, budget)))
    return StructureReport(
        nilradical=nil,
        center=center(L),
        abelian_socle=asoc,
        minimal_ideals=mins,
        monolith=mono,
        frattini=phi,
        solvable=solv,
        strongly_solvable=solv and is_strongly_solvable(L),
        derived_length=ds.length,
        derived_dims=ds.dims(),
        phi_free=pf,
    )
