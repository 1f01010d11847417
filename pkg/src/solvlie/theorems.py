"""Per-algebra checks of the structure results for solvable A-algebras.

Each check is guarded by its hypotheses; a check whose hypotheses fail is
reported ``not_applicable`` with the failing guard.  Checks of results stated
over an algebraically closed field run over the given finite field as a
proxy, and a disagreement there is reported ``proxy_mismatch`` instead of
``fail``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from . import aclass
from .decomp import (
    DecompError,
    FieldTooSmall,
    check_triangular,
    complement_subalgebra,
    stable_image,
    triangular_decomposition,
)
from .liealg import (
    LieAlgebra,
    bracket_spaces,
    center,
    centralizer,
    derived_series,
    direct_sum,
    induced_algebra,
    is_abelian_space,
    is_ideal,
    is_metabelian,
    is_solvable,
    is_strongly_solvable,
    is_subalgebra,
    lower_nilpotent_series,
    preimage,
    quotient_algebra,
)
from .linalg import Subspace
from .oracle import DEFAULT_BUDGET, BudgetExceeded, EnumBudget, inventory, oracle_frattini, oracle_is_A
from .structure import (
    MethodInapplicable,
    is_phi_free,
    minimal_ideals,
    nilradical_tagged,
    oracle_feasible,
)
from . import generators

PASS, FAIL, NA, PROXY, BUDGET = "pass", "fail", "not_applicable", "proxy_mismatch", "budget"

# checks whose statements assume an algebraically closed field
PROXY_IDS = frozenset({"L6.1", "T6.2", "T6.3", "C6.4", "T6.5", "T6.6"})

# sub-lattice checks that quotient by every ideal are limited to small inputs
SMALL_DIM = 4
MAX_IDEALS = 60


@dataclass(frozen=True)
class Verdict:
    status: str
    detail: str = ""
    witness: object = None

    def to_json(self) -> dict:
        out = {"status": self.status}
        if self.detail:
            out["detail"] = self.detail
        if self.witness is not None:
            out["witness"] = self.witness
        return out


class _Fail(Exception):
    def __init__(self, detail, witness=None):
        super().__init__(detail)
        self.detail, self.witness = detail, witness


class _Skip(Exception):
    pass


def _need(cond, reason):
    if not cond:
        raise _Skip(reason)


def _expect(cond, detail, witness=None):
    if not cond:
        raise _Fail(detail, witness)


class Context:
    """Lazily computed data shared by the checks on one algebra."""

    def __init__(self, L: LieAlgebra, seed: int = 0, budget: EnumBudget = DEFAULT_BUDGET):
        self.L, self.f, self.seed, self.budget = L, L.field, seed, budget

    def enc(self, v):
        return [self.f.encode(a) for a in v]

    def enc_space(self, s: Subspace):
        return [self.enc(v) for v in s.basis]

    @cached_property
    def solvable(self):
        return is_solvable(self.L)

    @cached_property
    def feasible(self):
        return oracle_feasible(self.L)

    @cached_property
    def inv(self):
        return inventory(self.L, self.budget) if self.feasible else None

    @cached_property
    def ds(self):
        return derived_series(self.L)

    def term(self, i):
        t = self.ds.terms
        return t[min(i, len(t) - 1)]

    @cached_property
    def L2(self):
        return self.term(1)

    @cached_property
    def isA(self):
        """Exact A-verdict, or None when undecided."""
        if self.f.is_finite:
            return oracle_is_A(self.L, self.budget).verdict
        try:
            return aclass.is_A(self.L, "structural", self.budget, self.seed).verdict
        except aclass.Undecided:
            return None

    def need_A(self):
        _need(self.solvable, "not solvable")
        _need(self.isA is not None, "A-property undecided")
        _need(self.isA, "not an A-algebra")

    @cached_property
    def N(self):
        if self.feasible:
            from .oracle import oracle_nilradical
            return oracle_nilradical(self.L, self.budget)
        try:
            return nilradical_tagged(self.L, "auto", self.budget, is_a=bool(self.isA))[0]
        except MethodInapplicable:
            raise _Skip("no exact nilradical for this algebra")

    @cached_property
    def mins(self):
        if self.feasible:
            return self.inv.minimal_ideals
        return minimal_ideals(self.L, "chop", self.seed, self.budget)

    @cached_property
    def monolithic(self):
        return len(self.mins) == 1

    @cached_property
    def strongly(self):
        return is_strongly_solvable(self.L)

    @cached_property
    def ideals(self):
        """Inventory ideals when enumerable, else the ideals at hand."""
        if self.feasible:
            return self.inv.ideals
        L = self.L
        known = list(self.ds.terms) + list(self.mins) + [center(L), L.full()]
        try:
            known.append(self.N)
        except _Skip:
            pass
        seen, out = set(), []
        for s in known:
            if s.basis not in seen:
                seen.add(s.basis)
                out.append(s)
        return out

    @cached_property
    def tri(self):
        return triangular_decomposition(self.L, self.seed, self.budget)

    @cached_property
    def phi_free(self):
        if self.feasible:
            return oracle_frattini(self.L, self.budget).is_zero()
        try:
            return is_phi_free(self.L, "structural", is_a=bool(self.isA), seed=self.seed, budget=self.budget)
        except MethodInapplicable as exc:
            raise _Skip(f"phi-freeness undecided: {exc}")

    @cached_property
    def asoc(self):
        acc = self.L.zero_space()
        for m in self.mins:
            if is_abelian_space(self.L, m):
                acc = acc + m
        return acc

    @cached_property
    def quotient_A(self):
        """A-verdict of L/I for each inventory ideal I (small algebras only)."""
        _need(self.feasible and self.L.dim <= SMALL_DIM, f"sub-lattice check limited to dim <= {SMALL_DIM}")
        _need(len(self.inv.ideals) <= MAX_IDEALS, f"more than {MAX_IDEALS} ideals")
        out = {}
        for I in self.inv.ideals:
            Q, _ = quotient_algebra(self.L, I)
            out[I.basis] = oracle_is_A(Q, self.budget).verdict
        return out


# --- general solvable checks -----------------------------------------------

def c_l21_i(c: Context):
    c.need_A()
    L, N = c.L, c.N
    _expect(is_abelian_space(L, N), "nilradical is not abelian", c.enc_space(N))
    if c.feasible:
        for I in c.inv.ideals:
            if is_abelian_space(L, I):
                _expect(I <= N, "abelian ideal outside the nilradical", c.enc_space(I))


def c_l21_ii(c: Context):
    c.need_A()
    L = c.L
    ab = [I for I in c.ideals if is_abelian_space(L, I)][:MAX_IDEALS]
    for a, b in itertools.combinations(ab, 2):
        _expect(bracket_spaces(L, a, b).is_zero(), "abelian ideals do not commute", [c.enc_space(a), c.enc_space(b)])


def c_l21_iii(c: Context):
    c.need_A()
    qa = c.quotient_A
    for key, v in qa.items():
        _expect(v, "quotient by an ideal is not an A-algebra", [c.enc(x) for x in key])


def c_l22_i(c: Context):
    _need(c.f.is_finite, "needs a finite field")
    qa = c.quotient_A
    ideals = c.inv.ideals
    for b, d in itertools.combinations(ideals, 2):
        if qa[b.basis] and qa[d.basis]:
            m = b & d
            _expect(qa[m.basis], "L/(B cap C) is not A although L/B and L/C are",
                    [c.enc_space(b), c.enc_space(d)])


def c_l22_ii(c: Context):
    c.need_A()
    _need(c.f.is_finite, "needs a finite field")
    _need(c.L.dim <= SMALL_DIM, f"direct-sum check limited to dim <= {SMALL_DIM}")
    S = generators.two_dim_nonabelian(c.f)
    _expect(oracle_is_A(direct_sum(c.L, S), c.budget).verdict, "L + S2 is not an A-algebra")
    if c.L.dim <= 2:
        _expect(oracle_is_A(direct_sum(c.L, c.L), c.budget).verdict, "L + L is not an A-algebra")


def c_l23(c: Context):
    c.need_A()
    lns = lower_nilpotent_series(c.L)
    a, b = list(lns.terms), list(c.ds.terms)
    _expect(a == b, "lower nilpotent series differs from the derived series",
            {"lower_nilpotent": [s.dim for s in a], "derived": [s.dim for s in b]})


def c_l25(c: Context):
    _need(c.solvable, "not solvable")
    N = c.N
    z = centralizer(c.L, N)
    _expect(z <= N, "centraliser of the nilradical leaves it", c.enc_space(z))


# --- A-algebra structure ----------------------------------------------------

def c_t31(c: Context):
    c.need_A()
    L = c.L
    for i, t in enumerate(c.ds.terms):
        if c.feasible:
            ok = any((s & t).is_zero() and s.dim + t.dim == L.dim for s in c.inv.subalgebras)
        elif is_abelian_space(L, t):
            ok = complement_subalgebra(L, t) is not None
        else:
            rest = L.zero_space()
            for a in c.tri.A[:i]:
                rest = rest + a
            ok = is_subalgebra(L, rest) and (rest & t).is_zero() and rest.dim + t.dim == L.dim
        _expect(ok, f"no complement subalgebra to L^({i})", c.enc_space(t))


def c_t31_cartan(c: Context):
    c.need_A()
    _need(c.f.is_finite, "needs a finite field")
    L = c.L
    for i in range(len(c.ds.terms) - 1):
        top, low = c.term(i), c.term(i + 2)
        K, u = induced_algebra(L, top)
        Q, _ = quotient_algebra(K, Subspace.span(c.f, K.dim, [top.coords(v) for v in low.basis]))
        _need(oracle_feasible(Q), f"L^({i})/L^({i + 2}) too large to enumerate")
        inv = inventory(Q, c.budget)
        D = derived_series(Q).terms[1] if Q.dim else Q.zero_space()
        comps = {s.basis for s in inv.subalgebras if (s & D).is_zero() and s.dim + D.dim == Q.dim}
        carts = {s.basis for s in inv.cartan_subalgebras}
        _expect(comps == carts, f"Cartan subalgebras of L^({i})/L^({i + 2}) differ from complements",
                {"cartan_only": len(carts - comps), "complement_only": len(comps - carts)})


def c_c32(c: Context):
    c.need_A()
    t = c.tri
    reason = check_triangular(c.L, t.A)
    _expect(reason is None and t.verified, f"triangular decomposition rejected: {reason or 'unverified'}",
            [c.enc_space(a) for a in reversed(t.A)])


def c_t33(c: Context):
    c.need_A()
    m = center(c.L) & c.L2
    _expect(m.is_zero(), "centre meets L^2", c.enc_space(m))


def _lower_part(c: Context):
    """(L^(n), the sum of the remaining pieces) from the triangular decomposition."""
    A = c.tri.A
    rest = c.L.zero_space()
    for a in A[:-1]:
        rest = rest + a
    return A[-1], rest


def c_l34(c: Context):
    c.need_A()
    L = c.L
    B, C = _lower_part(c)
    _expect(is_subalgebra(L, C), "lower part is not a subalgebra", c.enc_space(C))
    for D in c.ideals:
        _expect((B & D) + (C & D) == D, "ideal does not split over the top piece", c.enc_space(D))


def _splits(c: Context, space, pieces):
    acc, total = c.L.zero_space(), 0
    for p in pieces:
        m = space & p
        acc, total = acc + m, total + m.dim
    return acc == space and total == space.dim


def c_t35_i(c: Context):
    c.need_A()
    A = c.tri.A
    for K in c.ideals:
        _expect(_splits(c, K, A), "ideal is not the sum of its intersections with the pieces", c.enc_space(K))


def c_t35_ii(c: Context):
    c.need_A()
    A, N = c.tri.A, c.N
    _expect(A[-1] <= N and _splits(c, N, A), "nilradical does not split over the pieces", c.enc_space(N))


def c_t35_iii(c: Context):
    c.need_A()
    A, N = c.tri.A, c.N
    for i, a in enumerate(A):
        z = center(c.L, c.term(i))
        _expect(z == (N & a), f"Z(L^({i})) differs from N cap A_{i}", c.enc_space(z))


def c_t35_iv(c: Context):
    c.need_A()
    A, N = c.tri.A, c.N
    for m in c.mins:
        _expect(any(m <= (N & a) for a in A), "minimal ideal inside no N cap A_i", c.enc_space(m))


def c_p36(c: Context):
    c.need_A()
    L = c.L
    ideals = c.ideals[:MAX_IDEALS]
    zs = {b.basis: center(L, b) for b in ideals}
    for b, d in itertools.product(ideals, repeat=2):
        lhs = bracket_spaces(L, b, d).is_zero()
        m = b & d
        rhs = m <= (zs[b.basis] & zs[d.basis])
        _expect(lhs == rhs, "centralising criterion disagrees", [c.enc_space(b), c.enc_space(d)])


# --- phi-free and nilradical checks -----------------------------------------

def _need_ss_A(c: Context):
    c.need_A()
    _need(c.strongly, "not strongly solvable")


def c_t41(c: Context):
    _need_ss_A(c)
    L, L2 = c.L, c.L2
    _expect(is_abelian_space(L, L2), "L^2 is not abelian", c.enc_space(L2))
    B = complement_subalgebra(L, L2)
    _expect(B is not None and is_abelian_space(L, B), "no abelian complement to L^2")
    Z = center(L)
    _expect((L2 & Z).is_zero() and L2 + Z == c.N, "N is not L^2 + Z(L)", c.enc_space(c.N))


def c_t42(part):
    def check(c: Context):
        _need_ss_A(c)
        L, L2 = c.L, c.L2
        B = complement_subalgebra(L, L2)
        Z = center(L)
        for A in c.mins:
            if part == "i":
                _expect(A <= L2 or A <= B, "minimal ideal in neither L^2 nor B", c.enc_space(A))
            elif part == "ii":
                _expect((A <= B) == (A <= Z), "A in B disagrees with A central", c.enc_space(A))
                if A <= B:
                    _expect(A.dim == 1, "central minimal ideal of dimension > 1", c.enc_space(A))
            else:
                _expect((A <= L2) == (bracket_spaces(L, A, L.full()) == A), "A in L^2 disagrees with [A,L] = A",
                        c.enc_space(A))
    return check


def c_c43(c: Context):
    _need_ss_A(c)
    _need(c.feasible, "Frattini ideal needs the subalgebra lattice")
    _expect(c.phi_free == (c.L2 <= c.asoc), "phi-freeness disagrees with L^2 in Asoc",
            {"phi_free": c.phi_free, "L2_in_asoc": c.L2 <= c.asoc})


def c_l44(c: Context):
    _need(is_metabelian(c.L), "not metabelian")
    _need(c.feasible, "needs maximal nilpotent subalgebras")
    L, L2 = c.L, c.L2
    for U in c.inv.maximal_nilpotent_subalgebras:
        I = U & L2
        K = stable_image(L, U)
        w = c.enc_space(U)
        _expect(is_ideal(L, I) and is_abelian_space(L, I), "U cap L^2 is not an abelian ideal", w)
        _expect(is_ideal(L, K), "stable image is not an ideal", w)
        _expect((I & K).is_zero() and I + K == L2, "L^2 is not (U cap L^2) + K", w)
        _expect(bracket_spaces(L, U, K) == K, "[U,K] differs from K", w)


def c_t45(c: Context):
    _need_ss_A(c)
    _need(c.feasible, "needs maximal nilpotent subalgebras")
    L2 = c.L2
    carts = c.inv.cartan_subalgebras
    for U in c.inv.maximal_nilpotent_subalgebras:
        a = U & L2
        ok = any((a + (U & C)) == U and (a & C).is_zero() for C in carts)
        _expect(ok, "no Cartan subalgebra C with U = (U cap L^2) + (U cap C)", c.enc_space(U))


# --- metabelian and monolithic checks ---------------------------------------

def _need_mono_A(c: Context):
    c.need_A()
    _need(c.monolithic, f"{len(c.mins)} minimal ideals")


def c_t51(part):
    def check(c: Context):
        _need_mono_A(c)
        L, W, N = c.L, c.mins[0], c.N
        if part == "i":
            _expect(is_abelian_space(L, W), "monolith is not abelian", c.enc_space(W))
        elif part == "ii":
            _expect(center(L).is_zero(), "centre is nonzero", c.enc_space(center(L)))
            _expect(bracket_spaces(L, L.full(), W) == W, "[L,W] differs from W", c.enc_space(W))
        elif part == "iii":
            top = c.ds.terms[-2] if len(c.ds.terms) > 1 else L.zero_space()
            _expect(N == top, "N differs from the last nonzero derived term", c.enc_space(N))
        elif part == "iv":
            _expect(N == centralizer(L, W), "N differs from Z_L(W)", c.enc_space(N))
        else:
            _need(c.feasible or not c.f.is_finite, "Frattini ideal needs the subalgebra lattice")
            _expect(c.phi_free == (W == N), "phi-freeness disagrees with W = N",
                    {"phi_free": c.phi_free, "W_equals_N": W == N})
    return check


def c_t52(c: Context):
    _need_mono_A(c)
    _need(c.strongly, "not strongly solvable")
    _need(c.feasible, "needs maximal nilpotent subalgebras")
    L, L2 = c.L, c.L2
    _need(not L2.is_zero(), "abelian")
    got = {U.basis for U in c.inv.maximal_nilpotent_subalgebras}
    want = {L2.basis} | {s.basis for s in c.inv.subalgebras if (s & L2).is_zero() and s.dim + L2.dim == L.dim}
    _expect(got == want, "maximal nilpotent subalgebras are not L^2 and the complements",
            {"unexpected": len(got - want), "missing": len(want - got)})


def c_l53(c: Context):
    _need(c.solvable, "not solvable")
    _need(is_metabelian(c.L), "not metabelian")
    try:
        ok = aclass.lemma_5_3_check(c.L, seed=c.seed)
    except aclass.SamplingInconclusive:
        raise _Skip("invertibility only sampled")
    _need(ok, "some nonzero b is singular on L^2")
    _need(c.isA is not None, "A-property undecided")
    _expect(c.isA and c.strongly, "invertible action but not a strongly solvable A-algebra")


def c_t54(c: Context):
    _need(c.solvable, "not solvable")
    _need(c.monolithic, f"{len(c.mins)} minimal ideals")
    _need(c.f.is_finite, "needs the exhaustive A-oracle")
    lhs, rhs = aclass.theorem_5_4_check(c.L, c.budget)
    _expect(lhs == rhs, "monolithic characterisation disagrees", {"lhs": lhs, "rhs": rhs})


# --- closed-field statements, checked over the given field -----------------------

def c_l61(c: Context):
    c.need_A()
    _need(c.f.is_finite and c.f.characteristic > 0, "needs positive characteristic")
    L = c.L
    for i in range(1, len(c.ds.terms) - 1):
        K = c.term(i)
        Q, _ = quotient_algebra(L, K)
        nq, how = nilradical_tagged(Q, "auto", c.budget)
        N = preimage(L, K, nq)
        zk = center(L, K)
        for A in c.mins:
            if A <= zk:
                codim = N.dim - centralizer(L, A, N).dim
                _expect(codim <= 1, f"dim N/Z_N(A) = {codim} with K = L^({i})", c.enc_space(A))


def c_t62(c: Context):
    c.need_A()
    _expect(len(c.ds.terms) - 1 <= 3, f"derived length {len(c.ds.terms) - 1}")


def c_t63(c: Context):
    _need_mono_A(c)
    _need(c.L.dim > 1, "dimension one")
    _need(c.f.is_finite, "parameter extraction searches a finite field")
    try:
        r = aclass.theorem_6_3_classify(c.L, c.budget)
    except FieldTooSmall as exc:
        raise _Skip(f"field too small: {exc}")
    p = c.f.characteristic
    if r.case == "i":
        _expect(r.dim_W == 1 and r.lam != c.f.zero, "case (i) with dim W != 1", r.to_json(c.f))
    else:
        _expect(r.dim_W == p and r.mu != c.f.zero, "case (ii) with dim W != p", r.to_json(c.f))
        br = c.L.bracket(r.n, r.b)
        _expect(br == r.n, "[n,b] differs from n", r.to_json(c.f))


def c_c64(c: Context):
    _need_mono_A(c)
    _need(c.L.dim > 1, "dimension one")
    _need(c.phi_free, "not phi-free")
    dims = [s.dim for s in c.ds.terms]
    p = c.f.characteristic
    two_dim = dims == [2, 1, 0]
    jac = p > 0 and dims == [p + 2, p + 1, p, 0]
    _expect(two_dim or jac, "phi-free monolithic A-algebra of neither shape", {"derived_dims": dims})


def c_t65(c: Context):
    _need_ss_A(c)
    _need(c.f.is_finite, "eigenvector search needs a finite field")
    _need(c.phi_free, "not phi-free")
    ok, _ = aclass.theorem_6_5_form_check(c.L)
    _expect(ok, "no diagonal basis found for a phi-free strongly solvable A-algebra")


def c_t66(c: Context):
    _need(c.solvable, "not solvable")
    _need(not c.strongly, "strongly solvable")
    _need(c.f.is_finite, "conditions are searched over a finite field")
    _need(c.isA is not None, "A-property undecided")
    _need(c.phi_free, "not phi-free")
    r = aclass.theorem_6_6_check(c.L, c.budget)
    _expect(r.conclusion == c.isA, "conditions disagree with the A-verdict",
            {"conditions": list(r.conditions), "is_A": c.isA, "reasons": list(r.reasons)})


def c_q_set(c: Context):
    c.need_A()
    _need(c.f.characteristic not in (2, 3), "characteristic 2 or 3")
    q = aclass.q_set(c.L, c.budget)
    if c.f.is_finite:
        _expect(q.is_subspace and q.span == c.N, "Q(L) differs from the nilradical", c.enc_space(q.span))
    else:
        _expect(q.is_subspace, "N is not inside Q(L)")


CHECKS = [
    ("L2.1(i)", c_l21_i), ("L2.1(ii)", c_l21_ii), ("L2.1(iii)", c_l21_iii),
    ("L2.2(i)", c_l22_i), ("L2.2(ii)", c_l22_ii), ("L2.3", c_l23), ("L2.5", c_l25),
    ("T3.1", c_t31), ("T3.1-cartan", c_t31_cartan), ("C3.2", c_c32), ("T3.3", c_t33), ("L3.4", c_l34),
    ("T3.5(i)", c_t35_i), ("T3.5(ii)", c_t35_ii), ("T3.5(iii)", c_t35_iii), ("T3.5(iv)", c_t35_iv),
    ("P3.6", c_p36),
    ("T4.1", c_t41), ("T4.2(i)", c_t42("i")), ("T4.2(ii)", c_t42("ii")), ("T4.2(iii)", c_t42("iii")),
    ("C4.3", c_c43), ("L4.4", c_l44), ("T4.5", c_t45),
    ("T5.1(i)", c_t51("i")), ("T5.1(ii)", c_t51("ii")), ("T5.1(iii)", c_t51("iii")),
    ("T5.1(iv)", c_t51("iv")), ("T5.1(v)", c_t51("v")), ("T5.2", c_t52), ("L5.3", c_l53), ("T5.4", c_t54),
    ("L6.1", c_l61), ("T6.2", c_t62), ("T6.3", c_t63), ("C6.4", c_c64), ("T6.5", c_t65), ("T6.6", c_t66),
    ("T1.1(ii)", c_q_set),
]

THEOREM_IDS = tuple(k for k, _ in CHECKS)


def verify_theorems(L: LieAlgebra, seed: int = 0, budget: EnumBudget = DEFAULT_BUDGET,
                    only=None) -> dict[str, Verdict]:
    """Run every check on L; the result maps check id to a Verdict, in a fixed order."""
    ctx = Context(L, seed, budget)
    out = {}
    for key, fn in CHECKS:
        if only is not None and key not in only:
            continue
        try:
            fn(ctx)
            out[key] = Verdict(PASS)
        except _Skip as exc:
            out[key] = Verdict(NA, str(exc))
        except _Fail as exc:
            out[key] = Verdict(PROXY if key in PROXY_IDS else FAIL, exc.detail, exc.witness)
        except BudgetExceeded as exc:
            out[key] = Verdict(BUDGET, str(exc))
        except (MethodInapplicable, aclass.MethodInapplicable) as exc:
            out[key] = Verdict(NA, str(exc))
        except DecompError as exc:
            # a solvable A-algebra always decomposes, so a failure to split is a finding
            if ctx.isA and key in ("C3.2", "L3.4", "T3.5(i)", "T3.5(ii)", "T3.5(iii)", "T3.5(iv)"):
                out[key] = Verdict(FAIL, f"{type(exc).__name__}: {exc}")
            else:
                out[key] = Verdict(NA, f"{type(exc).__name__}: {exc}")
    return out


def has_failure(verdicts: dict[str, Verdict]) -> bool:
    return any(v.status == FAIL for v in verdicts.values())
