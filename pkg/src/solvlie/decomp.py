"""Fitting decompositions, Cartan subalgebras and splittings over derived terms.

Every construction re-verifies its own postconditions; a failed check raises
instead of returning something plausible, since the inputs are often exactly
the algebras being probed.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field as dc_field

from .exactfield import Field
from .linalg import NoSolution, Subspace, image, kernel, lin_comb, mat_mul, solve
from .liealg import (
    LieAlgebra,
    ad_matrix,
    bracket_spaces,
    derived_series,
    induced_algebra,
    is_abelian_space,
    is_ideal,
    is_nilpotent,
    is_solvable,
    is_subalgebra,
    normalizer,
)


class DecompError(ArithmeticError):
    pass


class NotNilpotentAction(DecompError):
    pass


class FieldTooSmall(DecompError):
    pass


class NotSolvable(DecompError):
    pass


class SplitFailed(DecompError):
    pass


class DecompositionMismatch(DecompError):
    pass


MUTATION_ENV = "SOLVLIE_MUTATE"


def _mutation() -> str:
    return os.environ.get(MUTATION_ENV, "")


@dataclass(frozen=True)
class FittingPair:
    L0: Subspace
    L1: Subspace
    relative_to: str = ""

    def to_json(self) -> dict:
        return {"L0": self.L0.to_json(), "L1": self.L1.to_json(), "relative_to": self.relative_to}


def _mat_pow(f: Field, m, e: int, n: int):
    out = [[f.one if i == j else f.zero for j in range(n)] for i in range(n)]
    base = m
    while e:
        if e & 1:
            out = mat_mul(f, out, base, n)
        e >>= 1
        if e:
            base = mat_mul(f, base, base, n)
    return out


def fitting_single(L: LieAlgebra, x) -> FittingPair:
    """Stable kernel and stable image of ad x."""
    f, n = L.field, L.dim
    if n == 0:
        return FittingPair(L.zero_space(), L.zero_space(), "ad x")
    p = _mat_pow(f, ad_matrix(L, x), n, n)
    return FittingPair(kernel(f, p, n), image(f, p, n), "ad x")


def null_component(L: LieAlgebra, c: Subspace, within: Subspace | None = None) -> Subspace:
    """Joint stable kernel of ad c on ``within``: the union of V_k = {s : [s, c] <= V_(k-1)}."""
    f, n = L.field, L.dim
    dom = within if within is not None else L.full()
    if c.is_zero():
        return dom
    cur = L.zero_space()
    while True:
        m = [[] for _ in range(dom.dim)]
        for r, s in enumerate(dom.basis):
            for y in c.basis:
                m[r].extend(cur.reduce(L.bracket(s, y)))
        ker = kernel(f, m, dom.dim)
        nxt = L.span(lin_comb(f, co, dom.basis, n) for co in ker.basis)
        if nxt.dim == cur.dim:
            return cur
        cur = nxt


def stable_image(L: LieAlgebra, c: Subspace, within: Subspace | None = None) -> Subspace:
    """Stabilised iterate S -> [S, c] starting from ``within``."""
    cur = within if within is not None else L.full()
    while True:
        nxt = bracket_spaces(L, cur, c)
        if nxt == cur:
            return cur
        cur = nxt


def fitting_subalgebra(L: LieAlgebra, c: Subspace, within: Subspace | None = None) -> FittingPair:
    """Fitting decomposition of ``within`` (default L) relative to ad c, c nilpotent."""
    dom = within if within is not None else L.full()
    if not is_nilpotent(L, c):
        raise NotNilpotentAction("acting subalgebra is not nilpotent")
    L0 = null_component(L, c, dom)
    L1 = stable_image(L, c, dom)
    if L0.dim + L1.dim != dom.dim or not (L0 & L1).is_zero():
        raise NotNilpotentAction(f"L0 (dim {L0.dim}) and L1 (dim {L1.dim}) do not split dim {dom.dim}")
    return FittingPair(L0, L1, "ad C")


# --- Cartan subalgebras ----------------------------------------------------

SCAN_LIMIT = 20000


def is_cartan(L: LieAlgebra, u: Subspace) -> bool:
    return is_subalgebra(L, u) and is_nilpotent(L, u) and normalizer(L, u) == u


def _random_vector(rng: random.Random, f: Field, n: int):
    if f.is_finite:
        elems = f.elements()
        return tuple(rng.choice(elems) for _ in range(n))
    return tuple(f.from_int(rng.randint(-9, 9)) for _ in range(n))


def _scan_vectors(f: Field, n: int):
    import itertools
    elems = f.elements()
    for v in itertools.product(elems, repeat=n):
        if any(v):
            yield v


def _cartan_of(K: LieAlgebra, rng: random.Random, retries: int, budget, depth: int = 0) -> Subspace:
    f, n = K.field, K.dim
    full = K.full()
    if is_nilpotent(K):
        return full
    tried = 0
    # unit vectors first: structure constants are usually written in an adapted basis
    candidates = [K.basis_vector(i) for i in reversed(range(n))]
    candidates += [_random_vector(rng, f, n) for _ in range(retries)]

    def attempt(x):
        L0 = fitting_single(K, x).L0
        if L0.dim == n:
            return None
        if is_nilpotent(K, L0):
            return L0 if is_cartan(K, L0) else None
        if depth < n:
            # descend: a Cartan subalgebra of L0(ad x) is a candidate for K
            sub, u = induced_algebra(K, L0)
            try:
                h = _cartan_of(sub, rng, retries, budget, depth + 1)
            except FieldTooSmall:
                return None
            H = K.span(u.from_coords(co) for co in h.basis)
            if is_cartan(K, H):
                return H
        return None

    for x in candidates:
        tried += 1
        got = attempt(x)
        if got is not None:
            return got
    if f.is_finite and f.order ** n <= SCAN_LIMIT:
        for x in _scan_vectors(f, n):
            L0 = fitting_single(K, x).L0
            if L0.dim < n and is_nilpotent(K, L0) and is_cartan(K, L0):
                return L0
    if f.is_finite:
        from .oracle import BudgetExceeded, inventory
        try:
            carts = inventory(K, budget).cartan_subalgebras
        except BudgetExceeded as exc:
            raise FieldTooSmall(f"no Cartan subalgebra found by descent and enumeration failed: {exc}") from exc
        if carts:
            return min(carts, key=lambda s: (s.dim, s.basis))
    raise FieldTooSmall(f"no Cartan subalgebra found after {tried} random elements")


def cartan_subalgebra(L: LieAlgebra, within: Subspace | None = None, seed: int = 0, retries: int = 32,
                      budget=None) -> Subspace:
    """A nilpotent self-normalising subalgebra of ``within`` (default L)."""
    from .oracle import DEFAULT_BUDGET
    budget = budget or DEFAULT_BUDGET
    if within is None or within.is_full():
        if not is_solvable(L):
            raise NotSolvable("Cartan search needs a solvable algebra")
        return _cartan_of(L, random.Random(seed), retries, budget)
    K, u = induced_algebra(L, within)
    if not is_solvable(K):
        raise NotSolvable("Cartan search needs a solvable algebra")
    h = _cartan_of(K, random.Random(seed), retries, budget)
    return L.span(u.from_coords(co) for co in h.basis)


# --- splitting -----------------------------------------------------------

def _terminal_index(series) -> int:
    """n with L^(n) != 0 = L^(n+1); -1 for the zero algebra."""
    if not series.reaches_zero:
        raise NotSolvable("derived series does not reach zero")
    return len(series.terms) - 2


def split_over_terminal_derived(L: LieAlgebra, seed: int = 0, budget=None) -> tuple[Subspace, Subspace]:
    """(A, B) with A = L^(n) the last nonzero derived term and L = A + B, B a subalgebra.

    B is the null component of a Cartan subalgebra of L^(n-1) acting on L.
    """
    ds = derived_series(L)
    n = _terminal_index(ds)
    if n <= 0:
        return L.full(), L.zero_space()
    A = ds[n]
    C = cartan_subalgebra(L, ds[n - 1], seed=seed, budget=budget)
    try:
        B = fitting_subalgebra(L, C).L0
    except NotNilpotentAction as exc:
        raise SplitFailed(str(exc)) from exc
    if not is_subalgebra(L, B):
        raise SplitFailed("null component is not a subalgebra")
    if A.dim + B.dim != L.dim or not (A & B).is_zero():
        raise SplitFailed(f"L^({n}) (dim {A.dim}) and the null component (dim {B.dim}) do not split L")
    return A, B


@dataclass(frozen=True)
class TriangularDecomposition:
    """A[i] is the abelian piece with L^(i) = A[n] + ... + A[i]."""

    A: tuple
    complements: tuple = dc_field(default=())
    verified: bool = True

    @property
    def n(self) -> int:
        return len(self.A) - 1

    @property
    def derived_length(self) -> int:
        return len(self.A)

    def to_json(self) -> dict:
        return {
            "A": [a.to_json() for a in reversed(self.A)],
            "dims": [a.dim for a in reversed(self.A)],
            "derived_length": self.derived_length,
            "verified": self.verified,
        }


def _lift(L: LieAlgebra, u: Subspace, s: Subspace) -> Subspace:
    return L.span(u.from_coords(co) for co in s.basis)


def _triangular_pieces(L: LieAlgebra, seed: int, budget):
    """Pieces A_0..A_n (index = derived depth) and the complements used."""
    if L.dim == 0:
        return [], []
    A, B = split_over_terminal_derived(L, seed, budget)
    if B.is_zero():
        return [A], []
    K, u = induced_algebra(L, B)
    pieces, comps = _triangular_pieces(K, seed, budget)
    pieces = [_lift(L, u, p) for p in pieces]
    comps = [_lift(L, u, c) for c in comps]
    return pieces + [A], comps + [B]


def check_triangular(L: LieAlgebra, pieces) -> str | None:
    """None when every piece is abelian and L^(i) = A_n + ... + A_i; else a reason."""
    ds = derived_series(L)
    n = len(pieces) - 1
    if not ds.reaches_zero:
        return "not solvable"
    if len(ds.terms) - 1 != len(pieces):
        return f"{len(pieces)} pieces for derived length {len(ds.terms) - 1}"
    for i, a in enumerate(pieces):
        if not is_abelian_space(L, a):
            return f"A_{i} is not abelian"
    acc = L.zero_space()
    total = 0
    for i in range(n, -1, -1):
        acc = acc + pieces[i]
        total += pieces[i].dim
        if acc.dim != total:
            return f"sum A_{n}..A_{i} is not direct"
        if acc != ds[i]:
            return f"A_{n}+...+A_{i} differs from L^({i})"
    return None


def triangular_decomposition(L: LieAlgebra, seed: int = 0, budget=None) -> TriangularDecomposition:
    """L = A_n + ... + A_0 with A_i abelian and L^(i) = A_n + ... + A_i."""
    if not is_solvable(L):
        raise NotSolvable("triangular decomposition needs a solvable algebra")
    pieces, comps = _triangular_pieces(L, seed, budget)
    if _mutation() == "cor32" and len(pieces) > 1:
        # deliberately corrupted build used to exercise the verification harness
        a_top, a_bot = pieces[-1], pieces[0]
        shifted = tuple(L.field.add(x, y) for x, y in zip(a_top.basis[0], a_bot.basis[0]))
        pieces[-1] = L.span((shifted,) + a_top.basis[1:])
        return TriangularDecomposition(tuple(pieces), tuple(comps), verified=False)
    why = check_triangular(L, pieces)
    if why is not None:
        raise SplitFailed(why)
    return TriangularDecomposition(tuple(pieces), tuple(comps))


def ideal_decomposition(L: LieAlgebra, k: Subspace, t: TriangularDecomposition) -> list[Subspace]:
    """[K & A_n, ..., K & A_0], checked to sum directly to K."""
    if not is_ideal(L, k):
        raise DecompositionMismatch("not an ideal")
    parts = [k & a for a in reversed(t.A)]
    total = L.zero_space()
    for p in parts:
        total = total + p
    if total != k or sum(p.dim for p in parts) != k.dim:
        raise DecompositionMismatch("ideal is not the sum of its intersections with the pieces")
    return parts


# --- complements of abelian ideals ---------------------------------------------

def complement_subalgebra(L: LieAlgebra, A: Subspace, within: Subspace | None = None,
                          contain: Subspace | None = None) -> Subspace | None:
    """A subalgebra U of ``within`` with within = A + U (direct), or None.

    A must be an abelian ideal of ``within``.  Writing U = {c + delta(c)} over a
    fixed complement C of A, closure of U is linear in delta.  ``contain``
    (meeting A trivially) adds the linear constraint that it lie inside U.
    """
    f, n = L.field, L.dim
    dom = within if within is not None else L.full()
    if not A <= dom or not is_ideal(L, A, dom) or not is_abelian_space(L, A):
        raise ValueError("complement_subalgebra needs an abelian ideal")
    if A.is_zero():
        return dom
    if A.dim == dom.dim:
        return L.zero_space()
    # C: dom-basis vectors reduced modulo A, taken greedily
    cs = []
    acc = A
    for v in dom.basis:
        if not acc.contains(v):
            cs.append(v)
            acc = acc + L.span([v])
    m, d = len(cs), A.dim
    AC = L.span(list(A.basis) + cs)

    def split_coords(v):
        """(coords in C, coords in A) of v in A + C."""
        # solve v = sum g_k c_k + sum a_k A_k
        rows = list(cs) + list(A.basis)
        x = solve(f, rows, v)
        return x[:m], x[m:]

    nunk = m * d  # t[i][k] at i*d + k
    cols = []
    rhs = []
    for i in range(m):
        for j in range(i + 1, m):
            g, alpha = split_coords(L.bracket(cs[i], cs[j]))
            # per A-coordinate r: sum_k t_ik [A_k, c_j]_r + sum_k t_jk [c_i, A_k]_r - sum_l g_l t_lr = -alpha_r
            eqs = [[f.zero] * nunk for _ in range(d)]
            for k in range(d):
                _, w = split_coords(L.bracket(A.basis[k], cs[j]))
                for r in range(d):
                    if w[r] != f.zero:
                        eqs[r][i * d + k] = f.add(eqs[r][i * d + k], w[r])
                _, w = split_coords(L.bracket(cs[i], A.basis[k]))
                for r in range(d):
                    if w[r] != f.zero:
                        eqs[r][j * d + k] = f.add(eqs[r][j * d + k], w[r])
            for l in range(m):
                if g[l] != f.zero:
                    for r in range(d):
                        eqs[r][l * d + r] = f.sub(eqs[r][l * d + r], g[l])
            for r in range(d):
                cols.append(eqs[r])
                rhs.append(f.neg(alpha[r]))
    if contain is not None:
        for v in contain.basis:
            g, a = split_coords(v)
            # a = sum_i g_i delta_i
            for r in range(d):
                eq = [f.zero] * nunk
                for i in range(m):
                    if g[i] != f.zero:
                        eq[i * d + r] = g[i]
                cols.append(eq)
                rhs.append(a[r])
    if cols:
        mat = [[cols[c][u] for c in range(len(cols))] for u in range(nunk)]
        try:
            t = solve(f, mat, rhs)
        except NoSolution:
            return None
    else:
        t = (f.zero,) * nunk
    ubasis = []
    for i in range(m):
        delta = lin_comb(f, t[i * d:(i + 1) * d], A.basis, n)
        ubasis.append(tuple(f.add(a, b) for a, b in zip(cs[i], delta)))
    U = L.span(ubasis)
    assert AC == dom
    if not is_subalgebra(L, U) or U.dim != m or not (U & A).is_zero():
        raise SplitFailed("complement solver produced an invalid subalgebra")
    return U
