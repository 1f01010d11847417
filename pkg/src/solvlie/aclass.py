"""Deciding the A-property and checking the characterisations of A-algebras."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field

from .decomp import FieldTooSmall, complement_subalgebra, fitting_single
from .exactfield import Field, pth_root_raw
from .linalg import NoSolution, Subspace, image, kernel, lin_comb, mat_mul, rref, solve, vec_add
from .liealg import (
    LieAlgebra,
    ad_matrix,
    bracket_spaces,
    center,
    centralizer,
    derived_series,
    generated_subalgebra,
    ideal_closure,
    induced_algebra,
    is_abelian_space,
    is_metabelian,
    is_nilpotent,
    is_solvable,
    is_strongly_solvable,
    quotient_algebra,
)
from .oracle import (
    DEFAULT_BUDGET,
    ACertificate,
    BudgetExceeded,
    EnumBudget,
    oracle_is_A,
    projective_points,
    replay_witness,
)

__all__ = [
    "ACertificate", "Undecided", "CharacteristicExcluded", "NotMetabelian", "SamplingInconclusive",
    "NotAAlgebra", "is_A", "q_set", "lemma_5_3_check", "theorem_5_4_check", "theorem_6_3_classify",
    "theorem_6_5_form_check", "theorem_6_6_check", "Theorem66Params", "witness_search",
]


class AClassError(ArithmeticError):
    pass


class Undecided(AClassError):
    pass


class CharacteristicExcluded(AClassError):
    pass


class NotMetabelian(AClassError):
    pass


class SamplingInconclusive(AClassError):
    pass


class NotAAlgebra(AClassError):
    pass


class MethodInapplicable(AClassError):
    pass


# --- matrix helpers restricted to a subspace --------------------------------

def restricted_action(L: LieAlgebra, space: Subspace, b) -> list:
    """Matrix of v -> [v, b] on ``space`` in its RREF basis (space must be ad b-stable)."""
    return [list(space.coords(L.bracket(v, b))) for v in space.basis]


def _sub_scalar(f: Field, m, lam) -> list:
    return [[f.sub(a, lam) if i == j else a for j, a in enumerate(row)] for i, row in enumerate(m)]


def _is_nilpotent_matrix(f: Field, m) -> bool:
    k = len(m)
    if k == 0:
        return True
    p = m
    for _ in range(k):
        if not any(any(r) for r in p):
            return True
        p = mat_mul(f, p, m, k)
    return not any(any(r) for r in p)


def _is_invertible(f: Field, m) -> bool:
    return rref(f, m, len(m))[1] == len(m)


# --- witness search (infinite fields or over-budget finite ones) -------------------

def _heisenberg_partner(L: LieAlgebra, x, ys):
    """For a fixed x, try the y0 in ``ys`` and solve the linear condition for y."""
    f, n = L.field, L.dim
    k1 = kernel(f, ad_matrix(L, x), n)
    for y0 in ys:
        z = L.bracket(y0, x)
        if not any(z) or any(L.bracket(z, x)):
            continue
        rows = [L.bracket(z, b) for b in k1.basis]
        rhs = tuple(f.neg(a) for a in L.bracket(z, y0))
        try:
            c = solve(f, rows, rhs) if rows else None
        except NoSolution:
            continue
        if c is None:
            if any(rhs):
                continue
            y = y0
        else:
            y = vec_add(f, y0, lin_comb(f, c, k1.basis, n))
        return y
    return None


def witness_search(L: LieAlgebra, seed: int = 0, tries: int = 64):
    """Seeded search for (x, y) spanning a Heisenberg subalgebra; None if nothing turned up."""
    f, n = L.field, L.dim
    rng = random.Random(seed)
    xs = [L.basis_vector(i) for i in range(n)]
    xs += [vec_add(f, L.basis_vector(i), L.basis_vector(j)) for i in range(n) for j in range(i + 1, n)]
    for _ in range(tries):
        if f.is_finite:
            xs.append(tuple(rng.choice(f.elements()) for _ in range(n)))
        else:
            xs.append(tuple(f.from_int(rng.randint(-6, 6)) for _ in range(n)))
    for x in xs:
        if not any(x):
            continue
        a = ad_matrix(L, x)
        k2 = kernel(f, mat_mul(f, a, a, n), n)
        k1 = kernel(f, a, n)
        ys = [v for v in k2.basis if not k1.contains(v)]
        if f.is_finite:
            ys += [k2.from_coords([rng.choice(f.elements()) for _ in range(k2.dim)]) for _ in range(4)]
        else:
            ys += [k2.from_coords([f.from_int(rng.randint(-4, 4)) for _ in range(k2.dim)]) for _ in range(4)]
        y = _heisenberg_partner(L, x, ys)
        if y is not None and replay_witness(L, (x, y)):
            return x, y
    return None


# --- metabelian lemma and the monolithic criterion ---------------------------

def metabelian_split(L: LieAlgebra):
    """(L^2, B) with B a complement subalgebra of the abelian ideal L^2, or (L^2, None)."""
    if not is_metabelian(L):
        raise NotMetabelian("L^2 is not abelian")
    d = derived_series(L)[1]
    return d, complement_subalgebra(L, d)


def lemma_5_3_check(L: LieAlgebra, B: Subspace | None = None, seed: int = 0, samples: int = 64):
    """Does every nonzero b in B act invertibly on L^2?

    True/False when decided exactly (finite field, or dim B <= 1); over an
    infinite field with dim B >= 2 a sampled "yes" raises SamplingInconclusive.
    A missing complement gives False.
    """
    f = L.field
    d, comp = metabelian_split(L)
    if B is None:
        B = comp
    if d.is_zero():
        return True
    if B is None:
        return False
    if B.is_zero():
        return False
    mats = [restricted_action(L, d, b) for b in B.basis]

    def ok(coeffs):
        m = [[f.zero] * d.dim for _ in range(d.dim)]
        for c, mb in zip(coeffs, mats):
            if c != f.zero:
                for i in range(d.dim):
                    for j in range(d.dim):
                        if mb[i][j] != f.zero:
                            m[i][j] = f.add(m[i][j], f.mul(c, mb[i][j]))
        return _is_invertible(f, m)

    if B.dim == 1:
        return ok([f.one])
    if f.is_finite:
        for v in projective_points(f, Subspace.full(f, B.dim)):
            if not ok(v):
                return False
        return True
    rng = random.Random(seed)
    for i in range(B.dim):
        if not ok([f.one if j == i else f.zero for j in range(B.dim)]):
            return False
    for _ in range(samples):
        co = [f.from_int(rng.randint(-9, 9)) for _ in range(B.dim)]
        if any(co) and not ok(co):
            return False
    raise SamplingInconclusive(f"invertible on {samples} samples of a {B.dim}-dimensional B")


def _monolith(L: LieAlgebra, budget: EnumBudget):
    from .structure import NotMonolithic, monolith
    return monolith(L, budget=budget)


def theorem_5_4_check(L: LieAlgebra, budget: EnumBudget = DEFAULT_BUDGET):
    """(strongly solvable and A, metabelian split with invertible action); monolithic input only."""
    _monolith(L, budget)
    lhs = is_strongly_solvable(L) and is_A(L, "oracle_pairs", budget=budget).verdict
    if not is_metabelian(L):
        rhs = False
    else:
        try:
            rhs = bool(lemma_5_3_check(L))
        except SamplingInconclusive:
            rhs = True
    return lhs, rhs


# --- is_A -----------------------------------------------------------------------

def _structural(L: LieAlgebra, budget: EnumBudget, seed: int, depth: int = 0) -> ACertificate:
    f = L.field
    if L.dim <= 1 or L.is_abelian():
        return ACertificate(True, "trivial")
    if not is_solvable(L):
        raise Undecided("no structural route for non-solvable algebras")
    if is_nilpotent(L):
        b = [L.basis_vector(i) for i in range(L.dim)]
        for x, y in itertools.combinations(b, 2):
            if any(L.bracket(x, y)):
                return ACertificate(False, "nilpotent", (x, y))
    if is_metabelian(L):
        try:
            if lemma_5_3_check(L, seed=seed):
                return ACertificate(True, "lemma_5_3")
        except SamplingInconclusive:
            pass
    # two ideals meeting in zero: L embeds in the product of the two quotients
    cert = _quotient_lift(L, budget, seed, depth)
    if cert is not None:
        return cert
    if f.is_finite and not is_strongly_solvable(L):
        from .structure import MethodInapplicable as SMI, is_phi_free_tagged
        try:
            pf, _ = is_phi_free_tagged(L, "structural", is_a=False, seed=seed, budget=budget)
        except (SMI, BudgetExceeded, ArithmeticError):
            pf = False
        if pf:
            try:
                res = theorem_6_6_check(L, budget=budget)
            except (AClassError, ArithmeticError):
                res = None
            if res is not None and res.conclusion:
                return ACertificate(True, "theorem_6_6", notes=("closed-field-proxy",))
    w = witness_search(L, seed)
    if w is not None:
        return ACertificate(False, "witness_search", w)
    raise Undecided("no structural route applies and no witness was found")


def _disjoint_ideals(L: LieAlgebra):
    """Two nonzero ideals meeting in zero, or None."""
    cands = []
    seen = set()
    for v in [L.basis_vector(i) for i in range(L.dim)] + list(center(L).basis):
        I = ideal_closure(L, L.span([v]))
        if I.basis not in seen and not I.is_full():
            seen.add(I.basis)
            cands.append(I)
    cands.sort(key=lambda s: s.dim)
    # shrink each candidate along its own basis vectors
    shrunk = []
    for I in cands:
        cur = I
        for v in I.basis:
            J = ideal_closure(L, L.span([v]))
            if J.dim < cur.dim and J <= cur:
                cur = J
        shrunk.append(cur)
    for a, b in itertools.combinations(shrunk, 2):
        if (a & b).is_zero():
            return a, b
    return None


def _quotient_lift(L: LieAlgebra, budget, seed, depth):
    if depth > L.dim:
        return None
    pair = _disjoint_ideals(L)
    if pair is None:
        return None
    for I in pair:
        Q, _ = quotient_algebra(L, I)
        try:
            c = _structural(Q, budget, seed, depth + 1)
        except Undecided:
            return None
        if not c.verdict:
            return None
    return ACertificate(True, "quotient_lift")


def is_A(L: LieAlgebra, method: str = "auto", budget: EnumBudget = DEFAULT_BUDGET, seed: int = 0) -> ACertificate:
    """A-verdict with certificate.

    ``oracle_pairs`` is exhaustive over a finite field; ``structural`` uses
    the sufficient criteria (the metabelian action test, ideals meeting trivially,
    the phi-free classification) and a seeded witness search; ``auto`` tries
    the oracle first on finite fields.
    """
    if method == "oracle_pairs":
        return oracle_is_A(L, budget)
    if method == "structural":
        return _structural(L, budget, seed)
    if method != "auto":
        raise ValueError(f"unknown A-method {method!r}")
    if L.field.is_finite:
        try:
            return oracle_is_A(L, budget)
        except BudgetExceeded:
            pass
    return _structural(L, budget, seed)


# --- Q(L) ----------------------------------------------------------------------

@dataclass
class QSet:
    elements: list | None
    span: Subspace
    is_subspace: bool
    exhaustive: bool

    def to_json(self, f: Field) -> dict:
        return {"span": self.span.to_json(), "is_subspace": self.is_subspace, "exhaustive": self.exhaustive,
                "count": None if self.elements is None else len(self.elements)}


def q_set(L: LieAlgebra, budget: EnumBudget = DEFAULT_BUDGET) -> QSet:
    """{c : (ad c)^2 = 0}.  Exhaustive over a finite field; over Q only the part inside N."""
    f, n = L.field, L.dim
    if f.is_finite:
        if f.order ** n > budget.max_pairs:
            raise BudgetExceeded(f"{f.order ** n} elements")
        from ._kernels import square_zero_elements
        from .oracle import _structure_tensor, _tables
        add, mul, _, _ = _tables(f)
        idx = square_zero_elements(_structure_tensor(L), n, f.order, add, mul)
        elems = []
        for t in idx:
            v = [0] * n
            t = int(t)
            for i in range(n - 1, -1, -1):
                v[i] = t % f.order
                t //= f.order
            elems.append(tuple(v))
        span = L.span(elems)
        return QSet(elems, span, len(elems) == f.order ** span.dim, True)
    from .structure import nilradical
    N = nilradical(L, "traceform")
    ads = [ad_matrix(L, v) for v in N.basis]
    ok = all(not any(any(r) for r in mat_mul(f, a, b, n)) or False for a in ads for b in ads)
    # polarised: ad a ad b + ad b ad a = 0 on a basis of N covers all of N
    ok = all(
        not any(any(x) for x in [[f.add(p, q) for p, q in zip(r1, r2)]
                                 for r1, r2 in zip(mat_mul(f, a, b, n), mat_mul(f, b, a, n))])
        for a in ads for b in ads
    )
    return QSet(None, N, ok, False)


def q_set_equals_nilradical(L: LieAlgebra, budget: EnumBudget = DEFAULT_BUDGET) -> bool:
    if L.field.characteristic in (2, 3):
        raise CharacteristicExcluded("only asserted away from characteristics 2 and 3")
    from .structure import nilradical
    q = q_set(L, budget)
    return q.is_subspace and q.span == nilradical(L, "auto", budget)


# --- monolithic classification ------------------------------------------------

@dataclass
class MonolithicClass:
    case: str
    dim_W: int
    b: tuple
    lam: object
    k: int
    n: tuple | None = None
    mu: object = None
    notes: tuple = ()

    def to_json(self, f: Field) -> dict:
        enc = lambda v: None if v is None else [f.encode(a) for a in v]
        return {"case": self.case, "dim_W": self.dim_W, "b": enc(self.b), "n": enc(self.n),
                "lambda": f.encode(self.lam), "mu": None if self.mu is None else f.encode(self.mu),
                "k": self.k, "notes": list(self.notes)}


def _generalised_eigenvalue(f: Field, m):
    """lambda with m - lambda nilpotent, or None."""
    if not f.is_finite:
        raise FieldTooSmall("eigenvalue search needs a finite field")
    for lam in f.elements():
        if _is_nilpotent_matrix(f, _sub_scalar(f, m, lam)):
            return lam
    return None


def _nil_index(f: Field, m) -> int:
    k = len(m)
    p = m
    for i in range(1, k + 2):
        if not any(any(r) for r in p):
            return i
        p = mat_mul(f, p, m, k)
    return k


def theorem_6_3_classify(L: LieAlgebra, budget: EnumBudget = DEFAULT_BUDGET) -> MonolithicClass:
    """Case (i) or (ii) of the monolithic classification, with extracted parameters."""
    f = L.field
    if L.dim <= 1:
        raise ValueError("needs dimension greater than one")
    W = _monolith(L, budget)
    if not is_A(L, "auto", budget=budget).verdict:
        raise NotAAlgebra("classification applies to A-algebras")
    ds = derived_series(L)
    if is_strongly_solvable(L):
        d = ds[1]
        B = complement_subalgebra(L, d)
        if B is None or B.dim != 1:
            raise FieldTooSmall(f"complement of L^2 has dimension {None if B is None else B.dim}")
        b = B.basis[0]
        m = restricted_action(L, d, b)
        lam = _generalised_eigenvalue(f, m)
        if lam is None or lam == f.zero:
            raise FieldTooSmall(f"ad b has no single nonzero eigenvalue on L^2; try GF({f.characteristic}^{len(m) * f.degree})")
        return MonolithicClass("i", W.dim, b, lam, _nil_index(f, _sub_scalar(f, m, lam)))
    p = f.characteristic
    d2 = ds[2]
    if ds.length != 3:
        raise FieldTooSmall(f"derived length {ds.length} outside the classification")
    n_space = ds[1]
    cands = [v for v in n_space.basis if not d2.contains(v)]
    # n: an element of L^(1) outside L^(2); its null component is B
    nvec = complement_subalgebra(L, d2, n_space)
    if nvec is None or nvec.dim != 1:
        raise FieldTooSmall("L^(1) is not L^(2) plus a line")
    nv = nvec.basis[0]
    B = fitting_single(L, nv).L0
    if B.dim != 2 or not (B & d2).is_zero():
        raise FieldTooSmall(f"null component of ad n has dimension {B.dim}")
    nv = (B & n_space).basis[0]
    b0 = next(v for v in B.basis if not L.span([nv]).contains(v))
    br = L.bracket(nv, b0)
    gamma = L.span([nv]).coords(br)[0]
    if gamma == f.zero:
        raise FieldTooSmall("B is abelian")
    b0 = tuple(f.mul(f.inv(gamma), a) for a in b0)
    mn = restricted_action(L, d2, nv)
    lam = _generalised_eigenvalue(f, mn)
    if lam is None or lam == f.zero:
        raise FieldTooSmall(f"ad n lacks a single nonzero eigenvalue on L^(2); try a degree-{p} extension")
    notes = []
    for alpha in f.elements():
        b = tuple(f.add(x, f.mul(alpha, y)) for x, y in zip(b0, nv))
        mb = restricted_action(L, d2, b)
        k = len(mb)
        mp = mb
        for _ in range(p - 1):
            mp = mat_mul(f, mp, mb, k)
        op = [[f.sub(x, y) for x, y in zip(r1, r2)] for r1, r2 in zip(mp, mb)]
        nu = _generalised_eigenvalue(f, op)
        if nu is None:
            continue
        if nu != f.zero:
            if alpha != f.zero:
                notes.append(f"b shifted by {f.encode(alpha)} n to make mu nonzero")
            mu = pth_root_raw(f, nu)
            k_ = max(_nil_index(f, _sub_scalar(f, mn, lam)), _nil_index(f, _sub_scalar(f, op, nu)))
            return MonolithicClass("ii", W.dim, b, lam, k_, nv, mu, tuple(notes))
    raise FieldTooSmall("no b + alpha n with a nonzero mu over this field")


# --- diagonal form ---------------------------------------------------------------

def _diagonalise_commuting(f: Field, mats, dim: int):
    """A common eigenbasis (coordinate vectors) of commuting matrices, or None."""
    spaces = [Subspace.full(f, dim)]
    for m in mats:
        nxt = []
        for s in spaces:
            # restrict m to s and split into eigenspaces
            pieces = []
            for lam in f.elements():
                shifted = _sub_scalar(f, m, lam)
                ker = kernel(f, shifted, dim)
                piece = ker & s
                if not piece.is_zero():
                    pieces.append(piece)
            if sum(p.dim for p in pieces) != s.dim:
                return None
            nxt.extend(pieces)
        spaces = nxt
    basis = []
    for s in spaces:
        basis.extend(s.basis)
    return basis


def theorem_6_5_form_check(L: LieAlgebra):
    """Is there a basis a_1..a_m, b_1..b_n with [a_i, b_j] = lambda_ij a_i and other products zero?

    Searches through L = L^2 + B with B an abelian complement and a common
    eigenbasis of ad B on L^2.  Returns (found, basis or None).
    """
    f = L.field
    if not f.is_finite:
        raise MethodInapplicable("eigenvalue search needs a finite field")
    if not is_metabelian(L):
        return False, None
    d, B = metabelian_split(L)
    if B is None or not is_abelian_space(L, B):
        return False, None
    mats = [restricted_action(L, d, b) for b in B.basis]
    eig = _diagonalise_commuting(f, mats, d.dim)
    if eig is None:
        return False, None
    a = [d.from_coords(c) for c in eig]
    basis = a + list(B.basis)
    # re-extract: each [a_i, b_j] must be a multiple of a_i
    for ai in a:
        line = L.span([ai])
        for bj in B.basis:
            if not line.contains(L.bracket(ai, bj)):
                return False, None
    return True, basis


# --- block conditions ------------------------------------------------------------

@dataclass
class Theorem66Params:
    """Witnesses for the four conditions, in L coordinates."""

    L2: Subspace
    C: Subspace
    B: Subspace
    blocks: list = dc_field(default_factory=list)  # (A_i, c_i, b_i, [a_i1..a_ip], lambda_i)

    def to_json(self, f: Field) -> dict:
        enc = lambda v: [f.encode(a) for a in v]
        return {
            "L2": self.L2.to_json(), "C": self.C.to_json(), "B": self.B.to_json(),
            "blocks": [{"A": A.to_json(), "c": enc(c), "b": enc(b), "a": [enc(x) for x in av],
                        "lambda": f.encode(lam)} for A, c, b, av, lam in self.blocks],
        }


@dataclass
class Theorem66Result:
    conditions: tuple
    conclusion: bool
    params: Theorem66Params | None
    reasons: tuple = ()


def _all_vectors(f: Field, space: Subspace):
    for co in itertools.product(f.elements(), repeat=space.dim):
        if any(co):
            yield space.from_coords(co)


def _block_data(L: LieAlgebra, A: Subspace, C: Subspace, B: Subspace, p: int, b_fixed=None):
    """(c, b, a-basis, lambda) realising condition (iv) on the minimal ideal A, or None."""
    f = L.field
    zc = centralizer(L, A, C)
    zb = centralizer(L, A, B)
    if zc.dim != C.dim - 1 or zb.dim != B.dim - 1:
        return None
    for b in _all_vectors(f, B):
        if zb.contains(b):
            continue
        # c with [c, b] = c outside Z_C(A)
        mc = restricted_action(L, C, b)
        e1 = kernel(f, _sub_scalar(f, mc, f.one), C.dim)
        cs = [C.from_coords(v) for v in _all_vectors(f, e1)] if not e1.is_zero() else []
        cs = [c for c in cs if not zc.contains(c)]
        if not cs:
            continue
        beig = b if b_fixed is None else b_fixed
        ma = restricted_action(L, A, beig)
        for lam1 in f.elements():
            ev = kernel(f, _sub_scalar(f, ma, lam1), A.dim)
            if ev.is_zero():
                continue
            for c in cs:
                for co in projective_points(f, ev):
                    a1 = A.from_coords(co)
                    av = [a1]
                    for _ in range(p - 1):
                        av.append(L.bracket(av[-1], c))
                    if L.bracket(av[-1], c) != a1 or L.span(av).dim != p or A.dim != p:
                        continue
                    lam = f.sub(lam1, f.one)
                    good = all(L.bracket(av[j], beig) == tuple(f.mul(f.add(lam, f.from_int(j + 1)), x) for x in av[j])
                               for j in range(p))
                    if good:
                        return c, b, av, lam
    return None


def theorem_6_6_check(L: LieAlgebra, budget: EnumBudget = DEFAULT_BUDGET, reading: str = "b_i") -> Theorem66Result:
    """Evaluate conditions (i)-(iv) of the classification of phi-free, not strongly solvable algebras.

    ``reading`` chooses how the unsubscripted b in the eigenvalue relation is
    read: ``b_i`` (the block's own b_i) or ``common`` (one b for all blocks).
    """
    f = L.field
    if not is_solvable(L) or is_strongly_solvable(L):
        raise MethodInapplicable("needs a solvable algebra that is not strongly solvable")
    if not f.is_finite:
        raise MethodInapplicable("conditions are evaluated by search over a finite field")
    p = f.characteristic
    ds = derived_series(L)
    reasons = []
    L1, L2 = ds[1], ds[2]
    params = None
    # (i)
    c1 = False
    D = C = B = None
    if ds.length == 3 and is_abelian_space(L, L2):
        D = complement_subalgebra(L, L2)
        if D is not None:
            C = D & L1
            if is_abelian_space(L, C):
                B = complement_subalgebra(L, C, within=D)
                c1 = B is not None and is_abelian_space(L, B)
    if not c1:
        reasons.append("(i) no splitting L^(2) + C + B with B, C abelian")
    # (ii)
    c2 = False
    if c1:
        K, _ = induced_algebra(L, D)
        from .structure import is_phi_free
        try:
            c2 = (is_strongly_solvable(K) and is_A(K, "auto", budget).verdict
                  and is_phi_free(K, "auto", is_a=True, budget=budget))
        except (BudgetExceeded, Undecided) as exc:
            reasons.append(f"(ii) undecided: {exc}")
        if not c2:
            reasons.append("(ii) B + C is not a strongly solvable phi-free A-algebra")
    # (iii)
    c3 = False
    mins = []
    if is_abelian_space(L, L2) and not L2.is_zero():
        from .structure import _minimal_by_points
        mins = _minimal_by_points(L, L2)
        total = L.zero_space()
        for m in mins:
            total = total + m
        c3 = total == L2 and all(m.dim == p for m in mins)
    if not c3:
        reasons.append("(iii) L^(2) is not a sum of minimal ideals of dimension p")
    # (iv)
    c4 = False
    if c1 and c3:
        data = {}
        if reading == "common":
            for bc in _all_vectors(f, B):
                ok = {}
                for m in mins:
                    got = _block_data(L, m, C, B, p, b_fixed=bc)
                    if got is not None:
                        ok[m.basis] = got
                if len(ok) == len(mins):
                    data = ok
                    break
        else:
            for m in mins:
                got = _block_data(L, m, C, B, p)
                if got is not None:
                    data[m.basis] = got
        # a direct decomposition of L^(2) out of blocks that carry the data
        chosen = []
        acc = L.zero_space()
        for m in mins:
            if m.basis in data and (acc & m).is_zero():
                chosen.append(m)
                acc = acc + m
        c4 = acc == L2
        if c4:
            blocks = [(m,) + data[m.basis] for m in chosen]
            blocks = [(m, c, b, av, lam) for m, c, b, av, lam in blocks]
            params = Theorem66Params(L2, C, B, blocks)
    if not c4:
        reasons.append("(iv) no c_i, b_i and cyclic eigenbasis for every block")
    conds = (c1, c2, c3, c4)
    return Theorem66Result(conds, all(conds), params, tuple(reasons))


def verify_theorems(L: LieAlgebra, seed: int = 0, budget: EnumBudget = DEFAULT_BUDGET, only=None):
    """Map of check id to Verdict (pass, fail, not_applicable, proxy_mismatch, budget)."""
    from .theorems import verify_theorems as run
    return run(L, seed, budget, only)
