"""Named algebras and seeded random corpora."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .exactfield import GF, ExtensionField, Field, PrimeField
from .linalg import identity, kernel, lin_comb, mat_mul, rref
from .liealg import LieAlgebra, direct_sum, from_table, make_algebra


class GenerationError(ValueError):
    pass


class CharacteristicZero(GenerationError):
    pass


class CharacteristicMismatch(GenerationError):
    pass


class GenerationFailed(GenerationError):
    pass


def abelian(f: Field, n: int) -> LieAlgebra:
    return make_algebra(f, n, {})


def two_dim_nonabelian(f: Field) -> LieAlgebra:
    """[b1, b2] = b1."""
    return make_algebra(f, 2, {(0, 1): {0: f.one}}, ["b1", "b2"])


def heisenberg(f: Field) -> LieAlgebra:
    """[x, y] = z with z central."""
    return make_algebra(f, 3, {(0, 1): {2: f.one}}, ["x", "y", "z"])


def example_2_4(f: Field) -> LieAlgebra:
    """Fe + Ff + F^p on the basis (e, f, x_1, ..., x_p).

    Closed form of the matrix model (e the cyclic shift, f = diag(0, ..., p-1)):
    [e, f] = e, [x_i, e] = x_{i+1} (indices mod p), [x_i, f] = (i - 1) x_i.
    """
    p = f.characteristic
    if p == 0:
        raise CharacteristicZero("the example needs positive characteristic")
    one = f.one
    consts = {(0, 1): {0: one}}
    for i in range(1, p + 1):
        xi = 1 + i
        consts[(xi, 0)] = {2 + i % p: one}
        c = f.from_int(i - 1)
        if c != f.zero:
            consts[(xi, 1)] = {xi: c}
    names = ["e", "f"] + [f"x{i}" for i in range(1, p + 1)]
    return make_algebra(f, p + 2, consts, names)


def example_2_4_matrices(f: Field):
    """The p x p matrices e (cyclic shift) and f (diagonal 0..p-1) as row lists."""
    p = f.characteristic
    e = [[f.one if j == (i + 1) % p else f.zero for j in range(p)] for i in range(p)]
    d = [[f.from_int(i) if i == j else f.zero for j in range(p)] for i in range(p)]
    return e, d


@dataclass(frozen=True)
class Theorem61Params:
    m: int
    n: int
    lambdas: tuple  # m rows of n raw scalars


def theorem_6_1_algebra(params: Theorem61Params, f: Field) -> LieAlgebra:
    """a_1..a_m, b_1..b_n with [a_i, b_j] = lambda_ij a_i, other products zero."""
    m, n = params.m, params.n
    if len(params.lambdas) != m or any(len(r) != n for r in params.lambdas):
        raise GenerationError("lambda matrix must be m x n")
    consts = {}
    for i in range(m):
        for j in range(n):
            lam = f.coerce(params.lambdas[i][j]) if not isinstance(params.lambdas[i][j], int) \
                else f.from_int(params.lambdas[i][j])
            if lam != f.zero:
                consts[(i, m + j)] = {i: lam}
    names = [f"a{i + 1}" for i in range(m)] + [f"b{j + 1}" for j in range(n)]
    return make_algebra(f, m + n, consts, names)


def theorem_6_6_algebra(p: int, n: int, lambdas: Sequence, f: Field) -> LieAlgebra:
    """n blocks (A_i, c_i, b_i) with the relations of the phi-free classification.

    Basis order: a_11..a_1p, ..., a_n1..a_np, c_1..c_n, b_1..b_n;
    [c_i, b_i] = c_i, [a_ij, c_i] = a_i(j+1) (j mod p), [a_ij, b_i] = (lambda_i + j) a_ij.
    ``lambdas`` holds raw field payloads (or ints, read as residues).
    """
    if f.characteristic != p:
        raise CharacteristicMismatch(f"field {f} does not have characteristic {p}")
    if len(lambdas) != n:
        raise GenerationError("need one lambda per block")
    one = f.one
    consts = {}
    names = []
    for i in range(n):
        names += [f"a{i + 1}_{j}" for j in range(1, p + 1)]
    names += [f"c{i + 1}" for i in range(n)] + [f"b{i + 1}" for i in range(n)]
    for i in range(n):
        c = n * p + i
        b = n * p + n + i
        lam = lambdas[i]
        consts[(c, b)] = {c: one}
        for j in range(1, p + 1):
            a = i * p + (j - 1)
            consts[(a, c)] = {i * p + j % p: one}
            ev = f.add(lam, f.from_int(j))
            if ev != f.zero:
                consts[(a, b)] = {a: ev}
    return make_algebra(f, n * p + 2 * n, consts, names)


def weyl_block(f: Field, scale=None, extra_scalar: bool = False) -> LieAlgebra:
    """F[t]/(t^p) extended by the Heisenberg algebra {D, T, Z} acting as d/dt, t*, 1.

    Solvable, phi-free, not strongly solvable, and not an A-algebra (D, T, Z
    span a Heisenberg subalgebra).  ``scale`` multiplies T (and hence Z's
    action); ``extra_scalar`` adjoins an element acting as the identity on
    F[t]/(t^p) and centralising D, T, Z.
    """
    p = f.characteristic
    if p == 0:
        raise CharacteristicZero("needs positive characteristic")
    s = f.one if scale is None else scale
    consts = {}
    D, T, Z = p, p + 1, p + 2
    # module basis v_k = t^k; right actions: [v_k, D] = k v_{k-1}, [v_k, T] = s v_{k+1}
    for k in range(p):
        if k > 0:
            consts[(k, D)] = {k - 1: f.from_int(k)}
        if k + 1 < p:
            consts[(k, T)] = {k + 1: s}
        consts[(k, Z)] = {k: s}
    # right actions compose as v [D, T] = v D T - v T D = -s v
    consts[(T, D)] = {Z: f.one}
    names = [f"v{k}" for k in range(p)] + ["D", "T", "Z"]
    n = p + 3
    if extra_scalar:
        consts.update({(k, n): {k: f.one} for k in range(p)})
        names.append("d")
        n += 1
    return make_algebra(f, n, consts, names)


def shared_block_algebra(f: Field, lambdas: Sequence, alphas: Sequence) -> LieAlgebra:
    """Blocks A_1..A_n sharing one c and one b, plus z acting on A_i as alphas[i].

    Basis order: a_11..a_np, c, b, z; [c, b] = c, [a_ij, c] = a_i(j+1),
    [a_ij, b] = (lambda_i + j) a_ij, [a_ij, z] = alpha_i a_ij, z central in span{c, b, z}.
    With every alpha_i zero, z is central in L.
    """
    p = f.characteristic
    if p == 0:
        raise CharacteristicZero("needs positive characteristic")
    n = len(lambdas)
    if len(alphas) != n:
        raise GenerationError("need one alpha per block")
    c, b, z = n * p, n * p + 1, n * p + 2
    consts = {(c, b): {c: f.one}}
    for i in range(n):
        for j in range(1, p + 1):
            a = i * p + (j - 1)
            consts[(a, c)] = {i * p + j % p: f.one}
            ev = f.add(lambdas[i], f.from_int(j))
            if ev != f.zero:
                consts[(a, b)] = {a: ev}
            if alphas[i] != f.zero:
                consts[(a, z)] = {a: alphas[i]}
    names = [f"a{i + 1}_{j}" for i in range(n) for j in range(1, p + 1)] + ["c", "b", "z"]
    return make_algebra(f, n * p + 3, consts, names)


# --- random corpora ---------------------------------------------------------

def split_metabelian_cases() -> list:
    """Twenty block algebras of the shape A_1 + ... + A_n + C + B, with labels."""
    F2, F3, F4, F9 = GF(2), GF(3), GF(2, 2), GF(3, 2)
    choices = [(F2, [0]), (F2, [1])]
    choices += [(F2, [a, b]) for a in (0, 1) for b in (0, 1)]
    choices += [(F4, [lam]) for lam in range(4)] + [(F4, [0, 1]), (F4, [F4.gen, 0])]
    choices += [(F3, [lam]) for lam in range(3)] + [(F3, [0, 0]), (F3, [0, 1]), (F3, [1, 2])]
    choices += [(F9, [0]), (F9, [F9.gen])]
    return [(f"blocks {f} lambdas={lams}", theorem_6_6_algebra(f.characteristic, len(lams), lams, f))
            for f, lams in choices]


def near_miss_cases() -> list:
    """Twenty phi-free, not strongly solvable algebras close to the block shape.

    The Weyl-block family has a Heisenberg subalgebra inside B + C; the shared-block
    family gives each centraliser Z_B(A_i) codimension two.
    """
    F2, F3, F4, F9 = GF(2), GF(3), GF(2, 2), GF(3, 2)
    out = [(f"weyl {f}", weyl_block(f)) for f in (F2, F3, F4, F9)]
    out += [("weyl GF(3) scale=2", weyl_block(F3, scale=2)),
            ("weyl GF(4) scale=gen", weyl_block(F4, scale=F4.gen)),
            ("weyl GF(2) extra", weyl_block(F2, extra_scalar=True)),
            ("weyl GF(3) extra", weyl_block(F3, extra_scalar=True))]
    for f in (F2, F3):
        out += [(f"weyl+S2 {f}", direct_sum(weyl_block(f), two_dim_nonabelian(f))),
                (f"weyl+F {f}", direct_sum(weyl_block(f), abelian(f, 1))),
                (f"weyl+example {f}", direct_sum(weyl_block(f), example_2_4(f)))]
    shared = [(F2, [0, 0], [1, 1]), (F2, [0, 1], [1, 1]), (F2, [0], [1]),
              (F3, [0], [1]), (F3, [0, 1], [1, 2]), (F2, [0, 0], [0, 1])]
    out += [(f"shared {f} lambdas={lams} alphas={als}", shared_block_algebra(f, lams, als))
            for f, lams, als in shared]
    return out


def derivation_basis(L: LieAlgebra) -> list:
    """Basis of Der(L) as n x n matrices D with e_a D = row a (right action)."""
    f, n = L.field, L.dim
    # unknown d[a][b] at row index a*n + b; one column per (i<j, k)
    rows = [[] for _ in range(n * n)]
    for i in range(n):
        for j in range(i + 1, n):
            cij = L.table[i][j]
            for k in range(n):
                col = {}
                # [e_i,e_j] D : sum_a c_ij^a d[a][k]
                for a in range(n):
                    if cij[a] != f.zero:
                        col[a * n + k] = f.add(col.get(a * n + k, f.zero), cij[a])
                # - [e_i D, e_j] = - sum_b d[i][b] c_bj^k
                for b in range(n):
                    c = L.table[b][j][k]
                    if c != f.zero:
                        col[i * n + b] = f.sub(col.get(i * n + b, f.zero), c)
                # - [e_i, e_j D] = - sum_b d[j][b] c_ib^k
                for b in range(n):
                    c = L.table[i][b][k]
                    if c != f.zero:
                        col[j * n + b] = f.sub(col.get(j * n + b, f.zero), c)
                for r in range(n * n):
                    rows[r].append(col.get(r, f.zero))
    if not rows[0]:
        ker_basis = [tuple(f.one if r == s else f.zero for r in range(n * n)) for s in range(n * n)]
    else:
        ker_basis = kernel(f, rows, n * n).basis
    return [[list(v[a * n:(a + 1) * n]) for a in range(n)] for v in ker_basis]


def extend_by_derivation(L: LieAlgebra, D) -> LieAlgebra:
    """L + Ft with [x, t] = x D."""
    f, n = L.field, L.dim
    zero = f.zero
    table = [[tuple(L.table[i][j]) + (zero,) for j in range(n)] + [tuple(D[i]) + (zero,)] for i in range(n)]
    table.append([tuple(f.neg(a) for a in D[i]) + (zero,) for i in range(n)] + [(zero,) * (n + 1)])
    return from_table(f, table, check=False)


def _random_element(rng: random.Random, f: Field):
    return rng.choice(f.elements())


def random_solvable(seed: int, dim_max: int, f: Field, inject_heisenberg: bool = False) -> LieAlgebra:
    """Iterated extensions of an abelian algebra by random derivations."""
    rng = random.Random(seed)
    target = rng.randint(2, max(2, dim_max))
    start = rng.randint(1, min(3, target))
    L = abelian(f, start)
    while L.dim < target:
        ders = derivation_basis(L)
        # sparse random combination keeps some structure (zero rows, repeated eigenvalues)
        k = rng.randint(1, min(3, len(ders)))
        picks = rng.sample(range(len(ders)), k)
        D = [[f.zero] * L.dim for _ in range(L.dim)]
        for idx in picks:
            c = _random_element(rng, f)
            for a in range(L.dim):
                for b in range(L.dim):
                    D[a][b] = f.add(D[a][b], f.mul(c, ders[idx][a][b]))
        L = extend_by_derivation(L, D)
    if inject_heisenberg:
        L = direct_sum(L, heisenberg(f))
    from .liealg import check_jacobi
    check_jacobi(L)
    return L


def _mult_matrix(E: ExtensionField, beta: int, power: int = 1) -> list:
    """Matrix over GF(p) of v -> v * beta^power on E with basis 1, t, ..., t^(k-1)."""
    b = E.pow(beta, power)
    rows = []
    for i in range(E.k):
        ti = E.pow(E.gen, i)
        rows.append(list(E.to_coeffs(E.mul(ti, b))))
    return rows


def _random_invertible(rng: random.Random, f: Field, n: int) -> list:
    while True:
        m = [[_random_element(rng, f) for _ in range(n)] for _ in range(n)]
        if rref(f, m, n)[1] == n:
            return m


def _invert(f: Field, m: list) -> list:
    n = len(m)
    aug = [list(r) + list(e) for r, e in zip(m, identity(f, n))]
    red, _, _ = rref(f, aug, 2 * n)
    return [r[n:] for r in red]


def random_A_candidate(seed: int, f: Field, dim_max: int = 6) -> LieAlgebra:
    """V + B with B abelian acting on abelian V, every nonzero b invertibly.

    V is a sum of copies of GF(q^m) seen over GF(q) and B a GF(q)-subspace of
    GF(q^m) acting by multiplication (twisted by Frobenius on each copy).
    """
    rng = random.Random(seed)
    if not isinstance(f, PrimeField):
        m = 1
    else:
        m = rng.choice([1, 2, 2, 3] if dim_max >= 4 else [1, 2])
    for _ in range(64):
        copies = rng.randint(1, max(1, (dim_max - 1) // m))
        r = rng.randint(1, min(m, dim_max - copies * m)) if dim_max - copies * m >= 1 else 0
        if r >= 1:
            break
        m = 1
    else:
        raise GenerationFailed("could not fit dimensions")
    q = f.order
    if m == 1:
        # B is a line of scalars; each copy may carry its own nonzero scalar
        scal = [rng.choice([a for a in f.elements() if a != f.zero]) for _ in range(copies)]
        mats = [[[scal[i] if (i == j) else f.zero for j in range(copies)] for i in range(copies)]]
        nv = copies
    else:
        E = GF(f.characteristic, m)
        betas = []
        for _ in range(256):
            betas = [rng.randrange(1, E.order) for _ in range(r)]
            vecs = [list(E.to_coeffs(b)) for b in betas]
            if rref(f, vecs, m)[1] == r:
                break
        else:
            raise GenerationFailed("no independent multipliers found")
        twists = [rng.randrange(m) for _ in range(copies)]
        nv = copies * m
        mats = []
        for b in betas:
            M = [[f.zero] * nv for _ in range(nv)]
            for c, tw in enumerate(twists):
                blk = _mult_matrix(E, E.pow(b, f.characteristic**tw))
                for i in range(m):
                    for j in range(m):
                        M[c * m + i][c * m + j] = blk[i][j]
            mats.append(M)
    P = _random_invertible(rng, f, nv)
    Pinv = _invert(f, P)
    mats = [mat_mul(f, mat_mul(f, P, M, nv), Pinv, nv) for M in mats]
    n = nv + len(mats)
    consts = {}
    for j, M in enumerate(mats):
        for i in range(nv):
            if any(M[i]):
                consts[(i, nv + j)] = list(M[i]) + [f.zero] * len(mats)
    names = [f"v{i + 1}" for i in range(nv)] + [f"b{j + 1}" for j in range(len(mats))]
    return make_algebra(f, n, consts, names)
