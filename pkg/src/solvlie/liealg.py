"""Lie algebras given by structure constants, and the series machinery.

Convention: ``ad_matrix(L, x)`` is the matrix of ``y -> [y, x]`` acting on row
vectors from the right, so ``y @ ad(x) == [y, x]`` and ``L ad(C)^k`` reads as
repeated right multiplication.  Most textbooks use the left action; this one
keeps Fitting decompositions written the same way as in the literature on
A-algebras.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .exactfield import Field, MixedFields, field_from_json
from .linalg import (
    Matrix,
    Subspace,
    Vector,
    kernel,
    lin_comb,
    rref,
    unit_vector,
    zero_vector,
)


class LieAlgebraError(ValueError):
    pass


class JacobiViolation(LieAlgebraError):
    def __init__(self, i, j, k, vector):
        super().__init__(f"Jacobi identity fails on basis triple ({i}, {j}, {k}): {vector}")
        self.triple = (i, j, k)
        self.vector = vector


class AlternatingViolation(LieAlgebraError):
    pass


class NotClosed(LieAlgebraError):
    pass


class ParseError(LieAlgebraError):
    pass


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    field: Field
    dim: int
    table: tuple  # table[i][j] = [b_i, b_j] as a vector, full antisymmetric
    names: tuple = ()

    def __post_init__(self):
        nz = []
        for i in range(self.dim):
            for j in range(self.dim):
                v = self.table[i][j]
                if any(v):
                    nz.append((i, j, v))
        object.__setattr__(self, "_nonzero", tuple(nz))

    def __eq__(self, other):
        return (isinstance(other, LieAlgebra) and self.field == other.field
                and self.dim == other.dim and self.table == other.table)

    def __hash__(self):
        return hash((self.field, self.dim, self.table))

    @property
    def zero(self) -> Vector:
        return zero_vector(self.field, self.dim)

    def basis_vector(self, i: int) -> Vector:
        return unit_vector(self.field, self.dim, i)

    def bracket(self, x, y) -> Vector:
        f = self.field
        zero = f.zero
        add, mul = f.add, f.mul
        out = [zero] * self.dim
        for i, j, v in self._nonzero:
            xi = x[i]
            if xi == zero:
                continue
            yj = y[j]
            if yj == zero:
                continue
            c = mul(xi, yj)
            for k, a in enumerate(v):
                if a != zero:
                    out[k] = add(out[k], mul(c, a))
        return tuple(out)

    def full(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def zero_space(self) -> Subspace:
        return Subspace.zero(self.field, self.dim)

    def span(self, vectors: Iterable) -> Subspace:
        return Subspace.span(self.field, self.dim, vectors)

    def is_abelian(self) -> bool:
        return not self._nonzero


def make_algebra(f: Field, n: int, constants, names: Sequence[str] | None = None,
                 check: bool = True) -> LieAlgebra:
    """Build and validate an algebra.

    ``constants`` maps pairs ``(i, j)`` with ``i != j`` to the vector (or
    sparse ``{k: coeff}`` dict) of ``[b_i, b_j]``.  Entries may be raw payloads
    or anything ``f.coerce`` understands.  Giving both (i, j) and (j, i)
    requires them to be negatives of each other; giving (i, i) nonzero is an
    alternating-law violation.
    """
    zero = f.zero
    table = [[[zero] * n for _ in range(n)] for _ in range(n)]
    seen = {}
    items = constants.items() if hasattr(constants, "items") else constants
    for key, val in items:
        i, j = key
        if not (0 <= i < n and 0 <= j < n):
            raise LieAlgebraError(f"index pair {(i, j)} out of range for dimension {n}")
        if isinstance(val, dict):
            vec = [zero] * n
            for k, c in val.items():
                k = int(k)
                if not 0 <= k < n:
                    raise LieAlgebraError(f"coefficient index {k} out of range")
                vec[k] = c if _is_raw(f, c) else f.coerce(c)
        else:
            if len(val) != n:
                raise LieAlgebraError(f"bracket vector for {(i, j)} has wrong length")
            vec = [f.coerce(c) if not _is_raw(f, c) else c for c in val]
        if i == j:
            if any(vec):
                raise AlternatingViolation(f"[b{i}, b{i}] must be zero")
            continue
        a, b, sgn = (i, j, False) if i < j else (j, i, True)
        if sgn:
            vec = [f.neg(c) for c in vec]
        if (a, b) in seen and seen[(a, b)] != vec:
            raise AlternatingViolation(f"inconsistent values for [b{i}, b{j}] and [b{j}, b{i}]")
        seen[(a, b)] = vec
    for (a, b), vec in seen.items():
        table[a][b] = vec
        table[b][a] = [f.neg(c) for c in vec]
    tab = tuple(tuple(tuple(v) for v in row) for row in table)
    L = LieAlgebra(f, n, tab, tuple(names) if names else ())
    if check:
        check_jacobi(L)
    return L


def _is_raw(f: Field, c) -> bool:
    if f.characteristic == 0:
        return False
    return isinstance(c, int) and 0 <= c < f.order


def from_table(f: Field, table, names=(), check: bool = True) -> LieAlgebra:
    n = len(table)
    tab = tuple(tuple(tuple(v) for v in row) for row in table)
    for i in range(n):
        if any(tab[i][i]):
            raise AlternatingViolation(f"[b{i}, b{i}] must be zero")
        for j in range(i + 1, n):
            if tuple(f.neg(c) for c in tab[i][j]) != tab[j][i]:
                raise AlternatingViolation(f"table not antisymmetric at {(i, j)}")
    L = LieAlgebra(f, n, tab, tuple(names))
    if check:
        check_jacobi(L)
    return L


def jacobi_defect(L: LieAlgebra):
    """First basis triple violating Jacobi, as ((i, j, k), vector), or None."""
    f, n = L.field, L.dim
    e = [L.basis_vector(i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                s1 = L.bracket(e[i], L.table[j][k])
                s2 = L.bracket(e[j], L.table[k][i])
                s3 = L.bracket(e[k], L.table[i][j])
                tot = tuple(f.add(f.add(a, b), c) for a, b, c in zip(s1, s2, s3))
                if any(tot):
                    return (i, j, k), tot
    return None


def check_jacobi(L: LieAlgebra):
    bad = jacobi_defect(L)
    if bad is not None:
        (i, j, k), vec = bad
        raise JacobiViolation(i, j, k, [L.field.encode(a) for a in vec])


# --- JSON -----------------------------------------------------------------

def algebra_to_json(L: LieAlgebra) -> dict:
    f = L.field
    brackets = []
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            v = L.table[i][j]
            if any(v):
                brackets.append({"i": i, "j": j,
                                 "coeffs": {str(k): f.encode(a) for k, a in enumerate(v) if a != f.zero}})
    out = {"field": f.to_json(), "dim": L.dim}
    if L.names:
        out["names"] = list(L.names)
    out["brackets"] = brackets
    return out


def algebra_from_json(obj: dict, check: bool = True) -> LieAlgebra:
    try:
        f = field_from_json(obj["field"])
        n = int(obj["dim"])
        names = obj.get("names") or ()
        consts = {}
        for br in obj.get("brackets", []):
            consts[(int(br["i"]), int(br["j"]))] = {int(k): v for k, v in br["coeffs"].items()}
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, LieAlgebraError):
            raise
        raise ParseError(f"malformed algebra JSON: {exc}") from exc
    return make_algebra(f, n, consts, names, check=check)


def load_algebra(path, check: bool = True) -> LieAlgebra:
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    if not isinstance(obj, dict):
        raise ParseError(f"{path}: expected a JSON object")
    return algebra_from_json(obj, check=check)


def dump_algebra(L: LieAlgebra, path):
    with open(path, "w") as fh:
        json.dump(algebra_to_json(L), fh, indent=1, sort_keys=True)
        fh.write("\n")


# --- products, ad, centralisers -------------------------------------------

def bracket_vectors(L: LieAlgebra, x, y) -> Vector:
    return L.bracket(x, y)


def ad_matrix(L: LieAlgebra, x) -> Matrix:
    """Rows are [b_i, x]: the right action y -> [y, x]."""
    return [list(L.bracket(L.basis_vector(i), x)) for i in range(L.dim)]


def bracket_spaces(L: LieAlgebra, u: Subspace, v: Subspace) -> Subspace:
    if u.is_zero() or v.is_zero():
        return L.zero_space()
    vecs = []
    for a in u.basis:
        for b in v.basis:
            w = L.bracket(a, b)
            if any(w):
                vecs.append(w)
    return L.span(vecs)


def is_subalgebra(L: LieAlgebra, u: Subspace) -> bool:
    b = u.basis
    for i in range(len(b)):
        for j in range(i + 1, len(b)):
            if not u.contains(L.bracket(b[i], b[j])):
                return False
    return True


def is_ideal(L: LieAlgebra, u: Subspace, within: Subspace | None = None) -> bool:
    """[within, u] <= u (within defaults to L)."""
    outer = within.basis if within is not None else [L.basis_vector(i) for i in range(L.dim)]
    for a in u.basis:
        for x in outer:
            if not u.contains(L.bracket(a, x)):
                return False
    return True


def is_abelian_space(L: LieAlgebra, u: Subspace) -> bool:
    b = u.basis
    return all(not any(L.bracket(b[i], b[j])) for i in range(len(b)) for j in range(i + 1, len(b)))


def centralizer(L: LieAlgebra, b: Subspace, within: Subspace | None = None) -> Subspace:
    """{x in within : [x, b] = 0} as one stacked linear system."""
    f, n = L.field, L.dim
    dom = within if within is not None else L.full()
    if b.is_zero() or dom.is_zero():
        return dom
    m = [[] for _ in range(dom.dim)]
    for r, x in enumerate(dom.basis):
        for y in b.basis:
            m[r].extend(L.bracket(x, y))
    ker = kernel(f, m, dom.dim)
    return L.span(lin_comb(f, c, dom.basis, n) for c in ker.basis)


def center(L: LieAlgebra, within: Subspace | None = None) -> Subspace:
    """Z(S) for the subalgebra S = within (default L)."""
    dom = within if within is not None else L.full()
    return centralizer(L, dom, dom)


def normalizer(L: LieAlgebra, u: Subspace, within: Subspace | None = None) -> Subspace:
    """{x in within : [x, u] <= u}."""
    f, n = L.field, L.dim
    dom = within if within is not None else L.full()
    if u.is_zero():
        return dom
    m = [[] for _ in range(dom.dim)]
    for r, x in enumerate(dom.basis):
        for y in u.basis:
            m[r].extend(u.reduce(L.bracket(x, y)))
    ker = kernel(f, m, dom.dim)
    return L.span(lin_comb(f, c, dom.basis, n) for c in ker.basis)


def ideal_core(L: LieAlgebra, s: Subspace) -> Subspace:
    """Largest ideal of L inside the subspace s."""
    cur = s
    basis = [L.basis_vector(i) for i in range(L.dim)]
    f = L.field
    while True:
        if cur.is_zero():
            return cur
        m = [[] for _ in range(cur.dim)]
        for r, x in enumerate(cur.basis):
            for y in basis:
                m[r].extend(cur.reduce(L.bracket(x, y)))
        ker = kernel(f, m, cur.dim)
        nxt = L.span(lin_comb(f, c, cur.basis, L.dim) for c in ker.basis)
        if nxt.dim == cur.dim:
            return cur
        cur = nxt


def ideal_closure(L: LieAlgebra, s: Subspace) -> Subspace:
    """Smallest ideal of L containing s."""
    cur = s
    basis = L.full()
    while True:
        nxt = cur + bracket_spaces(L, cur, basis)
        if nxt.dim == cur.dim:
            return cur
        cur = nxt


def generated_subalgebra(L: LieAlgebra, vectors: Iterable) -> Subspace:
    cur = L.span(vectors)
    while True:
        nxt = cur + bracket_spaces(L, cur, cur)
        if nxt.dim == cur.dim:
            return cur
        cur = nxt


# --- series ----------------------------------------------------------------

@dataclass(frozen=True)
class SeriesChain:
    kind: str
    terms: tuple  # Subspaces, starting at the algebra, ending at the stable term

    @property
    def stabilization_index(self) -> int:
        return len(self.terms) - 1

    @property
    def terminal(self) -> Subspace:
        return self.terms[-1]

    @property
    def reaches_zero(self) -> bool:
        return self.terms[-1].is_zero()

    @property
    def length(self) -> int | None:
        """Derived length n with term n zero and term n-1 nonzero (None if never 0)."""
        if not self.reaches_zero:
            return None
        return len(self.terms) - 1

    def __getitem__(self, i):
        if i >= len(self.terms):
            return self.terms[-1]
        return self.terms[i]

    def __len__(self):
        return len(self.terms)

    def dims(self) -> list[int]:
        return [t.dim for t in self.terms]


def derived_series(L: LieAlgebra, within: Subspace | None = None) -> SeriesChain:
    cur = within if within is not None else L.full()
    terms = [cur]
    while not cur.is_zero():
        nxt = bracket_spaces(L, cur, cur)
        if nxt.dim == cur.dim:
            break
        terms.append(nxt)
        cur = nxt
    return SeriesChain("derived", tuple(terms))


def lower_central_series(L: LieAlgebra, within: Subspace | None = None) -> SeriesChain:
    top = within if within is not None else L.full()
    cur = top
    terms = [cur]
    while not cur.is_zero():
        nxt = bracket_spaces(L, cur, top)
        if nxt.dim == cur.dim:
            break
        terms.append(nxt)
        cur = nxt
    return SeriesChain("lower_central", tuple(terms))


def nilpotent_residual(L: LieAlgebra, within: Subspace | None = None) -> Subspace:
    return lower_central_series(L, within).terminal


def lower_nilpotent_series(L: LieAlgebra, within: Subspace | None = None) -> SeriesChain:
    cur = within if within is not None else L.full()
    terms = [cur]
    while not cur.is_zero():
        nxt = nilpotent_residual(L, cur)
        if nxt.dim == cur.dim:
            break
        terms.append(nxt)
        cur = nxt
    return SeriesChain("lower_nilpotent", tuple(terms))


def is_solvable(L: LieAlgebra, within: Subspace | None = None) -> bool:
    return derived_series(L, within).reaches_zero


def is_nilpotent(L: LieAlgebra, within: Subspace | None = None) -> bool:
    return lower_central_series(L, within).reaches_zero


def derived_length(L: LieAlgebra, within: Subspace | None = None) -> int | None:
    return derived_series(L, within).length


def derived_algebra(L: LieAlgebra, within: Subspace | None = None) -> Subspace:
    s = within if within is not None else L.full()
    return bracket_spaces(L, s, s)


def is_metabelian(L: LieAlgebra, within: Subspace | None = None) -> bool:
    d = derived_algebra(L, within)
    return is_abelian_space(L, d)


def is_strongly_solvable(L: LieAlgebra, within: Subspace | None = None) -> bool:
    return is_nilpotent(L, derived_algebra(L, within))


# --- new algebras from old -------------------------------------------------

@dataclass(frozen=True)
class Embedding:
    """Linear map from the small algebra's coordinates into L (rows = images)."""

    images: tuple

    def __call__(self, f: Field, coords) -> Vector:
        n = len(self.images[0]) if self.images else 0
        return lin_comb(f, coords, self.images, n)


def induced_algebra(L: LieAlgebra, u: Subspace) -> tuple[LieAlgebra, Subspace]:
    """Structure constants of the subalgebra u in its RREF basis.

    Returns the algebra and u itself; map coordinates back with
    ``u.from_coords``, forward with ``u.coords``.
    """
    if not is_subalgebra(L, u):
        raise NotClosed("subspace is not a subalgebra")
    k = u.dim
    table = [[None] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            table[i][j] = u.coords(L.bracket(u.basis[i], u.basis[j])) if i != j else (L.field.zero,) * k
    return from_table(L.field, table, check=False), u


def quotient_basis(L: LieAlgebra, ideal: Subspace) -> list[int]:
    """Coordinates spanning the chosen complement: the non-pivot columns of the ideal."""
    piv = set(ideal.pivots)
    return [c for c in range(L.dim) if c not in piv]


def quotient_algebra(L: LieAlgebra, ideal: Subspace):
    """L / ideal on the complement spanned by the non-pivot unit vectors.

    Returns (Q, project) where project(v) gives Q-coordinates of v + ideal.
    """
    if not is_ideal(L, ideal):
        raise NotClosed("subspace is not an ideal")
    cols = quotient_basis(L, ideal)
    m = len(cols)

    def project(v):
        r = ideal.reduce(v)
        return tuple(r[c] for c in cols)

    table = [[None] * m for _ in range(m)]
    e = [L.basis_vector(c) for c in cols]
    for i in range(m):
        for j in range(m):
            table[i][j] = project(L.bracket(e[i], e[j])) if i != j else (L.field.zero,) * m
    return from_table(L.field, table, check=False), project


def lift_from_quotient(L: LieAlgebra, ideal: Subspace, coords) -> Vector:
    cols = quotient_basis(L, ideal)
    v = [L.field.zero] * L.dim
    for c, a in zip(cols, coords):
        v[c] = a
    return tuple(v)


def preimage(L: LieAlgebra, ideal: Subspace, qspace: Subspace) -> Subspace:
    """Full preimage in L of a subspace of L/ideal (quotient coordinates)."""
    vecs = [lift_from_quotient(L, ideal, b) for b in qspace.basis]
    return L.span(list(ideal.basis) + vecs)


def direct_sum(L1: LieAlgebra, L2: LieAlgebra) -> LieAlgebra:
    if L1.field != L2.field:
        raise MixedFields(f"{L1.field} vs {L2.field}")
    f = L1.field
    n1, n2 = L1.dim, L2.dim
    n = n1 + n2
    zero = f.zero
    table = [[(zero,) * n for _ in range(n)] for _ in range(n)]
    for i in range(n1):
        for j in range(n1):
            table[i][j] = tuple(L1.table[i][j]) + (zero,) * n2
    for i in range(n2):
        for j in range(n2):
            table[n1 + i][n1 + j] = (zero,) * n1 + tuple(L2.table[i][j])
    names = ()
    if L1.names or L2.names:
        names = tuple(L1.names or [f"u{i}" for i in range(n1)]) + tuple(L2.names or [f"v{i}" for i in range(n2)])
    return from_table(f, table, names, check=False)


def change_basis(L: LieAlgebra, new_basis: Sequence[Sequence]) -> LieAlgebra:
    """Structure constants with respect to the rows of new_basis (invertible)."""
    f, n = L.field, L.dim
    rows = [list(r) for r in new_basis]
    aug = [r + list(unit_vector(f, n, i)) for i, r in enumerate(rows)]
    red, rk, _ = rref(f, aug, 2 * n)
    if rk < n or any(red[i][i] != f.one for i in range(n)):
        raise LieAlgebraError("new basis is singular")
    inv = [r[n:] for r in red[:n]]  # rows * inv = I, so coordinates of v are v @ inv
    table = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            w = L.bracket(rows[i], rows[j])
            table[i][j] = lin_comb(f, w, inv, n)
    return from_table(f, table, check=False)
