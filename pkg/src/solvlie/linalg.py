"""Exact dense linear algebra over an :class:`~solvlie.exactfield.Field`.

Vectors are tuples of raw field payloads and matrices are lists of rows.
Subspaces are kept in reduced row echelon form so that equality of subspaces
is equality of their bases.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from .exactfield import Field


class LinalgError(ValueError):
    pass


class NoSolution(LinalgError):
    pass


class AmbientMismatch(LinalgError):
    pass


class NotContained(LinalgError):
    pass


Vector = tuple
Matrix = list  # list of rows


def zero_vector(f: Field, n: int) -> Vector:
    return (f.zero,) * n


def unit_vector(f: Field, n: int, i: int) -> Vector:
    v = [f.zero] * n
    v[i] = f.one
    return tuple(v)


def is_zero_vector(v: Sequence) -> bool:
    return not any(v)


def vec_add(f: Field, u, v) -> Vector:
    add = f.add
    return tuple(add(a, b) for a, b in zip(u, v))


def vec_sub(f: Field, u, v) -> Vector:
    sub = f.sub
    return tuple(sub(a, b) for a, b in zip(u, v))


def vec_scale(f: Field, c, v) -> Vector:
    mul = f.mul
    return tuple(mul(c, a) for a in v)


def lin_comb(f: Field, coeffs, vectors, n: int) -> Vector:
    out = [f.zero] * n
    add, mul = f.add, f.mul
    for c, v in zip(coeffs, vectors):
        if c != f.zero:
            for k, a in enumerate(v):
                if a != f.zero:
                    out[k] = add(out[k], mul(c, a))
    return tuple(out)


def vec_mat(f: Field, v, m: Matrix, ncols: int | None = None) -> Vector:
    """Row vector times matrix."""
    if ncols is None:
        ncols = len(m[0]) if m else 0
    return lin_comb(f, v, m, ncols)


def mat_mul(f: Field, a: Matrix, b: Matrix, ncols: int | None = None) -> Matrix:
    if ncols is None:
        ncols = len(b[0]) if b else 0
    return [list(vec_mat(f, row, b, ncols)) for row in a]


def identity(f: Field, n: int) -> Matrix:
    return [list(unit_vector(f, n, i)) for i in range(n)]


def transpose(m: Matrix, ncols: int | None = None) -> Matrix:
    if not m:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*m)]


def rref(f: Field, m: Matrix, ncols: int | None = None) -> tuple[Matrix, int, list[int]]:
    """Gauss-Jordan elimination.  Returns (RREF with zero rows kept, rank, pivots)."""
    rows = [list(r) for r in m]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    zero, one = f.zero, f.one
    sub, mul, inv = f.sub, f.mul, f.inv
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if rows[i][c] != zero), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][c]
        if piv != one:
            s = inv(piv)
            rows[r] = [mul(s, a) for a in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r:
                fac = rows[i][c]
                if fac != zero:
                    row = rows[i]
                    rows[i] = [a if b == zero else sub(a, mul(fac, b)) for a, b in zip(row, prow)]
        pivots.append(c)
        r += 1
    return rows, r, pivots


def rank(f: Field, m: Matrix) -> int:
    return rref(f, m)[1]


@dataclass(frozen=True)
class Subspace:
    """A subspace of F^n stored by its canonical RREF basis."""

    field: Field
    n: int
    basis: tuple = ()
    pivots: tuple = dc_field(default=(), compare=False, hash=False, repr=False)

    @classmethod
    def span(cls, f: Field, n: int, vectors: Iterable) -> "Subspace":
        vecs = [list(v) for v in vectors]
        if not vecs:
            return cls(f, n, (), ())
        red, rk, piv = rref(f, vecs, n)
        return cls(f, n, tuple(tuple(r) for r in red[:rk]), tuple(piv))

    @classmethod
    def from_rref(cls, f: Field, n: int, rows, pivots) -> "Subspace":
        """Trusted constructor for rows already in RREF."""
        return cls(f, n, tuple(tuple(r) for r in rows), tuple(pivots))

    @classmethod
    def zero(cls, f: Field, n: int) -> "Subspace":
        return cls(f, n, (), ())

    @classmethod
    def full(cls, f: Field, n: int) -> "Subspace":
        return cls(f, n, tuple(unit_vector(f, n, i) for i in range(n)), tuple(range(n)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return len(self.basis) == self.n

    def reduce(self, v) -> Vector:
        """Canonical representative of ``v`` modulo this subspace."""
        f = self.field
        zero = f.zero
        v = list(v)
        for row, c in zip(self.basis, self.pivots):
            a = v[c]
            if a != zero:
                sub, mul = f.sub, f.mul
                v = [x if b == zero else sub(x, mul(a, b)) for x, b in zip(v, row)]
        return tuple(v)

    def contains(self, v) -> bool:
        return not any(self.reduce(v))

    def coords(self, v) -> Vector:
        """Coordinates of ``v`` (assumed inside) with respect to the RREF basis."""
        return tuple(v[c] for c in self.pivots)

    def from_coords(self, c) -> Vector:
        return lin_comb(self.field, c, self.basis, self.n)

    def _check(self, other: "Subspace"):
        if self.n != other.n or self.field != other.field:
            raise AmbientMismatch(f"F^{self.n} over {self.field} vs F^{other.n} over {other.field}")

    def __le__(self, other: "Subspace") -> bool:
        self._check(other)
        return all(other.contains(v) for v in self.basis)

    def __lt__(self, other):
        return self <= other and self.dim < other.dim

    def __add__(self, other: "Subspace") -> "Subspace":
        return subspace_sum(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return intersect(self, other)

    def to_json(self) -> list:
        return [[self.field.encode(a) for a in v] for v in self.basis]


def subspace_from_json(f: Field, n: int, rows) -> Subspace:
    return Subspace.span(f, n, [tuple(f.decode(a) for a in r) for r in rows])


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    u._check(v)
    if v.is_zero():
        return u
    if u.is_zero():
        return v
    return Subspace.span(u.field, u.n, u.basis + v.basis)


def intersect(u: Subspace, v: Subspace) -> Subspace:
    """Zassenhaus: row reduce [[u|u],[v|0]]; rows with zero left half span u & v."""
    u._check(v)
    f, n = u.field, u.n
    if u.is_zero() or v.is_zero():
        return Subspace.zero(f, n)
    rows = [list(b) + list(b) for b in u.basis] + [list(b) + [f.zero] * n for b in v.basis]
    red, rk, piv = rref(f, rows, 2 * n)
    out = [r[n:] for r, p in zip(red[:rk], piv) if p >= n]
    return Subspace.span(f, n, out)


def complement(u: Subspace, w: Subspace) -> Subspace:
    """A complement of ``u`` inside ``w``, greedy over w's RREF rows (lowest pivot first)."""
    if not u <= w:
        raise NotContained("complement: u is not a subspace of w")
    chosen = []
    cur = u
    for row in w.basis:
        if cur.dim == w.dim:
            break
        if not cur.contains(row):
            chosen.append(row)
            cur = subspace_sum(cur, Subspace.span(u.field, u.n, [row]))
    return Subspace.span(u.field, u.n, chosen)


def kernel(f: Field, m: Matrix, nrows: int | None = None) -> Subspace:
    """Left kernel {x : x m = 0} of an nrows x ncols matrix."""
    if nrows is None:
        nrows = len(m)
    ncols = len(m[0]) if m else 0
    if ncols == 0:
        return Subspace.full(f, nrows)
    # x m = 0  <=>  m^T x^T = 0: null space of the transpose
    mt = transpose(m)
    red, rk, piv = rref(f, mt, nrows)
    free = [c for c in range(nrows) if c not in set(piv)]
    basis = []
    for fc in free:
        v = [f.zero] * nrows
        v[fc] = f.one
        for r, pc in enumerate(piv):
            v[pc] = f.neg(red[r][fc])
        basis.append(v)
    return Subspace.span(f, nrows, basis)


def image(f: Field, m: Matrix, ncols: int | None = None) -> Subspace:
    """Row space {x m}."""
    if ncols is None:
        ncols = len(m[0]) if m else 0
    return Subspace.span(f, ncols, m)


def solve(f: Field, m: Matrix, rhs) -> Vector:
    """One x with x m = rhs, or raise NoSolution."""
    nrows = len(m)
    ncols = len(rhs)
    # stack rows of m^T with rhs column: [m^T | rhs^T]
    aug = [[m[i][j] for i in range(nrows)] + [rhs[j]] for j in range(ncols)]
    red, rk, piv = rref(f, aug, nrows + 1)
    if nrows in piv:
        raise NoSolution("inconsistent system")
    x = [f.zero] * nrows
    for r, pc in enumerate(piv):
        x[pc] = red[r][nrows]
    return tuple(x)


def solve_in(u: Subspace, v) -> Vector:
    """Coordinates of ``v`` in the basis of ``u``; NoSolution when v is outside."""
    if not u.contains(v):
        raise NoSolution("vector not in subspace")
    return u.coords(v)


def dims_direct(*spaces: Subspace) -> bool:
    """True when the sum of the given subspaces is direct."""
    total = sum(s.dim for s in spaces)
    acc = spaces[0]
    for s in spaces[1:]:
        acc = acc + s
    return acc.dim == total


def sum_all(f: Field, n: int, spaces: Iterable[Subspace]) -> Subspace:
    vecs = []
    for s in spaces:
        vecs.extend(s.basis)
    return Subspace.span(f, n, vecs)


def mat_to_json(f: Field, m: Matrix) -> list:
    return [[f.encode(a) for a in row] for row in m]
