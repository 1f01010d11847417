"""Exact scalar fields: the rationals, GF(p) and small extensions GF(p^k).

Field objects double as the arithmetic engine.  Elements are stored as raw
payloads so the linear algebra layer can stay fast:

* ``Rationals``       -- :class:`fractions.Fraction`
* ``PrimeField(p)``   -- ``int`` residue in ``[0, p)``
* ``ExtensionField``  -- ``int`` index ``c0 + c1*p + ... + c_{k-1}*p^(k-1)``
  encoding the coefficient vector of a polynomial in ``t`` modulo the
  minimal polynomial (constant term first).

:class:`Scalar` wraps a payload together with its field for public use.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterator, Sequence


class FieldError(ValueError):
    pass


class MixedFields(FieldError):
    pass


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


class NotPositiveCharacteristic(FieldError):
    pass


class InfiniteField(FieldError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# monic minimal polynomials, constant term first
DEFAULT_MIN_POLYS = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (3, 2): (1, 0, 1),
    (5, 2): (2, 0, 1),
    (3, 3): (1, 2, 0, 1),
}


class Field:
    """Common interface; subclasses supply the payload arithmetic."""

    characteristic: int
    order: int | None
    degree: int

    zero: object
    one: object

    @property
    def is_finite(self) -> bool:
        return self.order is not None

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        if e < 0:
            a, e = self.inv(a), -e
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def is_zero(self, a) -> bool:
        return a == self.zero

    def __call__(self, value) -> "Scalar":
        return Scalar(self, self.coerce(value))

    def elements(self) -> list:
        raise InfiniteField(f"{self} is infinite")


@dataclass(frozen=True)
class Rationals(Field):
    characteristic = 0
    order = None
    degree = 1
    zero = Fraction(0)
    one = Fraction(1)

    def __str__(self):
        return "Q"

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return 1 / a

    def from_int(self, n: int):
        return Fraction(n)

    def coerce(self, value):
        if isinstance(value, Scalar):
            _check_same(self, value.field)
            return value.value
        if isinstance(value, str):
            return Fraction(value.strip())
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        raise FieldError(f"cannot interpret {value!r} as a rational")

    def encode(self, a):
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"

    def decode(self, obj):
        return self.coerce(obj)

    def to_json(self) -> dict:
        return {"type": "Q"}


@dataclass(frozen=True)
class PrimeField(Field):
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise FieldError(f"{self.p} is not prime")

    def __str__(self):
        return f"GF({self.p})"

    @property
    def characteristic(self):
        return self.p

    @property
    def order(self):
        return self.p

    degree = 1
    zero = 0
    one = 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def pow(self, a, e):
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)

    def from_int(self, n: int):
        return n % self.p

    def coerce(self, value):
        if isinstance(value, Scalar):
            _check_same(self, value.field)
            return value.value
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise DivisionByZero(f"{value} has no image in {self}")
            return value.numerator * self.inv(value.denominator % self.p) % self.p
        if isinstance(value, str):
            return self.coerce(Fraction(value.strip()))
        if isinstance(value, int):
            return value % self.p
        raise FieldError(f"cannot interpret {value!r} in {self}")

    def elements(self):
        return list(range(self.p))

    def encode(self, a):
        return a

    def decode(self, obj):
        return self.coerce(obj)

    def to_json(self) -> dict:
        return {"type": "GF", "p": self.p}


def _poly_divides(p: int, d: Sequence[int], f: Sequence[int]) -> bool:
    """Does monic ``d`` divide ``f`` over GF(p)?  Coefficients constant-first."""
    r = list(f)
    dd = len(d) - 1
    for top in range(len(r) - 1, dd - 1, -1):
        c = r[top] % p
        if c:
            for i in range(dd + 1):
                r[top - dd + i] = (r[top - dd + i] - c * d[i]) % p
    return not any(x % p for x in r[:dd])


def is_irreducible(p: int, poly: Sequence[int]) -> bool:
    """Brute-force irreducibility of a monic polynomial over GF(p)."""
    k = len(poly) - 1
    if k < 1 or poly[-1] % p != 1:
        return False
    for d in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if _poly_divides(p, list(low) + [1], poly):
                return False
    return True


def find_irreducible(p: int, k: int) -> tuple[int, ...]:
    if (p, k) in DEFAULT_MIN_POLYS:
        return DEFAULT_MIN_POLYS[(p, k)]
    for low in itertools.product(range(p), repeat=k):
        poly = tuple(low) + (1,)
        if low[0] and is_irreducible(p, poly):
            return poly
    raise FieldError(f"no irreducible polynomial of degree {k} over GF({p})")


@dataclass(frozen=True)
class ExtensionField(Field):
    p: int
    k: int
    min_poly: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise FieldError(f"{self.p} is not prime")
        if self.k < 2:
            raise FieldError("extension degree must be at least 2")
        object.__setattr__(self, "min_poly", tuple(c % self.p for c in self.min_poly))
        if len(self.min_poly) != self.k + 1 or not is_irreducible(self.p, self.min_poly):
            raise FieldError(f"{list(self.min_poly)} is not monic irreducible of degree {self.k}")

    def __str__(self):
        return f"GF({self.p}^{self.k})"

    @property
    def characteristic(self):
        return self.p

    @property
    def order(self):
        return self.p**self.k

    @property
    def degree(self):
        return self.k

    zero = 0
    one = 1

    def to_coeffs(self, a: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.k):
            a, c = divmod(a, self.p)
            out.append(c)
        return tuple(out)

    def from_coeffs(self, cs: Sequence[int]) -> int:
        if len(cs) > self.k:
            raise FieldError(f"coefficient vector longer than {self.k}")
        a = 0
        for c in reversed(cs):
            a = a * self.p + c % self.p
        return a

    def _mul_slow(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        x, y = self.to_coeffs(a), self.to_coeffs(b)
        prod = [0] * (2 * k - 1)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    prod[i + j] = (prod[i + j] + xi * yj) % p
        for top in range(2 * k - 2, k - 1, -1):
            c = prod[top]
            if c:
                for i in range(k + 1):
                    prod[top - k + i] = (prod[top - k + i] - c * self.min_poly[i]) % p
        return self.from_coeffs(prod[:k])

    @cached_property
    def _tables(self):
        q = self.order
        coeffs = [self.to_coeffs(a) for a in range(q)]
        add = [[self.from_coeffs([(u + v) % self.p for u, v in zip(coeffs[a], coeffs[b])])
                for b in range(q)] for a in range(q)]
        neg = [self.from_coeffs([-u % self.p for u in coeffs[a]]) for a in range(q)]
        mul = [[self._mul_slow(a, b) for b in range(q)] for a in range(q)]
        inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if mul[a][b] == 1:
                    inv[a] = b
                    break
        return add, neg, mul, inv

    def add(self, a, b):
        return self._tables[0][a][b]

    def neg(self, a):
        return self._tables[1][a]

    def mul(self, a, b):
        return self._tables[2][a][b]

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self._tables[3][a]

    def from_int(self, n: int):
        return n % self.p

    def coerce(self, value):
        if isinstance(value, Scalar):
            _check_same(self, value.field)
            return value.value
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, str):
            return PrimeField(self.p).coerce(value)
        if isinstance(value, (list, tuple)):
            return self.from_coeffs(value)
        raise FieldError(f"cannot interpret {value!r} in {self}")

    def elements(self):
        return list(range(self.order))

    def encode(self, a):
        return list(self.to_coeffs(a))

    def decode(self, obj):
        return self.coerce(obj)

    def to_json(self) -> dict:
        return {"type": "GF", "p": self.p, "deg": self.k, "min_poly": list(self.min_poly)}

    @property
    def gen(self) -> int:
        """The class of ``t``."""
        return self.p


QQ = Rationals()


def GF(p: int, k: int = 1, min_poly: Sequence[int] | None = None) -> Field:
    if k == 1:
        return PrimeField(p)
    if min_poly is None:
        min_poly = find_irreducible(p, k)
    return ExtensionField(p, k, tuple(min_poly))


def field_from_json(obj: dict) -> Field:
    kind = obj.get("type")
    if kind == "Q":
        return QQ
    if kind == "GF":
        p = int(obj["p"])
        k = int(obj.get("deg", 1))
        return GF(p, k, obj.get("min_poly"))
    raise FieldError(f"unknown field descriptor {obj!r}")


def field_from_name(name: str) -> Field:
    """Parse ``Q``, ``gf5``, ``GF(5)``, ``gf4`` (= GF(2^2)), ``GF(3^2)``."""
    s = name.strip().lower().replace("(", "").replace(")", "")
    if s in ("q", "qq", "rationals"):
        return QQ
    if not s.startswith("gf"):
        raise FieldError(f"unknown field {name!r}")
    s = s[2:]
    if "^" in s:
        p, k = s.split("^")
        return GF(int(p), int(k))
    q = int(s)
    for p in range(2, q + 1):
        if q % p == 0:
            k, r = 0, q
            while r % p == 0:
                r //= p
                k += 1
            if r != 1:
                break
            return GF(p, k)
    raise FieldError(f"{q} is not a prime power")


def _check_same(f: Field, g: Field):
    if f != g:
        raise MixedFields(f"{f} vs {g}")


class Scalar:
    """An immutable field element with its field attached."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, *_):
        raise AttributeError("Scalar is immutable")

    @property
    def payload(self):
        if isinstance(self.field, ExtensionField):
            return self.field.to_coeffs(self.value)
        return self.value

    def _other(self, other):
        if isinstance(other, Scalar):
            _check_same(self.field, other.field)
            return other.value
        return self.field.coerce(other)

    def __add__(self, other):
        return Scalar(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return Scalar(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return Scalar(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return Scalar(self.field, self.field.div(self.value, self._other(other)))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return Scalar(self.field, self.field.pow(self.value, e))

    def inverse(self):
        return Scalar(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        try:
            return self.value == self.field.coerce(other)
        except FieldError:
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return not self.field.is_zero(self.value)

    def __repr__(self):
        return f"{self.field}({self.field.encode(self.value)!r})"


def field_add(a: Scalar, b: Scalar) -> Scalar:
    return a + b


def field_mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def field_neg(a: Scalar) -> Scalar:
    return -a


def field_inv(a: Scalar) -> Scalar:
    return a.inverse()


def field_pow(a: Scalar, e: int) -> Scalar:
    return a**e


def pth_root_raw(f: Field, a):
    """Inverse Frobenius on a raw payload: b with b^p = a."""
    if f.characteristic == 0:
        raise NotPositiveCharacteristic(f"{f} has characteristic 0")
    # Frobenius has order k on GF(p^k), so its inverse is x -> x^(p^(k-1)).
    return f.pow(a, f.characteristic ** (f.degree - 1))


def pth_root(a: Scalar) -> Scalar:
    return Scalar(a.field, pth_root_raw(a.field, a.value))


def enumerate_field(f: Field) -> Iterator[Scalar]:
    """All elements, zero first, ordered by payload index."""
    for a in f.elements():
        yield Scalar(f, a)
