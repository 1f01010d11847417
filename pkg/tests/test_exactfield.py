from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from solvlie.exactfield import (
    GF, QQ, DivisionByZero, FieldError, MixedFields, NotPositiveCharacteristic, Scalar,
    enumerate_field, field_from_json, field_from_name, find_irreducible, is_irreducible, pth_root,
)

from conftest import field_and_elements, field_elements, SMALL_FIELDS


def test_prime_field_add():
    assert GF(5)(2) + GF(5)(4) == GF(5)(1)


def test_prime_field_inverse():
    assert GF(7)(3).inverse() == GF(7)(5)


def test_rational_sum():
    assert QQ(Fraction(1, 2)) + QQ(Fraction(1, 3)) == QQ(Fraction(5, 6))


def test_zero_has_no_inverse():
    with pytest.raises(DivisionByZero):
        GF(5)(0).inverse()
    with pytest.raises(ZeroDivisionError):
        QQ(0).inverse()


def test_mixing_fields_rejected():
    with pytest.raises(MixedFields):
        GF(5)(1) + GF(7)(1)


def test_gf_needs_prime():
    with pytest.raises(FieldError):
        GF(4)


def test_pth_root_prime_field():
    assert pth_root(GF(3)(2)) == GF(3)(2)
    for p in (2, 3, 5, 7):
        assert pth_root(GF(p)(0)) == GF(p)(0)


def test_pth_root_gf4_generator():
    # t^2 = t + 1 in GF(2)[t]/(t^2 + t + 1), so sqrt(t) = t + 1
    F = GF(2, 2)
    assert F.to_json()["min_poly"] == [1, 1, 1]
    root = pth_root(Scalar(F, F.gen))
    assert root.payload == (1, 1)
    assert root * root == Scalar(F, F.gen)


def test_pth_root_needs_positive_characteristic():
    with pytest.raises(NotPositiveCharacteristic):
        pth_root(QQ(2))


def test_enumeration_small_fields():
    assert [s.value for s in enumerate_field(GF(2))] == [0, 1]
    assert [s.value for s in enumerate_field(GF(3))] == [0, 1, 2]
    elems = list(enumerate_field(GF(2, 2)))
    assert len(elems) == 4 and not elems[0]
    assert len(set(elems)) == 4


def test_enumeration_of_q_refused():
    with pytest.raises(FieldError):
        QQ.elements()


def test_field_names():
    assert field_from_name("gf4") == GF(2, 2)
    assert field_from_name("GF(3^2)") == GF(3, 2)
    assert field_from_name("gf5") == GF(5)
    assert field_from_name("Q") is QQ
    with pytest.raises(FieldError):
        field_from_name("gf6")


@pytest.mark.parametrize("f", SMALL_FIELDS + [GF(3, 2), QQ])
def test_field_json_round_trip(f):
    assert field_from_json(f.to_json()) == f


@pytest.mark.parametrize("p,k", [(2, 2), (2, 3), (3, 2), (5, 2), (3, 3)])
def test_found_polynomials_are_irreducible(p, k):
    poly = find_irreducible(p, k)
    assert len(poly) == k + 1 and poly[-1] == 1
    assert is_irreducible(p, poly)


def test_reducible_polynomial_detected():
    assert not is_irreducible(2, (1, 0, 1))  # t^2 + 1 = (t + 1)^2


@given(field_and_elements(count=3))
def test_ring_axioms(data):
    f, (a, b, c) = data
    x, y, z = f(a), f(b), f(c)
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == f(0)
    assert x * f(1) == x


@given(field_and_elements(count=1))
def test_inverse_law(data):
    f, (a,) = data
    x = f(a)
    if x:
        assert x * x.inverse() == f(1)
        assert x / x == f(1)


@given(st.sampled_from(SMALL_FIELDS + [GF(3, 2)]), st.data())
def test_frobenius_inverts_pth_root(f, data):
    a = Scalar(f, data.draw(field_elements(f)))
    assert pth_root(a) ** f.characteristic == a


@given(st.sampled_from(SMALL_FIELDS + [GF(3, 2)]), st.data())
def test_power_by_order_is_identity(f, data):
    a = Scalar(f, data.draw(field_elements(f)))
    assert a ** f.order == a


@given(st.sampled_from(SMALL_FIELDS + [GF(3, 2), QQ]), st.data())
def test_encode_decode_round_trip(f, data):
    a = data.draw(field_elements(f))
    assert f.decode(f.encode(a)) == a
