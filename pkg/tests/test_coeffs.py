import pytest
from hypothesis import given, strategies as st

from heckedem.coeffs import (
    GenericScalar,
    build_tower,
    discrete_log,
)

scalars = st.builds(
    GenericScalar,
    st.lists(st.integers(min_value=-50, max_value=50), min_size=0, max_size=5),
)


@given(scalars, scalars, scalars)
def test_generic_scalar_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a


def test_generic_scalar_normalization():
    assert GenericScalar([0, 0, 0]) == GenericScalar()
    assert GenericScalar([1, 2, 0]) == GenericScalar([1, 2])
    assert GenericScalar([1]).degree() == 0


def test_generic_scalar_evaluate():
    # 2 + 3q at q = 5
    assert GenericScalar([2, 3]).evaluate(5) == 17


def test_tower_3_1_matches_known_values():
    t = build_tower(3, 1)
    assert t.modulus_2f == (1, 0, 1)  # x^2 + 1
    assert t.generator == (1, 1)  # g = x + 1
    # g has order 8: g^4 = -1
    assert t.gen_power(4) == t.from_int(-1, "ext")
    assert t.gen_power(8) == t.one("ext")


def test_frobenius_of_generator():
    t = build_tower(3, 1)
    assert t.gen().frobenius() == t.gen_power(3)
    # frobenius is an involution with fixed field GF(q)
    g = t.gen()
    assert g.frobenius().frobenius() == g
    assert not g.in_base_field()
    assert t.gen_power(4).in_base_field()  # -1 is in GF(3)


def test_discrete_log():
    t = build_tower(3, 1)
    assert discrete_log(t.gen()) == 1
    assert discrete_log(t.one("ext")) == 0
    assert discrete_log(t.from_int(2, "ext")) == 4
    for k in range(8):
        assert discrete_log(t.gen_power(k)) == k
    with pytest.raises(ValueError):
        discrete_log(t.zero("ext"))


def test_tower_rejects_bad_p():
    with pytest.raises(ValueError, match="p must be odd"):
        build_tower(2, 1)
    with pytest.raises(ValueError, match="not prime"):
        build_tower(9, 1)
    with pytest.raises(ValueError, match="guard"):
        build_tower(3, 8)


def test_field_arithmetic_and_inverse():
    t = build_tower(5, 1)
    for k in range(1, 24):
        x = t.gen_power(k)
        assert x * x.inverse() == t.one("ext")
    # embedding of GF(q) is fixed by frobenius
    for x in t.base_elements():
        assert x.frobenius() == x


def test_tower_json():
    t = build_tower(3, 1)
    assert t.to_json() == {"p": 3, "f": 1, "modulus_2f": [1, 0, 1], "generator": [1, 1]}
