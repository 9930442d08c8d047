from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quantump2.errors import (DivisionByZero, FieldMismatch, NonPrimeCharacteristic,
                              ReducibleMinpoly, UnverifiableMinpoly)
from quantump2.exactfield import Field, format_scalar, make_field, scalar_arith
from quantump2.parser import parse_scalar

from strategies import field_and_scalars, fields

QI = make_field(0, (1, 0, 1))
QW = make_field(0, (1, -1, 1))
F7 = make_field(7)


class TestConstruction:
    def test_examples(self):
        assert QI.degree == 2 and QI.characteristic == 0
        assert F7.degree == 1 and F7.order == 7
        w = QW.gen()
        assert w * w - w + 1 == 0

    @pytest.mark.parametrize("char", [4, 6, 9, 15, -1])
    def test_non_prime_characteristic(self, char):
        with pytest.raises(NonPrimeCharacteristic):
            make_field(char)

    @pytest.mark.parametrize("char, poly", [(0, (-1, 0, 1)), (5, (1, 0, 1)), (2, (1, 0, 1)),
                                            (0, (-8, 0, 0, 1)), (7, (1, 0, 0, 1))])
    def test_reducible_minpoly(self, char, poly):
        with pytest.raises(ReducibleMinpoly):
            make_field(char, poly)

    def test_degree_four_needs_trust(self):
        with pytest.raises(UnverifiableMinpoly):
            make_field(0, (2, 0, 0, 0, 1))
        K = make_field(0, (2, 0, 0, 0, 1), trusted=True)
        t = K.gen()
        assert t ** 4 == -2

    @pytest.mark.parametrize("bad", [(1, 0, 2), (1,), (1, 1)])
    def test_minpoly_shape(self, bad):
        with pytest.raises(ValueError):
            make_field(0, bad)

    def test_same_descriptor_same_arithmetic(self):
        a, b = make_field(0, (1, 0, 1)), make_field(0, (1, 0, 1))
        assert a == b and hash(a) == hash(b)
        assert a.gen() * a.gen() == b.gen() * b.gen()


class TestArithmetic:
    def test_inverse_in_gaussian_field(self):
        i = QI.gen()
        assert scalar_arith("inv", 1 + i) == (1 - i) / 2

    def test_inverse_mod_seven(self):
        assert scalar_arith("inv", F7(3)) == F7(5)

    def test_cube_root_square(self):
        w = QW.gen()
        assert scalar_arith("mul", w, w) == w - 1

    def test_division_by_zero(self):
        for K in (F7, QI, Field(0)):
            with pytest.raises(DivisionByZero):
                K.one() / K.zero()
            with pytest.raises(DivisionByZero):
                K.zero().inverse()

    def test_field_mismatch(self):
        with pytest.raises(FieldMismatch):
            F7(1) + Field(5)(1)
        with pytest.raises(FieldMismatch):
            scalar_arith("eq", QI.gen(), QW.gen())
        with pytest.raises(FieldMismatch):
            QI.gen() * QW.gen()

    def test_prime_field_scalars_promote(self):
        F49 = make_field(7, (1, 0, 1))
        t = F49.gen()
        assert F7(3) * t == 3 * t
        assert t + F7(2) == F7(2) + t
        assert (F7(1) - t) + t == F49.one()

    def test_scalar_arith_dispatch(self):
        a, b = F7(3), F7(4)
        assert scalar_arith("add", a, b) == 0
        assert scalar_arith("sub", a, b) == F7(6)
        assert scalar_arith("div", a, b) * b == a
        assert scalar_arith("neg", a) == F7(4)
        assert scalar_arith("eq", a, F7(10))
        with pytest.raises(ValueError):
            scalar_arith("pow", a, b)

    def test_fraction_reduction_mod_p(self):
        assert F7(Fraction(1, 2)) == F7(4)
        with pytest.raises(DivisionByZero):
            F7(Fraction(1, 7))


class TestText:
    @pytest.mark.parametrize("text, expected", [("3/2*t - 1", "-1 + 3/2*t"), ("t*t", "-1"),
                                                ("-(1 + t)/2", "-1/2 - 1/2*t"), ("0", "0")])
    def test_canonical_text(self, text, expected):
        assert format_scalar(parse_scalar(text, QI)) == expected

    @given(field_and_scalars(count=1))
    def test_round_trip(self, data):
        field, (a,) = data
        assert parse_scalar(format_scalar(a), field) == a


class TestAxioms:
    @given(field_and_scalars(count=3))
    def test_ring_axioms(self, data):
        _, (a, b, c) = data
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a and a * b == b * a
        assert a - a == 0

    @given(field_and_scalars(count=1, nonzero=True))
    def test_inverse(self, data):
        _, (a,) = data
        assert a * a.inverse() == 1
        assert a / a == 1

    @given(fields)
    def test_characteristic(self, field):
        p = field.characteristic
        one = field.one()
        if p:
            assert one * p == 0
            for n in range(1, p):
                assert one * n != 0
        else:
            assert all(one * n != 0 for n in range(1, 50))

    @given(fields)
    def test_generator_satisfies_minpoly(self, field):
        if field.minpoly is None:
            return
        t = field.gen()
        value = sum((t ** k * c for k, c in enumerate(field.minpoly)), field.zero())
        assert value == 0

    @given(st.sampled_from([Field(3), Field(5), Field(3, (1, 0, 1))]))
    def test_enumeration_has_field_order(self, field):
        elems = list(field.elements())
        assert len(elems) == len(set(elems)) == field.order
