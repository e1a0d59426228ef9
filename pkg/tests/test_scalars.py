from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from starinv.scalars import (
    QI,
    QQ,
    GaussianRational,
    PrimeField,
    is_prime,
    parse_rational,
)

fractions = st.fractions(min_value=-10**6, max_value=10**6, max_denominator=10**6)
gaussians = st.builds(GaussianRational, fractions, fractions)


def test_is_prime_small_values():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert not is_prime(1)
    assert not is_prime(91)  # 7 * 13


def test_parse_rational_forms():
    assert parse_rational("3") == Fraction(3)
    assert parse_rational("-3") == Fraction(-3)
    assert parse_rational("1/2") == Fraction(1, 2)
    assert parse_rational("-4/6") == Fraction(-2, 3)


@pytest.mark.parametrize("bad", ["1.5", "1/0", "a", "--1", "1/-2", "", "1/2/3", "+1"])
def test_parse_rational_rejects_malformed(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


@given(fractions)
def test_rational_format_parse_round_trip(x):
    assert parse_rational(QQ.format(x)) == x


@given(gaussians)
def test_gaussian_format_parse_round_trip(z):
    assert QI.parse(QI.format(z)) == z


def test_gaussian_parse_accepts_bare_real_part():
    assert QI.parse("3/4") == GaussianRational(Fraction(3, 4), Fraction(0))
    with pytest.raises(ValueError):
        QI.parse("1,2,3")


@given(gaussians, gaussians)
def test_gaussian_conjugation_is_anti_multiplicative(a, b):
    assert (a * b).conjugate() == b.conjugate() * a.conjugate()
    assert a.conjugate().conjugate() == a
    assert (a + b).conjugate() == a.conjugate() + b.conjugate()


@given(gaussians)
def test_gaussian_inverse(z):
    if not z:
        with pytest.raises(ZeroDivisionError):
            z.inverse()
    else:
        assert z * z.inverse() == QI.one()


def test_gaussian_norm_is_conjugate_product():
    z = GaussianRational(Fraction(3), Fraction(-4))
    assert z * z.conjugate() == GaussianRational(Fraction(25), Fraction(0))


def test_prime_field_requires_prime_modulus():
    with pytest.raises(ValueError):
        PrimeField(6)
    with pytest.raises(ValueError):
        PrimeField(1)


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
def test_prime_field_inverses(p):
    f = PrimeField(p)
    for a in range(1, p):
        assert f.mul(a, f.inv(a)) == 1
    with pytest.raises(ZeroDivisionError):
        f.inv(0)


def test_prime_field_parse_range():
    f = PrimeField(5)
    assert f.parse("4") == 4
    with pytest.raises(ValueError):
        f.parse("5")
    with pytest.raises(ValueError):
        f.parse("-1")


@given(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4))
def test_prime_field_ring_axioms(a, b, c):
    f = PrimeField(5)
    assert f.add(a, b) == f.add(b, a)
    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    assert f.add(a, f.neg(a)) == 0


def test_field_labels():
    assert QQ.label == "Q"
    assert QI.label == "QI"
    assert PrimeField(7).label == "GF 7"
    assert PrimeField(7).size == 7
    assert QQ.size is None


def test_coercion_canonicalizes_and_rejects_floats():
    assert QQ.coerce(3) == Fraction(3)
    assert QI.coerce(2) == GaussianRational(Fraction(2), Fraction(0))
    assert QI.coerce(QI.one()) == QI.one()
    assert PrimeField(5).coerce(4) == 4
    with pytest.raises(TypeError):
        QQ.coerce(0.5)
    with pytest.raises(TypeError):
        QI.coerce(0.5)
    with pytest.raises(TypeError):
        GaussianRational(0.5, 0)
    with pytest.raises(TypeError):
        PrimeField(5).coerce(Fraction(1))
    with pytest.raises(ValueError):
        PrimeField(5).coerce(5)
