import cmath
import json
import math
import random
from fractions import Fraction

import pytest

from modcat.numeric import (CycNum, LaurentPoly, PoleAtEpsilonError, QRatFn,
                            approx_eq, cyclotomic_polynomial, epsilon_power,
                            q_number, sqrt_of_int)


def random_cyc(rng, orders=(5, 8, 12, 24)):
    L = rng.choice(orders)
    acc = CycNum.zero()
    for _ in range(4):
        coeff = Fraction(rng.randrange(-6, 7), rng.randrange(1, 5))
        acc = acc + CycNum.root_of_unity(L, rng.randrange(L)) * coeff
    return acc


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_rational_embedding():
    x = CycNum.from_rational(Fraction(-7, 3))
    assert x.is_rational() and x.as_fraction() == Fraction(-7, 3)
    assert (x + Fraction(7, 3)).is_zero()


def test_exact_zero_only_in_canonical_form():
    # 1 + z + z^2 + z^3 + z^4 = 0 for the fifth root of unity
    acc = CycNum.zero()
    for e in range(5):
        acc = acc + CycNum.root_of_unity(5, e)
    assert acc.is_zero()


def test_field_axioms_randomized():
    rng = random.Random(101)
    for _ in range(40):
        a, b, c = (random_cyc(rng) for _ in range(3))
        assert (a + b) * c == a * c + b * c
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        if not a.is_zero():
            assert a * a.inverse() == CycNum.one()


def test_inverse_of_zero_rejected():
    with pytest.raises(ZeroDivisionError):
        CycNum.zero().inverse()


def test_conjugation():
    rng = random.Random(31)
    for _ in range(30):
        a = random_cyc(rng)
        assert a.conjugate().conjugate() == a
        assert abs(a.conjugate().to_complex()
                   - a.to_complex().conjugate()) < 1e-12
    i = CycNum.root_of_unity(4, 1)
    assert (CycNum.one() + i) * (CycNum.one() - i) == CycNum.from_rational(2)


def test_cross_order_arithmetic():
    half = CycNum.from_rational(Fraction(1, 2))
    quarter = CycNum.from_rational(Fraction(1, 4))
    assert (half + quarter).as_fraction() == Fraction(3, 4)
    z6 = CycNum.root_of_unity(6, 1)
    z4 = CycNum.root_of_unity(4, 1)
    v = z6 + z4
    assert abs(v.to_complex()
               - (cmath.exp(1j * cmath.pi / 3) + 1j)) < 1e-12
    assert v - z4 == z6


def test_epsilon_power_examples():
    assert epsilon_power(0, 1, 3) == CycNum.one()
    # A1 kappa=3: eps^(3/2) = i
    assert epsilon_power(Fraction(3, 2), 1, 3) == CycNum.root_of_unity(4, 1)
    # full turn
    assert epsilon_power(2 * 1 * 3, 1, 3) == CycNum.one()
    assert epsilon_power(2 * 3 * 5, 3, 5) == CycNum.one()


def test_epsilon_power_homomorphism():
    rng = random.Random(9)
    for _ in range(60):
        a = Fraction(rng.randrange(-30, 31), rng.randrange(1, 9))
        b = Fraction(rng.randrange(-30, 31), rng.randrange(1, 9))
        assert (epsilon_power(a, 2, 4) * epsilon_power(b, 2, 4)
                == epsilon_power(a + b, 2, 4))
        assert epsilon_power(a, 2, 4).conjugate() == epsilon_power(-a, 2, 4)


def test_epsilon_embedding_value():
    for kappa, m in [(3, 1), (4, 1), (5, 2), (6, 3)]:
        for num in range(-6, 7):
            a = Fraction(num, 2)
            got = epsilon_power(a, m, kappa).to_complex()
            want = cmath.exp(1j * cmath.pi * float(a) / (m * kappa))
            assert abs(got - want) < 1e-12


def test_zero_test_matches_float():
    rng = random.Random(77)
    for _ in range(60):
        a = random_cyc(rng)
        b = random_cyc(rng)
        diff = (a + b) - b - a
        assert diff.is_zero()
        assert a.is_zero() == (abs(a.to_complex()) < 1e-9)


def test_roots_of_unity_power_to_one():
    rng = random.Random(5)
    for _ in range(20):
        L = rng.choice([6, 8, 20, 36])
        x = CycNum.root_of_unity(L, rng.randrange(L))
        assert x ** L == CycNum.one()


def test_pow_negative():
    z = CycNum.root_of_unity(12, 5)
    assert z ** -1 == z.conjugate()
    assert z ** -3 == (z ** 3).inverse()


def test_sqrt_of_int():
    for n in (2, 3, 5, 7, 8, 12, 14, 45, 243):
        s = sqrt_of_int(n)
        assert (s * s).as_fraction() == n
        assert abs(s.to_complex() - math.sqrt(n)) < 1e-9
    with pytest.raises(ValueError):
        sqrt_of_int(0)


def test_cycnum_json_round_trip():
    rng = random.Random(15)
    for _ in range(20):
        x = random_cyc(rng)
        blob = json.dumps(x.to_json_obj())
        y = CycNum.from_json_obj(json.loads(blob))
        assert y == x
        assert json.dumps(y.to_json_obj()) == blob


# -- rational functions -------------------------------------------------------

def test_q_number_basics():
    assert q_number(0).is_zero()
    assert q_number(1) == QRatFn.one()
    two = q_number(2)
    assert two == QRatFn.monomial(2) + QRatFn.monomial(-2)
    assert q_number(-3) == -q_number(3)
    # d-weighted variant
    assert q_number(2, 2) == QRatFn.monomial(4) + QRatFn.monomial(-4)


def test_q_number_bar_symmetric():
    for n in range(1, 7):
        assert q_number(n).bar() == q_number(n)


def test_qratfn_field_ops():
    rng = random.Random(21)

    def rand_fn():
        num = LaurentPoly(rng.randrange(-3, 1),
                          tuple(Fraction(rng.randrange(-4, 5))
                                for _ in range(4)))
        den = LaurentPoly(0, (Fraction(rng.randrange(1, 5)),
                              Fraction(rng.randrange(0, 3)),
                              Fraction(1)))
        return QRatFn(num, den)

    for _ in range(30):
        f, g, h = rand_fn(), rand_fn(), rand_fn()
        assert (f + g) * h == f * h + g * h
        assert f - f == QRatFn.zero()
        if not f.is_zero():
            assert (f / f) == QRatFn.one()
        assert (f * g).bar() == f.bar() * g.bar()
        assert f.bar().bar() == f


def test_qratfn_reduction_canonical():
    # (v^2 - 1)/(v - 1) reduces to v + 1
    num = LaurentPoly(0, (Fraction(-1), Fraction(0), Fraction(1)))
    den = LaurentPoly(0, (Fraction(-1), Fraction(1)))
    f = QRatFn(num, den)
    assert f == QRatFn.monomial(1) + QRatFn.one()
    # denominator is monic with nonzero constant term
    g = QRatFn(LaurentPoly.constant(3), LaurentPoly(1, (Fraction(2),)))
    assert g.den == LaurentPoly.constant(1)
    assert g.num == LaurentPoly(-1, (Fraction(3, 2),))


def test_qratfn_eval_and_pole():
    assert q_number(2).eval_at_epsilon(1, 3).as_fraction() == 1
    assert (QRatFn.from_rational(Fraction(5, 3)).eval_at_epsilon(1, 4)
            .as_fraction() == Fraction(5, 3))
    # 1/[2] has a pole where [2] vanishes: kappa = 2 means eps = i, [2] = 0
    f = QRatFn.one() / q_number(2)
    with pytest.raises(PoleAtEpsilonError):
        f.eval_at_epsilon(1, 2)


def test_qratfn_eval_is_homomorphism():
    rng = random.Random(2)
    fns = [q_number(2), q_number(3) / q_number(2),
           QRatFn.monomial(1) + QRatFn.from_rational(Fraction(1, 3))]
    for f in fns:
        for g in fns:
            lhs = (f * g).eval_at_epsilon(1, 5)
            rhs = f.eval_at_epsilon(1, 5) * g.eval_at_epsilon(1, 5)
            assert lhs == rhs


def test_qratfn_json_round_trip():
    f = q_number(3) / q_number(2) + QRatFn.monomial(-3, Fraction(2, 7))
    blob = json.dumps(f.to_json_obj())
    g = QRatFn.from_json_obj(json.loads(blob))
    assert g == f
    assert json.dumps(g.to_json_obj()) == blob


def test_approx_eq_tolerance():
    assert approx_eq(1.0, 1.0 + 1e-12)
    assert not approx_eq(1.0, 1.1)
    assert approx_eq(1.0, 1.05, tol=0.1)
