import random
from fractions import Fraction

import pytest

from spin7.scalars import SQRT3, SQRT5, SQRT15, Scalar, rational


def test_square_roots_multiply_into_the_field():
    assert SQRT3 * SQRT3 == Scalar(3)
    assert SQRT5 * SQRT5 == Scalar(5)
    assert SQRT3 * SQRT5 == SQRT15
    assert SQRT15 * SQRT15 == Scalar(15)


def test_conjugate_products_collapse_to_rationals():
    assert (1 + SQRT3) * (1 - SQRT3) == Scalar(-2)
    assert (SQRT15 * rational(1, 5)) ** 2 == rational(3, 5)
    assert (2 + SQRT5) * (2 - SQRT5) == Scalar(-1)


def test_field_axioms_on_random_triples():
    rng = random.Random(0)

    def pick():
        return Scalar(*(Fraction(rng.randint(-9, 9),
                                 rng.randint(1, 9)) for _ in range(4)))

    for _ in range(1000):
        a, b, c = pick(), pick(), pick()
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a and a * b == b * a


def test_division_inverts_multiplication():
    rng = random.Random(1)
    for _ in range(50):
        a = Scalar(*(Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                     for _ in range(4)))
        b = Scalar(rng.randint(1, 5), rng.randint(-3, 3),
                   rng.randint(-3, 3), rng.randint(-3, 3))
        if b.is_zero:
            continue
        assert (a / b) * b == a


def test_division_by_zero_is_a_hard_error():
    with pytest.raises(ZeroDivisionError):
        Scalar(1) / Scalar(0)


def test_rational_embedding():
    a = Scalar(Fraction(3, 2))
    assert a.is_rational and a.rational_part() == Fraction(3, 2)
    assert not SQRT3.is_rational
    assert rational(7, 3) + rational(2, 3) == Scalar(3)


def test_string_round_trip():
    samples = [Scalar(0), Scalar(1), Scalar(-1), rational(1, 2),
               SQRT3, -1 * SQRT5, SQRT15 * rational(2, 7),
               rational(1, 2) - 3 * SQRT5 + SQRT15,
               1 + SQRT3 + SQRT5 + SQRT15]
    for v in samples:
        assert Scalar.parse(str(v)) == v


def test_parse_rejects_garbage():
    for text in ("", "sqrt7", "1//2", "2**2", "sqrt3 sqrt5"):
        with pytest.raises(ValueError):
            Scalar.parse(text)


def test_exact_sign_determination():
    assert (Scalar(4) - SQRT15).sign() > 0
    assert (SQRT15 - Scalar(4)).sign() < 0
    assert Scalar(0).sign() == 0
    # close call: sqrt3 + sqrt5 against sqrt15 - 1/7
    assert (SQRT3 + SQRT5 - SQRT15 + rational(1, 7)).sign() > 0
