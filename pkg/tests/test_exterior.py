import random
from math import comb

import pytest

from spin7.exterior import (CAYLEY, DIM, E, KAHLER, VOL, FormSyntaxError,
                            MultiVector, contract, evaluate, form,
                            format_form, from_coords, hodge, inner, monomials,
                            norm_sq, parse_form, sigma_t, to_coords, wedge)
from spin7.scalars import SQRT3, Scalar, rational


def _random_form(rng, grade, terms=6):
    out = MultiVector()
    for idx in rng.sample(monomials(grade), terms):
        out = out + MultiVector.monomial(idx) * rng.randint(-4, 4)
    return out


def test_monomial_counts_per_grade():
    for k in range(DIM + 1):
        assert len(monomials(k)) == comb(DIM, k)


def test_wedge_is_graded_anticommutative():
    rng = random.Random(2)
    for _ in range(10):
        a = _random_form(rng, 1, terms=4)
        b = _random_form(rng, 1, terms=4)
        c = _random_form(rng, 2)
        d = _random_form(rng, 3)
        assert wedge(a, b) == -1 * wedge(b, a)
        assert wedge(c, d) == wedge(d, c)
        assert wedge(wedge(a, c), d) == wedge(a, wedge(c, d))


def test_volume_and_hodge_involution():
    assert VOL == MultiVector.monomial(tuple(range(1, DIM + 1)))
    rng = random.Random(3)
    for k in (1, 2, 3, 4):
        a = _random_form(rng, k)
        sign = (-1) ** (k * (DIM - k))
        assert hodge(hodge(a)) == a * sign


def test_hodge_pairs_with_the_inner_product():
    rng = random.Random(4)
    for k in (2, 3):
        a = _random_form(rng, k)
        b = _random_form(rng, k)
        assert wedge(a, hodge(b)) == VOL * inner(a, b)


def test_contraction_is_adjoint_to_wedge():
    rng = random.Random(5)
    for _ in range(8):
        x = _random_form(rng, 1, terms=4)
        a = _random_form(rng, 3)
        b = _random_form(rng, 2)
        assert inner(contract(x, a), b) == inner(a, wedge(x, b))


def test_evaluate_against_coordinates():
    a = form("2*e_135 - e_236")
    assert evaluate(a, [E[1], E[3], E[5]]) == Scalar(2)
    assert evaluate(a, [E[3], E[1], E[5]]) == Scalar(-2)
    assert evaluate(a, [E[2], E[3], E[6]]) == Scalar(-1)
    assert evaluate(a, [E[1], E[2], E[4]]).is_zero


def test_coordinate_round_trip():
    rng = random.Random(6)
    a = _random_form(rng, 3, terms=10)
    assert from_coords(to_coords(a, 3), 3) == a


def test_calibration_form_is_self_dual():
    assert hodge(CAYLEY) == CAYLEY
    assert wedge(CAYLEY, CAYLEY) == VOL * Scalar(14)
    assert norm_sq(CAYLEY) == Scalar(14)


def test_quadratic_shadow_of_single_monomials_vanishes():
    # each contraction e_i -| t of a decomposable 3-form repeats a factor
    for text in ("e_567", "e_127", "3*e_345"):
        assert sigma_t(form(text)).is_zero


def test_quadratic_shadow_of_a_mixed_form_is_nonzero():
    t = form("e_127 + e_347 - 2*e_567") + form(
        "e_246 - e_145 - e_235 - e_136")
    assert not sigma_t(t).is_zero


def test_parse_and_format_round_trip():
    samples = ["e_135 - e_146 - e_236 - e_245",
               "2 + 1/2*e_12 - sqrt3*e_34 + (1 + sqrt5)*e_56",
               "7*e_567",
               "0"]
    for text in samples:
        assert format_form(parse_form(text)) == text


def test_parse_errors_carry_offsets():
    cases = [("e_135 - e_2w45", 8),
             ("e_12)", 4),
             ("(e_12", 0),
             ("e_12*e_34", 5),
             ("", 0)]
    for text, offset in cases:
        with pytest.raises(FormSyntaxError) as err:
            parse_form(text)
        assert err.value.offset == offset
        assert f"offset {offset}" in str(err.value)


def test_mixed_grade_coordinate_access_is_rejected():
    with pytest.raises(ValueError):
        to_coords(form("e_12 + e_123"), 2)


def test_scalar_multiples_and_zero_cleanup():
    a = form("e_12") * SQRT3
    assert (a * SQRT3) == form("3*e_12")
    assert (a + -1 * a).is_zero
    assert not (a + -1 * a).terms
