from spin7.clifford import (BASE_SPINOR, N_SPIN, act, basis_spinor,
                            gamma_apply, spinor_add, spinor_eq, spinor_inner,
                            spinor_scale, spinor_sub)
from spin7.exterior import CAYLEY, DIM, form
from spin7.scalars import Scalar, rational


def test_generators_square_to_minus_one():
    for i in range(1, DIM + 1):
        for k in range(N_SPIN):
            s = basis_spinor(k)
            assert spinor_eq(gamma_apply(i, gamma_apply(i, s)),
                             spinor_scale(s, Scalar(-1)))


def test_distinct_generators_anticommute():
    for i, j in ((1, 2), (3, 7), (2, 8), (5, 6)):
        for k in range(N_SPIN):
            s = basis_spinor(k)
            lhs = gamma_apply(i, gamma_apply(j, s))
            rhs = gamma_apply(j, gamma_apply(i, s))
            assert spinor_eq(spinor_add(lhs, rhs), {})


def test_basis_spinors_are_orthonormal():
    for a in range(N_SPIN):
        for b in range(N_SPIN):
            want = Scalar(1 if a == b else 0)
            assert spinor_inner(basis_spinor(a), basis_spinor(b)) == want


def test_form_action_composes_generator_actions():
    s = basis_spinor(5)
    via_form = act(form("e_27"), s)
    via_gammas = gamma_apply(2, gamma_apply(7, s))
    assert spinor_eq(via_form, via_gammas)
    mixed = act(form("e_135 + 2*e_2"), s)
    by_hand = spinor_add(
        gamma_apply(1, gamma_apply(3, gamma_apply(5, s))),
        spinor_scale(gamma_apply(2, s), Scalar(2)))
    assert spinor_eq(mixed, by_hand)


def test_base_spinor_is_calibrated():
    assert spinor_eq(act(CAYLEY, BASE_SPINOR),
                     spinor_scale(BASE_SPINOR, Scalar(-14)))


def test_spinor_arithmetic_helpers():
    x = {0: Scalar(1), 3: rational(1, 2)}
    y = {3: rational(1, 2), 7: Scalar(-2)}
    total = spinor_add(x, y)
    assert total == {0: Scalar(1), 3: Scalar(1), 7: Scalar(-2)}
    assert spinor_sub(total, y) == x
    assert spinor_sub(x, x) == {}
    assert spinor_scale(x, Scalar(0)) == {}
