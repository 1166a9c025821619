import random

import pytest

from spin7.clifford import BASE_SPINOR, basis_spinor
from spin7.exterior import (CAYLEY, E, MultiVector, contract, form, inner,
                            monomials, norm_sq)
from spin7.liealg import algebra
from spin7.scalars import Scalar, rational
from spin7.structure import (FAMILIES, contraction_identity, diagonal,
                             is_diagonal, lee_form, lee_norm_identity,
                             project_8_48, ricci_solver, scal_pair,
                             sigma_report, sigma_identity_check,
                             square_condition_holds, w_class)


def _random_3form(rng, terms=8):
    out = MultiVector()
    for idx in rng.sample(monomials(3), terms):
        out = out + MultiVector.monomial(idx) * rng.randint(-3, 3)
    return out


def test_type_projection_splits_orthogonally():
    rng = random.Random(11)
    for _ in range(5):
        t = _random_3form(rng)
        small, large = project_8_48(t)
        assert small + large == t
        assert inner(small, large).is_zero
        again_small, again_large = project_8_48(small)
        assert again_small == small and again_large.is_zero


def test_vector_type_forms_project_onto_themselves():
    t = contract(E[3], CAYLEY)
    small, large = project_8_48(t)
    assert small == t and large.is_zero
    assert w_class(t) == "W2"


def test_w_classes():
    assert w_class(MultiVector()) == "W0"
    assert w_class(FAMILIES["5.4"].torsion({"b1": 1})) == "W1"
    assert w_class(FAMILIES["5.1"].torsion({"a1": 1, "b1": 2, "b2": 3})) == "W"


def test_dual_1form_norm_identity_sample():
    t = FAMILIES["5.1"].torsion({"a1": 1, "b1": -2, "b2": 1})
    assert lee_norm_identity(t)
    small, _ = project_8_48(t)
    theta = lee_form(t)
    assert norm_sq(theta) == rational(36, 7) * norm_sq(small)


def test_scalar_pair_consistency_sample():
    t = FAMILIES["5.3-I"].torsion({"a1": 1, "a2": 2, "b1": 3})
    scal_g, scal_c = scal_pair(t)
    assert scal_c == scal_g - rational(3, 2) * norm_sq(t)
    assert contraction_identity(t)


def test_contracted_square_identity_equals_square_condition():
    rng = random.Random(12)
    t = _random_3form(rng, terms=9)
    rep = sigma_report(t)
    assert rep["basis_identity"] == rep["basis_square"]
    assert rep["base_identity"] == rep["base_square"]


def test_family_torsion_satisfies_base_identity():
    t = FAMILIES["5.2-I"].torsion({"a1": 1})
    ok, count = sigma_identity_check(t)
    assert ok
    assert count == 4
    assert square_condition_holds(t, [BASE_SPINOR])
    assert not square_condition_holds(t, [basis_spinor(2)])


def test_ricci_solver_reproduces_closed_forms():
    fam = FAMILIES["5.4"]
    t = fam.torsion({"b1": 1})
    ric = ricci_solver(t, algebra(fam.iso_name))
    assert ric is not None and is_diagonal(ric)
    assert diagonal(ric) == [Scalar(v) for v in (0, 0, 0, 0, -4, -4, 0, 0)]
    assert diagonal(ric) == fam.ricci_diag({"b1": 1})


def test_ricci_solver_rejects_oversized_holonomy():
    t = FAMILIES["5.1"].torsion({"a1": 1, "b1": 0, "b2": 0})
    assert ricci_solver(t, algebra("su3")) is None


def test_family_parameter_validation():
    fam = FAMILIES["5.1"]
    with pytest.raises(KeyError):
        fam.torsion({"a1": 1})
    with pytest.raises(KeyError):
        fam.torsion({"a1": 1, "b1": 0, "b2": 0, "c9": 2})
    assert fam.torsion({"a1": 0, "b1": 0, "b2": 0}).is_zero


def test_family_generators_match_parameter_lists():
    for fam in FAMILIES.values():
        assert len(fam.params) == len(fam.generators)
        assert len(fam.ricci_diag({k: 1 for k in fam.params})) == 8
