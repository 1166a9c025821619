import pytest

from spin7.curvature import (CASE_HOLONOMY, CurvatureTensor,
                             bianchi_dim_positive, bianchi_space, build_rc,
                             case_operator, cyclic_residue, dyad,
                             vanishing_constraints)
from spin7.exterior import form
from spin7.liealg import algebra
from spin7.scalars import Scalar, rational
from spin7.structure import FAMILIES, diagonal


def test_single_dyad_tensor_entries_and_trace():
    r = CurvatureTensor([dyad(1, form("e_12"))])
    assert r.is_symmetric()
    assert r.entry(1, 2, 1, 2) == Scalar(1)
    assert r.entry(2, 1, 1, 2) == Scalar(-1)
    assert r.entry(1, 2, 2, 1) == Scalar(-1)
    assert r.entry(1, 3, 1, 3).is_zero
    assert diagonal(r.ricci()) == [Scalar(v)
                                   for v in (-1, -1, 0, 0, 0, 0, 0, 0)]


def test_mixed_dyads_detect_asymmetry():
    r = CurvatureTensor([dyad(1, form("e_12"), form("e_34"))])
    assert not r.is_symmetric()
    sym = CurvatureTensor([dyad(1, form("e_12"), form("e_34")),
                           dyad(1, form("e_34"), form("e_12"))])
    assert sym.is_symmetric()


def test_bianchi_space_members_satisfy_the_plain_identity():
    members = bianchi_space(algebra("r+su2"))
    assert len(members) == 5
    assert cyclic_residue(members[0])
    assert bianchi_space(algebra("t2")) == []


def test_bianchi_dimension_predicate_matches_space():
    assert bianchi_dim_positive("r+su2")
    assert not bianchi_dim_positive("t2")


def test_operators_fail_plain_bianchi_but_pass_with_torsion():
    rc = build_rc("5.2.2", {"a1": 1})
    t = FAMILIES["5.2-I"].torsion({"a1": 1})
    assert not cyclic_residue(rc)
    assert cyclic_residue(rc, t)


def test_case_operator_weights_appear_in_entries():
    r = case_operator("5.1.1", rational(1, 2), Scalar(0))
    assert not r.is_zero()
    r2 = case_operator("5.1.1", Scalar(0), Scalar(0))
    assert r2.is_zero()


def test_constraint_flags_depend_on_the_holonomy():
    still_r1, still_r2 = vanishing_constraints("5.1.1", algebra("r+su2c"))
    assert (still_r1, still_r2) == (False, False)
    dropped_r1, dropped_r2 = vanishing_constraints("5.1.1", algebra("su2c"))
    assert (dropped_r1, dropped_r2) == (True, False)


def test_build_rc_validates_input():
    with pytest.raises(KeyError):
        build_rc("9.9", {"a1": 1})
    with pytest.raises(ValueError):
        build_rc("5.1.2", {"a1": 1, "b1": 1, "b2": 0})


def test_every_case_has_a_holonomy_label():
    for case, name in CASE_HOLONOMY.items():
        assert algebra(name)
        rc = build_rc(case, _witness(case))
        assert rc.range_inside(algebra(name))


def _witness(case):
    if case in ("5.1.1", "5.1.2"):
        return {"a1": 1, "b1": 0, "b2": 0}
    if case in ("5.2.1", "5.2.2"):
        return {"a1": 1}
    return {"a1": 1, "a2": 1, "b1": 1}
