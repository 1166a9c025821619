import pytest

from spin7.classify import (admissibility_table, admissible_pairs,
                            family_span_dims, flat_operator_locus,
                            phi_from_hermitian, reconstruct_lie_algebra,
                            run_recipe, splitting_check,
                            two_weight_vanishing_locus)
from spin7.curvature import build_rc
from spin7.exterior import CAYLEY, E
from spin7.liealg import algebra
from spin7.structure import FAMILIES


def test_recipe_rows_for_known_pairs():
    row = run_recipe("g2", "g2")
    assert row.admissible and row.k_nontrivial
    assert row.torsion_family == "5.1"
    assert "diag(12" in row.ricci_params

    flat = run_recipe("g2", "so3ir")
    assert flat.admissible and not flat.k_nontrivial

    gone = run_recipe("g2", "su3")
    assert not gone.admissible and gone.reason


def test_table_is_cached_and_complete():
    table = admissibility_table()
    assert table is not admissibility_table()
    assert [r.key() for r in table] == [r.key()
                                       for r in admissibility_table()]
    seen = {(r.iso, r.hol) for r in table}
    assert len(seen) == len(table)


def test_grouped_pairs_structure():
    grouped = admissible_pairs()
    assert set(grouped["g2"]["k_nonzero"]) == {"g2", "su2+su2c"}
    assert set(grouped["g2"]["k_zero"]) == {"r+su2c", "so3ir"}
    assert grouped["r+su2"]["k_zero"] == []


def test_two_weight_locus_eliminates_every_branch():
    for fam_id in ("5.3-I", "5.3-II"):
        branches = two_weight_vanishing_locus(fam_id)
        assert branches
        for branch in branches:
            assert branch["excluded"]
            assert branch["family"] == fam_id


def test_flat_locus_has_the_two_sign_branch():
    branches = flat_operator_locus()
    assert len(branches) == 3
    assert sorted(str(b["b2"]) for b in branches) == [
        "-7*sqrt(3)*b1/3", "0", "7*sqrt(3)*b1/3"]
    assert {str(b["a1"]) for b in branches} == {"-b1", "4*b1/3"}


def test_reconstruction_requires_enough_directions():
    t = FAMILIES["5.2-I"].torsion({"a1": 1})
    rc = build_rc("5.2.2", {"a1": 1})
    rec = reconstruct_lie_algebra(t, rc, algebra("t2"), dims=range(1, 8))
    assert rec.dim == 9 and rec.jacobi_ok
    with pytest.raises(ValueError):
        reconstruct_lie_algebra(t, rc, algebra("t2"), dims=range(1, 7))


def test_splitting_rejects_non_orthonormal_frames():
    t = FAMILIES["5.1"].torsion({"a1": 1, "b1": 0, "b2": 0})
    with pytest.raises(ValueError):
        splitting_check(t, [E[1], E[1]], [E[2], E[3]])
    with pytest.raises(ValueError):
        splitting_check(t, [2 * E[1]], [E[2]])


def test_splitting_accepts_the_full_frame():
    t = FAMILIES["5.1"].torsion({"a1": 1, "b1": 2, "b2": 0})
    res = splitting_check(t, [E[i] for i in range(1, 9)], [])
    assert res.holds and res.plus_part == t and res.minus_part.is_zero


def test_hermitian_data_rebuilds_the_calibration():
    assert phi_from_hermitian() == CAYLEY


def test_family_span_dimensions():
    dims = family_span_dims()
    assert dims == {"r+su2c": 3, "su3": 2, "so3": 4, "u2": 5,
                    "r+su2": 1, "g2": 1, "so3ir": 1, "su2+su2c": 2}
