from spin7 import linalg
from spin7.scalars import SQRT3, Scalar, rational


def _rows(dense):
    return [{j: Scalar(v) for j, v in enumerate(row) if v}
            for row in dense]


def test_solve_recovers_a_known_solution():
    rows = _rows([[1, 2], [3, 4]])
    sol = linalg.solve(rows, [Scalar(5), Scalar(11)])
    assert sol is not None
    assert sol.get(0, Scalar(0)) == Scalar(1)
    assert sol.get(1, Scalar(0)) == Scalar(2)


def test_solve_reports_inconsistency():
    rows = _rows([[1, 1], [2, 2]])
    assert linalg.solve(rows, [Scalar(1), Scalar(3)]) is None


def test_solve_handles_irrational_pivots():
    rows = [{0: SQRT3, 1: Scalar(1)}, {0: Scalar(1), 1: -1 * SQRT3}]
    sol = linalg.solve(rows, [Scalar(3) + SQRT3, Scalar(0)])
    assert sol is not None
    x = sol.get(0, Scalar(0))
    y = sol.get(1, Scalar(0))
    assert SQRT3 * x + y == Scalar(3) + SQRT3
    assert x - SQRT3 * y == Scalar(0)


def test_rank_and_nullspace_are_complementary():
    rows = _rows([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    r = linalg.rank(rows)
    null = linalg.nullspace(rows, 3)
    assert r == 2
    assert len(null) == 1
    vec = null[0]
    for row in rows:
        total = Scalar(0)
        for j, c in row.items():
            total = total + c * vec.get(j, Scalar(0))
        assert total.is_zero


def test_in_span_and_span_equal():
    basis = _rows([[1, 0, 1], [0, 1, 1]])
    assert linalg.in_span(basis, {0: Scalar(2), 1: Scalar(3), 2: Scalar(5)})
    assert not linalg.in_span(basis, {0: Scalar(1)})
    rotated = _rows([[1, 1, 2], [1, -1, 0]])
    assert linalg.span_equal(basis, rotated)


def test_matvec_applies_sparse_rows():
    rows = _rows([[0, 2], [1, 0]])
    out = linalg.matvec(rows, {0: rational(1, 2), 1: Scalar(3)})
    assert out[0] == Scalar(6)
    assert out[1] == rational(1, 2)
