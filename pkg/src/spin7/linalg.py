"""Exact linear algebra over Q(sqrt3, sqrt5).

Rows are sparse dicts {column: Scalar}.  Elimination pivots on the first
column holding a nonzero entry and keeps the form fully reduced, so ranks,
kernels and solution sets come out in a deterministic normal form.
"""

from __future__ import annotations

from .scalars import ONE, Scalar

Row = dict[int, Scalar]

_RHS = 1 << 60  # sentinel column for augmented systems; sorts after real columns


def _clean(row: Row) -> Row:
    return {c: v for c, v in row.items() if not v.is_zero}


def _axpy(target: Row, factor: Scalar, source: Row) -> None:
    """target -= factor * source, in place."""
    for c, v in source.items():
        nv = target.get(c)
        nv = (-factor * v) if nv is None else (nv - factor * v)
        if nv.is_zero:
            target.pop(c, None)
        else:
            target[c] = nv


class Echelon:
    """Incrementally built reduced echelon form.

    Invariant: every stored pivot row has coefficient 1 in its pivot column
    and no support on any other pivot column.
    """

    def __init__(self) -> None:
        self.pivot_rows: dict[int, Row] = {}

    def reduce(self, row: Row) -> Row:
        row = _clean(dict(row))
        for c in [c for c in row if c in self.pivot_rows]:
            if c in row:
                _axpy(row, row[c], self.pivot_rows[c])
        return row

    def add_row(self, row: Row) -> int | None:
        """Insert a row; returns its pivot column, or None if dependent."""
        row = self.reduce(row)
        if not row:
            return None
        c = min(row)
        inv = row[c].inverse()
        row = {cc: v * inv for cc, v in row.items()}
        for prow in self.pivot_rows.values():
            if c in prow:
                _axpy(prow, prow[c], row)
        self.pivot_rows[c] = row
        return c

    @property
    def rank(self) -> int:
        return len(self.pivot_rows)

    def contains(self, row: Row) -> bool:
        return not self.reduce(row)


def echelon(rows: list[Row]) -> Echelon:
    ech = Echelon()
    for row in rows:
        ech.add_row(row)
    return ech


def rank(rows: list[Row]) -> int:
    return echelon(rows).rank


def nullspace(rows: list[Row], ncols: int) -> list[Row]:
    """Basis of {x : A x = 0}, one vector per free column, reduced form.

    The basis vector attached to free column f has entry 1 at f and its
    pivot-column entries read off the reduced form, so the output is
    deterministic for a given row order.
    """
    ech = echelon(rows)
    piv = ech.pivot_rows
    basis = []
    for f in range(ncols):
        if f in piv:
            continue
        vec: Row = {f: ONE}
        for c, prow in piv.items():
            coeff = prow.get(f)
            if coeff is not None and not coeff.is_zero:
                vec[c] = -coeff
        basis.append(_clean(vec))
    return basis


def solve(rows: list[Row], rhs: list[Scalar]) -> Row | None:
    """One exact solution of A x = b, or None when inconsistent.

    Free variables are set to zero, making the particular solution
    deterministic.  Combine with `nullspace` for the general solution.
    """
    ech = Echelon()
    for row, b in zip(rows, rhs):
        aug = dict(row)
        if not b.is_zero:
            aug[_RHS] = -b
        if ech.add_row(aug) == _RHS:
            return None
    sol: Row = {}
    for c, prow in ech.pivot_rows.items():
        r = prow.get(_RHS)
        if r is not None and not r.is_zero:
            sol[c] = -r
    return sol


def matvec(rows: list[Row], vec: Row) -> list[Scalar]:
    out = []
    for row in rows:
        total = Scalar(0)
        for c, v in row.items():
            x = vec.get(c)
            if x is not None:
                total = total + v * x
        out.append(total)
    return out


def span_equal(rows_a: list[Row], rows_b: list[Row]) -> bool:
    ea, eb = echelon(rows_a), echelon(rows_b)
    if ea.rank != eb.rank:
        return False
    return all(ea.contains(r) for r in rows_b) and all(eb.contains(r) for r in rows_a)


def in_span(rows: list[Row], vec: Row) -> bool:
    return echelon(rows).contains(vec)
