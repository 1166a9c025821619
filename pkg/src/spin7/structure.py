"""Analysis of torsion 3-forms relative to the base 4-form.

The 3-forms on R^8 split into an 8-dimensional piece, spanned by the
duals of vector wedges with the base form, and a 48-dimensional piece
killed by wedging with it.  Everything in this module is driven by that
splitting: the Lee 1-form, the four structure classes, the two scalar
curvatures, and the spinor equations that determine the Ricci tensor of
the torsion connection.

The torsion families of the classification live here as well,
as TorsionFamily records mapping parameter values to exact 3-forms and
to the closed-form Ricci diagonal they should produce.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Mapping, Optional

from . import linalg
from .clifford import (N_SPIN, Spinor, act, basis_spinor, gamma_apply,
                       spinor_eq, spinor_scale, spinor_sub)
from .exterior import (CAYLEY, DIM, E, MultiVector, contract, evaluate, form,
                       hodge, inner, norm_sq, sigma_t, wedge)
from .scalars import Scalar, ScalarLike, rational

_ZERO = Scalar(0)

Params = Mapping[str, ScalarLike]


# ---------------------------------------------------------------------------
# the 8 + 48 splitting of 3-forms

@lru_cache(maxsize=1)
def _vector_type_basis() -> tuple[MultiVector, ...]:
    """The eight 3-forms *(e_i ^ base form); pairwise orthogonal of norm
    squared 7, which the projection below relies on."""
    basis = tuple(hodge(wedge(E[i], CAYLEY)) for i in range(1, DIM + 1))
    seven = Scalar(7)
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            expected = seven if i == j else _ZERO
            if inner(a, b) != expected:
                raise AssertionError("vector-type basis is not orthogonal")
    return basis


def project_8_48(t: MultiVector) -> tuple[MultiVector, MultiVector]:
    """Split a 3-form into its vector-type and 48-type components."""
    if t.grades() - {3}:
        raise ValueError("expected a 3-form")
    small = MultiVector()
    for b in _vector_type_basis():
        small = small + b * (inner(t, b) / 7)
    big = t - small
    if not wedge(big, CAYLEY).is_zero:
        raise AssertionError("48-type component fails its wedge test")
    return small, big


def lee_form(t: MultiVector) -> MultiVector:
    """The 1-form (6/7) * (base form ^ t) steering the W2 class."""
    return hodge(wedge(CAYLEY, t)) * rational(6, 7)


def w_class(t: MultiVector) -> str:
    """Structure class of a torsion form: W0, W1, W2 or the mixed W."""
    small, big = project_8_48(t)
    if small.is_zero and big.is_zero:
        return "W0"
    if big.is_zero:
        return "W2"
    if small.is_zero:
        return "W1"
    return "W"


def scal_pair(t: MultiVector) -> tuple[Scalar, Scalar]:
    """Riemannian and torsion-connection scalar curvature of a parallel
    torsion form, derived from the splitting norms."""
    small, big = project_8_48(t)
    n8, n48 = norm_sq(small), norm_sq(big)
    scal_g = rational(27, 2) * n8 - rational(1, 2) * n48
    scal_c = 12 * n8 - 2 * n48
    if scal_c != scal_g - rational(3, 2) * norm_sq(t):
        raise AssertionError("scalar curvature pair violates the defect relation")
    return scal_g, scal_c


def lee_norm_identity(t: MultiVector) -> bool:
    """Norm of the Lee form against the vector-type component: the ratio
    is 36/7 for every 3-form."""
    small, _ = project_8_48(t)
    return norm_sq(lee_form(t)) == rational(36, 7) * norm_sq(small)


def contraction_identity(t: MultiVector) -> bool:
    """sum_i (e_i _| t) ^ (e_i _| (base form ^ t)) vanishes identically."""
    seven = wedge(CAYLEY, t)
    total = MultiVector()
    for i in range(1, DIM + 1):
        total = total + wedge(contract(E[i], t), contract(E[i], seven))
    return total.is_zero


# ---------------------------------------------------------------------------
# spinor equations

def _clifford_square_minus(t: MultiVector, shift: Scalar, s: Spinor) -> Spinor:
    """(t * t - shift) applied to a spinor via the Clifford action."""
    out = act(t, act(t, s))
    return spinor_sub(out, spinor_scale(s, shift))


def _square_columns(t: MultiVector) -> list[Spinor]:
    """Matrix columns of the double Clifford action of t."""
    return [act(t, act(t, basis_spinor(k))) for k in range(N_SPIN)]


def _combine(cols: list[Spinor], psi: Spinor) -> Spinor:
    out: Spinor = {}
    for k, v in psi.items():
        for m, w in cols[k].items():
            nv = out.get(m, _ZERO) + v * w
            if nv.is_zero:
                out.pop(m, None)
            else:
                out[m] = nv
    return out


def sigma_report(t: MultiVector) -> dict:
    """Where the contracted-square identity and the square condition hold.

    The identity -4 (X _| sigma) psi = (t^2 - 7|t_8|^2) X psi over all
    basis vectors X singles out exactly the spinors satisfying the
    square condition t^2 psi = 7|t_8|^2 psi: for a generic 3-form no
    spinor passes, while the torsion forms of the classification pass on
    their invariant spinors.  Both verdicts are recorded per basis
    spinor and for the base spinor, so callers can compare the two.
    """
    from .clifford import BASE_SPINOR
    small, _ = project_8_48(t)
    shift = 7 * norm_sq(small)
    sig = sigma_t(t)
    contractions = [contract(E[i], sig) for i in range(1, DIM + 1)]
    cols = _square_columns(t)

    def square_ok(psi: Spinor) -> bool:
        return spinor_eq(_combine(cols, psi), spinor_scale(psi, shift))

    def identity_ok(psi: Spinor) -> bool:
        for i in range(1, DIM + 1):
            xpsi = gamma_apply(i, psi)
            lhs = spinor_scale(act(contractions[i - 1], psi), Scalar(-4))
            rhs = spinor_sub(_combine(cols, xpsi), spinor_scale(xpsi, shift))
            if not spinor_eq(lhs, rhs):
                return False
        return True

    basis = [basis_spinor(k) for k in range(N_SPIN)]
    return {
        "basis_identity": [identity_ok(s) for s in basis],
        "basis_square": [square_ok(s) for s in basis],
        "base_identity": identity_ok(BASE_SPINOR),
        "base_square": square_ok(BASE_SPINOR),
    }


def sigma_identity_check(t: MultiVector) -> tuple[bool, int]:
    """Verdict of the contracted-square identity for the base spinor,
    with the count of basis spinors also passing it."""
    rep = sigma_report(t)
    return rep["base_identity"], sum(rep["basis_identity"])


def square_condition_holds(t: MultiVector, spinors: list[Spinor]) -> bool:
    """First torsion equation: t^2 psi = 7 |t_8|^2 psi on given spinors."""
    small, _ = project_8_48(t)
    shift = 7 * norm_sq(small)
    for psi in spinors:
        if any(not v.is_zero for v in _clifford_square_minus(t, shift, psi).values()):
            return False
    return True


def ricci_solver(t: MultiVector,
                 h: list[MultiVector]) -> Optional[list[list[Scalar]]]:
    """Solve the torsion equations for the Ricci tensor of the torsion
    connection, given a candidate holonomy algebra h.

    Every h-invariant spinor psi and every basis vector X contribute the
    equation -4 Ric(X) psi = (t^2 - 7|t_8|^2) X psi, preceded by the
    square condition on psi.  Returns the symmetric 8x8 solution, or
    None when the system is inconsistent.
    """
    from .liealg import invariant_spinors
    spinors = invariant_spinors(h)
    if not square_condition_holds(t, spinors):
        return None
    small, _ = project_8_48(t)
    shift = 7 * norm_sq(small)

    pairs = [(i, j) for i in range(1, DIM + 1) for j in range(i, DIM + 1)]
    col_of = {p: n for n, p in enumerate(pairs)}
    rows: list[linalg.Row] = []
    rhs: list[Scalar] = []
    for psi in spinors:
        gammas = [gamma_apply(j, psi) for j in range(1, DIM + 1)]
        for k in range(1, DIM + 1):
            target = _clifford_square_minus(t, shift, gammas[k - 1])
            slots = set(target)
            for j in range(1, DIM + 1):
                slots.update(gammas[j - 1])
            for s in sorted(slots):
                row: linalg.Row = {}
                for j in range(1, DIM + 1):
                    v = gammas[j - 1].get(s, _ZERO)
                    if not v.is_zero:
                        col = col_of[(min(j, k), max(j, k))]
                        row[col] = row.get(col, _ZERO) + Scalar(-4) * v
                rows.append(row)
                rhs.append(target.get(s, _ZERO))
    sol = linalg.solve(rows, rhs)
    if sol is None:
        return None
    ric = [[_ZERO] * DIM for _ in range(DIM)]
    for (i, j), n in col_of.items():
        v = sol.get(n, _ZERO)
        ric[i - 1][j - 1] = v
        ric[j - 1][i - 1] = v
    return ric


def ricci_g_relation(t: MultiVector, ric_c: list[list[Scalar]]) -> list[list[Scalar]]:
    """Riemannian Ricci tensor from the torsion one:
    Ric^g_ij = Ric^c_ij + (1/4) sum_mn t_imn t_jmn."""
    coeff = [[[evaluate(t, [E[i], E[m], E[n]])
               for n in range(1, DIM + 1)]
              for m in range(1, DIM + 1)]
             for i in range(1, DIM + 1)]
    out = [[_ZERO] * DIM for _ in range(DIM)]
    quarter = rational(1, 4)
    for i in range(DIM):
        for j in range(DIM):
            tot = _ZERO
            for m in range(DIM):
                for n in range(DIM):
                    tot = tot + coeff[i][m][n] * coeff[j][m][n]
            out[i][j] = ric_c[i][j] + quarter * tot
    return out


def diagonal(matrix: list[list[Scalar]]) -> list[Scalar]:
    return [matrix[i][i] for i in range(len(matrix))]


def is_diagonal(matrix: list[list[Scalar]]) -> bool:
    return all(matrix[i][j].is_zero
               for i in range(len(matrix))
               for j in range(len(matrix)) if i != j)


# ---------------------------------------------------------------------------
# the torsion families of the classification

@dataclass(frozen=True)
class TorsionFamily:
    """A linear family of torsion forms with its closed-form Ricci data.

    generators pair off with params: the torsion at a parameter
    assignment is the sum of value * generator.  ricci_diag returns the
    expected diagonal of the characteristic Ricci tensor, which the
    spinor solver must reproduce independently.
    """

    family_id: str
    iso_name: str
    params: tuple[str, ...]
    generators: tuple[MultiVector, ...]
    _diag: Callable[[dict[str, Scalar]], list[Scalar]] = field(repr=False)

    def values(self, assignment: Params) -> dict[str, Scalar]:
        out = {}
        for name in self.params:
            if name not in assignment:
                raise KeyError(f"missing parameter {name!r}")
            out[name] = Scalar.coerce(assignment[name])
        extra = set(assignment) - set(self.params)
        if extra:
            raise KeyError(f"unknown parameters {sorted(extra)}")
        return out

    def torsion(self, assignment: Params) -> MultiVector:
        vals = self.values(assignment)
        total = MultiVector()
        for name, gen in zip(self.params, self.generators):
            total = total + gen * vals[name]
        return total

    def ricci_diag(self, assignment: Params) -> list[Scalar]:
        return self._diag(self.values(assignment))


def _diag_5_1(v: dict[str, Scalar]) -> list[Scalar]:
    a1, b1, b2 = v["a1"], v["b1"], v["b2"]
    lam = 3 * (a1 + b1) * (4 * a1 - 3 * b1) - b2 * b2
    kap = 4 * (a1 + b1) * (3 * a1 - 4 * b1)
    return [lam, lam, lam, lam, kap, kap, kap, _ZERO]


def _diag_5_2_i(v: dict[str, Scalar]) -> list[Scalar]:
    lam = 2 * v["a1"] * v["a1"]
    return [lam] * 6 + [_ZERO, _ZERO]


def _diag_5_2_ii(v: dict[str, Scalar]) -> list[Scalar]:
    a1, a2, b1 = v["a1"], v["a2"], v["b1"]
    lam = 4 * a1 * a1 + 4 * (2 * a2 + b1) * (5 * a2 - b1)
    return [lam] * 6 + [_ZERO, _ZERO]


def _diag_5_3_i(v: dict[str, Scalar]) -> list[Scalar]:
    a1, a2, b1 = v["a1"], v["a2"], v["b1"]
    lam = 6 * a1 * a1 + (a2 + b1) * (6 * a2 - b1)
    kap = 10 * a1 * a1 + 2 * (a2 + b1) * (5 * a2 - 2 * b1)
    return [lam, lam, lam, lam, kap, kap, _ZERO, _ZERO]


def _diag_5_3_ii(v: dict[str, Scalar]) -> list[Scalar]:
    a1, a2, b1 = v["a1"], v["a2"], v["b1"]
    sq = a1 * a1 + a2 * a2
    lam = rational(45, 4) * sq - 2 * a2 * b1 - b1 * b1
    kap = rational(33, 4) * sq - 8 * a2 * b1 - 4 * b1 * b1
    return [lam, lam, lam, lam, kap, kap, _ZERO, _ZERO]


def _diag_5_4(v: dict[str, Scalar]) -> list[Scalar]:
    b1 = v["b1"]
    neg = -4 * b1 * b1
    return [_ZERO, _ZERO, _ZERO, _ZERO, neg, neg, _ZERO, _ZERO]


# building blocks: the Kaehler-type 2-forms of the coordinate pairing
# (12)(34)(56) and the real and imaginary parts of the complex volume
# form on span(e_1, ..., e_6)
_K4 = form("e_12 + e_34")
_A56 = form("e_56")
_F4 = form("e_12 - e_34")
_K6 = _K4 + _A56
_VOL6_RE = form("e_135 - e_146 - e_236 - e_245")
_VOL6_IM = form("e_136 + e_145 + e_235 - e_246")

_SEVEN_FORM = wedge(_K6, E[7]) - _VOL6_IM          # the 7-dim cross-product form


FAMILIES: dict[str, TorsionFamily] = {
    f.family_id: f for f in (
        TorsionFamily(
            "5.1", "r+su2c", ("a1", "b1", "b2"),
            (_SEVEN_FORM,
             wedge(_K4 - 6 * _A56, E[7]) - _VOL6_IM,
             wedge(_F4, E[8])),
            _diag_5_1),
        TorsionFamily(
            "5.2-I", "su3", ("a1",),
            (wedge(_K6, E[7]),),
            _diag_5_2_i),
        TorsionFamily(
            "5.2-II", "so3", ("a1", "a2", "b1"),
            (-1 * _VOL6_RE,
             form("2*e_246 - 2*e_145 - 5*e_235 - 5*e_136 + 3*e_123 - 3*e_356"),
             form("e_246 - e_145 + e_235 + e_136 - 2*e_123 + 2*e_356")),
            _diag_5_2_ii),
        TorsionFamily(
            "5.3-I", "u2", ("a1", "a2", "b1"),
            (wedge(_K4 + 5 * _A56, E[8]),
             wedge(_K4 + 5 * _A56, E[7]),
             wedge(_K4 - 2 * _A56, E[7])),
            _diag_5_3_i),
        TorsionFamily(
            "5.3-II", "u2", ("a1", "a2", "b1"),
            (wedge(_K4 - 2 * _A56, E[8]) - rational(7, 4) * _VOL6_RE,
             wedge(_K4 - 2 * _A56, E[7]) - rational(7, 4) * _VOL6_IM,
             wedge(_K4 - 2 * _A56, E[7])),
            _diag_5_3_ii),
        TorsionFamily(
            "5.4", "r+su2", ("b1",),
            (form("-e_135 + e_245 - e_146 - e_236"),),
            _diag_5_4),
    )
}
