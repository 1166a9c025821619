"""so(8) as 2-forms, the stabilizer algebra of the base spinor, and its
catalog of subalgebras.

A 2-form w corresponds to the skew matrix mat(w) whose action on vectors
is half of the infinitesimal rotation rho(w) = 2 mat(w); the factor is
fixed so that the Clifford commutator [act(w), act(x)] equals the Clifford
action of the derivation of x by w, for forms and spinors alike.  The
bracket of 2-forms is the matrix commutator pulled back through mat.

The stabilizer of BASE_SPINOR is the 21-dimensional copy of spin(7) spanned
by SPIN7_BASIS, graded by the chain su(3) < g2 < spin(7).  algebra() builds
the named subalgebras used by the classification recipes.
"""

from __future__ import annotations

from functools import lru_cache

from . import linalg
from .clifford import (N_SPIN, Spinor, act, basis_spinor, spinor_eq)
from .exterior import (DIM, MultiVector, form, from_coords, monomials,
                       to_coords)
from .scalars import Scalar, ScalarLike, SQRT15, rational

Matrix8 = list[list[Scalar]]

_ZERO = Scalar(0)


def mat(w: MultiVector) -> Matrix8:
    """Skew matrix of a 2-form: coefficient c on e_ij lands at (j, i)."""
    m = [[_ZERO] * DIM for _ in range(DIM)]
    for (i, j), c in w.terms.items():
        m[i - 1][j - 1] = m[i - 1][j - 1] - c
        m[j - 1][i - 1] = m[j - 1][i - 1] + c
    return m


def two_form_of(m: Matrix8) -> MultiVector:
    terms = {}
    for i in range(DIM):
        for j in range(i + 1, DIM):
            if m[j][i] != -m[i][j]:
                raise ValueError("matrix is not skew")
            c = m[j][i]
            if not c.is_zero:
                terms[(i + 1, j + 1)] = c
    return MultiVector(terms)


def _matmul(a: Matrix8, b: Matrix8) -> Matrix8:
    out = [[_ZERO] * DIM for _ in range(DIM)]
    for i in range(DIM):
        ra = a[i]
        oi = out[i]
        for k in range(DIM):
            v = ra[k]
            if v.is_zero:
                continue
            rb = b[k]
            for j in range(DIM):
                w = rb[j]
                if not w.is_zero:
                    oi[j] = oi[j] + v * w
    return out


def bracket(a: MultiVector, b: MultiVector) -> MultiVector:
    ma, mb = mat(a), mat(b)
    ab, ba = _matmul(ma, mb), _matmul(mb, ma)
    comm = [[ab[i][j] - ba[i][j] for j in range(DIM)] for i in range(DIM)]
    return two_form_of(comm)


def act_on_vector(w: MultiVector, x: MultiVector) -> MultiVector:
    """Infinitesimal rotation rho(w) = 2 mat(w) applied to a 1-form."""
    m = mat(w)
    out: dict[tuple[int, ...], Scalar] = {}
    for (i,), c in x.terms.items():
        for r in range(DIM):
            v = m[r][i - 1]
            if v.is_zero:
                continue
            key = (r + 1,)
            nv = out.get(key, _ZERO) + c * v * 2
            if nv.is_zero:
                out.pop(key, None)
            else:
                out[key] = nv
    return MultiVector(out)


def act_on_form(w: MultiVector, a: MultiVector) -> MultiVector:
    """Derivation extension of the rotation rho(w) to any multivector."""
    m = mat(w)
    cols: list[list[tuple[int, Scalar]]] = [[] for _ in range(DIM + 1)]
    for i in range(DIM):
        for r in range(DIM):
            if not m[r][i].is_zero:
                cols[i + 1].append((r + 1, m[r][i] * 2))
    total = MultiVector()
    for idx, c in a.terms.items():
        for p, i in enumerate(idx):
            for r, v in cols[i]:
                replaced = idx[:p] + (r,) + idx[p + 1:]
                total = total + MultiVector.monomial(replaced, c * v)
    return total


def act_on_spinor(w: MultiVector, s: Spinor) -> Spinor:
    return act(w, s)


def is_invariant_form(generators: list[MultiVector], a: MultiVector) -> bool:
    return all(act_on_form(w, a).is_zero for w in generators)


# ---------------------------------------------------------------------------
# linear-algebra helpers over fixed coordinates

def express(target: MultiVector, basis: list[MultiVector], grade: int):
    """Coefficients of target in the span of basis, or None."""
    cols = [to_coords(b, grade) for b in basis]
    t = to_coords(target, grade)
    rows: dict[int, linalg.Row] = {}
    for i, col in enumerate(cols):
        for j, v in col.items():
            rows.setdefault(j, {})[i] = v
    seen = set(rows)
    seen.update(t)
    eqs = [rows.get(j, {}) for j in sorted(seen)]
    rhs = [t.get(j, _ZERO) for j in sorted(seen)]
    return linalg.solve(eqs, rhs)


def span_dim(vectors: list[MultiVector], grade: int) -> int:
    return linalg.rank([to_coords(v, grade) for v in vectors])


def same_span(a: list[MultiVector], b: list[MultiVector], grade: int) -> bool:
    return linalg.span_equal([to_coords(v, grade) for v in a],
                             [to_coords(v, grade) for v in b])


def in_span(v: MultiVector, basis: list[MultiVector], grade: int) -> bool:
    ech = linalg.Echelon()
    for b in basis:
        ech.add_row(to_coords(b, grade))
    return ech.contains(to_coords(v, grade))


def is_subalgebra(basis: list[MultiVector]) -> bool:
    ech = linalg.Echelon()
    for b in basis:
        ech.add_row(to_coords(b, 2))
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if not ech.contains(to_coords(bracket(basis[i], basis[j]), 2)):
                return False
    return True


def invariant_forms(generators: list[MultiVector], grade: int) -> list[MultiVector]:
    """Basis of the joint kernel of act_on_form on the given grade."""
    rows: dict[tuple[int, int], linalg.Row] = {}
    for g, w in enumerate(generators):
        for col, idx in enumerate(monomials(grade)):
            out = act_on_form(w, MultiVector.monomial(idx))
            for k, v in out.terms.items():
                rows.setdefault((g, k), {})[col] = v
    null = linalg.nullspace(list(rows.values()), len(monomials(grade)))
    return [from_coords(r, grade) for r in null]


def invariant_spinors(generators: list[MultiVector]) -> list[Spinor]:
    rows: dict[tuple[int, int], linalg.Row] = {}
    for g, w in enumerate(generators):
        for col in range(N_SPIN):
            out = act(w, basis_spinor(col))
            for k, v in out.items():
                rows.setdefault((g, k), {})[col] = v
    null = linalg.nullspace(list(rows.values()), N_SPIN)
    return [dict(r) for r in null]


def stabilizer_in_spin7(a: MultiVector) -> list[MultiVector]:
    """Basis of {w in spin(7) : act_on_form(w, a) = 0}."""
    images = [act_on_form(w, a) for w in SPIN7_BASIS]
    rows: dict[tuple[int, ...], linalg.Row] = {}
    for i, img in enumerate(images):
        for k, v in img.terms.items():
            rows.setdefault(k, {})[i] = v
    null = linalg.nullspace(list(rows.values()), len(SPIN7_BASIS))
    out = []
    for r in null:
        w = MultiVector()
        for i, c in r.items():
            w = w + SPIN7_BASIS[i] * c
        out.append(w)
    return out


def bracket_normalizer(sub: list[MultiVector],
                       ambient: list[MultiVector] | None = None) -> list[MultiVector]:
    """Basis of {w in ambient : [w, s] in span(sub) for all s in sub}."""
    if ambient is None:
        ambient = SPIN7_BASIS
    ech = linalg.Echelon()
    for s in sub:
        ech.add_row(to_coords(s, 2))
    rows: dict[tuple[int, int], linalg.Row] = {}
    for j, s in enumerate(sub):
        for i, w in enumerate(ambient):
            residue = ech.reduce(to_coords(bracket(w, s), 2))
            for col, v in residue.items():
                rows.setdefault((j, col), {})[i] = v
    null = linalg.nullspace(list(rows.values()), len(ambient))
    out = []
    for r in null:
        w = MultiVector()
        for i, c in r.items():
            w = w + ambient[i] * c
        out.append(w)
    return out


def normalizer(sub: list[MultiVector]) -> list[MultiVector]:
    """Basis of the subalgebra of spin(7) preserving the space of
    3-forms fixed by sub.

    Two torsion candidates count as the same geometry when one is moved
    to the other inside that space, so this algebra measures the gauge
    freedom left over after restricting to sub-invariant 3-forms.  It
    always contains sub itself.
    """
    inv = invariant_forms(list(sub), 3)
    ech = linalg.Echelon()
    for v in inv:
        ech.add_row(to_coords(v, 3))
    rows: dict[tuple[int, int], linalg.Row] = {}
    for j, v in enumerate(inv):
        for i, w in enumerate(SPIN7_BASIS):
            residue = ech.reduce(to_coords(act_on_form(w, v), 3))
            for col, val in residue.items():
                rows.setdefault((j, col), {})[i] = val
    null = linalg.nullspace(list(rows.values()), len(SPIN7_BASIS))
    out = []
    for r in null:
        w = MultiVector()
        for i, c in r.items():
            w = w + SPIN7_BASIS[i] * c
        out.append(w)
    return out


def essential_parameter_count(sub: list[MultiVector]) -> int:
    """Number of parameters of the sub-invariant 3-form family once the
    directions swept out by the normalizer action are removed.

    The orbit dimension is sampled at weighted combinations of the
    invariant basis; the weights below are generic enough that the
    maximal orbit dimension is attained.
    """
    inv = invariant_forms(list(sub), 3)
    if not inv:
        return 0
    gauge = normalizer(sub)
    best = 0
    for shift in (0, 1):
        probe = MultiVector()
        for i, v in enumerate(inv):
            probe = probe + v * (2 * i + 1 + shift)
        orbit = [act_on_form(w, probe) for w in gauge]
        best = max(best, span_dim(orbit, 3))
    return len(inv) - best


def killing_gram(basis: list[MultiVector]) -> list[list[Scalar]]:
    """Killing form Gram matrix of a bracket-closed span of 2-forms."""
    n = len(basis)
    struct: list[list[list[Scalar]]] = [[None] * n for _ in range(n)]  # type: ignore
    for i in range(n):
        for j in range(n):
            coeffs = express(bracket(basis[i], basis[j]), basis, 2)
            if coeffs is None:
                raise ValueError("span is not closed under the bracket")
            struct[i][j] = [coeffs.get(k, _ZERO) for k in range(n)]
    gram = [[_ZERO] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            tot = _ZERO
            for j in range(n):
                for k in range(n):
                    tot = tot + struct[a][j][k] * struct[b][k][j]
            gram[a][b] = tot
    return gram


# ---------------------------------------------------------------------------
# the stabilizer algebra of BASE_SPINOR and its subalgebra catalog

# su(3) tier: rotations fixing the complex structure of C^3 (+) C and the
# base spinor; the last two span the diagonal torus
_SU3 = [form(s) for s in (
    "e_35 + e_46",
    "e_36 - e_45",
    "e_15 + e_26",
    "e_16 - e_25",
    "e_13 + e_24",
    "e_14 - e_23",
    "e_12 - e_34",
    "e_34 - e_56",
)]

# g2 tier: six more rotations moving e_7, completing su(3) to g2
_G2X = [form(s) for s in (
    "2*e_17 - e_35 + e_46",
    "2*e_27 + e_36 + e_45",
    "2*e_37 + e_15 - e_26",
    "2*e_47 - e_16 - e_25",
    "2*e_57 - e_13 + e_24",
    "2*e_67 + e_14 + e_23",
)]

# spin(7) tier: seven more rotations moving e_8
_S7X = [form(s) for s in (
    "e_18 - e_27",
    "e_28 + e_17",
    "e_38 - e_47",
    "e_48 + e_37",
    "e_58 - e_67",
    "e_68 + e_57",
    "e_78 - e_56",
)]

SPIN7_BASIS: list[MultiVector] = _SU3 + _G2X + _S7X


def in_stabilizer(w: MultiVector) -> bool:
    """Whether a 2-form annihilates the base spinor."""
    from .clifford import BASE_SPINOR
    return not act(w, BASE_SPINOR)


def membership_equations(w: MultiVector) -> list[Scalar]:
    """The seven linear residues that vanish exactly when a 2-form lies in
    the stabilizer of the base spinor.

    Each residue ties the coefficient on an e_i8 plane to three
    coefficients of planes inside span(e_1, ..., e_7).
    """
    c = {}
    for (i, j), v in w.terms.items():
        c[(i, j)] = v

    def g(i: int, j: int) -> Scalar:
        return c.get((i, j), _ZERO)

    return [
        g(1, 8) + g(2, 7) - g(3, 6) - g(4, 5),
        g(2, 8) - g(1, 7) - g(3, 5) + g(4, 6),
        g(3, 8) + g(1, 6) + g(2, 5) + g(4, 7),
        g(4, 8) + g(1, 5) - g(2, 6) - g(3, 7),
        g(5, 8) - g(1, 4) - g(2, 3) + g(6, 7),
        g(6, 8) - g(1, 3) + g(2, 4) - g(5, 7),
        g(7, 8) + g(1, 2) + g(3, 4) + g(5, 6),
    ]


@lru_cache(maxsize=None)
def _catalog() -> dict[str, tuple[MultiVector, ...]]:
    p = _SU3
    q = _G2X
    s = _S7X
    # recurring combinations: the two torus generators and their tilde twin
    t_a = p[6]                       # e_12 - e_34
    t_b = p[6] + 2 * p[7]            # e_12 + e_34 - 2 e_56
    t_bt = t_b - 4 * s[6]            # e_12 + e_34 + 2 e_56 - 4 e_78
    c = {
        "spin7": tuple(SPIN7_BASIS),
        "g2": tuple(p + q),
        "su3": tuple(p),
        "su2+su2c": (p[4], p[5], t_a, t_b, q[4], q[5]),
        "u2": (t_b, p[4], p[5], t_a),
        "r+su2c": (t_a, t_b, q[4], q[5]),
        "r+su2": (t_bt, p[4], p[5], t_a),
        "so3": (p[0] + p[4], p[1] + p[5], p[6] + p[7]),
        "so3diag": (p[4] + q[4], p[5] + q[5], 2 * (p[6] + p[7])),
        "so3ir": (p[4] - SQRT15 * rational(1, 5) * q[1],
                  p[5] + SQRT15 * rational(1, 5) * q[0],
                  p[6] + 3 * p[7]),
        "su2": (p[4], p[5], t_a),
        "su2c": (t_b, q[4], q[5]),
        "t2": (t_a, t_b),
        "t2tilde": (t_a, t_bt),
        "zero": (),
    }
    return c


CATALOG_NAMES = ("g2", "su3", "su2+su2c", "u2", "r+su2c", "r+su2", "so3",
                 "so3diag", "so3ir", "su2", "su2c", "t2", "t2tilde",
                 "t1", "t1tilde", "zero", "spin7")


def algebra(name: str, k: ScalarLike = 1, l: ScalarLike = 0) -> list[MultiVector]:
    """Catalog subalgebras of spin(7); t1 and t1tilde take slope (k, l)."""
    cat = _catalog()
    if name in cat:
        return list(cat[name])
    if name == "su4":
        return list(_su4())
    kk, ll = Scalar.coerce(k), Scalar.coerce(l)
    if name == "t1":
        gen = kk * cat["t2"][0] + ll * cat["t2"][1]
    elif name == "t1tilde":
        gen = kk * cat["t2tilde"][0] + ll * cat["t2tilde"][1]
    else:
        raise KeyError(f"unknown algebra {name!r}")
    if gen.is_zero:
        raise ValueError("t1 slope (k, l) must be nonzero")
    return [gen]


@lru_cache(maxsize=None)
def _su4() -> tuple[MultiVector, ...]:
    """su(4) inside the base-spinor stabilizer: the 2-forms commuting with
    the complex structure that pairs the coordinates as (12)(34)(56)(78)."""
    from .exterior import KAHLER
    j = mat(KAHLER)
    grade2 = monomials(2)
    rows: dict[object, linalg.Row] = {}
    for col, idx in enumerate(grade2):
        w = MultiVector.monomial(idx)
        m = mat(w)
        mj, jm = _matmul(m, j), _matmul(j, m)
        for r in range(DIM):
            for s in range(DIM):
                v = mj[r][s] - jm[r][s]
                if not v.is_zero:
                    rows.setdefault(("c", r, s), {})[col] = v
        from .clifford import BASE_SPINOR
        for k, v in act(w, BASE_SPINOR).items():
            rows.setdefault(("s", k), {})[col] = v
    null = linalg.nullspace(list(rows.values()), len(grade2))
    return tuple(from_coords(r, 2) for r in null)


def iso_algebra(t: MultiVector) -> tuple[str, list[MultiVector]]:
    """Stabilizer of a 3-form inside spin(7), with its catalog name.

    Returns ("unnamed", basis) when the stabilizer matches no catalog
    entry; one-dimensional stabilizers inside either maximal torus are
    reported as "t1" or "t1tilde".
    """
    basis = stabilizer_in_spin7(t)
    dim = len(basis)
    cat = _catalog()
    for name in CATALOG_NAMES:
        if name in ("t1", "t1tilde"):
            continue
        fixed = list(cat[name])
        if len(fixed) == dim and same_span(basis, fixed, 2):
            return name, basis
    if dim == 1:
        if in_span(basis[0], list(cat["t2"]), 2):
            return "t1", basis
        if in_span(basis[0], list(cat["t2tilde"]), 2):
            return "t1tilde", basis
    return "unnamed", basis
