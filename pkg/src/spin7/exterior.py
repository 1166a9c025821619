"""Sparse exterior algebra of R^8 over Q(sqrt3, sqrt5).

A multivector is a map from strictly increasing index tuples (subsets of
1..8) to scalars; the empty tuple carries the grade-0 part.  The basis
e_1, ..., e_8 is declared orthonormal, vectors and covectors are
identified, and the volume form is e_12345678.  With those conventions the
Hodge star satisfies a ^ star(b) = inner(a, b) * vol on each grade.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

from .scalars import ONE, Scalar, ScalarLike

DIM = 8
Index = tuple[int, ...]

_MONOMIAL_RE = re.compile(r"^e_([1-8]+)$")


def _merge_sign(left: Index, right: Index) -> tuple[Index, int]:
    """Sort the concatenation of two disjoint ascending tuples.

    Returns the merged tuple and the sign of the permutation, or sign 0
    when an index repeats.
    """
    merged = []
    sign = 1
    i = j = 0
    while i < len(left) and j < len(right):
        a, b = left[i], right[j]
        if a == b:
            return (), 0
        if a < b:
            merged.append(a)
            i += 1
        else:
            merged.append(b)
            j += 1
            if (len(left) - i) % 2:
                sign = -sign
    merged.extend(left[i:])
    merged.extend(right[j:])
    return tuple(merged), sign


class MultiVector:
    """Immutable-by-convention sparse element of Lambda^*(R^8)."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Index, Scalar] | None = None) -> None:
        self.terms = {k: v for k, v in (terms or {}).items() if not v.is_zero}

    @classmethod
    def monomial(cls, indices: Iterable[int], coeff: ScalarLike = 1) -> MultiVector:
        idx = tuple(indices)
        if any(not 1 <= i <= DIM for i in idx):
            raise ValueError(f"indices out of range: {idx}")
        if len(set(idx)) != len(idx):
            return cls()
        order = tuple(sorted(idx))
        sign = _permutation_sign(idx)
        return cls({order: Scalar.coerce(coeff) * sign})

    @classmethod
    def scalar(cls, value: ScalarLike) -> MultiVector:
        return cls({(): Scalar.coerce(value)})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def grades(self) -> set[int]:
        return {len(k) for k in self.terms}

    def grade(self) -> int:
        """Grade of a homogeneous multivector."""
        gs = self.grades()
        if len(gs) > 1:
            raise ValueError(f"mixed grades {sorted(gs)}")
        return gs.pop() if gs else 0

    def coeff(self, indices: Iterable[int]) -> Scalar:
        idx = tuple(indices)
        order = tuple(sorted(idx))
        v = self.terms.get(order)
        if v is None:
            return Scalar(0)
        return v * _permutation_sign(idx)

    def __add__(self, other: MultiVector) -> MultiVector:
        terms = dict(self.terms)
        for k, v in other.terms.items():
            nv = terms.get(k)
            nv = v if nv is None else nv + v
            if nv.is_zero:
                terms.pop(k, None)
            else:
                terms[k] = nv
        return MultiVector(terms)

    def __sub__(self, other: MultiVector) -> MultiVector:
        return self + (-other)

    def __neg__(self) -> MultiVector:
        return MultiVector({k: -v for k, v in self.terms.items()})

    def __mul__(self, factor: ScalarLike) -> MultiVector:
        f = Scalar.coerce(factor)
        if f.is_zero:
            return MultiVector()
        return MultiVector({k: v * f for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, factor: ScalarLike) -> MultiVector:
        return self * Scalar.coerce(factor).inverse()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiVector):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __iter__(self) -> Iterator[tuple[Index, Scalar]]:
        return iter(sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0])))

    def __repr__(self) -> str:
        return f"MultiVector({format_form(self)!r})"

    def __str__(self) -> str:
        return format_form(self)


def _permutation_sign(idx: Index) -> int:
    sign = 1
    idx = list(idx)
    for i in range(len(idx)):
        for j in range(i + 1, len(idx)):
            if idx[i] > idx[j]:
                sign = -sign
    return sign


def wedge(a: MultiVector, b: MultiVector) -> MultiVector:
    terms: dict[Index, Scalar] = {}
    for ka, va in a.terms.items():
        for kb, vb in b.terms.items():
            merged, sign = _merge_sign(ka, kb)
            if sign == 0:
                continue
            v = va * vb if sign > 0 else -(va * vb)
            nv = terms.get(merged)
            nv = v if nv is None else nv + v
            if nv.is_zero:
                terms.pop(merged, None)
            else:
                terms[merged] = nv
    return MultiVector(terms)


def wedge_all(*factors: MultiVector) -> MultiVector:
    out = MultiVector.scalar(1)
    for f in factors:
        out = wedge(out, f)
    return out


def contract(x: MultiVector, a: MultiVector) -> MultiVector:
    """Interior product x -| a for a 1-vector x: e_i -| e_ij = e_j."""
    for k in x.terms:
        if len(k) != 1:
            raise ValueError("contract expects a grade-1 first argument")
    terms: dict[Index, Scalar] = {}
    for (i,), vx in x.terms.items():
        for ka, va in a.terms.items():
            if i not in ka:
                continue
            pos = ka.index(i)
            rest = ka[:pos] + ka[pos + 1:]
            v = vx * va
            if pos % 2:
                v = -v
            nv = terms.get(rest)
            nv = v if nv is None else nv + v
            if nv.is_zero:
                terms.pop(rest, None)
            else:
                terms[rest] = nv
    return MultiVector(terms)


def inner(a: MultiVector, b: MultiVector) -> Scalar:
    """Inner product making the basis monomials orthonormal."""
    total = Scalar(0)
    small, big = (a.terms, b.terms) if len(a.terms) <= len(b.terms) else (b.terms, a.terms)
    for k, v in small.items():
        w = big.get(k)
        if w is not None:
            total = total + v * w
    return total


def norm_sq(a: MultiVector) -> Scalar:
    return inner(a, a)


_FULL = tuple(range(1, DIM + 1))


def hodge(a: MultiVector) -> MultiVector:
    """Hodge star fixed by a ^ star(a) = inner(a, a) * vol."""
    terms: dict[Index, Scalar] = {}
    for k, v in a.terms.items():
        comp = tuple(i for i in _FULL if i not in k)
        _, sign = _merge_sign(k, comp)
        terms[comp] = v if sign > 0 else -v
    return MultiVector(terms)


def evaluate(a: MultiVector, vectors: list[MultiVector]) -> Scalar:
    """a(v_1, ..., v_k) in the determinant convention (no 1/k!)."""
    out = a
    for v in vectors:
        out = contract(v, out)
    return out.terms.get((), Scalar(0))


def sigma_t(t: MultiVector) -> MultiVector:
    """The 4-form (1/2) sum_i (e_i -| t) ^ (e_i -| t) of a 3-form t."""
    total = MultiVector()
    for i in range(1, DIM + 1):
        c = contract(E[i], t)
        total = total + wedge(c, c)
    return total * Fraction(1, 2)


# ---------------------------------------------------------------------------
# basis vectors

E = {i: MultiVector.monomial((i,)) for i in range(1, DIM + 1)}
VOL = MultiVector.monomial(_FULL)


# ---------------------------------------------------------------------------
# coordinates on a fixed grade, for the exact linear algebra layer

@lru_cache(maxsize=None)
def monomials(grade: int) -> tuple[Index, ...]:
    return tuple(itertools.combinations(range(1, DIM + 1), grade))


@lru_cache(maxsize=None)
def _monomial_index(grade: int) -> dict[Index, int]:
    return {m: i for i, m in enumerate(monomials(grade))}


def to_coords(a: MultiVector, grade: int) -> dict[int, Scalar]:
    """Sparse coordinate row of a homogeneous multivector."""
    lookup = _monomial_index(grade)
    out: dict[int, Scalar] = {}
    for k, v in a.terms.items():
        if len(k) != grade:
            raise ValueError(f"expected pure grade {grade}, found {k}")
        out[lookup[k]] = v
    return out


def from_coords(row: dict[int, Scalar], grade: int) -> MultiVector:
    basis = monomials(grade)
    return MultiVector({basis[i]: v for i, v in row.items()})


def form(text: str) -> MultiVector:
    return parse_form(text)


# ---------------------------------------------------------------------------
# string round-trip

def format_form(a: MultiVector) -> str:
    if not a.terms:
        return "0"
    chunks = []
    for k, v in sorted(a.terms.items(), key=lambda kv: (len(kv[0]), kv[0])):
        mono = "e_" + "".join(str(i) for i in k) if k else ""
        body, negative = _format_coeff(v, mono)
        if not chunks:
            chunks.append(f"-{body}" if negative else body)
        else:
            chunks.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(chunks)


def _format_coeff(v: Scalar, mono: str) -> tuple[str, bool]:
    single = sum(1 for x in (v.a, v.b, v.c, v.d) if x != 0) == 1
    if single:
        neg = v.sign() < 0
        mag = -v if neg else v
        s = str(mag)
        if not mono:
            return s, neg
        if s == "1":
            return mono, neg
        return f"{s}*{mono}", neg
    s = str(v)
    if not mono:
        return f"({s})", False
    return f"({s})*{mono}", False


class FormSyntaxError(ValueError):
    """Malformed form string; offset locates the problem in the input."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


def parse_form(text: str) -> MultiVector:
    """Parse '1/2*e_12 - sqrt3*e_34 + (1 + sqrt5)*e_56 + 2'."""
    total = MultiVector()
    for sign, term, start in _split_terms(text):
        total = total + _parse_term(term, start) * sign
    return total


def _split_terms(text: str) -> list[tuple[int, str, int]]:
    out = []
    depth = 0
    sign = 1
    open_at = -1
    cur: list[str] = []
    start = -1

    def flush() -> None:
        nonlocal sign, cur, start
        if "".join(cur).strip():
            out.append((sign, "".join(cur).strip(), start))
        sign = 1
        cur = []
        start = -1

    for n, ch in enumerate(text):
        if ch == "(":
            depth += 1
            open_at = n
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise FormSyntaxError("unbalanced ')'", n)
        if ch in "+-" and depth == 0:
            flush()
            if ch == "-":
                sign = -sign
        else:
            if start < 0 and not ch.isspace():
                start = n
            cur.append(ch)
    if depth:
        raise FormSyntaxError("unbalanced '('", open_at)
    flush()
    if not out:
        raise FormSyntaxError("empty form string", 0)
    return out


def _parse_term(term: str, base: int) -> MultiVector:
    parts: list[tuple[str, int]] = []
    depth = 0
    cur: list[str] = []
    start = 0

    def flush(end: int) -> None:
        nonlocal cur, start
        parts.append(("".join(cur).strip(), base + start))
        cur = []
        start = end + 1

    for n, ch in enumerate(term):
        if ch == "(":
            depth += 1
        if ch == ")":
            depth -= 1
        if ch == "*" and depth == 0:
            flush(n)
        else:
            cur.append(ch)
    flush(len(term))
    coeff = Scalar(1)
    mono: Index | None = None
    for p, at in parts:
        if not p:
            raise FormSyntaxError("empty factor", at)
        m = _MONOMIAL_RE.match(p)
        if m:
            if mono is not None:
                raise FormSyntaxError("two monomials in one term", at)
            digits = [int(ch) for ch in m.group(1)]
            if len(set(digits)) != len(digits):
                raise FormSyntaxError(f"repeated index in {p!r}", at)
            mono = tuple(digits)
        else:
            if p.startswith("(") and p.endswith(")"):
                p = p[1:-1]
            try:
                coeff = coeff * Scalar.parse(p)
            except ValueError:
                raise FormSyntaxError(f"bad coefficient {p!r}", at) from None
    if mono is None:
        return MultiVector.scalar(coeff)
    return MultiVector.monomial(mono, coeff)


# ---------------------------------------------------------------------------
# distinguished forms; coordinates are paired (12)(34)(56)(78) into C^4

# Kaehler form of R^8 = C^4
KAHLER = form("e_12 + e_34 + e_56 + e_78")

# real part of the complex volume form (e1+ie2)^(e3+ie4)^(e5+ie6)^(e7+ie8)
CPLX_VOL_RE = form(
    "e_1357 - e_2457 - e_2367 - e_2358 - e_1467 - e_1458 - e_1368 + e_2468"
)

# associative 3-form of the standard G2 structure on span(e_1..e_7)
G2_FORM = form("e_127 + e_347 + e_567 + e_246 - e_235 - e_145 - e_136")

# self-dual Cayley 4-form whose stabilizer is the Spin(7) fixed throughout
CAYLEY = wedge(KAHLER, KAHLER) * Fraction(1, 2) + CPLX_VOL_RE
