"""Exact arithmetic in the real field Q(sqrt3, sqrt5).

Every quantity in this package is a `Scalar`: a rational combination

    a + b*sqrt3 + c*sqrt5 + d*sqrt15

with `fractions.Fraction` coordinates.  The field is closed under the
arithmetic we need (products of the two roots give sqrt15) and admits an
exact sign decision, so comparisons never go through floats.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

RationalLike = Union[int, Fraction]
ScalarLike = Union["Scalar", int, Fraction]

_FRACTION_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


class Scalar:
    """An element a + b*sqrt3 + c*sqrt5 + d*sqrt15 of Q(sqrt3, sqrt5)."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a: RationalLike = 0, b: RationalLike = 0,
                 c: RationalLike = 0, d: RationalLike = 0) -> None:
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.c = Fraction(c)
        self.d = Fraction(d)

    @classmethod
    def coerce(cls, x: ScalarLike) -> Scalar:
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x)
        raise TypeError(f"cannot interpret {x!r} as a Scalar")

    @property
    def is_rational(self) -> bool:
        return self.b == 0 and self.c == 0 and self.d == 0

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0 and self.c == 0 and self.d == 0

    def rational_part(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is not rational")
        return self.a

    def __add__(self, other: ScalarLike) -> Scalar:
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        o = Scalar.coerce(other)
        return Scalar(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    __radd__ = __add__

    def __sub__(self, other: ScalarLike) -> Scalar:
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        o = Scalar.coerce(other)
        return Scalar(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __rsub__(self, other: ScalarLike) -> Scalar:
        return Scalar.coerce(other) - self

    def __neg__(self) -> Scalar:
        return Scalar(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, other: ScalarLike) -> Scalar:
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        o = Scalar.coerce(other)
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = o.a, o.b, o.c, o.d
        # sqrt3*sqrt5 = sqrt15, sqrt3*sqrt15 = 3*sqrt5, sqrt5*sqrt15 = 5*sqrt3
        return Scalar(
            a1 * a2 + 3 * b1 * b2 + 5 * c1 * c2 + 15 * d1 * d2,
            a1 * b2 + b1 * a2 + 5 * (c1 * d2 + d1 * c2),
            a1 * c2 + c1 * a2 + 3 * (b1 * d2 + d1 * b2),
            a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        )

    __rmul__ = __mul__

    def conj3(self) -> Scalar:
        """Galois conjugate sending sqrt3 -> -sqrt3."""
        return Scalar(self.a, -self.b, self.c, -self.d)

    def conj5(self) -> Scalar:
        """Galois conjugate sending sqrt5 -> -sqrt5."""
        return Scalar(self.a, self.b, -self.c, -self.d)

    def inverse(self) -> Scalar:
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero Scalar")
        # norm down the tower: x * conj5(x) lies in Q(sqrt3)
        y = self * self.conj5()
        z = y * y.conj3()          # rational
        num = self.conj5() * y.conj3()
        n = z.a
        return Scalar(num.a / n, num.b / n, num.c / n, num.d / n)

    def __truediv__(self, other: ScalarLike) -> Scalar:
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        o = Scalar.coerce(other)
        if o.is_rational:
            if o.a == 0:
                raise ZeroDivisionError("division by zero Scalar")
            return Scalar(self.a / o.a, self.b / o.a, self.c / o.a, self.d / o.a)
        return self * o.inverse()

    def __rtruediv__(self, other: ScalarLike) -> Scalar:
        return Scalar.coerce(other) / self

    def __pow__(self, n: int) -> Scalar:
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        o = Scalar.coerce(other)
        return (self.a == o.a and self.b == o.b
                and self.c == o.c and self.d == o.d)

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.c, self.d))

    def sign(self) -> int:
        """Exact sign (-1, 0, +1), decided without floating point."""
        # view self as u + v*sqrt5 with u, v in Q(sqrt3)
        u = (self.a, self.b)
        v = (self.c, self.d)
        return _sign_sqrt5(u, v)

    def __lt__(self, other: ScalarLike) -> bool:
        return (self - Scalar.coerce(other)).sign() < 0

    def __le__(self, other: ScalarLike) -> bool:
        return (self - Scalar.coerce(other)).sign() <= 0

    def __gt__(self, other: ScalarLike) -> bool:
        return (self - Scalar.coerce(other)).sign() > 0

    def __ge__(self, other: ScalarLike) -> bool:
        return (self - Scalar.coerce(other)).sign() >= 0

    def __abs__(self) -> Scalar:
        return -self if self.sign() < 0 else self

    def __repr__(self) -> str:
        return f"Scalar({self})"

    def __str__(self) -> str:
        parts = []
        for coeff, root in ((self.a, ""), (self.b, "sqrt3"),
                            (self.c, "sqrt5"), (self.d, "sqrt15")):
            if coeff == 0:
                continue
            mag = abs(coeff)
            if not root:
                body = str(mag)
            elif mag == 1:
                body = root
            else:
                body = f"{mag}*{root}"
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts) if parts else "0"

    @classmethod
    def parse(cls, text: str) -> Scalar:
        """Inverse of __str__; accepts e.g. '1/2 - 3*sqrt5 + sqrt15'."""
        s = text.strip()
        if not s:
            raise ValueError("empty scalar string")
        s = s.replace("-", "+-")
        total = cls()
        for chunk in s.split("+"):
            chunk = chunk.strip()
            if not chunk:
                continue
            total = total + cls._parse_term(chunk)
        return total

    @classmethod
    def _parse_term(cls, term: str) -> Scalar:
        negate = False
        if term.startswith("-"):
            negate = True
            term = term[1:].strip()
        pieces = [p.strip() for p in term.split("*")]
        coeff = Fraction(1)
        root = ""
        for p in pieces:
            if p in ("sqrt3", "sqrt5", "sqrt15"):
                if root:
                    raise ValueError(f"two roots in term {term!r}")
                root = p
            elif _FRACTION_RE.match(p):
                coeff *= Fraction(p)
            else:
                raise ValueError(f"bad scalar term {term!r}")
        if negate:
            coeff = -coeff
        slot = {"": "a", "sqrt3": "b", "sqrt5": "c", "sqrt15": "d"}[root]
        return cls(**{slot: coeff})


def _sign_fraction(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _sign_sqrt3(u: Fraction, v: Fraction) -> int:
    """Sign of u + v*sqrt3 for rational u, v."""
    if v == 0:
        return _sign_fraction(u)
    if u == 0:
        return _sign_fraction(v)
    su, sv = _sign_fraction(u), _sign_fraction(v)
    if su == sv:
        return su
    # compare u^2 with 3 v^2; the larger magnitude wins
    return su if u * u > 3 * v * v else sv


def _sign_sqrt5(u: tuple[Fraction, Fraction], v: tuple[Fraction, Fraction]) -> int:
    """Sign of u + v*sqrt5 where u, v are elements (p, q) = p + q*sqrt3."""
    u_zero = u[0] == 0 and u[1] == 0
    v_zero = v[0] == 0 and v[1] == 0
    if v_zero:
        return _sign_sqrt3(*u)
    if u_zero:
        return _sign_sqrt3(*v)
    su, sv = _sign_sqrt3(*u), _sign_sqrt3(*v)
    if su == sv:
        return su
    # compare u^2 with 5 v^2 inside Q(sqrt3)
    uu = (u[0] * u[0] + 3 * u[1] * u[1], 2 * u[0] * u[1])
    vv = (v[0] * v[0] + 3 * v[1] * v[1], 2 * v[0] * v[1])
    diff = (uu[0] - 5 * vv[0], uu[1] - 5 * vv[1])
    s = _sign_sqrt3(*diff)
    return su if s > 0 else sv if s < 0 else 0


ZERO = Scalar(0)
ONE = Scalar(1)
SQRT3 = Scalar(0, 1)
SQRT5 = Scalar(0, 0, 1)
SQRT15 = Scalar(0, 0, 0, 1)


def rational(p: RationalLike, q: RationalLike = 1) -> Scalar:
    return Scalar(Fraction(p) / Fraction(q))
