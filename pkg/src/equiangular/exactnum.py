"""Exact scalars: rationals, real quadratic extensions Q(sqrt d), integer polynomials.

All downstream matrix work (PSD certificates, ranks, bound enumerations) runs on
these types; no floating point enters any decision.  Rationals are represented by
``fractions.Fraction``, which already guarantees the reduced-form / positive
denominator invariants.  ``QuadExt`` fixes one radicand per value and refuses to
mix distinct radicands, since no computation here ever needs a compositum field.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Fraction

Scalar = Union[int, Fraction, "QuadExt"]


def is_squarefree(d: int) -> bool:
    if d < 1:
        return False
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


def squarefree_decomposition(n: int) -> tuple[int, int]:
    """Write n > 0 as s*s*d with d squarefree; returns (s, d)."""
    if n <= 0:
        raise ValueError("positive integer required")
    s, d, k = 1, n, 2
    while k * k <= d:
        while d % (k * k) == 0:
            d //= k * k
            s *= k
        k += 1
    return s, d


@dataclass(frozen=True)
class QuadExt:
    """The real number a + b*sqrt(d), with a, b rational and d squarefree, d >= 2.

    Arithmetic is closed for a fixed d; combining two QuadExt values with
    different radicands raises ValueError (unless one of them is rational,
    i.e. has b == 0).  Signs and comparisons are decided exactly by case
    analysis on sgn(a), sgn(b) and the integer comparison a^2 vs b^2 d.
    """

    a: Fraction
    b: Fraction
    d: int

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.d < 2 or not is_squarefree(self.d):
            raise ValueError(f"radicand must be squarefree and >= 2, got {self.d}")

    # -- coercion ---------------------------------------------------------
    def _coerce(self, other) -> "QuadExt":
        if isinstance(other, QuadExt):
            if other.b == 0:
                return QuadExt(other.a, Fraction(0), self.d)
            if self.b == 0:
                return other  # self will be re-coerced by caller symmetry
            if other.d != self.d:
                raise ValueError(f"cannot mix sqrt({self.d}) with sqrt({other.d})")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(Fraction(other), Fraction(0), self.d)
        return NotImplemented  # type: ignore[return-value]

    # -- ring operations --------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.b == 0 and isinstance(other, QuadExt):
            return QuadExt(self.a + o.a, o.b, o.d)
        return QuadExt(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __sub__(self, other):
        return self + (-other if isinstance(other, QuadExt) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.b == 0 and isinstance(other, QuadExt) and other.d != self.d:
            return QuadExt(self.a * o.a, self.a * o.b, o.d)
        return QuadExt(
            self.a * o.a + self.b * o.b * self.d,
            self.a * o.b + self.b * o.a,
            self.d,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadExt":
        norm = self.a * self.a - self.b * self.b * self.d
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt d)")
        return QuadExt(self.a / norm, -self.b / norm, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.b == 0 and isinstance(other, QuadExt) and other.d != self.d:
            return QuadExt(self.a, Fraction(0), other.d) * o.inverse()
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    # -- order ------------------------------------------------------------
    def sign(self) -> int:
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # a and b*sqrt(d) pull in opposite directions: compare a^2 vs b^2 d
        lhs = self.a * self.a
        rhs = self.b * self.b * self.d
        if lhs == rhs:
            return 0
        return sa if lhs > rhs else sb

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            if self.d == other.d:
                return self.a == other.a and self.b == other.b
            return self.b == 0 and other.b == 0 and self.a == other.a
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def _cmp(self, other) -> int:
        diff = self - other
        if not isinstance(diff, QuadExt):
            return (diff > 0) - (diff < 0)
        return diff.sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __bool__(self):
        return not (self.a == 0 and self.b == 0)

    def __float__(self):
        return float(self.a) + float(self.b) * self.d ** 0.5

    def __repr__(self):
        return f"QuadExt({self.a}, {self.b}, {self.d})"

    def __str__(self):
        return format_scalar(self)


def quad_sign(x: Scalar) -> int:
    """Exact sign in {-1, 0, +1} of a rational or quadratic scalar."""
    if isinstance(x, QuadExt):
        return x.sign()
    return (x > 0) - (x < 0)


def scalar_floor(x: Scalar) -> int:
    """Exact floor; for QuadExt the float approximation is only a starting guess
    and the result is certified by exact sign tests."""
    if isinstance(x, (int, Fraction)):
        return int(Fraction(x).__floor__())
    m = int(float(x))
    while quad_sign(x - m) < 0:
        m -= 1
    while quad_sign(x - (m + 1)) >= 0:
        m += 1
    return m


def sqrt_quad(d: int) -> QuadExt:
    """sqrt(n) as an exact scalar: s*sqrt(d0) with n = s^2 d0 squarefree-decomposed."""
    s, d0 = squarefree_decomposition(d)
    if d0 == 1:
        return QuadExt(Fraction(s), Fraction(0), 2)
    return QuadExt(Fraction(0), Fraction(s), d0)


# -- serialization ---------------------------------------------------------

_SQRT_RE = re.compile(
    r"^\s*(?P<a>-?\d+(?:/\d+)?)\s*(?P<sign>[+-])\s*(?P<b>\d+(?:/\d+)?)\s*\*\s*sqrt\s*\(\s*(?P<d>\d+)\s*\)\s*$"
)
_INVSQRT_RE = re.compile(r"^\s*1\s*/\s*sqrt\s*\(\s*(?P<d>\d+)\s*\)\s*$")


def format_scalar(x: Scalar) -> str:
    """Render exactly: rationals as "p/q" (or "p" for integers), quadratic
    scalars as "a + b*sqrt(d)" with rational a, b."""
    if isinstance(x, QuadExt):
        if x.b == 0:
            return str(x.a)
        sign = "-" if x.b < 0 else "+"
        return f"{x.a} {sign} {abs(x.b)}*sqrt({x.d})"
    return str(Fraction(x))


def parse_scalar(s: str) -> Scalar:
    """Inverse of format_scalar; also accepts the angle shorthand "1/sqrt(d)"."""
    m = _INVSQRT_RE.match(s)
    if m:
        d = int(m.group("d"))
        s0, d0 = squarefree_decomposition(d)
        # 1/sqrt(d) = sqrt(d)/d = (s0/d) * sqrt(d0)
        return QuadExt(Fraction(0), Fraction(s0, d), d0)
    m = _SQRT_RE.match(s)
    if m:
        b = Fraction(m.group("b"))
        if m.group("sign") == "-":
            b = -b
        return QuadExt(Fraction(m.group("a")), b, int(m.group("d")))
    return Fraction(s.strip())


# -- integer polynomials ----------------------------------------------------


@dataclass(frozen=True)
class IntPoly:
    """Polynomial with integer coefficients, stored low-to-high degree.

    The zero polynomial has an empty coefficient tuple; otherwise the leading
    coefficient is nonzero.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = tuple(int(v) for v in self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return IntPoly(tuple(out))

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-v for v in self.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        return poly_mul(self, other)

    def __pow__(self, k: int) -> "IntPoly":
        return poly_pow(self, k)

    def __call__(self, x: Scalar) -> Scalar:
        return poly_eval(self, x)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            term = "x" if i == 1 else (f"x^{i}" if i else "")
            mag = "" if (abs(c) == 1 and i) else str(abs(c))
            body = mag + ("*" if mag and term else "") + term
            parts.append(("- " if c < 0 else "+ ") + body)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def poly_mul(p: IntPoly, q: IntPoly) -> IntPoly:
    if not p or not q:
        return IntPoly(())
    out = [0] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(q.coeffs):
            out[i + j] += a * b
    return IntPoly(tuple(out))


def poly_pow(p: IntPoly, k: int) -> IntPoly:
    if k < 0:
        raise ValueError("nonnegative exponent required")
    result = IntPoly((1,))
    base = p
    while k:
        if k & 1:
            result = poly_mul(result, base)
        base = poly_mul(base, base)
        k >>= 1
    return result


def poly_eval(p: IntPoly, x: Scalar) -> Scalar:
    """Horner evaluation; supports int, Fraction and QuadExt arguments."""
    acc: Scalar = Fraction(0) if not isinstance(x, QuadExt) else QuadExt(Fraction(0), Fraction(0), x.d)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


X = IntPoly((0, 1))
