"""Exact arithmetic in Q(phi) and in its quadratic extension Q(phi)[s], s**2 = 2 + phi.

``GoldenNum`` is ``a + b*phi`` with rational ``a, b``; ``QuadExt`` is ``u + v*s`` with
``u, v`` golden numbers and ``s = sqrt(2 + phi) > 0``.  Every planar coordinate of the
pentagonal stars lives in ``QuadExt`` (e.g. ``cos(2pi/5) = 1/(2phi)``, ``sin(2pi/5) = s/2``).
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational

import mpmath

__all__ = [
    "GoldenNum",
    "QuadExt",
    "PHI",
    "INV_PHI",
    "S",
    "SIGMA",
    "quad_sign",
    "golden_sign",
    "to_float",
    "as_golden",
    "as_quad",
]

PHI_FLOAT = (1.0 + math.sqrt(5.0)) / 2.0
S_FLOAT = math.sqrt(2.0 + PHI_FLOAT)

_MP_DPS = 40


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as a rational coefficient")


def _sign_sqrt5(p: Fraction, q: Fraction) -> int:
    """Exact sign of p + q*sqrt(5)."""
    sp = (p > 0) - (p < 0)
    sq = (q > 0) - (q < 0)
    if sq == 0:
        return sp
    if sp == 0 or sp == sq:
        return sq
    # opposite signs: the larger square wins
    d = p * p - 5 * q * q
    return sp if d > 0 else sq


class GoldenNum:
    """Element ``a + b*phi`` of Q(phi)."""

    __slots__ = ("a", "b", "_hash")

    def __init__(self, a=0, b=0):
        self.a = _frac(a)
        self.b = _frac(b)
        self._hash = None

    # construction helpers
    @classmethod
    def phi(cls) -> GoldenNum:
        return cls(0, 1)

    def __repr__(self) -> str:
        return f"GoldenNum({self.a}, {self.b})"

    def __str__(self) -> str:
        return self.text()

    def text(self) -> str:
        return f"{self.a.numerator}/{self.a.denominator} + {self.b.numerator}/{self.b.denominator}*phi"

    # comparison / hashing
    def __eq__(self, other) -> bool:
        other = _coerce_golden(other)
        if other is NotImplemented:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.a, self.b))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def is_rational(self) -> bool:
        return self.b == 0

    # arithmetic
    def __neg__(self) -> GoldenNum:
        return GoldenNum(-self.a, -self.b)

    def __pos__(self) -> GoldenNum:
        return self

    def __add__(self, other):
        other = _coerce_golden(other)
        if other is NotImplemented:
            return NotImplemented
        return GoldenNum(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_golden(other)
        if other is NotImplemented:
            return NotImplemented
        return GoldenNum(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        other = _coerce_golden(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce_golden(other)
        if other is NotImplemented:
            return NotImplemented
        # (a + b phi)(c + d phi) = ac + (ad + bc) phi + bd phi^2, phi^2 = phi + 1
        a, b, c, d = self.a, self.b, other.a, other.b
        bd = b * d
        return GoldenNum(a * c + bd, a * d + b * c + bd)

    __rmul__ = __mul__

    def conjugate(self) -> GoldenNum:
        """Galois conjugate phi -> 1 - phi."""
        return GoldenNum(self.a + self.b, -self.b)

    def norm(self) -> Fraction:
        # (a + b phi)(a + b - b phi) = a^2 + ab - b^2
        return self.a * self.a + self.a * self.b - self.b * self.b

    def inverse(self) -> GoldenNum:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("GoldenNum division by zero")
        c = self.conjugate()
        return GoldenNum(c.a / n, c.b / n)

    def __truediv__(self, other):
        other = _coerce_golden(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce_golden(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int) -> GoldenNum:
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        result = GoldenNum(1)
        for _ in range(abs(n)):
            result = result * base
        return result

    def sign(self) -> int:
        return golden_sign(self)

    def __lt__(self, other) -> bool:
        return (self - other).sign() < 0

    def __le__(self, other) -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other) -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other) -> bool:
        return (self - other).sign() >= 0

    def __float__(self) -> float:
        return to_float(self)

    def one_over_phi_parts(self) -> tuple[Fraction, Fraction]:
        """Coefficients ``(p, q)`` with ``self = p + q/phi``."""
        # a + b phi = a + b (1 + 1/phi)
        return self.a + self.b, self.b

    @classmethod
    def from_one_over_phi(cls, p, q) -> GoldenNum:
        """Build ``p + q/phi``."""
        p, q = _frac(p), _frac(q)
        return cls(p - q, q)


def _coerce_golden(x):
    if isinstance(x, GoldenNum):
        return x
    if isinstance(x, (int, Fraction, Rational)):
        return GoldenNum(x)
    return NotImplemented


def golden_sign(x: GoldenNum) -> int:
    """Exact sign of ``a + b*phi`` under phi = (1 + sqrt 5)/2."""
    # a + b(1 + sqrt5)/2 = (a + b/2) + (b/2) sqrt5
    return _sign_sqrt5(x.a + x.b / 2, x.b / 2)


class QuadExt:
    """Element ``u + v*s`` of Q(phi)[s] with s = sqrt(2 + phi)."""

    __slots__ = ("u", "v", "_hash")

    def __init__(self, u=0, v=0):
        self.u = as_golden(u)
        self.v = as_golden(v)
        self._hash = None

    def __repr__(self) -> str:
        return f"QuadExt({self.u!r}, {self.v!r})"

    def __str__(self) -> str:
        return self.text()

    def text(self) -> str:
        return f"{self.u.text()} + ({self.v.text()})*s"

    def __eq__(self, other) -> bool:
        other = _coerce_quad(other)
        if other is NotImplemented:
            return NotImplemented
        return self.u == other.u and self.v == other.v

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.u, self.v))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.u) or bool(self.v)

    def in_golden_field(self) -> bool:
        return not self.v

    def __neg__(self) -> QuadExt:
        return QuadExt(-self.u, -self.v)

    def __pos__(self) -> QuadExt:
        return self

    def __add__(self, other):
        other = _coerce_quad(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadExt(self.u + other.u, self.v + other.v)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_quad(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadExt(self.u - other.u, self.v - other.v)

    def __rsub__(self, other):
        other = _coerce_quad(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce_quad(other)
        if other is NotImplemented:
            return NotImplemented
        # s^2 = 2 + phi
        u, v, x, y = self.u, self.v, other.u, other.v
        return QuadExt(u * x + v * y * _TWO_PLUS_PHI, u * y + v * x)

    __rmul__ = __mul__

    def conjugate(self) -> QuadExt:
        return QuadExt(self.u, -self.v)

    def norm(self) -> GoldenNum:
        return self.u * self.u - self.v * self.v * _TWO_PLUS_PHI

    def inverse(self) -> QuadExt:
        n = self.norm()
        if not n:
            raise ZeroDivisionError("QuadExt division by zero")
        ninv = n.inverse()
        return QuadExt(self.u * ninv, -self.v * ninv)

    def __truediv__(self, other):
        other = _coerce_quad(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce_quad(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int) -> QuadExt:
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        result = QuadExt(1)
        for _ in range(abs(n)):
            result = result * base
        return result

    def sign(self) -> int:
        return quad_sign(self)

    def __lt__(self, other) -> bool:
        return quad_sign(self - other) < 0

    def __le__(self, other) -> bool:
        return quad_sign(self - other) <= 0

    def __gt__(self, other) -> bool:
        return quad_sign(self - other) > 0

    def __ge__(self, other) -> bool:
        return quad_sign(self - other) >= 0

    def __float__(self) -> float:
        return to_float(self)


def _coerce_quad(x):
    if isinstance(x, QuadExt):
        return x
    if isinstance(x, (GoldenNum, int, Fraction, Rational)):
        return QuadExt(x)
    return NotImplemented


def as_golden(x) -> GoldenNum:
    if isinstance(x, GoldenNum):
        return x
    if isinstance(x, QuadExt):
        if x.v:
            raise ValueError(f"{x} is not in Q(phi)")
        return x.u
    return GoldenNum(_frac(x))


def as_quad(x) -> QuadExt:
    if isinstance(x, QuadExt):
        return x
    return QuadExt(as_golden(x))


_TWO_PLUS_PHI = GoldenNum(2, 1)

PHI = GoldenNum(0, 1)
INV_PHI = GoldenNum(-1, 1)
S = QuadExt(0, 1)
# sigma = s / (2 phi)
SIGMA = QuadExt(0, INV_PHI / 2)


def _magnitude(x: QuadExt) -> float:
    return (abs(float(x.u.a)) + abs(float(x.u.b)) * PHI_FLOAT
            + (abs(float(x.v.a)) + abs(float(x.v.b)) * PHI_FLOAT) * S_FLOAT)


def _float_fast(x: QuadExt) -> float:
    u = float(x.u.a) + float(x.u.b) * PHI_FLOAT
    v = float(x.v.a) + float(x.v.b) * PHI_FLOAT
    return u + v * S_FLOAT


def quad_sign(x) -> int:
    """Exact sign of a ``QuadExt`` (or ``GoldenNum``/rational) value.

    A float evaluation is used only when it clears a safety margin well above its
    rounding error; otherwise the sign is settled by rational comparisons.
    """
    x = as_quad(x)
    if not x:
        return 0
    try:
        f = _float_fast(x)
        mag = _magnitude(x)
    except OverflowError:
        f, mag = 0.0, math.inf
    if math.isfinite(mag) and abs(f) > 1e-9 * mag:
        return 1 if f > 0 else -1
    su = golden_sign(x.u)
    sv = golden_sign(x.v)
    if sv == 0:
        return su
    if su == 0 or su == sv:
        return sv
    # u and v*s have opposite signs: compare u^2 with v^2 (2 + phi)
    d = golden_sign(x.u * x.u - x.v * x.v * _TWO_PLUS_PHI)
    return su if d > 0 else sv


_MP_PHI = None
_MP_S = None


def _mp_consts():
    global _MP_PHI, _MP_S
    if _MP_PHI is None:
        with mpmath.workdps(_MP_DPS):
            _MP_PHI = (1 + mpmath.sqrt(5)) / 2
            _MP_S = mpmath.sqrt(2 + _MP_PHI)
    return _MP_PHI, _MP_S


def to_mp(x) -> mpmath.mpf:
    """High-precision value (40 significant digits)."""
    x = as_quad(x)
    phi, s = _mp_consts()
    with mpmath.workdps(_MP_DPS):
        def g(y: GoldenNum):
            return mpmath.mpf(y.a.numerator) / y.a.denominator + mpmath.mpf(y.b.numerator) / y.b.denominator * phi
        return g(x.u) + g(x.v) * s


def to_float(x) -> float:
    """Double-precision value of ``x``.

    Falls back to 40-digit evaluation when the float terms cancel, so the result is
    within a few ulp of the exact value.
    """
    if isinstance(x, (int, Fraction)):
        return float(x)
    x = as_quad(x)
    try:
        f = _float_fast(x)
        mag = _magnitude(x)
        if math.isfinite(mag) and abs(f) >= 0.25 * mag:
            return f
    except OverflowError:
        pass
    return float(to_mp(x))


_RAT = r"\s*(-?\d+)\s*/\s*(\d+)\s*"
_GOLDEN_RE = re.compile(rf"^{_RAT}\+{_RAT}\*\s*phi\s*$")
_QUAD_RE = re.compile(rf"^{_RAT}\+{_RAT}\*\s*phi\s*\+\s*\({_RAT}\+{_RAT}\*\s*phi\s*\)\s*\*\s*s\s*$")


def parse_golden(text: str) -> GoldenNum:
    m = _GOLDEN_RE.match(text)
    if not m:
        raise ValueError(f"not a golden-number literal: {text!r}")
    a = Fraction(int(m.group(1)), int(m.group(2)))
    b = Fraction(int(m.group(3)), int(m.group(4)))
    return GoldenNum(a, b)


def parse_quad(text: str) -> QuadExt:
    """Inverse of ``QuadExt.text``: ``"a/b + c/d*phi + (e/f + g/h*phi)*s"``."""
    m = _QUAD_RE.match(text)
    if not m:
        raise ValueError(f"not a QuadExt literal: {text!r}")
    n = [int(g) for g in m.groups()]
    u = GoldenNum(Fraction(n[0], n[1]), Fraction(n[2], n[3]))
    v = GoldenNum(Fraction(n[4], n[5]), Fraction(n[6], n[7]))
    return QuadExt(u, v)
