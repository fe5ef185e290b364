"""The pentagonal stars, the quasilattices Q and R, and exact planar embedding.

Points of Q (primal star ``Y_k``) and R (dual star ``Y*_k``) are integer 5-tuples
modulo the all-ones vector, which embeds to zero.  The canonical representative has
its last coordinate equal to 0, so equality of points is tuple equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .exactnum import INV_PHI, PHI, S, GoldenNum, QuadExt, as_quad, to_float

__all__ = [
    "PlanarPoint",
    "RVector",
    "QVector",
    "EdgeClass",
    "NOT_AN_EDGE",
    "star_vector",
    "canonicalize",
    "embed",
    "phi_scale",
    "classify_edge",
    "unit",
    "edge_vectors",
    "cross_sign",
    "embed_float",
]


@dataclass(frozen=True)
class PlanarPoint:
    x: QuadExt
    y: QuadExt

    def __post_init__(self):
        object.__setattr__(self, "x", as_quad(self.x))
        object.__setattr__(self, "y", as_quad(self.y))

    def __add__(self, other: PlanarPoint) -> PlanarPoint:
        return PlanarPoint(self.x + other.x, self.y + other.y)

    def __sub__(self, other: PlanarPoint) -> PlanarPoint:
        return PlanarPoint(self.x - other.x, self.y - other.y)

    def __neg__(self) -> PlanarPoint:
        return PlanarPoint(-self.x, -self.y)

    def scale(self, c) -> PlanarPoint:
        c = as_quad(c)
        return PlanarPoint(c * self.x, c * self.y)

    def dot(self, other: PlanarPoint) -> QuadExt:
        return self.x * other.x + self.y * other.y

    def cross(self, other: PlanarPoint) -> QuadExt:
        return self.x * other.y - self.y * other.x

    def norm2(self) -> QuadExt:
        return self.dot(self)

    def rot90(self) -> PlanarPoint:
        return PlanarPoint(-self.y, self.x)

    def to_float(self) -> tuple[float, float]:
        return (to_float(self.x), to_float(self.y))

    def is_zero(self) -> bool:
        return not self.x and not self.y

    def to_json(self) -> dict:
        return {"exact": [self.x.text(), self.y.text()], "float": list(self.to_float())}


_HALF = QuadExt(1) / 2
_ORIGIN = PlanarPoint(0, 0)

# cos/sin of 2 pi k / 5, exactly
_COS = [QuadExt(1), as_quad(INV_PHI / 2), as_quad(-PHI / 2), as_quad(-PHI / 2), as_quad(INV_PHI / 2)]
_SIN = [QuadExt(0), S / 2, S * INV_PHI / 2, -(S * INV_PHI / 2), -(S / 2)]

_PRIMAL = tuple(PlanarPoint(_COS[k], _SIN[k]) for k in range(5))
_DUAL = tuple(p.rot90() for p in _PRIMAL)


def star_vector(k: int, dual: bool = False) -> PlanarPoint:
    """``Y_k`` (primal) or ``Y*_k`` (dual), indices taken mod 5."""
    return (_DUAL if dual else _PRIMAL)[k % 5]


def cos_sin(k: int) -> tuple[QuadExt, QuadExt]:
    """Exact ``(cos, sin)`` of ``2 pi k / 5``."""
    return _COS[k % 5], _SIN[k % 5]


def canonicalize(raw: Iterable[int]) -> tuple[int, ...]:
    n = tuple(int(x) for x in raw)
    if len(n) != 5:
        raise ValueError(f"expected 5 coordinates, got {len(n)}")
    t = n[4]
    return tuple(x - t for x in n)


class _StarVector:
    """Integer 5-tuple over one of the two stars; subclasses fix the basis."""

    __slots__ = ("n",)
    dual: bool = True
    basis: str = "R"

    def __init__(self, raw: Iterable[int] = (0, 0, 0, 0, 0)):
        object.__setattr__(self, "n", canonicalize(raw))

    def __setattr__(self, *_):
        raise AttributeError("immutable")

    @classmethod
    def _raw(cls, n: tuple[int, ...]):
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        return obj

    @classmethod
    def unit(cls, k: int):
        e = [0, 0, 0, 0, 0]
        e[k % 5] = 1
        return cls(e)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self.n)})"

    def __eq__(self, other) -> bool:
        return type(other) is type(self) and other.n == self.n

    def __hash__(self) -> int:
        return hash((self.basis, self.n))

    def __lt__(self, other) -> bool:
        self._check(other)
        return self.n < other.n

    def _check(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")

    def __add__(self, other):
        self._check(other)
        a, b = self.n, other.n
        return self._raw((a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3], 0))

    def __sub__(self, other):
        self._check(other)
        a, b = self.n, other.n
        return self._raw((a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3], 0))

    def __neg__(self):
        return self._raw(tuple(-x for x in self.n))

    def __mul__(self, c: int):
        if not isinstance(c, int):
            return NotImplemented
        return self._raw(tuple(c * x for x in self.n))

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return any(self.n)

    def to_json(self) -> list[int]:
        return list(self.n)


class RVector(_StarVector):
    """Point of the quasilattice R spanned by the dual star ``Y*_k``."""

    __slots__ = ()
    dual = True
    basis = "R"


class QVector(_StarVector):
    """Point of the quasilattice Q spanned by the primal star ``Y_k``."""

    __slots__ = ()
    dual = False
    basis = "Q"


def unit(k: int, dual: bool = True) -> _StarVector:
    return (RVector if dual else QVector).unit(k)


def embed(v: _StarVector) -> PlanarPoint:
    x = QuadExt(0)
    y = QuadExt(0)
    for k, c in enumerate(v.n):
        if c:
            p = star_vector(k, v.dual)
            x = x + p.x * c
            y = y + p.y * c
    return PlanarPoint(x, y)


def embed_float(v: _StarVector) -> tuple[float, float]:
    fx = fy = 0.0
    table = _DUAL_F if v.dual else _PRIMAL_F
    for c, (px, py) in zip(v.n, table):
        fx += c * px
        fy += c * py
    return fx, fy


_PRIMAL_F = tuple(p.to_float() for p in _PRIMAL)
_DUAL_F = tuple(p.to_float() for p in _DUAL)


def _scale_once(n: tuple[int, ...]) -> tuple[int, ...]:
    # phi e_j = e_{j-1} + e_j + e_{j+1}
    return tuple(n[j - 1] + n[j] + n[(j + 1) % 5] for j in range(5))


def _unscale_once(n: tuple[int, ...]) -> tuple[int, ...]:
    # (1/phi) e_j = e_{j-1} + e_{j+1}
    return tuple(n[j - 1] + n[(j + 1) % 5] for j in range(5))


def phi_scale(v: _StarVector, power: int):
    """Multiply by ``phi**power`` through the integer substitution on the star.

    ``Y_{j-1} + Y_{j+1} = Y_j / phi`` holds for both stars, so every power, negative
    ones included, keeps integer coordinates.
    """
    if not isinstance(power, int):
        raise ValueError(f"power must be an integer, got {power!r}")
    n = v.n
    step = _scale_once if power > 0 else _unscale_once
    for _ in range(abs(power)):
        n = step(n)
    return type(v)(n)


@dataclass(frozen=True)
class EdgeClass:
    """Classification of an R-difference as a tile edge.

    ``kind`` is ``"long"`` for ``sign * Y*_k`` and ``"short"`` for
    ``sign * (Y*_k + Y*_{k+2})``.  ``direction`` is the index ``d`` in Z/10 of the
    edge direction, whose angle is ``pi/10 + d*pi/5``.
    """

    kind: str
    k: int = -1
    sign: int = 0
    direction: int = -1

    @property
    def is_edge(self) -> bool:
        return self.kind != "none"

    def __str__(self) -> str:
        if not self.is_edge:
            return "NotAnEdge"
        s = "+" if self.sign > 0 else "-"
        return f"{self.kind.capitalize()}({self.k},{s})"


NOT_AN_EDGE = EdgeClass("none")


def _build_edge_table() -> dict[tuple[int, ...], EdgeClass]:
    table: dict[tuple[int, ...], EdgeClass] = {}
    for k in range(5):
        for sign in (1, -1):
            d_long = (2 + 2 * k + (0 if sign > 0 else 5)) % 10
            d_short = (4 + 2 * k + (0 if sign > 0 else 5)) % 10
            lv = RVector.unit(k) * sign
            sv = (RVector.unit(k) + RVector.unit(k + 2)) * sign
            table[lv.n] = EdgeClass("long", k, sign, d_long)
            table[sv.n] = EdgeClass("short", k, sign, d_short)
    return table


_EDGE_TABLE = _build_edge_table()


def edge_vectors() -> dict[RVector, EdgeClass]:
    """The 20 admissible edge vectors (10 long, 10 short) with their classes."""
    return {RVector(n): c for n, c in _EDGE_TABLE.items()}


def classify_edge(delta: RVector) -> EdgeClass:
    if not isinstance(delta, RVector):
        raise TypeError("edges live in R")
    return _EDGE_TABLE.get(delta.n, NOT_AN_EDGE)


def _self_test() -> None:
    """Exact checks the integer substitution relies on."""
    inv_phi = as_quad(INV_PHI)
    for dual in (False, True):
        for j in range(5):
            lhs = star_vector(j - 1, dual) + star_vector(j + 1, dual)
            rhs = star_vector(j, dual).scale(inv_phi)
            if lhs != rhs:
                raise AssertionError(f"star identity fails at j={j}, dual={dual}")
        total = _ORIGIN
        for j in range(5):
            total = total + star_vector(j, dual)
        if not total.is_zero():
            raise AssertionError("star does not sum to zero")
        for j in range(5):
            if star_vector(j, dual).norm2() != QuadExt(1):
                raise AssertionError("star vector not unit length")
    if len(_EDGE_TABLE) != 20:
        raise AssertionError("edge vectors are not pairwise distinct")


_self_test()


# sin(2 pi m / 5) = (s/2) * _SIN_UNITS[m] with entries in {0, +-1, +-1/phi}, written as
# (integer part, 1/phi part).  Cross products of star vectors only need these.
_SIN_UNITS = ((0, 0), (1, 0), (0, 1), (0, -1), (-1, 0))


def cross_sign(u: _StarVector, v: _StarVector) -> int:
    """Exact sign of ``cross(embed(u), embed(v))`` from the integer coordinates."""
    if type(u) is not type(v):
        raise TypeError("mixed bases")
    p = q = 0
    for i, a in enumerate(u.n):
        if not a:
            continue
        for j, b in enumerate(v.n):
            if not b:
                continue
            ip, iq = _SIN_UNITS[(j - i) % 5]
            p += a * b * ip
            q += a * b * iq
    # sign of p + q/phi = p + q(phi - 1)
    return GoldenNum(p - q, q).sign()
