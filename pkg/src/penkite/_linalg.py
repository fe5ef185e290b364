"""Gaussian elimination over exact fields (Fraction, GoldenNum, QuadExt).

Matrices are lists of rows.  Entries only need ``+ - * /`` and truthiness for zero.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def _copy(m):
    return [list(r) for r in m]


def rref(m: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    a = _copy(m)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        a[r] = [x / piv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def rank(m) -> int:
    return len(rref(m)[1])


def det(m):
    n = len(m)
    a = _copy(m)
    result = None
    sign = 1
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c]), None)
        if p is None:
            return a[0][0] * 0
        if p != c:
            a[c], a[p] = a[p], a[c]
            sign = -sign
        piv = a[c][c]
        result = piv if result is None else result * piv
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] / piv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return result if sign > 0 else -result


def int_det(m: Sequence[Sequence[int]]) -> int:
    d = det([[Fraction(x) for x in r] for r in m])
    assert d.denominator == 1
    return int(d)


def solve(m, b):
    """Solve the square system ``m x = b``; raises on singular ``m``."""
    n = len(m)
    aug = [list(r) + [bi] for r, bi in zip(m, b)]
    red, piv = rref(aug)
    if piv[:n] != list(range(n)) or (len(piv) > n):
        raise ZeroDivisionError("singular system")
    return [red[i][n] for i in range(n)]


def inverse(m):
    n = len(m)
    zero = m[0][0] * 0
    one = zero + 1
    aug = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(m)]
    red, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]


def nullspace(m) -> list[list]:
    """Basis of the right null space, one vector per free column."""
    red, piv = rref(m)
    cols = len(m[0])
    zero = m[0][0] * 0
    one = zero + 1
    free = [c for c in range(cols) if c not in piv]
    basis = []
    for f in free:
        v = [zero] * cols
        v[f] = one
        for r, p in enumerate(piv):
            v[p] = -red[r][f]
        basis.append(v)
    return basis


def matmul(a, b):
    return [[sum((x * y for x, y in zip(row, col)), a[0][0] * 0) for col in zip(*b)] for row in a]


def matvec(a, v):
    return [sum((x * y for x, y in zip(row, v)), a[0][0] * 0) for row in a]
