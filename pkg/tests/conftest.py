from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import strategies as st

from penkite.exactnum import GoldenNum, QuadExt

small_fractions = st.fractions(min_value=-50, max_value=50, max_denominator=40)
goldens = st.builds(GoldenNum, small_fractions, small_fractions)
quads = st.builds(QuadExt, goldens, goldens)


def oracle_value(x) -> mpmath.mpf:
    """Independent 60-digit evaluation of a GoldenNum / QuadExt from its coefficients."""
    with mpmath.workdps(60):
        phi = (1 + mpmath.sqrt(5)) / 2
        s = mpmath.sqrt(2 + phi)
        if isinstance(x, GoldenNum):
            return mpmath.mpf(x.a.numerator) / x.a.denominator + mpmath.mpf(x.b.numerator) / x.b.denominator * phi

        def g(y):
            return mpmath.mpf(y.a.numerator) / y.a.denominator + mpmath.mpf(y.b.numerator) / y.b.denominator * phi

        return g(x.u) + g(x.v) * s


def random_golden(rng: np.random.Generator, bound: int = 30) -> GoldenNum:
    a = Fraction(int(rng.integers(-bound, bound + 1)), int(rng.integers(1, 12)))
    b = Fraction(int(rng.integers(-bound, bound + 1)), int(rng.integers(1, 12)))
    return GoldenNum(a, b)


def random_quad(rng: np.random.Generator) -> QuadExt:
    return QuadExt(random_golden(rng), random_golden(rng))


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)
