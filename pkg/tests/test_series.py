from fractions import Fraction

import pytest

from nibble.errors import (
    InsufficientData,
    NoSignChange,
    NonContracting,
    ZeroConstantTerm,
)
from nibble.series import (
    BivariateSeries,
    TruncatedSeries,
    asymptotic_gamma,
    bisect_root,
    fixpoint_solve,
    poly_eval_series,
)


def test_reciprocal_geometric():
    one_minus_z = TruncatedSeries([1, -1], 10)
    geo = one_minus_z.reciprocal()
    assert [geo[i] for i in range(11)] == [Fraction(1)] * 11


def test_reciprocal_requires_unit():
    with pytest.raises(ZeroConstantTerm):
        TruncatedSeries([0, 1], 5).reciprocal()


def test_mul_inverse_roundtrip():
    s = TruncatedSeries([1, 3, -2, 5, 7], 12)
    prod = s * s.reciprocal()
    assert prod == TruncatedSeries.one(12)


def test_alternating_identity():
    # (1+z) * (1 - z + z^2 - ...) = 1
    alt = TruncatedSeries([(-1) ** i for i in range(9)], 8)
    assert (TruncatedSeries([1, 1], 8) * alt).is_zero() is False
    assert (TruncatedSeries([1, 1], 8) * alt) == TruncatedSeries.one(8)


def test_truncation_discipline():
    a = TruncatedSeries([1, 1], 3)
    b = TruncatedSeries([1, 2, 3], 7)
    assert (a * b).order == 3
    assert (a + b).order == 3


def test_fixpoint_tamari_equation():
    order = 10

    def step(g):
        z = TruncatedSeries.z(order)
        one = TruncatedSeries.one(order)
        gg = g * g
        return z + z * z * (g + gg) / ((one - gg) * (one - gg))

    g = fixpoint_solve(step, TruncatedSeries.zero(order), order)
    assert [int(g[i]) for i in range(1, 6)] == [1, 0, 1, 1, 3]


def test_fixpoint_dyck_system():
    order = 8

    def step(tup):
        f, fw, fs, g, h = tup
        z = TruncatedSeries.z(order)
        one = TruncatedSeries.one(order)
        return (
            one + z * (fs - one) * f,
            one + z * f * fw,
            one + z * f + z * g * (g - one),
            one + z * h + z * (fs - one) * (g - one),
            g,
        )

    seed = tuple(TruncatedSeries.one(order) for _ in range(5))
    f, fw, fs, g, h = fixpoint_solve(step, seed, order)
    assert [int(fw[i]) for i in range(4)] == [1, 1, 1, 2]
    assert g == h


def test_fixpoint_noncontracting():
    order = 5

    def shift_up(s):
        return s + TruncatedSeries([0, 0, 0, 0, 0, 1], order)

    with pytest.raises(NonContracting):
        fixpoint_solve(shift_up, TruncatedSeries.zero(order), order)


def test_poly_eval_constant_term():
    order = 6
    z = TruncatedSeries.z(order)
    one = TruncatedSeries.one(order)
    coeffs = [z, -one + 3 * z + z * z, -2 * one + 2 * z + 3 * z * z, 3 * z * z, z * z]
    at_zero = poly_eval_series(coeffs, TruncatedSeries.zero(order))
    assert at_zero == z


def test_bisect_sqrt2():
    root = bisect_root([-2, 0, 1], 1, 2, Fraction(1, 10**6))
    assert abs(float(root) - 2 ** 0.5) < 1e-5


def test_bisect_growth_polynomials():
    rho = bisect_root([-4, -8, 60, -148, -20, -155, -32, 32], 2, 4, Fraction(1, 10**6))
    assert abs(float(rho) - 2.90511) < 1e-4
    inner = bisect_root([1, -4, 4, -4], Fraction(1, 4), Fraction(2, 5), Fraction(1, 10**7))
    assert abs(float(inner) - 0.31945) < 1e-4
    assert abs(1 / float(inner) - 3.13040) < 1e-3


def test_bisect_no_sign_change():
    with pytest.raises(NoSignChange):
        bisect_root([1, 0, 1], 0, 1, Fraction(1, 100))


def test_asymptotic_gamma_synthetic():
    import math

    gamma = 0.8123
    rho = 2.5
    coeffs = [0] + [
        gamma / math.sqrt(math.pi) * n ** -1.5 * rho ** n for n in range(1, 301)
    ]
    est, residual = asymptotic_gamma(coeffs, rho)
    assert abs(est - gamma) < 1e-4
    assert residual < 1e-6


def test_asymptotic_gamma_needs_data():
    with pytest.raises(InsufficientData):
        asymptotic_gamma([0, 1, 2, 3], 2.0)


def test_bivariate_reciprocal():
    one = BivariateSeries.constant(1, 6, 6)
    x = BivariateSeries.x(6, 6)
    y = BivariateSeries.y(6, 6)
    denom = one - x - y
    inv = denom.reciprocal()
    # coefficient of x^i y^j is binomial(i + j, i)
    import math

    for i in range(7):
        for j in range(7):
            assert inv.coeff(i, j) == math.comb(i + j, i)


def test_bivariate_zero_constant():
    with pytest.raises(ZeroConstantTerm):
        BivariateSeries.x(3, 3).reciprocal()
