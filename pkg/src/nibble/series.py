"""Exact truncated power-series arithmetic and numeric post-processing.

Coefficients are `fractions.Fraction` throughout, even though every series
this package actually computes has integer coefficients; keeping rationals
internally means a silent truncation or division bug shows up as a
non-integer coefficient instead of a wrong integer.  `assert_integral`
enforces integrality at the boundary.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import InsufficientData, NoSignChange, NonContracting, ZeroConstantTerm


class TruncatedSeries:
    """A univariate power series known exactly through order `order`.

    Immutable.  Binary operations truncate to the smaller of the two orders;
    arithmetic never consults coefficients beyond the truncation order.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order=None):
        coeffs = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be >= 0")
        coeffs = coeffs[: order + 1]
        coeffs.extend([Fraction(0)] * (order + 1 - len(coeffs)))
        self.coeffs = tuple(coeffs)
        self.order = order

    @classmethod
    def zero(cls, order):
        return cls([0], order)

    @classmethod
    def one(cls, order):
        return cls([1], order)

    @classmethod
    def z(cls, order):
        return cls([0, 1], order)

    def __getitem__(self, n):
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def truncate(self, order):
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.order))

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if self.order > 7 else ""
        return f"TruncatedSeries([{head}{tail}], order={self.order})"

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries([Fraction(other)], self.order)

    def __add__(self, other):
        other = self._coerce(other)
        order = min(self.order, other.order)
        return TruncatedSeries(
            [self.coeffs[i] + other.coeffs[i] for i in range(order + 1)], order
        )

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            c = Fraction(other)
            return TruncatedSeries([a * c for a in self.coeffs], self.order)
        order = min(self.order, other.order)
        out = [Fraction(0)] * (order + 1)
        for i, a in enumerate(self.coeffs[: order + 1]):
            if not a:
                continue
            for j in range(order + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(out, order)

    __rmul__ = __mul__

    def reciprocal(self):
        """Multiplicative inverse; requires an invertible constant term."""
        if self.coeffs[0] == 0:
            raise ZeroConstantTerm("cannot invert a series with zero constant term")
        inv0 = 1 / self.coeffs[0]
        out = [inv0] + [Fraction(0)] * self.order
        for n in range(1, self.order + 1):
            acc = Fraction(0)
            for k in range(1, n + 1):
                if self.coeffs[k]:
                    acc += self.coeffs[k] * out[n - k]
            out[n] = -inv0 * acc
        return TruncatedSeries(out, self.order)

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def shift(self, k):
        """Multiply by z**k."""
        if k < 0:
            raise ValueError("negative shift")
        return TruncatedSeries([Fraction(0)] * k + list(self.coeffs), self.order)

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def first_nonzero(self):
        """(index, coefficient) of the lowest-order nonzero term, or None."""
        for i, c in enumerate(self.coeffs):
            if c:
                return (i, c)
        return None

    def assert_integral(self):
        for i, c in enumerate(self.coeffs):
            if c.denominator != 1:
                raise ValueError(f"coefficient of z^{i} is non-integer: {c}")
        return [c.numerator for c in self.coeffs]


class BivariateSeries:
    """Power series in x and y, exact through orders (order_x, order_y)."""

    __slots__ = ("grid", "order_x", "order_y")

    def __init__(self, grid, order_x=None, order_y=None):
        if order_x is None:
            order_x = len(grid) - 1
        if order_y is None:
            order_y = max((len(row) for row in grid), default=1) - 1
        full = []
        for i in range(order_x + 1):
            row = grid[i] if i < len(grid) else []
            row = [Fraction(c) for c in row[: order_y + 1]]
            row.extend([Fraction(0)] * (order_y + 1 - len(row)))
            full.append(tuple(row))
        self.grid = tuple(full)
        self.order_x = order_x
        self.order_y = order_y

    @classmethod
    def constant(cls, value, order_x, order_y):
        return cls([[Fraction(value)]], order_x, order_y)

    @classmethod
    def x(cls, order_x, order_y):
        return cls([[0], [1]], order_x, order_y)

    @classmethod
    def y(cls, order_x, order_y):
        return cls([[0, 1]], order_x, order_y)

    def coeff(self, i, j):
        """Coefficient of x**i * y**j."""
        return self.grid[i][j]

    def __add__(self, other):
        ox = min(self.order_x, other.order_x)
        oy = min(self.order_y, other.order_y)
        return BivariateSeries(
            [
                [self.grid[i][j] + other.grid[i][j] for j in range(oy + 1)]
                for i in range(ox + 1)
            ],
            ox,
            oy,
        )

    def __neg__(self):
        return BivariateSeries(
            [[-c for c in row] for row in self.grid], self.order_x, self.order_y
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        ox = min(self.order_x, other.order_x)
        oy = min(self.order_y, other.order_y)
        out = [[Fraction(0)] * (oy + 1) for _ in range(ox + 1)]
        for i in range(ox + 1):
            for j in range(oy + 1):
                a = self.grid[i][j]
                if not a:
                    continue
                for k in range(ox + 1 - i):
                    row = other.grid[k]
                    for l in range(oy + 1 - j):
                        b = row[l]
                        if b:
                            out[i + k][j + l] += a * b
        return BivariateSeries(out, ox, oy)

    def reciprocal(self):
        if self.grid[0][0] == 0:
            raise ZeroConstantTerm("cannot invert a bivariate series with zero constant term")
        ox, oy = self.order_x, self.order_y
        inv00 = 1 / self.grid[0][0]
        out = [[Fraction(0)] * (oy + 1) for _ in range(ox + 1)]
        out[0][0] = inv00
        # Solve (self * out) = 1 degree by degree in (i, j).
        for i in range(ox + 1):
            for j in range(oy + 1):
                if i == 0 and j == 0:
                    continue
                acc = Fraction(0)
                for k in range(i + 1):
                    for l in range(j + 1):
                        if k == 0 and l == 0:
                            continue
                        c = self.grid[k][l]
                        if c:
                            acc += c * out[i - k][j - l]
                out[i][j] = -inv00 * acc
        return BivariateSeries(out, ox, oy)

    def __truediv__(self, other):
        return self * other.reciprocal()


def fixpoint_solve(mapping, seed, order, max_iter=None):
    """Solve S = mapping(S) for a tuple of series by formal fixpoint iteration.

    `seed` is a tuple of TruncatedSeries at truncation `order`; `mapping` must
    be a formal contraction (each application fixes at least one further
    coefficient order somewhere in the tuple).  Iterates until the tuple is
    exactly fixed, stopping early when it stabilizes; for a k-series system
    the information can take k rounds to cross one coefficient order, so the
    cap scales with both.  Verifies the result is actually fixed and raises
    NonContracting otherwise.
    """
    single = isinstance(seed, TruncatedSeries)
    current = (seed,) if single else tuple(seed)

    def apply(tup):
        res = mapping(tup[0]) if single else mapping(tup)
        return (res,) if isinstance(res, TruncatedSeries) else tuple(res)

    if max_iter is None:
        max_iter = (order + 2) * (len(current) + 1)
    for _ in range(max_iter):
        nxt = apply(current)
        if nxt == current:
            break
        current = nxt
    check = apply(current)
    if check != current:
        diverged = [
            k for k, (a, b) in enumerate(zip(current, check)) if a != b
        ]
        raise NonContracting(
            f"fixpoint iteration did not stabilize through order {order} "
            f"(series {diverged} still changing)"
        )
    return current[0] if single else current


def poly_eval_series(poly_coeffs, s):
    """Evaluate a polynomial in y whose coefficients are series in z, at y = s.

    `poly_coeffs[k]` is the coefficient of y**k (a TruncatedSeries or a
    constant).  Horner evaluation.
    """
    order = s.order
    coerced = [
        c if isinstance(c, TruncatedSeries) else TruncatedSeries([Fraction(c)], order)
        for c in poly_coeffs
    ]
    result = TruncatedSeries.zero(order)
    for c in reversed(coerced):
        result = result * s + c
    return result


def eval_poly(coeffs, x):
    """Evaluate sum(coeffs[k] * x**k) exactly; coeffs ascending."""
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + Fraction(c)
    return acc


def bisect_root(coeffs, lo, hi, tol):
    """Bisect a root of the polynomial with exact rational coefficients.

    Requires a sign change on [lo, hi]; returns a Fraction within `tol` of
    the root.  Fully deterministic.
    """
    lo = Fraction(lo)
    hi = Fraction(hi)
    tol = Fraction(tol)
    flo = eval_poly(coeffs, lo)
    fhi = eval_poly(coeffs, hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise NoSignChange(f"no sign change on [{lo}, {hi}]")
    while hi - lo > tol:
        mid = (lo + hi) / 2
        fmid = eval_poly(coeffs, mid)
        if fmid == 0:
            return mid
        if (fmid > 0) == (flo > 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return (lo + hi) / 2


def _log_abs(value):
    """Natural log of |value| for ints/Fractions of arbitrary magnitude."""
    if isinstance(value, Fraction):
        return _log_abs(value.numerator) - _log_abs(value.denominator)
    v = abs(int(value))
    if v == 0:
        raise ValueError("log of zero")
    return math.log(v)


def asymptotic_gamma(coeffs, rho, exponent_shift=0, min_terms=50):
    """Estimate gamma in a_n ~ gamma/sqrt(pi) * n**(-3/2) * rho**(n+shift).

    `coeffs` maps index 1..N to a_n (index 0 ignored/absent allowed: pass the
    list with a leading placeholder).  Works in log space because rho**n
    overflows fixed-width floats long before n = 400.  Fits
    s_n = gamma * (1 + c/n) by least squares over the top quartile of n and
    returns (gamma_estimate, fit_residual).
    """
    n_max = len(coeffs) - 1
    if n_max < min_terms:
        raise InsufficientData(f"need at least {min_terms} coefficients, got {n_max}")
    log_rho = math.log(float(rho))
    start = max(1, (3 * n_max) // 4)
    xs, ys = [], []
    for n in range(start, n_max + 1):
        a = coeffs[n]
        if a == 0:
            continue
        log_s = (
            _log_abs(a)
            + 0.5 * math.log(math.pi)
            + 1.5 * math.log(n)
            - (n + exponent_shift) * log_rho
        )
        xs.append(1.0 / n)
        ys.append(math.exp(log_s))
    if len(xs) < 2:
        raise InsufficientData("not enough nonzero coefficients in the fit window")
    # Least squares for y = alpha + beta * x; gamma = alpha.
    m = len(xs)
    sx = sum(xs)
    sy = sum(ys)
    sxx = sum(x * x for x in xs)
    sxy = sum(x * y for x, y in zip(xs, ys))
    denom = m * sxx - sx * sx
    beta = (m * sxy - sx * sy) / denom
    alpha = (sy - beta * sx) / m
    residual = math.sqrt(
        sum((y - (alpha + beta * x)) ** 2 for x, y in zip(xs, ys)) / m
    )
    return alpha, residual
