"""Dyck paths, run statistics, and the root-poset enumeration pipeline.

Runs (maximal blocks of equal steps) are classified two ways:

* a run is "weird" when it is odd and stays off the x-axis, or even and
  touches the x-axis ("touches" = its start or end point has height 0;
  interior points of a run can only reach height 0 at its ends);
* a run is "strange" when it is odd and avoids both boundary steps, or even
  and contains the first or last step of the path.

A path is (alpha, beta)-avoiding when no ascending run of class alpha is
immediately followed by a descending run of class beta.  Counting
(weird, weird)-avoiders of semilength n+1 counts Eeta wins in the ideal
lattice of the type-A root poset with n rows, via the boundary-word
encoding implemented at the bottom of this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotDyck, ShapeOutOfRange, SizeLimit
from .series import TruncatedSeries, bisect_root
from .young import (
    check_partition,
    contains,
    maximal_lpaths,
    partition_of_path,
    path_of,
    staircase_partition,
)

MAX_BRUTE_SEMILENGTH = 16


@dataclass(frozen=True)
class Run:
    step: str          # 'U' or 'D'
    length: int
    start_height: int
    end_height: int
    has_boundary_step: bool

    @property
    def odd(self):
        return self.length % 2 == 1

    @property
    def touches_axis(self):
        return self.start_height == 0 or self.end_height == 0

    @property
    def weird(self):
        return self.odd != self.touches_axis

    @property
    def strange(self):
        return self.odd != self.has_boundary_step


def validate_dyck(word):
    height = 0
    for i, step in enumerate(word):
        if step == "U":
            height += 1
        elif step == "D":
            height -= 1
        else:
            raise NotDyck(f"unexpected step {step!r} at position {i}")
        if height < 0:
            raise NotDyck(f"path dips below the axis at position {i}")
    if height != 0:
        raise NotDyck("path does not return to the axis")
    return word


def classify_runs(word):
    """The path's runs in order, with parity/axis/boundary flags."""
    validate_dyck(word)
    runs = []
    height = 0
    i = 0
    n = len(word)
    while i < n:
        j = i
        while j < n and word[j] == word[i]:
            j += 1
        length = j - i
        end = height + (length if word[i] == "U" else -length)
        runs.append(
            Run(
                step=word[i],
                length=length,
                start_height=height,
                end_height=end,
                has_boundary_step=(i == 0 or j == n),
            )
        )
        height = end
        i = j
    return runs


_CLASS_TESTS = {
    "odd": lambda r: r.odd,
    "weird": lambda r: r.weird,
    "strange": lambda r: r.strange,
}


def avoids(word, asc_class, desc_class):
    runs = classify_runs(word)
    asc = _CLASS_TESTS[asc_class]
    desc = _CLASS_TESTS[desc_class]
    for k in range(len(runs) - 1):
        if runs[k].step == "U" and runs[k + 1].step == "D":
            if asc(runs[k]) and desc(runs[k + 1]):
                return False
    return True


def dyck_paths(n):
    """All Dyck words of semilength n, by first-return decomposition."""
    if n == 0:
        yield ""
        return
    for k in range(n):
        for inner in dyck_paths(k):
            for rest in dyck_paths(n - 1 - k):
                yield "U" + inner + "D" + rest


def count_avoiding(n, asc_class, desc_class):
    """Brute-force count of (asc, desc)-avoiding Dyck paths of semilength n."""
    if n > MAX_BRUTE_SEMILENGTH:
        raise SizeLimit(f"semilength {n} exceeds brute-force cap {MAX_BRUTE_SEMILENGTH}")
    return sum(1 for w in dyck_paths(n) if avoids(w, asc_class, desc_class))


def gf_system_series(order):
    """Exact solution of the five-equation run-avoidance system.

    Returns (F, Fw, Fs, G, H): the counting series for (odd,odd)-, (weird,
    weird)-, (strange,strange)-, (odd,strange)- and (strange,odd)-avoiding
    paths.  The equations, with all constant terms 1 and H = G:

        Fw - 1 = z * F * Fw
        F  - 1 = z * (Fs - 1) * F
        Fs - 1 = z * F + z * G * (G - 1)
        G  - 1 = z * H + z * (Fs - 1) * (G - 1)

    Solved as a simultaneous fixpoint from the constant seeds, evaluating
    only the one new coefficient each equation pins per round; the full
    equations are re-verified on the result, so a non-contracting system
    cannot return quietly wrong series.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    one = Fraction(1)
    zero = Fraction(0)
    f = [one] + [zero] * order
    fw = [one] + [zero] * order
    fs = [one] + [zero] * order
    g = [one] + [zero] * order
    for n in range(1, order + 1):
        # coefficient n of each right-hand side uses only indices < n
        fw[n] = sum(f[i] * fw[n - 1 - i] for i in range(n))
        f[n] = sum(fs[i] * f[n - 1 - i] for i in range(1, n))
        fs[n] = f[n - 1] + sum(g[i] * g[n - 1 - i] for i in range(n) if n - 1 - i >= 1)
        g[n] = g[n - 1] + sum(fs[i] * g[n - 1 - i] for i in range(1, n) if n - 1 - i >= 1)
    series = tuple(
        TruncatedSeries(c, order) for c in (f, fw, fs, g, g)
    )
    _verify_gf_system(series)
    return series


def _verify_gf_system(series):
    from .errors import NonContracting

    f, fw, fs, g, h = series
    z = TruncatedSeries.z(f.order)
    one = TruncatedSeries.one(f.order)
    eqs = [
        fw - one - z * f * fw,
        f - one - z * (fs - one) * f,
        fs - one - z * f - z * g * (g - one),
        g - one - z * h - z * (fs - one) * (g - one),
        g - h,
    ]
    for k, residual in enumerate(eqs):
        if not residual.is_zero():
            raise NonContracting(f"equation {k + 1} has nonzero residual {residual.first_nonzero()}")


def type_a_eeta_count(n, _series_cache={}):
    """Eeta wins in the ideal lattice of the type-A root poset with n rows,
    read off as coefficient n+1 of the (weird,weird)-avoiding series."""
    order = max(n + 1, 8)
    key = order
    if key not in _series_cache or _series_cache[key][1].order < n + 1:
        _series_cache.clear()
        _series_cache[key] = gf_system_series(order)
    fw = _series_cache[key][1]
    value = fw[n + 1]
    assert value.denominator == 1
    return value.numerator


def type_a_series(order):
    """Series whose n-th coefficient (n >= 1) counts type-A Eeta wins:
    (Fw - 1 - z) / z."""
    _, fw, _, _, _ = gf_system_series(order + 1)
    coeffs = [fw[n + 1] for n in range(order + 1)]
    coeffs[0] = Fraction(0)  # drop the constant and linear terms of Fw
    return TruncatedSeries(coeffs, order)


# -- boundary-word encoding for root-poset ideals ---------------------------


def _padded_path(lam, n):
    """path'(lam): prepend north steps and append east steps so the word uses
    exactly n of each."""
    lam = check_partition(lam)
    if not contains((n,) * n, lam) or not contains(lam, staircase_partition(n - 1)):
        raise ShapeOutOfRange(
            f"need staircase({n - 1}) <= lam <= {n}x{n} square, got {lam}"
        )
    word = path_of(lam)
    s = word.count("N")
    t = word.count("E")
    return "N" * (n - s) + word + "E" * (n - t)


def type_a_encode(lam, n):
    """Dyck word U path*(lam) D for an ideal lam \\ staircase of the n-row
    type-A root poset; semilength n+1."""
    padded = _padded_path(lam, n)
    body = padded.replace("E", "U").replace("N", "D")
    word = "U" + body + "D"
    validate_dyck(word)
    return word


def type_a_decompose(lam, n):
    """Split path'(lam) at the steps shared with the inner staircase boundary.

    Returns (eta_words, sub_partitions, sub_sizes): the surviving maximal
    segments, each of which is the boundary word of a partition containing
    the next-smaller staircase inside its own square.
    """
    padded = _padded_path(lam, n)
    # Walk path'(lam) from (0,0) to (n,n) and drop every step that coincides
    # with a segment of the zigzag N(EN)^{n-1}E along the diagonal: north
    # steps (k,k)->(k,k+1) and east steps (k,k+1)->(k+1,k+1).
    segments = []
    current = []
    x = y = 0
    for step in padded:
        if step == "E":
            on_zigzag = y == x + 1
            x += 1
        else:
            on_zigzag = y == x
            y += 1
        if on_zigzag:
            if current:
                segments.append("".join(current))
                current = []
        else:
            current.append(step)
    if current:
        segments.append("".join(current))
    partitions = [partition_of_path(w) for w in segments]
    sizes = [w.count("N") for w in segments]
    return segments, partitions, sizes


def type_a_label_by_decomposition(lam, n):
    """Eeta iff every decomposition segment avoids an odd east block followed
    immediately by an odd north block."""
    from .lattice import WinLabel

    segments, _, _ = type_a_decompose(lam, n)
    for word in segments:
        for a, b in maximal_lpaths(word):
            if a % 2 == 1 and b % 2 == 1:
                return WinLabel.ATNISS
    return WinLabel.EETA


def radical_report(order):
    """Diagnostic for the printed nested-radical closed form.

    Computes W(z) = sum |E| z^n from the equation system, then evaluates the
    branch-independent residual

        ((2zW + 1 + 2z)^2 - (z^2 - 4z + 2))^2 - 4(1 - 4z + 4z^2 - 4z^3)

    as a truncated series.  A zero residual means the closed form holds up to
    the choice of radical branches; a nonzero one pins down where it first
    deviates.  Also reports a growth-rate estimate for W's coefficients and
    the singularity 1/rho from the inner radicand's smallest positive root.
    """
    w = type_a_series(order)
    z = TruncatedSeries.z(order)
    one = TruncatedSeries.one(order)
    inner_sq = 2 * w * z + one + 2 * z
    lhs = inner_sq * inner_sq - (z * z - 4 * z + one + one)
    residual = lhs * lhs - 4 * (one - 4 * z + 4 * z * z - 4 * z * z * z)
    first = residual.first_nonzero()

    coeffs = w.assert_integral()
    growth = None
    if order >= 8:
        n = order
        r1 = coeffs[n] / coeffs[n - 1]
        growth = r1 / (1 - 1.5 / n)  # first-order correction for n^(-3/2)
    root = bisect_root([1, -4, 4, -4], Fraction(1, 4), Fraction(2, 5), Fraction(1, 10**8))
    return {
        "order": order,
        "series_head": coeffs[1:9],
        "residual_first_nonzero": first,
        "residual_is_zero": first is None,
        "growth_rate_estimate": growth,
        "inner_radicand_root": float(root),
        "reciprocal_of_root": float(1 / root),
    }
