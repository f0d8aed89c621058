"""Partitions, boundary lattice paths, and the interval characterization.

A partition's boundary word is read from the southwest end: E^{lam_k} N
E^{lam_{k-1}-lam_k} N ... E^{lam_1-lam_2} N.  The word factors uniquely into
corner pieces E^a N^b (a, b >= 1); an interval [mu, lam] deep enough in the
lattice is an Eeta win iff no factor has both exponents odd.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import InvalidShape, MalformedPath, OutOfTheoremScope
from .lattice import WinLabel
from .series import BivariateSeries


def check_partition(parts):
    parts = tuple(int(p) for p in parts)
    if any(p <= 0 for p in parts):
        raise InvalidShape(f"nonpositive part in {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise InvalidShape(f"{parts} is not weakly decreasing")
    return parts


def contains(lam, mu):
    """Diagram containment mu <= lam."""
    lam, mu = check_partition(lam), check_partition(mu)
    return len(mu) <= len(lam) and all(mu[i] <= lam[i] for i in range(len(mu)))


def staircase_partition(n):
    return tuple(range(n, 0, -1))


def transpose(lam):
    lam = check_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def path_of(lam):
    """Boundary word of the diagram, as a string over 'E'/'N'."""
    lam = check_partition(lam)
    if not lam:
        return ""
    word = []
    prev = 0
    for part in reversed(lam):
        word.append("E" * (part - prev))
        word.append("N")
        prev = part
    return "".join(word)


def partition_of_path(word):
    """Inverse of path_of for words that start with E and end with N."""
    if word == "":
        return ()
    if word[0] != "E" or word[-1] != "N":
        raise MalformedPath("a nonempty boundary word starts with E and ends with N")
    parts = []
    east = 0
    for step in word:
        if step == "E":
            east += 1
        elif step == "N":
            parts.append(east)
        else:
            raise MalformedPath(f"unexpected step {step!r}")
    parts.reverse()
    return check_partition(parts)


def maximal_lpaths(word):
    """Factor a boundary word into (east, north) corner pieces.

    Valid boundary words are exactly the concatenations E^a1 N^b1 ... E^ak N^bk
    with all exponents >= 1; anything else raises MalformedPath.
    """
    if word == "":
        return []
    factors = []
    i = 0
    n = len(word)
    while i < n:
        a = 0
        while i < n and word[i] == "E":
            a += 1
            i += 1
        b = 0
        while i < n and word[i] == "N":
            b += 1
            i += 1
        if a == 0 or b == 0:
            raise MalformedPath(f"{word!r} is not a partition boundary word")
        factors.append((a, b))
    return factors


def min_staircase(mu):
    """Smallest n with mu contained in the staircase (n, n-1, ..., 1)."""
    mu = check_partition(mu)
    if not mu:
        return 0
    return max(part + i for i, part in enumerate(mu))


def eeta_predicate_interval(mu, lam):
    """Game label of the interval [mu, lam], by the boundary-word criterion.

    In scope when lam contains the staircase one step larger than the
    smallest staircase containing mu (the empty interval is trivially in
    scope); otherwise raises OutOfTheoremScope and the caller must fall back
    to the brute-force ideal-game oracle.
    """
    lam = check_partition(lam)
    mu = check_partition(mu)
    if not contains(lam, mu):
        raise InvalidShape(f"mu {mu} is not contained in lam {lam}")
    if lam == () and mu == ():
        return WinLabel.EETA
    n = min_staircase(mu)
    if not contains(lam, staircase_partition(n + 1)):
        raise OutOfTheoremScope(
            f"lam {lam} does not contain the staircase with {n + 1} steps"
        )
    for a, b in maximal_lpaths(path_of(lam)):
        if a % 2 == 1 and b % 2 == 1:
            return WinLabel.ATNISS
    return WinLabel.EETA


def subpartitions_in_box(a, b):
    """All partitions with at most a rows and parts at most b."""
    out = []

    def rec(prefix, row, maxpart):
        out.append(tuple(prefix))
        if row == a:
            return
        for part in range(maxpart, 0, -1):
            prefix.append(part)
            rec(prefix, row + 1, part)
            prefix.pop()

    rec([], 0, b)
    return out


def count_eeta_rectangle(a, b):
    """Number of ideals of the a x b rectangle that are Eeta wins, via the
    boundary-word criterion applied to each contained partition."""
    count = 0
    for lam in subpartitions_in_box(a, b):
        if lam == ():
            count += 1
            continue
        if all(
            not (x % 2 == 1 and y % 2 == 1) for x, y in maximal_lpaths(path_of(lam))
        ):
            count += 1
    return count


def rectangle_gf(order_x, order_y):
    """(1+x)(1+y) / (1 - (1+x)y^2 - (1+y)x^2); the coefficient of x^b y^a
    counts Eeta wins in the ideal lattice of the a x b rectangle."""
    one = BivariateSeries.constant(1, order_x, order_y)
    x = BivariateSeries.x(order_x, order_y)
    y = BivariateSeries.y(order_x, order_y)
    numer = (one + x) * (one + y)
    denom = one - (one + x) * y * y - (one + y) * x * x
    return numer / denom


def rectangle_gf_check(max_a, max_b):
    """Expand the rectangle generating function and compare every coefficient
    against the direct count; returns True on a perfect match."""
    gf = rectangle_gf(max_b, max_a)
    for a in range(max_a + 1):
        for b in range(max_b + 1):
            if gf.coeff(b, a) != Fraction(count_eeta_rectangle(a, b)):
                return False
    return True


def partitions_up_to(size):
    """All partitions of total size <= `size`."""
    out = [()]
    for total in range(1, size + 1):
        out.extend(_partitions_of(total))
    return out


def _partitions_of(total, maxpart=None):
    if maxpart is None:
        maxpart = total
    if total == 0:
        return [()]
    out = []
    for first in range(min(total, maxpart), 0, -1):
        for rest in _partitions_of(total - first, first):
            out.append((first,) + rest)
    return out


def random_inscope_pair(rng, max_size=16, max_mu_rows=3, max_mu_part=3):
    """Random (mu, lam) with lam containing the required staircase and
    |lam| <= max_size.  Used by the characterization cross-checks."""
    while True:
        rows = rng.randint(0, max_mu_rows)
        mu = []
        prev = max_mu_part
        for _ in range(rows):
            if prev == 0:
                break
            part = rng.randint(1, prev)
            mu.append(part)
            prev = part
        mu = tuple(mu)
        n = min_staircase(mu)
        base = staircase_partition(n + 1)
        if sum(base) > max_size:
            continue
        lam = list(base)
        budget = max_size - sum(base)
        # grow lam by random box additions that keep it a partition
        for _ in range(rng.randint(0, 2 * budget)):
            if budget == 0:
                break
            row = rng.randint(0, len(lam))
            if row == len(lam):
                lam.append(1)
                budget -= 1
            else:
                cap = lam[row - 1] if row > 0 else lam[0] + 1
                if lam[row] + 1 <= cap:
                    lam[row] += 1
                    budget -= 1
        lam = tuple(lam)
        return mu, lam
