"""312-avoiding permutations as the Tamari lattice, with the game recursion.

A 312-avoider splits uniquely into indecomposable components under the
direct sum; an indecomposable one ends in 1 and peels as a smaller avoider
with the 1 slid underneath.  Moves act componentwise on direct sums; on an
indecomposable w the move either keeps the trailing 1 in place or slides it
in front of the final component's block.  The Eeta wins are exactly the
permutations whose components are all "even-districted": size 1, or built
over a factor with an even component count whose trimmed standardization is
again an Eeta win.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NonContracting, SizeLimit
from .lattice import FiniteLattice, WinLabel
from .series import TruncatedSeries
from .weak import lehmer_rank, standardize

MAX_ENUM_N = 14


def is_312_avoiding(w):
    n = len(w)
    for i1 in range(n - 2):
        for i2 in range(i1 + 1, n - 1):
            if w[i2] >= w[i1]:
                continue
            for i3 in range(i2 + 1, n):
                if w[i2] < w[i3] < w[i1]:
                    return False
    return True


def direct_sum(u, v):
    m = len(u)
    return tuple(u) + tuple(x + m for x in v)


def skew_sum(u, v):
    n = len(v)
    return tuple(x + n for x in u) + tuple(v)


def components(w):
    """Split into indecomposable direct summands (maximal prefix blocks)."""
    out = []
    start = 0
    high = 0
    for i, value in enumerate(w, start=1):
        if value > high:
            high = value
        if high == i:
            out.append(standardize(w[start:i]))
            start = i
    return out


def is_indecomposable(w):
    return len(w) > 0 and len(components(w)) == 1


def peel(w):
    """For indecomposable w (last entry 1) return w' with w = w' ominus 1."""
    assert w[-1] == 1, f"{w} does not end in 1"
    return tuple(v - 1 for v in w[:-1])


def tam_ungar_moves(w, _memo=None):
    """Move images of w inside the 312-avoiding sublattice (trivial included)."""
    w = tuple(w)
    if _memo is None:
        _memo = {}
    if w in _memo:
        return _memo[w]
    if len(w) <= 1:
        result = frozenset({w})
        _memo[w] = result
        return result
    comps = components(w)
    if len(comps) > 1:
        result = {()}
        for c in comps:
            moves = tam_ungar_moves(c, _memo)
            result = {direct_sum(a, b) for a in result for b in moves}
    else:
        vs = components(peel(w))
        partial = [tam_ungar_moves(v, _memo) for v in vs]
        # keep the 1 in the last position
        keep = {()}
        for moves in partial:
            keep = {direct_sum(a, b) for a in keep for b in moves}
        result = {skew_sum(a, (1,)) for a in keep}
        # or slide the 1 in front of the final component's block
        front = {()}
        for moves in partial[:-1]:
            front = {direct_sum(a, b) for a in front for b in moves}
        for a in front:
            for b in partial[-1]:
                result.add(direct_sum(skew_sum(a, (1,)), b))
    result = frozenset(result)
    _memo[w] = result
    return result


def is_even_districted(w, _memo=None):
    w = tuple(w)
    n = len(w)
    if n == 1:
        return True
    if n < 3 or w[-1] != 1:
        return False
    if len(components(peel(w))) % 2 != 0:
        return False
    return is_eeta_tam(standardize(w[: n - 2]), _memo)


def is_eeta_tam(w, _memo=None):
    """Eeta-win predicate: every component is even-districted."""
    w = tuple(w)
    if _memo is None:
        _memo = {}
    if w in _memo:
        return _memo[w]
    comps = components(w)
    if len(comps) > 1:
        result = all(is_eeta_tam(c, _memo) for c in comps)
    else:
        result = is_even_districted(w, _memo)
    _memo[w] = result
    return result


def tam_label(w, _memo=None):
    return WinLabel.EETA if is_eeta_tam(w, _memo) else WinLabel.ATNISS


def solve_tam_brute(w, _memo=None):
    """Game label by direct recursion over moves; the oracle for the predicate."""
    w = tuple(w)
    if _memo is None:
        _memo = {}
    move_memo = {}
    identity_cache = {}

    def is_terminal(v):
        if len(v) not in identity_cache:
            identity_cache[len(v)] = tuple(range(1, len(v) + 1))
        return v == identity_cache[len(v)]

    stack = [w]
    while stack:
        cur = stack[-1]
        if cur in _memo:
            stack.pop()
            continue
        if is_terminal(cur):
            _memo[cur] = WinLabel.EETA
            stack.pop()
            continue
        succs = [v for v in tam_ungar_moves(cur, move_memo) if v != cur]
        pending = [v for v in succs if v not in _memo]
        if pending:
            stack.extend(pending)
            continue
        atniss = any(_memo[v] is WinLabel.EETA for v in succs)
        _memo[cur] = WinLabel.ATNISS if atniss else WinLabel.EETA
        stack.pop()
    return _memo[w]


def _indecomposables(k, _cache={}):
    if k not in _cache:
        if k == 1:
            _cache[k] = [(1,)]
        else:
            _cache[k] = [skew_sum(w, (1,)) for w in all_312_avoiders(k - 1)]
    return _cache[k]


def all_312_avoiders(n, _cache={0: [()], 1: [(1,)]}):
    """All 312-avoiders of size n, generated structurally (no S_n filter)."""
    if n > MAX_ENUM_N:
        raise SizeLimit(f"n={n} exceeds the enumeration cap {MAX_ENUM_N}")
    if n in _cache:
        return _cache[n]
    out = list(_indecomposables(n))
    for k in range(1, n):
        for u in _indecomposables(k):
            for v in all_312_avoiders(n - k):
                out.append(direct_sum(u, v))
    _cache[n] = out
    return out


def top_of_tam(n):
    """The decreasing word, the top of the 312-avoiding sublattice."""
    return tuple(range(n, 0, -1))


def count_eeta_tam(n):
    """Predicate-enumeration count of Eeta wins among 312-avoiders of size n."""
    memo = {}
    return sum(1 for w in all_312_avoiders(n) if is_eeta_tam(w, memo))


def _square_one_minus_sq(gs, one):
    gg = gs * gs
    return (one - gg) * (one - gg)


def g_f_series(order):
    """(G, F): indecomposable and full Eeta-win counting series.

    G solves G = z + z^2 (G + G^2) / (1 - G^2)^2, computed coefficient by
    coefficient from the cleared-denominator recurrence; F = G / (1 - G).
    The functional equation is re-verified exactly on the result.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    zero = Fraction(0)
    g = [zero] * (order + 1)
    gg = [zero] * (order + 1)   # G^2
    g4 = [zero] * (order + 1)   # G^4
    p = [zero] * (order + 1)    # (1 - G^2)^2 = 1 - 2 G^2 + G^4
    p[0] = Fraction(1)
    for n in range(1, order + 1):
        gg[n] = sum(g[a] * g[n - a] for a in range(1, n))
        g4[n] = sum(gg[a] * gg[n - a] for a in range(2, n - 1))
        p[n] = -2 * gg[n] + g4[n]
        # G * P = z * P + z^2 * (G + G^2), coefficient n
        rhs = p[n - 1]
        if n >= 2:
            rhs += g[n - 2] + gg[n - 2]
        g[n] = rhs - sum(g[i] * p[n - i] for i in range(1, n))
    gs = TruncatedSeries(g, order)
    z = TruncatedSeries.z(order)
    one = TruncatedSeries.one(order)
    pw = _square_one_minus_sq(gs, one)
    residual = gs * pw - z * pw - z * z * (gs + gs * gs)
    if not residual.is_zero():
        raise NonContracting("the functional equation residual is nonzero")
    fs = gs / (one - gs)
    return gs, fs


def tamari_quartic_coeffs(order):
    """Coefficients (in y) of the degree-4 witness polynomial for F."""
    z = TruncatedSeries.z(order)
    one = TruncatedSeries.one(order)
    return [
        z,
        -one + 3 * z + z * z,
        -2 * one + 2 * z + 3 * z * z,
        3 * z * z,
        z * z,
    ]


def pi_down_compat(n):
    """Moves inside the sublattice = ambient weak-order moves projected down.

    Checks, for every 312-avoider of size n, that the recursive move set
    equals the image of the weak-order move set under the projection.
    """
    from .weak import pi_down, ungar_moves_perm

    move_memo = {}
    for w in all_312_avoiders(n):
        ambient = frozenset(pi_down(v) for v in ungar_moves_perm(w))
        if ambient != tam_ungar_moves(w, move_memo):
            return False
    return True


def _inv_set(w, _cache={}):
    if w not in _cache:
        _cache[w] = frozenset(
            (w[j], w[i])
            for i in range(len(w))
            for j in range(i + 1, len(w))
            if w[i] > w[j]
        )
    return _cache[w]


def explicit_tamari_lattice(n, max_n=7):
    """The 312-avoiding sublattice as an explicit FiniteLattice.

    Covers of w are the maximal elements of its nontrivial move images
    (maximality in the weak order, i.e. by inversion-set containment).
    Returns (lattice, element_words).
    """
    if n > max_n:
        raise SizeLimit(f"n={n} exceeds the explicit-lattice cap {max_n}")
    words = sorted(all_312_avoiders(n), key=lambda w: lehmer_rank([v - 1 for v in w]))
    index = {w: i for i, w in enumerate(words)}
    move_memo = {}
    covers = []
    for w in words:
        succ = [v for v in tam_ungar_moves(w, move_memo) if v != w]
        for v in succ:
            inv_v = _inv_set(v)
            if not any(u != v and _inv_set(u) > inv_v for u in succ):
                covers.append((index[v], index[w]))
    lat = FiniteLattice(
        len(words), covers, labels=[",".join(map(str, w)) for w in words]
    )
    return lat, words
