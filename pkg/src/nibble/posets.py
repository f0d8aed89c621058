"""Finite posets, their order-ideal lattices, and the memoized ideal game.

An order ideal is stored as a bitmask over the poset's elements (bit i =
element i is in the ideal).  Bit order is the element order fixed at
construction, so masks are canonical memo keys.  Moves remove a nonempty
subset of the ideal's maximal elements, which is exactly a nontrivial move
in the distributive lattice J(P).
"""

from __future__ import annotations

from .errors import HypothesisViolated, InvalidShape, StateLimit
from .lattice import FiniteLattice, WinLabel

MAX_MEMO = 50_000_000


class FinitePoset:
    """Finite poset from Hasse covers; (child, parent) means parent covers child."""

    __slots__ = ("n", "covers", "children", "parents", "topo", "down", "up", "labels")

    def __init__(self, n, covers, labels=None):
        covers = sorted(set((int(c), int(p)) for c, p in covers))
        self.n = n
        self.covers = tuple(covers)
        self.labels = tuple(labels) if labels is not None else None
        children = [[] for _ in range(n)]
        parents = [[] for _ in range(n)]
        for c, p in covers:
            if not (0 <= c < n and 0 <= p < n):
                raise ValueError(f"cover ({c}, {p}) out of range")
            children[p].append(c)
            parents[c].append(p)
        self.children = tuple(tuple(x) for x in children)
        self.parents = tuple(tuple(x) for x in parents)
        self.topo = self._toposort()
        down = [0] * n
        for x in self.topo:
            m = 1 << x
            for c in self.children[x]:
                m |= down[c]
            down[x] = m
        self.down = down
        up = [0] * n
        for x in reversed(self.topo):
            m = 1 << x
            for p in self.parents[x]:
                m |= up[p]
            up[x] = m
        self.up = up

    def _toposort(self):
        indeg = [len(self.children[x]) for x in range(self.n)]
        order = [x for x in range(self.n) if indeg[x] == 0]
        i = 0
        while i < len(order):
            x = order[i]
            i += 1
            for p in self.parents[x]:
                indeg[p] -= 1
                if indeg[p] == 0:
                    order.append(p)
        if len(order) != self.n:
            raise ValueError("poset covers contain a cycle")
        return order

    # -- ideals ------------------------------------------------------------

    @property
    def full(self):
        return (1 << self.n) - 1

    def is_ideal(self, mask):
        for x in range(self.n):
            if mask & (1 << x):
                for c in self.children[x]:
                    if not mask & (1 << c):
                        return False
        return True

    def ideal_of(self, elements):
        mask = 0
        for e in elements:
            mask |= 1 << e
        if not self.is_ideal(mask):
            raise ValueError("element set is not down-closed")
        return mask

    def principal_ideal(self, x):
        return self.down[x]

    def max_elements(self, mask):
        """Maximal elements of the ideal: members with no parent inside."""
        out = []
        for x in range(self.n):
            if mask & (1 << x) and not any(mask & (1 << p) for p in self.parents[x]):
                out.append(x)
        return out

    def ideal_moves(self, mask, include_trivial=True):
        """All ideals mask \\ T for T a subset of max(mask)."""
        maxima = self.max_elements(mask)
        moves = []
        for sub in range(1 if not include_trivial else 0, 1 << len(maxima)):
            t = 0
            s = sub
            i = 0
            while s:
                if s & 1:
                    t |= 1 << maxima[i]
                s >>= 1
                i += 1
            moves.append(mask & ~t)
        return moves

    def all_ideals(self):
        """Every order ideal, as a sorted list of masks (deterministic)."""
        seen = {self.full}
        stack = [self.full]
        while stack:
            mask = stack.pop()
            for x in self.max_elements(mask):
                child = mask & ~(1 << x)
                if child not in seen:
                    seen.add(child)
                    stack.append(child)
        return sorted(seen)

    def restrict(self, mask):
        """Induced subposet on the elements of `mask`, with Hasse covers
        recomputed by transitive reduction of the induced order."""
        elems = [x for x in range(self.n) if mask & (1 << x)]
        index = {x: i for i, x in enumerate(elems)}
        covers = []
        for i, x in enumerate(elems):
            for y in elems:
                if y == x or not (self.down[y] & (1 << x)):
                    continue
                # x < y in P; keep if no z in mask strictly between
                between = False
                for z in elems:
                    if z != x and z != y:
                        if (self.down[z] & (1 << x)) and (self.down[y] & (1 << z)):
                            between = True
                            break
                if not between:
                    covers.append((index[x], index[y]))
        labels = None
        if self.labels is not None:
            labels = [self.labels[x] for x in elems]
        return FinitePoset(len(elems), covers, labels), elems


class IdealGameSolver:
    """Memoized retrograde solver for the ideal game on one poset."""

    def __init__(self, poset, max_memo=MAX_MEMO):
        self.poset = poset
        self.max_memo = max_memo
        self.memo = {0: WinLabel.EETA}

    def label(self, mask):
        memo = self.memo
        if mask in memo:
            return memo[mask]
        poset = self.poset
        stack = [mask]
        while stack:
            cur = stack[-1]
            if cur in memo:
                stack.pop()
                continue
            moves = poset.ideal_moves(cur, include_trivial=False)
            pending = [m for m in moves if m not in memo]
            if pending:
                stack.extend(pending)
                continue
            atniss = any(memo[m] is WinLabel.EETA for m in moves)
            memo[cur] = WinLabel.ATNISS if atniss else WinLabel.EETA
            if len(memo) > self.max_memo:
                raise StateLimit(f"memo exceeded {self.max_memo} entries")
            stack.pop()
        return memo[mask]


def solve_ideal_game(poset, mask=None):
    """Game label of the ideal `mask` (default: the full poset)."""
    if mask is None:
        mask = poset.full
    if not poset.is_ideal(mask):
        raise ValueError("state is not an order ideal")
    return IdealGameSolver(poset).label(mask)


def count_eeta_ideals(poset, max_memo=MAX_MEMO):
    """Number of order ideals of P that are Eeta wins in J(P)."""
    solver = IdealGameSolver(poset, max_memo=max_memo)
    return sum(1 for i in poset.all_ideals() if solver.label(i) is WinLabel.EETA)


def explicit_ideal_lattice(poset):
    """J(P) as an explicit FiniteLattice; returns (lattice, mask_of_element)."""
    ideals = poset.all_ideals()
    index = {m: i for i, m in enumerate(ideals)}
    covers = []
    for m in ideals:
        for x in poset.max_elements(m):
            covers.append((index[m & ~(1 << x)], index[m]))
    lat = FiniteLattice(len(ideals), covers)
    return lat, ideals


def check_deep_poset(poset, delta, lam, mu):
    """Test the depth-invariance statement on one admissible instance.

    Requires mu <= delta-without-its-maxima <= delta <= lam (all ideals) and
    every non-maximal element of delta below at least 2 maximal elements of
    delta; raises HypothesisViolated otherwise.  Returns True iff the game
    label of J(lam \\ mu) equals the label of J(lam).
    """
    for mask, name in ((delta, "delta"), (lam, "lam"), (mu, "mu")):
        if not poset.is_ideal(mask):
            raise HypothesisViolated(f"{name} is not an order ideal")
    max_delta = 0
    for x in poset.max_elements(delta):
        max_delta |= 1 << x
    if mu & ~(delta & ~max_delta):
        raise HypothesisViolated("mu must lie inside delta minus max(delta)")
    if delta & ~lam:
        raise HypothesisViolated("delta must be contained in lam")
    for x in range(poset.n):
        bit = 1 << x
        if delta & bit and not max_delta & bit:
            above = poset.up[x] & max_delta & ~bit
            if bin(above).count("1") < 2:
                raise HypothesisViolated(
                    f"element {x} of delta lies below fewer than 2 maximal elements"
                )
    sub_full, _ = poset.restrict(lam)
    label_full = solve_ideal_game(sub_full)
    sub_skew, _ = poset.restrict(lam & ~mu)
    label_skew = solve_ideal_game(sub_skew)
    return label_full is label_skew


# -- shape constructors ----------------------------------------------------


def _boxes_to_poset(boxes):
    """Poset on a set of (row, col) boxes ordered componentwise, with Hasse
    covers from transitive reduction (skew shapes can have long covers)."""
    boxes = sorted(boxes)
    index = {b: i for i, b in enumerate(boxes)}
    covers = []
    for bi, (i, j) in enumerate(boxes):
        for (i2, j2) in boxes:
            if (i2, j2) == (i, j) or i2 > i or j2 > j:
                continue
            # (i2, j2) < (i, j); Hasse iff nothing strictly between
            between = False
            for (i3, j3) in boxes:
                if (i3, j3) in ((i, j), (i2, j2)):
                    continue
                if i2 <= i3 <= i and j2 <= j3 <= j:
                    between = True
                    break
            if not between:
                covers.append((index[(i2, j2)], bi))
    return FinitePoset(len(boxes), covers, labels=[f"{i},{j}" for i, j in boxes])


def skew_boxes(lam, mu=()):
    lam = tuple(lam)
    mu = tuple(mu)
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise InvalidShape(f"lam {lam} is not weakly decreasing")
    if any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)):
        raise InvalidShape(f"mu {mu} is not weakly decreasing")
    if len(mu) > len(lam) or any(
        mu[i] > lam[i] for i in range(len(mu))
    ):
        raise InvalidShape(f"mu {mu} is not contained in lam {lam}")
    boxes = []
    for i, lam_i in enumerate(lam, start=1):
        lo = mu[i - 1] if i - 1 < len(mu) else 0
        for j in range(lo + 1, lam_i + 1):
            boxes.append((i, j))
    return boxes


def rectangle(a, b):
    """The a-by-b rectangle poset (a rows of size b)."""
    return _boxes_to_poset(skew_boxes((b,) * a))


def staircase(n):
    """The staircase shape (n, n-1, ..., 1) as a box poset."""
    return _boxes_to_poset(skew_boxes(tuple(range(n, 0, -1))))


def skew_shape(lam, mu=()):
    """The skew shape lam \\ mu as a box poset (boxes ordered NW <= SE)."""
    return _boxes_to_poset(skew_boxes(lam, mu))


def type_a_root_poset(n):
    """Root poset of type A_n, realized as the n x n square minus the
    staircase with n-1 steps."""
    lam = (n,) * n
    mu = tuple(range(n - 1, 0, -1))
    return _boxes_to_poset(skew_boxes(lam, mu))


def shifted_staircase(n):
    """Pairs (i, j) with 1 <= i <= j <= n, ordered componentwise."""
    return _boxes_to_poset([(i, j) for i in range(1, n + 1) for j in range(i, n + 1)])


def from_covers(n, covers, labels=None):
    return FinitePoset(n, covers, labels)
