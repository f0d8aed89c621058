"""Explicit finite lattices and the brute-force game solver.

This module is the oracle substrate: every characterization elsewhere in the
package is cross-checked against `solve` on an explicit lattice.  Lattices
are kept deliberately simple -- element ids 0..n-1, Hasse covers as (child,
parent) pairs, order relation as per-element down-set bitmasks.

Game rules: starting from the top element, two players (Atniss moves first)
alternate nontrivial moves x -> meet({x} | T) for nonempty T inside the set
of elements x covers; whoever is stuck at the bottom loses.  `solve` labels
every element by retrograde analysis: an element is an Atniss win iff some
nontrivial move from it lands on an Eeta win.
"""

from __future__ import annotations

import heapq
import random
from enum import Enum

from .errors import (
    CycleDetected,
    MultipleBottoms,
    MultipleTops,
    NotALattice,
    NotTransitivelyReduced,
    SizeLimit,
)

MAX_ELEMENTS = 20_000
MAX_COVER_DEGREE = 20


class WinLabel(Enum):
    ATNISS = "Atniss"
    EETA = "Eeta"

    def flipped(self):
        return WinLabel.EETA if self is WinLabel.ATNISS else WinLabel.ATNISS


class FiniteLattice:
    """A validated finite lattice.

    Immutable after construction.  Construction checks, in order: element
    cap, acyclicity, transitive reduction, unique bottom and top, and
    existence/uniqueness of all pairwise meets.
    """

    __slots__ = (
        "n",
        "covers",
        "labels",
        "children",
        "parents",
        "topo",
        "topo_pos",
        "down",
        "bottom",
        "top",
    )

    def __init__(self, n, covers, labels=None, _validate_meets=True):
        if n <= 0:
            raise ValueError("a lattice needs at least one element")
        if n > MAX_ELEMENTS:
            raise SizeLimit(f"{n} elements exceeds the cap of {MAX_ELEMENTS}")
        covers = sorted(set((int(c), int(p)) for c, p in covers))
        for c, p in covers:
            if not (0 <= c < n and 0 <= p < n):
                raise ValueError(f"cover ({c}, {p}) references an element outside 0..{n-1}")
            if c == p:
                raise CycleDetected([c])
        self.n = n
        self.covers = tuple(covers)
        self.labels = tuple(labels) if labels is not None else None

        children = [[] for _ in range(n)]
        parents = [[] for _ in range(n)]
        for c, p in covers:
            children[p].append(c)
            parents[c].append(p)
        self.children = tuple(tuple(cs) for cs in children)
        self.parents = tuple(tuple(ps) for ps in parents)

        self.topo = self._toposort()
        self.topo_pos = [0] * n
        for pos, x in enumerate(self.topo):
            self.topo_pos[x] = pos

        bottoms = [x for x in range(n) if not self.children[x]]
        if len(bottoms) != 1:
            raise MultipleBottoms(bottoms)
        tops = [x for x in range(n) if not self.parents[x]]
        if len(tops) != 1:
            raise MultipleTops(tops)
        self.bottom = bottoms[0]
        self.top = tops[0]

        # down[x] = bitmask over topo positions of every element <= x.
        down = [0] * n
        for x in self.topo:
            mask = 1 << self.topo_pos[x]
            for c in self.children[x]:
                mask |= down[c]
            down[x] = mask
        self.down = down

        self._check_transitive_reduction()
        if _validate_meets:
            self._validate_meets()

    def _toposort(self):
        indeg = [0] * self.n
        for _, p in self.covers:
            indeg[p] += 1
        order = []
        ready = [x for x in range(self.n) if indeg[x] == 0]
        heapq.heapify(ready)
        while ready:
            x = heapq.heappop(ready)
            order.append(x)
            for p in self.parents[x]:
                indeg[p] -= 1
                if indeg[p] == 0:
                    heapq.heappush(ready, p)
        if len(order) != self.n:
            stuck = [x for x in range(self.n) if indeg[x] > 0]
            raise CycleDetected(stuck)
        return order

    def _check_transitive_reduction(self):
        for c, p in self.covers:
            # (c, p) is redundant iff c lies under some other child of p.
            cbit = 1 << self.topo_pos[c]
            for z in self.children[p]:
                if z != c and (self.down[z] & cbit):
                    raise NotTransitivelyReduced(c, p)

    def _validate_meets(self):
        for x in range(self.n):
            dx = self.down[x]
            for y in range(x + 1, self.n):
                inter = dx & self.down[y]
                m = self.topo[inter.bit_length() - 1]
                if inter & ~self.down[m]:
                    maximal = self._maximal_of_mask(inter)
                    raise NotALattice(x, y, maximal)

    def _maximal_of_mask(self, mask):
        out = []
        rest = mask
        while rest:
            pos = rest.bit_length() - 1
            e = self.topo[pos]
            out.append(e)
            rest &= ~self.down[e]
        return sorted(out)

    # -- order primitives -------------------------------------------------

    def leq(self, x, y):
        return bool(self.down[y] & (1 << self.topo_pos[x]))

    def meet(self, x, y):
        """Greatest lower bound; the intersection of the two down-sets has a
        unique maximum because construction validated the lattice."""
        inter = self.down[x] & self.down[y]
        return self.topo[inter.bit_length() - 1]

    def meet_all(self, elements):
        mask = None
        for e in elements:
            mask = self.down[e] if mask is None else (mask & self.down[e])
        if mask is None:
            raise ValueError("meet of an empty set")
        return self.topo[mask.bit_length() - 1]

    def ungar_moves(self, x):
        """All images of x under moves meet({x} | T), T a subset of cov(x).

        The result always contains x itself (T empty) and the image of the
        maximal move (T = all covers).  Enumeration is a DFS over the covers
        with dedup on partial meets, capped at 20 covers.
        """
        covs = self.children[x]
        if len(covs) > MAX_COVER_DEGREE:
            raise SizeLimit(
                f"element {x} covers {len(covs)} elements; cap is {MAX_COVER_DEGREE}"
            )
        results = {x}
        seen = set()
        stack = [(0, x)]
        while stack:
            idx, m = stack.pop()
            if idx == len(covs):
                continue
            stack.append((idx + 1, m))
            m2 = self.meet(m, covs[idx])
            results.add(m2)
            if (idx + 1, m2) not in seen:
                seen.add((idx + 1, m2))
                stack.append((idx + 1, m2))
        return results

    def solve(self):
        """Retrograde labels for every element, bottom-up in topological order."""
        labels = [None] * self.n
        for x in self.topo:
            if x == self.bottom:
                labels[x] = WinLabel.EETA
                continue
            atniss = False
            for y in self.ungar_moves(x):
                if y != x and labels[y] is WinLabel.EETA:
                    atniss = True
                    break
            labels[x] = WinLabel.ATNISS if atniss else WinLabel.EETA
        return labels

    def eeta_set(self):
        labels = self.solve()
        return {x for x in range(self.n) if labels[x] is WinLabel.EETA}

    def label_of_top(self):
        return self.solve()[self.top]

    def to_json_dict(self):
        d = {"n": self.n, "covers": [list(c) for c in self.covers]}
        if self.labels is not None:
            d["labels"] = list(self.labels)
        return d


def build_lattice(n, covers, labels=None):
    """Validated construction; see FiniteLattice for the checks performed."""
    return FiniteLattice(n, covers, labels)


def product(l1, l2, max_size=MAX_ELEMENTS):
    """Product lattice: pairs ordered componentwise; covers change exactly
    one coordinate by a cover."""
    n = l1.n * l2.n
    if n > max_size:
        raise SizeLimit(f"product has {n} elements; cap is {max_size}")

    def enc(a, b):
        return a * l2.n + b

    covers = []
    for a in range(l1.n):
        for c, p in ((c, a) for c in l1.children[a]):
            for b in range(l2.n):
                covers.append((enc(c, b), enc(p, b)))
    for b in range(l2.n):
        for c in l2.children[b]:
            for a in range(l1.n):
                covers.append((enc(a, c), enc(a, b)))
    labels = None
    if l1.labels is not None and l2.labels is not None:
        labels = [
            f"({l1.labels[a]},{l2.labels[b]})" for a in range(l1.n) for b in range(l2.n)
        ]
    return FiniteLattice(n, covers, labels)


def append_top(lat):
    """Add one new element covering the old top; flips the game label."""
    covers = list(lat.covers) + [(lat.top, lat.n)]
    labels = None
    if lat.labels is not None:
        labels = list(lat.labels) + ["+top"]
    return FiniteLattice(lat.n + 1, covers, labels)


def chain(k):
    """The k-element chain 0 < 1 < ... < k-1."""
    return FiniteLattice(k, [(i, i + 1) for i in range(k - 1)])


def random_lattice(rng, max_mid=10, edge_prob=0.35, max_tries=2000):
    """Sample a random small lattice for fuzzing.

    Draws a random DAG on a random number of middle elements, glues on a
    bottom and a top, transitively reduces, and rejects anything that fails
    lattice validation.  Returns (lattice, rejections).
    """
    rejections = 0
    for _ in range(max_tries):
        k = rng.randint(0, max_mid)
        n = k + 2
        bottom, top = 0, n - 1
        mids = list(range(1, k + 1))
        leq = [[False] * n for _ in range(n)]
        for i in range(n):
            leq[i][i] = True
        for ai in range(len(mids)):
            for bi in range(ai + 1, len(mids)):
                if rng.random() < edge_prob:
                    leq[mids[ai]][mids[bi]] = True
        # transitive closure over the mid elements
        for m in mids:
            for a in mids:
                for b in mids:
                    if leq[a][m] and leq[m][b]:
                        leq[a][b] = True
        for x in mids:
            leq[bottom][x] = True
            leq[x][top] = True
        leq[bottom][top] = True
        covers = []
        for a in range(n):
            for b in range(n):
                if a == b or not leq[a][b]:
                    continue
                if any(c != a and c != b and leq[a][c] and leq[c][b] for c in range(n)):
                    continue
                covers.append((a, b))
        try:
            return FiniteLattice(n, covers), rejections
        except NotALattice:
            rejections += 1
    raise RuntimeError("random lattice sampling failed to produce a lattice")


def random_lattice_pool(seed, count, max_mid=10):
    """Deterministic list of fuzzing lattices plus total rejection count."""
    rng = random.Random(seed)
    pool = []
    rejected = 0
    while len(pool) < count:
        lat, rej = random_lattice(rng, max_mid=max_mid)
        rejected += rej
        pool.append(lat)
    return pool, rejected
