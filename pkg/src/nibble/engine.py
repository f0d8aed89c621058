"""Playable game adapters: one interface over the supported state spaces.

Each adapter exposes the start state, the nontrivial moves with their JSON
encodings, an Eeta predicate (is the position a responder win), and a
canonical sort key so the engine's optimal play is reproducible: from a
first-player-win position it moves to the canonically least responder-win
successor, otherwise to the canonically least successor.
"""

from __future__ import annotations

from .errors import SizeLimit
from .lattice import FiniteLattice, WinLabel
from .posets import IdealGameSolver, skew_boxes, skew_shape
from .tamari import is_312_avoiding, is_eeta_tam, tam_ungar_moves, top_of_tam
from .weak import check_perm, solve_weak_interval, ungar_moves_perm
from .young import check_partition

MAX_SERVICE_STATES = 200_000


class SkewGame:
    """Corner-nibbling on a (skew) diagram: remove any nonempty corner set."""

    family = "skew"

    def __init__(self, lam, mu=()):
        self.lam = check_partition(lam)
        self.mu = check_partition(mu)
        self.poset = skew_shape(self.lam, self.mu)
        if self.poset.n > 60:
            raise SizeLimit(f"{self.poset.n} boxes is beyond the playable range")
        self.solver = IdealGameSolver(self.poset)
        self.boxes = [tuple(map(int, lbl.split(","))) for lbl in self.poset.labels]

    def start(self):
        return self.poset.full

    def state_json(self, mask):
        boxes = sorted(self.boxes[x] for x in range(self.poset.n) if mask & (1 << x))
        return {
            "family": self.family,
            "lam": list(self.lam),
            "mu": list(self.mu),
            "boxes": [list(b) for b in boxes],
            "corners": [list(b) for b in self.corners(mask)],
        }

    def corners(self, mask):
        return sorted(self.boxes[x] for x in self.poset.max_elements(mask))

    def legal_moves(self, mask):
        maxima = self.poset.max_elements(mask)
        moves = []
        for sub in range(1, 1 << len(maxima)):
            removed = [maxima[i] for i in range(len(maxima)) if sub & (1 << i)]
            t = 0
            for x in removed:
                t |= 1 << x
            move = sorted(self.boxes[x] for x in removed)
            moves.append(([list(b) for b in move], mask & ~t))
        moves.sort(key=lambda mv: mv[0])
        return moves

    def is_eeta(self, mask):
        return self.solver.label(mask) is WinLabel.EETA

    def canonical_key(self, mask):
        return mask

    def is_finished(self, mask):
        return mask == 0

    def render(self, mask):
        if not self.lam:
            return "(empty diagram)"
        live = {self.boxes[x] for x in range(self.poset.n) if mask & (1 << x)}
        corner_set = {tuple(b) for b in self.corners(mask)}
        lines = []
        for i in range(1, len(self.lam) + 1):
            row = []
            for j in range(1, self.lam[0] + 1):
                if j <= (self.mu[i - 1] if i - 1 < len(self.mu) else 0):
                    row.append("   ")  # removed inner shape
                elif (i, j) in corner_set:
                    row.append("[*]")  # removable corner
                elif (i, j) in live:
                    row.append("[ ]")
                elif j <= self.lam[i - 1]:
                    row.append(" . ")  # already eaten
                else:
                    row.append("   ")
            lines.append("".join(row).rstrip())
        return "\n".join(line for line in lines if line.strip())


class TamariGame:
    """Game on 312-avoiders from the decreasing word, moves by the
    componentwise slide recursion."""

    family = "tamari"

    def __init__(self, n):
        if n < 1 or n > 12:
            raise SizeLimit("tamari games are playable for 1 <= n <= 12")
        self.n = n
        self._move_memo = {}
        self._eeta_memo = {}

    def start(self):
        return top_of_tam(self.n)

    def state_json(self, w):
        return {"family": self.family, "n": self.n, "perm": list(w)}

    def legal_moves(self, w):
        moves = sorted(v for v in tam_ungar_moves(w, self._move_memo) if v != w)
        return [(list(v), v) for v in moves]

    def is_eeta(self, w):
        return is_eeta_tam(w, self._eeta_memo)

    def canonical_key(self, w):
        return w

    def is_finished(self, w):
        return w == tuple(range(1, self.n + 1))

    def render(self, w):
        return " ".join(map(str, w))


class WeakGame:
    """Game on all permutations under descent-run reversals."""

    family = "weak"

    def __init__(self, n, max_n=8):
        if n < 1 or n > max_n:
            raise SizeLimit(f"weak-order games are playable for 1 <= n <= {max_n}")
        self.n = n
        self._memo = {}

    def start(self):
        return tuple(range(self.n, 0, -1))

    def state_json(self, w):
        return {"family": self.family, "n": self.n, "perm": list(w)}

    def legal_moves(self, w):
        moves = sorted(v for v in ungar_moves_perm(w) if v != w)
        return [(list(v), v) for v in moves]

    def is_eeta(self, w):
        return solve_weak_interval(w, self._memo) is WinLabel.EETA

    def canonical_key(self, w):
        return w

    def is_finished(self, w):
        return w == tuple(range(1, self.n + 1))

    def render(self, w):
        return " ".join(map(str, w))


class LatticeGame:
    """Game on an explicit uploaded lattice; states are element ids."""

    family = "lattice"

    def __init__(self, lattice: FiniteLattice):
        if lattice.n > MAX_SERVICE_STATES:
            raise SizeLimit(f"{lattice.n} elements is beyond the playable range")
        self.lattice = lattice
        self.labels = lattice.solve()

    def start(self):
        return self.lattice.top

    def state_json(self, x):
        return {"family": self.family, "element": x, "n": self.lattice.n}

    def legal_moves(self, x):
        moves = sorted(y for y in self.lattice.ungar_moves(x) if y != x)
        return [(y, y) for y in moves]

    def is_eeta(self, x):
        return self.labels[x] is WinLabel.EETA

    def canonical_key(self, x):
        return x

    def is_finished(self, x):
        return x == self.lattice.bottom

    def render(self, x):
        name = self.lattice.labels[x] if self.lattice.labels else str(x)
        return f"element {x} ({name})"


def make_game(family, params):
    if family == "skew":
        return SkewGame(params.get("lam", []), params.get("mu", []))
    if family == "tamari":
        return TamariGame(int(params["n"]))
    if family == "weak":
        return WeakGame(int(params["n"]))
    if family == "lattice":
        spec = params["lattice"]
        lat = FiniteLattice(spec["n"], spec["covers"], spec.get("labels"))
        return LatticeGame(lat)
    raise ValueError(f"unknown family {family!r}")


def engine_move(game, state):
    """The engine's reply: canonically least Eeta successor if one exists,
    else the canonically least successor.  Returns (move_json, new_state)."""
    moves = game.legal_moves(state)
    if not moves:
        return None
    for move_json, nxt in sorted(moves, key=lambda mv: game.canonical_key(mv[1])):
        if game.is_eeta(nxt):
            return (move_json, nxt)
    return min(moves, key=lambda mv: game.canonical_key(mv[1]))


def winning_moves(game, state):
    """All moves landing on responder-win states (empty iff the position
    itself is a responder win)."""
    return [mv for mv, nxt in game.legal_moves(state) if game.is_eeta(nxt)]


def verify_engine_never_loses(game, start=None, max_states=10_000):
    """Exhaustive adversary search against the engine policy.

    From every reachable Eeta position with the opponent to move, every
    opponent move must (a) land on an Atniss position and (b) leave the
    engine a reply that restores an Eeta position; terminal states are then
    always reached with the opponent stuck.  Returns the number of Eeta
    positions checked; raises AssertionError on a refutation.
    """
    seen = set()
    stack = [game.start() if start is None else start]
    checked = 0
    while stack:
        state = stack.pop()
        key = game.canonical_key(state)
        if key in seen:
            continue
        seen.add(key)
        if len(seen) > max_states:
            raise SizeLimit(f"reachable state count exceeds {max_states}")
        if not game.is_eeta(state):
            continue
        checked += 1
        for _, nxt in game.legal_moves(state):
            assert not game.is_eeta(nxt), "a move from an Eeta position reached Eeta"
            reply = engine_move(game, nxt)
            assert reply is not None, "engine had no reply from an Atniss position"
            assert game.is_eeta(reply[1]), "engine reply failed to restore Eeta"
            stack.append(reply[1])
    return checked
