"""Exception types shared across the package.

Every structural failure names the offending elements so that callers (and
test logs) can see exactly what broke, not just that something did.
"""


class NibbleError(Exception):
    """Base class for all package errors."""


class CycleDetected(NibbleError):
    def __init__(self, elements):
        self.elements = tuple(elements)
        super().__init__(f"cover digraph has a cycle through elements {self.elements}")


class MultipleBottoms(NibbleError):
    def __init__(self, elements):
        self.elements = tuple(elements)
        super().__init__(f"expected a unique minimal element, found {self.elements}")


class MultipleTops(NibbleError):
    def __init__(self, elements):
        self.elements = tuple(elements)
        super().__init__(f"expected a unique maximal element, found {self.elements}")


class NotTransitivelyReduced(NibbleError):
    def __init__(self, child, parent):
        self.child = child
        self.parent = parent
        super().__init__(f"cover ({child}, {parent}) is implied by other covers")


class NotALattice(NibbleError):
    def __init__(self, x, y, lower_bounds):
        self.x = x
        self.y = y
        self.lower_bounds = tuple(lower_bounds)
        super().__init__(
            f"elements {x} and {y} have maximal common lower bounds "
            f"{self.lower_bounds}; a unique meet is required"
        )


class SizeLimit(NibbleError):
    pass


class StateLimit(NibbleError):
    pass


class InvalidShape(NibbleError):
    pass


class NotADescent(NibbleError):
    def __init__(self, position, perm):
        self.position = position
        self.perm = perm
        super().__init__(f"position {position} is not a descent of {perm}")


class PatternLongerThanWord(NibbleError):
    pass


class MalformedPath(NibbleError):
    pass


class OutOfTheoremScope(NibbleError):
    """The interval falls outside the characterization's hypotheses.

    Callers that want an answer anyway must fall back to the brute-force
    ideal-game oracle explicitly.
    """


class HypothesisViolated(NibbleError):
    pass


class NotDyck(NibbleError):
    pass


class ShapeOutOfRange(NibbleError):
    pass


class NonContracting(NibbleError):
    pass


class ZeroConstantTerm(NibbleError):
    pass


class NoSignChange(NibbleError):
    pass


class InsufficientData(NibbleError):
    pass


class MeetNotUnique(NibbleError):
    def __init__(self, x, y, candidates):
        self.x = x
        self.y = y
        self.candidates = tuple(candidates)
        super().__init__(
            f"meet of {x} and {y} is not unique; maximal lower bounds: {self.candidates}"
        )


class UnassignedVariable(NibbleError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"variable {name!r} has no assigned value")


class FormulaSyntaxError(NibbleError):
    def __init__(self, message, offset):
        self.offset = offset
        super().__init__(f"{message} (at byte offset {offset})")


class IllegalMove(NibbleError):
    def __init__(self, move, legal):
        self.move = move
        self.legal = legal
        super().__init__(f"move {move!r} is not legal; legal moves: {legal!r}")
