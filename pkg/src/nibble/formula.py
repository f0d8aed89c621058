"""Boolean-formula DSL compiled to game lattices.

Grammar (whitespace-insensitive, fully parenthesized binary operators):

    expr := var | '0' | '1' | '~' expr | '(' expr ('|'|'&') expr ')'

A true leaf compiles to the one-element lattice (a second-player win), a
false leaf to the two-chain (a first-player win).  Negation appends a new
top.  Disjunction glues the two operand lattices into a seven-extra-element
gadget whose top is a second-player win iff either operand's top is.
Conjunction is rewritten through De Morgan before compilation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FormulaSyntaxError, UnassignedVariable
from .lattice import FiniteLattice, WinLabel, append_top


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    value: int


@dataclass(frozen=True)
class Not:
    operand: object


@dataclass(frozen=True)
class Or:
    left: object
    right: object


@dataclass(frozen=True)
class And:
    left: object
    right: object


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, message):
        raise FormulaSyntaxError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else None

    def expect(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def parse_expr(self):
        # expr := term [('|'|'&') term]; one unparenthesized binary operator
        # is allowed per level, so nesting stays unambiguous
        left = self.parse_term()
        op = self.peek()
        if op in ("|", "&"):
            self.pos += 1
            right = self.parse_term()
            return Or(left, right) if op == "|" else And(left, right)
        return left

    def parse_term(self):
        ch = self.peek()
        if ch is None:
            self.error("unexpected end of input")
        if ch == "~":
            self.pos += 1
            return Not(self.parse_term())
        if ch == "(":
            self.pos += 1
            inner = self.parse_expr()
            self.expect(")")
            return inner
        if ch == "0" or ch == "1":
            self.pos += 1
            return Const(int(ch))
        if ch.isalpha() or ch == "_":
            start = self.pos
            while self.pos < len(self.text) and (
                self.text[self.pos].isalnum() or self.text[self.pos] == "_"
            ):
                self.pos += 1
            return Var(self.text[start : self.pos])
        self.error(f"unexpected character {ch!r}")


def parse(text):
    parser = _Parser(text)
    tree = parser.parse_expr()
    parser.skip_ws()
    if parser.pos != len(text):
        parser.error("trailing input after formula")
    return tree


def evaluate(formula, assignment):
    if isinstance(formula, Const):
        return formula.value
    if isinstance(formula, Var):
        if formula.name not in assignment:
            raise UnassignedVariable(formula.name)
        return 1 if assignment[formula.name] else 0
    if isinstance(formula, Not):
        return 1 - evaluate(formula.operand, assignment)
    if isinstance(formula, Or):
        return evaluate(formula.left, assignment) | evaluate(formula.right, assignment)
    if isinstance(formula, And):
        return evaluate(formula.left, assignment) & evaluate(formula.right, assignment)
    raise TypeError(f"not a formula node: {formula!r}")


def variables(formula):
    if isinstance(formula, Var):
        return {formula.name}
    if isinstance(formula, Const):
        return set()
    if isinstance(formula, Not):
        return variables(formula.operand)
    return variables(formula.left) | variables(formula.right)


def rewrite_and(formula):
    """Push every conjunction through De Morgan: a & b -> ~(~a | ~b)."""
    if isinstance(formula, (Var, Const)):
        return formula
    if isinstance(formula, Not):
        return Not(rewrite_and(formula.operand))
    if isinstance(formula, Or):
        return Or(rewrite_and(formula.left), rewrite_and(formula.right))
    if isinstance(formula, And):
        return Not(Or(Not(rewrite_and(formula.left)), Not(rewrite_and(formula.right))))
    raise TypeError(f"not a formula node: {formula!r}")


def or_gadget(lat_a, lat_b):
    """Glue two lattices into the disjunction gadget (seven fresh elements).

    Layout: a new bottom carries three short rails up to a shared "floor"
    element; both operand bottoms cover the floor, a join node covers both
    operand tops, and a new top covers the join node.

    Why this shape works: the floor is a first-player win (its nontrivial
    moves are the rails, plus the three-rail meet back to the bottom), so
    sitting on it costs the mover the game only if the opponent declines --
    making the floor a safe buffer under both operands.  The join node's
    moves are the two operand tops and their meet (the floor), so it is a
    second-player win exactly when both operands are first-player wins;
    the appended top negates that, which is the disjunction of the operand
    values.  The three rails (rather than one) keep the floor a first-player
    win: the mover can drop past them to the bottom in one move.
    """
    na, nb = lat_a.n, lat_b.n
    # element layout: [0..na) = A, [na..na+nb) = B, then the 7 fresh elements
    base = na + nb
    bottom, rail1, rail2, rail3, floor, join, top = range(base, base + 7)
    covers = []
    covers.extend(lat_a.covers)
    covers.extend((c + na, p + na) for c, p in lat_b.covers)
    covers.extend(
        [
            (bottom, rail1),
            (bottom, rail2),
            (bottom, rail3),
            (rail1, floor),
            (rail2, floor),
            (rail3, floor),
            (floor, lat_a.bottom),
            (floor, lat_b.bottom + na),
            (lat_a.top, join),
            (lat_b.top + na, join),
            (join, top),
        ]
    )
    return FiniteLattice(base + 7, covers)


def compile_formula(formula, assignment):
    """Compile to a validated lattice whose top label mirrors the truth value.

    Size accounting on the De Morgan rewrite of the formula: each true leaf
    contributes 1 element, each false leaf 2, each disjunction 7, each
    negation 1.
    """
    tree = rewrite_and(formula)

    def build(node):
        if isinstance(node, Const):
            return _leaf(node.value)
        if isinstance(node, Var):
            if node.name not in assignment:
                raise UnassignedVariable(node.name)
            return _leaf(1 if assignment[node.name] else 0)
        if isinstance(node, Not):
            return append_top(build(node.operand))
        if isinstance(node, Or):
            return or_gadget(build(node.left), build(node.right))
        raise TypeError(f"unexpected node after rewrite: {node!r}")

    return build(tree)


def _leaf(value):
    if value:
        return FiniteLattice(1, [])
    return FiniteLattice(2, [(0, 1)])


def compiled_size(formula, assignment):
    """Predicted element count for compile_formula, from the rewritten tree."""
    tree = rewrite_and(formula)

    def size(node):
        if isinstance(node, Const):
            return 1 if node.value else 2
        if isinstance(node, Var):
            return 1 if assignment[node.name] else 2
        if isinstance(node, Not):
            return size(node.operand) + 1
        return size(node.left) + size(node.right) + 7

    return size(tree)


def check_equivalence(formula, assignment):
    """Game value of the compiled lattice == truth value of the formula."""
    lat = compile_formula(formula, assignment)
    game_true = lat.label_of_top() is WinLabel.EETA
    return game_true == (evaluate(formula, assignment) == 1)


def enumerate_formulas(max_connectives, leaves):
    """All formula trees over the given leaves with at most the given number
    of connectives (~, |, &)."""
    by_count = [[leaf for leaf in leaves]]
    for k in range(1, max_connectives + 1):
        layer = []
        for sub in by_count[k - 1]:
            layer.append(Not(sub))
        for i in range(k):
            for left in by_count[i]:
                for right in by_count[k - 1 - i]:
                    layer.append(Or(left, right))
                    layer.append(And(left, right))
        by_count.append(layer)
    out = []
    for layer in by_count:
        out.extend(layer)
    return out


def ground_key(formula, assignment):
    """Canonical key of the formula with variables substituted; the compiled
    lattice (hence the game label) depends only on this."""
    if isinstance(formula, Const):
        return str(formula.value)
    if isinstance(formula, Var):
        if formula.name not in assignment:
            raise UnassignedVariable(formula.name)
        return "1" if assignment[formula.name] else "0"
    if isinstance(formula, Not):
        return "~" + ground_key(formula.operand, assignment)
    op = "|" if isinstance(formula, Or) else "&"
    return "(" + ground_key(formula.left, assignment) + op + ground_key(
        formula.right, assignment
    ) + ")"
