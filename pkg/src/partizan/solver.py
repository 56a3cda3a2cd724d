"""Brute-force outcome and order decisions over multiset sum positions.

Positions are sorted tuples of component ids with zeros dropped; a move
replaces one component by one of its options.  Keeping the sum as a
multiset avoids interning the flattened disjunctive sum, whose node count
is multiplicative, while reaching the same outcome.

Each memo entry holds the pair of perspective bits for a position: does
the mover win with Left first, and with Right first.  The four outcome
classes are read off that pair.  Misere play flips only the base case
(a player with no move wins instead of losing) and uses its own tables.
"""

from __future__ import annotations

import enum

from .arena import Arena, BudgetExceeded
from .values import Relation


class OutcomeClass(enum.Enum):
    """Winner under optimal play: Left, Right, first (N) or second (P) player."""

    L = "L"
    R = "R"
    N = "N"
    P = "P"

    def __str__(self) -> str:
        return self.value


def seq_outcome_formula(o_g: OutcomeClass, o_g_star: OutcomeClass,
                        o_h: OutcomeClass) -> OutcomeClass:
    """Outcome of g -> h from o(g), o(g -> star) and o(h).

    A Left win on h carries over to the compound, likewise for Right; a
    previous-player h leaves g to decide; a next-player h behaves like a
    star appended to g.
    """
    if o_h is OutcomeClass.L:
        return OutcomeClass.L
    if o_h is OutcomeClass.R:
        return OutcomeClass.R
    if o_h is OutcomeClass.P:
        return o_g
    return o_g_star


_OUTCOME = {
    (True, True): OutcomeClass.N,
    (True, False): OutcomeClass.L,
    (False, True): OutcomeClass.R,
    (False, False): OutcomeClass.P,
}

_RELATION = {
    OutcomeClass.P: Relation.EQ,
    OutcomeClass.L: Relation.GT,
    OutcomeClass.R: Relation.LT,
    OutcomeClass.N: Relation.CONFUSED,
}


class Solver:
    def __init__(self, arena: Arena):
        self.arena = arena
        self._first: dict[tuple[tuple[int, ...], bool], bool] = {}
        self._first_mis: dict[tuple[tuple[int, ...], bool], bool] = {}
        self._split: dict[int, tuple[int, ...]] = {}

    def _atoms(self, g: int) -> tuple[int, ...]:
        # a component known to be a disjunctive sum is kept as its addends,
        # which is the same game move for move and dedupes far better
        got = self._split.get(g)
        if got is None:
            parts = self.arena.sum_parts.get(g)
            if parts is None:
                got = (g,) if g != self.arena.zero else ()
            else:
                got = self._atoms(parts[0]) + self._atoms(parts[1])
            self._split[g] = got
        return got

    def position(self, components) -> tuple[int, ...]:
        flat: list[int] = []
        for c in components:
            flat.extend(self._atoms(c))
        return tuple(sorted(flat))

    def _moves(self, pos: tuple[int, ...], left: bool):
        options = self.arena.left_options if left else self.arena.right_options
        seen = set()
        for i, comp in enumerate(pos):
            if comp in seen:
                continue
            seen.add(comp)
            rest = pos[:i] + pos[i + 1:]
            for opt in options(comp):
                yield tuple(sorted(rest + self._atoms(opt)))

    def _wins_first(self, pos: tuple[int, ...], left: bool, misere: bool) -> bool:
        """Does the given player win moving first in pos (normal or misere)?"""
        memo = self._first_mis if misere else self._first
        out = memo.get((pos, left))
        if out is not None:
            return out
        if len(memo) >= 2 * self.arena.max_nodes:
            raise BudgetExceeded("solver memo budget exhausted")
        moved = False
        out = False
        for child in self._moves(pos, left):
            moved = True
            if not self._wins_first(child, not left, misere):
                out = True
                break
        if not moved:
            out = misere
        memo[(pos, left)] = out
        return out

    def outcome_position(self, components) -> OutcomeClass:
        pos = self.position(components)
        return _OUTCOME[(self._wins_first(pos, True, False),
                         self._wins_first(pos, False, False))]

    def outcome(self, g: int) -> OutcomeClass:
        return self.outcome_position((g,))

    def sum_outcome(self, components) -> OutcomeClass:
        return self.outcome_position(components)

    def misere_outcome(self, g: int) -> OutcomeClass:
        pos = self.position((g,))
        return _OUTCOME[(self._wins_first(pos, True, True),
                         self._wins_first(pos, False, True))]

    def compare_positions(self, a, b) -> Relation:
        """Order a against b by the outcome of the difference position."""
        neg = self.arena.negate
        diff = self.position(tuple(a) + tuple(neg(c) for c in b))
        return _RELATION[_OUTCOME[(self._wins_first(diff, True, False),
                                   self._wins_first(diff, False, False))]]

    def compare(self, g: int, h: int) -> Relation:
        return self.compare_positions((g,), (h,))

    def leq_positions(self, a, b) -> bool:
        return self.compare_positions(a, b) in (Relation.EQ, Relation.LT)

    def leq(self, g: int, h: int) -> bool:
        return self.leq_positions((g,), (h,))

    def eq(self, g: int, h: int) -> bool:
        return self.compare_positions((g,), (h,)) is Relation.EQ
