"""Outcome and order decisions by memoized search."""

import pytest

from partizan.arena import Arena, BudgetExceeded
from partizan.solver import OutcomeClass, Solver, seq_outcome_formula
from partizan.values import Dyadic, Relation


def test_basic_outcomes():
    arena = Arena()
    solver = Solver(arena)
    assert solver.outcome(arena.zero) == OutcomeClass.P
    assert solver.outcome(arena.star()) == OutcomeClass.N
    assert solver.outcome(arena.integer(1)) == OutcomeClass.L
    assert solver.outcome(arena.integer(-2)) == OutcomeClass.R
    assert solver.outcome(arena.up_kth(1)) == OutcomeClass.L
    assert solver.outcome(arena.down_kth(1)) == OutcomeClass.R


def test_sum_outcomes_split_components():
    arena = Arena()
    solver = Solver(arena)
    up, star = arena.up_kth(1), arena.star()
    assert solver.sum_outcome((up, star)) == OutcomeClass.N
    assert solver.sum_outcome((arena.integer(3), arena.integer(-3))) == OutcomeClass.P
    assert solver.sum_outcome(()) == OutcomeClass.P
    # the same games handed as one interned sum agree
    assert solver.outcome(arena.add(up, star)) == OutcomeClass.N


def test_compare_and_leq():
    arena = Arena()
    solver = Solver(arena)
    star, zero = arena.star(), arena.zero
    assert solver.compare(star, zero) == Relation.CONFUSED
    assert solver.compare(arena.integer(2), arena.integer(1)) == Relation.GT
    assert solver.compare(arena.dyadic(Dyadic(1, 2)), arena.dyadic(Dyadic(1, 1))) == Relation.LT
    assert solver.leq(zero, arena.up_kth(1))
    assert not solver.leq(arena.up_kth(1), zero)
    assert solver.eq(arena.add(star, star), zero)


def test_compare_positions_multiset():
    arena = Arena()
    solver = Solver(arena)
    star = arena.star()
    assert solver.compare_positions((star, star), ()) == Relation.EQ
    assert solver.leq_positions((star,), (star, arena.up_kth(1)))
    ups = (arena.up_kth(1), arena.up_kth(1))
    assert solver.compare_positions(ups, (star,)) == Relation.GT


def test_seq_values_match_known_numbers():
    arena = Arena()
    solver = Solver(arena)
    g = arena.seq(arena.integer(1), arena.integer(-1))
    assert solver.eq(g, arena.dyadic(Dyadic(-1, 1)))
    chain = arena.seq_many([arena.integer(-1), arena.integer(-3), arena.integer(-1)])
    assert solver.eq(chain, arena.integer(-5))


def test_misere_outcomes():
    arena = Arena()
    solver = Solver(arena)
    assert solver.misere_outcome(arena.zero) == OutcomeClass.N
    assert solver.misere_outcome(arena.star()) == OutcomeClass.P
    # a free move is a liability when the last mover loses
    assert solver.misere_outcome(arena.integer(1)) == OutcomeClass.R
    assert solver.misere_outcome(arena.integer(-1)) == OutcomeClass.L


def test_seq_outcome_formula_cases():
    arena = Arena()
    solver = Solver(arena)
    star = arena.star()
    for g in [arena.zero, star, arena.integer(1), arena.up_kth(1)]:
        for h in [arena.zero, star, arena.integer(-2)]:
            want = solver.outcome(arena.seq(g, h))
            got = seq_outcome_formula(
                solver.outcome(g), solver.outcome(arena.seq(g, star)), solver.outcome(h)
            )
            assert got == want


def test_solver_budget():
    arena = Arena(max_nodes=30)
    solver = Solver(arena)
    with pytest.raises(BudgetExceeded):
        g = arena.zero
        for n in range(100):
            g = arena.game((g,), (g, arena.integer(n % 3)))
            solver.outcome(g)
