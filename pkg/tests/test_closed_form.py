"""Closed-form evaluation of integer/star compounds, both pipelines."""

import pytest

from partizan.arena import Arena
from partizan.closed_form import (
    FormError,
    NoStarError,
    STAR,
    block_decompose,
    block_value,
    chain_to_dyadic,
    compound_game,
    eval_prefix_blocks,
    eval_prefix_prepend,
    eval_seq,
    expand_units,
    int_chain_value,
    prepend,
    reduce_trailing_stars,
    strip_trailing_number,
)
from partizan.solver import Solver
from partizan.values import Dyadic, UptimalValue, VALUE_STAR, VALUE_ZERO, format_uptimal, up_value


def test_expand_units():
    assert expand_units((3,)) == [1, 1, 1]
    assert expand_units((-2,)) == [-1, -1]
    assert expand_units((1, 0, STAR, -2)) == [1, STAR, -1, -1]
    assert expand_units(()) == []
    with pytest.raises(FormError):
        expand_units(("x",))


def test_int_chain_value():
    assert int_chain_value((1, -1), 0) == Dyadic(1, 1)
    assert int_chain_value((1, -1), 2) == Dyadic(5, 1)
    assert int_chain_value((1, -1, -1, -1, -1), 0) == Dyadic(1, 4)
    assert int_chain_value((1, -1, 1), 0) == Dyadic(3, 2)
    with pytest.raises(FormError):
        int_chain_value((1, 1), 0)
    with pytest.raises(FormError):
        int_chain_value((-1, 1), 0)


def test_chain_to_dyadic():
    assert chain_to_dyadic([]) == Dyadic(0)
    assert chain_to_dyadic([1, 1, 1]) == Dyadic(3)
    assert chain_to_dyadic([-1, -1]) == Dyadic(-2)
    assert chain_to_dyadic([1, -1]) == Dyadic(-1, 1)
    assert chain_to_dyadic(expand_units((-1, -1, 1, -1, 1, 3))) == Dyadic(57, 4)


def test_strip_trailing_number():
    prefix, x = strip_trailing_number(expand_units((STAR,) * 6 + (-2, 2)))
    assert prefix == [STAR] * 6
    assert x == Dyadic(5, 2)
    prefix, x = strip_trailing_number([1, STAR])
    assert prefix == [1, STAR] and x == Dyadic(0)
    with pytest.raises(NoStarError):
        strip_trailing_number([1, 1])


def test_reduce_trailing_stars():
    assert reduce_trailing_stars([1, STAR, STAR, STAR]) == [1, STAR]
    assert reduce_trailing_stars([1, STAR, STAR]) == [1, STAR, STAR]
    assert reduce_trailing_stars([STAR]) == [STAR]
    with pytest.raises(FormError):
        reduce_trailing_stars([1])


def test_block_decompose():
    units = [-1, 1, 1, -1, 1, STAR, STAR, 1, 1, -1, 1, 1, 1, -1, STAR, STAR]
    blocks, tail_star = block_decompose(units)
    assert blocks == [[0, 2, 1], [0], [2, 3, 0]]
    assert tail_star is True
    blocks, tail_star = block_decompose([1, STAR])
    assert blocks == [[1]] and tail_star is False
    with pytest.raises(FormError):
        block_decompose([1, 1])  # no trailing star


def test_block_value_star_seed():
    assert block_value([2, 3, 0], STAR) == UptimalValue(star=1, ups=(-6, -3))
    assert block_value([0], STAR) == VALUE_ZERO
    with pytest.raises(FormError):
        block_value([0, 1], STAR)  # last entry must be 0 in a star context


def test_block_value_zero_seed():
    assert block_value([1], 0) == up_value(1, -1)
    assert block_value([0], 0) == VALUE_STAR
    with pytest.raises(FormError):
        block_value([1, 0], 0)  # last entry must be positive at the zero seed


def test_block_value_chained_context():
    inner = block_value([1], 0)
    assert block_value([1], inner) == up_value(1, -3)
    with pytest.raises(FormError):
        block_value([1], up_value(1))  # context must be negative star-plus-downs


def test_prepend_single_units():
    down = up_value(1, -1)
    assert prepend(1, down) == UptimalValue(star=1, ups=(-2,))
    assert prepend(STAR, down) == UptimalValue(star=1, ups=(-2,))
    assert prepend(-1, down) == UptimalValue(ups=(-1, -1))


def test_prefix_pipelines_match_known_values():
    a = [-1, 1, STAR, -1, -1, -1, 1, -1, STAR, STAR]
    b = [-1, 1, -1, STAR, -1, 1, STAR]
    assert format_uptimal(eval_prefix_prepend(a)) == "-0.43331 + *"
    assert format_uptimal(eval_prefix_prepend(b)) == "-0.3321"
    assert eval_prefix_blocks(a) == eval_prefix_prepend(a)
    assert eval_prefix_blocks(b) == eval_prefix_prepend(b)


def test_eval_seq_examples():
    cases = [
        ((-1, -3, -1), "-5"),
        ((-1, -1, 1, -1, 1, 3), "57/16"),
        ((STAR, STAR, STAR), "*"),
        ((1, -1, STAR, 3, -1, 1, STAR, STAR, STAR, STAR, -2, 1), "0.43331 + * + 1/4"),
        ((-1, 1, -1, STAR, -1, 1, STAR, 4, -1), "-0.3321 - 1/16"),
        ((STAR, STAR, STAR, STAR, STAR, STAR, -2, 2), "5/4"),
    ]
    for comps, expected in cases:
        assert format_uptimal(eval_seq(comps, "prepend")) == expected
        assert format_uptimal(eval_seq(comps, "blocks")) == expected


def test_eval_seq_zero_components_drop_out():
    assert eval_seq((0,)) == VALUE_ZERO
    assert eval_seq((1, 0, STAR)) == eval_seq((1, STAR))


def test_eval_seq_matches_solver_spot_checks():
    arena = Arena()
    solver = Solver(arena)
    from partizan.values import Relation, uptimal_to_position

    for comps in [(1, 1, STAR), (-2, STAR, 1), (STAR, 2, STAR, -1)]:
        v = eval_seq(comps)
        game = compound_game(arena, comps)
        assert solver.compare_positions((game,), uptimal_to_position(arena, v)) == Relation.EQ


def test_compound_game_components():
    arena = Arena()
    assert compound_game(arena, (1,)) == arena.integer(1)
    assert compound_game(arena, (STAR,)) == arena.star()
    assert compound_game(arena, (2, STAR)) == arena.seq(arena.integer(2), arena.star())
