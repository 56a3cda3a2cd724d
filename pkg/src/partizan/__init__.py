"""Exact algebra of short partizan games and their sequential compounds.

Games live in an interning Arena as immutable ids; a memoized Solver decides
outcomes and order; closed-form evaluation turns integer/star compounds into
uptimal values; the properties module brute-force checks every claimed law.
"""

from .arena import Arena, BudgetExceeded
from .closed_form import (
    NoStarError,
    PIPELINES,
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
from .cli import parse_expr, run
from .properties import (
    PropertyReport,
    REGISTRY,
    UnknownPropertyError,
    enumerate_games,
    sample_dicotic,
    sample_games,
    verify,
    verify_all,
)
from .solver import OutcomeClass, Solver, seq_outcome_formula
from .values import (
    Dyadic,
    FormError,
    ParseError,
    Relation,
    UptimalValue,
    VALUE_STAR,
    VALUE_ZERO,
    deg_of,
    format_uptimal,
    number_value,
    parse_uptimal,
    up_value,
    uptimal_sign,
    uptimal_to_game,
    uptimal_to_position,
)

__all__ = [
    "Arena",
    "BudgetExceeded",
    "Dyadic",
    "FormError",
    "NoStarError",
    "OutcomeClass",
    "PIPELINES",
    "ParseError",
    "PropertyReport",
    "REGISTRY",
    "Relation",
    "STAR",
    "Solver",
    "UnknownPropertyError",
    "UptimalValue",
    "VALUE_STAR",
    "VALUE_ZERO",
    "block_decompose",
    "block_value",
    "chain_to_dyadic",
    "compound_game",
    "deg_of",
    "enumerate_games",
    "eval_prefix_blocks",
    "eval_prefix_prepend",
    "eval_seq",
    "expand_units",
    "format_uptimal",
    "int_chain_value",
    "number_value",
    "parse_expr",
    "parse_uptimal",
    "prepend",
    "reduce_trailing_stars",
    "run",
    "sample_dicotic",
    "sample_games",
    "seq_outcome_formula",
    "strip_trailing_number",
    "up_value",
    "uptimal_sign",
    "uptimal_to_game",
    "uptimal_to_position",
    "verify",
    "verify_all",
]
