"""Closed-form evaluation of sequential compounds of integers and stars.

The input is a component sequence like (-2, 1, -1, 4) or (1, -1, "*", 3),
read left to right as g1 -> g2 -> ... -> gk.  Zero components are dropped
(they are sequential identities) and integers expand to unit chains, so
everything reduces to sequences over {+1, -1, star}.

Evaluation splits the sequence at the rightmost star.  The integer tail is
an exact dyadic number; the star-terminated prefix is an infinitesimal
(star parity plus up-kth coefficients) found either by folding single-unit
prepend steps or by cutting the prefix into blocks and applying the block
formula right to left.  Both pipelines return the same value and exist to
check each other.
"""

from __future__ import annotations

from .values import (
    Dyadic,
    FormError,
    UptimalValue,
    VALUE_STAR,
    VALUE_ZERO,
    down_view,
    number_value,
    up_value,
)

STAR = "*"

Component = int | str

DOWN = UptimalValue(ups=(-1,))

PIPELINES = ("prepend", "blocks")


class NoStarError(ValueError):
    """Raised when an operation needing a star gets an all-integer sequence."""


def expand_units(seq) -> list:
    """Flatten components to units over {+1, -1, star}, dropping zeros."""
    units: list = []
    for comp in seq:
        if comp == STAR:
            units.append(STAR)
        elif isinstance(comp, int):
            units.extend([1 if comp > 0 else -1] * abs(comp))
        else:
            raise FormError(f"bad component {comp!r}")
    return units


def int_chain_value(a, m: int) -> Dyadic:
    """Value of a_n -> ... -> a_1 -> a_0 -> m with a_0 = 1, a_1 = -1.

    a is given low index first (a_0, a_1, ..., a_n), entries +-1, and m >= 0.
    The chain is worth m + sum(a_i / 2**i) exactly.
    """
    a = tuple(a)
    if len(a) < 2 or a[0] != 1 or a[1] != -1 or any(x not in (1, -1) for x in a):
        raise FormError("chain vector must be +-1 with a0=1, a1=-1")
    if m < 0:
        raise FormError("trailing integer must be nonnegative")
    n = len(a) - 1
    return Dyadic(m) + Dyadic(sum(x << (n - i) for i, x in enumerate(a)), n)


def chain_to_dyadic(units) -> Dyadic:
    """Exact value of a star-free unit chain."""
    units = list(units)
    if STAR in units:
        raise FormError("chain contains a star")
    if not units:
        return Dyadic(0)
    if all(u == 1 for u in units):
        return Dyadic(len(units))
    if all(u == -1 for u in units):
        return Dyadic(-len(units))
    if units[-1] == -1:
        return -chain_to_dyadic([-u for u in units])
    # mixed, ending in +1: the trailing ones run supplies a_0 = 1 and m
    t = 0
    while t < len(units) and units[-1 - t] == 1:
        t += 1
    m = t - 1
    a = tuple(reversed(units[: len(units) - m]))
    return int_chain_value(a, m)


def strip_trailing_number(seq) -> tuple[list, Dyadic]:
    """Split at the rightmost star: (prefix incl. star, value of integer tail)."""
    seq = list(seq)
    for i in range(len(seq) - 1, -1, -1):
        if seq[i] == STAR:
            return seq[: i + 1], chain_to_dyadic(expand_units(seq[i + 1:]))
    raise NoStarError("sequence has no star")


def reduce_trailing_stars(prefix) -> list:
    """Cut the trailing star run mod 2 down to length 1 or 2."""
    prefix = list(prefix)
    r = 0
    while r < len(prefix) and prefix[-1 - r] == STAR:
        r += 1
    if r == 0:
        raise FormError("prefix must end with a star")
    if r <= 2:
        return prefix
    return prefix[: len(prefix) - r] + [STAR] * (2 if r % 2 == 0 else 1)


# ---------------------------------------------------------------------------
# prepend pipeline


def prepend(unit, v: UptimalValue) -> UptimalValue:
    """Value of unit -> G where G is worth the all-downs value v.

    Requires v = c.(star) + sum(d_i . down^i) with the last coefficient at
    least one.  Putting 1 or star in front raises every coefficient by one
    and flips the star; putting -1 in front appends a final down with
    coefficient one.
    """
    c, downs = down_view(v)
    if not downs or downs[-1] < 1:
        raise FormError("prepend needs a trailing down coefficient >= 1")
    if unit == STAR or unit == 1:
        c ^= 1
        downs = tuple(d + 1 for d in downs)
    elif unit == -1:
        downs = downs + (1,)
    else:
        raise FormError(f"bad unit {unit!r}")
    return UptimalValue(star=c, ups=tuple(-d for d in downs))


def _trailing_stars(units) -> int:
    r = 0
    while r < len(units) and units[-1 - r] == STAR:
        r += 1
    return r


def eval_prefix_prepend(prefix) -> UptimalValue:
    """Evaluate a star-terminated prefix by folding prepend right to left.

    The base consumes '1 -> star' or '-1 -> star -> star', both worth down;
    a prefix ending the other way round is evaluated through its negative.
    """
    units = expand_units(prefix)
    r = _trailing_stars(units)
    if r not in (1, 2):
        raise FormError("prefix must end in one or two stars")
    if r == len(units):
        raise FormError("prefix is all stars")
    u = units[-r - 1]
    if (u, r) not in ((1, 1), (-1, 2)):
        flipped = [-x if x != STAR else STAR for x in units]
        return -eval_prefix_prepend(flipped)
    v = DOWN
    for unit in reversed(units[: -r - 1]):
        v = prepend(unit, v)
    return v


# ---------------------------------------------------------------------------
# block pipeline


def _segment_to_block(seg) -> list[int]:
    # counts of +1 runs separated by -1 markers, high index first
    counts = [0]
    for u in seg:
        if u == 1:
            counts[-1] += 1
        else:
            counts.append(0)
    return counts


def block_decompose(units) -> tuple[list[list[int]], bool]:
    """Cut a normal-form unit prefix at its stars.

    Returns (blocks, tail_star); each block [a_n, ..., a_0] stands for the
    chain a_n -> -1 -> a_(n-1) -> -1 -> ... -> -1 -> a_0 -> star.  A prefix
    ending '1 -> star' keeps all stars as block terminators; one ending
    '-1 -> star -> star' leaves the final star as a bare tail.
    """
    units = list(units)
    r = _trailing_stars(units)
    if r == 1 and len(units) >= 2 and units[-2] == 1:
        body, tail_star = units, False
    elif r == 2 and len(units) >= 3 and units[-3] == -1:
        body, tail_star = units[:-1], True
    else:
        raise FormError("prefix is not in either block normal form")
    blocks: list[list[int]] = []
    seg: list = []
    for u in body:
        if u == STAR:
            blocks.append(_segment_to_block(seg))
            seg = []
        else:
            seg.append(u)
    return blocks, tail_star


def _certify_negative(c: int, downs: tuple[int, ...]) -> bool:
    # sum(d_i . down^i) is negative outright; against a star it needs some
    # coefficient of two, since the all-ones vector is confused with star
    if not downs or any(d < 1 for d in downs):
        return False
    if c == 0:
        return True
    return any(d >= 2 for d in downs)


def block_value(block, j) -> UptimalValue:
    """Value of the block compound [a_n, ..., a_0] -> j.

    j is 0, the star token, or the (negative, all-downs, nonincreasing)
    value of everything to the right.  The three cases follow the closed
    formula; shape violations raise FormError rather than being repaired.
    """
    block = list(block)
    if not block or any(a < 0 for a in block):
        raise FormError("block entries must be nonnegative counts")
    n = len(block) - 1
    suffix = [0] * (n + 2)  # suffix[i] = a_i + ... + a_n, low index first
    for i in range(n, -1, -1):
        suffix[i] = suffix[i + 1] + block[n - i]
    a0 = block[-1]
    if j == 0:
        if a0 < 1 and n > 0:
            raise FormError("zero-seeded block needs a_0 >= 1")
        downs = [1 + suffix[i] for i in range(n + 1)]
        downs[0] -= 1  # the formula's lone -down at index one
        return UptimalValue(star=(1 + suffix[0]) % 2, ups=tuple(-d for d in downs))
    if j == STAR:
        if a0 != 0:
            raise FormError("star-seeded block needs a_0 = 0")
        downs = [1 + suffix[i] for i in range(1, n + 1)]
        return UptimalValue(star=suffix[1] % 2, ups=tuple(-d for d in downs))
    if isinstance(j, UptimalValue):
        c, w = down_view(j)
        if any(w[i] < w[i + 1] for i in range(len(w) - 1)):
            raise FormError("context coefficients must be nonincreasing")
        if not _certify_negative(c, w):
            raise FormError("context value is not certifiably negative")
        bump = 1 + suffix[0]
        downs = [x + bump for x in w] + [1 + suffix[i] for i in range(1, n + 1)]
        return UptimalValue(star=(c + bump) % 2, ups=tuple(-d for d in downs))
    raise FormError(f"bad block context {j!r}")


def eval_prefix_blocks(prefix) -> UptimalValue:
    """Evaluate a star-terminated prefix through its block decomposition."""
    units = expand_units(prefix)
    r = _trailing_stars(units)
    if r not in (1, 2):
        raise FormError("prefix must end in one or two stars")
    if r == len(units):
        raise FormError("prefix is all stars")
    u = units[-r - 1]
    if (u, r) not in ((1, 1), (-1, 2)):
        flipped = [-x if x != STAR else STAR for x in units]
        return -eval_prefix_blocks(flipped)
    blocks, tail_star = block_decompose(units)
    v = block_value(blocks[-1], STAR if tail_star else 0)
    for blk in reversed(blocks[:-1]):
        v = block_value(blk, v)
    return v


# ---------------------------------------------------------------------------
# full pipeline


def eval_seq(seq, pipeline: str = "prepend") -> UptimalValue:
    """Exact value of a sequential compound of integers and stars."""
    if pipeline not in PIPELINES:
        raise ValueError(f"unknown pipeline {pipeline!r}")
    comps = [c for c in seq if c != 0]
    if not comps:
        return VALUE_ZERO
    if STAR not in comps:
        return number_value(chain_to_dyadic(expand_units(comps)))
    prefix, x = strip_trailing_number(comps)
    prefix = reduce_trailing_stars(prefix)
    if all(c == STAR for c in prefix):
        infinitesimal = VALUE_STAR if len(prefix) == 1 else VALUE_ZERO
    elif pipeline == "prepend":
        infinitesimal = eval_prefix_prepend(prefix)
    else:
        infinitesimal = eval_prefix_blocks(prefix)
    return infinitesimal + number_value(x)


def compound_game(arena, seq) -> int:
    """Intern the compound as an actual game for brute-force checking."""
    ids = [arena.star() if c == STAR else arena.integer(c) for c in seq]
    return arena.seq_many(ids)
