"""Brute-force checks for every law the library claims.

Each suite enumerates or samples small games, recomputes both sides of one
identity, and collects counterexamples into a PropertyReport.  Reports are
deterministic for a fixed seed and bounds, so their rendered lines can be
diffed byte for byte across runs.  Nothing here proves anything: the point
is that the closed-form code and the search code must keep agreeing
wherever they overlap.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .arena import Arena, BudgetExceeded
from .closed_form import (
    PIPELINES,
    STAR,
    block_decompose,
    block_value,
    compound_game,
    eval_seq,
    expand_units,
    int_chain_value,
)
from .solver import OutcomeClass, Solver, seq_outcome_formula
from .values import (
    Dyadic,
    Relation,
    UptimalValue,
    VALUE_STAR,
    deg_of,
    format_uptimal,
    number_value,
    parse_uptimal,
    up_value,
    uptimal_sign,
    uptimal_to_position,
)


class UnknownPropertyError(KeyError):
    """Raised for a property id that is not in the registry."""


@dataclass
class PropertyReport:
    """Outcome of one verification suite.

    failures holds (inputs, expected, got) triples; inputs are printed in
    the structural or sequence text form so a counterexample can be rerun
    by hand.
    """

    name: str
    instances: int
    failures: list[tuple[str, str, str]]
    seed: int
    bounds: str

    @property
    def ok(self) -> bool:
        return not self.failures

    def lines(self):
        status = "ok" if self.ok else "FAIL"
        yield (
            f"prop={self.name} status={status} instances={self.instances} "
            f"failures={len(self.failures)} seed={self.seed} bounds=[{self.bounds}]"
        )
        for inputs, expected, got in self.failures:
            yield f"  counterexample {inputs} expected={expected} got={got}"


# ---------------------------------------------------------------------------
# enumeration and sampling


def enumerate_games(arena: Arena, max_birthday: int) -> list[int]:
    """Every game of formal birthday <= max_birthday, each id exactly once.

    Level n is all pairs of subsets of level n-1, so level sizes run
    1, 4, 256, and then 2**512: anything past birthday 2 dwarfs every node
    budget, and the projected count is refused before any interning starts.
    """
    level = [arena.zero]
    for _ in range(max_birthday):
        projected = 4 ** len(level)
        if projected > arena.max_nodes:
            raise BudgetExceeded(
                f"enumerating the next birthday level would intern {projected} games"
            )
        subsets = [
            tuple(g for i, g in enumerate(level) if mask >> i & 1)
            for mask in range(1 << len(level))
        ]
        level = [arena.game(ls, rs) for ls in subsets for rs in subsets]
    return level


def sample_games(arena: Arena, max_birthday: int, count: int, seed: int) -> list[int]:
    """Reproducible top-down random games within the birthday bound.

    The random choices depend only on the seed and bound, never on arena
    state, so two arenas fed the same seed build the same games.
    """
    rng = random.Random(seed)

    def gen(b: int) -> int:
        if b == 0:
            return arena.zero
        left = [gen(rng.randint(0, b - 1)) for _ in range(rng.randint(0, 2))]
        right = [gen(rng.randint(0, b - 1)) for _ in range(rng.randint(0, 2))]
        return arena.game(left, right)

    return [gen(max_birthday) for _ in range(count)]


def sample_dicotic(arena: Arena, max_birthday: int, count: int, seed: int) -> list[int]:
    """Random nonzero dicotic games: both sides always get at least one option."""
    rng = random.Random(seed)

    def gen(b: int) -> int:
        if b == 0:
            return arena.zero
        left = [gen(rng.randint(0, b - 1)) for _ in range(rng.randint(1, 2))]
        right = [gen(rng.randint(0, b - 1)) for _ in range(rng.randint(1, 2))]
        return arena.game(left, right)

    return [gen(max_birthday) for _ in range(count)]


# ---------------------------------------------------------------------------
# suite plumbing

REGISTRY: dict = {}


def _register(name):
    def deco(fn):
        REGISTRY[name] = fn
        return fn

    return deco


_OUTCOME_RELATION = {
    OutcomeClass.P: Relation.EQ,
    OutcomeClass.L: Relation.GT,
    OutcomeClass.R: Relation.LT,
    OutcomeClass.N: Relation.CONFUSED,
}


def _seq_text(seq) -> str:
    return " -> ".join(str(c) for c in seq)


def _block_units(block) -> list:
    """The unit chain a_n -> -1 -> ... -> -1 -> a_0 -> star for a block."""
    units: list = []
    for i, a in enumerate(block):
        units.extend([1] * a)
        if i < len(block) - 1:
            units.append(-1)
    units.append(STAR)
    return units


def _block_contexts():
    """(block, context) pairs within the small-block bounds, both seeds."""
    out = [([0], 0), ([0], STAR)]
    for length in (1, 2, 3):
        for entries in itertools.product(range(3), repeat=length):
            blk = list(entries)
            if blk[-1] >= 1:
                out.append((blk, 0))
            elif length >= 2:
                out.append((blk, STAR))
    return out


# ---------------------------------------------------------------------------
# structural suites


@_register("interning_roundtrip")
def _interning_roundtrip(arena, solver, seed, max_birthday):
    bd = 3 if max_birthday is None else max_birthday
    games = sample_games(arena, bd, 300, seed)
    failures = []
    for g in games:
        text = arena.structural_text(g)
        back = arena.parse_structural(text)
        if back != g:
            failures.append((text, f"id {g}", f"id {back}"))
    return len(games), failures, f"300 sampled, birthday<={bd}"


@_register("negate_involution")
def _negate_involution(arena, solver, seed, max_birthday):
    bd = 4 if max_birthday is None else max_birthday
    games = sample_games(arena, bd, 1000, seed)
    failures = []
    for g in games:
        if arena.negate(arena.negate(g)) != g:
            failures.append((arena.structural_text(g), "same id twice negated", "other id"))
    return len(games), failures, f"1000 sampled, birthday<={bd}"


@_register("seq_identity")
def _seq_identity(arena, solver, seed, max_birthday):
    bd = 4 if max_birthday is None else max_birthday
    games = sample_games(arena, bd, 1000, seed)
    failures = []
    for g in games:
        if arena.seq(g, arena.zero) != g or arena.seq(arena.zero, g) != g:
            failures.append((arena.structural_text(g), "zero is a two-sided identity", "changed id"))
    return len(games), failures, f"1000 sampled, birthday<={bd}"


@_register("seq_associative")
def _seq_associative(arena, solver, seed, max_birthday):
    bd = 3 if max_birthday is None else max_birthday
    games = sample_games(arena, bd, 3000, seed)
    failures = []
    triples = list(zip(games[0::3], games[1::3], games[2::3]))
    for g, h, j in triples:
        if arena.seq(arena.seq(g, h), j) != arena.seq(g, arena.seq(h, j)):
            failures.append(
                (
                    f"{arena.structural_text(g)} , {arena.structural_text(h)} , {arena.structural_text(j)}",
                    "same id for both groupings",
                    "different ids",
                )
            )
    return len(triples), failures, f"1000 sampled triples, birthday<={bd}"


@_register("seq_negate")
def _seq_negate(arena, solver, seed, max_birthday):
    bd = 3 if max_birthday is None else max_birthday
    games = sample_games(arena, bd, 2000, seed)
    failures = []
    pairs = list(zip(games[0::2], games[1::2]))
    for g, h in pairs:
        if arena.negate(arena.seq(g, h)) != arena.seq(arena.negate(g), arena.negate(h)):
            failures.append(
                (
                    f"{arena.structural_text(g)} , {arena.structural_text(h)}",
                    "negation distributes over the compound",
                    "different ids",
                )
            )
    return len(pairs), failures, f"1000 sampled pairs, birthday<={bd}"


@_register("sum_negate")
def _sum_negate(arena, solver, seed, max_birthday):
    bd = 3 if max_birthday is None else max_birthday
    games = sample_games(arena, bd, 600, seed)
    failures = []
    pairs = list(zip(games[0::2], games[1::2]))
    for g, h in pairs:
        a = arena.negate(arena.add(g, h))
        b = arena.add(arena.negate(g), arena.negate(h))
        if not solver.eq(a, b):
            failures.append(
                (
                    f"{arena.structural_text(g)} , {arena.structural_text(h)}",
                    "equal games",
                    "solver disagrees",
                )
            )
    return len(pairs), failures, f"300 sampled pairs, birthday<={bd}"


@_register("seq_dicotic_nonzero")
def _seq_dicotic_nonzero(arena, solver, seed, max_birthday):
    bd = 3 if max_birthday is None else max_birthday
    gs = sample_games(arena, bd, 500, seed)
    hs = sample_dicotic(arena, bd, 500, seed + 1)
    failures = []
    for g, h in zip(gs, hs):
        gh = arena.seq(g, h)
        if not arena.is_dicotic(gh) or gh == arena.zero:
            failures.append(
                (
                    f"{arena.structural_text(g)} , {arena.structural_text(h)}",
                    "dicotic nonzero compound",
                    arena.structural_text(gh),
                )
            )
    return len(gs), failures, f"500 sampled pairs, birthday<={bd}"


# ---------------------------------------------------------------------------
# solver suites


@_register("outcome_order_table")
def _outcome_order_table(arena, solver, seed, max_birthday):
    bd = 3 if max_birthday is None else max_birthday
    games = sample_games(arena, bd, 400, seed)
    failures = []
    for g in games:
        o = solver.outcome(g)
        rel = solver.compare(g, arena.zero)
        if _OUTCOME_RELATION[o] != rel:
            failures.append((arena.structural_text(g), f"{o.value} matches {rel.value}", "mismatch"))
    return len(games), failures, f"400 sampled, birthday<={bd}"


@_register("leq_order")
def _leq_order(arena, solver, seed, max_birthday):
    bd = 2 if max_birthday is None else max_birthday
    failures = []
    refl = sample_games(arena, 3, 200, seed)
    for g in refl:
        if not solver.leq(g, g):
            failures.append((arena.structural_text(g), "g <= g", "not reflexive"))
    games = sample_games(arena, bd, 1200, seed + 1)
    triples = list(zip(games[0::3], games[1::3], games[2::3]))
    for a, b, c in triples:
        if solver.leq(a, b) and solver.leq(b, c) and not solver.leq(a, c):
            failures.append(
                (
                    f"{arena.structural_text(a)} , {arena.structural_text(b)} , {arena.structural_text(c)}",
                    "transitive",
                    "a <= b <= c but not a <= c",
                )
            )
    return len(refl) + len(triples), failures, f"200 reflexive bd<=3 + 400 triples bd<={bd}"


@_register("order_sum_invariant")
def _order_sum_invariant(arena, solver, seed, max_birthday):
    bd = 2 if max_birthday is None else max_birthday
    games = sample_games(arena, bd, 1200, seed)
    triples = list(zip(games[0::3], games[1::3], games[2::3]))
    failures = []
    for g, h, j in triples:
        if solver.leq(g, h) and not solver.leq_positions((g, j), (h, j)):
            failures.append(
                (
                    f"{arena.structural_text(g)} , {arena.structural_text(h)} , {arena.structural_text(j)}",
                    "g <= h implies g + j <= h + j",
                    "order broken by the sum",
                )
            )
    return len(triples), failures, f"400 sampled triples, birthday<={bd}"


@_register("sum_negate_zero")
def _sum_negate_zero(arena, solver, seed, max_birthday):
    bd = 3 if max_birthday is None else max_birthday
    games = sample_games(arena, bd, 1000, seed)
    failures = []
    for g in games:
        o = solver.sum_outcome((g, arena.negate(g)))
        if o != OutcomeClass.P:
            failures.append((arena.structural_text(g), "P", o.value))
    return len(games), failures, f"1000 sampled, birthday<={bd}"


@_register("number_translation")
def _number_translation(arena, solver, seed, max_birthday):
    bd = 3 if max_birthday is None else max_birthday
    # dicotic games away from P are never equal to a number
    pool = [g for g in sample_dicotic(arena, bd, 600, seed) if solver.outcome(g) != OutcomeClass.P]
    pool = pool[:150]
    numbers = [Dyadic(1), Dyadic(1, 1), Dyadic(-1, 2), Dyadic(-1)]
    failures = []
    count = 0
    for g in pool:
        for x in numbers:
            xg = arena.dyadic(x)
            shifted = arena.game(
                [arena.add(gl, xg) for gl in arena.left_options(g)],
                [arena.add(gr, xg) for gr in arena.right_options(g)],
            )
            count += 1
            if not solver.eq(arena.add(g, xg), shifted):
                failures.append(
                    (f"{arena.structural_text(g)} + {x}", "options shift through the number", "solver disagrees")
                )
    return count, failures, f"{len(pool)} non-number dicotic bd<={bd} x 4 numbers"


@_register("lawnmower_bound")
def _lawnmower_bound(arena, solver, seed, max_birthday):
    bd = 4 if max_birthday is None else max_birthday
    games = sample_dicotic(arena, bd, 300, seed)
    cuts = [Dyadic(1, 2), Dyadic(1, 1), Dyadic(1)]
    failures = []
    count = 0
    for g in games:
        for x in cuts:
            count += 1
            xg = arena.dyadic(x)
            if solver.compare(g, xg) != Relation.LT or solver.compare(arena.negate(xg), g) != Relation.LT:
                failures.append(
                    (f"{arena.structural_text(g)} vs {x}", "strictly inside (-x, x)", "bound violated")
                )
    return count, failures, f"300 sampled dicotic bd<={bd} x 3 cuts"


@_register("seq_outcome_formula")
def _seq_outcome_formula(arena, solver, seed, max_birthday):
    # full birthday 3 is out of reach (2**512 games); 2 is the exhaustive limit
    bd = 2 if max_birthday is None else max_birthday
    level = enumerate_games(arena, bd)
    star = arena.star()
    o = {g: solver.outcome(g) for g in level}
    o_star = {g: solver.outcome(arena.seq(g, star)) for g in level}
    failures = []
    count = 0
    for g in level:
        for h in level:
            count += 1
            want = solver.outcome(arena.seq(g, h))
            got = seq_outcome_formula(o[g], o_star[g], o[h])
            if got != want:
                failures.append(
                    (f"{arena.structural_text(g)} -> {arena.structural_text(h)}", want.value, got.value)
                )
    games = sample_games(arena, 4, 1000, seed)
    for g, h in zip(games[0::2], games[1::2]):
        count += 1
        want = solver.outcome(arena.seq(g, h))
        got = seq_outcome_formula(
            solver.outcome(g), solver.outcome(arena.seq(g, star)), solver.outcome(h)
        )
        if got != want:
            failures.append(
                (f"{arena.structural_text(g)} -> {arena.structural_text(h)}", want.value, got.value)
            )
    return count, failures, f"exhaustive pairs bd<={bd} + 500 sampled pairs bd<=4"


@_register("misere_eq_seq_star")
def _misere_eq_seq_star(arena, solver, seed, max_birthday):
    bd = 2 if max_birthday is None else max_birthday
    star = arena.star()
    failures = []
    pool = enumerate_games(arena, bd) + sample_games(arena, 5, 500, seed)
    for g in pool:
        want = solver.outcome(arena.seq(g, star))
        got = solver.misere_outcome(g)
        if got != want:
            failures.append((arena.structural_text(g), want.value, got.value))
    return len(pool), failures, f"exhaustive bd<={bd} + 500 sampled bd<=5"


# ---------------------------------------------------------------------------
# value suites


def _small_value_family():
    values = []
    for num in (Dyadic(0), Dyadic(1, 1), Dyadic(-1, 1)):
        for c in (0, 1):
            for b1 in (-1, 0, 1):
                for b2 in (-1, 0, 1):
                    values.append(UptimalValue(number=num, star=c, ups=(b1, b2)))
    return values


@_register("uptimal_unique")
def _uptimal_unique(arena, solver, seed, max_birthday):
    values = _small_value_family()
    failures = []
    count = 0
    for i, u in enumerate(values):
        for v in values[i + 1 :]:
            if u == v:
                continue
            count += 1
            rel = solver.compare_positions(
                uptimal_to_position(arena, u), uptimal_to_position(arena, v)
            )
            if rel == Relation.EQ:
                failures.append(
                    (f"{format_uptimal(u)} vs {format_uptimal(v)}", "distinct games", "solver says equal")
                )
    return count, failures, "all pairs: k<=2, |b|<=1, x in {0,+-1/2}, c in {0,1}"


@_register("uptimal_chain_order")
def _uptimal_chain_order(arena, solver, seed, max_birthday):
    one = arena.integer(1)
    failures = []
    count = 0
    for k in (1, 2, 3):
        up_k = arena.up_kth(k)
        checks = [
            ((up_k,), (), Relation.GT, f"0 < up^{k}"),
            ((up_k,), (one,), Relation.LT, f"up^{k} < 1"),
        ]
        for n in (1, 2, 3, 4):
            checks.append(
                ((arena.up_kth(k + 1),) * n, (up_k,), Relation.LT, f"{n}.up^{k+1} < up^{k}")
            )
        for pos_a, pos_b, want, label in checks:
            count += 1
            got = solver.compare_positions(pos_a, pos_b)
            if got != want:
                failures.append((label, want.value, got.value))
    return count, failures, "k<=3, n<=4"


@_register("uptimal_star_order")
def _uptimal_star_order(arena, solver, seed, max_birthday):
    star = arena.star()
    failures = []
    count = 0
    for k in (1, 2, 3):
        ladder = tuple(arena.up_kth(i) for i in range(1, k + 1))
        count += 2
        rel = solver.compare_positions(ladder, (star,))
        if rel != Relation.CONFUSED:
            failures.append((f"sum of up^1..up^{k} vs *", "||", rel.value))
        rel = solver.compare_positions((star,), ladder + (arena.up_kth(k),))
        if rel != Relation.LT:
            failures.append((f"* vs sum plus extra up^{k}", "<", rel.value))
    return count, failures, "k<=3"


@_register("uptimal_option_bounds")
def _uptimal_option_bounds(arena, solver, seed, max_birthday):
    failures = []
    count = 0
    for c in (0, 1):
        for b1 in (0, 1, 2):
            for b2 in (0, 1, 2):
                u = UptimalValue(star=c, ups=(-b1, -b2))
                d = deg_of(u)
                if d < 1:
                    continue
                g = arena.zero
                for comp in uptimal_to_position(arena, u):
                    g = arena.add(g, comp)
                left_cap = u + sum((up_value(i) for i in range(1, d + 1)), VALUE_STAR)
                cap_pos = uptimal_to_position(arena, left_cap)
                for gl in arena.left_options(g):
                    count += 1
                    if not solver.leq_positions((gl,), cap_pos):
                        failures.append(
                            (f"left option of {format_uptimal(u)}", "within the shifted cap", "above it")
                        )
                star_twin = uptimal_to_position(arena, u + VALUE_STAR)
                floor_pos = uptimal_to_position(arena, u + up_value(d))
                for gr in arena.right_options(g):
                    count += 1
                    eq_star = solver.compare_positions((gr,), star_twin) == Relation.EQ
                    above = solver.leq_positions(floor_pos, (gr,))
                    if not (eq_star or above):
                        failures.append(
                            (f"right option of {format_uptimal(u)}", "star twin or above the floor", "neither")
                        )
    return count, failures, "c<=1, k<=2, coefficients<=2"


@_register("uptimal_add_solver")
def _uptimal_add_solver(arena, solver, seed, max_birthday):
    rng = random.Random(seed)
    failures = []
    count = 0

    def rand_value(max_coeff: int, k: int) -> UptimalValue:
        num = rng.choice([Dyadic(0), Dyadic(0), Dyadic(1, 1), Dyadic(-1, 1), Dyadic(1)])
        ups = tuple(rng.randint(-max_coeff, max_coeff) for _ in range(rng.randint(0, k)))
        return UptimalValue(number=num, star=rng.randint(0, 1), ups=ups)

    for _ in range(500):
        u, v, w = rand_value(3, 4), rand_value(3, 4), rand_value(3, 4)
        count += 1
        if u + v != v + u or (u + v) + w != u + (v + w):
            failures.append((f"{format_uptimal(u)} ; {format_uptimal(v)} ; {format_uptimal(w)}",
                             "commutative and associative", "algebra broken"))
    for _ in range(150):
        u, v = rand_value(1, 2), rand_value(1, 2)
        count += 1
        joint = uptimal_to_position(arena, u) + uptimal_to_position(arena, v)
        rel = solver.compare_positions(joint, uptimal_to_position(arena, u + v))
        if rel != Relation.EQ:
            failures.append((f"{format_uptimal(u)} + {format_uptimal(v)}", "=", rel.value))
    return count, failures, "500 algebra triples + 150 solver pairs"


@_register("value_text_roundtrip")
def _value_text_roundtrip(arena, solver, seed, max_birthday):
    rng = random.Random(seed)
    failures = []
    values = [
        UptimalValue(ups=(0, 2, 0, 3)),
        UptimalValue(number=Dyadic(1, 2), star=1, ups=(-4, -3, -3, -3, -1)),
        UptimalValue(),
        UptimalValue(ups=(12,)),
        UptimalValue(ups=(1, -2)),
    ]
    for _ in range(800):
        num = Dyadic(rng.randint(-9, 9), rng.randint(0, 4))
        ups = tuple(rng.randint(-12, 12) for _ in range(rng.randint(0, 5)))
        values.append(UptimalValue(number=num, star=rng.randint(0, 1), ups=ups))
    for u in values:
        text = format_uptimal(u)
        back = parse_uptimal(text)
        if back != u:
            failures.append((text, repr(u), repr(back)))
    if parse_uptimal("0.0203") != UptimalValue(ups=(0, 2, 0, 3)):
        failures.append(("0.0203", "(0, 2, 0, 3)", "other coefficients"))
    return len(values) + 1, failures, "805 values incl. wide and mixed coefficients"


# ---------------------------------------------------------------------------
# closed-form suites


@_register("int_chain_closed_form")
def _int_chain_closed_form(arena, solver, seed, max_birthday):
    failures = []
    count = 0
    for n in range(1, 6):
        for rest in itertools.product((1, -1), repeat=n - 1):
            a = (1, -1) + rest
            for m in (0, 1, 2):
                count += 1
                x = int_chain_value(a, m)
                units = list(reversed(a)) + [1] * m
                game = compound_game(arena, units)
                rel = solver.compare_positions((game,), (arena.dyadic(x),))
                if rel != Relation.EQ:
                    failures.append((_seq_text(units), str(x), rel.value))
    return count, failures, "all sign vectors n<=5, m<=2"


@_register("block_closed_form")
def _block_closed_form(arena, solver, seed, max_birthday):
    failures = []
    count = 0
    for blk, ctx in _block_contexts():
        count += 1
        v = block_value(blk, ctx)
        units = _block_units(blk) + ([STAR] if ctx == STAR else [])
        game = compound_game(arena, units)
        rel = solver.compare_positions((game,), uptimal_to_position(arena, v))
        if rel != Relation.EQ:
            failures.append((_seq_text(units), format_uptimal(v), rel.value))
    # one chained step: the tail block's value feeds the next block leftward
    inner = block_value([1], 0)
    v = block_value([1], inner)
    units = [1, STAR, 1, STAR]
    count += 1
    rel = solver.compare_positions((compound_game(arena, units),), uptimal_to_position(arena, v))
    if rel != Relation.EQ:
        failures.append((_seq_text(units), format_uptimal(v), rel.value))
    return count, failures, "blocks n<=2, entries<=2, both seeds + one chained"


@_register("block_chain_negative")
def _block_chain_negative(arena, solver, seed, max_birthday):
    failures = []
    count = 0
    for blk, ctx in _block_contexts():
        if blk == [0]:
            # the bare block is worth * or 0 depending on the seed, not negative
            continue
        count += 1
        v = block_value(blk, ctx)
        units = _block_units(blk) + ([STAR] if ctx == STAR else [])
        if uptimal_sign(v, solver) != Relation.LT:
            failures.append((_seq_text(units), "< 0", format_uptimal(v)))
            continue
        rel = solver.compare_positions((compound_game(arena, units),), ())
        if rel != Relation.LT:
            failures.append((_seq_text(units), "< 0", rel.value))
    return count, failures, "blocks n<=2, entries<=2, both seeds, bare [0] excluded"


@_register("pipelines_agree")
def _pipelines_agree(arena, solver, seed, max_birthday):
    rng = random.Random(seed)
    failures = []
    for _ in range(1000):
        units = [rng.choice([1, -1, STAR]) for _ in range(rng.randint(1, 12))]
        got = [eval_seq(units, p) for p in PIPELINES]
        if got[0] != got[1]:
            failures.append(
                (_seq_text(units), format_uptimal(got[0]), format_uptimal(got[1]))
            )
    return 1000, failures, "1000 random unit sequences, length<=12"


@_register("eval_matches_solver")
def _eval_matches_solver(arena, solver, seed, max_birthday):
    failures = []
    seqs = []
    for n in range(1, 7):
        seqs.extend(itertools.product((1, -1, STAR), repeat=n))
    for n in range(1, 4):
        for comps in itertools.product((-3, -2, -1, 1, 2, 3, STAR), repeat=n):
            if len(expand_units(comps)) <= 6:
                seqs.append(comps)
    seqs.extend([(0,), (1, 0, STAR), (0, -2, STAR, 0, 2), (2, 0, -1), (STAR, 0, STAR)])
    for comps in seqs:
        values = [eval_seq(comps, p) for p in PIPELINES]
        if values[0] != values[1]:
            failures.append((_seq_text(comps), format_uptimal(values[0]), format_uptimal(values[1])))
            continue
        game = compound_game(arena, comps)
        rel = solver.compare_positions((game,), uptimal_to_position(arena, values[0]))
        if rel != Relation.EQ:
            failures.append((_seq_text(comps), format_uptimal(values[0]), rel.value))
    return len(seqs), failures, "all unit seqs len<=6 + int components |n|<=3 in <=3 slots"


@_register("order_preserve_seq")
def _order_preserve_seq(arena, solver, seed, max_birthday):
    pool = enumerate_games(arena, 2)
    rng = random.Random(seed + 1)
    gs = sample_dicotic(arena, 3, 600, seed)
    failures = []
    checked = 0
    for g in gs:
        h = pool[rng.randrange(len(pool))]
        h2 = pool[rng.randrange(len(pool))]
        if not solver.leq(h2, h):
            continue
        checked += 1
        if not solver.leq(arena.seq(g, h2), arena.seq(g, h)):
            failures.append(
                (
                    f"{arena.structural_text(g)} with {arena.structural_text(h2)} <= {arena.structural_text(h)}",
                    "compound order preserved",
                    "order broken",
                )
            )
    return checked, failures, "dicotic bd<=3 front, ordered bd<=2 pairs behind"


@_register("number_translation_seq")
def _number_translation_seq(arena, solver, seed, max_birthday):
    gs = sample_dicotic(arena, 3, 400, seed)
    hs = sample_games(arena, 2, 400, seed + 1)
    numbers = [Dyadic(1), Dyadic(-1), Dyadic(1, 1), Dyadic(-1, 1)]
    failures = []
    checked = 0
    for g, h in zip(gs, hs):
        gh = arena.seq(g, h)
        if not arena.is_dicotic(gh):
            continue
        x = numbers[checked % 4]
        xg = arena.dyadic(x)
        checked += 1
        if not solver.eq(arena.seq(g, arena.add(xg, h)), arena.add(xg, gh)):
            failures.append(
                (
                    f"{arena.structural_text(g)} -> ({x} + {arena.structural_text(h)})",
                    "number slides out of the compound",
                    "solver disagrees",
                )
            )
        if checked >= 200:
            break
    return checked, failures, "dicotic compounds from bd<=3 front, bd<=2 tail, 4 numbers"


@_register("star_star_identity")
def _star_star_identity(arena, solver, seed, max_birthday):
    bd = 4 if max_birthday is None else max_birthday
    star = arena.star()
    games = sample_dicotic(arena, bd, 300, seed)
    failures = []
    for g in games:
        if not solver.eq(arena.seq(arena.seq(g, star), star), g):
            failures.append((arena.structural_text(g), "two trailing stars cancel", "value changed"))
    return len(games), failures, f"300 sampled dicotic, birthday<={bd}"


@_register("star_reduction")
def _star_reduction(arena, solver, seed, max_birthday):
    bd = 3 if max_birthday is None else max_birthday
    star = arena.star()
    games = sample_games(arena, bd, 300, seed)
    failures = []
    for g in games:
        three = arena.seq(g, arena.seq(star, arena.seq(star, star)))
        if not solver.eq(three, arena.seq(g, star)):
            failures.append((arena.structural_text(g), "three stars equal one", "value changed"))
    return len(games), failures, f"300 sampled, birthday<={bd}"


@_register("deg_shift_identity")
def _deg_shift_identity(arena, solver, seed, max_birthday):
    contexts = [0, STAR, up_value(1, -1), UptimalValue(star=1, ups=(-2,))]
    failures = []
    count = 0
    for ctx in contexts:
        for length in (2, 3):
            for entries in itertools.product(range(3), repeat=length):
                blk = list(entries)
                if ctx == 0 and blk[-1] < 1:
                    continue
                if ctx == STAR and blk[-1] != 0:
                    continue
                count += 1
                full = block_value(blk, ctx)
                d = deg_of(full)
                short = block_value(blk[1:], ctx)
                padded = block_value([0] + blk[1:], ctx)
                if short != padded + up_value(d):
                    failures.append(
                        (
                            f"[{', '.join(map(str, blk))}] with context {ctx}",
                            format_uptimal(padded + up_value(d)),
                            format_uptimal(short),
                        )
                    )
    return count, failures, "blocks n in {1,2}, entries<=2, four contexts"


_SIX_CHAIN = [
    ((-1, -3, -1), "-5"),
    ((-1, -1, 1, -1, 1, 3), "57/16"),
    ((STAR, STAR, STAR), "*"),
    ((1, -1, STAR, 3, -1, 1, STAR, STAR, STAR, STAR, -2, 1), "0.43331 + * + 1/4"),
    ((-1, 1, -1, STAR, -1, 1, STAR, 4, -1), "-0.3321 - 1/16"),
    ((STAR, STAR, STAR, STAR, STAR, STAR, -2, 2), "5/4"),
]


@_register("worked_examples")
def _worked_examples(arena, solver, seed, max_birthday):
    failures = []
    count = 0
    total = UptimalValue()
    for comps, expected in _SIX_CHAIN:
        count += 1
        got = [format_uptimal(eval_seq(comps, p)) for p in PIPELINES]
        if got[0] != expected or got[1] != expected:
            failures.append((_seq_text(comps), expected, " / ".join(got)))
        total = total + eval_seq(comps)
    count += 1
    if format_uptimal(total) != "0.10121":
        failures.append(("sum of the six values", "0.10121", format_uptimal(total)))
    count += 1
    position = tuple(compound_game(arena, comps) for comps, _ in _SIX_CHAIN)
    o = solver.sum_outcome(position)
    if o != OutcomeClass.L:
        failures.append(("outcome of the six-part sum", "L", o.value))
    return count, failures, "six fixed chains, their value sum, and its outcome"


# ---------------------------------------------------------------------------
# entry points


def verify(
    property_id: str,
    seed: int = 0,
    max_birthday=None,
    max_nodes=None,
) -> PropertyReport:
    """Run one registered suite and collect its counterexamples."""
    fn = REGISTRY.get(property_id)
    if fn is None:
        raise UnknownPropertyError(property_id)
    arena = Arena(max_nodes) if max_nodes is not None else Arena()
    solver = Solver(arena)
    instances, failures, bounds = fn(arena, solver, seed, max_birthday)
    return PropertyReport(property_id, instances, failures, seed, bounds)


def verify_all(seed: int = 0, max_birthday=None, max_nodes=None) -> list[PropertyReport]:
    return [verify(name, seed, max_birthday, max_nodes) for name in REGISTRY]
