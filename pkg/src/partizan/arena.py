"""Interned storage for short partizan games.

A game is a pair of option sets; here each is a sorted tuple of previously
interned ids, and every distinct pair is stored once.  Id equality is
therefore exactly structural identity, which turns several identities of
the algebra (negation as involution, sequential associativity) into plain
integer comparisons.

An arena is single threaded and append only.  Construction beyond
``max_nodes`` interned nodes raises BudgetExceeded; ids are plain ints and
stay valid for the arena's lifetime.
"""

from __future__ import annotations

from .values import Dyadic, ParseError

INTEGER_LIMIT = 100_000


class BudgetExceeded(RuntimeError):
    """The arena's node budget (or a hard input cap) was hit."""


class Arena:
    def __init__(self, max_nodes: int = 10_000_000):
        self.max_nodes = max_nodes
        self._left: list[tuple[int, ...]] = []
        self._right: list[tuple[int, ...]] = []
        self._index: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}
        self._neg: dict[int, int] = {}
        self._add: dict[tuple[int, int], int] = {}
        self.sum_parts: dict[int, tuple[int, int]] = {}
        self._seq: dict[tuple[int, int], int] = {}
        self._birthday: dict[int, int] = {}
        self._dicotic: dict[int, bool] = {}
        self._dyadic: dict[Dyadic, int] = {}
        self._int_chain: list[int] = []  # id of n at index n
        self._ups: list[int] = []  # id of up^k at index k-1
        self.zero = self.game((), ())

    @property
    def node_count(self) -> int:
        return len(self._left)

    def game(self, left, right) -> int:
        """Intern the game with the given option ids (sorted, deduplicated)."""
        n = len(self._left)
        key = (tuple(sorted(set(left))), tuple(sorted(set(right))))
        for opt in key[0] + key[1]:
            if not 0 <= opt < n:
                raise ValueError(f"unknown option id {opt}")
        got = self._index.get(key)
        if got is not None:
            return got
        if n >= self.max_nodes:
            raise BudgetExceeded(f"node budget {self.max_nodes} exhausted")
        self._index[key] = n
        self._left.append(key[0])
        self._right.append(key[1])
        return n

    def left_options(self, g: int) -> tuple[int, ...]:
        return self._left[g]

    def right_options(self, g: int) -> tuple[int, ...]:
        return self._right[g]

    def star(self) -> int:
        return self.game((self.zero,), (self.zero,))

    def integer(self, n: int) -> int:
        """The integer game: n = {n-1 | } for n > 0, negated chain below zero."""
        if abs(n) > INTEGER_LIMIT:
            raise BudgetExceeded(f"integer magnitude capped at {INTEGER_LIMIT}")
        if not self._int_chain:
            self._int_chain.append(self.zero)
            self._neg[self.zero] = self.zero
        chain = self._int_chain
        while len(chain) <= abs(n):
            k = len(chain)
            pos = self.game((chain[k - 1],), ())
            neg = self.game((), (self._neg[chain[k - 1]],))
            chain.append(pos)
            self._neg[pos] = neg
            self._neg[neg] = pos
        return chain[n] if n >= 0 else self._neg[chain[-n]]

    def dyadic(self, x: Dyadic | int) -> int:
        """The canonical game of a dyadic rational: {(m-1)/2^n | (m+1)/2^n}."""
        if isinstance(x, int):
            x = Dyadic(x)
        if x.is_integer:
            return self.integer(x.num)
        if x.num < 0:
            return self.negate(self.dyadic(-x))
        got = self._dyadic.get(x)
        if got is None:
            lo = self.dyadic(Dyadic(x.num - 1, x.exp))
            hi = self.dyadic(Dyadic(x.num + 1, x.exp))
            got = self.game((lo,), (hi,))
            self._dyadic[x] = got
        return got

    def up_kth(self, k: int) -> int:
        """up^k = {0 | star - up^1 - ... - up^(k-1)}; up^1 is plain up."""
        if k < 1:
            raise ValueError("up index starts at 1")
        while len(self._ups) < k:
            i = len(self._ups) + 1
            ro = self.star()
            for j in range(1, i):
                ro = self.add(ro, self.negate(self._ups[j - 1]))
            self._ups.append(self.game((self.zero,), (ro,)))
        return self._ups[k - 1]

    def down_kth(self, k: int) -> int:
        return self.negate(self.up_kth(k))

    def negate(self, g: int) -> int:
        """Swap sides recursively; an involution on ids."""
        got = self._neg.get(g)
        if got is None:
            got = self.game(
                tuple(self.negate(o) for o in self._right[g]),
                tuple(self.negate(o) for o in self._left[g]),
            )
            self._neg[g] = got
            self._neg[got] = g
            parts = self.sum_parts.get(g)
            if parts is not None and got not in self.sum_parts:
                # the negative of a sum splits into the negated addends
                self.sum_parts[got] = (self.negate(parts[0]), self.negate(parts[1]))
        return got

    def add(self, g: int, h: int) -> int:
        """Disjunctive sum: move in exactly one component."""
        if g > h:
            g, h = h, g
        got = self._add.get((g, h))
        if got is None:
            left = [self.add(gl, h) for gl in self._left[g]]
            left += [self.add(g, hl) for hl in self._left[h]]
            right = [self.add(gr, h) for gr in self._right[g]]
            right += [self.add(g, hr) for hr in self._right[h]]
            got = self.game(left, right)
            self._add[(g, h)] = got
            if g != self.zero and h != self.zero:
                # remember the addends so sum positions can stay factored
                self.sum_parts.setdefault(got, (g, h))
        return got

    def seq(self, g: int, h: int) -> int:
        """Sequential compound g -> h: play g first; any move on h discards g.

        Each side's options are the compounds over that side's options of g,
        or h's own options for a player with no move left in g.
        """
        got = self._seq.get((g, h))
        if got is None:
            gl, gr = self._left[g], self._right[g]
            left = tuple(self.seq(o, h) for o in gl) if gl else self._left[h]
            right = tuple(self.seq(o, h) for o in gr) if gr else self._right[h]
            got = self.game(left, right)
            self._seq[(g, h)] = got
        return got

    def seq_many(self, ids) -> int:
        """Right fold of seq over a component list; empty gives zero."""
        ids = list(ids)
        if not ids:
            return self.zero
        g = ids[-1]
        for h in reversed(ids[:-1]):
            g = self.seq(h, g)
        return g

    def birthday(self, g: int) -> int:
        """Formal birthday: height of the game tree."""
        memo = self._birthday
        stack = [g]
        while stack:
            v = stack[-1]
            if v in memo:
                stack.pop()
                continue
            opts = self._left[v] + self._right[v]
            pending = [o for o in opts if o not in memo]
            if pending:
                stack.extend(pending)
                continue
            memo[v] = 1 + max((memo[o] for o in opts), default=-1)
            stack.pop()
        return memo[g]

    def is_dicotic(self, g: int) -> bool:
        """Dicotic (all small): every nonempty position has moves for both."""
        memo = self._dicotic
        stack = [g]
        while stack:
            v = stack[-1]
            if v in memo:
                stack.pop()
                continue
            gl, gr = self._left[v], self._right[v]
            if (gl == ()) != (gr == ()):
                memo[v] = False
                stack.pop()
                continue
            pending = [o for o in gl + gr if o not in memo]
            if pending:
                stack.extend(pending)
                continue
            memo[v] = all(memo[o] for o in gl + gr)
            stack.pop()
        return memo[g]

    # -- structural text -------------------------------------------------

    def structural_text(self, g: int) -> str:
        """'{L1,L2|R1,R2}' with recursively printed options; zero is '{|}'."""
        left = ",".join(self.structural_text(o) for o in self._left[g])
        right = ",".join(self.structural_text(o) for o in self._right[g])
        return "{" + left + "|" + right + "}"

    def parse_structural(self, text: str) -> int:
        pos = 0

        def parse_game() -> int:
            nonlocal pos
            if pos >= len(text) or text[pos] != "{":
                raise ParseError("expected '{'", pos)
            pos += 1
            left = parse_options("|")
            pos += 1
            right = parse_options("}")
            pos += 1
            return self.game(left, right)

        def parse_options(closer: str) -> list[int]:
            nonlocal pos
            opts: list[int] = []
            while True:
                if pos >= len(text):
                    raise ParseError(f"expected '{closer}'", pos)
                if text[pos] == closer:
                    return opts
                if opts:
                    if text[pos] != ",":
                        raise ParseError("expected ','", pos)
                    pos += 1
                opts.append(parse_game())

        g = parse_game()
        if pos != len(text):
            raise ParseError("trailing text", pos)
        return g
