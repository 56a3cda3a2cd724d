"""Exact values: dyadic rationals and uptimal normal forms.

A value is stored as ``x + c.(star) + sum(b_i . up^i)`` where x is an exact
dyadic rational, c is a star parity bit and b is a vector of integer
coefficients of the higher ups (index 1 first, trailing zeros trimmed).
Two values are equal as games exactly when these normal forms coincide, so
all arithmetic here is symbolic and exact; no game tree is ever searched.

Text round trip: ``parse_uptimal(format_uptimal(u)) == u`` for every value.
The compact digit notation ``0.d1d2...`` requires single-sign coefficients
below ten; anything else prints (and reparses) as explicit ``b^i`` terms.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass


class FormError(ValueError):
    """A value or sequence is not in the shape an operation requires."""


class ParseError(ValueError):
    """Bad value or expression text; carries the byte offset of the fault."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (offset {position})")
        self.position = position


class Relation(enum.Enum):
    """Result of comparing two games: total order plus incomparability."""

    LT = "<"
    EQ = "="
    GT = ">"
    CONFUSED = "||"

    def __str__(self) -> str:
        return self.value


class Dyadic:
    """Exact m / 2**n, normalized so n == 0 or m is odd."""

    __slots__ = ("num", "exp")

    def __init__(self, num: int, exp: int = 0):
        if exp < 0:
            raise ValueError("negative exponent")
        while exp > 0 and num % 2 == 0:
            num //= 2
            exp -= 1
        self.num = num
        self.exp = exp

    def __repr__(self) -> str:
        return f"Dyadic({self.num}, {self.exp})"

    def __str__(self) -> str:
        if self.exp == 0:
            return str(self.num)
        return f"{self.num}/{1 << self.exp}"

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Dyadic(other)
        if not isinstance(other, Dyadic):
            return NotImplemented
        return self.num == other.num and self.exp == other.exp

    def __hash__(self) -> int:
        return hash((self.num, self.exp))

    def __lt__(self, other) -> bool:
        if isinstance(other, int):
            other = Dyadic(other)
        return (self.num << other.exp) < (other.num << self.exp)

    def __le__(self, other) -> bool:
        if isinstance(other, int):
            other = Dyadic(other)
        return (self.num << other.exp) <= (other.num << self.exp)

    def __gt__(self, other) -> bool:
        return not self.__le__(other)

    def __ge__(self, other) -> bool:
        return not self.__lt__(other)

    def __add__(self, other) -> "Dyadic":
        if isinstance(other, int):
            other = Dyadic(other)
        e = max(self.exp, other.exp)
        return Dyadic((self.num << (e - self.exp)) + (other.num << (e - other.exp)), e)

    def __sub__(self, other) -> "Dyadic":
        return self + (-other)

    def __neg__(self) -> "Dyadic":
        return Dyadic(-self.num, self.exp)

    @property
    def is_integer(self) -> bool:
        return self.exp == 0

    @property
    def sign(self) -> int:
        return (self.num > 0) - (self.num < 0)


DYADIC_ZERO = Dyadic(0)


@dataclass(frozen=True)
class UptimalValue:
    """Normal form x + c.(star) + sum(b_i . up^i); ups index from 1."""

    number: Dyadic = DYADIC_ZERO
    star: int = 0
    ups: tuple[int, ...] = ()

    def __post_init__(self):
        if self.star not in (0, 1):
            raise ValueError("star parity must be 0 or 1")
        ups = self.ups
        while ups and ups[-1] == 0:
            ups = ups[:-1]
        object.__setattr__(self, "ups", tuple(ups))

    @property
    def is_zero(self) -> bool:
        return self.number.num == 0 and self.star == 0 and not self.ups

    @property
    def is_number(self) -> bool:
        return self.star == 0 and not self.ups

    def __add__(self, other: "UptimalValue") -> "UptimalValue":
        k = max(len(self.ups), len(other.ups))
        a = self.ups + (0,) * (k - len(self.ups))
        b = other.ups + (0,) * (k - len(other.ups))
        return UptimalValue(
            self.number + other.number,
            (self.star + other.star) % 2,
            tuple(x + y for x, y in zip(a, b)),
        )

    def __neg__(self) -> "UptimalValue":
        # -star = star, so the parity bit is kept as is
        return UptimalValue(-self.number, self.star, tuple(-b for b in self.ups))

    def __sub__(self, other: "UptimalValue") -> "UptimalValue":
        return self + (-other)

    def __str__(self) -> str:
        return format_uptimal(self)


VALUE_ZERO = UptimalValue()
VALUE_STAR = UptimalValue(star=1)


def number_value(x: Dyadic | int) -> UptimalValue:
    if isinstance(x, int):
        x = Dyadic(x)
    return UptimalValue(number=x)


def up_value(i: int, coeff: int = 1) -> UptimalValue:
    """coeff copies of up^i (negative coeff for downs)."""
    if i < 1:
        raise ValueError("up index starts at 1")
    return UptimalValue(ups=(0,) * (i - 1) + (coeff,))


def uptimal_add(u: UptimalValue, v: UptimalValue) -> UptimalValue:
    return u + v


def uptimal_negate(u: UptimalValue) -> UptimalValue:
    return -u


def down_view(u: UptimalValue) -> tuple[int, tuple[int, ...]]:
    """Return (c, d) with u = c.(star) + sum(d_i . down^i), requiring d >= 0.

    Raises FormError when u has a number part or any positive up coefficient,
    since those have no all-downs reading.
    """
    if u.number.num != 0:
        raise FormError("value has a number part")
    if any(b > 0 for b in u.ups):
        raise FormError("value has positive up coefficients")
    return u.star, tuple(-b for b in u.ups)


def deg_of(u: UptimalValue) -> int:
    """Degree of an all-downs value: largest index with a nonzero coefficient."""
    _, downs = down_view(u)
    return len(downs)


# ---------------------------------------------------------------------------
# text form


_TOKEN_DIGITS = re.compile(r"-?0\.(\d+)")
_TOKEN_INT = re.compile(r"-?\d+")


def format_uptimal(u: UptimalValue) -> str:
    """Render a value as '[-]0.d... [+ *] [+ dyadic]', omitting zero parts."""
    if u.is_zero:
        return "0"
    parts: list[tuple[int, str]] = []  # (sign, unsigned text)
    if u.ups:
        if all(0 <= b <= 9 for b in u.ups):
            parts.append((1, "0." + "".join(str(b) for b in u.ups)))
        elif all(-9 <= b <= 0 for b in u.ups):
            parts.append((-1, "0." + "".join(str(-b) for b in u.ups)))
        else:
            # mixed signs or a coefficient past one digit: explicit b^i terms
            for i, b in enumerate(u.ups, start=1):
                if b != 0:
                    parts.append(((b > 0) - (b < 0), f"{abs(b)}^{i}"))
    if u.star:
        parts.append((1, "*"))
    if u.number.num != 0:
        parts.append((u.number.sign, str(abs(u.number.num)) if u.number.exp == 0
                      else f"{abs(u.number.num)}/{1 << u.number.exp}"))
    out = []
    for i, (sign, text) in enumerate(parts):
        if i == 0:
            out.append(("-" if sign < 0 else "") + text)
        else:
            out.append((" - " if sign < 0 else " + ") + text)
    return "".join(out)


def parse_uptimal(text: str) -> UptimalValue:
    """Parse value text: terms are dyadics, '*', digit strings or b^i forms."""
    pos = 0
    n = len(text)

    def skip_ws():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def parse_term() -> UptimalValue:
        nonlocal pos
        skip_ws()
        if pos >= n:
            raise ParseError("expected a value term", pos)
        if text[pos] == "*":
            pos += 1
            return VALUE_STAR
        m = _TOKEN_DIGITS.match(text, pos)
        if m:
            pos = m.end()
            sign = -1 if m.group(0).startswith("-") else 1
            return UptimalValue(ups=tuple(sign * int(ch) for ch in m.group(1)))
        m = _TOKEN_INT.match(text, pos)
        if not m:
            raise ParseError("expected a value term", pos)
        pos = m.end()
        value = int(m.group(0))
        if pos < n and text[pos] == "/":
            pos += 1
            md = _TOKEN_INT.match(text, pos)
            if not md:
                raise ParseError("expected a denominator", pos)
            denom = int(md.group(0))
            if denom <= 0 or denom & (denom - 1):
                raise ParseError("denominator must be a power of two", pos)
            pos = md.end()
            return number_value(Dyadic(value, denom.bit_length() - 1))
        if pos < n and text[pos] == "^":
            pos += 1
            mi = _TOKEN_INT.match(text, pos)
            if not mi or int(mi.group(0)) < 1:
                raise ParseError("expected an up index", pos)
            pos = mi.end()
            return up_value(int(mi.group(0)), value)
        return number_value(value)

    total = parse_term()
    while True:
        skip_ws()
        if pos >= n:
            return total
        op = text[pos]
        if op not in "+-":
            raise ParseError("expected '+' or '-'", pos)
        pos += 1
        term = parse_term()
        total = total + term if op == "+" else total - term


# ---------------------------------------------------------------------------
# bridges to the game arena (arena passed in; no import cycle)


def uptimal_to_position(arena, u: UptimalValue) -> tuple[int, ...]:
    """Materialize u as a multiset of component game ids."""
    comps: list[int] = []
    if u.number.num != 0:
        comps.append(arena.dyadic(u.number))
    if u.star:
        comps.append(arena.star())
    for i, b in enumerate(u.ups, start=1):
        mk = arena.up_kth if b > 0 else arena.down_kth
        comps.extend(mk(i) for _ in range(abs(b)))
    return tuple(comps)


def uptimal_to_game(arena, u: UptimalValue) -> int:
    """Materialize u as a single game (disjunctive sum of its components)."""
    g = arena.zero
    for comp in uptimal_to_position(arena, u):
        g = arena.add(g, comp)
    return g


def uptimal_sign(u: UptimalValue, solver=None) -> Relation:
    """Compare u with zero.

    The number part decides when nonzero.  A pure-ups value with one sign of
    coefficient is decided by the order of the up^i themselves.  Every other
    case (star against ups, mixed signs) is settled by the game solver, which
    must then be supplied.
    """
    if u.number.num > 0:
        return Relation.GT
    if u.number.num < 0:
        return Relation.LT
    if u.star == 0:
        if not u.ups:
            return Relation.EQ
        if all(b >= 0 for b in u.ups):
            return Relation.GT
        if all(b <= 0 for b in u.ups):
            return Relation.LT
    if solver is None:
        raise ValueError("sign needs the solver for this value")
    return solver.compare_positions(uptimal_to_position(solver.arena, u), ())
