"""ASCII surface syntax for games.

::

    game  := '<' side '|' side '>' | 's(' adorn ')' | 'star' | 'int(' integer ')'
    side  := 'e^' adorn | game (',' game)*
    adorn := integer | integer '/' positive-integer

Whitespace between tokens is ignored.  ``s(a)`` is ``<e^a|e^a>``, ``star`` is
``<s(0)|s(0)>`` and ``int(n)`` is the normal-play integer chain.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError
from .game_core import Atom, GameId, GameStore, int_game

_INT = re.compile(r"[+-]?\d+")
_POS = re.compile(r"\d+")


class _Parser:
    def __init__(self, store: GameStore, text: str):
        self.store = store
        self.text = text
        self.pos = 0

    def error(self, msg, pos=None):
        return ParseError(msg, self.pos if pos is None else pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, lit: str) -> bool:
        self.skip()
        return self.text.startswith(lit, self.pos)

    def expect(self, lit: str):
        if not self.peek(lit):
            found = self.text[self.pos:self.pos + 1] or "end of input"
            raise self.error(f"expected {lit!r}, found {found!r}")
        self.pos += len(lit)

    def integer(self) -> int:
        self.skip()
        m = _INT.match(self.text, self.pos)
        if not m:
            raise self.error("expected an integer")
        self.pos = m.end()
        return int(m.group())

    def adorn(self) -> Fraction:
        start = self.pos
        num = self.integer()
        if not self.peek("/"):
            return Fraction(num)
        self.pos += 1
        self.skip()
        m = _POS.match(self.text, self.pos)
        if not m:
            raise self.error("expected a positive denominator")
        den = int(m.group())
        if den == 0:
            raise self.error("zero denominator", start)
        self.pos = m.end()
        return Fraction(num, den)

    def side(self):
        if self.peek("e^"):
            self.pos += 2
            return Atom(self.adorn())
        opts = [self.game()]
        while self.peek(","):
            self.pos += 1
            opts.append(self.game())
        return opts

    def game(self) -> GameId:
        self.skip()
        if self.peek("<"):
            self.pos += 1
            left = self.side()
            self.expect("|")
            right = self.side()
            self.expect(">")
            return self.store.intern(left, right)
        if self.peek("s("):
            self.pos += 2
            a = self.adorn()
            self.expect(")")
            return self.store.score(a)
        if self.peek("star"):
            self.pos += 4
            z = self.store.zero
            return self.store.intern([z], [z])
        if self.peek("int("):
            self.pos += 4
            n = self.integer()
            self.expect(")")
            return int_game(self.store, n)
        found = self.text[self.pos:self.pos + 1] or "end of input"
        raise self.error(f"expected a game, found {found!r}")


def parse(store: GameStore, text: str) -> GameId:
    """Parse ``text`` and intern the game it denotes."""
    p = _Parser(store, text)
    g = p.game()
    p.skip()
    if p.pos != len(text):
        raise p.error("trailing input")
    return g


def _adorn_str(a: Fraction) -> str:
    return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"


def to_text(store: GameStore, g: GameId, unicode: bool = False) -> str:
    """Render ``g``; the ASCII form parses back to the same id."""
    memo = store.cache("text:u" if unicode else "text")
    hit = memo.get(g)
    if hit is not None:
        return hit
    G = store[g]
    z = store.zero
    if store.is_score(g):
        a = _adorn_str(G.left.adorn)
        res = f"{a}̂" if unicode else f"s({a})"
    elif G.left == (z,) and G.right == (z,):
        res = "*" if unicode else "star"
    else:
        atom, lb, rb = ("∅^", "⟨", "⟩") if unicode else ("e^", "<", ">")

        def side(s):
            if isinstance(s, Atom):
                return atom + _adorn_str(s.adorn)
            return ",".join(to_text(store, o, unicode) for o in s)

        res = f"{lb}{side(G.left)}|{side(G.right)}{rb}"
    memo[g] = res
    return res
