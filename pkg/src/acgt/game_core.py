"""Literal game forms.

Games are hash-consed into a :class:`GameStore`.  Every node is identified by
an integer id, and two ids are equal exactly when the literal forms are
identical (same atoms, same option *sets* on each side).  Sums and conjugates
are memoised on ids for the lifetime of the store.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Union

from .errors import ArgumentError, StructuralError

Adorn = Fraction
GameId = int


def as_adorn(value) -> Fraction:
    """Coerce ints, Fractions and exact strings like ``"-3/2"`` to an adorn."""
    if isinstance(value, bool):
        raise ArgumentError(f"not an adorn: {value!r}")
    if isinstance(value, (Rational, str)):
        return Fraction(value)
    raise ArgumentError(f"adorns must be exact rationals, got {value!r}")


@dataclass(frozen=True, slots=True)
class Atom:
    """An empty side of a game, carrying its adorn."""

    adorn: Fraction


Side = Union[Atom, tuple]


@dataclass(frozen=True, slots=True)
class GameNode:
    left: Side
    right: Side
    rank: int
    id: GameId

    @property
    def left_atomic(self) -> bool:
        return isinstance(self.left, Atom)

    @property
    def right_atomic(self) -> bool:
        return isinstance(self.right, Atom)

    @property
    def left_options(self) -> tuple:
        return () if isinstance(self.left, Atom) else self.left

    @property
    def right_options(self) -> tuple:
        return () if isinstance(self.right, Atom) else self.right


class GameStore:
    """Append-only interning table for game nodes.

    Interning is guarded by a lock; once interned, nodes are immutable and can
    be read from any thread.  Memo tables for derived quantities (outcomes,
    comparisons, ...) live in :meth:`cache` so that they share the store's
    lifetime.
    """

    def __init__(self):
        self._table: dict = {}
        self.nodes: list[GameNode] = []
        self._lock = threading.RLock()
        self._sum_memo: dict = {}
        self._conj_memo: dict = {}
        self._caches: dict[str, dict] = {}
        self.zero = self.score(0)

    def __len__(self):
        return len(self.nodes)

    def __getitem__(self, g: GameId) -> GameNode:
        return self.nodes[g]

    def cache(self, name: str) -> dict:
        try:
            return self._caches[name]
        except KeyError:
            return self._caches.setdefault(name, {})

    # -- construction -----------------------------------------------------

    def _canonical_side(self, side) -> Side:
        if isinstance(side, Atom):
            return Atom(as_adorn(side.adorn))
        opts = tuple(sorted(set(side)))
        if not opts:
            raise StructuralError("an option list must be non-empty; use Atom for an empty side")
        n = len(self.nodes)
        for o in opts:
            if not isinstance(o, int) or isinstance(o, bool) or not 0 <= o < n:
                raise StructuralError(f"unknown game id {o!r}")
        return opts

    def intern(self, left, right) -> GameId:
        """Return the unique id of the literal form ``<left | right>``.

        Each side is an :class:`Atom` or an iterable of game ids.
        """
        left = self._canonical_side(left)
        right = self._canonical_side(right)
        key = (left, right)
        gid = self._table.get(key)
        if gid is not None:
            return gid
        with self._lock:
            gid = self._table.get(key)
            if gid is not None:
                return gid
            ranks = [self.nodes[o].rank for side in key if not isinstance(side, Atom) for o in side]
            rank = 1 + max(ranks) if ranks else 0
            gid = len(self.nodes)
            self.nodes.append(GameNode(left, right, rank, gid))
            self._table[key] = gid
            return gid

    def score(self, a) -> GameId:
        a = as_adorn(a)
        return self.intern(Atom(a), Atom(a))

    def pura(self, left_adorn, right_adorn) -> GameId:
        """The purely atomic game with the given left and right adorns."""
        return self.intern(Atom(as_adorn(left_adorn)), Atom(as_adorn(right_adorn)))

    def game(self, left: Iterable[GameId] | Atom, right: Iterable[GameId] | Atom) -> GameId:
        """Convenience wrapper: like :meth:`intern` but lists may be given directly."""
        return self.intern(left, right)

    # -- algebra ------------------------------------------------------------

    def sum(self, g: GameId, h: GameId) -> GameId:
        """Disjunctive sum.

        Atomic sides add their adorns only when the same side is atomic in
        both summands; otherwise the side lists the moves available in either
        component.
        """
        key = (g, h) if g <= h else (h, g)
        hit = self._sum_memo.get(key)
        if hit is not None:
            return hit
        G, H = self.nodes[g], self.nodes[h]
        res = self.intern(self._sum_side(g, G.left, h, H.left), self._sum_side(g, G.right, h, H.right))
        self._sum_memo[key] = res
        return res

    def _sum_side(self, g, gs, h, hs) -> Side:
        g_atom, h_atom = isinstance(gs, Atom), isinstance(hs, Atom)
        if g_atom and h_atom:
            return Atom(gs.adorn + hs.adorn)
        opts = []
        if not g_atom:
            opts.extend(self.sum(x, h) for x in gs)
        if not h_atom:
            opts.extend(self.sum(g, y) for y in hs)
        return opts

    def sum_all(self, games: Iterable[GameId]) -> GameId:
        total = self.zero
        for g in games:
            total = self.sum(total, g)
        return total

    def conjugate(self, g: GameId) -> GameId:
        """Swap the roles of Left and Right, negating every adorn."""
        hit = self._conj_memo.get(g)
        if hit is not None:
            return hit
        G = self.nodes[g]
        res = self.intern(self._conj_side(G.right), self._conj_side(G.left))
        self._conj_memo[g] = res
        self._conj_memo.setdefault(res, g)
        return res

    def _conj_side(self, side) -> Side:
        if isinstance(side, Atom):
            return Atom(-side.adorn)
        return [self.conjugate(x) for x in side]

    # -- structure ----------------------------------------------------------

    def rank(self, g: GameId) -> int:
        return self.nodes[g].rank

    def is_left_atomic(self, g: GameId) -> bool:
        return isinstance(self.nodes[g].left, Atom)

    def is_right_atomic(self, g: GameId) -> bool:
        return isinstance(self.nodes[g].right, Atom)

    def left_options(self, g: GameId) -> tuple:
        return self.nodes[g].left_options

    def right_options(self, g: GameId) -> tuple:
        return self.nodes[g].right_options

    def followers(self, g: GameId) -> frozenset:
        """``g`` together with every position reachable through options."""
        memo = self.cache("followers")
        hit = memo.get(g)
        if hit is not None:
            return hit
        G = self.nodes[g]
        acc = {g}
        for o in G.left_options + G.right_options:
            acc |= self.followers(o)
        res = memo[g] = frozenset(acc)
        return res

    def adorns(self, g: GameId) -> frozenset:
        """All adorns carried by atoms anywhere in the game tree."""
        memo = self.cache("adorns")
        hit = memo.get(g)
        if hit is not None:
            return hit
        G = self.nodes[g]
        acc = set()
        for side in (G.left, G.right):
            if isinstance(side, Atom):
                acc.add(side.adorn)
            else:
                for o in side:
                    acc |= self.adorns(o)
        res = memo[g] = frozenset(acc)
        return res

    def is_score(self, g: GameId) -> bool:
        G = self.nodes[g]
        return G.rank == 0 and G.left == G.right


def int_game(store: GameStore, n: int) -> GameId:
    """Normal-play integer ``n`` as a literal form with 0 adorns.

    ``n > 0`` is a chain of ``n`` Left moves (Right atomic throughout), ``n < 0``
    the mirror chain for Right.
    """
    g = store.zero
    zero_atom = Atom(Fraction(0))
    for _ in range(abs(n)):
        g = store.intern([g], zero_atom) if n > 0 else store.intern(zero_atom, [g])
    return g


def star(store: GameStore) -> GameId:
    z = store.zero
    return store.intern([z], [z])
