"""Optimal-play outcomes and the pass-allowed scores used by guaranteed play."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import UnsupportedUniverseError
from .game_core import GameId, GameStore, as_adorn, int_game
from .universe import (GUARANTEED_SCORING, OutcomeValue, UniverseSpec, ValueTag, WIN,
                       LOSS, require_member)


@dataclass(frozen=True, slots=True)
class OutcomePair:
    """``(left, right)``: the result when Left, respectively Right, moves first.

    Pairs are ordered pointwise, so two pairs may be incomparable.
    """

    left: OutcomeValue
    right: OutcomeValue

    def __ge__(self, other):
        if not isinstance(other, OutcomePair):
            return NotImplemented
        return self.left >= other.left and self.right >= other.right

    def __le__(self, other):
        if not isinstance(other, OutcomePair):
            return NotImplemented
        return other >= self

    def __iter__(self):
        yield self.left
        yield self.right

    def __str__(self):
        return f"({self.left}, {self.right})"

    def to_json(self):
        return {"left": self.left.to_json(), "right": self.right.to_json()}


class OutcomeClass(enum.Enum):
    L = "L"
    R = "R"
    N = "N"
    P = "P"


def evaluate(store: GameStore, g: GameId, u: UniverseSpec) -> "OutcomePair":
    """Outcome pair of ``g`` under ``u``'s evaluation maps, without a membership check."""
    memo = store.cache(f"outcome:{u.name}")
    hit = memo.get(g)
    if hit is not None:
        return hit
    G = store[g]
    if G.left_atomic:
        left = u.nu_left(G.left.adorn)
    else:
        left = max(evaluate(store, o, u).right for o in G.left)
    if G.right_atomic:
        right = u.nu_right(G.right.adorn)
    else:
        right = min(evaluate(store, o, u).left for o in G.right)
    res = memo[g] = OutcomePair(left, right)
    return res


def outcome(store: GameStore, g: GameId, u: UniverseSpec) -> OutcomePair:
    require_member(store, g, u)
    return evaluate(store, g, u)


def outcome_adorns(store: GameStore, g: GameId) -> tuple[Fraction, Fraction]:
    """The adorns at which optimal scoring play ends, Left first and Right first."""
    memo = store.cache("outcome_adorns")
    hit = memo.get(g)
    if hit is not None:
        return hit
    G = store[g]
    left = G.left.adorn if G.left_atomic else max(outcome_adorns(store, o)[1] for o in G.left)
    right = G.right.adorn if G.right_atomic else min(outcome_adorns(store, o)[0] for o in G.right)
    res = memo[g] = (left, right)
    return res


def outcome_shift(store: GameStore, g: GameId, c, u: UniverseSpec) -> OutcomePair:
    """Outcome of ``g + score(c)`` obtained by shifting the terminal adorns by ``c``.

    Adding a score never changes who can move, so optimal play in the sum
    ends on the same atoms, each moved by ``c``.
    """
    if not u.is_scoring:
        raise UnsupportedUniverseError(f"outcome_shift needs a scoring universe, not {u.name}")
    require_member(store, g, u)
    c = as_adorn(c)
    left, right = outcome_adorns(store, g)
    return OutcomePair(u.nu_left(left + c), u.nu_right(right + c))


def _require_guaranteed(u: UniverseSpec):
    if u.name != GUARANTEED_SCORING.name:
        raise UnsupportedUniverseError(f"pass-allowed scores are defined for guaranteed scoring, not {u.name}")


def _pass_left(store: GameStore, g: GameId, u: UniverseSpec) -> OutcomeValue:
    # Left to move; Right may pass whenever it is his turn.
    memo = store.cache("pass_left")
    hit = memo.get(g)
    if hit is not None:
        return hit
    G = store[g]
    if G.left_atomic:
        res = u.nu_left(G.left.adorn)
    else:
        best = None
        for gl in G.left:
            # Right replies by passing (Left moves again in gl), by moving, or,
            # with no move and no pass left, by letting the game end.
            v = min([_pass_left(store, gl, u)] + [_pass_left(store, x, u) for x in store.right_options(gl)])
            GL = store[gl]
            if GL.right_atomic:
                v = min(v, u.nu_right(GL.right.adorn))
            if best is None or v > best:
                best = v
        res = best
    memo[g] = res
    return res


def _pass_right(store: GameStore, g: GameId, u: UniverseSpec) -> OutcomeValue:
    memo = store.cache("pass_right")
    hit = memo.get(g)
    if hit is not None:
        return hit
    G = store[g]
    if G.right_atomic:
        res = u.nu_right(G.right.adorn)
    else:
        best = None
        for gr in G.right:
            v = max([_pass_right(store, gr, u)] + [_pass_right(store, x, u) for x in store.left_options(gr)])
            GR = store[gr]
            if GR.left_atomic:
                v = max(v, u.nu_left(GR.left.adorn))
            if best is None or v < best:
                best = v
        res = best
    memo[g] = res
    return res


def pass_allowed_left(store: GameStore, g: GameId, u: UniverseSpec = GUARANTEED_SCORING) -> OutcomeValue:
    """Left's score moving first when Right, and only Right, may pass at will."""
    _require_guaranteed(u)
    require_member(store, g, u)
    return _pass_left(store, g, u)


def pass_allowed_right(store: GameStore, g: GameId, u: UniverseSpec = GUARANTEED_SCORING) -> OutcomeValue:
    """Right's score moving first when only Left may pass."""
    _require_guaranteed(u)
    require_member(store, g, u)
    return _pass_right(store, g, u)


def pass_allowed_by_sums(store: GameStore, g: GameId, u: UniverseSpec = GUARANTEED_SCORING,
                         bound: int | None = None) -> tuple[OutcomeValue, OutcomeValue]:
    """Pass-allowed scores as extremes over sums with Right (Left) integer chains.

    Each pass is followed by a move of the passer's opponent, so ``rank(g)``
    chain moves always suffice; ``bound`` overrides that limit.
    """
    _require_guaranteed(u)
    require_member(store, g, u)
    k = store.rank(g) if bound is None else bound
    left = min(evaluate(store, store.sum(g, int_game(store, -n)), u).left for n in range(k + 1))
    right = max(evaluate(store, store.sum(g, int_game(store, n)), u).right for n in range(k + 1))
    return left, right


def outcome_class(p: OutcomePair, u: UniverseSpec) -> OutcomeClass:
    """Classical outcome letter for a win/loss pair.

    ``+1`` is always good for Left, so the letter depends only on the pair:
    ``(+1,+1)`` L, ``(-1,-1)`` R, ``(+1,-1)`` N, ``(-1,+1)`` P.
    """
    if u.value_tag is not ValueTag.WIN_LOSS:
        raise UnsupportedUniverseError(f"outcome classes need a two-valued result set, not {u.name}")
    if p.left == WIN:
        return OutcomeClass.L if p.right == WIN else OutcomeClass.N
    return OutcomeClass.P if p.right == WIN else OutcomeClass.R


def class_pair(cls: OutcomeClass) -> OutcomePair:
    return {
        OutcomeClass.L: OutcomePair(WIN, WIN),
        OutcomeClass.R: OutcomePair(LOSS, LOSS),
        OutcomeClass.N: OutcomePair(WIN, LOSS),
        OutcomeClass.P: OutcomePair(LOSS, WIN),
    }[cls]
