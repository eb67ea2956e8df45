"""Constructive comparison of games modulo a universe.

``ge(G, H)`` holds exactly when the universe's atomic test (the Proviso)
holds for the pair and the Common Normal Part holds:

* every Right move ``G^R`` is matched by some ``H^R`` with ``G^R >= H^R`` or
  answered by some ``G^RL >= H``;
* every Left move ``H^L`` is matched by some ``G^L >= H^L`` or answered by
  some ``H^LR`` with ``G >= H^LR``.

Both clauses recurse on pairs of strictly smaller total rank.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .errors import ArgumentError, UnsupportedUniverseError
from .game_core import Atom, GameId, GameStore, int_game
from .outcomes import _pass_left, _pass_right, evaluate
from .universe import (GUARANTEED_SCORING, NORMAL, ProvisoKind, UniverseSpec, WIN,
                       require_member)

OK = "ok"
PROVISO_FAILED = "proviso"
CNP_FAILED = "cnp"


@dataclass(frozen=True)
class Verdict:
    holds: bool
    reason: str = OK
    detail: dict[str, Any] = field(default_factory=dict, compare=False)
    key: tuple = ()

    def __bool__(self):
        return self.holds


def _proviso(store: GameStore, g: GameId, h: GameId, u: UniverseSpec):
    """Return ``None`` when the universe's atomic test passes, otherwise failure details."""
    kind = u.proviso_kind
    if kind is ProvisoKind.NORMAL_EMPTY:
        return None
    if kind is ProvisoKind.DICOT_OUTCOMES:
        og, oh = evaluate(store, g, u), evaluate(store, h, u)
        if not og.left >= oh.left:
            return {"test": "outcome", "which": "left", "lhs": og.left, "rhs": oh.left}
        if not og.right >= oh.right:
            return {"test": "outcome", "which": "right", "lhs": og.right, "rhs": oh.right}
        return None
    if kind is ProvisoKind.FREE_MISERE_ATOMIC:
        if store.is_left_atomic(h) and not store.is_left_atomic(g):
            return {"test": "atomic", "which": "left",
                    "message": "H is left-atomic but G is not"}
        if store.is_right_atomic(g) and not store.is_right_atomic(h):
            return {"test": "atomic", "which": "right",
                    "message": "G is right-atomic but H is not"}
        return None
    if kind is ProvisoKind.GUARANTEED_PASS_ALLOWED:
        gl, hl = _pass_left(store, g, u), _pass_left(store, h, u)
        if not gl >= hl:
            return {"test": "pass-allowed", "which": "left", "lhs": gl, "rhs": hl}
        gr, hr = _pass_right(store, g, u), _pass_right(store, h, u)
        if not gr >= hr:
            return {"test": "pass-allowed", "which": "right", "lhs": gr, "rhs": hr}
        return None
    raise UnsupportedUniverseError(
        f"{u.name} has no constructive comparison; use the brute-force oracle instead")


def _ge(store: GameStore, g: GameId, h: GameId, u: UniverseSpec, memo: dict) -> Verdict:
    key = (g, h, u.name)
    hit = memo.get(key)
    if hit is not None:
        return hit
    failure = _proviso(store, g, h, u)
    if failure is not None:
        res = Verdict(False, PROVISO_FAILED, failure, key)
        memo[key] = res
        return res
    G, H = store[g], store[h]
    budget = G.rank + H.rank
    res = None
    for gr in G.right_options:
        assert store.rank(gr) + H.rank < budget
        if any(_ge(store, gr, hr, u, memo).holds for hr in H.right_options):
            continue
        if any(_ge(store, grl, h, u, memo).holds for grl in store.left_options(gr)):
            continue
        res = Verdict(False, CNP_FAILED, {"side": "right", "move": gr}, key)
        break
    if res is None:
        for hl in H.left_options:
            assert G.rank + store.rank(hl) < budget
            if any(_ge(store, gl, hl, u, memo).holds for gl in G.left_options):
                continue
            if any(_ge(store, g, hlr, u, memo).holds for hlr in store.right_options(hl)):
                continue
            res = Verdict(False, CNP_FAILED, {"side": "left", "move": hl}, key)
            break
    if res is None:
        res = Verdict(True, OK, {}, key)
    memo[key] = res
    return res


def ge(store: GameStore, g: GameId, h: GameId, u: UniverseSpec) -> Verdict:
    """Decide ``G >= H`` modulo ``u``.

    On failure the verdict names either the atomic test that failed (with both
    values) or the move that has no good reply: ``side="right"`` is a Right move
    ``G^R`` in the first game, ``side="left"`` a Left move ``H^L`` in the second.
    """
    if u.proviso_kind is ProvisoKind.ORACLE_ONLY:
        raise UnsupportedUniverseError(
            f"{u.name} has no constructive comparison; use the brute-force oracle instead")
    require_member(store, g, u, "left game")
    require_member(store, h, u, "right game")
    return _ge(store, g, h, u, store.cache("ge"))


def le(store, g, h, u) -> Verdict:
    return ge(store, h, g, u)


def equivalent(store: GameStore, g: GameId, h: GameId, u: UniverseSpec) -> bool:
    return ge(store, g, h, u).holds and ge(store, h, g, u).holds


def incomparable(store: GameStore, g: GameId, h: GameId, u: UniverseSpec) -> bool:
    return not ge(store, g, h, u).holds and not ge(store, h, g, u).holds


def relation(store: GameStore, g: GameId, h: GameId, u: UniverseSpec) -> str:
    """One of ``'='``, ``'>='``, ``'<='`` or ``'||'``."""
    a, b = ge(store, g, h, u).holds, ge(store, h, g, u).holds
    return {(True, True): "=", (True, False): ">=", (False, True): "<=", (False, False): "||"}[(a, b)]


def linked(store: GameStore, g: GameId, h: GameId, u: UniverseSpec) -> bool:
    """Whether some companion game leaves Left worse off in ``G+T`` than Right in ``H+T``.

    Decided without a search: no ``G^L >= H`` and no ``G >= H^R``.
    """
    memo = store.cache("linked")
    key = (g, h, u.name)
    hit = memo.get(key)
    if hit is not None:
        return hit
    res = not any(ge(store, gl, h, u).holds for gl in store.left_options(g)) and \
        not any(ge(store, g, hr, u).holds for hr in store.right_options(h))
    memo[key] = res
    return res


# -- normal play --------------------------------------------------------------


def xi_project(store: GameStore, g: GameId) -> GameId:
    """The same game tree with every adorn replaced by 0."""
    memo = store.cache("xi")
    hit = memo.get(g)
    if hit is not None:
        return hit
    G = store[g]
    sides = []
    for side in (G.left, G.right):
        if isinstance(side, Atom):
            sides.append(Atom(0))
        else:
            sides.append([xi_project(store, o) for o in side])
    res = memo[g] = store.intern(*sides)
    return res


def zeta_embed(store: GameStore, g: GameId, u: UniverseSpec = GUARANTEED_SCORING) -> GameId:
    """A zero-adorn normal-play form read as a game of ``u`` (the literal form is unchanged)."""
    if store.adorns(g) - {0}:
        raise ArgumentError(f"game {g} carries non-zero adorns and is not a normal-play form")
    require_member(store, g, u)
    return g


def ge_normal_classic(store: GameStore, g: GameId, h: GameId) -> bool:
    """Normal-play ``G >= H`` via "Left wins G - H moving second"."""
    if (store.adorns(g) | store.adorns(h)) - {0}:
        raise ArgumentError("ge_normal_classic needs zero-adorn games")
    diff = store.sum(g, store.conjugate(h))
    return evaluate(store, diff, NORMAL).right == WIN


__all__ = [
    "Verdict", "ge", "le", "equivalent", "incomparable", "relation", "linked",
    "xi_project", "zeta_embed", "ge_normal_classic", "int_game",
    "OK", "PROVISO_FAILED", "CNP_FAILED",
]
