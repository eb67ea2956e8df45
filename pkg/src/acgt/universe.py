"""Universe descriptors and membership.

A universe fixes the adorn domain, the evaluation maps ``nu_left`` and
``nu_right`` into a totally ordered result set, the shape restriction games
must satisfy, and which universe-specific test the constructive comparison
uses.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import total_ordering
from typing import Callable, Iterable, Sequence

from .errors import ArgumentError, ResourceError, UnsupportedUniverseError
from .game_core import GameId, GameStore, as_adorn

DEFAULT_ENUMERATION_GUARD = 100_000


class ValueTag(enum.Enum):
    WIN_LOSS = "win-loss"
    SCORE = "score"


@total_ordering
@dataclass(frozen=True, slots=True)
class OutcomeValue:
    """An element of a universe's result set.

    Win/loss values are ``+1``/``-1``; score values are adorns.  Values with
    different tags are not comparable.
    """

    tag: ValueTag
    value: Fraction

    def _check(self, other):
        if not isinstance(other, OutcomeValue):
            return NotImplemented
        if other.tag is not self.tag:
            raise TypeError(f"cannot compare {self.tag.value} and {other.tag.value} values")
        return None

    def __lt__(self, other):
        bad = self._check(other)
        if bad is NotImplemented:
            return bad
        return self.value < other.value

    def __eq__(self, other):
        if not isinstance(other, OutcomeValue):
            return NotImplemented
        return self.tag is other.tag and self.value == other.value

    def __hash__(self):
        return hash((self.tag, self.value))

    def __str__(self):
        if self.tag is ValueTag.WIN_LOSS:
            return "+1" if self.value > 0 else "-1"
        return str(self.value)

    def to_json(self):
        if self.tag is ValueTag.WIN_LOSS:
            return int(self.value)
        v = self.value
        return int(v) if v.denominator == 1 else str(v)


WIN = OutcomeValue(ValueTag.WIN_LOSS, Fraction(1))
LOSS = OutcomeValue(ValueTag.WIN_LOSS, Fraction(-1))


def score_value(a) -> OutcomeValue:
    return OutcomeValue(ValueTag.SCORE, as_adorn(a))


class AdornDomain(enum.Enum):
    ALL_RATIONALS = "all-rationals"
    ZERO_ONLY = "zero-only"


class ProvisoKind(enum.Enum):
    NORMAL_EMPTY = "normal-empty"
    DICOT_OUTCOMES = "dicot-outcomes"
    FREE_MISERE_ATOMIC = "free-misere-atomic"
    GUARANTEED_PASS_ALLOWED = "guaranteed-pass-allowed"
    ORACLE_ONLY = "oracle-only"


class Shape(enum.Enum):
    FREE = "free"
    DICOT_KERNEL = "dicot-kernel"
    GUARANTEED = "guaranteed"
    EXTENSION = "extension"


def _normal_left(a):
    return LOSS


def _normal_right(a):
    return WIN


def _identity(a):
    return score_value(a)


@dataclass(frozen=True)
class UniverseSpec:
    name: str
    adorn_domain: AdornDomain
    nu_left: Callable[[Fraction], OutcomeValue] = field(repr=False)
    nu_right: Callable[[Fraction], OutcomeValue] = field(repr=False)
    shape: Shape
    proviso_kind: ProvisoKind
    generators: tuple = ()
    base: "UniverseSpec | None" = field(default=None, repr=False)

    @property
    def is_scoring(self) -> bool:
        return self.adorn_domain is AdornDomain.ALL_RATIONALS

    @property
    def value_tag(self) -> ValueTag:
        return ValueTag.SCORE if self.is_scoring else ValueTag.WIN_LOSS

    def member(self, store: GameStore, g: GameId) -> bool:
        return member(store, g, self)

    def __str__(self):
        return self.name


NORMAL = UniverseSpec("normal", AdornDomain.ZERO_ONLY, _normal_left, _normal_right,
                      Shape.FREE, ProvisoKind.NORMAL_EMPTY)
MISERE = UniverseSpec("misere", AdornDomain.ZERO_ONLY, _normal_right, _normal_left,
                      Shape.FREE, ProvisoKind.FREE_MISERE_ATOMIC)
FREE_MISERE = UniverseSpec("free-misere", AdornDomain.ZERO_ONLY, _normal_right, _normal_left,
                           Shape.FREE, ProvisoKind.FREE_MISERE_ATOMIC)
DICOT_MISERE = UniverseSpec("dicot-misere", AdornDomain.ZERO_ONLY, _normal_right, _normal_left,
                            Shape.DICOT_KERNEL, ProvisoKind.DICOT_OUTCOMES)
DICOT_SCORING = UniverseSpec("dicot-scoring", AdornDomain.ALL_RATIONALS, _identity, _identity,
                             Shape.DICOT_KERNEL, ProvisoKind.DICOT_OUTCOMES)
GUARANTEED_SCORING = UniverseSpec("guaranteed", AdornDomain.ALL_RATIONALS, _identity, _identity,
                                  Shape.GUARANTEED, ProvisoKind.GUARANTEED_PASS_ALLOWED)
FREE_SCORING = UniverseSpec("free-scoring", AdornDomain.ALL_RATIONALS, _identity, _identity,
                            Shape.FREE, ProvisoKind.ORACLE_ONLY)

BUILTIN = {u.name: u for u in (NORMAL, MISERE, FREE_MISERE, DICOT_MISERE, DICOT_SCORING,
                               GUARANTEED_SCORING, FREE_SCORING)}

# MISERE and FREE_MISERE are the same space under two names.
ALIASES = {"guaranteed-scoring": "guaranteed", "dicot_misere": "dicot-misere",
           "dicot_scoring": "dicot-scoring", "free_misere": "free-misere",
           "free_scoring": "free-scoring", "guaranteed_scoring": "guaranteed"}


def get_universe(name: str) -> UniverseSpec:
    key = ALIASES.get(name, name)
    try:
        return BUILTIN[key]
    except KeyError:
        raise ArgumentError(f"unknown universe {name!r}; choose from {', '.join(BUILTIN)}") from None


# -- shape predicates -------------------------------------------------------


def is_dicot_kernel(store: GameStore, g: GameId) -> bool:
    """True iff every follower is a score ``<e^a|e^a>`` or has moves for both players."""
    memo = store.cache("dicot_kernel")
    hit = memo.get(g)
    if hit is not None:
        return hit
    G = store[g]
    if G.rank == 0:
        res = G.left == G.right
    elif G.left_atomic or G.right_atomic:
        res = False
    else:
        res = all(is_dicot_kernel(store, o) for o in G.left + G.right)
    memo[g] = res
    return res


def _require_scoring(u: UniverseSpec, what: str):
    if not u.is_scoring:
        raise UnsupportedUniverseError(f"{what} is defined for scoring universes only, not {u.name}")


def _horror_vacui_here(store: GameStore, g: GameId, u: UniverseSpec) -> bool:
    from .outcomes import evaluate

    G = store[g]
    if G.right_atomic:
        left, _ = evaluate(store, g, u)
        if not left <= u.nu_right(G.right.adorn):
            return False
    if G.left_atomic:
        _, right = evaluate(store, g, u)
        if not u.nu_left(G.left.adorn) <= right:
            return False
    return True


def is_horror_vacui(store: GameStore, g: GameId, u: UniverseSpec) -> bool:
    """True iff no one-side-atomic follower lets the stuck player profit from the game ending.

    For a follower ``<X | e^a>`` Left moving first must do no better than
    ``nu_right(a)``; dually for ``<e^a | X>``.
    """
    _require_scoring(u, "horror vacui")
    memo = store.cache(f"horror_vacui:{u.name}")
    hit = memo.get(g)
    if hit is not None:
        return hit
    G = store[g]
    res = _horror_vacui_here(store, g, u) and all(
        is_horror_vacui(store, o, u) for o in G.left_options + G.right_options)
    memo[g] = res
    return res


def is_guaranteed(store: GameStore, g: GameId) -> bool:
    """Every left-atomic follower's adorn is a lower bound for the adorns in it, dually on the right.

    This is the adorn-level guarantee; it implies hereditary horror vacui but
    is strictly stronger, and unlike the outcome-level condition it is what
    the pass-allowed comparison needs.
    """
    memo = store.cache("guaranteed")
    hit = memo.get(g)
    if hit is not None:
        return hit
    G = store[g]
    vals = store.adorns(g)
    res = (not G.left_atomic or G.left.adorn <= min(vals)) and \
        (not G.right_atomic or G.right.adorn >= max(vals)) and \
        all(is_guaranteed(store, o) for o in G.left_options + G.right_options)
    memo[g] = res
    return res


def _in_domain(store: GameStore, g: GameId, u: UniverseSpec) -> bool:
    if u.adorn_domain is AdornDomain.ZERO_ONLY:
        return store.adorns(g) <= {0}
    return True


def member(store: GameStore, g: GameId, u: UniverseSpec) -> bool:
    memo = store.cache(f"member:{u.name}")
    hit = memo.get(g)
    if hit is not None:
        return hit
    if not _in_domain(store, g, u):
        res = False
    elif u.shape is Shape.FREE:
        res = True
    elif u.shape is Shape.DICOT_KERNEL:
        res = is_dicot_kernel(store, g)
    elif u.shape is Shape.GUARANTEED:
        res = is_guaranteed(store, g)
    else:
        res = _extension_member(store, g, u)
    memo[g] = res
    return res


def require_member(store: GameStore, g: GameId, u: UniverseSpec, role: str = "game"):
    if not member(store, g, u):
        raise UnsupportedUniverseError(f"{role} {g} is not a member of {u.name}")


# -- enumeration ------------------------------------------------------------


def nonempty_subsets(items: Sequence) -> Iterable[tuple]:
    for k in range(1, len(items) + 1):
        yield from itertools.combinations(items, k)


def enumerate_kernel(store: GameStore, u: UniverseSpec, max_rank: int,
                     adorn_pool: Iterable = (0,), guard: int = DEFAULT_ENUMERATION_GUARD) -> list:
    """All dicot-kernel games up to ``max_rank`` built from the given scores.

    Level 0 holds the scores; level ``n`` holds every game whose two option
    sets are non-empty subsets of the earlier levels and that has rank ``n``.
    """
    adorns = [as_adorn(a) for a in adorn_pool]
    if u.adorn_domain is AdornDomain.ZERO_ONLY:
        adorns = [a for a in adorns if a == 0]
    adorns = sorted(set(adorns))
    games = [store.score(a) for a in adorns]
    for n in range(1, max_rank + 1):
        k = len(games)
        count = (2 ** k - 1) ** 2
        if count + len(games) > guard:
            raise ResourceError(
                f"rank {n} kernel level needs {count} candidates (guard {guard})", count)
        lower = list(games)
        seen = set(games)
        for left in nonempty_subsets(lower):
            for right in nonempty_subsets(lower):
                g = store.intern(left, right)
                if g not in seen and store.rank(g) == n:
                    seen.add(g)
                    games.append(g)
    return [g for g in games if member(store, g, u)]


# -- extensions -------------------------------------------------------------


def extend(store: GameStore, u: UniverseSpec, generators: Iterable[GameId]) -> UniverseSpec:
    """The closure of ``u``'s kernel together with one-side-atomic generators."""
    gens = tuple(sorted(set(generators)))
    for g in gens:
        G = store[g]
        if G.left_atomic == G.right_atomic:
            raise ArgumentError(f"generator {g} is not one-side atomic")
        if not _in_domain(store, g, u):
            raise ArgumentError(f"generator {g} has adorns outside {u.name}'s domain")
        if any(not store.is_score(f) for f in store.followers(g) if store.rank(f) == 0):
            raise ArgumentError(f"generator {g} has a purely atomic follower that is not a score")
    base = u.base or u
    gens = tuple(sorted(set(gens) | set(u.generators)))
    name = f"{base.name}({','.join(map(str, gens))})"
    return UniverseSpec(name, base.adorn_domain, base.nu_left, base.nu_right,
                        Shape.EXTENSION, ProvisoKind.ORACLE_ONLY, gens, base)


def _blocks(store: GameStore, u: UniverseSpec) -> tuple[frozenset, frozenset]:
    """One-side-atomic followers of the generators and of their conjugates.

    Returned as (right-atomic blocks, left-atomic blocks), rank-0 games excluded.
    """
    memo = store.cache("extension_blocks")
    hit = memo.get(u.name)
    if hit is not None:
        return hit
    right_blocks, left_blocks = set(), set()
    for gen in u.generators:
        for f in store.followers(gen) | store.followers(store.conjugate(gen)):
            F = store[f]
            if F.rank == 0:
                continue
            if F.right_atomic and not F.left_atomic:
                right_blocks.add(f)
            elif F.left_atomic and not F.right_atomic:
                left_blocks.add(f)
    res = memo[u.name] = (frozenset(right_blocks), frozenset(left_blocks))
    return res


def _block_sums(store: GameStore, blocks: frozenset, total: int, memo: dict) -> frozenset:
    """Every sum of blocks whose ranks add up to ``total``.

    One-sided games add ranks exactly, so a one-side-atomic member of rank n
    can only be such a sum of total rank n, possibly shifted by a score.
    """
    if total in memo:
        return memo[total]
    if total == 0:
        out = {store.zero}
    else:
        out = set()
        for b in blocks:
            rb = store.rank(b)
            if rb <= total:
                out.update(store.sum(b, c) for c in _block_sums(store, blocks, total - rb, memo))
    res = memo[total] = frozenset(out)
    return res


def _extension_member(store: GameStore, g: GameId, u: UniverseSpec) -> bool:
    G = store[g]
    if G.rank == 0:
        return G.left == G.right
    if not all(member(store, o, u) for o in G.left_options + G.right_options):
        return False
    if not G.left_atomic and not G.right_atomic:
        return True
    right_blocks, left_blocks = _blocks(store, u)
    side = "R" if G.right_atomic else "L"
    blocks = right_blocks if G.right_atomic else left_blocks
    memo = store.cache(f"block_sums:{u.name}:{side}")
    atom = G.right.adorn if G.right_atomic else G.left.adorn
    for s in _block_sums(store, blocks, G.rank, memo):
        S = store[s]
        shift = atom - (S.right.adorn if G.right_atomic else S.left.adorn)
        if shift == 0 and s == g:
            return True
        if shift != 0 and store.sum(s, store.score(shift)) == g:
            return True
    return False
