"""Brute-force validation of the constructive engine on finite pools.

Nothing here proves anything about a whole universe: a pool is a finite,
deterministic sample of it, so "confirmed on pool" is necessary-condition
evidence only.  Refutations, on the other hand, are genuine.
"""
from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .comparison import ge, ge_normal_classic, linked, xi_project
from .errors import ArgumentError, ResourceError, UnsupportedUniverseError
from .game_core import Atom, GameId, GameStore, as_adorn
from .notation import to_text
from .outcomes import OutcomeClass, evaluate, outcome_adorns
from .universe import (AdornDomain, DEFAULT_ENUMERATION_GUARD, DICOT_MISERE, FREE_MISERE, Shape, UniverseSpec,
                       WIN, member, nonempty_subsets)

DEFAULT_ADORNS = (-1, 0, 1)
DEFAULT_SEED = 20190601
FULL_LEVEL_LIMIT = 1_000
DEFAULT_LEVEL_SAMPLE = 60
DEFAULT_WITNESS_SAMPLE = 500


@dataclass
class Pool:
    universe: str
    games: list
    max_rank: int
    adorn_pool: tuple
    sampled: bool = False
    levels: dict = field(default_factory=dict)

    def __iter__(self):
        return iter(self.games)

    def __len__(self):
        return len(self.games)

    def __contains__(self, g):
        return g in self._set

    @property
    def _set(self):
        s = self.__dict__.get("_members")
        if s is None or len(s) != len(self.games):
            s = self.__dict__["_members"] = frozenset(self.games)
        return s

    def extended(self, other: "Pool") -> "Pool":
        games = list(self.games) + [g for g in other.games if g not in self]
        return Pool(self.universe, games, max(self.max_rank, other.max_rank), self.adorn_pool,
                    self.sampled or other.sampled, {**self.levels, **other.levels})


# -- pool construction ---------------------------------------------------------


def _domain_adorns(u: UniverseSpec, adorns) -> list:
    out = sorted({as_adorn(a) for a in adorns})
    if u.adorn_domain is AdornDomain.ZERO_ONLY:
        out = [a for a in out if a == 0]
    if not out:
        raise ArgumentError(f"no usable adorns for {u.name}")
    return out


def _atom_choices(u: UniverseSpec, adorns) -> list:
    # Only the kernel shape forbids atomic sides on non-atomic games.
    if u.shape is Shape.DICOT_KERNEL:
        return []
    return [Atom(a) for a in adorns]


def _level_zero(store: GameStore, u: UniverseSpec, adorns) -> list:
    if u.shape is Shape.DICOT_KERNEL:
        cands = [store.score(a) for a in adorns]
    else:
        cands = [store.pura(a, b) for a in adorns for b in adorns]
    return [g for g in cands if member(store, g, u)]


def _full_level(store, u, n, lower, atoms, guard):
    choices = atoms + list(nonempty_subsets(lower))
    count = len(choices) ** 2
    if count > guard:
        raise ResourceError(f"rank {n} level of {u.name} has {count} candidates (guard {guard})", count)
    out, seen = [], set(lower)
    for left in choices:
        for right in choices:
            g = store.intern(left, right)
            if g not in seen and store.rank(g) == n and member(store, g, u):
                seen.add(g)
                out.append(g)
    return out


def _sampled_level(store, u, n, lower, atoms, count, rng, max_options, p_atom):
    top = [g for g in lower if store.rank(g) == n - 1]
    out, seen = [], set(lower)
    attempts = 0
    limit = 200 * count + 1000
    k_max = min(max_options, len(lower))

    def side():
        if atoms and rng.random() < p_atom:
            return rng.choice(atoms)
        return rng.sample(lower, rng.randint(1, k_max))

    while len(out) < count and attempts < limit:
        attempts += 1
        left, right = side(), side()
        if isinstance(left, Atom) and isinstance(right, Atom):
            left = [rng.choice(top)]
        opts = ([] if isinstance(left, Atom) else left) + ([] if isinstance(right, Atom) else right)
        if not any(store.rank(o) == n - 1 for o in opts):
            target = left if not isinstance(left, Atom) else right
            target[rng.randrange(len(target))] = rng.choice(top)
        g = store.intern(left, right)
        if g in seen or store.rank(g) != n or not member(store, g, u):
            continue
        seen.add(g)
        out.append(g)
    return out


def _too_big(n_atoms: int, n_lower: int) -> bool:
    if n_lower >= 20:
        return True
    return (n_atoms + 2 ** n_lower - 1) ** 2 > FULL_LEVEL_LIMIT


def build_pool(store: GameStore, u: UniverseSpec, max_rank: int, adorns: Iterable = DEFAULT_ADORNS,
               samples: dict | str | None = None, seed: int = DEFAULT_SEED, max_options: int = 4,
               p_atom: float = 0.3, guard: int = DEFAULT_ENUMERATION_GUARD,
               level_sample: int = DEFAULT_LEVEL_SAMPLE) -> Pool:
    """Games of ``u`` up to ``max_rank``, level by level.

    Levels listed in ``samples`` (rank -> count) are drawn with a seeded
    generator, every other level is enumerated in full.  With
    ``samples="auto"`` a level is sampled (``level_sample`` games) as soon as
    full enumeration would exceed ``FULL_LEVEL_LIMIT`` candidates.  Sampled
    games have at most ``max_options`` options per side; in shapes that allow
    it, a side is an atom with probability ``p_atom``.
    """
    auto = samples == "auto"
    samples = {} if auto else dict(samples or {})
    rng = random.Random(seed)
    adorns = _domain_adorns(u, adorns)
    atoms = _atom_choices(u, adorns)
    games = _level_zero(store, u, adorns)
    levels = {0: len(games)}
    for n in range(1, max_rank + 1):
        if auto and (samples or _too_big(len(atoms), len(games))):
            samples[n] = level_sample
        if n in samples:
            new = _sampled_level(store, u, n, list(games), atoms, samples[n], rng, max_options, p_atom)
        else:
            new = _full_level(store, u, n, list(games), atoms, guard)
        levels[n] = len(new)
        games.extend(new)
    return Pool(u.name, games, max_rank, tuple(adorns), bool(samples), levels)


def standard_pool(store: GameStore, u: UniverseSpec, max_rank: int, adorns: Iterable = DEFAULT_ADORNS,
                  seed: int = DEFAULT_SEED, level_sample: int = DEFAULT_LEVEL_SAMPLE) -> Pool:
    """:func:`build_pool` with levels sampled exactly when full enumeration would exceed ``FULL_LEVEL_LIMIT``."""
    return build_pool(store, u, max_rank, adorns, samples="auto", seed=seed, level_sample=level_sample)


def witness_pool(store: GameStore, base: Pool, u: UniverseSpec, count: int = 500,
                 seed: int = DEFAULT_SEED + 1, max_options: int = 4, p_atom: float = 0.3) -> Pool:
    """``base`` plus ``count`` seeded games one rank above it."""
    rng = random.Random(seed)
    atoms = _atom_choices(u, base.adorn_pool)
    n = base.max_rank + 1
    new = _sampled_level(store, u, n, list(base.games), atoms, count, rng, max_options, p_atom)
    levels = {**base.levels, n: len(new)}
    return Pool(base.universe, list(base.games) + new, n, base.adorn_pool, True, levels)


def is_impartial(store: GameStore, g: GameId) -> bool:
    """Both players have the same options at every follower."""
    return all(store[f].left == store[f].right for f in store.followers(g))


def impartial_pool(store: GameStore, max_rank: int) -> Pool:
    """Zero-adorn impartial games up to ``max_rank`` (4 games at rank 2)."""
    games = [store.zero]
    for _ in range(max_rank):
        games = sorted(set(games) | {store.intern(s, s) for s in nonempty_subsets(games)})
    return Pool(FREE_MISERE.name, games, max_rank, (Fraction(0),))


# -- superordinate order on a pool ---------------------------------------------


@dataclass(frozen=True)
class BruteForceResult:
    confirmed: bool
    witness: GameId | None = None
    side: str | None = None

    def __bool__(self):
        return self.confirmed


def _sum_outcome(store, g, x, u):
    return evaluate(store, store.sum(g, x), u)


def ge_bruteforce(store: GameStore, g: GameId, h: GameId, pool: Pool | Sequence,
                  u: UniverseSpec) -> BruteForceResult:
    """Check ``o(G+X) >= o(H+X)`` pointwise for every ``X`` in the pool.

    Returns the first refuting ``X`` and the side (``"left"``/``"right"``) whose
    inequality failed.
    """
    for x in pool:
        og, oh = _sum_outcome(store, g, x, u), _sum_outcome(store, h, x, u)
        if og.left < oh.left:
            return BruteForceResult(False, x, "left")
        if og.right < oh.right:
            return BruteForceResult(False, x, "right")
    return BruteForceResult(True)


def distinguishing_games(store: GameStore, g: GameId, h: GameId, pool, u: UniverseSpec):
    """Pool games ``T`` with ``o_L(G+T) < o_L(H+T)`` and ``V`` with ``o_R(G+V) < o_R(H+V)``."""
    left = next((x for x in pool if _sum_outcome(store, g, x, u).left < _sum_outcome(store, h, x, u).left), None)
    right = next((x for x in pool if _sum_outcome(store, g, x, u).right < _sum_outcome(store, h, x, u).right), None)
    return left, right


def find_linking_T(store: GameStore, g: GameId, h: GameId, pool, u: UniverseSpec) -> GameId | None:
    """First pool game ``T`` with ``o_L(G+T) < o_R(H+T)``, if any."""
    for t in pool:
        if _sum_outcome(store, g, t, u).left < _sum_outcome(store, h, t, u).right:
            return t
    return None


# -- adjoints and density --------------------------------------------------------


def _require_zero(store, g, what):
    if store.adorns(g) - {0}:
        raise ArgumentError(f"{what} needs a misere-space game (all adorns 0); game {g} is not")


def adjoint(store: GameStore, g: GameId) -> GameId:
    """Misère adjoint: ``G + adjoint(G)`` is a previous-player win."""
    _require_zero(store, g, "adjoint")
    memo = store.cache("adjoint")
    hit = memo.get(g)
    if hit is not None:
        return hit
    z = store.zero
    G = store[g]
    if g == z:
        res = store.intern([z], [z])
    elif G.left_atomic and not G.right_atomic:
        res = store.intern([adjoint(store, x) for x in G.right], [z])
    elif G.right_atomic and not G.left_atomic:
        res = store.intern([z], [adjoint(store, x) for x in G.left])
    else:
        res = store.intern([adjoint(store, x) for x in G.right], [adjoint(store, x) for x in G.left])
    memo[g] = res
    return res


def density_witness(store: GameStore, g: GameId, target: OutcomeClass, u: UniverseSpec = DICOT_MISERE) -> GameId:
    """A companion ``H`` with ``o(G+H)`` in the requested misère outcome class."""
    if u.is_scoring or u.nu_left(Fraction(0)) != WIN:
        raise UnsupportedUniverseError(f"density_witness needs a misere universe, not {u.name}")
    target = OutcomeClass(target)
    g_adj = adjoint(store, g)
    if target is OutcomeClass.P:
        return g_adj
    g_n = store.intern([g_adj], [g_adj])
    if target is OutcomeClass.N:
        return g_n
    G = store[g]
    if target is OutcomeClass.L:
        return store.intern([adjoint(store, x) for x in G.right_options] + [g_adj], [g_n])
    return store.intern([g_n], [adjoint(store, x) for x in G.left_options] + [g_adj])


def _adorn_range(store: GameStore, g: GameId) -> tuple[Fraction, Fraction]:
    vals = store.adorns(g)
    return min(vals), max(vals)


def scoring_density_witness(store: GameStore, g: GameId, x, y, u: UniverseSpec | None = None) -> GameId:
    """A dicot companion ``W`` with ``o(G+W) = (x, y)`` in scoring play.

    ``W`` offers Left the move to ``<T1 | x - l>`` and Right the move to
    ``<y - r | T2>``, where ``(l, r)`` is ``G``'s outcome and the scores ``T1``
    (huge for Left) and ``T2`` (huge for Right) force an immediate reply.  A
    move in ``G`` is answered in ``W`` by the companion one level down, so
    neither player can shift the tempo through ``G``.
    """
    if u is not None and not u.is_scoring:
        raise UnsupportedUniverseError(f"scoring_density_witness needs a scoring universe, not {u.name}")
    x, y = as_adorn(x), as_adorn(y)
    return _scoring_witness(store, g, x, y)


def _scoring_witness(store, g, x, y):
    memo = store.cache("scoring_witness")
    key = (g, x, y)
    hit = memo.get(key)
    if hit is not None:
        return hit
    G = store[g]
    lo, hi = _adorn_range(store, g)
    ell, r = outcome_adorns(store, g)
    t1 = store.score(max(x, y) - lo + 1)
    t2 = store.score(min(x, y) - hi - 1)
    left_threat = store.intern([t1], [store.score(x - ell)])
    right_threat = store.intern([store.score(y - r)], [t2])
    lefts = [left_threat] + [_scoring_witness(store, o, x, y) for o in G.right_options]
    rights = [right_threat] + [_scoring_witness(store, o, x, y) for o in G.left_options]
    res = memo[key] = store.intern(lefts, rights)
    return res


# -- quasi-identities ------------------------------------------------------------------


@dataclass
class ProbeReport:
    game: GameId
    checked: int
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations


def quasi_identity_probe(store: GameStore, x: GameId, pool, u: UniverseSpec) -> ProbeReport:
    """Evidence for ``X + X = X``: compare ``o(X+X+Y)`` with ``o(X+Y)`` over the pool."""
    _require_zero(store, x, "quasi_identity_probe")
    xx = store.sum(x, x)
    bad = [y for y in pool if _sum_outcome(store, xx, y, u) != _sum_outcome(store, x, y, u)]
    return ProbeReport(x, len(pool), bad)


# -- sweeps -------------------------------------------------------------------------


def _pair(store, g, h):
    return {"lhs": g, "rhs": h, "lhs_text": to_text(store, g), "rhs_text": to_text(store, h)}


def soundness_sweep(store: GameStore, pool: Pool, witnesses: Pool, u: UniverseSpec) -> Iterator[dict]:
    """One record per ordered pair: constructive verdict against brute force.

    ``status`` is ``confirmed`` or ``refuted`` for pairs with a constructive
    ``>=`` (refuted means a counterexample to the engine), ``witnessed`` or
    ``pool-exhausted`` for pairs where ``>=`` fails.
    """
    for g, h in itertools.product(pool.games, repeat=2):
        t0 = time.perf_counter()
        v = ge(store, g, h, u)
        bf = ge_bruteforce(store, g, h, witnesses, u)
        if v.holds:
            status = "confirmed" if bf.confirmed else "refuted"
        else:
            status = "pool-exhausted" if bf.confirmed else "witnessed"
        yield dict(check="soundness", universe=u.name, **_pair(store, g, h), constructive=v.holds,
                   reason=v.reason, bruteforce=bf.confirmed, witness=bf.witness, side=bf.side,
                   status=status, seconds=time.perf_counter() - t0)


def linked_sweep(store: GameStore, pool: Pool, witnesses: Pool, u: UniverseSpec) -> Iterator[dict]:
    for g, h in itertools.product(pool.games, repeat=2):
        t0 = time.perf_counter()
        lk = linked(store, g, h, u)
        t = find_linking_T(store, g, h, witnesses, u)
        if lk:
            status = "witnessed" if t is not None else "pool-exhausted"
        else:
            status = "consistent" if t is None else "contradiction"
        yield dict(check="linked", universe=u.name, **_pair(store, g, h), linked=lk, witness=t,
                   status=status, seconds=time.perf_counter() - t0)


def normal_projection_sweep(store: GameStore, pool: Pool, u: UniverseSpec) -> Iterator[dict]:
    """``G >= H`` in ``u`` must survive projection to normal play."""
    for g, h in itertools.product(pool.games, repeat=2):
        t0 = time.perf_counter()
        v = ge(store, g, h, u).holds
        n = ge_normal_classic(store, xi_project(store, g), xi_project(store, h)) if v else None
        status = "skipped" if not v else ("consistent" if n else "contradiction")
        yield dict(check="normal-projection", universe=u.name, **_pair(store, g, h), constructive=v,
                   normal=n, status=status, seconds=time.perf_counter() - t0)


def summarize(records: Iterable[dict]) -> dict:
    counts: dict = {}
    for r in records:
        key = (r["check"], r["status"])
        counts[key] = counts.get(key, 0) + 1
    return {f"{c}:{s}": n for (c, s), n in sorted(counts.items())}


def write_report(records: Iterable[dict], path) -> list:
    """Write records as JSON lines and return them."""
    out = []
    with open(path, "w", encoding="utf-8") as fh:
        for r in records:
            fh.write(json.dumps(r, default=str) + "\n")
            out.append(r)
    return out
