"""Worked examples from the literature, as named boolean checks.

``run_all`` is what ``acgt selftest`` executes.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .comparison import CNP_FAILED, PROVISO_FAILED, ge, ge_normal_classic, incomparable, linked
from .game_core import Atom, GameStore, int_game
from .notation import parse
from .oracle import adjoint, build_pool, density_witness, ge_bruteforce
from .outcomes import OutcomeClass, evaluate, outcome, outcome_class, pass_allowed_left, pass_allowed_right
from .universe import (DICOT_MISERE, FREE_SCORING, GUARANTEED_SCORING, MISERE, NORMAL, LOSS, WIN,
                       extend, is_dicot_kernel, member, score_value)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


def _checks(s: GameStore) -> list[tuple[str, Callable[[], bool]]]:
    p = lambda text: parse(s, text)  # noqa: E731
    z = s.zero
    up = p("<s(0)|star>")
    g_pass = p("<<s(0)|s(2)>|<s(1)|s(0)>>")
    g_ex = p("<s(1)|<s(1)|s(0)>>")
    one_bar = s.intern([z], Atom(0))
    dm_cache = {}

    def dm_pool():
        if "p" not in dm_cache:
            dm_cache["p"] = build_pool(s, DICOT_MISERE, 2, (0,))
        return dm_cache["p"]

    def kernel_accepted():
        ext = extend(s, DICOT_MISERE, [one_bar])
        return member(s, one_bar, ext) and all(member(s, g, ext) for g in dm_pool())

    return [
        ("zero is the score 0", lambda: s.rank(z) == 0 and s.is_score(z) and p("<e^0|e^0>") == z),
        ("star has rank 1", lambda: s.rank(p("star")) == 1),
        ("G + 0 is G", lambda: all(s.sum(g, z) == g for g in dm_pool())),
        ("conjugate of pura(a,b) is pura(-b,-a)", lambda: s.conjugate(s.pura(1, 3)) == s.pura(-3, -1)),
        ("score 0 is in the dicot kernel", lambda: is_dicot_kernel(s, z)),
        ("pura(1,2) is not in the dicot kernel", lambda: not is_dicot_kernel(s, s.pura(1, 2))),
        ("extension accepts its generator and the kernel", kernel_accepted),
        ("{0,1bar|} is not in the extension by 1bar",
         lambda: not member(s, s.intern([z, one_bar], Atom(0)), extend(s, DICOT_MISERE, [one_bar]))),
        ("normal outcome of 0", lambda: tuple(outcome(s, z, NORMAL)) == (LOSS, WIN)),
        ("misere outcome of 0 is N", lambda: tuple(outcome(s, z, MISERE)) == (WIN, LOSS)
         and outcome_class(outcome(s, z, MISERE), MISERE) is OutcomeClass.N),
        ("atomic scores add", lambda: evaluate(s, s.sum(s.pura(1, 2), s.pura(3, 5)), FREE_SCORING).left == score_value(4)),
        ("pass-allowed left of <<0|2>|<1|0>> is 0", lambda: pass_allowed_left(s, g_pass) == score_value(0)),
        ("pass-allowed scores of <1|<1|0>> are 1", lambda: pass_allowed_left(s, g_ex) == score_value(1)
         and pass_allowed_right(s, g_ex) == score_value(1)),
        ("guaranteed: <1|<1|0>> >= 1", lambda: ge(s, g_ex, s.score(1), GUARANTEED_SCORING).holds),
        ("guaranteed: <1|2> >= 1 fails on the common normal part",
         lambda: ge(s, p("<s(1)|s(2)>"), s.score(1), GUARANTEED_SCORING).reason == CNP_FAILED),
        ("guaranteed: <<0|2>|<1|0>> >= 1 fails on the proviso",
         lambda: ge(s, g_pass, s.score(1), GUARANTEED_SCORING).reason == PROVISO_FAILED),
        ("dicot misere: {0,*|*} >= 0", lambda: ge(s, p("<s(0),star|star>"), z, DICOT_MISERE).holds),
        ("dicot misere: {0|*} || 0", lambda: incomparable(s, up, z, DICOT_MISERE)),
        ("normal: up >= 0", lambda: ge_normal_classic(s, up, z) and ge(s, up, z, NORMAL).holds),
        ("brute force refutes {0|*} >= 0 in dicot misere",
         lambda: not ge_bruteforce(s, up, z, dm_pool(), DICOT_MISERE).confirmed),
        ("no H^L linked from G when G >= H", lambda: all(
            not any(linked(s, g, hl, DICOT_MISERE) for hl in s.left_options(h))
            for g in dm_pool() for h in dm_pool() if ge(s, g, h, DICOT_MISERE).holds)),
        ("int(n) is n Left moves", lambda: s.rank(int_game(s, 3)) == 3 and s.is_right_atomic(int_game(s, 3))),
        ("adjoint of 0 is star", lambda: adjoint(s, z) == p("star")),
        ("G + adjoint(G) is P", lambda: all(
            outcome_class(evaluate(s, s.sum(g, adjoint(s, g)), MISERE), MISERE) is OutcomeClass.P
            for g in dm_pool())),
        ("density witness for P from 0 is star", lambda: density_witness(s, z, OutcomeClass.P, MISERE) == p("star")),
        ("density witness for N from 0 is <*|*>", lambda: density_witness(s, z, OutcomeClass.N, MISERE)
         == p("<star|star>") and outcome_class(evaluate(s, p("<star|star>"), MISERE), MISERE) is OutcomeClass.N),
    ]


def run_all(store: GameStore | None = None) -> list[Check]:
    store = store or GameStore()
    out = []
    for name, fn in _checks(store):
        try:
            out.append(Check(name, bool(fn())))
        except Exception as exc:  # a crash is a failed check, not a failed run
            out.append(Check(name, False, f"{type(exc).__name__}: {exc}"))
    return out
