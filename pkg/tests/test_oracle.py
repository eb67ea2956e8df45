import itertools
import json

import pytest

from acgt.errors import ArgumentError, UnsupportedUniverseError
from acgt.game_core import GameStore, star
from acgt.notation import parse, to_text
from acgt.oracle import (adjoint, build_pool, density_witness, find_linking_T, ge_bruteforce, impartial_pool,
                         is_impartial, linked_sweep, quasi_identity_probe, scoring_density_witness, soundness_sweep,
                         standard_pool, summarize, write_report)
from acgt.outcomes import OutcomeClass, OutcomePair, class_pair, evaluate, outcome_adorns, outcome_class
from acgt.universe import (DICOT_MISERE, DICOT_SCORING, FREE_MISERE, GUARANTEED_SCORING, MISERE, member,
                           score_value)


def scores(x, y):
    return OutcomePair(score_value(x), score_value(y))


def test_pool_sizes(store):
    assert build_pool(store, DICOT_MISERE, 2, (0,)).levels == {0: 1, 1: 1, 2: 8}
    assert len(build_pool(store, DICOT_SCORING, 1, (-1, 0, 1))) == 52
    assert len(build_pool(store, FREE_MISERE, 2, (0,))) == 256


def test_sampling_is_deterministic():
    def texts(seed):
        s = GameStore()
        return [to_text(s, g) for g in build_pool(s, GUARANTEED_SCORING, 2, samples={1: 30, 2: 30}, seed=seed)]

    assert texts(7) == texts(7)
    assert texts(7) != texts(8)


def test_sampled_levels_have_exact_rank(shared):
    s = shared["store"]
    for name in ("guaranteed", "dicot-scoring", "dicot-misere-witness"):
        pool = shared[name]
        assert len(set(pool.games)) == len(pool.games)
        for n, count in pool.levels.items():
            assert sum(1 for g in pool if s.rank(g) == n) == count


def test_standard_pool_switches_to_sampling(store):
    pool = standard_pool(store, DICOT_MISERE, 3, (0,), level_sample=20)
    assert pool.levels == {0: 1, 1: 1, 2: 8, 3: 20} and pool.sampled
    assert not standard_pool(store, FREE_MISERE, 2, (0,)).sampled


def test_bruteforce_examples(shared):
    s = shared["store"]
    pool = shared["dicot-misere"]
    assert ge_bruteforce(s, s.zero, s.zero, pool, DICOT_MISERE).confirmed
    res = ge_bruteforce(s, parse(s, "<s(0)|star>"), s.zero, pool, DICOT_MISERE)
    assert not res.confirmed and res.witness in pool and res.side in ("left", "right")


def test_linking_search(shared):
    s = shared["store"]
    pool = shared["dicot-misere"]
    assert find_linking_T(s, s.zero, s.zero, pool, DICOT_MISERE) is not None
    st = star(s)
    assert evaluate(s, st, MISERE).left < evaluate(s, st, MISERE).right
    assert find_linking_T(s, st, s.zero, pool, DICOT_MISERE) is None


def test_adjoint(store):
    z = store.zero
    assert adjoint(store, z) == star(store)
    assert adjoint(store, star(store)) == parse(store, "<star|star>")
    with pytest.raises(ArgumentError):
        adjoint(store, store.score(1))


@pytest.mark.parametrize("name", ["dicot-misere", "zero"])
def test_adjoint_and_density(shared, name):
    s = shared["store"]
    for g in shared[name]:
        a = adjoint(s, g)
        assert not s.is_left_atomic(a) and not s.is_right_atomic(a)
        assert evaluate(s, s.sum(g, a), MISERE) == class_pair(OutcomeClass.P)
        for c in OutcomeClass:
            h = density_witness(s, g, c, MISERE)
            assert outcome_class(evaluate(s, s.sum(g, h), MISERE), MISERE) is c


def test_density_examples(store):
    z = store.zero
    assert density_witness(store, z, OutcomeClass.P, MISERE) == star(store)
    n = density_witness(store, z, OutcomeClass.N, MISERE)
    assert n == parse(store, "<star|star>")
    with pytest.raises(UnsupportedUniverseError):
        density_witness(store, z, OutcomeClass.N, DICOT_SCORING)


def test_scoring_witness_examples(store):
    w = scoring_density_witness(store, store.zero, 2, -1, DICOT_SCORING)
    assert evaluate(store, store.sum(store.zero, w), DICOT_SCORING) == scores(2, -1)
    g = parse(store, "<s(1)|<s(1)|s(0)>>")
    l, r = outcome_adorns(store, g)
    w = scoring_density_witness(store, g, l, r)
    assert outcome_adorns(store, store.sum(g, w)) == (l, r)
    with pytest.raises(UnsupportedUniverseError):
        scoring_density_witness(store, store.zero, 0, 0, MISERE)


def test_scoring_witness_realizes_every_pair(shared):
    s = shared["store"]
    for g in shared["dicot-scoring"]:
        for x, y in itertools.product(range(-2, 3), repeat=2):
            w = scoring_density_witness(s, g, x, y, DICOT_SCORING)
            assert member(s, w, DICOT_SCORING) and member(s, w, GUARANTEED_SCORING)
            assert evaluate(s, s.sum(g, w), DICOT_SCORING) == scores(x, y)


def test_quasi_identity(store):
    two = parse(store, "<s(0),star|s(0),star>")
    x = store.sum(two, two)
    pool = impartial_pool(store, 2)
    assert len(pool) == 4 and all(is_impartial(store, g) for g in pool)
    assert quasi_identity_probe(store, x, pool, MISERE).ok
    assert quasi_identity_probe(store, x, build_pool(store, DICOT_MISERE, 2, (0,)), DICOT_MISERE).ok
    assert quasi_identity_probe(store, store.zero, pool, MISERE).ok
    bad = quasi_identity_probe(store, star(store), pool, MISERE)
    assert not bad.ok and store.zero in bad.violations


def test_sweeps_and_report(shared, tmp_path):
    s = shared["store"]
    pool, wit = shared["dicot-misere"], shared["dicot-misere-witness"]
    records = list(soundness_sweep(s, pool, wit, DICOT_MISERE)) + list(linked_sweep(s, pool, wit, DICOT_MISERE))
    summary = summarize(records)
    assert summary["soundness:confirmed"] + summary["soundness:witnessed"] == 100
    assert "soundness:refuted" not in summary and "linked:contradiction" not in summary
    path = tmp_path / "r.jsonl"
    write_report(records, path)
    lines = path.read_text().splitlines()
    assert len(lines) == 200
    first = json.loads(lines[0])
    assert {"check", "lhs", "rhs", "lhs_text", "rhs_text", "status", "seconds"} <= set(first)


def test_witness_pool_extends(shared):
    base, wit = shared["dicot-misere"], shared["dicot-misere-witness"]
    assert wit.games[: len(base)] == base.games
    assert wit.levels[3] == 500 and wit.max_rank == 3
