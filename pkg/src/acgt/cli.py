"""Command-line entry point: ``acgt outcome|compare|oracle|selftest``.

Exit status is 0 on success, 1 when a check fails and 2 for usage, parse or
membership errors.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import oracle
from .comparison import ge, relation
from .errors import GameError
from .game_core import GameStore
from .notation import parse, to_text
from .outcomes import outcome, outcome_class
from .regressions import run_all
from .universe import BUILTIN, ValueTag, get_universe

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

CONFIG_KEYS = {"universe": str, "max_rank": int, "seed": int, "adorns": str,
               "level_sample": int, "witnesses": int, "report": str}
DEFAULTS = {"universe": "dicot-misere", "max_rank": 2, "seed": oracle.DEFAULT_SEED, "adorns": "-1,0,1",
            "level_sample": oracle.DEFAULT_LEVEL_SAMPLE, "witnesses": oracle.DEFAULT_WITNESS_SAMPLE,
            "report": None}


class UsageError(Exception):
    pass


def load_config(path) -> dict:
    """Read ``key = value`` lines; ``#`` starts a comment."""
    out = {}
    for n, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip().replace("-", "_")
        if not sep or key not in CONFIG_KEYS:
            raise UsageError(f"{path}:{n}: expected one of {sorted(CONFIG_KEYS)} as key=value")
        try:
            out[key] = CONFIG_KEYS[key](value.strip())
        except ValueError as exc:
            raise UsageError(f"{path}:{n}: {exc}") from None
    return out


def _settings(args) -> dict:
    merged = dict(DEFAULTS)
    if args.config:
        merged.update(load_config(args.config))
    for key in CONFIG_KEYS:
        value = getattr(args, key, None)
        if value is not None:
            merged[key] = value
    return merged


def _parse_adorns(text: str) -> tuple:
    from .game_core import as_adorn

    try:
        return tuple(as_adorn(a.strip()) for a in text.split(",") if a.strip())
    except (ValueError, ZeroDivisionError, GameError) as exc:
        raise UsageError(f"bad --adorns {text!r}: {exc}") from None


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if hasattr(obj, "to_json"):
        return obj.to_json()
    if isinstance(obj, (str, int, float, bool)) or obj is None:
        return obj
    return str(obj)


def _emit(args, payload: dict, lines: list[str]):
    if args.json:
        print(json.dumps(_jsonable(payload), sort_keys=True))
    else:
        for line in lines:
            print(line)


# -- commands --------------------------------------------------------------------


def cmd_outcome(args, cfg) -> int:
    store = GameStore()
    u = get_universe(cfg["universe"])
    t0 = time.perf_counter()
    g = parse(store, args.game)
    pair = outcome(store, g, u)
    cls = outcome_class(pair, u).value if u.value_tag is ValueTag.WIN_LOSS else None
    elapsed = time.perf_counter() - t0
    text = to_text(store, g, args.unicode)
    lines = [f"{text} in {u.name}: o_L={pair.left} o_R={pair.right}" + (f" class {cls}" if cls else "")]
    _emit(args, {"game": text, "universe": u.name, "outcome": pair, "class": cls,
                 "timings": {"seconds": elapsed}}, lines)
    return EXIT_OK


def _verdict_json(store, v, unicode):
    d = dict(v.detail)
    if "move" in d:
        d["move"] = to_text(store, d["move"], unicode)
    return None if v.holds else {"reason": v.reason, **d}


def _describe(v, store, unicode) -> str:
    d = v.detail
    if v.reason == "proviso":
        if "message" in d:
            return f"{d['test']} test ({d['which']}): {d['message']}"
        return f"{d['test']} test ({d['which']}): {d['lhs']} < {d['rhs']}"
    who = "Right move" if d["side"] == "right" else "Left move"
    return f"{who} to {to_text(store, d['move'], unicode)} has no good reply"


def cmd_compare(args, cfg) -> int:
    store = GameStore()
    u = get_universe(cfg["universe"])
    t0 = time.perf_counter()
    g, h = parse(store, args.lhs), parse(store, args.rhs)
    fwd, back = ge(store, g, h, u), ge(store, h, g, u)
    rel = relation(store, g, h, u)
    elapsed = time.perf_counter() - t0
    lt, rt = to_text(store, g, args.unicode), to_text(store, h, args.unicode)
    lines = [f"{lt} {rel} {rt} in {u.name}"]
    for label, v in ((">=", fwd), ("<=", back)):
        if not v.holds:
            lines.append(f"  not {label}: {_describe(v, store, args.unicode)}")
    payload = {
        "lhs": lt, "rhs": rt, "universe": u.name, "relation": rel,
        "witness": {"ge": _verdict_json(store, fwd, args.unicode), "le": _verdict_json(store, back, args.unicode)},
        "proviso": {"ge": fwd.reason != "proviso", "le": back.reason != "proviso"},
        "timings": {"seconds": elapsed},
    }
    _emit(args, payload, lines)
    return EXIT_OK


BAD_STATUSES = {"refuted", "contradiction"}


def cmd_oracle(args, cfg) -> int:
    store = GameStore()
    u = get_universe(cfg["universe"])
    if u.proviso_kind.name == "ORACLE_ONLY":
        raise UsageError(f"{u.name} has no constructive comparison to validate")
    adorns = _parse_adorns(cfg["adorns"])
    t0 = time.perf_counter()
    pool = oracle.standard_pool(store, u, cfg["max_rank"], adorns, cfg["seed"], cfg["level_sample"])
    wit = oracle.witness_pool(store, pool, u, cfg["witnesses"], seed=cfg["seed"] + 1)
    records = list(oracle.soundness_sweep(store, pool, wit, u))
    records += oracle.linked_sweep(store, pool, wit, u)
    records += oracle.normal_projection_sweep(store, pool, u)
    if cfg["report"]:
        oracle.write_report(records, cfg["report"])
    summary = oracle.summarize(records)
    failed = sum(1 for r in records if r["status"] in BAD_STATUSES)
    non_ge = sum(1 for r in records if r["check"] == "soundness" and not r["constructive"])
    exhausted = summary.get("soundness:pool-exhausted", 0)
    rate = exhausted / non_ge if non_ge else 0.0
    elapsed = time.perf_counter() - t0
    lines = [f"{u.name}: pool {len(pool)} games {pool.levels}, witnesses {len(wit)}"]
    lines += [f"  {k}: {v}" for k, v in summary.items()]
    lines.append(f"  pool-exhaustion rate: {rate:.3f}")
    lines.append("FAIL" if failed else "ok")
    _emit(args, {"universe": u.name, "pool": len(pool), "levels": pool.levels, "witnesses": len(wit),
                 "summary": summary, "exhaustion_rate": rate, "failures": failed,
                 "report": cfg["report"], "timings": {"seconds": elapsed}}, lines)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_selftest(args, cfg) -> int:
    t0 = time.perf_counter()
    checks = run_all()
    lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.name}" + (f"  ({c.detail})" if c.detail else "") for c in checks]
    bad = sum(not c.passed for c in checks)
    lines.append(f"{len(checks) - bad}/{len(checks)} passed")
    _emit(args, {"checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks],
                 "failures": bad, "timings": {"seconds": time.perf_counter() - t0}}, lines)
    return EXIT_FAIL if bad else EXIT_OK


# -- argument parsing --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--universe", choices=sorted(BUILTIN), default=None)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--unicode", action="store_true", help="print games with angle brackets and empty-set atoms")
    common.add_argument("--config", help="key=value file of defaults; flags win")

    ap = argparse.ArgumentParser(prog="acgt", description="Compare and evaluate adorned combinatorial games.")
    sub = ap.add_subparsers(dest="command", required=True)
    p = sub.add_parser("outcome", parents=[common], help="outcome pair of a game")
    p.add_argument("game")
    p = sub.add_parser("compare", parents=[common], help="order relation between two games")
    p.add_argument("lhs")
    p.add_argument("rhs")
    p = sub.add_parser("oracle", parents=[common], help="validate the constructive test on a pool")
    p.add_argument("--max-rank", dest="max_rank", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--adorns", help="comma-separated adorn pool, e.g. -1,0,1/2")
    p.add_argument("--level-sample", dest="level_sample", type=int, help="games per sampled level")
    p.add_argument("--witnesses", type=int, help="size of the sampled witness batch")
    p.add_argument("--report", help="write JSON-lines records here")
    sub.add_parser("selftest", parents=[common], help="run the worked-example regressions")
    return ap


COMMANDS = {"outcome": cmd_outcome, "compare": cmd_compare, "oracle": cmd_oracle, "selftest": cmd_selftest}


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = _settings(args)
        return COMMANDS[args.command](args, cfg)
    except (UsageError, GameError, OSError) as exc:
        print(f"acgt: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
