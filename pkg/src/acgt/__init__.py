"""Adorned combinatorial games: outcomes, universes and constructive comparison."""
from .comparison import (Verdict, equivalent, ge, ge_normal_classic, incomparable, le, linked, relation,
                         xi_project, zeta_embed)
from .errors import (ArgumentError, GameError, ParseError, ResourceError, StructuralError,
                     UnsupportedUniverseError)
from .game_core import Atom, GameStore, int_game, star
from .notation import parse, to_text
from .outcomes import (OutcomeClass, OutcomePair, evaluate, outcome, outcome_class, pass_allowed_left,
                       pass_allowed_right)
from .universe import (BUILTIN, DICOT_MISERE, DICOT_SCORING, FREE_MISERE, FREE_SCORING, GUARANTEED_SCORING,
                       MISERE, NORMAL, LOSS, WIN, UniverseSpec, extend, get_universe, member)

__version__ = "0.1.0"

__all__ = [
    "Verdict",
    "equivalent",
    "ge",
    "ge_normal_classic",
    "incomparable",
    "le",
    "linked",
    "relation",
    "xi_project",
    "zeta_embed",
    "ArgumentError",
    "GameError",
    "ParseError",
    "ResourceError",
    "StructuralError",
    "UnsupportedUniverseError",
    "Atom",
    "GameStore",
    "int_game",
    "star",
    "parse",
    "to_text",
    "OutcomeClass",
    "OutcomePair",
    "evaluate",
    "outcome",
    "outcome_class",
    "pass_allowed_left",
    "pass_allowed_right",
    "BUILTIN",
    "DICOT_MISERE",
    "DICOT_SCORING",
    "FREE_MISERE",
    "FREE_SCORING",
    "GUARANTEED_SCORING",
    "MISERE",
    "NORMAL",
    "LOSS",
    "WIN",
    "UniverseSpec",
    "extend",
    "get_universe",
    "member",
]
