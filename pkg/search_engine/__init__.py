"""
White-box tree search from effects, lenses and alternating zippers,
instantiated as a best-first propositional sequent prover.
"""
from .config import ConfigPresets, RuleSpec, SearchConfig
from .engine import SearchResult, Status, TraceStep, best_first, prove
from .position import Position
from .prooftree import Priority, SearchContext, Solved, init_tree, mark_solved

__all__ = [
    "ConfigPresets",
    "RuleSpec",
    "SearchConfig",
    "SearchResult",
    "Status",
    "TraceStep",
    "best_first",
    "prove",
    "Position",
    "Priority",
    "SearchContext",
    "Solved",
    "init_tree",
    "mark_solved",
]
