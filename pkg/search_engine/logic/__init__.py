"""
Object logic: propositional sequents with metavariables
"""
from .clusters import Cluster, goal_clusters
from .formula import (
    And,
    Atom,
    Bot,
    Formula,
    GoalState,
    Imp,
    Meta,
    Or,
    Sequent,
    Substitution,
    Top,
    apply_substitution,
    atoms_of,
    evaluate,
    is_valid,
    metavars_of,
    render,
)
from .parser import GoalSyntaxError, parse_formula, parse_goal_state, parse_sequent
from .tactics import RULES, Tactic, get_tactic
from .unify import is_idempotent, unify
from .union_find import UnionFind

__all__ = [
    "And", "Atom", "Bot", "Formula", "GoalState", "Imp", "Meta", "Or", "Sequent",
    "Substitution", "Top", "apply_substitution", "atoms_of", "evaluate", "is_valid",
    "metavars_of", "render", "Cluster", "goal_clusters", "GoalSyntaxError",
    "parse_formula", "parse_goal_state", "parse_sequent", "RULES", "Tactic",
    "get_tactic", "is_idempotent", "unify", "UnionFind",
]
