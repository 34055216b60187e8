"""
Rule Tactics

Each tactic maps a goal state and a goal index to the list of successor
goal states. An empty list means the rule does not apply.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, List

from .formula import And, GoalState, Imp, Or, Sequent, Top
from .unify import unify

TacticFn = Callable[[GoalState, int], List[GoalState]]


@dataclass(frozen=True)
class Tactic:
    name: str
    apply: TacticFn
    # successors of this rule are flagged as promising on their application nodes
    promising: bool = False

    def __call__(self, gs: GoalState, index: int) -> List[GoalState]:
        if not 0 <= index < len(gs.goals):
            return []
        return self.apply(gs, index)


def conj_intro(gs: GoalState, index: int) -> List[GoalState]:
    goal = gs.goals[index]
    if not isinstance(goal.conclusion, And):
        return []
    hyps = goal.hypotheses
    return [gs.replace_goal(index, [
        Sequent(hyps, goal.conclusion.left),
        Sequent(hyps, goal.conclusion.right),
    ])]


def disj_intro_left(gs: GoalState, index: int) -> List[GoalState]:
    goal = gs.goals[index]
    if not isinstance(goal.conclusion, Or):
        return []
    return [gs.replace_goal(index, [Sequent(goal.hypotheses, goal.conclusion.left)])]


def disj_intro_right(gs: GoalState, index: int) -> List[GoalState]:
    goal = gs.goals[index]
    if not isinstance(goal.conclusion, Or):
        return []
    return [gs.replace_goal(index, [Sequent(goal.hypotheses, goal.conclusion.right)])]


def imp_intro(gs: GoalState, index: int) -> List[GoalState]:
    goal = gs.goals[index]
    if not isinstance(goal.conclusion, Imp):
        return []
    hyps = goal.hypotheses + (goal.conclusion.left,)
    return [gs.replace_goal(index, [Sequent(hyps, goal.conclusion.right)])]


def true_intro(gs: GoalState, index: int) -> List[GoalState]:
    if not isinstance(gs.goals[index].conclusion, Top):
        return []
    return [gs.replace_goal(index, [])]


def assumption(gs: GoalState, index: int) -> List[GoalState]:
    """Close the goal with each hypothesis its conclusion unifies with.

    The unifier is applied to every remaining goal so metavariable
    instantiations stay consistent across the goal state.
    """
    goal = gs.goals[index]
    successors = []
    for hyp in goal.hypotheses:
        subst = unify(hyp, goal.conclusion, gs.substitution)
        if subst is None:
            continue
        rest = gs.goals[:index] + gs.goals[index + 1:]
        successors.append(GoalState(tuple(g.substitute(subst) for g in rest), subst))
    return successors


RULES: Dict[str, Tactic] = {
    "conjI": Tactic("conjI", conj_intro),
    "disjI_left": Tactic("disjI_left", disj_intro_left),
    "disjI_right": Tactic("disjI_right", disj_intro_right),
    "impI": Tactic("impI", imp_intro),
    "assm": Tactic("assm", assumption, promising=True),
    "trueI": Tactic("trueI", true_intro),
}


def get_tactic(name: str) -> Tactic:
    try:
        return RULES[name]
    except KeyError:
        raise ValueError(f"unknown rule '{name}', expected one of {', '.join(RULES)}") from None
