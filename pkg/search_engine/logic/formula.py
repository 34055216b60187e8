"""
Formulas and Goal States

Propositional formulas with metavariables, sequents, and goal states that
carry one substitution shared by all their goals.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Dict, FrozenSet, Iterable, Mapping, Sequence, Tuple

from pyrsistent import PMap, pmap

# metavariable name -> Formula
Substitution = PMap

_PRECEDENCE = {"Imp": 1, "Or": 2, "And": 3}


class Formula:
    """Base of the formula variants"""

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True, eq=True)
class Atom(Formula):
    name: str


@dataclass(frozen=True, eq=True)
class Top(Formula):
    pass


@dataclass(frozen=True, eq=True)
class Bot(Formula):
    pass


@dataclass(frozen=True, eq=True)
class Meta(Formula):
    name: str


@dataclass(frozen=True, eq=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, eq=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, eq=True)
class Imp(Formula):
    left: Formula
    right: Formula


BINARY = (And, Or, Imp)
_SYMBOLS = {And: "&", Or: "|", Imp: "->"}


def render(f: Formula, outer: int = 0) -> str:
    """Goal-syntax text for f; parenthesised only where precedence needs it"""
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Meta):
        return f"?{f.name}"
    if isinstance(f, Top):
        return "true"
    if isinstance(f, Bot):
        return "false"
    prec = _PRECEDENCE[type(f).__name__]
    if isinstance(f, Imp):
        # right associative
        text = f"{render(f.left, prec + 1)} -> {render(f.right, prec)}"
    else:
        text = f"{render(f.left, prec)} {_SYMBOLS[type(f)]} {render(f.right, prec + 1)}"
    return f"({text})" if prec < outer else text


def metavars_of(f: Formula) -> FrozenSet[str]:
    found = set()
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, Meta):
            found.add(g.name)
        elif isinstance(g, BINARY):
            stack.append(g.left)
            stack.append(g.right)
    return frozenset(found)


def atoms_of(f: Formula) -> FrozenSet[str]:
    found = set()
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, Atom):
            found.add(g.name)
        elif isinstance(g, BINARY):
            stack.append(g.left)
            stack.append(g.right)
    return frozenset(found)


def apply_substitution(f: Formula, subst: Mapping[str, Formula]) -> Formula:
    if not subst:
        return f
    if isinstance(f, Meta):
        bound = subst.get(f.name)
        return f if bound is None else apply_substitution(bound, subst)
    if isinstance(f, BINARY):
        left = apply_substitution(f.left, subst)
        right = apply_substitution(f.right, subst)
        if left is f.left and right is f.right:
            return f
        return type(f)(left, right)
    return f


@dataclass(frozen=True)
class Sequent:
    hypotheses: Tuple[Formula, ...]
    conclusion: Formula

    def __post_init__(self):
        object.__setattr__(self, "hypotheses", tuple(self.hypotheses))

    def metavars(self) -> FrozenSet[str]:
        found = metavars_of(self.conclusion)
        for h in self.hypotheses:
            found |= metavars_of(h)
        return found

    def substitute(self, subst: Mapping[str, Formula]) -> "Sequent":
        return Sequent(
            tuple(apply_substitution(h, subst) for h in self.hypotheses),
            apply_substitution(self.conclusion, subst),
        )

    def __str__(self) -> str:
        hyps = ", ".join(render(h) for h in self.hypotheses)
        return f"{hyps} |- {render(self.conclusion)}" if hyps else f"|- {render(self.conclusion)}"


@dataclass(frozen=True)
class GoalState:
    """An ordered list of goals sharing one metavariable substitution"""

    goals: Tuple[Sequent, ...] = ()
    substitution: Substitution = field(default_factory=pmap)

    def __post_init__(self):
        object.__setattr__(self, "goals", tuple(self.goals))
        if not isinstance(self.substitution, PMap):
            object.__setattr__(self, "substitution", pmap(self.substitution))

    def metavars(self) -> FrozenSet[str]:
        found: FrozenSet[str] = frozenset()
        for goal in self.goals:
            found |= goal.metavars()
        return found

    def project(self, indices: Iterable[int]) -> "GoalState":
        """The goal state restricted to the given goal indices"""
        return GoalState(tuple(self.goals[i] for i in indices), self.substitution)

    def replace_goal(self, index: int, new_goals: Sequence[Sequent]) -> "GoalState":
        goals = self.goals[:index] + tuple(new_goals) + self.goals[index + 1:]
        return GoalState(goals, self.substitution)

    def __str__(self) -> str:
        if not self.goals:
            return "no goals"
        return "; ".join(str(g) for g in self.goals)


# Truth tables

def evaluate(f: Formula, valuation: Mapping[str, bool]) -> bool:
    if isinstance(f, Atom):
        return valuation[f.name]
    if isinstance(f, Top):
        return True
    if isinstance(f, Bot):
        return False
    if isinstance(f, And):
        return evaluate(f.left, valuation) and evaluate(f.right, valuation)
    if isinstance(f, Or):
        return evaluate(f.left, valuation) or evaluate(f.right, valuation)
    if isinstance(f, Imp):
        return (not evaluate(f.left, valuation)) or evaluate(f.right, valuation)
    raise ValueError(f"cannot evaluate a formula with metavariables: {render(f)}")


def is_valid(sequent: Sequent) -> bool:
    """Brute-force truth-table check of a ground sequent"""
    names = set(atoms_of(sequent.conclusion))
    for h in sequent.hypotheses:
        names |= atoms_of(h)
    names = sorted(names)
    for values in cartesian((False, True), repeat=len(names)):
        valuation: Dict[str, bool] = dict(zip(names, values))
        if all(evaluate(h, valuation) for h in sequent.hypotheses) and not evaluate(sequent.conclusion, valuation):
            return False
    return True
