"""
Search Configuration System

Centralized configuration for one best-first search: which rules create
action nodes and at what priority, whether goals are clustered, and the
step budget.
"""
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from typing import Any, Dict, List, Union

from .logic.tactics import RULES

GOAL_TARGETING_MODES = ("every_goal", "combinatorial")

Score = Union[Fraction, float, int, str]


def to_score(value: Score) -> Fraction:
    """Exact rational score; floats go through their decimal text so 0.8 stays 4/5"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        return Fraction(repr(value))
    return Fraction(value)


def score_text(score: Fraction) -> str:
    """Exact text of a score: decimal when it terminates, otherwise n/d"""
    den, twos, fives = score.denominator, 0, 0
    while den % 2 == 0:
        den, twos = den // 2, twos + 1
    while den % 5 == 0:
        den, fives = den // 5, fives + 1
    if den != 1:
        return str(score)
    digits = max(twos, fives)
    if digits == 0:
        return str(score.numerator)
    scaled = score.numerator * 10 ** digits // score.denominator
    return f"{Decimal(f'{scaled}E-{digits}'):f}"


@dataclass(frozen=True)
class RuleSpec:
    """One row of the rule table: a registered rule, its score and display name"""

    rule: str
    score: Fraction
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "score", to_score(self.score))
        if not self.name:
            object.__setattr__(self, "name", self.rule)

    def to_dict(self) -> dict:
        return {"rule": self.rule, "priority": str(self.score), "name": self.name}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RuleSpec":
        return cls(rule=data["rule"], score=data["priority"], name=data.get("name", ""))


# The rule table of the worked disjunction example
DEFAULT_RULES: List[RuleSpec] = [
    RuleSpec("disjI_left", Fraction(4, 5), "∨L"),
    RuleSpec("disjI_right", Fraction(4, 5), "∨R"),
    RuleSpec("impI", Fraction(3, 5), "→I"),
    RuleSpec("conjI", Fraction(1, 2), "∧I"),
    RuleSpec("assm", Fraction(3, 10), "Assm"),
]


@dataclass
class SearchConfig:
    """
    Configuration for one search run.

    Scores are exact fractions in [0, 1]. With `prune_inapplicable` on,
    an action node is only created when its rule yields at least one
    successor for its goal.
    """

    rules: List[RuleSpec] = field(default_factory=lambda: list(DEFAULT_RULES))
    clustering: bool = True
    prune_inapplicable: bool = True
    max_steps: int = 1000
    # every_goal: one action node per (rule, goal index) pair
    goal_targeting: str = "every_goal"

    def to_dict(self) -> dict:
        """Convert config to dictionary for serialization"""
        return {
            "rules": [r.to_dict() for r in self.rules],
            "clustering": self.clustering,
            "prune_inapplicable": self.prune_inapplicable,
            "max_steps": self.max_steps,
            "goal_targeting": self.goal_targeting,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SearchConfig":
        """Create config from dictionary"""
        valid_fields = {f for f in cls.__dataclass_fields__}
        filtered_data = {k: v for k, v in data.items() if k in valid_fields}
        if "rules" in filtered_data:
            filtered_data["rules"] = [
                r if isinstance(r, RuleSpec) else RuleSpec.from_dict(r)
                for r in filtered_data["rules"]
            ]
        return cls(**filtered_data)

    def copy(self) -> "SearchConfig":
        """Create a copy of this configuration"""
        return SearchConfig.from_dict(self.to_dict())

    def validate(self) -> list:
        """Validate configuration and return list of issues"""
        issues = []

        for spec in self.rules:
            if spec.rule not in RULES:
                issues.append(f"unknown rule '{spec.rule}' ({spec.name})")
            if not 0 <= spec.score <= 1:
                issues.append(f"priority of {spec.name} must be between 0 and 1, got {spec.score}")

        if self.max_steps < 0:
            issues.append(f"max_steps must be non-negative, got {self.max_steps}")

        if self.goal_targeting not in GOAL_TARGETING_MODES:
            issues.append(f"goal_targeting must be one of {GOAL_TARGETING_MODES}, got {self.goal_targeting}")
        elif self.goal_targeting != "every_goal":
            issues.append(f"goal_targeting '{self.goal_targeting}' is not supported")

        return issues


class ConfigPresets:
    """Predefined configuration presets"""

    @staticmethod
    def default() -> SearchConfig:
        return SearchConfig()

    @staticmethod
    def unclustered() -> SearchConfig:
        """All goals of a goal state in one cluster"""
        return SearchConfig(clustering=False)

    @staticmethod
    def exhaustive() -> SearchConfig:
        """One action node per (rule, goal) pair whether or not the rule applies"""
        return SearchConfig(prune_inapplicable=False)
