"""
Input Helpers

Parsing of goal text and rule tables at the CLI and HTTP boundaries.
Errors carry a location so users can find the offending spot.
"""
import logging
from typing import Any, List

import yaml
from pydantic import TypeAdapter, ValidationError

from models.request_models import RuleTableEntry
from search_engine.config import RuleSpec
from search_engine.logic import GoalState, Sequent, parse_goal_state, parse_sequent

logger = logging.getLogger(__name__)

_RULE_TABLE = TypeAdapter(List[RuleTableEntry])


class RuleTableError(ValueError):
    """A rule table that is not valid YAML/JSON or does not match the schema"""

    def __init__(self, message: str, location: str = ""):
        super().__init__(f"{location}: {message}" if location else message)
        self.message = message
        self.location = location


def parse_goal(text: str) -> Sequent:
    return parse_sequent(text)


def parse_goals(texts: List[str]) -> GoalState:
    """Goals of one goal state from any number of `;`-separated goal texts"""
    goals = []
    for text in texts:
        goals.extend(parse_goal_state(text).goals)
    return GoalState(tuple(goals))


def _location(loc) -> str:
    return "".join(f"[{part}]" if isinstance(part, int) else f".{part}" for part in loc).lstrip(".")


def validate_rules(document: Any) -> List[RuleSpec]:
    """Rule specs from an already decoded rule table (a list of entries)"""
    try:
        entries = _RULE_TABLE.validate_python(document)
    except ValidationError as e:
        first = e.errors()[0]
        raise RuleTableError(first["msg"], _location(first["loc"]) or "rules") from None
    return [entry.to_spec() for entry in entries]


def parse_rules(text: str) -> List[RuleSpec]:
    """Parse a rule table from YAML or JSON text"""
    try:
        document = yaml.safe_load(text)
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        location = f"{mark.line + 1}:{mark.column + 1}" if mark else ""
        problem = getattr(e, "problem", None) or str(e)
        raise RuleTableError(problem, location) from None
    if not isinstance(document, list):
        raise RuleTableError("expected a list of rule entries", "rules")
    return validate_rules(document)


def load_rules(path: str) -> List[RuleSpec]:
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise RuleTableError(f"cannot read rule table: {e.strerror}", path) from None
    rules = parse_rules(text)
    logger.debug(f"Rules: loaded {len(rules)} entries from {path}")
    return rules
