"""
API Request Models

Pydantic models for rule tables and search requests.
"""
from decimal import Decimal
from fractions import Fraction
from typing import List, Literal, Optional

from pydantic import BaseModel, Field, field_validator

from models.tree_dump import TreeDump
from search_engine.config import RuleSpec

RuleName = Literal["conjI", "disjI_left", "disjI_right", "impI", "assm", "trueI"]


class RuleTableEntry(BaseModel):
    rule: RuleName = Field(description="Registered rule the action nodes run")
    priority: Decimal = Field(ge=0, le=1, description="Success estimate in [0, 1]")
    name: str = Field("", description="Display name, defaults to the rule name")

    @field_validator("priority", mode="before")
    @classmethod
    def _exact_decimal(cls, value):
        # YAML reads 0.8 as a float; keep its decimal text
        return repr(value) if isinstance(value, float) else value

    def to_spec(self) -> RuleSpec:
        return RuleSpec(self.rule, Fraction(str(self.priority)), self.name)


class ProveRequest(BaseModel):
    goal: str = Field(description="Goal text, `;` separates goals, e.g. 'A |- (B -> C) | (A & A)'")
    rules: Optional[List[RuleTableEntry]] = Field(None, description="Rule table, None = server default")
    max_steps: Optional[int] = Field(None, ge=0, le=100000, description="Step budget, None = server default")
    clusters: bool = Field(True, description="Search goal clusters independently")
    prune_inapplicable: bool = Field(True, description="Only create action nodes for applicable rules")


class ClusterRequest(BaseModel):
    goal: str = Field(description="Goal text, `;` separates goals")


class ProveResponse(BaseModel):
    status: str
    steps: int
    failure: Optional[str] = None
    dump: TreeDump
