"""
Tree Dump Models

Schema of the JSON search-tree dump. Unknown fields are ignored on read so
newer dumps stay readable.
"""
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field

from config import DUMP_SCHEMA_VERSION


class NodeDump(BaseModel):
    model_config = ConfigDict(extra="ignore")

    id: int
    level: int = Field(ge=1, le=4)
    kind: str
    summary: str
    priority: Optional[str] = None
    disabled: Optional[bool] = None
    solved: Optional[str] = None
    promising: Optional[bool] = None
    # innermost level first
    position: List[List[int]]
    children: List[int] = Field(default_factory=list)


class TraceEntry(BaseModel):
    model_config = ConfigDict(extra="ignore")

    step: int
    node_id: int
    priority: str
    rule: str
    position: List[List[int]] = Field(default_factory=list)
    revision: int = 0


class TreeDump(BaseModel):
    model_config = ConfigDict(extra="ignore")

    schema_version: int = DUMP_SCHEMA_VERSION
    goal: str = ""
    status: Optional[str] = None
    nodes: List[NodeDump] = Field(default_factory=list)
    trace: List[TraceEntry] = Field(default_factory=list)

    def node(self, node_id: int) -> Optional[NodeDump]:
        for n in self.nodes:
            if n.id == node_id:
                return n
        return None
