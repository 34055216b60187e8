"""
Tree Export

Turns a search tree into a TreeDump and renders dumps as JSON or
Graphviz DOT. Goal-state nodes are drawn solid, clusters dotted, actions
dashed; proved nodes are bold.
"""
from typing import Iterable, List, Optional

from pyrsistent import PVector

from models.tree_dump import NodeDump, TraceEntry, TreeDump
from search_engine.config import score_text, to_score
from search_engine.engine import SearchResult, TraceStep
from search_engine.prooftree import (
    ACTION,
    APPLICATION,
    CLUSTER,
    GOAL_STATE,
    LEVEL_NAMES,
    Solved,
    describe,
    flatten,
)

_STYLES = {
    GOAL_STATE: "solid",
    CLUSTER: "dotted",
    ACTION: "dashed",
    APPLICATION: "solid",
}
_SHAPES = {
    GOAL_STATE: "box",
    CLUSTER: "box",
    ACTION: "ellipse",
    APPLICATION: "plaintext",
}


def build_dump(root: PVector, trace: Iterable[TraceStep] = (), status: Optional[str] = None,
               goal: str = "") -> TreeDump:
    nodes: List[NodeDump] = []
    for flat in flatten(root):
        content = flat.content
        extra = {}
        if flat.level == ACTION:
            extra = {"priority": score_text(content.priority.score), "disabled": content.priority.disabled}
        elif flat.level == APPLICATION:
            extra = {"promising": content.promising}
        nodes.append(NodeDump(
            id=content.id,
            level=flat.level,
            kind=LEVEL_NAMES[flat.level],
            summary=describe(flat.level, content),
            solved=content.solved.value,
            position=[list(level) for level in flat.position],
            children=list(flat.child_ids),
            **extra,
        ))
    entries = [
        TraceEntry(
            step=t.step,
            node_id=t.node_id,
            priority=score_text(t.priority.score),
            rule=t.rule,
            position=t.position.to_json(),
            revision=t.revision,
        )
        for t in trace
    ]
    return TreeDump(goal=goal, status=status, nodes=nodes, trace=entries)


def dump_result(result: SearchResult, goal: str = "") -> TreeDump:
    return build_dump(result.root, result.trace, result.status.value, goal)


def export_json(dump: TreeDump) -> str:
    return dump.model_dump_json(indent=2)


def read_json(text: str) -> TreeDump:
    return TreeDump.model_validate_json(text)


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n") + '"'


def export_dot(dump: TreeDump) -> str:
    lines = ["digraph search {", "  rankdir=TB;", "  node [fontname=\"Helvetica\"];"]
    for node in dump.nodes:
        label = node.summary
        if node.priority is not None:
            label += f"\n{float(to_score(node.priority)):.0%}" if not node.disabled else "\ndisabled"
        style = _STYLES[node.level]
        if node.solved == Solved.PROVED.value:
            style += ",bold"
        attrs = [f"label={_quote(label)}", f"shape={_SHAPES[node.level]}", f"style=\"{style}\""]
        if node.solved == Solved.PROVED.value:
            attrs.append("color=blue")
        lines.append(f"  n{node.id} [{', '.join(attrs)}];")
    # dumps list applications newest first; draw them oldest first
    for node in dump.nodes:
        for child in reversed(node.children):
            lines.append(f"  n{node.id} -> n{child};")
    lines.append("}")
    return "\n".join(lines) + "\n"
