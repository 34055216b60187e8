"""
Proof Tree

The four-level search tree of the prover:

    1 goal state -> 2 goal cluster -> 3 action -> 4 action application -> 1 ...

Node data is only read and written through the lenses defined here.
Actions are moves on level-3 zippers stored in the action nodes
themselves; selecting a node runs its action, which attaches children and
replaces itself with the action for the remaining successors.

The search state is a SearchContext: the active configuration, the node
id counter and the tree revision.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from functools import total_ordering
from typing import Any, List, Optional, Sequence, Tuple

from pyrsistent import PVector, pvector

from .alt_zipper import (
    EnrichedZipper,
    Node,
    force,
    leaf,
    level_succ,
    make_alternating,
)
from .config import RuleSpec, SearchConfig, score_text
from .effects import (
    FailState,
    Kleisli,
    arr,
    get_state,
    modify_state,
    pipe,
    pure,
    set_state,
    traverse,
)
from .lens import Lens, field_lens, over, setter, view
from .logic.clusters import goal_clusters
from .logic.formula import GoalState
from .logic.tactics import RULES, Tactic
from .zipper import LIST_ZIPPER

logger = logging.getLogger(__name__)

LEVELS = 4
GOAL_STATE, CLUSTER, ACTION, APPLICATION = 1, 2, 3, 4
LEVEL_NAMES = {
    GOAL_STATE: "goal_state",
    CLUSTER: "cluster",
    ACTION: "action",
    APPLICATION: "application",
}

# Every level holds a list of Nodes
SEARCH_ZIPPER = make_alternating(LEVELS, [LIST_ZIPPER] * LEVELS)

Action = Kleisli  # level-3 zipper -> FailState[level-3 zipper]


class Solved(str, Enum):
    PROVED = "proved"
    OPEN = "open"
    FAILED = "failed"


@total_ordering
@dataclass(frozen=True)
class Priority:
    """A score in [0, 1], or disabled. Disabled sorts below every score.

    Disabling keeps the score so dumps still show what the node was worth.
    """

    score: Fraction
    disabled: bool = False

    @property
    def key(self) -> Tuple[bool, Fraction]:
        return (not self.disabled, self.score)

    def __lt__(self, other: "Priority") -> bool:
        return self.key < other.key

    def disable(self) -> "Priority":
        return replace(self, disabled=True)

    def __str__(self) -> str:
        text = score_text(self.score)
        return f"disabled ({text})" if self.disabled else text


@dataclass(frozen=True)
class SearchContext:
    config: SearchConfig
    next_node_id: int = 0
    revision: int = 0


# Contents of the four levels. Every record ends with an extension slot.

@dataclass(frozen=True)
class GoalStateContent:
    id: int
    state: GoalState
    solved: Solved = Solved.OPEN
    more: Optional[Any] = None


@dataclass(frozen=True)
class GoalClusterContent:
    id: int
    goal_indices: Tuple[int, ...]
    cluster_state: GoalState
    solved: Solved = Solved.OPEN
    more: Optional[Any] = None


@dataclass(frozen=True)
class ActionContent:
    id: int
    action: Action
    goal_index: int
    priority: Priority
    name: str
    rule: str = ""
    solved: Solved = Solved.OPEN
    more: Optional[Any] = None


@dataclass(frozen=True)
class ActionAppContent:
    id: int
    result_descriptor: str
    promising: bool = False
    solved: Solved = Solved.OPEN
    more: Optional[Any] = None


# Lenses

def node_lens() -> Lens:
    """zipper -> node"""
    return field_lens("content")


def node_content_lens() -> Lens:
    """node -> node content"""
    return field_lens("content")


def content_lens() -> Lens:
    """zipper -> node content"""
    return node_lens() >> node_content_lens()


def children_lens() -> Lens:
    """zipper -> the focused node's child container.

    Reading forces the node's suspension; writing stores the new
    container back as a pure suspension.
    """
    def modify(f: Kleisli, z: EnrichedZipper) -> FailState:
        node = z.content
        return node.next.bind(f).map(
            lambda co: replace(z, content=replace(node, next=pure(co)))
        )
    return Lens(get=lambda z: z.content.next, modify=modify)


def content_field_lens(name: str) -> Lens:
    return content_lens() >> field_lens(name)


def priority_lens() -> Lens:
    return content_field_lens("priority")


def action_lens() -> Lens:
    return content_field_lens("action")


def promising_lens() -> Lens:
    return content_field_lens("promising")


def gc_state_lens() -> Lens:
    return content_field_lens("cluster_state")


def goal_index_lens() -> Lens:
    return content_field_lens("goal_index")


def solved_lens() -> Lens:
    return content_field_lens("solved")


def get_gc_state(z: EnrichedZipper) -> FailState:
    return view(gc_state_lens())(z)


def get_priority(z: EnrichedZipper) -> FailState:
    return view(priority_lens())(z)


def set_priority(priority: Priority) -> Kleisli:
    return setter(priority_lens(), priority)


def disable() -> Kleisli:
    return over(priority_lens(), arr(Priority.disable))


def get_action(z: EnrichedZipper) -> FailState:
    return view(action_lens())(z)


def set_action(action: Action) -> Kleisli:
    return setter(action_lens(), action)


def get_promising(z: EnrichedZipper) -> FailState:
    return view(promising_lens())(z)


def set_promising(value: bool) -> Kleisli:
    return setter(promising_lens(), value)


def modify_next(f: Kleisli) -> Kleisli:
    return over(children_lens(), f)


# Search state

def fresh_id() -> FailState:
    def take(ctx: SearchContext) -> FailState:
        return set_state(replace(ctx, next_node_id=ctx.next_node_id + 1)).map(
            lambda _: ctx.next_node_id
        )
    return get_state().bind(take)


def bump_revision() -> FailState:
    return modify_state(lambda ctx: replace(ctx, revision=ctx.revision + 1))


def _prepend(node: Node) -> Kleisli:
    return arr(lambda children: pvector([node]).extend(children))


# Node construction

def mk_aa_node(descriptor: str, promising: bool = False) -> FailState:
    return fresh_id().map(
        lambda node_id: Node(ActionAppContent(node_id, descriptor, promising), leaf())
    )


def mk_action_node(spec: RuleSpec, tactic: Tactic, goal_index: int) -> FailState:
    return fresh_id().map(
        lambda node_id: Node(
            ActionContent(
                node_id,
                tac_action(tactic, spec.name),
                goal_index,
                Priority(spec.score),
                spec.name,
                spec.rule,
            ),
            leaf(),
        )
    )


def _action_slots(config: SearchConfig, cluster_state: GoalState) -> List[Tuple[RuleSpec, Tactic, int]]:
    slots = []
    for spec in config.rules:
        tactic = RULES[spec.rule]
        for goal_index in range(len(cluster_state.goals)):
            if config.prune_inapplicable and not tactic(cluster_state, goal_index):
                continue
            slots.append((spec, tactic, goal_index))
    return slots


def mk_cluster_node(state: GoalState, indices: Tuple[int, ...]) -> FailState:
    cluster_state = state.project(indices)

    def build(ctx: SearchContext) -> FailState:
        slots = _action_slots(ctx.config, cluster_state)
        return fresh_id().bind(
            lambda node_id: traverse(lambda slot: mk_action_node(*slot), slots).map(
                lambda actions: Node(
                    GoalClusterContent(node_id, indices, cluster_state),
                    pure(pvector(actions)),
                )
            )
        )
    return get_state().bind(build)


def mk_goal_state_node(state: GoalState) -> FailState:
    """A goal-state node with one cluster child per goal cluster and their actions"""
    def build(ctx: SearchContext) -> FailState:
        if not state.goals:
            clusters: List[Tuple[int, ...]] = []
        elif ctx.config.clustering:
            clusters = goal_clusters(state)
        else:
            clusters = [tuple(range(len(state.goals)))]
        solved = Solved.OPEN if state.goals else Solved.PROVED

        def attach(node_id: int, children: List[Node]) -> Node:
            logger.debug(f"ProofTree: goal state {node_id} [{state}] with {len(children)} clusters")
            return Node(GoalStateContent(node_id, state, solved), pure(pvector(children)))

        return fresh_id().bind(
            lambda node_id: traverse(lambda c: mk_cluster_node(state, c), clusters).map(
                lambda children: attach(node_id, children)
            )
        )
    return get_state().bind(build)


def init_tree(state: GoalState) -> FailState:
    """The level-1 root container for a fresh search on `state`"""
    return mk_goal_state_node(state).map(lambda node: pvector([node]))


def init_gs(state: GoalState) -> Kleisli:
    """At an application node, attach the goal-state subtree for `state`"""
    def attach(z: EnrichedZipper) -> FailState:
        return mk_goal_state_node(state).bind(lambda node: modify_next(_prepend(node))(z))
    return attach


def add_aa_node(state: GoalState, descriptor: str = "", promising: bool = False) -> Kleisli:
    """Prepend an application node for `state` under the focused action; ends on it"""
    down = SEARCH_ZIPPER.level(ACTION).down_level

    def add(z: EnrichedZipper) -> FailState:
        return mk_aa_node(descriptor, promising).bind(
            lambda node: pipe(modify_next(_prepend(node)), down, init_gs(state))(z)
        ).bind(lambda z4: bump_revision().map(lambda _: z4))
    return add


def list_action(successors: Sequence[GoalState], label: str = "list", promising: bool = False, offset: int = 0) -> Action:
    """Attach the successors one selection at a time.

    The node disables itself when it attaches its last successor, and an
    empty list only disables it.
    """
    successors = tuple(successors)
    if not successors:
        return disable()
    head, rest = successors[0], successors[1:]
    up = SEARCH_ZIPPER.level(APPLICATION).up_level
    moves = [
        add_aa_node(head, f"{label} #{offset + 1}", promising),
        up,
        set_action(list_action(rest, label, promising, offset + 1)),
    ]
    if not rest:
        moves.append(disable())
    return pipe(*moves)


def tac_action(tactic: Tactic, label: str = "") -> Action:
    """Run the tactic on the parent cluster's state at this node's goal index"""
    up = SEARCH_ZIPPER.level(ACTION).up_level
    name = label or tactic.name

    def run_tactic(z: EnrichedZipper) -> FailState:
        return view(goal_index_lens())(z).bind(
            lambda goal_index: pipe(up, get_gc_state, arr(lambda gs: tactic(gs, goal_index)))(z)
        ).bind(
            lambda successors: list_action(successors, name, tactic.promising)(z)
        )
    return run_tactic


# Whole-tree passes

def _label(level: int, content: Any, children: List[Any]) -> Solved:
    states = [c.solved for c in children]
    if level == GOAL_STATE:
        if not content.state.goals:
            return Solved.PROVED
        if Solved.FAILED in states:
            return Solved.FAILED
        return Solved.PROVED if states and all(s is Solved.PROVED for s in states) else Solved.OPEN
    if level == CLUSTER:
        if Solved.PROVED in states:
            return Solved.PROVED
        return Solved.FAILED if all(s is Solved.FAILED for s in states) else Solved.OPEN
    if level == ACTION:
        if Solved.PROVED in states:
            return Solved.PROVED
        exhausted = content.priority.disabled and all(s is Solved.FAILED for s in states)
        return Solved.FAILED if exhausted else Solved.OPEN
    if Solved.FAILED in states:
        return Solved.FAILED
    return Solved.PROVED if states and all(s is Solved.PROVED for s in states) else Solved.OPEN


@dataclass
class _Frame:
    node: Optional[Node]
    level: int
    children: List[Node]
    done: List[Node]


def mark_solved(root: PVector) -> PVector:
    """Relabel every node's solved flag bottom-up.

    Application: all goal-state children proved. Action: some application
    proved. Cluster: some action proved. Goal state: no goals, or all
    clusters proved. Failed propagates the other way round.
    """
    frames = [_Frame(None, GOAL_STATE, list(root), [])]
    while True:
        frame = frames[-1]
        if len(frame.done) < len(frame.children):
            child = frame.children[len(frame.done)]
            frames.append(_Frame(child, level_succ(frame.level, LEVELS) if frame.node else GOAL_STATE,
                                 list(force(child.next)), []))
            continue
        frames.pop()
        if frame.node is None:
            return pvector(frame.done)
        content = frame.node.content
        status = _label(frame.level, content, [n.content for n in frame.done])
        relabeled = Node(replace(content, solved=status), pure(pvector(frame.done)))
        frames[-1].done.append(relabeled)


def root_status(root: PVector) -> Solved:
    if not root:
        return Solved.OPEN
    return root[0].content.solved


@dataclass(frozen=True)
class FlatNode:
    level: int
    content: Any
    position: Tuple[Tuple[int, ...], ...]
    child_ids: Tuple[int, ...]


def flatten(root: PVector) -> List[FlatNode]:
    """Every node in preorder with its level, position and child ids"""
    out: List[FlatNode] = []
    stack: List[Tuple[Node, int, Tuple[Tuple[int, ...], ...]]] = [
        (node, GOAL_STATE, ((i,),)) for i, node in reversed(list(enumerate(root)))
    ]
    while stack:
        node, level, position = stack.pop()
        children = list(force(node.next))
        out.append(FlatNode(level, node.content, position, tuple(c.content.id for c in children)))
        child_level = level_succ(level, LEVELS)
        for j in reversed(range(len(children))):
            stack.append((children[j], child_level, ((j,),) + position))
    return out


def count_nodes(root: PVector) -> int:
    return len(flatten(root))


def find_node(root: PVector, node_id: int) -> Optional[FlatNode]:
    for flat in flatten(root):
        if flat.content.id == node_id:
            return flat
    return None


def describe(level: int, content: Any) -> str:
    """Short human-readable summary of a node's content"""
    if level == GOAL_STATE:
        return str(content.state)
    if level == CLUSTER:
        indices = ", ".join(str(i + 1) for i in content.goal_indices)
        return f"cluster {{{indices}}}: {content.cluster_state}"
    if level == ACTION:
        return f"{content.name} @ goal {content.goal_index + 1}"
    return content.result_descriptor
