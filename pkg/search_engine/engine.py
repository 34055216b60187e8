"""
Search Engine

Postorder enumeration of action nodes and the best-first driver.

The engine navigates the search tree paired with positions, so every
selected node comes with its address. A step selects the enabled action
of highest priority, runs it and re-zips the tree to its root container.
A failed step leaves tree and state exactly as they were.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

from pyrsistent import PVector

from .alt_zipper import AltZipper, root_container
from .config import SearchConfig
from .effects import (
    Failure,
    FailState,
    FailureCode,
    FailureReason,
    Kleisli,
    Success,
    catch,
    fail,
    kleisli_id,
    pipe,
    repeat,
    repeat_until,
    split,
)
from .logic.formula import GoalState
from .position import Position, attach_positions
from .prooftree import (
    ACTION,
    APPLICATION,
    CLUSTER,
    GOAL_STATE,
    SEARCH_ZIPPER,
    Priority,
    SearchContext,
    Solved,
    content_lens,
    get_action,
    get_priority,
    init_tree,
    mark_solved,
    root_status,
)
from .lens import view

logger = logging.getLogger(__name__)

# The search zipper paired with positions; values are (tree zipper, stack)
SEARCH = attach_positions(SEARCH_ZIPPER)


class Status(str, Enum):
    PROVED = "Proved"
    STUCK = "Stuck"
    BUDGET_EXHAUSTED = "BudgetExhausted"


@dataclass(frozen=True)
class TraceStep:
    step: int
    node_id: int
    priority: Priority
    rule: str
    position: Position
    revision: int


@dataclass
class SearchResult:
    root: PVector
    status: Status
    trace: List[TraceStep] = field(default_factory=list)
    context: Optional[SearchContext] = None
    failure: Optional[FailureReason] = None

    @property
    def steps(self) -> int:
        return len(self.trace)


# Generic postorder walk

def post_first(search: AltZipper) -> Kleisli:
    """Zip the root container and descend to the first node in postorder"""
    return pipe(search.level(1).zip, repeat(search.down_level))


def post_next(search: AltZipper) -> Kleisli:
    """The next node in postorder; fails once the root container is exhausted"""
    return catch(pipe(search.right, repeat(search.down_level)), search.up_level)


def seek_level(search: AltZipper, move: Kleisli, level: int) -> Kleisli:
    return repeat_until(move, lambda z: search.level_of(z) == level)


def entry(co: PVector) -> Tuple:
    """Input of the positional search zipper's level-1 zip for a root container"""
    return (root_container(co), ())


def enum_first(co: PVector, search: AltZipper = SEARCH) -> FailState:
    """The first action node in postorder"""
    start = entry(co) if search is SEARCH else root_container(co)
    return pipe(post_first(search), seek_level(search, post_next(search), ACTION))(start)


def enum_next(z, search: AltZipper = SEARCH) -> FailState:
    """The action node after z in postorder"""
    return pipe(post_next(search), seek_level(search, post_next(search), ACTION))(z)


def _tree(z):
    return z[0] if isinstance(z, tuple) else z


def max_action(co: PVector, search: AltZipper = SEARCH) -> FailState:
    """The enabled action node of highest priority; the first visited wins ties"""
    def step(s0):
        out = enum_first(co, search).run(s0)
        best, best_priority = None, None
        while isinstance(out, Success):
            z, state = out.value, out.state
            priority = get_priority(_tree(z)).run(state)
            if isinstance(priority, Failure):
                return priority
            p = priority.value
            if not p.disabled and (best is None or p.score > best_priority.score):
                best, best_priority = z, p
            out = enum_next(z, search).run(state)
        if best is None:
            return Failure(FailureReason(FailureCode.ACTION_DISABLED, "no enabled action in the tree"))
        return Success(best, s0)
    return FailState(step)


def run_action(z) -> FailState:
    """Run the focused action node's stored action on a plain tree zipper"""
    def guarded(priority: Priority) -> FailState:
        if priority.disabled:
            return fail(FailureCode.ACTION_DISABLED, "the focused action is disabled")
        return get_action(z).bind(lambda action: action(z))
    return get_priority(z).bind(guarded)


def apply_action(pz) -> FailState:
    """Apply the focused action on the product; the position stays put"""
    return split(run_action, kleisli_id())(pz)


def top(pz) -> FailState:
    """Re-zip from an action node to the root container, committing all edits"""
    lv = SEARCH.level
    cycle = pipe(lv(ACTION).up_level, lv(CLUSTER).up_level, lv(GOAL_STATE).up_level, lv(APPLICATION).up_level)
    finish = pipe(lv(ACTION).up_level, lv(CLUSTER).up_level, lv(GOAL_STATE).unzip)
    return pipe(repeat(cycle), finish)(pz).map(lambda pair: pair[0].container)


def advance(pz) -> FailState:
    """Apply the focused action and return the new root container"""
    return pipe(apply_action, top)(pz)


def search_step(co: PVector) -> FailState:
    """Select, apply and re-zip once. Yields (new root, selected product zipper)."""
    def step(pz):
        return advance(pz).map(lambda new_root: (new_root, pz))
    return max_action(co).bind(step)


def _trace_step(index: int, pz, ctx: SearchContext) -> TraceStep:
    z, stack = pz
    content = view(content_lens())(z).run(ctx).value
    return TraceStep(
        step=index,
        node_id=content.id,
        priority=content.priority,
        rule=content.name,
        position=Position(stack),
        revision=ctx.revision,
    )


def best_first(co: PVector, budget: int, ctx: SearchContext) -> SearchResult:
    """Repeatedly apply the highest-priority action until proved, stuck or out of budget"""
    trace: List[TraceStep] = []
    root = co
    while True:
        if root_status(mark_solved(root)) is Solved.PROVED:
            status = Status.PROVED
            break
        if len(trace) >= budget:
            status = Status.BUDGET_EXHAUSTED
            break

        selected = max_action(root).run(ctx)
        if isinstance(selected, Failure):
            logger.debug(f"BestFirst: {selected.reason}")
            status = Status.STUCK
            break

        pz = selected.value
        record = _trace_step(len(trace) + 1, pz, ctx)
        outcome = advance(pz).run(ctx)
        if isinstance(outcome, Failure):
            # a failure carries no state: root and ctx are still the pre-step values
            reason = outcome.reason
            logger.warning(f"BestFirst: step {record.step} on {record.rule} failed and was rolled back: {reason}")
            return SearchResult(mark_solved(root), Status.STUCK, trace, ctx, reason)

        root, ctx = outcome.value, outcome.state
        trace.append(record)
        logger.debug(f"BestFirst: step {record.step} selected {record.rule} ({record.priority}) at node {record.node_id}")

    logger.info(f"BestFirst: {status.value} after {len(trace)} steps")
    return SearchResult(mark_solved(root), status, trace, ctx)


def prove(goal_state: GoalState, config: Optional[SearchConfig] = None) -> SearchResult:
    """Build the tree for `goal_state` and run best-first search on it"""
    config = config or SearchConfig()
    issues = config.validate()
    if issues:
        raise ValueError(f"invalid search config: {'; '.join(issues)}")
    built = init_tree(goal_state).run(SearchContext(config))
    logger.info(f"BestFirst: searching {goal_state} with {len(config.rules)} rules, budget {config.max_steps}")
    return best_first(built.value, config.max_steps, built.state)
