"""
Alternating Zippers

Generates n mutually linked zippers from per-level base zippers and adds
the moves between containers. Level i's nodes have children in a level
i+1 container, with level n wrapping around to level 1.

The construction works in two steps. Base zippers focus on Nodes (content
plus a suspended next container), and each level's context is enriched
with the parent's content and enriched context so `up_between` can rebuild
the parent. `product` pairs two alternating zippers move for move.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Any, Callable, Sequence, Tuple

from pyrsistent import pvector

from .effects import (
    Failure,
    FailState,
    FailureCode,
    Kleisli,
    fail,
    pure,
    split,
)
from .zipper import ZipperMoves


def level_succ(i: int, n: int) -> int:
    """i ⊕ 1 over levels 1..n"""
    return i % n + 1


def level_pred(i: int, n: int) -> int:
    """i ⊖ 1 over levels 1..n"""
    return (i - 2) % n + 1


@dataclass(frozen=True)
class Node:
    """Node content plus the suspended container of the successor level"""
    content: Any
    next: FailState


@dataclass(frozen=True)
class EnrichedContext:
    base_context: Any
    parent: FailState  # of ParentData


@dataclass(frozen=True)
class ParentData:
    parent_content: Any
    parent_context: EnrichedContext


@dataclass(frozen=True)
class EnrichedContainer:
    container: Any
    parent: FailState  # of ParentData


@dataclass(frozen=True)
class EnrichedZipper:
    content: Node
    context: EnrichedContext
    level: int


def root_parent() -> FailState:
    return fail(FailureCode.MOVE_OUT_OF_BOUNDS, "the root container has no parent")


def root_container(container: Any) -> EnrichedContainer:
    """Wrap a top-level container; moving up from it fails"""
    return EnrichedContainer(container, root_parent())


def leaf() -> FailState:
    """Suspension of a node without children"""
    return pure(pvector())


def force(effect: FailState) -> Any:
    """Read a pure suspension. Suspensions never touch state, so any state works."""
    out = effect.run(None)
    if isinstance(out, Failure):
        raise ValueError(f"suspension failed: {out.reason}")
    return out.value


@dataclass(frozen=True)
class EnrichedLevel:
    """A base zipper's moves lifted onto enriched contexts for one level"""

    index: int
    base: ZipperMoves

    def from_base(self, z: Any, parent: FailState) -> EnrichedZipper:
        return EnrichedZipper(
            self.base.content(z),
            EnrichedContext(self.base.context(z), parent),
            self.index,
        )

    def to_base(self, z: EnrichedZipper) -> Any:
        return self.base.assemble(z.content, z.context.base_context)

    def lift_move(self, move: Kleisli) -> Kleisli:
        def lifted(z: EnrichedZipper) -> FailState:
            parent = z.context.parent
            return move(self.to_base(z)).map(lambda moved: self.from_base(moved, parent))
        return lifted

    def zip(self, co: EnrichedContainer) -> FailState:
        return self.base.zip(co.container).map(lambda z: self.from_base(z, co.parent))

    def unzip(self, z: EnrichedZipper) -> FailState:
        parent = z.context.parent
        return self.base.unzip(self.to_base(z)).map(lambda co: EnrichedContainer(co, parent))


def from_base(level: EnrichedLevel, z: Any, parent: FailState) -> EnrichedZipper:
    return level.from_base(z, parent)


def to_base(level: EnrichedLevel, z: EnrichedZipper) -> Any:
    return level.to_base(z)


def lift_move(level: EnrichedLevel, move: Kleisli) -> Kleisli:
    return level.lift_move(move)


def enriched_zip(level: EnrichedLevel) -> Kleisli:
    return level.zip


def enriched_unzip(level: EnrichedLevel) -> Kleisli:
    return level.unzip


def down_between(upper: EnrichedLevel, lower: EnrichedLevel) -> Kleisli:
    """Move from a node to the root of its children's container"""
    def down(z: EnrichedZipper) -> FailState:
        node = z.content
        parent = pure(ParentData(node.content, z.context))
        return node.next.bind(lambda co: lower.zip(EnrichedContainer(co, parent)))
    return down


def up_between(upper: EnrichedLevel, lower: EnrichedLevel) -> Kleisli:
    """Move from a child container back to its parent node.

    The parent's next becomes the child container as it is now, so edits
    made below survive the move.
    """
    def rebuild(co: EnrichedContainer) -> FailState:
        return co.parent.map(
            lambda pd: EnrichedZipper(
                Node(pd.parent_content, pure(co.container)),
                pd.parent_context,
                upper.index,
            )
        )

    def up(z: EnrichedZipper) -> FailState:
        return lower.unzip(z).bind(rebuild)
    return up


@dataclass(frozen=True)
class LevelMoves:
    """One level of an alternating zipper.

    down_level / up_level move between this level's container and the
    next / previous level's.
    """

    zip: Kleisli
    unzip: Kleisli
    left: Kleisli
    right: Kleisli
    up: Kleisli
    down: Kleisli
    down_level: Kleisli
    up_level: Kleisli


MOVE_NAMES = ("zip", "unzip", "left", "right", "up", "down", "down_level", "up_level")


@dataclass(frozen=True)
class AltZipper:
    """n mutually linked zippers with cyclic moves between containers"""

    levels: Tuple[LevelMoves, ...]
    level_of: Callable[[Any], int]

    @property
    def n(self) -> int:
        return len(self.levels)

    def level(self, i: int) -> LevelMoves:
        return self.levels[i - 1]

    def succ(self, i: int) -> int:
        return level_succ(i, self.n)

    def pred(self, i: int) -> int:
        return level_pred(i, self.n)

    # Moves that dispatch on the zipper's own level

    def right(self, z: Any) -> FailState:
        return self.level(self.level_of(z)).right(z)

    def left(self, z: Any) -> FailState:
        return self.level(self.level_of(z)).left(z)

    def down_level(self, z: Any) -> FailState:
        return self.level(self.level_of(z)).down_level(z)

    def up_level(self, z: Any) -> FailState:
        return self.level(self.level_of(z)).up_level(z)


def make_alternating(n: int, bases: Sequence[ZipperMoves]) -> AltZipper:
    """Build the n-alternating zipper whose level-i containers hold Nodes.

    All base zippers must share the FailState effect. Level i's
    down_level reaches level i⊕1 and its up_level returns to level i⊖1.
    """
    if n < 1 or len(bases) != n:
        raise ValueError(f"need one base zipper per level, got {len(bases)} for n={n}")
    enriched = [EnrichedLevel(i + 1, base) for i, base in enumerate(bases)]

    def at(i: int) -> EnrichedLevel:
        return enriched[i - 1]

    levels = []
    for lvl in enriched:
        i = lvl.index
        levels.append(LevelMoves(
            zip=lvl.zip,
            unzip=lvl.unzip,
            left=lvl.lift_move(lvl.base.left),
            right=lvl.lift_move(lvl.base.right),
            up=lvl.lift_move(lvl.base.up),
            down=lvl.lift_move(lvl.base.down),
            down_level=down_between(lvl, at(level_succ(i, n))),
            up_level=up_between(at(level_pred(i, n)), lvl),
        ))
    return AltZipper(tuple(levels), level_of=lambda z: z.level)


def product(first: AltZipper, second: AltZipper) -> AltZipper:
    """Pair two alternating zippers; every move is the split of the component moves"""
    if first.n != second.n:
        raise ValueError(f"cannot pair a {first.n}-level zipper with a {second.n}-level one")
    levels = tuple(
        LevelMoves(**{
            name: split(getattr(a, name), getattr(b, name)) for name in MOVE_NAMES
        })
        for a, b in zip(first.levels, second.levels)
    )
    return AltZipper(levels, level_of=lambda pair: first.level_of(pair[0]))


def with_content(z: EnrichedZipper, content: Any) -> EnrichedZipper:
    return replace(z, content=replace(z.content, content=content))
