"""
Positions

An alternating zipper over position stacks, paired with the search zipper
so every move also updates the focus' address.

A stack is a tuple of per-level tuples of ints, innermost level first.
Within a level tuple the head is the horizontal offset at the current
depth; read right to left it replays the moves that led there.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .alt_zipper import AltZipper, LevelMoves, product
from .effects import (
    FailState,
    FailureCode,
    Kleisli,
    catch,
    fail,
    pipe,
    pure,
)

Stack = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class Position:
    stack: Stack = ()

    @property
    def depth(self) -> int:
        return len(self.stack)

    @property
    def head(self) -> Tuple[int, ...]:
        return self.stack[0] if self.stack else ()

    def to_json(self) -> List[List[int]]:
        return [list(level) for level in self.stack]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[int]]) -> "Position":
        return cls(tuple(tuple(int(p) for p in level) for level in data))


def _out_of_bounds(message: str) -> FailState:
    return fail(FailureCode.MOVE_OUT_OF_BOUNDS, message)


def pos_zip(pss: Stack) -> FailState:
    return pure(((0,),) + pss)


def pos_unzip(pss: Stack) -> FailState:
    if not pss:
        return _out_of_bounds("empty position stack")
    return pure(pss[1:])


def pos_right(pss: Stack) -> FailState:
    if not pss or not pss[0]:
        return _out_of_bounds("no horizontal position to move")
    ps = pss[0]
    return pure(((ps[0] + 1,) + ps[1:],) + pss[1:])


def pos_left(pss: Stack) -> FailState:
    if not pss or not pss[0]:
        return _out_of_bounds("no horizontal position to move")
    ps = pss[0]
    return pure(((ps[0] - 1,) + ps[1:],) + pss[1:])


def pos_down(pss: Stack) -> FailState:
    if not pss:
        return _out_of_bounds("empty position stack")
    return pure(((0,) + pss[0],) + pss[1:])


def pos_up(pss: Stack) -> FailState:
    if not pss or not pss[0]:
        return _out_of_bounds("no depth to leave")
    return pure((pss[0][1:],) + pss[1:])


def pos_down_between(pss: Stack) -> FailState:
    return pure(((0,),) + pss)


def pos_up_between(pss: Stack) -> FailState:
    if not pss:
        return _out_of_bounds("empty position stack")
    return pure(pss[1:])


POSITION_MOVES = LevelMoves(
    zip=pos_zip,
    unzip=pos_unzip,
    left=pos_left,
    right=pos_right,
    up=pos_up,
    down=pos_down,
    down_level=pos_down_between,
    up_level=pos_up_between,
)


def make_positional(n: int) -> AltZipper:
    """n levels of position moves; every level moves the same way"""
    return AltZipper(
        tuple(POSITION_MOVES for _ in range(n)),
        level_of=lambda pss: (len(pss) - 1) % n + 1,
    )


def attach_positions(search: AltZipper) -> AltZipper:
    """Pair a search zipper with positions; product values are (zipper, stack)"""
    return product(search, make_positional(search.n))


def replay(pos: Position, root, search: AltZipper) -> FailState:
    """Refocus the node recorded at `pos` in the container `root`.

    `search` is the positional product. Returns the product zipper
    (tree zipper, stack). The empty position replays to the root
    container's first node. Addresses that no longer exist fail with
    MoveOutOfBounds.
    """
    stack = pos.stack or ((0,),)
    moves: List[Kleisli] = [search.level(1).zip]
    level = 1
    # outermost level first; within a level, right to left
    for depth, ps in enumerate(reversed(stack)):
        if depth > 0:
            moves.append(search.level(level).down_level)
            level = search.succ(level)
        moves.extend(_horizontal(search.level(level), ps[-1]))
        for p in reversed(ps[:-1]):
            moves.append(search.level(level).down)
            moves.extend(_horizontal(search.level(level), p))

    def stale(_start) -> FailState:
        return _out_of_bounds(f"position {pos.to_json()} does not exist in this tree")

    return catch(pipe(*moves), stale)((root, ()))


def _horizontal(level: LevelMoves, offset: int) -> List[Kleisli]:
    if offset >= 0:
        return [level.right] * offset
    return [level.left] * (-offset)
