"""
Zippers

The single-container zipper contract and the list zipper used at every
level of the search tree.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from pyrsistent import PList, plist, pvector

from .effects import FailState, FailureCode, Kleisli, fail, pure


@dataclass(frozen=True)
class ZipperMoves:
    """The six moves of a zipper over some container type.

    A zipper value is a content paired with a context; `content`,
    `context` and `assemble` expose that split so generic constructions
    can re-associate it.
    """

    zip: Kleisli
    unzip: Kleisli
    left: Kleisli
    right: Kleisli
    up: Kleisli
    down: Kleisli
    content: Callable[[Any], Any]
    context: Callable[[Any], Any]
    assemble: Callable[[Any, Any], Any]


@dataclass(frozen=True)
class ListContext:
    before: PList  # reversed: nearest left neighbour first
    after: PList


@dataclass(frozen=True)
class ListZipper:
    focus: Any
    before: PList
    after: PList

    @property
    def context(self) -> ListContext:
        return ListContext(self.before, self.after)

    @property
    def index(self) -> int:
        return len(self.before)

    @classmethod
    def assemble(cls, focus: Any, context: ListContext) -> "ListZipper":
        return cls(focus, context.before, context.after)


def list_zip(co) -> FailState:
    if len(co) == 0:
        return fail(FailureCode.EMPTY_CONTAINER, "cannot zip an empty list")
    items = list(co)
    return pure(ListZipper(items[0], plist(), plist(items[1:])))


def list_unzip(z: ListZipper) -> FailState:
    return pure(pvector(list(z.before.reverse()) + [z.focus] + list(z.after)))


def list_right(z: ListZipper) -> FailState:
    if not z.after:
        return fail(FailureCode.MOVE_OUT_OF_BOUNDS, "no element right of the focus")
    return pure(ListZipper(z.after.first, z.before.cons(z.focus), z.after.rest))


def list_left(z: ListZipper) -> FailState:
    if not z.before:
        return fail(FailureCode.MOVE_OUT_OF_BOUNDS, "no element left of the focus")
    return pure(ListZipper(z.before.first, z.before.rest, z.after.cons(z.focus)))


def list_up(_z: ListZipper) -> FailState:
    return fail(FailureCode.MOVE_OUT_OF_BOUNDS, "lists are flat")


def list_down(_z: ListZipper) -> FailState:
    return fail(FailureCode.MOVE_OUT_OF_BOUNDS, "lists are flat")


LIST_ZIPPER = ZipperMoves(
    zip=list_zip,
    unzip=list_unzip,
    left=list_left,
    right=list_right,
    up=list_up,
    down=list_down,
    content=lambda z: z.focus,
    context=lambda z: z.context,
    assemble=ListZipper.assemble,
)
