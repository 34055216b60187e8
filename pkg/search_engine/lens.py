"""
Lenses

Getter/modifier pairs in the Kleisli category of FailState. Every read or
write of node data in the search engine goes through one of these, so code
written against a lens keeps working when the data behind it is extended.
"""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import Any, Callable, Optional

from .effects import FailState, Kleisli, arr, kleisli_compose, pure


@dataclass(frozen=True)
class Lens:
    """A lens from S to A.

    get: Kleisli morphism S -> A
    modify: (f: A -> FailState[A], s: S) -> FailState[S]
    """

    get: Kleisli
    modify: Callable[[Kleisli, Any], FailState]

    def __rshift__(self, other: "Lens") -> "Lens":
        return lens_compose(self, other)


def lens_id() -> Lens:
    return Lens(get=pure, modify=lambda f, x: f(x))


def lens_compose(l1: Lens, l2: Lens) -> Lens:
    """(g1, m1) >>> (g2, m2) = (g1 >>> g2, (f, x) -> m1(y -> m2(f, y), x))"""
    return Lens(
        get=kleisli_compose(l1.get, l2.get),
        modify=lambda f, x: l1.modify(lambda y: l2.modify(f, y), x),
    )


def lens_set(lens: Lens, value: Any, s: Any) -> FailState:
    return lens.modify(arr(lambda _: value), s)


# Morphism adapters

def view(lens: Lens) -> Kleisli:
    return lens.get


def setter(lens: Lens, value: Any) -> Kleisli:
    return lambda s: lens_set(lens, value, s)


def over(lens: Lens, f: Kleisli) -> Kleisli:
    return lambda s: lens.modify(f, s)


# Concrete lenses

def field_lens(name: str) -> Lens:
    """Lens onto one field of a frozen dataclass"""
    return Lens(
        get=lambda record: pure(getattr(record, name)),
        modify=lambda f, record: f(getattr(record, name)).map(
            lambda value: dataclasses.replace(record, **{name: value})
        ),
    )


def item_lens(index: int) -> Lens:
    """Lens onto one position of a tuple"""
    def rebuild(items: tuple, value: Any) -> tuple:
        return items[:index] + (value,) + items[index + 1:]

    return Lens(
        get=lambda items: pure(items[index]),
        modify=lambda f, items: f(items[index]).map(lambda value: rebuild(items, value)),
    )


def first_lens() -> Lens:
    return item_lens(0)


def second_lens() -> Lens:
    return item_lens(1)


# Extension slots
#
# Content records end with a `more` field. A downstream extension stores
# its data in an Extension whose own `more` is the next free slot.

@dataclass(frozen=True)
class Extension:
    data: Any
    more: Optional[Any] = None


def more_lens() -> Lens:
    return field_lens("more")


def extension_data_lens() -> Lens:
    """The data of the first extension stored in a record's more slot"""
    return more_lens() >> field_lens("data")


def extend(record: Any, data: Any) -> Any:
    """Instantiate the record's free more slot with new data and a fresh slot.

    Earlier extensions keep their place, so lenses written for them still
    reach the same data.
    """
    if record.more is None:
        return dataclasses.replace(record, more=Extension(data))
    return dataclasses.replace(record, more=extend(record.more, data))
