"""
Effects

Failure-over-state computations and the Kleisli combinators every move,
lens and action in the search engine is built from.

A FailState wraps a function from a state to an outcome: either
Success(value, new_state) or Failure(reason). A failed computation carries
no state, so whatever a failed branch wrote is gone and `catch` restarts
the fallback from the state it was entered with.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Generic, Iterable, List, Tuple, TypeVar, Union

S = TypeVar("S")
A = TypeVar("A")
B = TypeVar("B")
C = TypeVar("C")


class FailureCode(str, Enum):
    """Every failure site in the framework reports one of these"""
    MOVE_OUT_OF_BOUNDS = "MoveOutOfBounds"
    EMPTY_CONTAINER = "EmptyContainer"
    ACTION_DISABLED = "ActionDisabled"
    UNIFICATION_FAILED = "UnificationFailed"
    USER_ABORT = "UserAbort"
    OTHER = "Other"


@dataclass(frozen=True)
class FailureReason:
    code: FailureCode
    message: str = ""

    def __str__(self) -> str:
        return f"{self.code.value}: {self.message}" if self.message else self.code.value


@dataclass(frozen=True)
class Success(Generic[A, S]):
    value: A
    state: S


@dataclass(frozen=True)
class Failure:
    reason: FailureReason


Outcome = Union[Success, Failure]


@dataclass(frozen=True)
class FailState(Generic[S, A]):
    """A contextual computation threading state S and producing A, or failing.

    Represented as `run: S -> Success(A, S) | Failure`.
    """

    run: Callable[[S], Outcome]

    @classmethod
    def pure(cls, x: A) -> "FailState[S, A]":
        return FailState(lambda s: Success(x, s))

    def bind(self, f: Callable[[A], "FailState[S, B]"]) -> "FailState[S, B]":
        def step(s0: S) -> Outcome:
            out = self.run(s0)
            if isinstance(out, Failure):
                return out
            return f(out.value).run(out.state)
        return FailState(step)

    def map(self, f: Callable[[A], B]) -> "FailState[S, B]":
        def step(s0: S) -> Outcome:
            out = self.run(s0)
            if isinstance(out, Failure):
                return out
            return Success(f(out.value), out.state)
        return FailState(step)

    def then(self, other: "FailState[S, B]") -> "FailState[S, B]":
        return self.bind(lambda _: other)


# A Kleisli morphism A -> FailState[S, B]; the universal move type.
Kleisli = Callable[[A], FailState]


def pure(x: A) -> FailState:
    return FailState.pure(x)


def bind(m: FailState, f: Callable[[A], FailState]) -> FailState:
    return m.bind(f)


def fail(code: FailureCode, message: str = "") -> FailState:
    reason = FailureReason(code, message)
    return FailState(lambda _s: Failure(reason))


def run(effect: FailState, state: Any) -> Outcome:
    """Run an effect from the given state"""
    return effect.run(state)


# State access

def get_state() -> FailState:
    return FailState(lambda s: Success(s, s))


def set_state(new_state: Any) -> FailState:
    return FailState(lambda _s: Success((), new_state))


def modify_state(f: Callable[[Any], Any]) -> FailState:
    return FailState(lambda s: Success((), f(s)))


# Kleisli category

def kleisli_id() -> Kleisli:
    return pure


def kleisli_compose(f: Kleisli, g: Kleisli) -> Kleisli:
    """f >>> g"""
    def composed(x):
        return f(x).bind(g)
    return composed


def pipe(*morphisms: Kleisli) -> Kleisli:
    """Left-to-right composition of any number of morphisms"""
    if not morphisms:
        return kleisli_id()

    # runs as a loop so long move chains stay off the Python stack
    def piped(x):
        def step(s0):
            value, state = x, s0
            for morphism in morphisms:
                out = morphism(value).run(state)
                if isinstance(out, Failure):
                    return out
                value, state = out.value, out.state
            return Success(value, state)
        return FailState(step)
    return piped


# Arrow structure

def arr(f: Callable[[A], B]) -> Kleisli:
    """Lift a pure function into the Kleisli category"""
    def lifted(x):
        return pure(f(x))
    return lifted


def split(f: Kleisli, g: Kleisli) -> Kleisli:
    """f *** g: run f on the first component, then g on the second"""
    def both(pair: Tuple[Any, Any]):
        a, b = pair
        return f(a).bind(lambda a2: g(b).map(lambda b2: (a2, b2)))
    return both


# Failure handling

def catch(a1: Kleisli, a2: Kleisli) -> Kleisli:
    """Run a1; if it fails, run a2 on the original input from the entry state."""
    def caught(x):
        def step(s0):
            out = a1(x).run(s0)
            if isinstance(out, Failure):
                return a2(x).run(s0)
            return out
        return FailState(step)
    return caught


def try_(move: Kleisli) -> Kleisli:
    """catch move id"""
    return catch(move, kleisli_id())


def repeat(move: Kleisli) -> Kleisli:
    """Apply move until it fails and return the last success.

    Same result as `try (move >>> repeat move)`, run as a loop so long
    chains do not grow the Python stack.
    """
    def repeated(x):
        def step(s0):
            value, state = x, s0
            while True:
                out = move(value).run(state)
                if isinstance(out, Failure):
                    return Success(value, state)
                value, state = out.value, out.state
        return FailState(step)
    return repeated


def repeat_until(move: Kleisli, done: Callable[[Any], bool]) -> Kleisli:
    """Apply move until `done` holds for the current value; fails if move fails first."""
    def iterated(x):
        def step(s0):
            value, state = x, s0
            while not done(value):
                out = move(value).run(state)
                if isinstance(out, Failure):
                    return out
                value, state = out.value, out.state
            return Success(value, state)
        return FailState(step)
    return iterated


def traverse(f: Kleisli, items: Iterable[Any]) -> FailState:
    """Run f over items left to right, threading state; collects the results."""
    items = list(items)

    def step(s0):
        results: List[Any] = []
        state = s0
        for item in items:
            out = f(item).run(state)
            if isinstance(out, Failure):
                return out
            results.append(out.value)
            state = out.state
        return Success(results, state)
    return FailState(step)
