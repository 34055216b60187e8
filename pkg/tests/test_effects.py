import random

import pytest

from search_engine.effects import (
    Failure,
    FailureCode,
    Success,
    arr,
    bind,
    catch,
    fail,
    get_state,
    kleisli_compose,
    kleisli_id,
    modify_state,
    pipe,
    pure,
    repeat,
    repeat_until,
    run,
    set_state,
    split,
    traverse,
    try_,
)
from search_engine.zipper import list_left, list_right, list_zip
from tests.generators import CASES_PER_SEED, SEEDS, random_morphism


def failing(_x):
    return fail(FailureCode.MOVE_OUT_OF_BOUNDS, "test")


def observe(morphism, x, state):
    return morphism(x).run(state)


def test_pure_keeps_state():
    assert run(pure(5), "s0") == Success(5, "s0")
    assert run(pure(()), "s0") == Success((), "s0")


def test_bind_threads_state():
    out = run(bind(get_state(), lambda s: set_state(s + 1)), 4)
    assert out == Success((), 5)


def test_bind_short_circuits():
    called = []
    out = run(fail(FailureCode.MOVE_OUT_OF_BOUNDS).bind(lambda x: called.append(x) or pure(x)), 0)
    assert isinstance(out, Failure)
    assert out.reason.code is FailureCode.MOVE_OUT_OF_BOUNDS
    assert called == []


def test_state_access():
    assert run(set_state(7).then(get_state()), 0) == Success(7, 7)
    assert run(modify_state(lambda s: s + 1).then(modify_state(lambda s: s + 1)), 0).state == 2
    assert run(get_state().bind(lambda a: get_state().map(lambda b: a == b)), 3).value is True


@pytest.mark.parametrize("seed", SEEDS)
def test_monad_laws(seed):
    rng = random.Random(seed)
    for _ in range(CASES_PER_SEED):
        f, g = random_morphism(rng), random_morphism(rng)
        x, s = rng.randint(-5, 5), rng.randint(-5, 5)
        # left identity
        assert run(pure(x).bind(f), s) == observe(f, x, s)
        m = f(x)
        # right identity
        assert run(m.bind(pure), s) == run(m, s)
        # associativity
        assert run(m.bind(g).bind(f), s) == run(m.bind(lambda y: g(y).bind(f)), s)


@pytest.mark.parametrize("seed", SEEDS)
def test_kleisli_category_laws(seed):
    rng = random.Random(seed)
    for _ in range(CASES_PER_SEED):
        f, g, h = (random_morphism(rng) for _ in range(3))
        x, s = rng.randint(-5, 5), rng.randint(-5, 5)
        assert observe(kleisli_compose(kleisli_id(), f), x, s) == observe(f, x, s)
        assert observe(kleisli_compose(f, kleisli_id()), x, s) == observe(f, x, s)
        left = kleisli_compose(kleisli_compose(f, g), h)
        right = kleisli_compose(f, kleisli_compose(g, h))
        assert observe(left, x, s) == observe(right, x, s)
        assert observe(pipe(f, g, h), x, s) == observe(left, x, s)


@pytest.mark.parametrize("seed", SEEDS)
def test_arrow_laws(seed):
    rng = random.Random(seed)
    for _ in range(CASES_PER_SEED):
        a, b = rng.randint(-3, 3), rng.randint(-3, 3)
        x, y, s = rng.randint(-5, 5), rng.randint(-5, 5), rng.randint(-5, 5)
        f = lambda v: v + a  # noqa: E731
        g = lambda v: v * b  # noqa: E731
        assert observe(arr(lambda v: v), x, s) == observe(kleisli_id(), x, s)
        assert observe(kleisli_compose(arr(f), arr(g)), x, s) == observe(arr(lambda v: g(f(v))), x, s)
        assert observe(split(kleisli_id(), kleisli_id()), (x, y), s) == Success((x, y), s)
        assert observe(split(arr(f), arr(g)), (x, y), s) == Success((f(x), g(y)), s)


def test_split_examples():
    assert observe(split(arr(lambda v: v + 1), arr(lambda v: v * 2)), (3, 4), "s") == Success((4, 8), "s")
    ran = []
    second = lambda v: ran.append(v) or pure(v)  # noqa: E731
    assert isinstance(observe(split(failing, second), (1, 2), "s"), Failure)
    assert ran == []


def test_split_threads_state_left_to_right():
    write = lambda v: set_state(v).map(lambda _: v)  # noqa: E731
    read = lambda v: get_state().map(lambda s: (v, s))  # noqa: E731
    assert observe(split(write, read), (9, "b"), 0) == Success((9, ("b", 9)), 9)


def test_catch_examples():
    assert observe(catch(failing, arr(lambda v: v)), "x", 1) == Success("x", 1)
    assert observe(catch(arr(lambda v: v), failing), "x", 1) == Success("x", 1)
    both = observe(catch(failing, lambda _: fail(FailureCode.OTHER, "second")), "x", 1)
    assert both.reason.code is FailureCode.OTHER


def test_catch_rolls_back_state():
    set_then_fail = lambda x: set_state("dirty").then(fail(FailureCode.OTHER))  # noqa: E731
    assert observe(catch(set_then_fail, arr(lambda v: v)), "x", "clean") == Success("x", "clean")


@pytest.mark.parametrize("seed", SEEDS)
def test_catch_restarts_fallback_from_entry_state(seed):
    rng = random.Random(seed)
    for _ in range(CASES_PER_SEED):
        a1 = pipe(random_morphism(rng), random_morphism(rng))
        a2 = random_morphism(rng)
        x, s = rng.randint(-5, 5), rng.randint(-5, 5)
        first = observe(a1, x, s)
        expected = first if isinstance(first, Success) else observe(a2, x, s)
        assert observe(catch(a1, a2), x, s) == expected


def test_try_and_repeat():
    assert observe(try_(failing), "x", 0) == Success("x", 0)
    assert observe(repeat(failing), "x", 0) == Success("x", 0)
    countdown = lambda n: pure(n - 1) if n > 0 else failing(n)  # noqa: E731
    assert observe(repeat(countdown), 3, 0) == Success(0, 0)


def test_repeat_left_reaches_head():
    z = list_zip([0, 1, 2, 3, 4]).run(None).value
    for _ in range(3):
        z = list_right(z).run(None).value
    assert z.index == 3
    assert observe(repeat(list_left), z, None).value.index == 0


def test_repeat_handles_long_chains():
    step = lambda n: pure(n + 1) if n < 50000 else failing(n)  # noqa: E731
    assert observe(repeat(step), 0, None).value == 50000


def test_repeat_until():
    inc = arr(lambda n: n + 1)
    assert observe(repeat_until(inc, lambda n: n >= 5), 0, None) == Success(5, None)
    assert observe(repeat_until(inc, lambda n: True), 0, None) == Success(0, None)
    stop_at_two = lambda n: pure(n + 1) if n < 2 else failing(n)  # noqa: E731
    assert isinstance(observe(repeat_until(stop_at_two, lambda n: n >= 5), 0, None), Failure)


def test_traverse_collects_and_threads_state():
    count = lambda x: modify_state(lambda s: s + 1).map(lambda _: x * 10)  # noqa: E731
    assert run(traverse(count, [1, 2, 3]), 0) == Success([10, 20, 30], 3)
    stops = lambda x: failing(x) if x == 2 else pure(x)  # noqa: E731
    assert isinstance(run(traverse(stops, [1, 2, 3]), 0), Failure)
