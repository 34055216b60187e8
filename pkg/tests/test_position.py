import random

import pytest

from search_engine.alt_zipper import root_container
from search_engine.config import SearchConfig
from search_engine.effects import Failure, FailureCode, Success, pipe, try_
from search_engine.engine import SEARCH, prove
from search_engine.logic import parse_goal_state
from search_engine.position import (
    Position,
    make_positional,
    pos_down,
    pos_left,
    pos_right,
    pos_unzip,
    pos_up,
    pos_zip,
    replay,
)
from search_engine.prooftree import flatten
from tests.generators import CASES_PER_SEED, SEEDS
from utils.tree_export import dump_result

DISJUNCTION_GOAL = "A |- (B -> C) | (A & A)"


def value(effect):
    out = effect.run(None)
    assert isinstance(out, Success), out
    return out.value


def test_moves_read_right_to_left():
    stack = value(pipe(pos_left, pos_down, pos_down, pos_right, pos_right)(((0,),)))
    assert Position(stack).head == (2, 0, -1)


def test_between_level_moves_push_and_pop():
    positional = make_positional(4)
    stack = value(pipe(positional.level(1).zip, positional.level(1).down_level, positional.level(2).right)(()))
    assert stack == ((1,), (0,))
    assert positional.level_of(stack) == 2
    assert value(positional.level(2).up_level(stack)) == ((0,),)


def test_zip_unzip_identity():
    assert value(pipe(pos_zip, pos_unzip)(((3,), (1,)))) == ((3,), (1,))


def test_empty_stack_moves_fail():
    for move in (pos_unzip, pos_right, pos_left, pos_down, pos_up):
        out = move(()).run(None)
        assert out.reason.code is FailureCode.MOVE_OUT_OF_BOUNDS


def test_json_round_trip():
    pos = Position(((2, 0, -1), (1,)))
    assert pos.to_json() == [[2, 0, -1], [1]]
    assert Position.from_json(pos.to_json()) == pos
    assert pos.depth == 2
    assert Position().head == ()


@pytest.mark.parametrize("seed", SEEDS)
def test_right_left_insertion_does_not_move(seed):
    rng = random.Random(seed)
    moves = [pos_left, pos_right, pos_down]
    for _ in range(CASES_PER_SEED):
        sequence = [rng.choice(moves) for _ in range(rng.randint(0, 8))]
        cut = rng.randint(0, len(sequence))
        padded = sequence[:cut] + [pos_right, pos_left] + sequence[cut:]
        plain = pipe(*sequence)(((0,),)).run(None) if sequence else Success(((0,),), None)
        assert pipe(*padded)(((0,),)).run(None) == plain


def _searched_tree():
    return prove(parse_goal_state(DISJUNCTION_GOAL)).root


def test_replay_reaches_every_node():
    root = _searched_tree()
    nodes = flatten(root)
    assert len(nodes) > 10
    for flat in nodes:
        z, stack = value(replay(Position(flat.position), root_container(root), SEARCH))
        assert z.content.content.id == flat.content.id
        assert stack == flat.position
        assert SEARCH.level_of((z, stack)) == flat.level


def test_empty_position_replays_to_root():
    root = _searched_tree()
    z, stack = value(replay(Position(), root_container(root), SEARCH))
    assert z.content.content.id == root[0].content.id
    assert stack == ((0,),)


def test_stale_position_fails():
    root = _searched_tree()
    for stale in (((5,),), ((9,), (0,)), ((0,),) * 60):
        out = replay(Position(stale), root_container(root), SEARCH).run(None)
        assert isinstance(out, Failure)
        assert out.reason.code is FailureCode.MOVE_OUT_OF_BOUNDS


def test_failed_moves_keep_the_position():
    root = _searched_tree()
    failed = 0
    for flat in flatten(root):
        pz = value(replay(Position(flat.position), root_container(root), SEARCH))
        for name in ("left", "right", "down_level", "up_level"):
            move = getattr(SEARCH, name)
            if isinstance(move(pz).run(None), Success):
                continue
            failed += 1
            z, stack = value(try_(move)(pz))
            assert stack == pz[1] == flat.position
            assert z is pz[0]
    assert failed > 0


@pytest.mark.parametrize("steps", [0, 3, 6])
def test_dumped_addresses_are_unique(steps):
    result = prove(parse_goal_state(DISJUNCTION_GOAL), SearchConfig(max_steps=steps))
    dump = dump_result(result)
    addresses = [tuple(map(tuple, node.position)) for node in dump.nodes]
    assert len(set(addresses)) == len(addresses) == len(dump.nodes)
