import random

import pytest
from pyrsistent import pvector

from search_engine.alt_zipper import (
    MOVE_NAMES,
    AltZipper,
    EnrichedContainer,
    EnrichedLevel,
    LevelMoves,
    Node,
    down_between,
    enriched_unzip,
    enriched_zip,
    force,
    from_base,
    leaf,
    level_pred,
    level_succ,
    lift_move,
    make_alternating,
    product,
    root_container,
    to_base,
    with_content,
)
from search_engine.effects import Failure, FailureCode, Success, kleisli_id, pipe, pure, repeat
from search_engine.position import make_positional
from search_engine.zipper import LIST_ZIPPER, list_right, list_zip
from tests.generators import CASES_PER_SEED, SEEDS, materialize, random_tree, set_at

MOVES = ("right", "left", "down_level", "up_level")


def value(effect):
    out = effect.run(None)
    assert isinstance(out, Success), out
    return out.value


def alternating(n):
    return make_alternating(n, [LIST_ZIPPER] * n)


def to_root(alt, z):
    """Commit every edit on the way up and return the root container"""
    return value(pipe(repeat(alt.up_level), alt.level(1).unzip)(z)).container


def random_walk(alt, z, rng, steps):
    """Random moves from z; returns the zipper and the child-index path of its focus"""
    path = [0]
    for _ in range(steps):
        name = rng.choice(MOVES)
        out = getattr(alt, name)(z).run(None)
        if isinstance(out, Failure):
            continue
        z = out.value
        if name == "right":
            path[-1] += 1
        elif name == "left":
            path[-1] -= 1
        elif name == "down_level":
            path.append(0)
        else:
            path.pop()
    return z, path


def fig5_tree():
    children = pvector([Node("c1", leaf()), Node("c2", leaf())])
    return pvector([Node("a", pure(children)), Node("b", leaf())])


def test_level_arithmetic():
    assert [level_succ(i, 4) for i in range(1, 5)] == [2, 3, 4, 1]
    assert [level_pred(i, 4) for i in range(1, 5)] == [4, 1, 2, 3]
    assert level_succ(1, 1) == 1 and level_pred(1, 1) == 1


def test_from_base_to_base_round_trip():
    lvl = EnrichedLevel(1, LIST_ZIPPER)
    base = value(list_zip([Node("x", leaf()), Node("y", leaf())]))
    parent = pure("parent")
    z = from_base(lvl, base, parent)
    assert to_base(lvl, z) == base
    assert z.content == base.focus
    assert z.context.parent is parent


def test_lift_move():
    lvl = EnrichedLevel(1, LIST_ZIPPER)
    z = value(enriched_zip(lvl)(root_container(fig5_tree())))
    moved = value(lift_move(lvl, list_right)(z))
    assert moved.content.content == "b"
    assert moved.context.parent is z.context.parent
    assert value(lift_move(lvl, kleisli_id())(z)) == z
    failed = lift_move(lvl, list_right)(moved).run(None)
    assert failed.reason.code is FailureCode.MOVE_OUT_OF_BOUNDS


def test_enriched_zip_unzip():
    lvl = EnrichedLevel(1, LIST_ZIPPER)
    co = root_container(fig5_tree())
    back = value(enriched_unzip(lvl)(value(enriched_zip(lvl)(co))))
    assert back.container == co.container
    assert back.parent is co.parent
    empty = enriched_zip(lvl)(EnrichedContainer(pvector(), co.parent)).run(None)
    assert empty.reason.code is FailureCode.EMPTY_CONTAINER


def test_fig5_move_sequence():
    alt = alternating(2)
    co = fig5_tree()
    z = value(alt.level(1).zip(root_container(co)))
    down = value(alt.level(1).down_level(z))
    assert down.level == 2 and down.content.content == "c1"
    right = value(alt.level(2).right(down))
    assert right.content.content == "c2"
    up = value(alt.level(2).up_level(right))
    assert up.level == 1 and up.content.content == "a"
    back = value(alt.level(1).unzip(up))
    assert materialize(back.container) == materialize(co)


def test_down_into_leaf_fails():
    alt = alternating(2)
    z = value(alt.level(1).right(value(alt.level(1).zip(root_container(fig5_tree())))))
    out = alt.down_level(z).run(None)
    assert out.reason.code is FailureCode.EMPTY_CONTAINER


def test_up_from_root_fails():
    alt = alternating(3)
    z = value(alt.level(1).zip(root_container(fig5_tree())))
    out = alt.up_level(z).run(None)
    assert out.reason.code is FailureCode.MOVE_OUT_OF_BOUNDS


def test_down_between_wraps_around():
    alt = alternating(3)
    chain = pvector()
    for content in reversed(range(5)):
        chain = pvector([Node(content, pure(chain))])
    z = value(alt.level(1).zip(root_container(chain)))
    levels = [z.level]
    for _ in range(4):
        z = value(alt.down_level(z))
        levels.append(z.level)
    assert levels == [1, 2, 3, 1, 2]
    assert z.content.content == 4
    assert alt.level_of(z) == 2


def test_down_between_builds_parent_from_current_focus():
    lvl1, lvl2 = EnrichedLevel(1, LIST_ZIPPER), EnrichedLevel(2, LIST_ZIPPER)
    z = value(lvl1.zip(root_container(fig5_tree())))
    below = value(down_between(lvl1, lvl2)(z))
    parent = value(below.context.parent)
    assert parent.parent_content == "a"
    assert parent.parent_context == z.context


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("seed", SEEDS)
def test_write_through(n, seed):
    rng = random.Random(seed * 10 + n)
    alt = alternating(n)
    for _ in range(CASES_PER_SEED):
        co = random_tree(rng, n)
        z = value(alt.level(1).zip(root_container(co)))
        z, path = random_walk(alt, z, rng, rng.randint(0, 15))
        edited = with_content(z, -1)
        # later moves must carry the edit along
        z2 = edited
        for name in ("right", "left", "down_level", "up_level"):
            out = getattr(alt, name)(z2).run(None)
            if isinstance(out, Success):
                back = {"right": "left", "left": "right", "down_level": "up_level", "up_level": None}[name]
                if back is None:
                    break
                z2 = value(getattr(alt, back)(out.value))
        assert materialize(to_root(alt, z2)) == set_at(materialize(co), path, -1)


@pytest.mark.parametrize("seed", SEEDS)
def test_down_up_round_trip(seed):
    rng = random.Random(seed)
    alt = alternating(3)
    checked = 0
    for _ in range(CASES_PER_SEED):
        co = random_tree(rng, 3)
        z = value(alt.level(1).zip(root_container(co)))
        z, _ = random_walk(alt, z, rng, rng.randint(0, 10))
        down = alt.down_level(z).run(None)
        if isinstance(down, Failure):
            continue
        up = value(alt.up_level(down.value))
        assert up.level == z.level
        assert up.content.content == z.content.content
        assert materialize(to_root(alt, up)) == materialize(to_root(alt, z)) == materialize(co)
        checked += 1
    assert checked > 0


@pytest.mark.parametrize("seed", SEEDS)
def test_product_projection_commutes(seed):
    rng = random.Random(seed)
    alt = alternating(3)
    paired = product(alt, make_positional(3))
    for _ in range(CASES_PER_SEED):
        co = random_tree(rng, 3)
        z = value(alt.level(1).zip(root_container(co)))
        pz = value(paired.level(1).zip((root_container(co), ())))
        path = [0]
        for _ in range(rng.randint(0, 12)):
            name = rng.choice(MOVES)
            single = getattr(alt, name)(z).run(None)
            both = getattr(paired, name)(pz).run(None)
            assert isinstance(single, Success) == isinstance(both, Success)
            if isinstance(single, Failure):
                continue
            z, pz = single.value, both.value
            if name == "right":
                path[-1] += 1
            elif name == "left":
                path[-1] -= 1
            elif name == "down_level":
                path.append(0)
            else:
                path.pop()
            assert pz[0].content.content == z.content.content
            assert paired.level_of(pz) == z.level
            assert pz[1] == tuple((i,) for i in reversed(path))


def test_product_rejects_mismatched_levels():
    with pytest.raises(ValueError):
        product(alternating(2), alternating(3))


def test_make_alternating_needs_one_base_per_level():
    with pytest.raises(ValueError):
        make_alternating(3, [LIST_ZIPPER])


def test_suspensions_are_repeatable():
    co = fig5_tree()
    node = co[0]
    assert force(node.next) == force(node.next)


def test_single_level_round_trip():
    alt = alternating(1)
    co = fig5_tree()
    z = value(alt.level(1).zip(root_container(co)))
    down = value(alt.down_level(z))
    assert down.level == 1 and down.content.content == "c1"
    up = value(alt.up_level(down))
    assert up.level == 1 and up.content.content == "a"
    assert materialize(to_root(alt, up)) == materialize(co)


def contents_by_level(shape, n, level=1, out=None):
    """Preorder contents of a materialized tree, grouped by level"""
    out = out if out is not None else {i: [] for i in range(1, n + 1)}
    for content, children in shape:
        out[level].append(content)
        contents_by_level(children, n, level % n + 1, out)
    return out


@pytest.mark.parametrize("seed", SEEDS)
def test_edits_stay_on_their_level(seed):
    rng = random.Random(seed)
    n = 3
    alt = alternating(n)
    for _ in range(CASES_PER_SEED):
        co = random_tree(rng, n)
        z = value(alt.level(1).zip(root_container(co)))
        z, _ = random_walk(alt, z, rng, rng.randint(0, 12))
        before = contents_by_level(materialize(co), n)
        after = contents_by_level(materialize(to_root(alt, with_content(z, -1))), n)
        for level in range(1, n + 1):
            if level == z.level:
                changed = [i for i, (a, b) in enumerate(zip(before[level], after[level])) if a != b]
                assert len(changed) == 1 and after[level][changed[0]] == -1
            else:
                assert after[level] == before[level]
                assert -1 not in after[level]


def unit_zipper(n):
    """Every move succeeds and leaves ()"""
    moves = LevelMoves(**{name: (lambda _: pure(())) for name in MOVE_NAMES})
    return AltZipper(tuple(moves for _ in range(n)), level_of=lambda _: 1)


@pytest.mark.parametrize("seed", SEEDS)
def test_product_with_unit_behaves_like_the_first_component(seed):
    rng = random.Random(seed)
    alt = alternating(3)
    paired = product(alt, unit_zipper(3))
    for _ in range(CASES_PER_SEED):
        co = random_tree(rng, 3)
        start = root_container(co)
        z = value(alt.level(1).zip(start))
        pz = value(paired.level(1).zip((start, ())))
        assert pz[0].content.content == z.content.content and pz[1] == ()
        for _ in range(rng.randint(0, 12)):
            name = rng.choice(MOVES)
            single = getattr(alt, name)(z).run(None)
            both = getattr(paired, name)(pz).run(None)
            if isinstance(single, Failure):
                assert isinstance(both, Failure)
                assert both.reason == single.reason
                continue
            z, pz = single.value, both.value
            assert pz[0].content.content == z.content.content and pz[0].level == z.level
            assert pz[1] == ()
            assert paired.level_of(pz) == alt.level_of(z)
        up = value(pipe(repeat(paired.up_level), paired.level(1).unzip)(pz))
        assert materialize(up[0].container) == materialize(to_root(alt, z))
