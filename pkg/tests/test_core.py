import pytest
from hypothesis import given, strategies as st

from listaccess import (
    CostModel,
    InvalidParam,
    InvalidPosition,
    ItemNotFound,
    ListState,
    access_cost,
    move_forward_to,
    move_to_front,
    position_of,
    transpose_forward,
)


def L(*items):
    return ListState(items)


@pytest.mark.parametrize(
    "order, item, expected",
    [((1, 2, 3), 1, 1), ((1, 2, 3), 3, 3), ((3, 1, 2), 2, 3)],
)
def test_position_of(order, item, expected):
    assert position_of(ListState(order), item) == expected


def test_position_of_missing_item():
    with pytest.raises(ItemNotFound):
        position_of(L(1, 2, 3), 4)


@pytest.mark.parametrize(
    "position, model, expected",
    [(5, CostModel.FULL, 5), (1, CostModel.PARTIAL, 0), (1, CostModel.FULL, 1), (7, "partial", 6)],
)
def test_access_cost(position, model, expected):
    assert access_cost(position, model) == expected


@pytest.mark.parametrize("bad", [0, -3])
def test_access_cost_rejects_nonpositive(bad):
    with pytest.raises(InvalidPosition):
        access_cost(bad, CostModel.FULL)


@pytest.mark.parametrize(
    "order, pos, expected",
    [((1, 2, 3), 3, (3, 1, 2)), ((1, 2, 3), 1, (1, 2, 3)), ((3, 1, 2), 2, (1, 3, 2))],
)
def test_move_to_front(order, pos, expected):
    assert move_to_front(ListState(order), pos).order == expected


@pytest.mark.parametrize(
    "order, pos, expected",
    [((1, 2, 3), 3, (1, 3, 2)), ((1, 2, 3), 1, (1, 2, 3)), ((2, 1, 3), 2, (1, 2, 3))],
)
def test_transpose_forward(order, pos, expected):
    assert transpose_forward(ListState(order), pos).order == expected


@pytest.mark.parametrize(
    "order, pos, target, expected",
    [
        ((1, 2, 3, 4), 4, 2, (1, 4, 2, 3)),
        ((1, 2, 3), 2, 2, (1, 2, 3)),
        ((1, 2, 3), 3, 1, (3, 1, 2)),
    ],
)
def test_move_forward_to(order, pos, target, expected):
    assert move_forward_to(ListState(order), pos, target).order == expected


@pytest.mark.parametrize("pos, target", [(0, 1), (4, 1), (2, 3), (2, 0)])
def test_move_forward_to_rejects_bad_range(pos, target):
    with pytest.raises(InvalidPosition):
        move_forward_to(L(1, 2, 3), pos, target)


@pytest.mark.parametrize("op", [move_to_front, transpose_forward])
@pytest.mark.parametrize("pos", [0, 4])
def test_moves_reject_out_of_range(op, pos):
    with pytest.raises(InvalidPosition):
        op(L(1, 2, 3), pos)


def test_moves_do_not_mutate_input():
    state = L(1, 2, 3)
    move_to_front(state, 3)
    transpose_forward(state, 2)
    assert state.order == (1, 2, 3)


def test_list_state_validation():
    with pytest.raises(InvalidParam):
        ListState(())
    with pytest.raises(InvalidParam):
        ListState((1, 2, 1))
    assert ListState.initial(4).order == (1, 2, 3, 4)


@st.composite
def list_and_position(draw):
    n = draw(st.integers(1, 20))
    order = draw(st.permutations(range(1, n + 1)))
    pos = draw(st.integers(1, n))
    return ListState(tuple(order)), pos


@given(list_and_position())
def test_moves_preserve_items(case):
    state, p = case
    for moved in (move_to_front(state, p), transpose_forward(state, p), move_forward_to(state, p, 1)):
        assert sorted(moved.order) == sorted(state.order)
        assert len(moved) == len(state)


@given(list_and_position())
def test_moves_are_special_cases_of_move_forward_to(case):
    state, p = case
    assert move_to_front(state, p) == move_forward_to(state, p, 1)
    assert transpose_forward(state, p) == move_forward_to(state, p, max(1, p - 1))


@given(st.integers(1, 10**6))
def test_partial_is_full_minus_one(p):
    assert access_cost(p, CostModel.PARTIAL) == access_cost(p, CostModel.FULL) - 1


@given(list_and_position())
def test_positions_after_move_to_front(case):
    state, p = case
    moved = move_to_front(state, p)
    assert position_of(moved, state.order[p - 1]) == 1
    for i, item in enumerate(state.order[: p - 1], start=1):
        assert position_of(moved, item) == i + 1
    for i, item in enumerate(state.order[p:], start=p + 1):
        assert position_of(moved, item) == i


def test_large_costs_are_exact():
    n = k = 2**20
    assert k * n * n == 2**60
    assert access_cost(n, CostModel.FULL) * n * k == 2**60
