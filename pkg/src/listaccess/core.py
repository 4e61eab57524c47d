"""List state, access costs and the free-exchange move primitives.

Positions are 1-based everywhere: the front of the list is position 1.
Items are plain integers; the item initially at position ``i`` has id ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, List, Tuple

from listaccess.errors import InvalidParam, InvalidPosition, ItemNotFound

Item = int

# Cost of swapping two adjacent items outside a free exchange. None of the
# implemented policies pays it, but results carry a reorganization field.
PAID_EXCHANGE_COST = 1


class CostModel(str, Enum):
    FULL = "full"
    PARTIAL = "partial"


@dataclass(frozen=True)
class ListState:
    """An ordered sequence of distinct items, front first."""

    order: Tuple[Item, ...]

    def __post_init__(self) -> None:
        order = tuple(self.order)
        object.__setattr__(self, "order", order)
        if not order:
            raise InvalidParam("a list needs at least one item")
        if len(set(order)) != len(order):
            raise InvalidParam(f"list items must be distinct: {order}")

    @classmethod
    def initial(cls, n: int) -> "ListState":
        """The configuration ``(1, 2, ..., n)``."""
        if n < 1:
            raise InvalidParam(f"list size must be >= 1, got {n}")
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.order)

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self) -> Iterator[Item]:
        return iter(self.order)

    def __contains__(self, item: object) -> bool:
        return item in self.order


def position_of(state: ListState, item: Item) -> int:
    try:
        return state.order.index(item) + 1
    except ValueError:
        raise ItemNotFound(f"item {item!r} is not in the list") from None


def access_cost(position: int, model: CostModel = CostModel.FULL) -> int:
    """Cost of touching the item at ``position``.

    The full model charges the position itself; the partial model charges
    the number of comparisons before the hit, i.e. ``position - 1``.
    """
    if position < 1:
        raise InvalidPosition(f"position must be >= 1, got {position}")
    model = CostModel(model)
    return position if model is CostModel.FULL else position - 1


def _check_position(n: int, position: int) -> None:
    if not 1 <= position <= n:
        raise InvalidPosition(f"position {position} outside [1, {n}]")


def shift_forward(order: List[Item], position: int, target: int) -> None:
    """In-place: move ``order[position]`` to ``target`` (both 1-based).

    No validation; callers own the list and have already checked the range.
    """
    if target == position:
        return
    item = order[position - 1]
    order[target:position] = order[target - 1 : position - 1]
    order[target - 1] = item


def move_forward_to(state: ListState, position: int, target: int) -> ListState:
    """Free exchange: move the item at ``position`` forward to ``target``.

    Items formerly at ``target .. position-1`` each slide back by one.
    """
    _check_position(state.n, position)
    if not 1 <= target <= position:
        raise InvalidPosition(
            f"target {target} must satisfy 1 <= target <= position ({position})"
        )
    order = list(state.order)
    shift_forward(order, position, target)
    return ListState(tuple(order))


def move_to_front(state: ListState, position: int) -> ListState:
    _check_position(state.n, position)
    return move_forward_to(state, position, 1)


def transpose_forward(state: ListState, position: int) -> ListState:
    """Swap the item at ``position`` with its predecessor (no-op at the front)."""
    _check_position(state.n, position)
    return move_forward_to(state, position, max(1, position - 1))

