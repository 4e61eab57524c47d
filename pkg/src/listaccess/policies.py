"""MTF, TRANS and FC list accessing policies and the serve engine."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from enum import Enum
from typing import Dict, Iterable, List, Optional, Tuple

from listaccess.core import CostModel, Item, ListState, access_cost, position_of, shift_forward
from listaccess.errors import BlockMismatch, InvalidParam, ItemNotFound

FrequencyTable = Dict[Item, int]


class PolicyKind(str, Enum):
    MTF = "mtf"
    TRANS = "trans"
    FC = "fc"


def frequency_table(state: ListState) -> FrequencyTable:
    """Fresh FC counters: zero for every item of ``state``."""
    return {item: 0 for item in state}


def _reorganize(
    kind: PolicyKind, order: List[Item], freq: FrequencyTable, position: int
) -> None:
    # In-place on a privately owned list; ``position`` is the pre-access one.
    if kind is PolicyKind.MTF:
        shift_forward(order, position, 1)
    elif kind is PolicyKind.TRANS:
        if position > 1:
            order[position - 2], order[position - 1] = order[position - 1], order[position - 2]
    else:
        item = order[position - 1]
        count = freq[item] + 1
        freq[item] = count
        # Stop behind the last item whose count is >= the new count, so ties
        # keep their relative order and the item moves as little as possible.
        target = position
        while target > 1 and freq[order[target - 2]] < count:
            target -= 1
        shift_forward(order, position, target)


def policy_step(
    kind: PolicyKind,
    state: ListState,
    freq: Optional[FrequencyTable],
    item: Item,
) -> Tuple[ListState, FrequencyTable]:
    """Serve one access to ``item`` and return the reorganized list and counters.

    Inputs are not mutated. ``freq`` may be None for MTF/TRANS; for FC a
    missing table is treated as all-zero.
    """
    kind = PolicyKind(kind)
    position = position_of(state, item)
    table = dict(freq) if freq is not None else frequency_table(state)
    order = list(state.order)
    _reorganize(kind, order, table, position)
    return ListState(tuple(order)), table


@dataclass(frozen=True)
class RequestRecord:
    j: int
    item: Item
    position: int
    cost: int


@dataclass(frozen=True)
class SimulationResult:
    total_cost: int
    per_request: Tuple[RequestRecord, ...]
    block_subtotals: Optional[Tuple[int, ...]]
    final_list: ListState
    reorganization_cost: int = 0

    @property
    def access_cost(self) -> int:
        return self.total_cost - self.reorganization_cost

    @property
    def positions(self) -> Tuple[int, ...]:
        return tuple(r.position for r in self.per_request)

    @property
    def costs(self) -> Tuple[int, ...]:
        return tuple(r.cost for r in self.per_request)

    def to_json(self) -> str:
        data = asdict(self)
        data["final_list"] = list(self.final_list.order)
        return json.dumps(data, sort_keys=True, separators=(",", ":"))


def serve(
    initial: ListState,
    sequence: Iterable[Item],
    kind: PolicyKind = PolicyKind.MTF,
    model: CostModel = CostModel.FULL,
    block_length: Optional[int] = None,
) -> SimulationResult:
    """Serve ``sequence`` on ``initial`` and return the full cost trace.

    For every request the pre-access position is recorded, the access is
    charged under ``model`` and then the policy reorganizes the list with a
    free exchange. ``block_length`` only affects bookkeeping: when given (or
    carried by a ``RequestSequence``) the trace is also summed per block.
    """
    kind = PolicyKind(kind)
    model = CostModel(model)
    if block_length is None:
        block_length = getattr(sequence, "block_length", None)
    requests = tuple(sequence)
    m = len(requests)
    if block_length is not None:
        if block_length < 1:
            raise InvalidParam(f"block length must be >= 1, got {block_length}")
        if m % block_length:
            raise BlockMismatch(f"block length {block_length} does not divide {m}")

    order = list(initial.order)
    index = {item: i for i, item in enumerate(order)}
    for item in requests:
        if item not in index:
            raise ItemNotFound(f"request for item {item!r} not in the list")
    freq = frequency_table(initial)

    records = []
    total = 0
    for j, item in enumerate(requests, start=1):
        position = order.index(item) + 1
        cost = access_cost(position, model)
        total += cost
        records.append(RequestRecord(j, item, position, cost))
        _reorganize(kind, order, freq, position)

    subtotals = None
    if block_length is not None:
        subtotals = tuple(
            sum(r.cost for r in records[start : start + block_length])
            for start in range(0, m, block_length)
        )
    return SimulationResult(
        total_cost=total,
        per_request=tuple(records),
        block_subtotals=subtotals,
        final_list=ListState(tuple(order)),
    )
