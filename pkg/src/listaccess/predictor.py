"""Closed-form MTF totals for repeated-block request sequences (full cost model).

Every total splits into the cost of the first block, served on the initial
list ``(1..n)``, plus ``(k - 1) * b**2`` for the remaining blocks: once a block
of ``b`` distinct items has been served, MTF leaves them at the front in
reverse request order, so each later request is found at position ``b``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from listaccess.core import CostModel, Item, ListState
from listaccess.errors import InvalidParam, SizeViolation
from listaccess.policies import PolicyKind, serve
from listaccess.seqgen import (
    SequenceKind,
    SequenceSpec,
    check_distinct_items,
    check_permutation,
)


@dataclass(frozen=True)
class Prediction:
    total: int
    first_block: int
    stabilized: int
    block_length: int
    k: int

    @property
    def m(self) -> int:
        return self.block_length * self.k

    @property
    def partial_total(self) -> int:
        """Same prediction under the partial cost model (one less per request)."""
        return self.total - self.m

    def for_model(self, model: CostModel) -> int:
        return self.total if CostModel(model) is CostModel.FULL else self.partial_total


def _check_nk(n: int, k: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise InvalidParam(f"n must be an integer >= 1, got {n!r}")
    if not isinstance(k, int) or k < 1:
        raise InvalidParam(f"k must be an integer >= 1, got {k!r}")


def first_block_position_sum(n: int, block: Sequence[Item]) -> int:
    """Sum of pre-access positions when MTF serves ``block`` once on ``(1..n)``.

    Computed by simulation, not by formula.
    """
    block = check_distinct_items(n, block)
    return serve(ListState.initial(n), block, PolicyKind.MTF, CostModel.FULL).total_cost


def predict_t1(n: int, k: int) -> Prediction:
    _check_nk(n, k)
    total = (n * n * (2 * k - 1) + n) // 2
    return Prediction(total, n * (n + 1) // 2, (k - 1) * n * n, n, k)


def predict_t2(n: int, k: int) -> Prediction:
    _check_nk(n, k)
    return Prediction(k * n * n, n * n, (k - 1) * n * n, n, k)


def predict_t3(n: int, k: int, perm: Sequence[Item]) -> Prediction:
    """Valid for every permutation, including the identity and the reversal."""
    _check_nk(n, k)
    perm = check_permutation(n, perm)
    first = first_block_position_sum(n, perm)
    stabilized = (k - 1) * n * n
    return Prediction(first + stabilized, first, stabilized, n, k)


def predict_t4(n: int, k: int, subseq: Sequence[Item]) -> Prediction:
    # Position sum runs over the q requests of one block, not over n.
    _check_nk(n, k)
    subseq = check_distinct_items(n, subseq)
    q = len(subseq)
    if q < 1:
        raise InvalidParam("subsequence must be non-empty")
    if q >= n:
        raise SizeViolation(f"subsequence size {q} must be < n = {n}")
    first = first_block_position_sum(n, subseq)
    stabilized = (k - 1) * q * q
    return Prediction(first + stabilized, first, stabilized, q, k)


def predict(spec: SequenceSpec) -> Prediction:
    kind = SequenceKind(spec.kind)
    if kind is SequenceKind.T1:
        return predict_t1(spec.n, spec.k)
    if kind is SequenceKind.T2:
        return predict_t2(spec.n, spec.k)
    if kind is SequenceKind.T3:
        if spec.perm is None:
            raise InvalidParam("T3 needs a permutation")
        return predict_t3(spec.n, spec.k, spec.perm)
    if spec.subseq is None:
        raise InvalidParam("T4 needs a subsequence")
    return predict_t4(spec.n, spec.k, spec.subseq)
