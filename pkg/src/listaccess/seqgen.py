"""Request sequence construction: the four repeated-block types and file I/O.

T1 repeats the list order, T2 its reversal, T3 any other permutation and T4 a
sequence of ``q < n`` distinct items; each block is repeated ``k`` times.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional, Sequence, Tuple, Union

from listaccess.core import Item
from listaccess.errors import (
    DuplicateItems,
    ExcludedPermutation,
    InvalidParam,
    NotAPermutation,
    NotASubsequence,
    ParseError,
    RangeError,
    SizeViolation,
)


class SequenceKind(str, Enum):
    T1 = "t1"
    T2 = "t2"
    T3 = "t3"
    T4 = "t4"


@dataclass(frozen=True)
class RequestSequence:
    """Requests against a list of size ``n``.

    ``block_length`` is set for generated sequences so ``serve`` can report
    per-block subtotals.
    """

    requests: Tuple[Item, ...]
    n: int
    block_length: Optional[int] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "requests", tuple(self.requests))
        for item in self.requests:
            if not 1 <= item <= self.n:
                raise RangeError(f"item {item} outside [1, {self.n}]")

    @property
    def m(self) -> int:
        return len(self.requests)

    def __len__(self) -> int:
        return len(self.requests)

    def __iter__(self) -> Iterator[Item]:
        return iter(self.requests)

    def blocks(self) -> Tuple[Tuple[Item, ...], ...]:
        b = self.block_length or self.m
        if b == 0:
            return ()
        return tuple(self.requests[i : i + b] for i in range(0, self.m, b))


def _check_nk(n: int, k: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise InvalidParam(f"n must be an integer >= 1, got {n!r}")
    if not isinstance(k, int) or k < 1:
        raise InvalidParam(f"k must be an integer >= 1, got {k!r}")


def _repeat(block: Sequence[Item], n: int, k: int) -> RequestSequence:
    block = tuple(block)
    return RequestSequence(block * k, n, len(block))


def check_permutation(n: int, perm: Sequence[Item]) -> Tuple[Item, ...]:
    perm = tuple(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise NotAPermutation(f"{perm} is not a permutation of 1..{n}")
    return perm


def check_distinct_items(n: int, items: Sequence[Item]) -> Tuple[Item, ...]:
    items = tuple(items)
    for item in items:
        if not 1 <= item <= n:
            raise RangeError(f"item {item} outside [1, {n}]")
    if len(set(items)) != len(items):
        raise DuplicateItems(f"items must be distinct: {items}")
    return items


def gen_t1(n: int, k: int) -> RequestSequence:
    _check_nk(n, k)
    return _repeat(range(1, n + 1), n, k)


def gen_t2(n: int, k: int) -> RequestSequence:
    _check_nk(n, k)
    return _repeat(range(n, 0, -1), n, k)


def gen_t3(n: int, k: int, perm: Sequence[Item]) -> RequestSequence:
    _check_nk(n, k)
    if n <= 2:
        raise InvalidParam(f"no permutation qualifies for T3 when n = {n} (need n >= 3)")
    perm = check_permutation(n, perm)
    identity = tuple(range(1, n + 1))
    if perm == identity or perm == identity[::-1]:
        raise ExcludedPermutation(f"{perm} is the list order or its reversal")
    return _repeat(perm, n, k)


def gen_t4(n: int, k: int, subseq: Sequence[Item], strict: bool = False) -> RequestSequence:
    """Repeat ``subseq`` (``q < n`` distinct items) ``k`` times.

    By default any order is accepted; ``strict=True`` additionally demands the
    items appear in list order.
    """
    _check_nk(n, k)
    subseq = check_distinct_items(n, subseq)
    q = len(subseq)
    if q < 1:
        raise InvalidParam("subsequence must be non-empty")
    if q >= n:
        raise SizeViolation(f"subsequence size {q} must be < n = {n}")
    if strict and list(subseq) != sorted(subseq):
        raise NotASubsequence(f"{subseq} does not follow the list order")
    return _repeat(subseq, n, k)


def random_permutation(n: int, seed: int, exclude_identity_and_reversal: bool = False) -> Tuple[Item, ...]:
    if not isinstance(n, int) or n < 1:
        raise InvalidParam(f"n must be an integer >= 1, got {n!r}")
    if exclude_identity_and_reversal and n < 3:
        raise InvalidParam(f"every permutation of {n} items is excluded")
    rng = random.Random(seed)
    identity = list(range(1, n + 1))
    reversal = identity[::-1]
    while True:
        perm = identity[:]
        rng.shuffle(perm)
        if not exclude_identity_and_reversal or perm not in (identity, reversal):
            return tuple(perm)


def random_subsequence(n: int, q: int, seed: int, strict: bool = False) -> Tuple[Item, ...]:
    """``q`` distinct items drawn uniformly; sorted into list order when strict."""
    if not isinstance(n, int) or n < 2:
        raise InvalidParam(f"n must be an integer >= 2, got {n!r}")
    if not 1 <= q < n:
        raise SizeViolation(f"q must satisfy 1 <= q < n = {n}, got {q}")
    picked = random.Random(seed).sample(range(1, n + 1), q)
    return tuple(sorted(picked)) if strict else tuple(picked)


@dataclass(frozen=True)
class SequenceSpec:
    kind: SequenceKind
    n: int
    k: int
    perm: Optional[Tuple[Item, ...]] = None
    subseq: Optional[Tuple[Item, ...]] = None
    strict: bool = False

    def build(self) -> RequestSequence:
        kind = SequenceKind(self.kind)
        if kind is SequenceKind.T1:
            return gen_t1(self.n, self.k)
        if kind is SequenceKind.T2:
            return gen_t2(self.n, self.k)
        if kind is SequenceKind.T3:
            if self.perm is None:
                raise InvalidParam("T3 needs a permutation")
            return gen_t3(self.n, self.k, self.perm)
        if self.subseq is None:
            raise InvalidParam("T4 needs a subsequence")
        return gen_t4(self.n, self.k, self.subseq, strict=self.strict)

    @property
    def block(self) -> Tuple[Item, ...]:
        return self.build().blocks()[0]


def serialize_sequence(seq: RequestSequence) -> str:
    return f"n={seq.n}\n" + " ".join(map(str, seq.requests)) + "\n"


def parse_sequence_file(text: Union[str, bytes]) -> Tuple[int, RequestSequence]:
    """Parse the ``n=<size>`` header plus whitespace-separated item ids.

    Lines starting with ``#`` are comments. An empty body is the empty sequence.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not UTF-8: {exc}") from None
    n = None
    requests = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            key, sep, value = line.partition("=")
            if key.strip() != "n" or not sep:
                raise ParseError(f"line {lineno}: expected 'n=<integer>', got {line!r}")
            try:
                n = int(value.strip())
            except ValueError:
                raise ParseError(f"line {lineno}: bad list size {value.strip()!r}") from None
            if n < 1:
                raise ParseError(f"line {lineno}: list size must be >= 1")
            continue
        for token in line.split():
            try:
                item = int(token)
            except ValueError:
                raise ParseError(f"line {lineno}: bad item id {token!r}") from None
            if not 1 <= item <= n:
                raise RangeError(f"line {lineno}: item {item} outside [1, {n}]")
            requests.append(item)
    if n is None:
        raise ParseError("missing 'n=<integer>' header")
    return n, RequestSequence(tuple(requests), n)
