"""Integer partitions and Young-diagram data: hooks, contents, split sequences.

A partition is a weakly decreasing tuple of positive integers.  The empty
partition is a first-class value (it is the reduced cycle type of the
identity).  Text format: comma-separated parts, ``"5,3"``; parts given in any
order are canonicalized by sorting descending.  The empty partition renders
as ``"∅"`` and is accepted as the empty string.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator

from .errors import UsageError

__all__ = [
    "Partition",
    "partitions_of",
    "refinement_sequences",
    "hook_product",
    "contents",
    "dimension",
    "class_size",
    "parse_partition",
]


class Partition(tuple):
    """Weakly decreasing tuple of positive integers, possibly empty.

    >>> Partition([2, 3, 1])
    Partition((3, 2, 1))
    >>> Partition().size
    0
    """

    def __new__(cls, parts: Iterable[int] = ()):
        canon = tuple(sorted((int(p) for p in parts), reverse=True))
        if canon and canon[-1] < 1:
            raise ValueError(f"parts must be positive: {canon}")
        return super().__new__(cls, canon)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicity(self, value: int) -> int:
        return sum(1 for p in self if p == value)

    def reduced(self) -> "Partition":
        """Subtract one from each part, dropping the parts that reach zero."""
        return Partition(p - 1 for p in self if p > 1)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else "∅"


def parse_partition(text: str) -> Partition:
    """Parse ``"5,3"``; the empty string (or ``"∅"``) is the empty partition."""
    text = text.strip()
    if text in ("", "∅"):
        return Partition()
    try:
        parts = [int(p) for p in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"bad partition text {text!r}") from exc
    if any(p < 1 for p in parts):
        raise UsageError(f"parts must be positive: {text!r}")
    return Partition(parts)


@lru_cache(maxsize=None)
def partitions_of(k: int) -> tuple[Partition, ...]:
    """All partitions of k, in reverse lexicographic order.

    >>> [tuple(p) for p in partitions_of(4)]
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if k < 0:
        raise ValueError("k must be nonnegative")

    def gen(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for head in range(min(remaining, cap), 0, -1):
            for tail in gen(remaining - head, head):
                yield (head,) + tail

    return tuple(Partition(parts) for parts in gen(k, k))


def refinement_sequences(
    lam: Partition, mu: Partition
) -> list[tuple[Partition, ...]]:
    """All ordered tuples (b_1, ..., b_len(mu)) with b_i a partition of mu_i
    and the multiset union of all blocks equal to lam.

    Blocks are ordered by mu's (descending) parts; equal parts of mu give
    distinct tuple slots.  The result is empty exactly when lam does not
    refine mu.

    >>> seqs = refinement_sequences(Partition([3, 2, 2, 1]), Partition([5, 3]))
    >>> sorted(tuple(map(tuple, s)) for s in seqs)
    [((2, 2, 1), (3,)), ((3, 2), (2, 1))]
    """
    if lam.size != mu.size:
        raise ValueError(f"size mismatch: |{lam}| = {lam.size} != |{mu}| = {mu.size}")

    def sub_partitions(pool: tuple[int, ...], target: int) -> Iterator[tuple[int, ...]]:
        # Distinct sub-multisets of pool summing to target; pool is sorted
        # descending so each choice comes out as a partition.
        def walk(idx: int, remaining: int) -> Iterator[tuple[int, ...]]:
            if remaining == 0:
                yield ()
                return
            if idx == len(pool) or remaining < 0:
                return
            part = pool[idx]
            run_end = idx
            while run_end < len(pool) and pool[run_end] == part:
                run_end += 1
            copies = run_end - idx
            for take in range(min(copies, remaining // part), -1, -1):
                for rest in walk(run_end, remaining - take * part):
                    yield (part,) * take + rest

        yield from walk(0, target)

    results: list[tuple[Partition, ...]] = []

    def assign(pool: tuple[int, ...], block_idx: int, acc: list[Partition]) -> None:
        if block_idx == len(mu):
            if not pool:
                results.append(tuple(acc))
            return
        for chosen in sub_partitions(pool, mu[block_idx]):
            remaining = list(pool)
            for part in chosen:
                remaining.remove(part)
            acc.append(Partition(chosen))
            assign(tuple(remaining), block_idx + 1, acc)
            acc.pop()

    assign(tuple(lam), 0, [])
    return results


def conjugate(lam: Partition) -> Partition:
    """The transposed Young diagram."""
    if not lam:
        return Partition()
    cols = [0] * lam[0]
    for part in lam:
        for j in range(part):
            cols[j] += 1
    return Partition(cols)


def hook_product(lam: Partition) -> int:
    """Product of all hook lengths of lam; 1 for the empty partition.

    >>> hook_product(Partition([2, 2]))
    12
    """
    conj = conjugate(lam)
    result = 1
    for i, part in enumerate(lam, start=1):
        for j in range(1, part + 1):
            result *= (part - j) + (conj[j - 1] - i) + 1
    return result


def contents(lam: Partition) -> list[int]:
    """Multiset of cell contents column-minus-row, row by row.

    >>> contents(Partition([2, 2]))
    [0, 1, -1, 0]
    """
    return [j - i for i, part in enumerate(lam, start=1) for j in range(1, part + 1)]


def dimension(lam: Partition) -> int:
    """Number of standard Young tableaux of shape lam: |lam|!/hook_product."""
    return factorial(lam.size) // hook_product(lam)


def class_size(mu: Partition) -> int:
    """Size of the conjugacy class of cycle type mu in S(|mu|).

    >>> class_size(Partition([2, 1]))
    3
    """
    n = mu.size
    z = 1
    for value, group in itertools.groupby(mu):
        m = len(list(group))
        z *= value**m * factorial(m)
    return factorial(n) // z
