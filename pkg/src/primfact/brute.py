"""Exhaustive-enumeration oracles for factorization counts.

Everything here is deliberately transparent: depth-first search with no
counting shortcuts, so the formula and class-algebra modules have an
independent reference to be checked against.

Primitive search order: outer loop over the weakly increasing larger elements
t, inner loop over the smaller elements s < t, with the running product
maintained incrementally (one image swap per node).  The tree has exactly
h_k(1, ..., n-1) leaves.

Every search takes a node budget (default 10^8) and fails loudly with
BudgetExceededError when it would overrun; results are never silently
truncated.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import BudgetExceededError
from .partitions import Partition
from .perms import Permutation, Transposition, identity, product

DEFAULT_BUDGET = 10**8

__all__ = [
    "FactorizationWitness",
    "count_primitive",
    "count_primitive_by_type",
    "enumerate_primitive",
    "count_minimal_transitive",
    "count_all_factorizations",
    "primitive_leaf_count",
    "DEFAULT_BUDGET",
]


@dataclass(frozen=True)
class FactorizationWitness:
    """A concrete factorization: ordered transposition factors and their target."""

    factors: tuple[Transposition, ...]
    target: Permutation

    def is_primitive(self) -> bool:
        larges = [t.large for t in self.factors]
        return all(a <= b for a, b in zip(larges, larges[1:]))

    def validates(self) -> bool:
        """Re-compose the factors (rightmost applied first) and compare."""
        return product(self.factors, self.target.degree) == self.target


class _Budget:
    __slots__ = ("nodes", "limit")

    def __init__(self, limit: int):
        self.nodes = 0
        self.limit = limit

    def spend(self, amount: int = 1) -> None:
        self.nodes += amount
        if self.nodes > self.limit:
            raise BudgetExceededError(self.nodes, self.limit)


def primitive_leaf_count(n: int, k: int) -> int:
    """Exact number of leaves of the primitive search tree for S(n), length k:
    the complete homogeneous polynomial h_k(1, ..., n-1)."""
    coeffs = [1] + [0] * k
    for x in range(1, n):
        for j in range(1, k + 1):
            coeffs[j] += x * coeffs[j - 1]
    return coeffs[k]


def _primitive_dfs(
    pi: Permutation, k: int, budget: _Budget
) -> Iterator[tuple[tuple[int, int], ...]]:
    """Yield the (s, t) factor sequences of the primitive factorizations of pi
    of length exactly k."""
    n = pi.degree
    images = list(range(1, n + 1))
    target = list(pi.images)
    chosen: list[tuple[int, int]] = []

    def walk(position: int, min_t: int) -> Iterator[tuple[tuple[int, int], ...]]:
        if position == k:
            if images == target:
                yield tuple(chosen)
            return
        for t in range(min_t, n + 1):
            for s in range(1, t):
                budget.spend()
                images[s - 1], images[t - 1] = images[t - 1], images[s - 1]
                chosen.append((s, t))
                yield from walk(position + 1, t)
                chosen.pop()
                images[s - 1], images[t - 1] = images[t - 1], images[s - 1]

    yield from walk(0, 2)


def count_primitive(pi: Permutation, k: int, budget: int = DEFAULT_BUDGET) -> int:
    """Number of primitive factorizations of pi into exactly k transpositions.

    >>> from .perms import parse_permutation
    >>> count_primitive(parse_permutation("(1 2 3)"), 2)
    2
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    tracker = _Budget(budget)
    return sum(1 for _ in _primitive_dfs(pi, k, tracker))


def count_primitive_by_type(
    pi: Permutation, lam: Partition, budget: int = DEFAULT_BUDGET
) -> int:
    """Number of primitive factorizations of pi whose multiset of
    larger-element frequencies sorts to lam."""
    tracker = _Budget(budget)
    count = 0
    for factors in _primitive_dfs(pi, lam.size, tracker):
        # t's weakly increase, so frequencies are the run lengths.
        runs: list[int] = []
        previous = None
        for _, t in factors:
            if t == previous:
                runs[-1] += 1
            else:
                runs.append(1)
                previous = t
        if Partition(runs) == lam:
            count += 1
    return count


def enumerate_primitive(
    pi: Permutation, k: int, budget: int = DEFAULT_BUDGET
) -> list[FactorizationWitness]:
    """The full list of primitive factorizations of pi of length k."""
    tracker = _Budget(budget)
    return [
        FactorizationWitness(tuple(Transposition(s, t) for s, t in factors), pi)
        for factors in _primitive_dfs(pi, k, tracker)
    ]


def standard_representative(mu: Partition) -> Permutation:
    """The permutation with cycles on consecutive blocks {1..mu_1},
    {mu_1+1..mu_1+mu_2}, ...; any representative works by centrality."""
    if not mu:
        raise ValueError("cycle type must be a partition of n >= 1")
    images = []
    start = 1
    for part in mu:
        block = list(range(start, start + part))
        images.extend(block[1:] + block[:1])
        start += part
    return Permutation(tuple(images))


def count_minimal_transitive(mu: Partition, budget: int = DEFAULT_BUDGET) -> int:
    """Number of sequences of n + len(mu) - 2 transpositions whose product is
    a fixed permutation of cycle type mu and whose factors connect all of
    {1..n} (transitivity, checked by union-find over the factor supports).

    >>> count_minimal_transitive(Partition([3]))
    3
    """
    n = mu.size
    length = n + mu.length - 2
    target = list(standard_representative(mu).images)
    pairs = [(s, t) for t in range(2, n + 1) for s in range(1, t)]
    tracker = _Budget(budget)
    images = list(range(1, n + 1))
    chosen: list[tuple[int, int]] = []
    count = 0

    def transitive() -> bool:
        parent = list(range(n + 1))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        components = n
        for s, t in chosen:
            rs, rt = find(s), find(t)
            if rs != rt:
                parent[rs] = rt
                components -= 1
        return components == 1

    def walk(position: int) -> None:
        nonlocal count
        if position == length:
            if images == target and transitive():
                count += 1
            return
        for s, t in pairs:
            tracker.spend()
            images[s - 1], images[t - 1] = images[t - 1], images[s - 1]
            chosen.append((s, t))
            walk(position + 1)
            chosen.pop()
            images[s - 1], images[t - 1] = images[t - 1], images[s - 1]

    if length == 0:
        return 1 if images == target and n == 1 else 0
    walk(0)
    return count


def count_all_factorizations(pi: Permutation, k: int) -> int:
    """Number of ordered sequences of k transpositions with product pi, with
    no constraint at all, by the transfer-matrix recursion over S(n)."""
    n = pi.degree
    pairs = [(s, t) for t in range(2, n + 1) for s in range(1, t)]
    weights: dict[tuple[int, ...], int] = {identity(n).images: 1}
    for _ in range(k):
        step: dict[tuple[int, ...], int] = {}
        for images, ways in weights.items():
            for s, t in pairs:
                moved = list(images)
                moved[s - 1], moved[t - 1] = moved[t - 1], moved[s - 1]
                key = tuple(moved)
                step[key] = step.get(key, 0) + ways
        weights = step
    return weights.get(pi.images, 0)
