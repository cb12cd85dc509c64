"""The group algebra of S(n) over exact rationals and Jucys-Murphy machinery.

A GroupAlgebraVector is a dense array of n! exact coefficients indexed by the
lexicographic rank of the image sequence.  The Jucys-Murphy element J_k is the
sum of the transpositions (1,k), ..., (k-1,k), with J_1 = 0; they commute, and
every symmetric function of J_1, ..., J_n lands in the center of the algebra.

Multiplication by J_t is implemented as t-1 coefficient-array shuffles (one per
transposition), never as generic algebra multiplication, so one DP step costs
(t-1) * n! additions.  The complete homogeneous evaluation uses

    H(t, j) = H(t-1, j) + H(t, j-1) * J_t

over t = 2..n, j = 0..k.  Resolving a central vector into the conjugacy-class
basis then reads off primitive-factorization counts: the coefficient of the
class of cycle type mu in h_k is the number of primitive factorizations of any
permutation of that type into k transpositions, and the monomial evaluation
refines the count by factorization type.

Coefficients stay plain integers in these evaluations; Fractions are accepted
anywhere and mix freely (both are exact rationals).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Union

from .errors import CentralityError
from .partitions import Partition
from .perms import Permutation

Scalar = Union[int, Fraction]

__all__ = [
    "GroupAlgebraVector",
    "ClassResolution",
    "jm_element",
    "complete_homogeneous_jm",
    "monomial_jm",
    "resolve_to_classes",
    "primitive_count_by_length",
    "primitive_count_by_type",
]


class _SymmetricGroupIndex:
    """Shared read-only tables for S(n): lex-ranked permutations, their cycle
    types, and the rank shuffle of right multiplication by each transposition."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("degree must be at least 1")
        self.n = n
        self.perms: list[tuple[int, ...]] = [
            images for images in itertools.permutations(range(1, n + 1))
        ]
        self.rank: dict[tuple[int, ...], int] = {
            images: r for r, images in enumerate(self.perms)
        }
        self.cycle_type_of_rank: list[Partition] = [
            Permutation(images).cycle_type() for images in self.perms
        ]
        self.class_ranks: dict[Partition, list[int]] = {}
        for r, ct in enumerate(self.cycle_type_of_rank):
            self.class_ranks.setdefault(ct, []).append(r)
        self._right_mult: dict[tuple[int, int], list[int]] = {}

    def right_mult_table(self, s: int, t: int) -> list[int]:
        """rank -> rank of (permutation * (s,t)); swaps image positions s, t."""
        key = (s, t)
        table = self._right_mult.get(key)
        if table is None:
            table = []
            for images in self.perms:
                moved = list(images)
                moved[s - 1], moved[t - 1] = moved[t - 1], moved[s - 1]
                table.append(self.rank[tuple(moved)])
            self._right_mult[key] = table
        return table


@lru_cache(maxsize=None)
def _index(n: int) -> _SymmetricGroupIndex:
    return _SymmetricGroupIndex(n)


@dataclass
class GroupAlgebraVector:
    """Element of the rational group algebra of S(degree), dense over ranks."""

    degree: int
    coeffs: list[Scalar]

    def __post_init__(self):
        if len(self.coeffs) != factorial(self.degree):
            raise ValueError(
                f"need {factorial(self.degree)} coefficients, got {len(self.coeffs)}"
            )

    @staticmethod
    def zero(n: int) -> "GroupAlgebraVector":
        return GroupAlgebraVector(n, [0] * factorial(n))

    @staticmethod
    def unit(n: int) -> "GroupAlgebraVector":
        v = GroupAlgebraVector.zero(n)
        v.coeffs[0] = 1  # the identity is lexicographically first
        return v

    def copy(self) -> "GroupAlgebraVector":
        return GroupAlgebraVector(self.degree, list(self.coeffs))

    def coefficient_of(self, pi: Permutation) -> Scalar:
        index = _index(self.degree)
        return self.coeffs[index.rank[pi.images]]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other: "GroupAlgebraVector") -> "GroupAlgebraVector":
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        return GroupAlgebraVector(
            self.degree, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupAlgebraVector):
            return NotImplemented
        return self.degree == other.degree and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def mult_jm(self, t: int) -> "GroupAlgebraVector":
        """Right-multiply by J_t = (1,t) + ... + (t-1,t); zero when t = 1."""
        if not 1 <= t <= self.degree:
            raise ValueError(f"J_{t} does not live in S({self.degree})")
        index = _index(self.degree)
        out = [0] * len(self.coeffs)
        for s in range(1, t):
            table = index.right_mult_table(s, t)
            for r, c in enumerate(self.coeffs):
                if c != 0:
                    out[table[r]] += c
        return GroupAlgebraVector(self.degree, out)


@dataclass(frozen=True)
class ClassResolution:
    """Coefficients of a central vector on the conjugacy-class sums C_mu."""

    degree: int
    coefficients: dict[Partition, Scalar]

    def __getitem__(self, mu: Partition) -> Scalar:
        return self.coefficients[mu]


def jm_element(k: int, n: int) -> GroupAlgebraVector:
    """The Jucys-Murphy element J_k in S(n); the zero vector for k = 1."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    return GroupAlgebraVector.unit(n).mult_jm(k)


def complete_homogeneous_jm(k: int, n: int) -> GroupAlgebraVector:
    """h_k evaluated on the Jucys-Murphy alphabet: the sum over weakly
    increasing 2 <= t_1 <= ... <= t_k <= n of the products J_t1 ... J_tk.

    The coefficient of a permutation pi is the number of its primitive
    factorizations into k transpositions.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    rows = [GroupAlgebraVector.unit(n)] + [GroupAlgebraVector.zero(n) for _ in range(k)]
    for t in range(2, n + 1):
        for j in range(1, k + 1):
            rows[j] = rows[j] + rows[j - 1].mult_jm(t)
    return rows[k]


def monomial_jm(lam: Partition, n: int) -> GroupAlgebraVector:
    """m_lam evaluated on the Jucys-Murphy alphabet: the sum over assignments
    of lam's parts (as exponents) to distinct elements among J_2, ..., J_n.

    Zero when lam has more parts than there are nonzero Jucys-Murphy
    elements, because the alphabet's zeros annihilate those monomials.  The
    coefficient of pi is the number of its primitive factorizations of type
    lam.
    """
    if lam.length > n - 1:
        return GroupAlgebraVector.zero(n)
    groups = [
        (value, len(list(grp))) for value, grp in itertools.groupby(lam)
    ]
    total = GroupAlgebraVector.zero(n)

    def walk(t: int, remaining: list[int], vector: GroupAlgebraVector) -> None:
        nonlocal total
        need = sum(remaining)
        if need == 0:
            total = total + vector
            return
        if n - t + 1 < need:  # not enough variables left
            return
        walk(t + 1, remaining, vector)
        for i, (value, _) in enumerate(groups):
            if remaining[i] == 0:
                continue
            remaining[i] -= 1
            powered = vector
            for _ in range(value):
                powered = powered.mult_jm(t)
            walk(t + 1, remaining, powered)
            remaining[i] += 1

    walk(2, [m for _, m in groups], GroupAlgebraVector.unit(n))
    return total


def resolve_to_classes(v: GroupAlgebraVector) -> ClassResolution:
    """Express a central vector over the class sums; raises CentralityError
    (naming two same-class permutations with differing coefficients) if the
    vector is not constant on some conjugacy class."""
    index = _index(v.degree)
    out: dict[Partition, Scalar] = {}
    for mu, ranks in index.class_ranks.items():
        first = v.coeffs[ranks[0]]
        for r in ranks[1:]:
            if v.coeffs[r] != first:
                raise CentralityError(
                    Permutation(index.perms[ranks[0]]),
                    Permutation(index.perms[r]),
                    first,
                    v.coeffs[r],
                )
        out[mu] = first
    return ClassResolution(v.degree, out)


def primitive_count_by_length(k: int, mu: Partition) -> int:
    """Primitive factorizations into k transpositions of a permutation of
    cycle type mu, via the class-algebra route."""
    n = mu.size
    value = resolve_to_classes(complete_homogeneous_jm(k, n))[mu]
    return int(value)


def primitive_count_by_type(lam: Partition, mu: Partition) -> int:
    """Primitive factorizations of type lam of a permutation of cycle type
    mu, via the class-algebra route."""
    n = mu.size
    value = resolve_to_classes(monomial_jm(lam, n))[mu]
    return int(value)
