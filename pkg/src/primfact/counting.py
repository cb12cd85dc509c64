"""Closed-form counting formulas for transposition factorizations.

A factorization pi = (s_1,t_1)...(s_k,t_k) with s_i < t_i is *primitive* when
the larger elements weakly increase: t_1 <= ... <= t_k.  Its *type* is the
partition of k recording how many factors share each larger element.  This
module holds every closed formula; exhaustive and algebraic cross-checks live
in the brute, class_algebra and characters modules.

All arithmetic is exact: integers throughout, rationals only as intermediate
values (and in the sinh-series coefficients, which are honestly rational).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterator

from .errors import NonIntegralResultError
from .partitions import Partition, refinement_sequences
from .series import PowerSeries

__all__ = [
    "catalan",
    "catalan_sequences",
    "sequence_type",
    "refined_catalan",
    "stirling2",
    "stirling2_alternating",
    "central_factorial",
    "central_factorial_alternating",
    "minimal_primitive_by_type",
    "minimal_primitive_total",
    "primitive_full_cycle",
    "primitive_full_cycle_sinh",
    "hurwitz_minimal_transitive",
    "hurwitz_full_cycle_genus",
    "sinh_power_coefficient",
]


def catalan(k: int) -> int:
    """The Catalan number C(2k,k)/(k+1).

    >>> [catalan(k) for k in range(6)]
    [1, 1, 2, 5, 14, 42]
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    return comb(2 * k, k) // (k + 1)


def catalan_sequences(k: int) -> Iterator[tuple[int, ...]]:
    """Weakly increasing sequences i_1 <= ... <= i_k with i_p >= p for p < k
    and i_k = k.  There are exactly catalan(k) of them.

    >>> sorted(catalan_sequences(3))
    [(1, 2, 3), (1, 3, 3), (2, 2, 3), (2, 3, 3), (3, 3, 3)]
    """
    if k == 0:
        yield ()
        return

    def walk(position: int, floor: int) -> Iterator[tuple[int, ...]]:
        if position == k:
            yield (k,)
            return
        for value in range(max(floor, position), k + 1):
            for tail in walk(position + 1, value):
                yield (value,) + tail

    yield from walk(1, 1)


def sequence_type(seq: tuple[int, ...]) -> Partition:
    """Partition of len(seq) recording the multiplicities of distinct values."""
    counts: dict[int, int] = {}
    for value in seq:
        counts[value] = counts.get(value, 0) + 1
    return Partition(counts.values())


def refined_catalan(lam: Partition) -> int:
    """Number of sequences from catalan_sequences(|lam|) whose multiplicity
    type is lam; equals |lam|! / ((|lam|-len(lam)+1)! * prod of m_i(lam)!).

    Summed over all lam of k this gives catalan(k).  The empty partition
    counts 1 (the empty factorization of the identity).

    >>> refined_catalan(Partition([3, 2]))
    5
    >>> refined_catalan(Partition([2, 2, 1]))
    10
    """
    if not lam:
        return 1
    denom = factorial(lam.size - lam.length + 1)
    for value in set(lam):
        denom *= factorial(lam.multiplicity(value))
    return factorial(lam.size) // denom


@lru_cache(maxsize=None)
def stirling2(a: int, b: int) -> int:
    """Number of partitions of an a-element set into b nonempty blocks,
    by the recurrence S(a,b) = S(a-1,b-1) + b*S(a-1,b).
    """
    if not 0 <= b <= a:
        raise ValueError(f"need 0 <= b <= a, got a={a}, b={b}")
    if a == 0:
        return 1
    if b == 0:
        return 0
    lower = stirling2(a - 1, b) if b <= a - 1 else 0
    return stirling2(a - 1, b - 1) + b * lower


def stirling2_alternating(a: int, b: int) -> int:
    """Cross-check for stirling2 via the explicit alternating sum
    sum_j (-1)^(b-j) j^a / (j! (b-j)!); heavy cancellation by design.
    """
    if not 0 <= b <= a:
        raise ValueError(f"need 0 <= b <= a, got a={a}, b={b}")
    total = sum(
        Fraction((-1) ** (b - j) * j**a, factorial(j) * factorial(b - j))
        for j in range(b + 1)
    )
    if total.denominator != 1:
        raise NonIntegralResultError(f"stirling2_alternating({a},{b}) = {total}")
    return int(total)


@lru_cache(maxsize=None)
def central_factorial(a: int, b: int) -> int:
    """Central factorial number T(a,b) = h_(a-b)(1^2, ..., b^2), by the
    recurrence T(a,b) = T(a-1,b-1) + b^2 * T(a-1,b).

    >>> central_factorial(4, 2)
    21
    """
    if not 0 <= b <= a:
        raise ValueError(f"need 0 <= b <= a, got a={a}, b={b}")
    if a == 0:
        return 1
    if b == 0:
        return 0
    lower = central_factorial(a - 1, b) if b <= a - 1 else 0
    return central_factorial(a - 1, b - 1) + b * b * lower


def central_factorial_alternating(a: int, b: int) -> int:
    """Cross-check for central_factorial via the explicit alternating sum
    2 * sum_j (-1)^(b-j) j^(2a) / ((b-j)! (b+j)!).

    The closed sum degenerates at b = 0 (its j = 0 term would double-count
    the empty case), so that column is returned directly.
    """
    if not 0 <= b <= a:
        raise ValueError(f"need 0 <= b <= a, got a={a}, b={b}")
    if b == 0:
        return 1 if a == 0 else 0
    total = 2 * sum(
        Fraction((-1) ** (b - j) * j ** (2 * a), factorial(b - j) * factorial(b + j))
        for j in range(b + 1)
    )
    if total.denominator != 1:
        raise NonIntegralResultError(f"central_factorial_alternating({a},{b}) = {total}")
    return int(total)


def minimal_primitive_by_type(reduced_type: Partition, lam: Partition) -> int:
    """Number of minimal primitive factorizations, of type lam, of any
    permutation with the given reduced cycle type.

    Sums, over all ways of splitting the reduced cycle type's parts so the
    pieces reassemble to lam, the product of refined Catalan numbers of the
    pieces.

    >>> minimal_primitive_by_type(Partition([5, 3]), Partition([3, 2, 2, 1]))
    25
    """
    if lam.size != reduced_type.size:
        raise ValueError(
            f"|{lam}| = {lam.size} != |{reduced_type}| = {reduced_type.size}"
        )
    total = 0
    for blocks in refinement_sequences(lam, reduced_type):
        term = 1
        for block in blocks:
            term *= refined_catalan(block)
        total += term
    return total


def minimal_primitive_total(cycle_type: Partition) -> int:
    """Total number of primitive factorizations of a permutation of the given
    (non-reduced) cycle type into the minimal number n - len(mu) of
    transpositions: the product of Cat_(mu_i - 1).

    >>> minimal_primitive_total(Partition([3]))
    2
    """
    result = 1
    for part in cycle_type:
        result *= catalan(part - 1)
    return result


def primitive_full_cycle(n: int, g: int) -> int:
    """Primitive factorizations of an n-cycle into n-1+2g transpositions:
    Cat_(n-1) * T(n-1+g, n-1).

    >>> primitive_full_cycle(3, 1)
    10
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if g < 0:
        raise ValueError("g must be nonnegative")
    return catalan(n - 1) * central_factorial(n - 1 + g, n - 1)


def hurwitz_minimal_transitive(cycle_type: Partition) -> int:
    """Number of minimal transitive factorizations of a permutation of the
    given cycle type mu of n into n + len(mu) - 2 transpositions:

        (n + l - 2)! * n^(l-3) * prod mu_i^mu_i / (mu_i - 1)!

    The n^(l-3) factor can be a proper fraction mid-computation; the final
    value is integral and this is asserted.

    >>> hurwitz_minimal_transitive(Partition([4]))
    16
    """
    if not cycle_type:
        raise ValueError("cycle type must be a partition of n >= 1")
    n = cycle_type.size
    ell = cycle_type.length
    value = Fraction(factorial(n + ell - 2)) * Fraction(n) ** (ell - 3)
    for part in cycle_type:
        value *= Fraction(part**part, factorial(part - 1))
    if value.denominator != 1:
        raise NonIntegralResultError(f"hurwitz count for {cycle_type} = {value}")
    return int(value)


def sinh_series(order: int) -> PowerSeries:
    """The even series sinh(z/2)/(z/2) = sum_j z^(2j) / (4^j (2j+1)!),
    truncated at the given order."""
    coeffs: list[Fraction | int] = [0] * (order + 1)
    for j in range(0, order // 2 + 1):
        coeffs[2 * j] = Fraction(1, 4**j * factorial(2 * j + 1))
    coeffs[0] = 1
    return PowerSeries(tuple(coeffs))


def sinh_power_coefficient(m: int, g: int) -> Fraction:
    """(2g)! times the z^(2g) coefficient of (sinh(z/2)/(z/2))^m, exactly.

    Truncating at order 2g is lossless for this extraction.

    >>> sinh_power_coefficient(2, 1)
    Fraction(1, 6)
    """
    if m < 0 or g < 0:
        raise ValueError("m and g must be nonnegative")
    series = sinh_series(2 * g).power(m)
    return Fraction(factorial(2 * g) * Fraction(series[2 * g]))


def hurwitz_full_cycle_genus(n: int, g: int) -> int:
    """Transitive factorizations of an n-cycle into n-1+2g transpositions:

        n^(n-2) * n^(2g) * C(n-1+2g, n-1) * [z^(2g)/(2g)!] (sinh(z/2)/(z/2))^(n-1)

    >>> hurwitz_full_cycle_genus(3, 1)
    27
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    value = (
        Fraction(n) ** (n - 2)
        * n ** (2 * g)
        * comb(n - 1 + 2 * g, n - 1)
        * sinh_power_coefficient(n - 1, g)
    )
    if value.denominator != 1:
        raise NonIntegralResultError(f"hurwitz_full_cycle_genus({n},{g}) = {value}")
    return int(value)


def primitive_full_cycle_sinh(n: int, g: int) -> int:
    """Primitive factorizations of an n-cycle into n-1+2g transpositions via
    the sinh form:

        Cat_(n-1) * C(2n-2+2g, 2n-2) * [z^(2g)/(2g)!] (sinh(z/2)/(z/2))^(2n-2)

    Agrees with primitive_full_cycle for all n, g.

    >>> primitive_full_cycle_sinh(3, 1)
    10
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    value = (
        catalan(n - 1)
        * comb(2 * n - 2 + 2 * g, 2 * n - 2)
        * sinh_power_coefficient(2 * n - 2, g)
    )
    if value.denominator != 1:
        raise NonIntegralResultError(f"primitive_full_cycle_sinh({n},{g}) = {value}")
    return int(value)
