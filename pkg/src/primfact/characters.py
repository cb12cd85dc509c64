"""Irreducible characters of S(n) and content-alphabet generating functions.

Characters come from the Murnaghan-Nakayama border-strip recursion, run on
first-column hook lengths (beta numbers) and memoized on (shape, remaining
class); full tables stay tiny (22 x 22 at n = 8).

The bridge to factorization counts: evaluating a symmetric function f on the
Jucys-Murphy alphabet equals the sum over shapes lam of n of

    f(contents of lam) / hook_product(lam) * chi^lam,

so taking traces against a class C_mu turns the substitution "alphabet ->
contents" into the class-basis coefficients.  Specializing f to the complete
homogeneous family and forming the generating function in z gives

    phi_mu(z) = sum_lam chi^lam(C_mu) / (H_lam * prod over cells (1 - c*z)),

whose z^k coefficient is the number of primitive factorizations of length k
of a permutation of cycle type mu.  For a full cycle the sum collapses onto
hook shapes and phi_(n) has the closed form

    Cat_(n-1) * z^(n-1) / ((1 - 1^2 z^2) ... (1 - (n-1)^2 z^2)).

Two computation paths are kept separate on purpose: coefficient extraction
expands each shape's term as a truncated series (cheap, exact), while the
RationalFunction assembly with polynomial-GCD normalization is used for
display, closed-form checks, and exact evaluation at rational points.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .class_algebra import ClassResolution
from .counting import catalan
from .errors import NonIntegralResultError
from .partitions import (
    Partition,
    contents,
    dimension,
    hook_product,
    partitions_of,
)
from .series import (
    Polynomial,
    PowerSeries,
    RationalFunction,
    geometric_product_series,
)

__all__ = [
    "character",
    "character_table",
    "CharacterTable",
    "hook_character",
    "Complete",
    "Monomial",
    "SymmetricFunction",
    "evaluate_on_contents",
    "class_resolution_via_characters",
    "phi_series",
    "phi_rational",
    "phi_full_cycle_closed",
    "phi_value",
]


def _beta_numbers(lam: tuple[int, ...]) -> tuple[int, ...]:
    length = len(lam)
    return tuple(lam[i] + (length - 1 - i) for i in range(length))


def _partition_from_beta(beta: list[int]) -> tuple[int, ...]:
    beta = sorted(beta, reverse=True)
    length = len(beta)
    return tuple(
        p for i, b in enumerate(beta) if (p := b - (length - 1 - i)) > 0
    )


def _strip_removals(lam: tuple[int, ...], size: int):
    """Yield (shape after removing a border strip of the given size, strip
    height) pairs; in beta numbers a strip removal replaces b by b - size."""
    beta = list(_beta_numbers(lam))
    occupied = set(beta)
    for i, b in enumerate(beta):
        lower = b - size
        if lower < 0 or lower in occupied:
            continue
        height = sum(1 for other in beta if lower < other < b)
        remaining = beta[:i] + [lower] + beta[i + 1 :]
        yield _partition_from_beta(remaining), height


@lru_cache(maxsize=None)
def _character(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not lam:
        return 1 if not mu else 0
    if not mu:
        return 0
    part, rest = mu[0], mu[1:]
    return sum(
        (-1) ** height * _character(smaller, rest)
        for smaller, height in _strip_removals(lam, part)
    )


def character(lam: Partition, mu: Partition) -> int:
    """The irreducible character chi^lam evaluated on the class C_mu.

    >>> character(Partition([3, 1]), Partition([4]))
    -1
    """
    if lam.size != mu.size:
        raise ValueError(f"|{lam}| = {lam.size} != |{mu}| = {mu.size}")
    return _character(tuple(lam), tuple(mu))


def hook_character(n: int, r: int, mu: Partition) -> int:
    """chi of the hook shape (n-r, 1^r) on C_mu; for a full cycle this is
    (-1)^r without any recursion."""
    if not 0 <= r <= n - 1:
        raise ValueError(f"need 0 <= r <= n-1, got r={r}, n={n}")
    if mu == Partition([n]):
        return (-1) ** r
    return character(Partition([n - r] + [1] * r), mu)


@dataclass(frozen=True)
class CharacterTable:
    degree: int
    entries: dict[tuple[Partition, Partition], int]

    def __getitem__(self, key: tuple[Partition, Partition]) -> int:
        return self.entries[key]


@lru_cache(maxsize=None)
def character_table(n: int) -> CharacterTable:
    """The full table chi^lam(C_mu) over all pairs of partitions of n."""
    shapes = partitions_of(n)
    return CharacterTable(
        n,
        {
            (lam, mu): _character(tuple(lam), tuple(mu))
            for lam in shapes
            for mu in shapes
        },
    )


@dataclass(frozen=True)
class Complete:
    """The complete homogeneous symmetric function of the given degree."""

    degree: int


@dataclass(frozen=True)
class Monomial:
    """The monomial symmetric function with exponent pattern ``exponents``."""

    exponents: Partition


SymmetricFunction = Complete | Monomial


def _complete_on(values: list[int], k: int) -> int:
    return int(geometric_product_series(values, k)[k])


def _monomial_on(values: list[int], lam: Partition) -> int:
    """m_lam at concrete values: sum over assignments of lam's parts as
    exponents on distinct positions, one orbit representative per multiset."""
    if lam.length > len(values):
        return 0
    groups: list[tuple[int, int]] = []
    for part in lam:
        if groups and groups[-1][0] == part:
            groups[-1] = (part, groups[-1][1] + 1)
        else:
            groups.append((part, 1))

    def walk(position: int, remaining: list[int], product: int) -> int:
        need = sum(remaining)
        if need == 0:
            return product
        if len(values) - position < need:
            return 0
        total = walk(position + 1, remaining, product)
        for i, (value, _) in enumerate(groups):
            if remaining[i] == 0:
                continue
            remaining[i] -= 1
            total += walk(position + 1, remaining, product * values[position] ** value)
            remaining[i] += 1
        return total

    return walk(0, [m for _, m in groups], 1)


def evaluate_on_contents(f: SymmetricFunction, shape: Partition) -> int:
    """f evaluated on the content multiset of the shape.

    >>> evaluate_on_contents(Complete(2), Partition([2, 1]))
    1
    """
    values = contents(shape)
    if isinstance(f, Complete):
        return _complete_on(values, f.degree)
    return _monomial_on(values, f.exponents)


def class_resolution_via_characters(f: SymmetricFunction, n: int) -> ClassResolution:
    """Class-basis coefficients of f evaluated on the Jucys-Murphy alphabet,
    by the content substitution: coefficient at mu is

        sum over lam of n of  f(contents(lam)) * chi^lam(C_mu) / H_lam.

    Every entry must come out a nonnegative integer (it is a count); a
    fractional or negative entry signals an internal bug.
    """
    shapes = partitions_of(n)
    table = character_table(n)
    weights = {lam: Fraction(evaluate_on_contents(f, lam), hook_product(lam)) for lam in shapes}
    out: dict[Partition, int] = {}
    for mu in shapes:
        value = sum(weights[lam] * table[lam, mu] for lam in shapes)
        if value.denominator != 1 or value < 0:
            raise NonIntegralResultError(
                f"resolution entry at {mu} is {value}, expected a count"
            )
        out[mu] = int(value)
    return ClassResolution(n, out)


def phi_series(mu: Partition, order: int) -> PowerSeries:
    """Generating series of primitive-factorization counts by length for a
    permutation of cycle type mu, to the given truncation order.

    >>> phi_series(Partition([3]), 6).coeffs
    (0, 0, 2, 0, 10, 0, 42)
    """
    n = mu.size
    total = [Fraction(0)] * (order + 1)
    for lam in partitions_of(n):
        chi = character(lam, mu)
        if chi == 0:
            continue
        weight = Fraction(chi, hook_product(lam))
        expansion = geometric_product_series(contents(lam), order)
        for k in range(order + 1):
            total[k] += weight * expansion[k]
    coeffs = []
    for k, value in enumerate(total):
        if value.denominator != 1 or value < 0:
            raise NonIntegralResultError(f"coefficient {k} of phi_{mu} is {value}")
        coeffs.append(int(value))
    return PowerSeries(tuple(coeffs))


def _shape_term(lam: Partition, chi: int) -> RationalFunction:
    den = Polynomial.one()
    for c in contents(lam):
        den = den * Polynomial.of(1, -c)
    num = Polynomial.of(Fraction(chi, hook_product(lam)))
    return RationalFunction.of(num, den)


def phi_rational(mu: Partition) -> RationalFunction:
    """The same generating function as an exact rational function, assembled
    over a common denominator and normalized by polynomial GCD."""
    total = RationalFunction.of(Polynomial.zero(), Polynomial.one())
    for lam in partitions_of(mu.size):
        chi = character(lam, mu)
        if chi != 0:
            total = total + _shape_term(lam, chi)
    return total


def phi_full_cycle_closed(n: int) -> RationalFunction:
    """Closed form for a full cycle: Cat_(n-1) z^(n-1) / prod (1 - i^2 z^2).

    >>> str(phi_full_cycle_closed(3))
    '2*z^2 / (1 - 5*z^2 + 4*z^4)'
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    num = Polynomial.monomial(catalan(n - 1), n - 1)
    den = Polynomial.one()
    for i in range(1, n):
        den = den * Polynomial.of(1, 0, -i * i)
    return RationalFunction.of(num, den)


def phi_value(mu: Partition, z: Fraction) -> Fraction:
    """Exact value of the generating function at a rational point, summed
    term by term; defined whenever 1/z avoids the contents of shapes of n."""
    total = Fraction(0)
    for lam in partitions_of(mu.size):
        chi = character(lam, mu)
        if chi == 0:
            continue
        den = Fraction(hook_product(lam))
        for c in contents(lam):
            den *= 1 - c * z
        total += Fraction(chi) / den
    return total
