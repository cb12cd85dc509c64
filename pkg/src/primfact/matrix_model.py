"""Exact Haar-unitary permutation correlators and the factorization identity.

The moment ⟨u_11 conj(u_1pi(1)) ... u_nn conj(u_npi(n))⟩ over the unitary
group U(N) with Haar measure depends only on the cycle type of pi; it equals
the Weingarten function at that class.  Two independent constructions are
implemented:

- gram: build the n! x n! matrix G(sigma, tau) = N^(cycles of sigma^-1 tau)
  and solve G x = e_identity by fraction-free (Bareiss) elimination; x is the
  identity row of G^-1 and holds the value for every class at once.  G is a
  Gram matrix of linearly independent tensors for N >= n, so it is positive
  definite and the elimination never needs pivoting.

- character: the spectral sum
  (1/n!^2) * sum over shapes of dim(lam)^2 * chi^lam(C_mu) / s_lam(1^N),
  with s_lam(1^N) = prod over cells (N + content) / hook_product.

The payoff identity, checked exactly for concrete integer dimensions: for a
permutation of cycle type mu of n and any N >= n,

    (-1)^(n - len(mu)) * N^(2n - len(mu)) * correlator
        = N^(n - len(mu)) * phi_mu(1/N),

whose right side is the convergent series sum over g of
(primitive factorizations of length n - len(mu) + 2g) / N^(2g).

N is always a concrete integer: checking several N values of an identity of
bounded-degree rational functions is as strong as a symbolic proof, and keeps
the linear algebra over plain rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .characters import character_table, phi_value
from .class_algebra import _index
from .partitions import Partition, contents, dimension, hook_product, partitions_of
from .perms import Permutation

__all__ = [
    "WeingartenTable",
    "weingarten_gram",
    "weingarten_character",
    "permutation_correlator",
    "CorrelatorIdentityReport",
    "verify_correlator_identity",
]


@dataclass(frozen=True)
class WeingartenTable:
    """Weingarten values per conjugacy class of S(degree) at a fixed integer
    dimension; class functions by construction."""

    degree: int
    dimension: int
    values: dict[Partition, Fraction]
    method: str

    def __getitem__(self, mu: Partition) -> Fraction:
        return self.values[mu]


def _bareiss_solve(matrix: list[list[int]], rhs: list[int]) -> list[Fraction]:
    """Solve M x = rhs exactly for a matrix with nonzero leading principal
    minors, keeping all intermediates integral (fraction-free elimination)."""
    m = len(matrix)
    a = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    previous_pivot = 1
    for k in range(m - 1):
        pivot = a[k][k]
        if pivot == 0:
            raise ArithmeticError("zero pivot: Gram matrix unexpectedly singular")
        for i in range(k + 1, m):
            row_i, row_k = a[i], a[k]
            factor = row_i[k]
            for j in range(k + 1, m + 1):
                row_i[j] = (pivot * row_i[j] - factor * row_k[j]) // previous_pivot
            row_i[k] = 0
        previous_pivot = pivot
    if a[m - 1][m - 1] == 0:
        raise ArithmeticError("zero pivot: Gram matrix unexpectedly singular")
    x: list[Fraction] = [Fraction(0)] * m
    for i in range(m - 1, -1, -1):
        acc = Fraction(a[i][m])
        for j in range(i + 1, m):
            acc -= a[i][j] * x[j]
        x[i] = acc / a[i][i]
    return x


def _cycles_of_quotient(sigma: tuple[int, ...], tau: tuple[int, ...]) -> int:
    """Number of cycles of sigma^-1 tau, computed without building it."""
    n = len(sigma)
    inv = [0] * (n + 1)
    for i, image in enumerate(sigma, start=1):
        inv[image] = i
    seen = [False] * (n + 1)
    cycles = 0
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cycles += 1
        point = start
        while not seen[point]:
            seen[point] = True
            point = inv[tau[point - 1]]
    return cycles


def _check_degree_dimension(n: int, N: int) -> None:
    if n < 1:
        raise ValueError("degree must be at least 1")
    if N < n:
        raise ValueError(f"need dimension N >= n, got N={N}, n={n}")


@lru_cache(maxsize=None)
def weingarten_gram(n: int, N: int) -> WeingartenTable:
    """Weingarten table from one exact linear solve against the Gram matrix
    G(sigma, tau) = N^(cycles of sigma^-1 tau)."""
    _check_degree_dimension(n, N)
    _self_check()
    return _weingarten_gram_raw(n, N)


def _weingarten_gram_raw(n: int, N: int) -> WeingartenTable:
    index = _index(n)
    perms = index.perms
    powers = [N**c for c in range(n + 1)]
    matrix = [
        [powers[_cycles_of_quotient(sigma, tau)] for tau in perms] for sigma in perms
    ]
    rhs = [0] * len(perms)
    rhs[0] = 1  # identity column of the inverse
    solution = _bareiss_solve(matrix, rhs)
    values: dict[Partition, Fraction] = {}
    for mu, ranks in index.class_ranks.items():
        first = solution[ranks[0]]
        for r in ranks[1:]:
            if solution[r] != first:
                raise ArithmeticError(
                    f"Weingarten values not constant on class {mu}"
                )
        values[mu] = first
    return WeingartenTable(n, N, values, "gram")


@lru_cache(maxsize=None)
def weingarten_character(n: int, N: int) -> WeingartenTable:
    """Weingarten table from the character sum; for N >= n every factor
    N + content is positive, so no term degenerates."""
    _check_degree_dimension(n, N)
    _self_check()
    return _weingarten_character_raw(n, N)


def _weingarten_character_raw(n: int, N: int) -> WeingartenTable:
    table = character_table(n)
    shapes = partitions_of(n)
    schur_at_ones: dict[Partition, Fraction] = {}
    for lam in shapes:
        prod = 1
        for c in contents(lam):
            prod *= N + c
        schur_at_ones[lam] = Fraction(prod, hook_product(lam))
    scale = Fraction(1, factorial(n) ** 2)
    values: dict[Partition, Fraction] = {}
    for mu in shapes:
        total = Fraction(0)
        for lam in shapes:
            total += Fraction(dimension(lam) ** 2) * table[lam, mu] / schur_at_ones[lam]
        values[mu] = scale * total
    return WeingartenTable(n, N, values, "character")


@lru_cache(maxsize=None)
def _self_check() -> bool:
    """Pin the sign and inverse conventions against the two n = 2 closed
    forms 1/(N^2-1) and -1/(N(N^2-1)) before any user computation."""
    for N in (2, 3):
        expected = {
            Partition([1, 1]): Fraction(1, N * N - 1),
            Partition([2]): Fraction(-1, N * (N * N - 1)),
        }
        for build in (_weingarten_gram_raw, _weingarten_character_raw):
            got = build(2, N).values
            if got != expected:
                raise AssertionError(
                    f"Weingarten convention self-check failed for {build.__name__}"
                    f" at N={N}: {got} != {expected}"
                )
    return True


def permutation_correlator(pi: Permutation, N: int, method: str = "gram") -> Fraction:
    """The Haar moment ⟨u_11 conj(u_1pi(1)) ... u_nn conj(u_npi(n))⟩ at
    integer dimension N >= degree(pi); a class function of pi."""
    if method == "gram":
        table = weingarten_gram(pi.degree, N)
    elif method == "character":
        table = weingarten_character(pi.degree, N)
    else:
        raise ValueError(f"unknown method {method!r}")
    return table[pi.cycle_type()]


@dataclass(frozen=True)
class CorrelatorIdentityReport:
    cycle_type: Partition
    dimension: int
    left: Fraction
    right: Fraction

    @property
    def equal(self) -> bool:
        return self.left == self.right


def verify_correlator_identity(
    mu: Partition, N: int, method: str = "gram"
) -> CorrelatorIdentityReport:
    """Compare the rescaled correlator against the exact value of the
    primitive-factorization generating function at z = 1/N.

    left  = (-1)^(n-l) * N^(2n-l) * correlator at class mu
    right = N^(n-l) * phi_mu(1/N)
    """
    n = mu.size
    _check_degree_dimension(n, N)
    ell = mu.length
    if method == "gram":
        table = weingarten_gram(n, N)
    elif method == "character":
        table = weingarten_character(n, N)
    else:
        raise ValueError(f"unknown method {method!r}")
    left = Fraction((-1) ** (n - ell)) * Fraction(N) ** (2 * n - ell) * table[mu]
    right = Fraction(N) ** (n - ell) * phi_value(mu, Fraction(1, N))
    return CorrelatorIdentityReport(mu, N, left, right)
