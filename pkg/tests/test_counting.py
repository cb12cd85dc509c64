"""Closed-form counting formulas against independent oracles."""

import itertools
from collections import Counter
from fractions import Fraction
from math import comb, factorial

import pytest

from primfact import counting
from primfact.partitions import Partition, partitions_of


def set_partitions(items: tuple, blocks: int):
    """Enumerate partitions of a set into a given number of nonempty blocks."""
    if not items:
        if blocks == 0:
            yield []
        return
    first, rest = items[0], items[1:]
    for sub in set_partitions(rest, blocks - 1):
        yield [[first]] + sub
    for sub in set_partitions(rest, blocks):
        for i in range(len(sub)):
            yield sub[:i] + [[first] + sub[i]] + sub[i + 1 :]


def h_monomials(values: list[int], degree: int) -> int:
    """h_degree by direct summation over weakly increasing index tuples."""
    return sum(
        prod_of(combo)
        for combo in itertools.combinations_with_replacement(values, degree)
    )


def prod_of(vals) -> int:
    result = 1
    for v in vals:
        result *= v
    return result


class TestCatalan:
    def test_small_values(self):
        assert [counting.catalan(k) for k in range(7)] == [1, 1, 2, 5, 14, 42, 132]

    def test_two_primitive_factorizations_of_three_cycle(self):
        assert counting.catalan(2) == 2

    @pytest.mark.parametrize("k", range(0, 9))
    def test_matches_enumeration(self, k):
        assert sum(1 for _ in counting.catalan_sequences(k)) == counting.catalan(k)


class TestCatalanSequences:
    def test_k1(self):
        assert list(counting.catalan_sequences(1)) == [(1,)]

    def test_k2(self):
        assert sorted(counting.catalan_sequences(2)) == [(1, 2), (2, 2)]

    @pytest.mark.parametrize("k", range(1, 9))
    def test_constraints_hold(self, k):
        seen = set()
        for seq in counting.catalan_sequences(k):
            assert seq not in seen
            seen.add(seq)
            assert len(seq) == k
            assert all(a <= b for a, b in zip(seq, seq[1:]))
            assert all(seq[p - 1] >= p for p in range(1, k))
            assert seq[-1] == k


class TestRefinedCatalan:
    def test_paper_values(self):
        assert counting.refined_catalan(Partition([3, 2])) == 5
        assert counting.refined_catalan(Partition([2, 1])) == 3
        assert counting.refined_catalan(Partition([2, 2, 1])) == 10
        assert counting.refined_catalan(Partition([3])) == 1

    def test_all_ones(self):
        assert counting.refined_catalan(Partition([1, 1, 1])) == 1

    def test_empty_is_one(self):
        assert counting.refined_catalan(Partition()) == 1

    @pytest.mark.parametrize("k", range(1, 11))
    def test_matches_sequence_types(self, k):
        by_type = Counter(
            counting.sequence_type(seq) for seq in counting.catalan_sequences(k)
        )
        for lam in partitions_of(k):
            assert counting.refined_catalan(lam) == by_type[lam]

    @pytest.mark.parametrize("k", range(0, 13))
    def test_sums_to_catalan(self, k):
        total = sum(counting.refined_catalan(lam) for lam in partitions_of(k))
        assert total == counting.catalan(k)


class TestStirling:
    def test_diagonal(self):
        for a in range(8):
            assert counting.stirling2(a, a) == 1

    def test_four_two_by_enumeration(self):
        assert counting.stirling2(4, 2) == sum(
            1 for _ in set_partitions((1, 2, 3, 4), 2)
        )
        assert counting.stirling2(4, 2) == 7

    @pytest.mark.parametrize("n", range(1, 7))
    @pytest.mark.parametrize("g", range(0, 7))
    def test_homogeneous_identity(self, n, g):
        assert counting.stirling2(n + g, n) == h_monomials(list(range(1, n + 1)), g)

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            counting.stirling2(2, 3)

    @pytest.mark.parametrize("a", range(0, 21))
    def test_alternating_formula_agrees(self, a):
        for b in range(a + 1):
            assert counting.stirling2(a, b) == counting.stirling2_alternating(a, b)


class TestCentralFactorial:
    def test_diagonal(self):
        for b in range(8):
            assert counting.central_factorial(b, b) == 1

    def test_small_values(self):
        assert counting.central_factorial(3, 2) == 5    # h_1(1, 4)
        assert counting.central_factorial(4, 2) == 21   # h_2(1, 4)

    @pytest.mark.parametrize("b", range(1, 7))
    @pytest.mark.parametrize("g", range(0, 7))
    def test_homogeneous_on_squares(self, b, g):
        squares = [i * i for i in range(1, b + 1)]
        assert counting.central_factorial(b + g, b) == h_monomials(squares, g)

    @pytest.mark.parametrize("a", range(0, 21))
    def test_alternating_formula_agrees(self, a):
        for b in range(a + 1):
            assert counting.central_factorial(a, b) == counting.central_factorial_alternating(a, b)


class TestMinimalPrimitive:
    def test_paper_example_25(self):
        assert (
            counting.minimal_primitive_by_type(
                Partition([5, 3]), Partition([3, 2, 2, 1])
            )
            == 25
        )

    def test_three_of_type_21(self):
        assert counting.minimal_primitive_by_type(Partition([3]), Partition([2, 1])) == 3

    def test_empty(self):
        assert counting.minimal_primitive_by_type(Partition(), Partition()) == 1

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            counting.minimal_primitive_by_type(Partition([3]), Partition([2]))

    def test_total_paper(self):
        assert counting.minimal_primitive_total(Partition([3])) == 2

    def test_total_identity(self):
        assert counting.minimal_primitive_total(Partition([1] * 6)) == 1

    def test_total_two_two(self):
        assert counting.minimal_primitive_total(Partition([2, 2])) == 1

    @pytest.mark.parametrize("size", range(0, 8))
    def test_by_type_sums_to_total(self, size):
        # summed over all types, the by-type counts give the product formula;
        # realize each reduced type as a non-reduced one by adding 1 per part
        for reduced in partitions_of(size):
            non_reduced = Partition([p + 1 for p in reduced])
            total = sum(
                counting.minimal_primitive_by_type(reduced, lam)
                for lam in partitions_of(size)
            )
            assert total == counting.minimal_primitive_total(non_reduced)


class TestHurwitz:
    @pytest.mark.parametrize("n", range(1, 8))
    def test_full_cycle_is_tree_count(self, n):
        want = n ** (n - 2) if n >= 2 else 1
        assert counting.hurwitz_minimal_transitive(Partition([n])) == want

    def test_single_point(self):
        assert counting.hurwitz_minimal_transitive(Partition([1])) == 1

    def test_integrality_asserted(self):
        # every partition of n <= 8 must give an integer
        for n in range(1, 9):
            for mu in partitions_of(n):
                assert counting.hurwitz_minimal_transitive(mu) >= 0


class TestSinhFormulas:
    def test_constant_term(self):
        for m in range(0, 6):
            assert counting.sinh_power_coefficient(m, 0) == 1

    def test_square(self):
        assert counting.sinh_power_coefficient(2, 1) == Fraction(1, 6)

    def test_fourth_power(self):
        assert counting.sinh_power_coefficient(4, 1) == Fraction(1, 3)

    def test_direct_expansion_oracle(self):
        # (sinh(z/2)/(z/2))^m has z^2 coefficient m/24: m choices of the
        # z^2/24 factor in the product
        for m in range(1, 8):
            assert counting.sinh_power_coefficient(m, 1) == Fraction(2 * m, 24)

    def test_full_cycle_genus_small(self):
        assert counting.hurwitz_full_cycle_genus(3, 1) == 27
        for n in range(1, 7):
            want = n ** (n - 2) if n >= 2 else 1
            assert counting.hurwitz_full_cycle_genus(n, 0) == want
        for g in range(6):
            assert counting.hurwitz_full_cycle_genus(2, g) == 1

    def test_primitive_sinh_small(self):
        assert counting.primitive_full_cycle_sinh(3, 1) == 10
        for n in range(1, 7):
            assert counting.primitive_full_cycle_sinh(n, 0) == counting.catalan(n - 1)
        for g in range(6):
            assert counting.primitive_full_cycle_sinh(2, g) == 1

    @pytest.mark.parametrize("n", range(1, 9))
    @pytest.mark.parametrize("g", range(0, 6))
    def test_sinh_agrees_with_central_factorial(self, n, g):
        assert counting.primitive_full_cycle_sinh(n, g) == counting.primitive_full_cycle(n, g)


class TestPrimitiveFullCycle:
    def test_genus_zero_is_catalan(self):
        for n in range(1, 9):
            assert counting.primitive_full_cycle(n, 0) == counting.catalan(n - 1)

    def test_three_one(self):
        assert counting.primitive_full_cycle(3, 1) == 10

    def test_two_any_genus(self):
        for g in range(6):
            assert counting.primitive_full_cycle(2, g) == 1
