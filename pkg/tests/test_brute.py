"""The exhaustive oracles themselves: search correctness, budgets, witnesses."""

import pytest

from primfact import brute, counting
from primfact.errors import BudgetExceededError
from primfact.partitions import Partition, partitions_of
from primfact.perms import (
    Transposition,
    all_permutations,
    identity,
    parse_permutation,
    product,
)


class TestCountPrimitive:
    def test_three_cycle_length_two(self):
        assert brute.count_primitive(parse_permutation("(1 2 3)"), 2) == 2

    def test_identity_length_zero(self):
        for n in range(1, 5):
            assert brute.count_primitive(identity(n), 0) == 1

    def test_three_cycle_length_four(self):
        assert brute.count_primitive(parse_permutation("(1 2 3)"), 4) == 10

    @pytest.mark.parametrize("n", range(2, 6))
    def test_depends_only_on_cycle_type(self, n):
        for k in range(0, 7):
            by_type = {}
            for p in all_permutations(n):
                count = brute.count_primitive(p, k)
                mu = p.cycle_type()
                if mu in by_type:
                    assert by_type[mu] == count
                else:
                    by_type[mu] = count

    @pytest.mark.parametrize("n", range(2, 6))
    def test_parity_vanishing(self, n):
        for mu in partitions_of(n):
            rep = brute.standard_representative(mu)
            minimal = n - mu.length
            for k in range(0, 7):
                if (k - minimal) % 2 == 1:
                    assert brute.count_primitive(rep, k) == 0

    @pytest.mark.parametrize("n", range(2, 8))
    def test_minimal_count_matches_catalan_product(self, n):
        for mu in partitions_of(n):
            rep = brute.standard_representative(mu)
            got = brute.count_primitive(rep, n - mu.length)
            assert got == counting.minimal_primitive_total(mu)

    def test_budget_hit_raises(self):
        with pytest.raises(BudgetExceededError):
            brute.count_primitive(identity(6), 8, budget=100)


class TestCountByType:
    def test_paper_three_of_type_21(self):
        assert (
            brute.count_primitive_by_type(parse_permutation("(1 2 3 4)"), Partition([2, 1]))
            == 3
        )

    def test_three_cycle_types(self):
        p = parse_permutation("(1 2 3)")
        assert brute.count_primitive_by_type(p, Partition([1, 1])) == 1
        assert brute.count_primitive_by_type(p, Partition([2])) == 1

    @pytest.mark.parametrize("n", range(2, 6))
    def test_types_partition_the_length_count(self, n):
        for mu in partitions_of(n):
            rep = brute.standard_representative(mu)
            for k in range(0, 6):
                total = sum(
                    brute.count_primitive_by_type(rep, lam) for lam in partitions_of(k)
                )
                assert total == brute.count_primitive(rep, k)


class TestEnumerate:
    def test_three_cycle_witnesses(self):
        witnesses = brute.enumerate_primitive(parse_permutation("(1 2 3)"), 2)
        factor_sets = {
            tuple((t.small, t.large) for t in w.factors) for w in witnesses
        }
        assert factor_sets == {((1, 2), (2, 3)), ((2, 3), (1, 3))}

    def test_single_transposition(self):
        witnesses = brute.enumerate_primitive(parse_permutation("(1 2)"), 1)
        assert len(witnesses) == 1
        assert witnesses[0].factors == (Transposition(1, 2),)

    def test_four_cycle_has_catalan_many(self):
        witnesses = brute.enumerate_primitive(parse_permutation("(1 2 3 4)"), 3)
        assert len(witnesses) == 5

    @pytest.mark.parametrize("n,k", [(3, 2), (4, 3), (4, 5), (5, 4)])
    def test_witnesses_validate(self, n, k):
        cycle = brute.standard_representative(Partition([n]))
        for witness in brute.enumerate_primitive(cycle, k):
            assert witness.validates()
            assert witness.is_primitive()

    def test_count_agrees_with_enumeration(self):
        p = parse_permutation("(1 2)(3 4)")
        for k in range(0, 6):
            assert len(brute.enumerate_primitive(p, k)) == brute.count_primitive(p, k)


class TestWitness:
    def test_primitive_flag_on_unordered_factors(self):
        w = brute.FactorizationWitness(
            (Transposition(1, 3), Transposition(1, 2)), parse_permutation("(1 2 3)")
        )
        assert not w.is_primitive()
        assert w.validates()

    def test_validates_rejects_wrong_product(self):
        w = brute.FactorizationWitness(
            (Transposition(1, 2),), parse_permutation("(1 2 3)")
        )
        assert not w.validates()

    def test_product_helper(self):
        factors = (Transposition(1, 2), Transposition(2, 3))
        assert product(factors, 3) == parse_permutation("(1 2 3)")


class TestMinimalTransitive:
    def test_three_cycle(self):
        assert brute.count_minimal_transitive(Partition([3])) == 3

    def test_single_point(self):
        assert brute.count_minimal_transitive(Partition([1])) == 1

    def test_four_cycle(self):
        assert brute.count_minimal_transitive(Partition([4])) == 16

    @pytest.mark.parametrize("n", range(1, 5))
    def test_matches_hurwitz_formula(self, n):
        for mu in partitions_of(n):
            assert brute.count_minimal_transitive(mu) == counting.hurwitz_minimal_transitive(mu)

    @pytest.mark.parametrize("n", range(2, 5))
    def test_representative_choice_immaterial(self, n):
        # centrality: any representative of the class gives the same count;
        # check by filtering the same search over every class member
        for mu in partitions_of(n):
            length = n + mu.length - 2
            want = brute.count_minimal_transitive(mu)
            for p in all_permutations(n):
                if p.cycle_type() != mu:
                    continue
                count = _count_transitive_with_target(p, length)
                assert count == want

    def test_budget_raises(self):
        with pytest.raises(BudgetExceededError):
            brute.count_minimal_transitive(Partition([2, 2]), budget=10)


def _count_transitive_with_target(target, length):
    """Reference reimplementation with an arbitrary target permutation."""
    import itertools

    n = target.degree
    pairs = [
        Transposition(s, t) for t in range(2, n + 1) for s in range(1, t)
    ]
    count = 0
    for combo in itertools.product(pairs, repeat=length):
        if product(combo, n) != target:
            continue
        parent = list(range(n + 1))

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        comps = n
        for t in combo:
            a, b = find(t.small), find(t.large)
            if a != b:
                parent[a] = b
                comps -= 1
        if comps == 1:
            count += 1
    return count


class TestTransferMatrix:
    def test_all_length_four_factorizations_of_three_cycle(self):
        got = brute.count_all_factorizations(parse_permutation("(1 2 3)"), 4)
        assert got == 27

    def test_matches_direct_product_enumeration(self):
        import itertools

        p = parse_permutation("(1 2)(3 4)")
        pairs = [Transposition(s, t) for t in range(2, 5) for s in range(1, t)]
        for k in range(0, 4):
            direct = sum(
                1 for combo in itertools.product(pairs, repeat=k)
                if product(combo, 4) == p
            )
            assert brute.count_all_factorizations(p, k) == direct


class TestLeafCount:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_counts_search_leaves(self, n):
        # every leaf corresponds to one (s,t) sequence; total over all targets
        for k in range(0, 4):
            total = sum(
                brute.count_primitive(p, k, budget=10**7)
                for p in all_permutations(n)
            )
            assert total == brute.primitive_leaf_count(n, k)
