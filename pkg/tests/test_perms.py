"""Permutation basics: composition convention, cycle types, text formats."""

import itertools
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from primfact.errors import UsageError
from primfact.partitions import Partition, class_size
from primfact.perms import (
    Permutation,
    Transposition,
    all_permutations,
    all_transpositions,
    compose,
    identity,
    parse_permutation,
)


def perm_of(n: int):
    return st.permutations(range(1, n + 1)).map(lambda im: Permutation(tuple(im)))


def small_perms():
    return st.integers(min_value=1, max_value=6).flatmap(perm_of)


def t(s, l):
    return Transposition(s, l)


class TestConstruction:
    def test_identity(self):
        assert identity(3).images == (1, 2, 3)
        assert identity(4).cycle_type() == Partition([1, 1, 1, 1])

    def test_identity_rejects_zero(self):
        with pytest.raises(ValueError):
            identity(0)

    def test_not_a_bijection(self):
        with pytest.raises(ValueError):
            Permutation((1, 1, 3))

    def test_transposition_order(self):
        with pytest.raises(ValueError):
            Transposition(3, 2)
        with pytest.raises(ValueError):
            Transposition(0, 2)


class TestComposition:
    def test_three_factorizations_of_three_cycle(self):
        # the 3-cycle 1->2->3->1 arises as (12)(23), (23)(13) and (13)(12)
        # under the right-factor-first convention
        three_cycle = parse_permutation("(1 2 3)")
        pairs = [((1, 2), (2, 3)), ((2, 3), (1, 3)), ((1, 3), (1, 2))]
        for (a, b) in pairs:
            got = compose(t(*a).as_permutation(3), t(*b).as_permutation(3))
            assert got == three_cycle

    def test_degree_mismatch(self):
        with pytest.raises(ValueError):
            compose(identity(3), identity(4))

    @given(small_perms())
    def test_identity_neutral(self, p):
        e = identity(p.degree)
        assert compose(p, e) == p
        assert compose(e, p) == p

    @given(st.integers(min_value=1, max_value=5).flatmap(
        lambda n: st.tuples(perm_of(n), perm_of(n), perm_of(n))))
    def test_associative(self, triple):
        p, q, r = triple
        assert compose(compose(p, q), r) == compose(p, compose(q, r))

    @given(small_perms())
    def test_inverse(self, p):
        assert compose(p, p.inverse()) == identity(p.degree)
        assert compose(p.inverse(), p) == identity(p.degree)

    @given(st.integers(min_value=1, max_value=5).flatmap(
        lambda n: st.tuples(perm_of(n), perm_of(n))))
    def test_conjugation_preserves_cycle_type(self, pair):
        p, q = pair
        conjugated = compose(q, compose(p, q.inverse()))
        assert conjugated.cycle_type() == p.cycle_type()


class TestCycleType:
    def test_two_cycles(self):
        p = parse_permutation("(1 2 3 4 5 6)(7 8 9 10)")
        assert p.cycle_type() == Partition([6, 4])
        assert p.reduced_cycle_type() == Partition([5, 3])

    def test_identity_types(self):
        assert identity(5).cycle_type() == Partition([1] * 5)
        assert identity(5).reduced_cycle_type() == Partition()

    def test_transposition_in_s4(self):
        p = parse_permutation("(1 2)", degree=4)
        assert p.cycle_type() == Partition([2, 1, 1])

    def test_double_transposition_reduced(self):
        p = parse_permutation("(1 2)(3 4)")
        assert p.reduced_cycle_type() == Partition([1, 1])

    def test_cycles_count(self):
        assert identity(4).cycles_count() == 4
        assert parse_permutation("(1 2)").cycles_count() == 1
        assert parse_permutation("(1 2 3)(4 5)").cycles_count() == 2

    @given(small_perms())
    def test_reduced_size(self, p):
        assert p.reduced_cycle_type().size == p.degree - p.cycle_type().length

    @pytest.mark.parametrize("n", range(1, 7))
    def test_class_sizes_exhaustively(self, n):
        counts = Counter(p.cycle_type() for p in all_permutations(n))
        for mu, count in counts.items():
            assert count == class_size(mu)


class TestTextFormats:
    def test_image_list(self):
        assert parse_permutation("2,3,1").images == (2, 3, 1)

    def test_cycles_with_fixed_points_omitted(self):
        p = parse_permutation("(2 4)", degree=5)
        assert p.images == (1, 4, 3, 2, 5)

    def test_degree_is_max_point(self):
        assert parse_permutation("(1 3)").degree == 3

    def test_round_trip(self):
        for text in ["(1 2 3)(7 8 9 10)", "(2 5)", "()"]:
            p = parse_permutation(text, degree=10)
            assert parse_permutation(str(p), degree=10) == p

    @pytest.mark.parametrize(
        "bad", ["", "(1 2", "1 2 3", "(1 2)(2 3)", "(0 1)", "2,2,1", "(a b)"]
    )
    def test_rejects_garbage(self, bad):
        with pytest.raises(UsageError):
            parse_permutation(bad)

    def test_point_beyond_degree(self):
        with pytest.raises(UsageError):
            parse_permutation("(1 5)", degree=3)


class TestTranspositions:
    def test_all_transpositions_count(self):
        assert len(all_transpositions(5)) == 10

    def test_apply_is_right_multiplication(self):
        p = parse_permutation("2,3,1")
        assert p.apply_transposition(t(1, 2)) == compose(p, t(1, 2).as_permutation(3))

    def test_all_of_s3(self):
        assert len(list(all_permutations(3))) == 6
