"""Jucys-Murphy evaluations against the exhaustive oracle."""

import pytest

from primfact import brute, class_algebra as ca
from primfact.errors import CentralityError
from primfact.partitions import Partition, partitions_of
from primfact.perms import parse_permutation, identity


class TestJmElements:
    def test_j1_is_zero(self):
        for n in range(1, 5):
            assert ca.jm_element(1, n).is_zero()

    def test_j3_in_s3(self):
        v = ca.jm_element(3, 3)
        assert v.coefficient_of(parse_permutation("(1 3)")) == 1
        assert v.coefficient_of(parse_permutation("(2 3)")) == 1
        assert v.coefficient_of(parse_permutation("(1 2)", degree=3)) == 0
        assert v.coefficient_of(identity(3)) == 0

    def test_j2_in_s4(self):
        v = ca.jm_element(2, 4)
        assert v.coefficient_of(parse_permutation("(1 2)", degree=4)) == 1
        nonzero = sum(1 for c in v.coeffs if c != 0)
        assert nonzero == 1

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            ca.jm_element(5, 4)
        with pytest.raises(ValueError):
            ca.jm_element(0, 4)

    @pytest.mark.parametrize("n", range(2, 6))
    def test_jm_elements_commute(self, n):
        elements = [ca.jm_element(k, n) for k in range(1, n + 1)]
        for i in range(n):
            for j in range(i + 1, n):
                assert elements[i].mult_jm(j + 1) == elements[j].mult_jm(i + 1)


class TestCompleteHomogeneous:
    def test_h0_is_unit(self):
        for n in range(1, 5):
            v = ca.complete_homogeneous_jm(0, n)
            assert v.coefficient_of(identity(n)) == 1
            assert sum(1 for c in v.coeffs if c != 0) == 1

    def test_h2_in_s3(self):
        v = ca.complete_homogeneous_jm(2, 3)
        assert v.coefficient_of(parse_permutation("(1 2 3)")) == 2
        assert v.coefficient_of(identity(3)) == 3

    def test_h2_s3_resolution(self):
        res = ca.resolve_to_classes(ca.complete_homogeneous_jm(2, 3))
        assert res.coefficients == {
            Partition([3]): 2,
            Partition([1, 1, 1]): 3,
            Partition([2, 1]): 0,
        }

    @pytest.mark.parametrize("n", range(2, 6))
    def test_coefficients_count_primitive_factorizations(self, n):
        for k in range(0, 7):
            resolution = ca.resolve_to_classes(ca.complete_homogeneous_jm(k, n))
            for mu in partitions_of(n):
                rep = brute.standard_representative(mu)
                assert resolution[mu] == brute.count_primitive(rep, k)


class TestMonomial:
    def test_single_variable(self):
        assert ca.monomial_jm(Partition([1]), 2) == ca.jm_element(2, 2)

    def test_type_21_in_s4(self):
        v = ca.monomial_jm(Partition([2, 1]), 4)
        assert v.coefficient_of(parse_permutation("(1 2 3 4)")) == 3

    def test_type_11_in_s3(self):
        v = ca.monomial_jm(Partition([1, 1]), 3)
        assert v.coefficient_of(parse_permutation("(1 2 3)")) == 1

    def test_too_many_parts_is_zero(self):
        assert ca.monomial_jm(Partition([1, 1, 1]), 3).is_zero()

    @pytest.mark.parametrize("n", range(2, 6))
    def test_coefficients_count_by_type(self, n):
        for size in range(0, 6):
            for lam in partitions_of(size):
                resolution = ca.resolve_to_classes(ca.monomial_jm(lam, n))
                for mu in partitions_of(n):
                    rep = brute.standard_representative(mu)
                    assert resolution[mu] == brute.count_primitive_by_type(rep, lam)

    @pytest.mark.parametrize("n", range(2, 6))
    def test_h_is_sum_of_monomials(self, n):
        for k in range(0, 6):
            total = ca.GroupAlgebraVector.zero(n)
            for lam in partitions_of(k):
                total = total + ca.monomial_jm(lam, n)
            assert total == ca.complete_homogeneous_jm(k, n)


class TestResolve:
    def test_zero_vector(self):
        res = ca.resolve_to_classes(ca.GroupAlgebraVector.zero(4))
        assert all(v == 0 for v in res.coefficients.values())
        assert set(res.coefficients) == set(partitions_of(4))

    def test_non_central_raises_with_witnesses(self):
        with pytest.raises(CentralityError) as info:
            ca.resolve_to_classes(ca.jm_element(3, 3))
        err = info.value
        assert err.perm_a.cycle_type() == err.perm_b.cycle_type()
        assert err.coeff_a != err.coeff_b

    @pytest.mark.parametrize("n", range(2, 7))
    def test_symmetric_functions_are_central(self, n):
        for k in range(0, 9):
            ca.resolve_to_classes(ca.complete_homogeneous_jm(k, n))
        for size in range(1, 7):
            for lam in partitions_of(size):
                ca.resolve_to_classes(ca.monomial_jm(lam, n))


class TestConveniences:
    def test_count_by_length(self):
        assert ca.primitive_count_by_length(2, Partition([3])) == 2
        assert ca.primitive_count_by_length(3, Partition([3])) == 0  # parity

    def test_count_by_type(self):
        assert ca.primitive_count_by_type(Partition([2, 1]), Partition([4])) == 3

    def test_vector_size_guard(self):
        with pytest.raises(ValueError):
            ca.GroupAlgebraVector(3, [0] * 5)
