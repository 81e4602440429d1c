import random

import pytest
from hypothesis import given, settings, strategies as st

from fnovikov import (
    Algebra,
    DimensionMismatchError,
    Mat,
    basis_element,
    check_fermionic,
    check_left_symmetric,
    check_novikov,
    commutator_check,
    make_family,
    scramble,
    search_breaking_mutation,
    search_fermionic_not_novikov,
    zero_element,
)
from fnovikov.scalars import QQ


def e(n, i):
    return basis_element(n, i)


def idempotent_line():
    return Algebra.from_products(1, [(0, 0, 0, 1)])


rationals = st.fractions(
    min_value=-4, max_value=4, max_denominator=6
).map(lambda f: QQ(f.numerator, f.denominator))


class TestMultiply:
    def test_family1(self):
        A = make_family(1, 2)
        assert A.multiply(e(2, 0), e(2, 0)) == e(2, 1)

    def test_zero_algebra(self):
        A = Algebra.zero(3)
        assert A.multiply([1, 2, 3], [4, 5, 6]) == zero_element(3)

    def test_family2_one_sided(self):
        A = make_family(2, 2)
        assert A.multiply(e(2, 0), e(2, 1)) == e(2, 1)
        assert A.multiply(e(2, 1), e(2, 0)) == zero_element(2)

    def test_dim_mismatch(self):
        A = Algebra.zero(2)
        with pytest.raises(DimensionMismatchError):
            A.multiply([1], [1, 2])


class TestOperators:
    def test_family1_right_op(self):
        A = make_family(1, 2)
        R = A.right_op(e(2, 0))
        assert R == Mat([[0, 0], [1, 0]])

    def test_right_op_zero(self):
        A = make_family(1, 3)
        assert A.right_op(zero_element(3)).is_zero()

    def test_family2_left_op(self):
        A = make_family(2, 2)
        L = A.left_op(e(2, 0))
        assert L == Mat([[0, 0], [0, 1]])

    @given(a=rationals, b=rationals)
    @settings(max_examples=30, deadline=None)
    def test_right_op_linear(self, a, b):
        A = make_family(3, 3)
        x, y = e(3, 0), e(3, 2)
        combo = [a * u + b * v for u, v in zip(x, y)]
        assert A.right_op(combo) == A.right_op(x).scale(a) + A.right_op(y).scale(b)

    def test_ops_match_products(self):
        rnd = random.Random(0)
        A = make_family(2, 4)
        for _ in range(10):
            x = [QQ(rnd.randint(-3, 3)) for _ in range(4)]
            y = [QQ(rnd.randint(-3, 3)) for _ in range(4)]
            assert A.right_op(x).apply(y) == A.multiply(y, x)
            assert A.left_op(x).apply(y) == A.multiply(x, y)


class TestIdentities:
    @pytest.mark.parametrize("variant", [1, 2, 3])
    def test_families(self, variant):
        A = make_family(variant, max(3, variant))
        assert check_left_symmetric(A)
        assert check_fermionic(A)
        assert check_novikov(A)

    def test_idempotent_line(self):
        A = idempotent_line()
        assert check_left_symmetric(A)
        assert not check_fermionic(A)

    def test_zero_algebra(self):
        A = Algebra.zero(3)
        assert check_left_symmetric(A)
        assert check_fermionic(A)
        assert check_novikov(A)

    def test_empty_algebra(self):
        A = Algebra.zero(0)
        assert check_left_symmetric(A)
        assert check_fermionic(A)
        assert check_novikov(A)
        assert commutator_check(A)

    def test_fermionic_implies_square_zero(self):
        for variant in (1, 2, 3):
            A = make_family(variant, 4)
            for j in range(4):
                R = A.right_op(e(4, j))
                assert (R * R).is_zero()

    def test_basis_triples_suffice(self):
        # randomized full-element cross-check of the left-symmetry identity
        rnd = random.Random(1)
        A = make_family(3, 4)
        assert check_left_symmetric(A)
        for _ in range(25):
            x, y, z = (
                [QQ(rnd.randint(-3, 3), rnd.randint(1, 3)) for _ in range(4)]
                for _ in range(3)
            )
            lhs = [
                u - v
                for u, v in zip(
                    A.multiply(A.multiply(x, y), z),
                    A.multiply(x, A.multiply(y, z)),
                )
            ]
            rhs = [
                u - v
                for u, v in zip(
                    A.multiply(A.multiply(y, x), z),
                    A.multiply(y, A.multiply(x, z)),
                )
            ]
            assert lhs == rhs

    def test_checks_invariant_under_basis_change(self):
        for variant in (1, 2, 3):
            A = make_family(variant, 4)
            for seed in range(5):
                A2, _, _ = scramble(A, None, seed)
                assert check_left_symmetric(A2)
                assert check_fermionic(A2)
                assert check_novikov(A2)


class TestCommutator:
    @pytest.mark.parametrize("variant", [1, 2, 3])
    def test_families(self, variant):
        assert commutator_check(make_family(variant, 4))

    def test_family1_commutator_is_zero(self):
        A = make_family(1, 3)
        for i in range(3):
            for j in range(3):
                assert A.c[i][j] == A.c[j][i]


class TestDerivedDim:
    def test_zero(self):
        assert Algebra.zero(4).derived_dim() == 0

    @pytest.mark.parametrize("variant", [1, 2, 3])
    def test_k1_families(self, variant):
        assert make_family(variant, 5).derived_dim() == 1


class TestSearches:
    def test_mutation_breaks_family2(self):
        found = search_breaking_mutation(make_family(2, 2))
        assert found is not None
        i, j, m, value, mutated = found
        assert not (
            check_left_symmetric(mutated)
            and check_fermionic(mutated)
            and check_novikov(mutated)
        )

    def test_scaling_c122_never_breaks_left_symmetry(self):
        # the obvious one-entry target is actually identity-preserving:
        # rescaling the single product of the one-sided family keeps (1.1)
        for v in (-2, -1, 0, 2, 5):
            A = Algebra.from_products(2, [(0, 1, 1, v)])
            assert check_left_symmetric(A)

    def test_fermionic_not_novikov_witness(self):
        A = next(search_fermionic_not_novikov())
        assert check_fermionic(A)
        assert check_left_symmetric(A)
        assert not check_novikov(A)
        assert A.dim == 4
