import random

import pytest

from fnovikov import (
    GenericPointError,
    Mat,
    Poly,
    PolyMat,
    congruent_diagonalize,
    det,
    find_generic_point,
    generic_rank,
    inverse,
    kernel_basis,
    rank,
    signature,
    solve,
)
from fnovikov.scalars import QQ, ONE
from fnovikov.exactlin import poly_divexact


def jordan_pairs(k, n):
    """Block-diagonal matrix of k nilpotent 2x2 Jordan blocks padded with
    zeros up to size n."""
    M = Mat.zeros(n, n).copy_data()
    for i in range(k):
        M[2 * i + 1][2 * i] = ONE
    return Mat(M)


def rand_mat(rnd, rows, cols, lo=-5, hi=5):
    return Mat([[rnd.randint(lo, hi) for _ in range(cols)] for _ in range(rows)])


class TestRank:
    def test_zero(self):
        assert rank(Mat.zeros(3, 3)) == 0

    def test_single_entry(self):
        assert rank(Mat([[0, 0], [1, 0]])) == 1

    def test_jordan_pair_blocks(self):
        for k in (1, 2, 3):
            for pad in (0, 1, 3):
                assert rank(jordan_pairs(k, 2 * k + pad)) == k

    def test_rank_nullity(self):
        rnd = random.Random(0)
        for _ in range(30):
            rows, cols = rnd.randint(1, 6), rnd.randint(1, 6)
            M = rand_mat(rnd, rows, cols, -2, 2)
            assert rank(M) + len(kernel_basis(M)) == cols


class TestKernel:
    def test_identity(self):
        assert kernel_basis(Mat.identity(2)) == []

    def test_zero(self):
        vecs = kernel_basis(Mat.zeros(2, 2))
        assert len(vecs) == 2
        assert rank(Mat(vecs)) == 2

    def test_kernel_vectors_annihilated(self):
        rnd = random.Random(1)
        for _ in range(20):
            M = rand_mat(rnd, rnd.randint(1, 5), rnd.randint(1, 5), -3, 3)
            for v in kernel_basis(M):
                assert all(x == 0 for x in M.apply(v))

    def test_solve(self):
        M = Mat([[1, 2], [3, 4]])
        x = solve(M, [QQ(5), QQ(11)])
        assert M.apply(x) == [QQ(5), QQ(11)]
        assert solve(Mat([[1, 0], [1, 0]]), [QQ(0), QQ(1)]) is None


class TestCongruence:
    def test_identity(self):
        P, D = congruent_diagonalize(Mat.identity(3))
        assert P == Mat.identity(3)
        assert D == Mat.identity(3)

    def test_hyperbolic_plane(self):
        S = Mat([[0, 1], [1, 0]])
        P, D = congruent_diagonalize(S)
        assert P.transpose() * S * P == D
        diag = [D.data[i][i] for i in range(2)]
        assert sum(1 for d in diag if d > 0) == 1
        assert sum(1 for d in diag if d < 0) == 1

    def test_negative_identity(self):
        P, D = congruent_diagonalize(-Mat.identity(2))
        assert P == Mat.identity(2)
        assert D == -Mat.identity(2)

    def test_exact_on_random_symmetric(self):
        rnd = random.Random(2)
        for _ in range(40):
            n = rnd.randint(1, 6)
            M = rand_mat(rnd, n, n, -4, 4)
            S = M + M.transpose()
            P, D = congruent_diagonalize(S)
            assert det(P) != 0
            assert P.transpose() * S * P == D
            assert all(
                D.data[i][j] == 0 for i in range(n) for j in range(n) if i != j
            )


class TestSignature:
    def test_diagonal(self):
        assert signature(Mat.diagonal([-1, -1, 1])) == (1, 2, 0)

    def test_hyperbolic(self):
        assert signature(Mat([[0, 1], [1, 0]])) == (1, 1, 0)

    def test_pair_block_metric(self):
        # k hyperbolic 2x2 blocks, then -I_{p-k}, then I_{n-p-k}
        for n, p, k in ((4, 1, 1), (6, 2, 2), (7, 3, 2)):
            data = Mat.zeros(n, n).copy_data()
            for i in range(k):
                data[2 * i][2 * i + 1] = ONE
                data[2 * i + 1][2 * i] = ONE
            for t in range(p - k):
                data[2 * k + t][2 * k + t] = -ONE
            for t in range(n - p - k):
                data[k + p + t][k + p + t] = ONE
            assert signature(Mat(data)) == (n - p, p, 0)

    def test_sylvester_invariance(self):
        rnd = random.Random(3)
        for n in (2, 3, 4):
            M = rand_mat(rnd, n, n, -3, 3)
            S = M + M.transpose()
            sig = signature(S)
            done = 0
            while done < 50:
                Q = rand_mat(rnd, n, n, -3, 3)
                if det(Q) == 0:
                    continue
                assert signature(Q.transpose() * S * Q) == sig
                done += 1


class TestPoly:
    def test_arith(self):
        t0 = Poly.var(2, 0)
        t1 = Poly.var(2, 1)
        p = (t0 + t1) * (t0 - t1)
        assert p == t0 * t0 - t1 * t1
        assert p.eval([QQ(3), QQ(2)]) == QQ(5)
        assert (p - p).is_zero()

    def test_divexact(self):
        t0 = Poly.var(2, 0)
        t1 = Poly.var(2, 1)
        a = (t0 + t1) * (t0 * t0 - 2 * t1)
        assert poly_divexact(a, t0 + t1) == t0 * t0 - 2 * t1
        with pytest.raises(ValueError):
            poly_divexact(t0 * t0 + t1, t0 + t1)


def single_var_pencil():
    # t1 placed at row 2, column 1 of a 2x2 matrix
    z = Poly.zero(1)
    return PolyMat(1, [[z, z], [Poly.var(1, 0), z]])


class TestGenericRank:
    def test_single_entry(self):
        assert generic_rank(single_var_pencil()) == 1

    def test_zero(self):
        assert generic_rank(PolyMat.zeros(2, 3, 3)) == 0

    def test_rank_two_pencil(self):
        # diag(t1, t2) padded: generic rank 2, every specialization <= 2
        z = Poly.zero(2)
        M = PolyMat(
            2,
            [
                [Poly.var(2, 0), z, z],
                [z, Poly.var(2, 1), z],
                [z, z, z],
            ],
        )
        assert generic_rank(M) == 2

    def test_specialization_bounded(self):
        rnd = random.Random(4)
        for _ in range(20):
            nv = rnd.randint(1, 3)
            n = rnd.randint(1, 5)
            data = []
            for _ in range(n):
                row = []
                for _ in range(n):
                    terms = {}
                    for v in range(nv):
                        if rnd.random() < 0.4:
                            e = [0] * nv
                            e[v] = 1
                            terms[tuple(e)] = QQ(rnd.randint(-2, 2))
                    row.append(Poly(nv, terms))
                data.append(row)
            M = PolyMat(nv, data, n)
            r = generic_rank(M)
            for _ in range(5):
                point = [QQ(rnd.randint(-5, 5)) for _ in range(nv)]
                assert rank(M.eval(point)) <= r
            point = find_generic_point(M, seed=rnd.randint(0, 10**6))
            assert rank(M.eval(point)) == r


class TestFindGenericPoint:
    def test_single_entry(self):
        point = find_generic_point(single_var_pencil(), seed=0)
        assert point[0] != 0

    def test_zero_pencil(self):
        point = find_generic_point(PolyMat.zeros(2, 2, 2), seed=0)
        assert len(point) == 2

    def test_attempt_cap_guard(self):
        # an unreachable target rank must raise the dedicated error
        with pytest.raises(GenericPointError):
            find_generic_point(single_var_pencil(), seed=0, target=2)

    def test_deterministic(self):
        M = single_var_pencil()
        assert find_generic_point(M, seed=9) == find_generic_point(M, seed=9)


class TestInverse:
    def test_roundtrip(self):
        rnd = random.Random(5)
        done = 0
        while done < 20:
            n = rnd.randint(1, 5)
            M = rand_mat(rnd, n, n, -3, 3)
            if det(M) == 0:
                continue
            assert M * inverse(M) == Mat.identity(n)
            done += 1

    def test_singular(self):
        with pytest.raises(ValueError):
            inverse(Mat.zeros(2, 2))
