"""Semisimple/nilpotent splitting of matrices and of representations."""

import random
from fractions import Fraction

import pytest

from heisrep.jordan import (
    NilrepHypothesisError,
    jordan_chevalley,
    rep_jordan_parts,
    verify_nilrep_theorem,
)
from heisrep.lie import LieAlgebra, derived
from heisrep.linalg import QMatrix, is_nilpotent, minimal_polynomial
from heisrep.poly import Polynomial, QuotientAlgebra, companion, poly_gcd
from heisrep.reps import Representation, check_homomorphism, make_AB, minimal_faithful, pi0, pi_AB

F = Fraction


def mat(rows):
    return QMatrix.from_rows(rows)


class TestJordanChevalley:
    def test_single_jordan_block(self):
        S, N = jordan_chevalley(mat([[1, 1], [0, 1]]))
        assert S == QMatrix.identity(2)
        assert N == QMatrix.elementary(2, 0, 1)

    def test_strictly_upper_is_all_nilpotent(self):
        M = mat([[0, 2, 3], [0, 0, 5], [0, 0, 0]])
        S, N = jordan_chevalley(M)
        assert S.is_zero()
        assert N == M

    def test_squarefree_input_is_all_semisimple(self):
        M = companion(Polynomial([1, 0, 1]))
        S, N = jordan_chevalley(M)
        assert S == M
        assert N.is_zero()

    def test_rational_diagonalizable(self):
        T = mat([[1, 1], [1, 2]])
        M = T @ mat([[3, 0], [0, -1]]) @ T.inverse()
        S, N = jordan_chevalley(M)
        assert S == M and N.is_zero()

    def test_random_matrices_satisfy_all_identities(self):
        rng = random.Random(13)
        for _ in range(40):
            n = rng.randint(1, 5)
            M = QMatrix(n, n, [rng.randint(-3, 3) for _ in range(n * n)])
            S, N = jordan_chevalley(M)
            assert S + N == M
            assert (S @ N - N @ S).is_zero()
            assert is_nilpotent(N)
            ms = minimal_polynomial(S)
            assert poly_gcd(ms, ms.derivative()).degree == 0

    def test_conjugation_equivariance(self):
        rng = random.Random(14)
        M = QMatrix(4, 4, [rng.randint(-2, 2) for _ in range(16)])
        T = mat([[1, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 1], [0, 0, 0, 1]])
        Ti = T.inverse()
        S, N = jordan_chevalley(M)
        S2, N2 = jordan_chevalley(T @ M @ Ti)
        assert S2 == T @ S @ Ti
        assert N2 == T @ N @ Ti

    def test_non_square_rejected(self):
        with pytest.raises(ValueError):
            jordan_chevalley(QMatrix.zero(2, 3))


class TestRepresentationParts:
    def test_nilpotent_rep_splits_trivially(self):
        rep = pi0(2)
        rep_S, rep_N = rep_jordan_parts(rep)
        assert all(M.is_zero() for M in rep_S.images)
        assert rep_N.images == rep.images

    def test_scalar_perturbation_splits_exactly(self):
        # pi'(x) = pi(x) + lam(x) I with lam zero on brackets: the
        # semisimple parts are exactly the scalar terms
        Q = QuotientAlgebra(Polynomial.t_power(1))
        rep = minimal_faithful(1, Q)
        g = rep.algebra
        lam = [F(2), F(-1), F(0)]  # zero on the Z coordinate spanning [g,g]
        I = QMatrix.identity(rep.degree)
        perturbed = Representation(g, [M + I.scale(c) for M, c in zip(rep.images, lam)])
        rep_S, rep_N = rep_jordan_parts(perturbed)
        assert rep_N.images == rep.images
        assert [M for M in rep_S.images] == [I.scale(c) for c in lam]

    def test_parts_are_homomorphisms_and_commute(self):
        rep = minimal_faithful(1, QuotientAlgebra(Polynomial([1, 0, 1])))
        rep_S, rep_N = rep_jordan_parts(rep)
        assert check_homomorphism(rep_S)
        assert check_homomorphism(rep_N)
        for A, B in zip(rep_S.images, rep_N.images):
            assert (A @ B - B @ A).is_zero()

    def test_semisimple_part_kills_the_derived_algebra(self):
        rep = minimal_faithful(2, QuotientAlgebra(Polynomial.t_power(2)))
        rep_S, _ = rep_jordan_parts(rep)
        der = derived(rep.algebra)
        for v in der.basis:
            assert rep_S.image_of(v).is_zero()

    def test_non_nilpotent_algebra_rejected(self):
        # sl2-like table is not nilpotent
        table = [
            [[0, 0, 0], [0, 0, 1], [0, -2, 0]],
            [[0, 0, -1], [0, 0, 0], [2, 0, 0]],
            [[0, 2, 0], [-2, 0, 0], [0, 0, 0]],
        ]
        g = LieAlgebra(["h", "e", "f"], table, verify=False)
        rep = Representation(g, [QMatrix.zero(2, 2)] * 3)
        with pytest.raises(ValueError, match="nilpotent"):
            rep_jordan_parts(rep)


class TestFaithfulnessTransfer:
    def test_already_nilpotent_case(self):
        assert verify_nilrep_theorem(pi0(1))

    def test_perturbed_minimal_rep(self):
        Q = QuotientAlgebra(Polynomial.t_power(2))
        rep = minimal_faithful(1, Q)
        g = rep.algebra
        I = QMatrix.identity(rep.degree)
        lam = [F(1), F(-2), F(3), F(0), F(0), F(0)]  # zero on the Z block
        perturbed = Representation(g, [M + I.scale(c) for M, c in zip(rep.images, lam)])
        assert verify_nilrep_theorem(perturbed)

    def test_unfaithful_rep_agrees_on_both_sides(self):
        Q = QuotientAlgebra(Polynomial.t_power(2))
        rep = pi_AB(1, Q, make_AB(2, 1, 1))
        assert verify_nilrep_theorem(rep)  # both sides false, equivalence holds

    def test_hypothesis_violation_is_a_named_error(self):
        # abelian algebra: center is everything, derived is zero
        n = 2
        table = [[([0] * n) for _ in range(n)] for _ in range(n)]
        g = LieAlgebra(["a", "b"], table)
        rep = Representation(g, [QMatrix.zero(2, 2)] * 2)
        with pytest.raises(NilrepHypothesisError):
            verify_nilrep_theorem(rep)
