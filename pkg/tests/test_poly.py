"""Polynomials, quotient algebras, companion matrices and the CRT split."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heisrep.linalg import QMatrix, block_assemble, is_nilpotent, rank
from heisrep.poly import (
    Polynomial,
    PolyParseError,
    QuotientAlgebra,
    companion,
    crt_split,
    eval_at_matrix,
    parse_poly,
    poly_gcd,
    poly_xgcd,
    regular_representation,
    squarefree_part,
)

F = Fraction


def poly_strategy(max_deg=5):
    return st.lists(
        st.fractions(min_value=-4, max_value=4, max_denominator=3),
        min_size=0,
        max_size=max_deg + 1,
    ).map(Polynomial)


class TestPolynomialRing:
    def test_trailing_zeros_stripped(self):
        assert Polynomial([1, 2, 0, 0]).coeffs == (F(1), F(2))
        assert Polynomial([0, 0]).degree == -1

    def test_divmod_identity(self):
        a = Polynomial([1, 2, 3, 4])
        b = Polynomial([1, 1])
        q, r = a.divmod(b)
        assert q * b + r == a
        assert r.degree < b.degree

    @given(poly_strategy(), poly_strategy())
    @settings(max_examples=80, deadline=None)
    def test_divmod_identity_random(self, a, b):
        if b.is_zero():
            with pytest.raises(ZeroDivisionError):
                a.divmod(b)
            return
        q, r = a.divmod(b)
        assert q * b + r == a
        assert r.degree < b.degree

    def test_evaluation(self):
        p = Polynomial([1, -2, 1])  # (t-1)^2
        assert p(1) == 0
        assert p(F(1, 2)) == F(1, 4)

    def test_str_roundtrips_through_parser(self):
        for p in (
            Polynomial([1, 0, 1]),
            Polynomial([-2, 0, 0, 1]),
            Polynomial([F(1, 2), -1]),
            Polynomial([0, 1]),
        ):
            assert parse_poly(str(p)) == p

    def test_json_roundtrip(self):
        p = Polynomial([F(1, 3), 0, -2, 1])
        assert Polynomial.from_json(p.to_json()) == p


class TestGcd:
    def test_shift_common_factor(self):
        assert poly_gcd(Polynomial.t_power(2), Polynomial.t_power(1)) == Polynomial.t_power(1)

    def test_coprime(self):
        assert poly_gcd(Polynomial([1, 0, 1]), Polynomial([-1, 0, 1])) == Polynomial([1])

    def test_shared_linear_factor(self):
        lin = lambda c: Polynomial([c, 1])  # noqa: E731
        a = lin(-1) * lin(-1) * lin(2)
        b = lin(-1) * lin(3)
        assert poly_gcd(a, b) == lin(-1)

    def test_both_zero_rejected(self):
        with pytest.raises(ValueError):
            poly_gcd(Polynomial(), Polynomial())

    def test_xgcd_bezout(self):
        a = Polynomial([1, 0, 1])
        b = Polynomial([0, 1])
        g, u, v = poly_xgcd(a, b)
        assert u * a + v * b == g
        assert g == Polynomial([1])

    def test_squarefree_part(self):
        lin = lambda c: Polynomial([c, 1])  # noqa: E731
        p = lin(-1) * lin(-1) * lin(2)
        assert squarefree_part(p) == lin(-1) * lin(2)


class TestCompanion:
    def test_degree_one(self):
        assert companion(Polynomial.t_power(1)) == QMatrix.zero(1, 1)

    def test_rotation_matrix(self):
        P = companion(Polynomial([1, 0, 1]))
        assert P == QMatrix.from_rows([[0, -1], [1, 0]])
        assert P @ P == QMatrix.identity(2).scale(-1)

    def test_shift_is_nilpotent(self):
        P = companion(Polynomial.t_power(3))
        assert is_nilpotent(P)
        assert P == QMatrix.from_rows([[0, 0, 0], [1, 0, 0], [0, 1, 0]])

    def test_non_monic_rejected(self):
        with pytest.raises(ValueError, match="monic"):
            companion(Polynomial([1, 2]))

    def test_constant_rejected(self):
        with pytest.raises(ValueError):
            companion(Polynomial([1]))


class TestEvalAtMatrix:
    def test_constant_one(self):
        M = QMatrix.from_rows([[1, 2], [3, 4]])
        assert eval_at_matrix(Polynomial([1]), M) == QMatrix.identity(2)

    def test_shift_power_entries(self):
        # powers of the shift companion put ones on the k-th subdiagonal
        d = 5
        P = companion(Polynomial.t_power(d))
        for k in range(d):
            Pk = eval_at_matrix(Polynomial.t_power(k), P)
            for i in range(d):
                for j in range(d):
                    assert Pk[i, j] == (1 if i == j + k else 0)

    @pytest.mark.parametrize("d", range(1, 9))
    def test_modulus_annihilates_companion(self, d):
        import random

        rng = random.Random(d)
        p = Polynomial([rng.randint(-3, 3) for _ in range(d)] + [1])
        assert eval_at_matrix(p, companion(p)).is_zero()

    def test_ring_homomorphism(self):
        import random

        rng = random.Random(7)
        p = Polynomial([1, 1, 0, 1])
        P = companion(p)
        for _ in range(20):
            q1 = Polynomial([rng.randint(-3, 3) for _ in range(2 * p.degree)])
            q2 = Polynomial([rng.randint(-3, 3) for _ in range(2 * p.degree)])
            assert eval_at_matrix(q1 * q2, P) == eval_at_matrix(q1, P) @ eval_at_matrix(q2, P)
            assert eval_at_matrix(q1 + q2, P) == eval_at_matrix(q1, P) + eval_at_matrix(q2, P)

    def test_first_column_holds_coefficients(self):
        p = Polynomial([2, -1, 0, 1])
        P = companion(p)
        q = Polynomial([3, F(1, 2), -1])
        col = eval_at_matrix(q, P).col(0)
        assert col == tuple(q.coeff(k) for k in range(p.degree))


class TestQuotientAlgebra:
    def test_dim_and_reduce(self):
        Q = QuotientAlgebra(Polynomial([1, 0, 1]))
        assert Q.dim == 2
        assert Q.reduce(Polynomial.t_power(2)) == Polynomial([-1])

    def test_non_monic_normalized_and_flagged(self):
        Q = QuotientAlgebra(Polynomial([2, 4]))
        assert Q.normalized
        assert Q.modulus == Polynomial([F(1, 2), 1])

    def test_constant_modulus_rejected(self):
        with pytest.raises(ValueError, match="degree >= 1"):
            QuotientAlgebra(Polynomial([5]))

    def test_regular_representation_degree_one(self):
        assert regular_representation(QuotientAlgebra(Polynomial.t_power(1))) == [
            QMatrix.identity(1)
        ]

    def test_regular_representation_truncated_square(self):
        I, P = regular_representation(QuotientAlgebra(Polynomial.t_power(2)))
        assert I == QMatrix.identity(2)
        assert (P @ P).is_zero()

    def test_regular_representation_rotation(self):
        _, P = regular_representation(QuotientAlgebra(Polynomial([1, 0, 1])))
        assert P @ P == QMatrix.identity(2).scale(-1)

    def test_powers_independent(self):
        Q = QuotientAlgebra(Polynomial([1, 1, 0, 1]))
        mats = regular_representation(Q)
        stacked = QMatrix.from_rows([list(M.vec()) for M in mats])
        assert rank(stacked) == Q.dim


class TestCrtSplit:
    def test_trivial_factorization(self):
        T, Ti = crt_split(Polynomial.t_power(1), [Polynomial.t_power(1)])
        assert T == QMatrix.identity(1) and Ti == QMatrix.identity(1)

    def test_two_linear_factors_diagonalize(self):
        p = Polynomial.t_power(1) * Polynomial([-1, 1])  # t(t-1)
        T, Ti = crt_split(p, [Polynomial.t_power(1), Polynomial([-1, 1])])
        D = T @ companion(p) @ Ti
        assert D == QMatrix.from_rows([[0, 0], [0, 1]])

    def test_repeated_factor_block(self):
        lin = lambda c: Polynomial([c, 1])  # noqa: E731
        f1 = lin(-1) * lin(-1)  # (t-1)^2
        f2 = lin(2)  # t+2
        p = f1 * f2
        T, Ti = crt_split(p, [f1, f2])
        expected = block_assemble(
            [[companion(f1), None], [None, companion(f2)]], [2, 1], [2, 1]
        )
        assert T @ companion(p) @ Ti == expected

    def test_wrong_product_rejected(self):
        with pytest.raises(ValueError, match="multiply to"):
            crt_split(Polynomial.t_power(2), [Polynomial.t_power(1), Polynomial([-1, 1])])

    def test_non_coprime_rejected(self):
        with pytest.raises(ValueError, match="coprime"):
            crt_split(Polynomial.t_power(2), [Polynomial.t_power(1), Polynomial.t_power(1)])


class TestParser:
    @pytest.mark.parametrize(
        "text,coeffs",
        [
            ("t", [0, 1]),
            ("t^3 - 2*t + 1", [1, -2, 0, 1]),
            ("1/2*t^2", [0, 0, F(1, 2)]),
            ("  t ^ 2 + 1 ", [1, 0, 1]),
            ("7", [7]),
            ("-t", [0, -1]),
            ("t^2 - t", [0, -1, 1]),
        ],
    )
    def test_accepts(self, text, coeffs):
        assert parse_poly(text) == Polynomial(coeffs)

    @pytest.mark.parametrize("text", ["", "t t", "2t", "t^", "1/0", "*t", "+", "t^2 1"])
    def test_rejects_with_position(self, text):
        with pytest.raises(PolyParseError) as exc:
            parse_poly(text)
        assert "position" in str(exc.value)
