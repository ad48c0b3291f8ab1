"""Structure-constant Lie algebras: Heisenberg, current algebras, sums."""

import random
from fractions import Fraction

import pytest

from heisrep.lie import (
    LieAlgebra,
    Subspace,
    TruncatedSum,
    center,
    current_algebra,
    derived,
    direct_sum,
    heisenberg,
    is_nilpotent_algebra,
    lower_central_series,
    subalgebra_closure,
)
from heisrep.poly import Polynomial, QuotientAlgebra, crt_split

F = Fraction


def abelian(n):
    zero = [[([0] * n) for _ in range(n)] for _ in range(n)]
    return LieAlgebra([f"e{i}" for i in range(n)], zero)


def unit(n, i):
    return [1 if j == i else 0 for j in range(n)]


class TestHeisenberg:
    def test_h1_table(self):
        g = heisenberg(1)
        assert g.dim == 3
        assert g.labels == ("X1", "Y1", "Z")
        assert g.bracket(unit(3, 0), unit(3, 1)) == (F(0), F(0), F(1))
        assert g.bracket(unit(3, 1), unit(3, 0)) == (F(0), F(0), F(-1))
        assert g.bracket(unit(3, 0), unit(3, 2)) == (F(0), F(0), F(0))

    @pytest.mark.parametrize("m", range(1, 5))
    def test_jacobi_holds(self, m):
        g = heisenberg(m)
        # re-run construction-time verification explicitly
        LieAlgebra(g.labels, g.structure, verify=True)

    @pytest.mark.parametrize("m", range(1, 4))
    def test_center_is_the_z_line(self, m):
        g = heisenberg(m)
        z = center(g)
        assert z.dim == 1
        assert z.contains(unit(g.dim, g.dim - 1))

    def test_m_zero_rejected(self):
        with pytest.raises(ValueError):
            heisenberg(0)

    def test_bad_structure_rejected(self):
        n = 3
        table = [[([0] * n) for _ in range(n)] for _ in range(n)]
        table[0][1] = [0, 0, 1]  # missing antisymmetric mate
        with pytest.raises(ValueError, match="antisymmetric"):
            LieAlgebra(["a", "b", "c"], table)


class TestCurrentAlgebra:
    def test_degree_one_is_a_plain_copy(self):
        g = heisenberg(1)
        gc = current_algebra(g, QuotientAlgebra(Polynomial.t_power(1)))
        assert gc.structure == g.structure

    def test_truncated_square_kills_high_bracket(self):
        # [X (x) t, Y (x) t] lands in t^2 = 0
        g = current_algebra(heisenberg(1), QuotientAlgebra(Polynomial.t_power(2)))
        x_t = unit(6, 1)
        y_t = unit(6, 3)
        assert all(c == 0 for c in g.bracket(x_t, y_t))

    def test_rotation_modulus_wraps_with_sign(self):
        # [X (x) t, Y (x) t] = Z (x) t^2 = -Z (x) 1 mod t^2+1
        g = current_algebra(heisenberg(1), QuotientAlgebra(Polynomial([1, 0, 1])))
        out = g.bracket(unit(6, 1), unit(6, 3))
        assert out == (F(0),) * 4 + (F(-1), F(0))

    @pytest.mark.parametrize("m", (1, 2))
    @pytest.mark.parametrize(
        "p", [Polynomial.t_power(3), Polynomial([1, 0, 1]), Polynomial([-2, 0, 0, 1])]
    )
    def test_dimension_center_derived(self, m, p):
        Q = QuotientAlgebra(p)
        g = current_algebra(heisenberg(m), Q)
        d = Q.dim
        assert g.dim == (2 * m + 1) * d
        z = center(g)
        der = derived(g)
        assert z.dim == d
        assert z == der
        # spanned by the Z-block coordinates
        for j in range(d):
            assert z.contains(unit(g.dim, 2 * m * d + j))

    def test_two_step_nilpotent(self):
        g = current_algebra(heisenberg(2), QuotientAlgebra(Polynomial.t_power(2)))
        series = lower_central_series(g)
        assert len(series) == 3
        assert series[1] == center(g)
        assert series[2].dim == 0
        assert is_nilpotent_algebra(g)

    def test_labels_follow_symbol_then_power(self):
        g = current_algebra(heisenberg(1), QuotientAlgebra(Polynomial.t_power(2)))
        assert g.labels == ("X1*t^0", "X1*t^1", "Y1*t^0", "Y1*t^1", "Z*t^0", "Z*t^1")

    def test_json_roundtrip(self):
        g = current_algebra(heisenberg(1), QuotientAlgebra(Polynomial([1, 0, 1])))
        assert LieAlgebra.from_json(g.to_json()) == g


def conjugated_structure(g, d, n_symbols, T, Ti):
    """Structure table of g in the basis e_i (x) (columns of Ti), where
    the t-coordinates of each symbol are transformed by T."""

    def to_new(v):
        out = []
        for s in range(n_symbols):
            seg = v[s * d : (s + 1) * d]
            out.extend(T.apply(seg))
        return out

    def from_new(w):
        out = []
        for s in range(n_symbols):
            seg = w[s * d : (s + 1) * d]
            out.extend(Ti.apply(seg))
        return out

    table = []
    for i in range(g.dim):
        row = []
        for j in range(g.dim):
            u = from_new(unit(g.dim, i))
            v = from_new(unit(g.dim, j))
            row.append(tuple(to_new(g.bracket(u, v))))
        table.append(tuple(row))
    return tuple(table)


class TestCrtConsistency:
    @pytest.mark.parametrize("m", (1, 2))
    @pytest.mark.parametrize(
        "factors",
        [
            (Polynomial.t_power(1), Polynomial([-1, 1])),
            (Polynomial([-1, 1]) * Polynomial([-1, 1]), Polynomial([2, 1])),
        ],
    )
    def test_split_modulus_matches_factor_sum(self, m, factors):
        p = Polynomial([1])
        for f in factors:
            p = p * f
        Q = QuotientAlgebra(p)
        g = current_algebra(heisenberg(m), Q)
        T, Ti = crt_split(p, list(factors))
        got = conjugated_structure(g, Q.dim, 2 * m + 1, T, Ti)

        target = direct_sum(
            [current_algebra(heisenberg(m), QuotientAlgebra(f)) for f in factors]
        )
        # reindex: summand-major (l, symbol, power) -> symbol-major over
        # the stacked factor coordinates
        degs = [f.degree for f in factors]
        perm = []
        for s in range(2 * m + 1):
            for l, dl in enumerate(degs):
                base = (2 * m + 1) * sum(degs[:l])
                perm.extend(base + s * dl + j for j in range(dl))
        expected = tuple(
            tuple(
                tuple(target.structure[perm[i]][perm[j]][perm[k]] for k in range(g.dim))
                for j in range(g.dim)
            )
            for i in range(g.dim)
        )
        assert got == expected


class TestSubspaces:
    def test_center_of_abelian_is_everything(self):
        assert center(abelian(3)).dim == 3

    def test_derived_of_abelian_is_zero(self):
        assert derived(abelian(3)).dim == 0

    def test_sum_and_intersection(self):
        a = Subspace(3, [[1, 0, 0], [0, 1, 0]])
        b = Subspace(3, [[0, 1, 0], [0, 0, 1]])
        assert a.sum(b).dim == 3
        meet = a.intersection(b)
        assert meet.dim == 1
        assert meet.contains([0, 5, 0])

    def test_canonical_equality(self):
        assert Subspace(2, [[1, 1], [0, 1]]) == Subspace(2, [[2, 0], [3, 3]])


class TestDirectSum:
    def test_singleton(self):
        g = heisenberg(1)
        assert direct_sum([g]) is g

    def test_double_heisenberg_center(self):
        g = direct_sum([heisenberg(1), heisenberg(1)])
        assert g.dim == 6
        assert center(g).dim == 2

    def test_dimension_count(self):
        parts = [
            current_algebra(heisenberg(2), QuotientAlgebra(Polynomial.t_power(d)))
            for d in (1, 3)
        ]
        assert direct_sum(parts).dim == 5 * 4

    def test_cross_summand_brackets_vanish(self):
        g = direct_sum([heisenberg(1), heisenberg(1)])
        assert all(c == 0 for c in g.bracket(unit(6, 0), unit(6, 4)))


class TestSubalgebraClosure:
    def test_central_vector_stays_one_dimensional(self):
        g = heisenberg(1)
        assert subalgebra_closure(g, [unit(3, 2)]).dim == 1

    def test_xy_generate_everything(self):
        g = heisenberg(1)
        assert subalgebra_closure(g, [unit(3, 0), unit(3, 1)]).dim == 3

    def test_idempotent_on_random_generators(self):
        g = current_algebra(heisenberg(1), QuotientAlgebra(Polynomial.t_power(2)))
        rng = random.Random(3)
        for _ in range(10):
            gens = [[rng.randint(-2, 2) for _ in range(6)] for _ in range(3)]
            sub = subalgebra_closure(g, gens)
            assert sub.dim <= 6
            assert subalgebra_closure(g, sub.basis) == sub


class TestTruncatedSum:
    def test_indexing_matches_labels(self):
        ts = TruncatedSum(2, (2, 1))
        g = ts.algebra
        assert g.labels[ts.index("X", 0, 0, 1)] == "X1*t^1@1"
        assert g.labels[ts.index("Y", 1, 0, 0)] == "Y2*t^0@1"
        assert g.labels[ts.index("Z", 0, 1, 0)] == "Z*t^0@2"

    def test_total_degree_and_dim(self):
        ts = TruncatedSum(1, (2, 3))
        assert ts.total_degree == 5
        assert ts.algebra.dim == 3 * 5

    def test_power_out_of_range_rejected(self):
        ts = TruncatedSum(1, (2,))
        with pytest.raises(ValueError):
            ts.index("X", 0, 0, 2)

    def test_top_center_bracket(self):
        ts = TruncatedSum(1, (2,))
        g = ts.algebra
        out = g.bracket(ts.basis_vector("X", 0, 0, 0), ts.basis_vector("Y", 0, 0, 1))
        assert out == ts.basis_vector("Z", 0, 0, 1)
