"""Batch verification grids.

Each criterion function returns a CheckResult; `run_suite` runs them
all.  Everything is exact, so a criterion either holds or exposes a
bug; there are no tolerances.  Randomized grids are driven by explicit
seeds and are reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .jordan import jordan_chevalley, verify_nilrep_theorem
from .lie import (
    Subspace,
    TruncatedSum,
    center,
    current_algebra,
    derived,
    heisenberg,
    subalgebra_closure,
)
from .linalg import QMatrix, block_assemble, is_nilpotent, minimal_polynomial, rank_of_rows
from .poly import Polynomial, QuotientAlgebra, poly_gcd
from .reps import (
    ABPair,
    Representation,
    beta_injective,
    ceil_two_sqrt,
    check_homomorphism,
    find_partner,
    is_faithful,
    make_AB,
    min_sum,
    minimal_faithful,
    mu_formula,
    pi0,
    pi_AB,
    tensor_rep,
)
from .schur import NilFamily, schur_bound_check, schur_decompose, verify_schur

__all__ = ["CheckResult", "grid_polynomials", "run_suite", "CRITERIA"]


@dataclass
class CheckResult:
    name: str
    passed: bool
    details: str


def grid_polynomials(quick: bool = False):
    """The (name, polynomial) grid used across the batch checks."""
    t = Polynomial.t_power
    lin = lambda c: Polynomial([c, 1])  # noqa: E731 - t + c
    grid = [
        ("t", t(1)),
        ("t^2", t(2)),
        ("t^3", t(3)),
        ("t^4", t(4)),
        ("t^5", t(5)),
        ("t^6", t(6)),
        ("t^2+1", Polynomial([1, 0, 1])),
        ("t^3-2", Polynomial([-2, 0, 0, 1])),
        ("t^4+t+1", Polynomial([1, 1, 0, 0, 1])),
        ("(t-1)*(t+2)", lin(-1) * lin(2)),
        ("t*(t-1)^2", t(1) * lin(-1) * lin(-1)),
    ]
    if quick:
        grid = [(n, p) for n, p in grid if p.degree <= 4]
    return grid


def _grid_ms(quick: bool):
    return (1, 2) if quick else (1, 2, 3)


def upper_bound_constructive(quick: bool = False, seed: int = 0) -> CheckResult:
    """Faithful representations of degree m*d + ceil(2*sqrt(d)) for the grid."""
    failures = []
    cells = 0
    for m in _grid_ms(quick):
        for name, p in grid_polynomials(quick):
            Q = QuotientAlgebra(p)
            rep = minimal_faithful(m, Q)
            cells += 1
            if rep.degree != mu_formula(m, Q.dim):
                failures.append(f"m={m} p={name}: degree {rep.degree}")
            elif not check_homomorphism(rep):
                failures.append(f"m={m} p={name}: not a homomorphism")
            elif not is_faithful(rep):
                failures.append(f"m={m} p={name}: not faithful")
    return CheckResult(
        "upper_bound_constructive",
        not failures,
        failures[0] if failures else f"{cells} grid cells, all faithful at the formula degree",
    )


def min_sum_bruteforce(quick: bool = False, seed: int = 0) -> CheckResult:
    """Exhaustive minimization of a+b with ab >= d against the closed form."""
    top = 500 if quick else 2000
    for d in range(1, top + 1):
        best = None
        a = 1
        while a * a <= d:
            ab = a * a
            b = a
            while ab < d:
                b += 1
                ab += a
            if best is None or a + b < best:
                best = a + b
            a += 1
        if best != ceil_two_sqrt(d):
            return CheckResult("min_sum_bruteforce", False, f"mismatch at d={d}")
        a_opt, b_opt = min_sum(d)
        if a_opt * b_opt < d or a_opt + b_opt != best:
            return CheckResult("min_sum_bruteforce", False, f"min_sum wrong at d={d}")
    return CheckResult("min_sum_bruteforce", True, f"d = 1..{top} all match ceil(2*sqrt(d))")


def _random_rational(rng) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def beta_frontier(quick: bool = False, seed: int = 0) -> CheckResult:
    """Canonical pairs are injective exactly when ab >= d; below the bar
    no pair (200 seeded random rational ones per cell) is injective."""
    rng = random.Random(seed + 3)
    top = 8 if quick else 12
    rand_per_cell = 50 if quick else 200
    for d in range(1, top + 1):
        Q = QuotientAlgebra(Polynomial.t_power(d))
        for a in range(1, d + 1):
            for b in range(1, d + 1):
                expected = a * b >= d
                if beta_injective(make_AB(d, a, b), Q) != expected:
                    return CheckResult(
                        "beta_frontier", False, f"canonical pair wrong at d={d} a={a} b={b}"
                    )
                if not expected:
                    for _ in range(rand_per_cell):
                        A = QMatrix(a, d, [_random_rational(rng) for _ in range(a * d)])
                        B = QMatrix(d, b, [_random_rational(rng) for _ in range(d * b)])
                        if beta_injective(ABPair(A, B), Q):
                            return CheckResult(
                                "beta_frontier",
                                False,
                                f"injective below the bar at d={d} a={a} b={b}",
                            )
    return CheckResult("beta_frontier", True, f"frontier exact for d <= {top}")


def real_plane_example(quick: bool = False, seed: int = 0) -> CheckResult:
    """The hand-encoded 5x5 family over t^2+1 is faithful; the built
    minimal representation has the same degree 5."""
    Q = QuotientAlgebra(Polynomial([1, 0, 1]))
    g = current_algebra(heisenberg(1), Q)
    E = QMatrix.elementary
    images = [
        E(5, 0, 1),                    # X (x) 1
        E(5, 0, 2),                    # X (x) t
        E(5, 1, 3) + E(5, 2, 4),       # Y (x) 1
        E(5, 1, 4) + E(5, 2, 3).scale(-1),  # Y (x) t
        E(5, 0, 3),                    # Z (x) 1
        E(5, 0, 4),                    # Z (x) t
    ]
    rep = Representation(g, images)
    if not check_homomorphism(rep):
        return CheckResult("real_plane_example", False, "hand-encoded family is not a homomorphism")
    if not is_faithful(rep):
        return CheckResult("real_plane_example", False, "hand-encoded family is not faithful")
    built = minimal_faithful(1, Q)
    if built.degree != 5:
        return CheckResult("real_plane_example", False, f"built degree {built.degree} != 5")
    return CheckResult("real_plane_example", True, "5x5 family faithful; built degree 5")


def tensor_bound(quick: bool = False, seed: int = 0) -> CheckResult:
    """pi0 (x) regular is faithful of degree (m+2)d and coincides with
    the blocked family at a = b = d with identity compressions."""
    for m in _grid_ms(quick):
        for name, p in grid_polynomials(quick):
            Q = QuotientAlgebra(p)
            d = Q.dim
            rep = tensor_rep(pi0(m), Q)
            if rep.degree != (m + 2) * d:
                return CheckResult("tensor_bound", False, f"m={m} p={name}: wrong degree")
            if not is_faithful(rep):
                return CheckResult("tensor_bound", False, f"m={m} p={name}: not faithful")
            pair = ABPair(QMatrix.identity(d), QMatrix.identity(d))
            if pi_AB(m, Q, pair).images != rep.images:
                return CheckResult(
                    "tensor_bound", False, f"m={m} p={name}: blocked family != tensor"
                )
    return CheckResult("tensor_bound", True, "tensor bound grid exact")


def _random_int_matrix(rng, n, lo=-3, hi=3) -> QMatrix:
    return QMatrix(n, n, [rng.randint(lo, hi) for _ in range(n * n)])


def _random_invertible(rng, n) -> QMatrix:
    while True:
        T = _random_int_matrix(rng, n, -2, 2)
        try:
            T.inverse()
            return T
        except ValueError:
            continue


def jordan_suite(quick: bool = False, seed: int = 0) -> CheckResult:
    """Decomposition identities on random integer matrices plus
    conjugation equivariance."""
    rng = random.Random(seed + 6)
    cases = 60 if quick else 200
    conj_cases = 15 if quick else 50
    for k in range(cases):
        n = rng.randint(1, 6)
        M = _random_int_matrix(rng, n)
        S, N = jordan_chevalley(M)
        if S + N != M:
            return CheckResult("jordan_suite", False, f"case {k}: S + N != M")
        if not (S @ N - N @ S).is_zero():
            return CheckResult("jordan_suite", False, f"case {k}: parts do not commute")
        if not is_nilpotent(N):
            return CheckResult("jordan_suite", False, f"case {k}: N not nilpotent")
        ms = minimal_polynomial(S)
        if poly_gcd(ms, ms.derivative()).degree != 0:
            return CheckResult("jordan_suite", False, f"case {k}: minpoly(S) not squarefree")
    for k in range(conj_cases):
        n = rng.randint(1, 5)
        M = _random_int_matrix(rng, n)
        S, N = jordan_chevalley(M)
        T = _random_invertible(rng, n)
        Ti = T.inverse()
        S2, N2 = jordan_chevalley(T @ M @ Ti)
        if S2 != T @ S @ Ti or N2 != T @ N @ Ti:
            return CheckResult("jordan_suite", False, f"conjugation case {k} disagrees")
    return CheckResult("jordan_suite", True, f"{cases} decompositions + {conj_cases} conjugations")


def nilrep_reduction(quick: bool = False, seed: int = 0) -> CheckResult:
    """Adding a scalar character that kills [g,g] never changes
    faithfulness of the nilpotent part."""
    rng = random.Random(seed + 7)
    cells = [(m, p) for m in (1, 2) for _, p in grid_polynomials(True) if p.degree <= 3]
    count = 8 if quick else 20
    done = 0
    while done < count:
        m, p = cells[done % len(cells)]
        Q = QuotientAlgebra(p)
        rep = minimal_faithful(m, Q)
        g = rep.algebra
        der = derived(g)
        # scalar character: random on basis vectors outside [g,g], zero on it
        lam = []
        for i in range(g.dim):
            unit = [1 if j == i else 0 for j in range(g.dim)]
            lam.append(Fraction(0) if der.contains(unit) else Fraction(rng.randint(-3, 3)))
        I = QMatrix.identity(rep.degree)
        perturbed = Representation(
            g, [M + I.scale(l) for M, l in zip(rep.images, lam)]
        )
        if not verify_nilrep_theorem(perturbed):
            return CheckResult("nilrep_reduction", False, f"case {done}: theorem check failed")
        done += 1
    return CheckResult("nilrep_reduction", True, f"{count} perturbed representations agree")


def _random_commuting_family(rng, n):
    """Span of constant-free polynomials in one nilpotent upper matrix,
    or an upper-right block family; always abelian and nilpotent."""
    if rng.random() < 0.5:
        M = QMatrix(
            n, n, [rng.randint(-2, 2) if j > i else 0 for i in range(n) for j in range(n)]
        )
        mats = []
        P = M
        for _ in range(n - 1):
            if not P.is_zero():
                mats.append(P)
            P = P @ M
    else:
        half = n // 2
        if half == 0:
            return None
        mats = []
        for _ in range(rng.randint(1, half * (n - half))):
            X = QMatrix(
                half,
                n - half,
                [rng.randint(-2, 2) for _ in range(half * (n - half))],
            )
            mats.append(
                block_assemble([[None, X], [None, None]], [half, n - half], [half, n - half])
            )
    # drop dependent members
    independent = []
    for T in mats:
        if T.is_zero():
            continue
        if rank_of_rows([U.vec() for U in independent + [T]]) == len(independent) + 1:
            independent.append(T)
    if not independent:
        return None
    return NilFamily(n, independent)


def _check_one_family(family: NilFamily, distinguished) -> str:
    dec = schur_decompose(family, distinguished)
    if not verify_schur(family, dec):
        return "verify_schur failed"
    sizes = [len(b) for b in dec.blocks]
    if any(sizes[i] < sizes[i + 1] for i in range(len(sizes) - 1)):
        return f"block sizes not monotone: {sizes}"
    if sum(sizes) != family.dim:
        return "blocks do not sum to the family dimension"
    v1 = dec.vectors[0]
    for T in distinguished:
        if all(x == 0 for x in T.apply(v1)):
            return "distinguished operator vanishes on v_1"
    if not schur_bound_check(family):
        return "dimension bound violated"
    return ""


def schur_suite(quick: bool = False, seed: int = 0) -> CheckResult:
    """Center images of the grid representations plus random commuting
    nilpotent families."""
    rng = random.Random(seed + 8)
    for m in _grid_ms(quick):
        for name, p in grid_polynomials(quick):
            Q = QuotientAlgebra(p)
            rep = minimal_faithful(m, Q)
            d = Q.dim
            z_images = rep.images[2 * m * d :]
            family = NilFamily(rep.degree, z_images)
            msg = _check_one_family(family, [z_images[d - 1]])
            if msg:
                return CheckResult("schur_suite", False, f"m={m} p={name}: {msg}")
    count = 15 if quick else 50
    done = 0
    while done < count:
        n = rng.randint(2, 8)
        family = _random_commuting_family(rng, n)
        if family is None:
            continue
        msg = _check_one_family(family, [family.basis[0]])
        if msg:
            return CheckResult("schur_suite", False, f"random family {done}: {msg}")
        done += 1
    return CheckResult("schur_suite", True, f"grid + {count} random families verified")


def _sum_grid(quick: bool):
    ms = (1, 2) if quick else (1, 2, 3)
    degree_sets = ((1,), (2,), (1, 1)) if quick else ((1,), (2,), (3,), (1, 1), (2, 1), (2, 2))
    return [(m, degs) for m in ms for degs in degree_sets]


def lower_bound_machinery(quick: bool = False, seed: int = 0) -> CheckResult:
    """Bracket-partner lemma and the subalgebra dimension inequality on
    seeded random inputs."""
    rng = random.Random(seed + 9)
    per_algebra = 20 if quick else 100
    for m, degs in _sum_grid(quick):
        ts = TruncatedSum(m, degs)
        g = ts.algebra
        z = center(g)
        d = ts.total_degree
        top_center = [ts.basis_vector("Z", 0, l, ts.degrees[l] - 1) for l in range(len(degs))]
        # bracket partner on non-central elements
        done = 0
        while done < per_algebra:
            x = [Fraction(rng.randint(-3, 3)) for _ in range(g.dim)]
            if z.contains(x):
                continue
            y, l = find_partner(ts, x)
            if g.bracket(x, y) != ts.basis_vector("Z", 0, l, ts.degrees[l] - 1):
                return CheckResult(
                    "lower_bound_machinery", False, f"partner bracket wrong (m={m}, degs={degs})"
                )
            done += 1
        # subalgebra dimension bound when no top central element is inside
        done = 0
        attempts = 0
        while done < per_algebra and attempts < per_algebra * 40:
            attempts += 1
            gens = [
                [Fraction(rng.randint(-2, 2)) for _ in range(g.dim)]
                for _ in range(rng.randint(1, 3))
            ]
            sub = subalgebra_closure(g, gens)
            if any(sub.contains(v) for v in top_center):
                continue
            zcap = sub.intersection(z)
            if sub.dim > m * d + zcap.dim:
                return CheckResult(
                    "lower_bound_machinery",
                    False,
                    f"dim bound fails (m={m}, degs={degs}): {sub.dim} > {m * d} + {zcap.dim}",
                )
            done += 1
        if done < per_algebra // 2:
            return CheckResult(
                "lower_bound_machinery", False, f"too few admissible subalgebras (m={m}, degs={degs})"
            )
    return CheckResult("lower_bound_machinery", True, "partner lemma + dimension bound hold")


CRITERIA = [
    upper_bound_constructive,
    min_sum_bruteforce,
    beta_frontier,
    real_plane_example,
    tensor_bound,
    jordan_suite,
    nilrep_reduction,
    schur_suite,
    lower_bound_machinery,
]


def run_suite(quick: bool = False, seed: int = 0):
    return [fn(quick=quick, seed=seed) for fn in CRITERIA]
