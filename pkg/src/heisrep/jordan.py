"""Additive Jordan-Chevalley decomposition over the rationals.

The semisimple part is certified by a squarefree minimal polynomial;
it is found by Newton iteration on the squarefree part of the minimal
polynomial, which never needs eigenvalues.
"""

from __future__ import annotations

from .linalg import QMatrix, is_nilpotent, minimal_polynomial
from .lie import center, derived, lower_central_series
from .poly import Polynomial, eval_at_matrix, poly_gcd, poly_xgcd, squarefree_part
from .reps import Representation, check_homomorphism, is_faithful

__all__ = [
    "JordanPair",
    "jordan_chevalley",
    "rep_jordan_parts",
    "verify_nilrep_theorem",
    "NilrepHypothesisError",
]


class JordanPair:
    """M = semisimple + nilpotent with the two parts commuting."""

    __slots__ = ("semisimple", "nilpotent")

    def __init__(self, semisimple: QMatrix, nilpotent: QMatrix):
        object.__setattr__(self, "semisimple", semisimple)
        object.__setattr__(self, "nilpotent", nilpotent)

    def __setattr__(self, name, value):
        raise AttributeError("JordanPair is immutable")

    def __iter__(self):
        return iter((self.semisimple, self.nilpotent))

    def __repr__(self):
        return f"JordanPair({self.semisimple.rows}x{self.semisimple.cols})"


def jordan_chevalley(M: QMatrix) -> JordanPair:
    """Decompose M = S + N, S semisimple over Q, N nilpotent, SN = NS.

    Newton iteration S <- S - f(S) u(S) on the squarefree part f of the
    minimal polynomial, with u the inverse of f' mod f.  S stays a
    polynomial in M, so the parts commute by construction.
    """
    if not M.is_square():
        raise ValueError("Jordan decomposition needs a square matrix")
    n = M.rows
    if n == 0:
        return JordanPair(M, M)
    p = minimal_polynomial(M)
    if p.degree < 1:
        return JordanPair(M, QMatrix.zero(n, n))
    f = squarefree_part(p)
    g, u, _ = poly_xgcd(f.derivative(), f)
    if g.degree != 0:
        raise RuntimeError("f and f' not coprime; squarefree part is broken")
    S = M
    # quadratic convergence: f(S) = 0 after about log2(deg p) rounds
    limit = p.degree.bit_length() + 2
    for _ in range(limit):
        fS = eval_at_matrix(f, S)
        if fS.is_zero():
            break
        S = S - fS @ eval_at_matrix(u, S)
    else:
        raise RuntimeError("Newton iteration failed to converge")
    N = M - S
    if not is_nilpotent(N):
        raise RuntimeError("nilpotent part check failed")
    return JordanPair(S, N)


def rep_jordan_parts(rep: Representation):
    """Imagewise Jordan parts (pi_S, pi_N) of a representation of a
    nilpotent Lie algebra; pi_S vanishes on the derived algebra."""
    if lower_central_series(rep.algebra)[-1].dim != 0:
        raise ValueError("rep_jordan_parts needs a nilpotent Lie algebra")
    parts = [jordan_chevalley(M) for M in rep.images]
    rep_S = Representation(rep.algebra, [p.semisimple for p in parts])
    rep_N = Representation(rep.algebra, [p.nilpotent for p in parts])
    return rep_S, rep_N


class NilrepHypothesisError(ValueError):
    """The algebra is not nilpotent or its center is not inside [g, g]."""


def verify_nilrep_theorem(rep: Representation) -> bool:
    """Check that pi and pi_N agree on faithfulness.

    Requires a nilpotent algebra whose center lies in the derived
    algebra; under that hypothesis a False return is a bug detector.
    """
    g = rep.algebra
    if lower_central_series(g)[-1].dim != 0:
        raise NilrepHypothesisError("algebra is not nilpotent")
    if not derived(g).contains_subspace(center(g)):
        raise NilrepHypothesisError("center is not contained in the derived algebra")
    _, rep_N = rep_jordan_parts(rep)
    return is_faithful(rep) == is_faithful(rep_N)
