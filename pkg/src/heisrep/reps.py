"""Representations of current Heisenberg algebras.

Builds the classical (m+2)-dimensional Heisenberg representation, its
tensor with the regular representation of k[t]/(p), and the blocked
family pi_AB whose faithfulness is governed by the injectivity of
q(P) |-> A q(P) B.  Also houses the integer minimization
min{a+b : ab >= d} and the minimal-dimension formula m*d + ceil(2*sqrt(d)).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .linalg import QMatrix, block_assemble, kron, rank, rank_of_rows
from .lie import LieAlgebra, Subspace, TruncatedSum, center, current_algebra, heisenberg
from .poly import QuotientAlgebra, regular_representation

__all__ = [
    "Representation",
    "ABPair",
    "check_homomorphism",
    "is_faithful",
    "pi0",
    "tensor_rep",
    "make_AB",
    "beta_injective",
    "pi_AB",
    "min_sum",
    "ceil_two_sqrt",
    "mu_formula",
    "minimal_faithful",
    "find_partner",
]


class Representation:
    """A Lie algebra together with the images of its basis."""

    __slots__ = ("algebra", "degree", "images")

    def __init__(self, algebra: LieAlgebra, images: Sequence[QMatrix]):
        images = tuple(images)
        if len(images) != algebra.dim:
            raise ValueError(
                f"expected {algebra.dim} image matrices, got {len(images)}"
            )
        degree = images[0].rows if images else 0
        for M in images:
            if not M.is_square() or M.rows != degree:
                raise ValueError("image matrices must be square of equal size")
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Representation is immutable")

    def image_of(self, v: Sequence) -> QMatrix:
        """pi(x) for a coordinate vector x, by linearity."""
        out = QMatrix.zero(self.degree, self.degree)
        for c, M in zip(v, self.images):
            c = Fraction(c)
            if c != 0:
                out = out + M.scale(c)
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Representation)
            and self.algebra == other.algebra
            and self.images == other.images
        )

    def __hash__(self):
        return hash((self.algebra, self.images))

    def __repr__(self):
        return f"Representation(degree {self.degree} of dim-{self.algebra.dim} algebra)"

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra.to_json(),
            "degree": self.degree,
            "images": [M.to_json() for M in self.images],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Representation":
        try:
            algebra = LieAlgebra.from_json(data["algebra"])
            images = [QMatrix.from_json(M) for M in data["images"]]
            degree = data["degree"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed representation object: {exc}") from exc
        rep = cls(algebra, images)
        if rep.degree != degree:
            raise ValueError(
                f"declared degree {degree} does not match image size {rep.degree}"
            )
        return rep


def check_homomorphism(rep: Representation) -> bool:
    """True iff pi([e_i, e_j]) = [pi(e_i), pi(e_j)] for all basis pairs."""
    g = rep.algebra
    imgs = rep.images
    for i in range(g.dim):
        Mi = imgs[i]
        for j in range(i + 1, g.dim):
            Mj = imgs[j]
            lhs = Mi @ Mj - Mj @ Mi
            if not (lhs - rep.image_of(g.structure[i][j])).is_zero():
                return False
    return True


def is_faithful(rep: Representation) -> bool:
    """Exact-rank injectivity of x |-> pi(x); requires a homomorphism."""
    if not check_homomorphism(rep):
        raise ValueError("is_faithful requires a homomorphism")
    return rank_of_rows([M.vec() for M in rep.images]) == rep.algebra.dim


def pi0(m: int) -> Representation:
    """The classical faithful representation of h_m on k^(m+2).

    X_i |-> E_{1,i+1}, Y_i |-> E_{i+1,m+2}, Z |-> E_{1,m+2}.
    """
    if m < 1:
        raise ValueError("pi0(m) needs m >= 1")
    n = m + 2
    images = (
        [QMatrix.elementary(n, 0, i + 1) for i in range(m)]
        + [QMatrix.elementary(n, i + 1, n - 1) for i in range(m)]
        + [QMatrix.elementary(n, 0, n - 1)]
    )
    return Representation(heisenberg(m), images)


def tensor_rep(pi: Representation, Q: QuotientAlgebra) -> Representation:
    """pi (x) rho on the current algebra: e_i (x) t^j |-> pi(e_i) (x) P^j."""
    powers = regular_representation(Q)
    g = current_algebra(pi.algebra, Q, verify=False)
    images = [kron(M, Pj) for M in pi.images for Pj in powers]
    return Representation(g, images)


class ABPair:
    """The compression pair: A is a x d, B is d x b."""

    __slots__ = ("a", "b", "d", "A", "B")

    def __init__(self, A: QMatrix, B: QMatrix):
        if A.cols != B.rows:
            raise ValueError("A and B must share the inner dimension d")
        object.__setattr__(self, "a", A.rows)
        object.__setattr__(self, "b", B.cols)
        object.__setattr__(self, "d", A.cols)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)

    def __setattr__(self, name, value):
        raise AttributeError("ABPair is immutable")

    def __repr__(self):
        return f"ABPair(a={self.a}, b={self.b}, d={self.d})"


def make_AB(d: int, a: int, b: int) -> ABPair:
    """The canonical 0/1 pair: A[i,j] = 1 iff j = d-(a-i)b; B = truncated identity.

    Indices are 1-based in the defining formula; values of j outside
    1..d contribute nothing.
    """
    if d < 1 or a < 1 or b < 1:
        raise ValueError("d, a, b must all be >= 1")
    A_entries = [Fraction(0)] * (a * d)
    for i in range(1, a + 1):
        j = d - (a - i) * b
        if 1 <= j <= d:
            A_entries[(i - 1) * d + (j - 1)] = Fraction(1)
    B_entries = [Fraction(0)] * (d * b)
    for i in range(min(d, b)):
        B_entries[i * b + i] = Fraction(1)
    return ABPair(QMatrix(a, d, A_entries), QMatrix(d, b, B_entries))


def beta_injective(pair: ABPair, Q: QuotientAlgebra) -> bool:
    """Injectivity of q(P) |-> A q(P) B on the d-dimensional algebra k[P]."""
    if pair.d != Q.dim:
        raise ValueError("pair inner dimension does not match deg p")
    rows = []
    # right-to-left grouping: the companion powers are sparse
    PkB = pair.B
    for k in range(Q.dim):
        if k:
            PkB = Q.companion @ PkB
        rows.append((pair.A @ PkB).vec())
    return rank_of_rows(rows) == Q.dim


def _pi_ab_layout(m: int, d: int, a: int, b: int):
    return [a] + [d] * m + [b]


def pi_AB(m: int, Q: QuotientAlgebra, pair: ABPair) -> Representation:
    """The blocked representation of h_{m,p} of degree m*d + a + b.

    Layout: a leading a-block, m middle d-blocks, a trailing b-block.
    X_i (x) t^j acts by A P^j into block column i; Y_i (x) t^j by P^j B
    out of block row i; Z (x) t^j by A P^j B in the corner.
    """
    if m < 1:
        raise ValueError("m >= 1 required")
    d = Q.dim
    if pair.d != d:
        raise ValueError("pair inner dimension does not match deg p")
    sizes = _pi_ab_layout(m, d, pair.a, pair.b)
    nblocks = m + 2
    g = current_algebra(heisenberg(m), Q, verify=False)
    powers = regular_representation(Q)

    def blocked(bi, bj, M):
        layout = [[None] * nblocks for _ in range(nblocks)]
        layout[bi][bj] = M
        return block_assemble(layout, sizes, sizes)

    images = []
    for i in range(m):  # X_i (x) t^j
        for j in range(d):
            images.append(blocked(0, i + 1, pair.A @ powers[j]))
    for i in range(m):  # Y_i (x) t^j
        for j in range(d):
            images.append(blocked(i + 1, m + 1, powers[j] @ pair.B))
    for j in range(d):  # Z (x) t^j
        images.append(blocked(0, m + 1, pair.A @ powers[j] @ pair.B))
    return Representation(g, images)


def ceil_two_sqrt(d: int) -> int:
    """ceil(2*sqrt(d)) in pure integer arithmetic.

    The least s with floor(s/2)*ceil(s/2) >= d.
    """
    if d < 1:
        raise ValueError("d >= 1 required")
    s = 2 * math.isqrt(d) - 1
    if s < 1:
        s = 1
    while (s // 2) * ((s + 1) // 2) < d:
        s += 1
    return s


def min_sum(d: int):
    """A pair (a, b) minimizing a+b subject to ab >= d; smallest a wins ties."""
    if d < 1:
        raise ValueError("d >= 1 required")
    best = None
    for a in range(1, math.isqrt(d) + 2):
        b = -(-d // a)
        if best is None or a + b < best[0] + best[1]:
            best = (a, b)
    return best


def mu_formula(m: int, d: int) -> int:
    """m*d + ceil(2*sqrt(d)): the minimal faithful dimension of h_{m,p}."""
    if m < 1 or d < 1:
        raise ValueError("m >= 1 and d >= 1 required")
    return m * d + ceil_two_sqrt(d)


def minimal_faithful(m: int, Q: QuotientAlgebra) -> Representation:
    """A faithful representation of h_{m,p} of degree m*deg p + ceil(2*sqrt(deg p))."""
    a, b = min_sum(Q.dim)
    return pi_AB(m, Q, make_AB(Q.dim, a, b))


def find_partner(ts: TruncatedSum, x: Sequence):
    """For non-central x in ⊕_l h_m (x) k[t]/(t^{d_l}), return (y, l) with
    [x, y] equal to the top central element Z^{d_l - 1} of summand l.

    The partner is the scaled dual symbol of the lowest-power X or Y
    coefficient of x; a Y-type leading coefficient flips the sign so
    the bracket comes out to +Z^{d_l - 1}.
    """
    g = ts.algebra
    x = tuple(Fraction(c) for c in x)
    if len(x) != g.dim:
        raise ValueError("coordinate vector length mismatch")
    found = None
    for l in range(len(ts.degrees)):
        for kind in ("X", "Y"):
            for i in range(ts.m):
                for j in range(ts.degrees[l]):
                    if x[ts.index(kind, i, l, j)] != 0:
                        found = (kind, i, l)
                        break
                if found:
                    break
            if found:
                break
        if found:
            break
    if found is None:
        raise ValueError("element is central; no bracket partner exists")
    kind, i0, l0 = found
    dl = ts.degrees[l0]
    j1 = min(j for j in range(dl) if x[ts.index(kind, i0, l0, j)] != 0)
    coef = x[ts.index(kind, i0, l0, j1)]
    if kind == "X":
        y = [c / coef for c in ts.basis_vector("Y", i0, l0, dl - 1 - j1)]
    else:
        y = [-c / coef for c in ts.basis_vector("X", i0, l0, dl - 1 - j1)]
    return tuple(y), l0
