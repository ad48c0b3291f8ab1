"""Lie algebras given by structure constants.

Covers the Heisenberg algebras, current algebras g (x) k[t]/(p),
direct sums, centers, derived algebras and lower central series, all
over exact rationals.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .linalg import QMatrix, _eliminate, kernel_basis, scalar_from_json, scalar_to_json
from .poly import Polynomial, QuotientAlgebra

__all__ = [
    "LieAlgebra",
    "Subspace",
    "heisenberg",
    "current_algebra",
    "center",
    "derived",
    "lower_central_series",
    "direct_sum",
    "subalgebra_closure",
    "TruncatedSum",
    "truncated_sum",
]


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _fvec(v) -> tuple:
    return tuple(_frac(x) for x in v)


class Subspace:
    """A subspace of k^n stored by its reduced row echelon basis.

    The canonical form makes subspace equality plain data equality.
    """

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, vectors: Sequence[Sequence] = ()):
        rows = [list(_fvec(v)) for v in vectors]
        for r in rows:
            if len(r) != ambient_dim:
                raise ValueError("vector length does not match ambient dimension")
        if rows:
            _, piv = _eliminate(rows, len(rows), ambient_dim)
            rows = rows[: len(piv)]
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "basis", tuple(tuple(r) for r in rows))

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence) -> bool:
        v = _fvec(v)
        if len(v) != self.ambient_dim:
            raise ValueError("vector length does not match ambient dimension")
        rows = [list(b) for b in self.basis] + [list(v)]
        _, piv = _eliminate(rows, len(rows), self.ambient_dim)
        return len(piv) == self.dim

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def sum(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return Subspace(self.ambient_dim, list(self.basis) + list(other.basis))

    def intersection(self, other: "Subspace") -> "Subspace":
        """Zassenhaus-free intersection via the kernel of stacked coordinates."""
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        if not self.basis or not other.basis:
            return Subspace(self.ambient_dim)
        # columns: [self.basis | -other.basis]; kernel rows give coefficients
        k1, k2 = self.dim, other.dim
        n = self.ambient_dim
        entries = []
        for i in range(n):
            entries.extend(b[i] for b in self.basis)
            entries.extend(-b[i] for b in other.basis)
        M = QMatrix(n, k1 + k2, entries)
        vecs = []
        for ker in kernel_basis(M):
            v = [Fraction(0)] * n
            for c, b in zip(ker[:k1], self.basis):
                if c != 0:
                    for i in range(n):
                        v[i] += c * b[i]
            vecs.append(v)
        return Subspace(n, vecs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of k^{self.ambient_dim})"


class LieAlgebra:
    """A finite-dimensional Lie algebra over a named basis.

    `structure[i][j]` is the coordinate vector of [e_i, e_j].
    Antisymmetry and the Jacobi identity are verified at construction
    unless `verify=False` (only for tables already known to be valid).
    """

    __slots__ = ("dim", "labels", "structure")

    def __init__(self, labels: Sequence[str], structure, verify: bool = True):
        n = len(labels)
        table = tuple(tuple(_fvec(structure[i][j]) for j in range(n)) for i in range(n))
        for i in range(n):
            for j in range(n):
                if len(table[i][j]) != n:
                    raise ValueError(f"structure entry ({i},{j}) has wrong length")
        object.__setattr__(self, "dim", n)
        object.__setattr__(self, "labels", tuple(labels))
        object.__setattr__(self, "structure", table)
        if verify:
            self._verify()

    def __setattr__(self, name, value):
        raise AttributeError("LieAlgebra is immutable")

    def _verify(self):
        n = self.dim
        c = self.structure
        for i in range(n):
            if any(x != 0 for x in c[i][i]):
                raise ValueError(f"[e_{i}, e_{i}] != 0")
            for j in range(i + 1, n):
                if any(a != -b for a, b in zip(c[i][j], c[j][i])):
                    raise ValueError(f"structure is not antisymmetric at ({i},{j})")
        for i in range(n):
            for j in range(i + 1, n):
                v_ij = c[i][j]
                for k in range(j + 1, n):
                    acc = [Fraction(0)] * n
                    for v, other in ((v_ij, k), (c[j][k], i), (c[k][i], j)):
                        for s, x in enumerate(v):
                            if x != 0:
                                row = c[s][other]
                                for u, y in enumerate(row):
                                    if y != 0:
                                        acc[u] += x * y
                    if any(x != 0 for x in acc):
                        raise ValueError(f"Jacobi identity fails on triple ({i},{j},{k})")

    def bracket(self, u: Sequence, v: Sequence) -> tuple:
        """[u, v] by bilinearity from the structure constants."""
        u, v = _fvec(u), _fvec(v)
        n = self.dim
        if len(u) != n or len(v) != n:
            raise ValueError("coordinate vector length mismatch")
        out = [Fraction(0)] * n
        c = self.structure
        for i, a in enumerate(u):
            if a == 0:
                continue
            for j, b in enumerate(v):
                if b == 0:
                    continue
                f = a * b
                for s, x in enumerate(c[i][j]):
                    if x != 0:
                        out[s] += f * x
        return tuple(out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LieAlgebra)
            and self.labels == other.labels
            and self.structure == other.structure
        )

    def __hash__(self):
        return hash((self.labels, self.structure))

    def __repr__(self):
        return f"LieAlgebra(dim {self.dim}: {', '.join(self.labels)})"

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "labels": list(self.labels),
            "structure": [
                [[scalar_to_json(x) for x in self.structure[i][j]] for j in range(self.dim)]
                for i in range(self.dim)
            ],
        }

    @classmethod
    def from_json(cls, data: dict, verify: bool = True) -> "LieAlgebra":
        try:
            labels = data["labels"]
            structure = data["structure"]
            dim = data["dim"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed Lie algebra object: {exc}") from exc
        if len(labels) != dim:
            raise ValueError("label count does not match declared dimension")
        table = [
            [[scalar_from_json(x) for x in structure[i][j]] for j in range(dim)]
            for i in range(dim)
        ]
        return cls(labels, table, verify=verify)


def heisenberg(m: int) -> LieAlgebra:
    """The (2m+1)-dimensional Heisenberg algebra, [X_i, Y_i] = Z."""
    if m < 1:
        raise ValueError("heisenberg(m) needs m >= 1")
    n = 2 * m + 1
    labels = [f"X{i + 1}" for i in range(m)] + [f"Y{i + 1}" for i in range(m)] + ["Z"]
    zero = [Fraction(0)] * n
    table = [[list(zero) for _ in range(n)] for _ in range(n)]
    for i in range(m):
        table[i][m + i][n - 1] = Fraction(1)
        table[m + i][i][n - 1] = Fraction(-1)
    return LieAlgebra(labels, table, verify=False)


def current_algebra(g: LieAlgebra, Q: QuotientAlgebra, verify: bool = True) -> LieAlgebra:
    """g (x) k[t]/(p) with basis e_i (x) t^j, ordered i-major.

    [e_i (x) t^j, e_k (x) t^j'] expands [e_i, e_k] over the reduction
    of t^(j+j') mod p.
    """
    d = Q.dim
    n = g.dim * d
    labels = [f"{lab}*t^{j}" for lab in g.labels for j in range(d)]
    # reductions of t^s mod p for s up to 2d-2
    reds = []
    for s in range(2 * d - 1):
        reds.append(Q.reduce(Polynomial.t_power(s)))
    zero = [Fraction(0)] * n
    table = [[list(zero) for _ in range(n)] for _ in range(n)]
    for gi in range(g.dim):
        for gk in range(g.dim):
            base = g.structure[gi][gk]
            if all(x == 0 for x in base):
                continue
            for j in range(d):
                for jp in range(d):
                    red = reds[j + jp]
                    row = table[gi * d + j][gk * d + jp]
                    for s, x in enumerate(base):
                        if x == 0:
                            continue
                        for jq in range(red.degree + 1):
                            cq = red.coeff(jq)
                            if cq != 0:
                                row[s * d + jq] += x * cq
    return LieAlgebra(labels, table, verify=verify)


def center(g: LieAlgebra) -> Subspace:
    """{x : [x, e_j] = 0 for all j}."""
    n = g.dim
    if n == 0:
        return Subspace(0)
    rows = []
    for j in range(n):
        for comp in range(n):
            rows.append([g.structure[i][j][comp] for i in range(n)])
    M = QMatrix.from_rows(rows)
    return Subspace(n, kernel_basis(M))


def derived(g: LieAlgebra) -> Subspace:
    """[g, g]: the span of all basis brackets."""
    vecs = [
        g.structure[i][j]
        for i in range(g.dim)
        for j in range(i + 1, g.dim)
    ]
    return Subspace(g.dim, vecs)


def _bracket_subspaces(g: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    vecs = [g.bracket(u, v) for u in a.basis for v in b.basis]
    return Subspace(g.dim, vecs)


def lower_central_series(g: LieAlgebra) -> list:
    """g >= [g,g] >= [g,[g,g]] >= ... until the series stabilizes."""
    whole = Subspace(g.dim, [[1 if i == j else 0 for i in range(g.dim)] for j in range(g.dim)])
    series = [whole]
    while True:
        nxt = _bracket_subspaces(g, whole, series[-1])
        if nxt == series[-1]:
            break
        series.append(nxt)
        if nxt.dim == 0:
            break
    return series


def is_nilpotent_algebra(g: LieAlgebra) -> bool:
    return lower_central_series(g)[-1].dim == 0


def direct_sum(gs: Sequence[LieAlgebra]) -> LieAlgebra:
    """Block-diagonal direct sum; labels gain an "@l" summand suffix."""
    gs = list(gs)
    if not gs:
        raise ValueError("direct sum of no algebras")
    if len(gs) == 1:
        return gs[0]
    n = sum(g.dim for g in gs)
    labels = []
    zero = [Fraction(0)] * n
    table = [[list(zero) for _ in range(n)] for _ in range(n)]
    off = 0
    for l, g in enumerate(gs, start=1):
        labels.extend(f"{lab}@{l}" for lab in g.labels)
        for i in range(g.dim):
            for j in range(g.dim):
                row = table[off + i][off + j]
                for s, x in enumerate(g.structure[i][j]):
                    row[off + s] = x
        off += g.dim
    return LieAlgebra(labels, table, verify=False)


def subalgebra_closure(g: LieAlgebra, vectors: Sequence[Sequence]) -> Subspace:
    """Smallest bracket-closed subspace containing the given vectors."""
    sub = Subspace(g.dim, vectors)
    while True:
        nxt = sub.sum(_bracket_subspaces(g, sub, sub))
        if nxt == sub:
            return sub
        sub = nxt


class TruncatedSum:
    """A direct sum of truncated current Heisenberg algebras.

    Wraps the algebra for ⊕_l h_m (x) k[t]/(t^{d_l}) together with the
    (m, degrees) bookkeeping needed to address the X/Y/Z basis symbols.
    """

    __slots__ = ("m", "degrees", "algebra")

    def __init__(self, m: int, degrees: Sequence[int]):
        if m < 1:
            raise ValueError("m >= 1 required")
        degrees = tuple(int(d) for d in degrees)
        if not degrees or any(d < 1 for d in degrees):
            raise ValueError("each truncation degree must be >= 1")
        parts = [
            current_algebra(heisenberg(m), QuotientAlgebra(Polynomial.t_power(d)), verify=False)
            for d in degrees
        ]
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "degrees", degrees)
        object.__setattr__(self, "algebra", direct_sum(parts))

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSum is immutable")

    @property
    def total_degree(self) -> int:
        return sum(self.degrees)

    def summand_offset(self, l: int) -> int:
        return (2 * self.m + 1) * sum(self.degrees[:l])

    def index(self, kind: str, i: int, l: int, j: int) -> int:
        """Basis index of X_i^j / Y_i^j / Z^j in summand l (all 0-based i, l, j)."""
        m, dl = self.m, self.degrees[l]
        if not 0 <= j < dl:
            raise ValueError(f"power {j} out of range for summand of degree {dl}")
        off = self.summand_offset(l)
        if kind == "X":
            return off + i * dl + j
        if kind == "Y":
            return off + (m + i) * dl + j
        if kind == "Z":
            return off + 2 * m * dl + j
        raise ValueError(f"unknown basis kind {kind!r}")

    def basis_vector(self, kind: str, i: int, l: int, j: int) -> tuple:
        v = [Fraction(0)] * self.algebra.dim
        v[self.index(kind, i, l, j)] = Fraction(1)
        return tuple(v)

    def coefficient(self, v: Sequence, kind: str, i: int, l: int, j: int) -> Fraction:
        return _frac(v[self.index(kind, i, l, j)])


def truncated_sum(m: int, degrees: Sequence[int]) -> TruncatedSum:
    return TruncatedSum(m, degrees)
