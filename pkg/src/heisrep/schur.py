"""Structure of commuting families of nilpotent operators.

Decomposes an abelian nilpotent family N into blocks N_1 + ... + N_s
with distinguished vectors v_1, ..., v_s such that evaluation at v_i is
injective on N_i, later blocks kill earlier vectors, and later blocks
map the whole space into the image of earlier evaluations.  The
dimension bound dim V >= ceil(2*sqrt(dim N)) follows and is exposed as
a direct check.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import sympy as sp

from .linalg import QMatrix, is_nilpotent, kernel_basis, rank_of_rows
from .reps import ceil_two_sqrt

__all__ = [
    "NilFamily",
    "SchurDecomposition",
    "max_rank_vector",
    "schur_decompose",
    "verify_schur",
    "schur_bound_check",
]


class NilFamily:
    """A basis of an abelian subspace of nilpotent operators on k^n.

    Validates nilpotency, pairwise commutation and linear independence
    at construction.
    """

    __slots__ = ("space_dim", "basis")

    def __init__(self, space_dim: int, basis: Sequence[QMatrix]):
        basis = tuple(basis)
        if not basis:
            raise ValueError("a nil family must contain at least one operator")
        for T in basis:
            if not T.is_square() or T.rows != space_dim:
                raise ValueError("family operators must be square of the space dimension")
            if not is_nilpotent(T):
                raise ValueError("family contains a non-nilpotent operator")
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                if not (basis[i] @ basis[j] - basis[j] @ basis[i]).is_zero():
                    raise ValueError(f"operators {i} and {j} do not commute")
        if rank_of_rows([T.vec() for T in basis]) != len(basis):
            raise ValueError("family basis is linearly dependent")
        object.__setattr__(self, "space_dim", space_dim)
        object.__setattr__(self, "basis", basis)

    def __setattr__(self, name, value):
        raise AttributeError("NilFamily is immutable")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def operator(self, coords: Sequence) -> QMatrix:
        out = QMatrix.zero(self.space_dim, self.space_dim)
        for c, T in zip(coords, self.basis):
            c = Fraction(c)
            if c != 0:
                out = out + T.scale(c)
        return out

    def __repr__(self):
        return f"NilFamily(dim {self.dim} on k^{self.space_dim})"


class SchurDecomposition:
    """Vectors v_1..v_s and blocks of operator coordinates."""

    __slots__ = ("vectors", "blocks")

    def __init__(self, vectors, blocks):
        object.__setattr__(self, "vectors", tuple(tuple(v) for v in vectors))
        object.__setattr__(self, "blocks", tuple(tuple(tuple(c) for c in blk) for blk in blocks))

    def __setattr__(self, name, value):
        raise AttributeError("SchurDecomposition is immutable")

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    def __repr__(self):
        sizes = [len(b) for b in self.blocks]
        return f"SchurDecomposition(s={len(self.vectors)}, block dims {sizes})"


# ---------------------------------------------------------------------------
# generic-vector search


def _sym_pencil(mats, n):
    """Columns T_k v with v symbolic; entries are linear forms in v."""
    vs = sp.symbols(f"v0:{n}")
    cols = []
    for T in mats:
        col = []
        for i in range(n):
            expr = sp.Integer(0)
            for j in range(n):
                x = T[i, j]
                if x != 0:
                    expr += sp.Rational(x.numerator, x.denominator) * vs[j]
            col.append(expr)
        cols.append(col)
    M = sp.Matrix([[cols[k][i] for k in range(len(mats))] for i in range(n)])
    return M, vs


def _point_rank(mats, v) -> int:
    return rank_of_rows([T.apply(v) for T in mats])


def _avoid_ok(avoid, v) -> bool:
    return all(any(x != 0 for x in T.apply(v)) for T in avoid)


def _candidates(n):
    yield tuple(Fraction(1) for _ in range(n))
    for s in (2, 3, 5, 7, 11):
        yield tuple(Fraction(s) ** k for k in range(n))
    for s in (2, 3):
        yield tuple(Fraction(1, s) ** k for k in range(n))


def max_rank_vector(mats: Sequence[QMatrix], avoid: Sequence[QMatrix] = ()) -> tuple:
    """A rational v maximizing dim{T v : T in span(mats)} with T_i v != 0
    for every operator in `avoid`.

    Deterministic: a short list of structured candidates is tried
    against the exact generic rank of the pencil; if none works, the
    coordinates are specialized one at a time, each time re-checking
    symbolically that the maximal rank is still attainable.
    """
    mats = list(mats)
    if not mats or all(T.is_zero() for T in mats):
        raise ValueError("the family must contain a nonzero operator")
    for T in avoid:
        if T.is_zero():
            raise ValueError("avoid set contains the zero operator")
    n = mats[0].rows

    # cheap upper bound: dim of the sum of the images
    stacked = [sum((list(T.row(i)) for T in mats), []) for i in range(n)]
    r_upper = min(len(mats), rank_of_rows(stacked))

    best_v, best_r = None, -1
    for v in _candidates(n):
        r = _point_rank(mats, v)
        if r > best_r and _avoid_ok(avoid, v):
            best_v, best_r = v, r
        if best_r == r_upper:
            return best_v

    M, vs = _sym_pencil(mats, n)
    r_max = M.rank()
    if best_r == r_max:
        return best_v

    # rigorous fallback: fix coordinates left to right, keeping the
    # substituted pencil at full generic rank and every avoid operator
    # symbolically nonzero
    avoid_sym = []
    for T in avoid:
        AM, _ = _sym_pencil([T], n)
        avoid_sym.append(AM)
    cap = r_max + len(avoid) + n + 3
    subs = {}
    for j in range(n):
        placed = False
        for t in range(cap):
            trial = dict(subs)
            trial[vs[j]] = sp.Integer(t)
            Mt = M.subs(trial)
            if Mt.rank() != r_max:
                continue
            if any(all(sp.expand(e) == 0 for e in A.subs(trial)) for A in avoid_sym):
                continue
            subs = trial
            placed = True
            break
        if not placed:
            raise RuntimeError("generic vector search exceeded its scan bound")
    v = tuple(Fraction(int(subs[vs[j]])) for j in range(n))
    assert _point_rank(mats, v) == r_max and _avoid_ok(avoid, v)
    return v


# ---------------------------------------------------------------------------
# decomposition


def _greedy_complement(kernel_coords, k):
    """Indices of level-basis elements extending the kernel to the whole
    family, chosen greedily in index order."""
    rows = [list(c) for c in kernel_coords]
    chosen = []
    base_rank = rank_of_rows(rows)
    for idx in range(k):
        unit = [Fraction(1 if i == idx else 0) for i in range(k)]
        if rank_of_rows(rows + [unit]) > base_rank:
            rows.append(unit)
            base_rank += 1
            chosen.append(idx)
    return chosen


def schur_decompose(family: NilFamily, distinguished: Sequence[QMatrix] = ()) -> SchurDecomposition:
    """Blocks and vectors satisfying the three evaluation properties.

    v_1 maximizes dim N(v) and keeps every distinguished operator from
    vanishing on it; the first block is a complement of ker(N -> N v_1)
    and the rest comes from recursing on the kernel.
    """
    for T in distinguished:
        if T.is_zero():
            raise ValueError("distinguished operators must be nonzero")
    k = family.dim
    # current level: operators plus their coordinates in the original basis
    mats = list(family.basis)
    coords = [tuple(Fraction(1 if i == j else 0) for i in range(k)) for j in range(k)]
    vectors = []
    blocks = []
    avoid = list(distinguished)
    while mats:
        v = max_rank_vector(mats, avoid)
        avoid = []  # the distinguished set only constrains v_1
        vectors.append(v)
        # kernel of T |-> T v in level coordinates
        cols = [T.apply(v) for T in mats]
        n = family.space_dim
        F = QMatrix(n, len(mats), [cols[j][i] for i in range(n) for j in range(len(mats))])
        ker = kernel_basis(F)
        if not ker:
            blocks.append(tuple(coords))
            break
        chosen = _greedy_complement(ker, len(mats))
        blocks.append(tuple(coords[idx] for idx in chosen))
        next_mats = []
        next_coords = []
        for kv in ker:
            T = QMatrix.zero(n, n)
            c = [Fraction(0)] * k
            for x, (Tm, cm) in zip(kv, zip(mats, coords)):
                if x != 0:
                    T = T + Tm.scale(x)
                    for i in range(k):
                        c[i] += x * cm[i]
            next_mats.append(T)
            next_coords.append(tuple(c))
        mats, coords = next_mats, next_coords
    return SchurDecomposition(vectors, blocks)


def verify_schur(family: NilFamily, dec: SchurDecomposition) -> bool:
    """Exact check of the three block properties plus the direct sum."""
    s = dec.block_count
    if s != len(dec.vectors) or any(not blk for blk in dec.blocks):
        return False
    all_coords = [c for blk in dec.blocks for c in blk]
    if len(all_coords) != family.dim or rank_of_rows(all_coords) != family.dim:
        return False
    if rank_of_rows(dec.vectors) != s:
        return False
    block_ops = [[family.operator(c) for c in blk] for blk in dec.blocks]
    for i in range(s):
        v = dec.vectors[i]
        # (1) evaluation at v_i is injective on block i
        images_i = [T.apply(v) for T in block_ops[i]]
        if rank_of_rows(images_i) != len(block_ops[i]):
            return False
        for j in range(i + 1, s):
            for T in block_ops[j]:
                # (2) later blocks kill v_i
                if any(x != 0 for x in T.apply(v)):
                    return False
                # (3) later blocks map V into the image of F_i on block i
                base = rank_of_rows(images_i)
                for col in range(family.space_dim):
                    w = T.col(col)
                    if rank_of_rows(images_i + [w]) != base:
                        return False
    return True


def schur_bound_check(family: NilFamily) -> bool:
    """dim V >= ceil(2*sqrt(dim N)) for every valid family."""
    return family.space_dim >= ceil_two_sqrt(family.dim)
