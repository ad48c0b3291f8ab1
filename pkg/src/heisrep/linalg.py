"""Exact dense linear algebra over the rationals.

Everything here works with `fractions.Fraction` entries, so ranks,
kernels and minimal polynomials are exact; there is no floating point
and no tolerance anywhere in this module.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, str, Fraction]

__all__ = [
    "QMatrix",
    "rank",
    "kernel_basis",
    "kron",
    "block_assemble",
    "is_nilpotent",
    "minimal_polynomial",
    "rref",
    "scalar_to_json",
    "scalar_from_json",
]


def _frac(x: Scalar) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not a rational scalar: {x!r}")


def scalar_to_json(x: Fraction):
    """Encode a rational as a JSON integer or a canonical "num/den" string."""
    if x.denominator == 1:
        return int(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def scalar_from_json(x) -> Fraction:
    if isinstance(x, bool):
        raise ValueError(f"not a rational entry: {x!r}")
    if isinstance(x, (int, str)):
        return _frac(x)
    raise ValueError(f"not a rational entry: {x!r}")


class QMatrix:
    """An immutable dense matrix of exact rationals (row-major)."""

    __slots__ = ("rows", "cols", "_e")

    def __init__(self, rows: int, cols: int, entries: Iterable[Scalar]):
        if rows < 0 or cols < 0:
            raise ValueError("negative matrix dimensions")
        e = tuple(_frac(x) for x in entries)
        if len(e) != rows * cols:
            raise ValueError(
                f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(e)}"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "_e", e)

    def __setattr__(self, name, value):
        raise AttributeError("QMatrix is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rows(cls, rows_data: Sequence[Sequence[Scalar]]) -> "QMatrix":
        r = len(rows_data)
        c = len(rows_data[0]) if r else 0
        flat = []
        for row in rows_data:
            if len(row) != c:
                raise ValueError("ragged row lengths")
            flat.extend(row)
        return cls(r, c, flat)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "QMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def elementary(cls, n: int, i: int, j: int, value: Scalar = 1) -> "QMatrix":
        """E_{ij} of size n (0-based indices)."""
        e = [Fraction(0)] * (n * n)
        e[i * n + j] = _frac(value)
        return cls(n, n, e)

    # -- access ------------------------------------------------------------

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError((i, j))
        return self._e[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self._e[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return self._e[j :: self.cols] if self.cols else ()

    @property
    def entries(self) -> tuple:
        return self._e

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(x == 0 for x in self._e)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "QMatrix") -> "QMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in addition")
        return QMatrix(self.rows, self.cols, [a + b for a, b in zip(self._e, other._e)])

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in subtraction")
        return QMatrix(self.rows, self.cols, [a - b for a, b in zip(self._e, other._e)])

    def __neg__(self) -> "QMatrix":
        return QMatrix(self.rows, self.cols, [-a for a in self._e])

    def scale(self, c: Scalar) -> "QMatrix":
        c = _frac(c)
        return QMatrix(self.rows, self.cols, [c * a for a in self._e])

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise ValueError(
                f"shape mismatch in product: {self.rows}x{self.cols} @ {other.rows}x{other.cols}"
            )
        n, k, m = self.rows, self.cols, other.cols
        out = [Fraction(0)] * (n * m)
        a, b = self._e, other._e
        for i in range(n):
            base = i * k
            for s in range(k):
                x = a[base + s]
                if x == 0:
                    continue  # sparsity skip keeps block-structured products cheap
                brow = s * m
                orow = i * m
                if x == 1:
                    for j in range(m):
                        y = b[brow + j]
                        if y != 0:
                            out[orow + j] += y
                else:
                    for j in range(m):
                        y = b[brow + j]
                        if y != 0:
                            out[orow + j] += x * y
        return QMatrix(n, m, out)

    def __mul__(self, c):
        return self.scale(c)

    def __rmul__(self, c):
        return self.scale(c)

    def apply(self, v: Sequence[Scalar]) -> tuple:
        """Matrix-vector product, returning a tuple of Fractions."""
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        vv = [_frac(x) for x in v]
        out = []
        e = self._e
        for i in range(self.rows):
            base = i * self.cols
            acc = Fraction(0)
            for j, x in enumerate(vv):
                if x != 0:
                    acc += e[base + j] * x
            out.append(acc)
        return tuple(out)

    def transpose(self) -> "QMatrix":
        return QMatrix(
            self.cols,
            self.rows,
            [self._e[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)],
        )

    def power(self, k: int) -> "QMatrix":
        if not self.is_square():
            raise ValueError("power of a non-square matrix")
        if k < 0:
            raise ValueError("negative power")
        result = QMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base if k > 1 else base
            k >>= 1
        return result

    def inverse(self) -> "QMatrix":
        if not self.is_square():
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        aug = [list(self.row(i)) + [Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
        piv_rows, _ = _eliminate(aug, n, 2 * n, limit_cols=n)
        if len(piv_rows) != n:
            raise ValueError("matrix is singular")
        return QMatrix.from_rows([r[n:] for r in aug[:n]])

    def vec(self) -> tuple:
        """Row-major flattening."""
        return self._e

    # -- comparisons / misc ------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self._e == other._e
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self._e))

    def __repr__(self):
        body = "; ".join(
            " ".join(str(x) for x in self.row(i)) for i in range(self.rows)
        )
        return f"QMatrix({self.rows}x{self.cols}: [{body}])"

    # -- JSON --------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [scalar_to_json(x) for x in self._e],
        }

    @classmethod
    def from_json(cls, data: dict) -> "QMatrix":
        try:
            rows, cols, entries = data["rows"], data["cols"], data["entries"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed matrix object: {exc}") from exc
        return cls(rows, cols, [scalar_from_json(x) for x in entries])


def _eliminate(m: list, nrows: int, ncols: int, limit_cols=None):
    """In-place reduced row echelon form with first-nonzero pivoting.

    Pivots are searched only in the first `limit_cols` columns (for
    augmented systems).  Returns (pivot_rows, pivot_cols) aligned lists;
    after the call row i (i < len(pivot_cols)) holds the i-th pivot.
    """
    if limit_cols is None:
        limit_cols = ncols
    piv_cols = []
    r = 0
    for c in range(limit_cols):
        pivot = None
        for i in range(r, nrows):
            if m[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        piv_row = m[r]
        inv = 1 / piv_row[c]
        if inv != 1:
            for k in range(ncols):
                if piv_row[k] != 0:
                    piv_row[k] *= inv
        nz = [k for k in range(ncols) if piv_row[k] != 0]
        for i in range(nrows):
            row = m[i]
            if i != r and row[c] != 0:
                f = row[c]
                for k in nz:
                    row[k] -= f * piv_row[k]
        piv_cols.append(c)
        r += 1
        if r == nrows:
            break
    return list(range(r)), piv_cols


def rref(M: QMatrix):
    """Reduced row echelon form of M with its pivot columns."""
    rows = [list(M.row(i)) for i in range(M.rows)]
    _, piv_cols = _eliminate(rows, M.rows, M.cols)
    return QMatrix.from_rows(rows) if M.rows else M, piv_cols


def rank(M: QMatrix) -> int:
    """Exact rank over the rationals."""
    if M.rows == 0 or M.cols == 0:
        return 0
    rows = [list(M.row(i)) for i in range(M.rows)]
    _, piv_cols = _eliminate(rows, M.rows, M.cols)
    return len(piv_cols)


def rank_of_rows(rows_data) -> int:
    """Rank of a list of equal-length coordinate vectors."""
    rows = [list(map(_frac, r)) for r in rows_data]
    if not rows:
        return 0
    _, piv_cols = _eliminate(rows, len(rows), len(rows[0]))
    return len(piv_cols)


def kernel_basis(M: QMatrix) -> list:
    """Canonical basis of the right null space {v : Mv = 0}.

    Free variables are set to 1 one at a time against the reduced
    echelon form, so the basis is reproducible.
    """
    n = M.cols
    if n == 0:
        return []
    if M.rows == 0:
        return [tuple(Fraction(1 if i == j else 0) for i in range(n)) for j in range(n)]
    rows = [list(M.row(i)) for i in range(M.rows)]
    _, piv_cols = _eliminate(rows, M.rows, M.cols)
    piv_set = set(piv_cols)
    basis = []
    for free in range(n):
        if free in piv_set:
            continue
        v = [Fraction(0)] * n
        v[free] = Fraction(1)
        for r, pc in enumerate(piv_cols):
            v[pc] = -rows[r][free]
        basis.append(tuple(v))
    return basis


def kron(A: QMatrix, B: QMatrix) -> QMatrix:
    """Kronecker product: block (i,j) equals A[i,j] * B."""
    rows = A.rows * B.rows
    cols = A.cols * B.cols
    out = [Fraction(0)] * (rows * cols)
    for i in range(A.rows):
        for j in range(A.cols):
            a = A[i, j]
            if a == 0:
                continue
            for k in range(B.rows):
                dst = (i * B.rows + k) * cols + j * B.cols
                src = k * B.cols
                for l in range(B.cols):
                    out[dst + l] = a * B.entries[src + l]
    return QMatrix(rows, cols, out)


def block_assemble(layout, row_sizes: Sequence[int], col_sizes: Sequence[int]) -> QMatrix:
    """Assemble a dense matrix from a grid of optional blocks.

    `layout[i][j]` is a QMatrix or None (zero block).  Block (i,j) must
    be row_sizes[i] x col_sizes[j].
    """
    nbr, nbc = len(row_sizes), len(col_sizes)
    if len(layout) != nbr or any(len(r) != nbc for r in layout):
        raise ValueError("layout grid does not match declared block counts")
    total_r, total_c = sum(row_sizes), sum(col_sizes)
    out = [Fraction(0)] * (total_r * total_c)
    roff = 0
    for bi in range(nbr):
        coff = 0
        for bj in range(nbc):
            blk = layout[bi][bj]
            if blk is not None:
                if blk.rows != row_sizes[bi] or blk.cols != col_sizes[bj]:
                    raise ValueError(
                        f"block ({bi},{bj}) is {blk.rows}x{blk.cols}, "
                        f"expected {row_sizes[bi]}x{col_sizes[bj]}"
                    )
                for i in range(blk.rows):
                    dst = (roff + i) * total_c + coff
                    src = i * blk.cols
                    out[dst : dst + blk.cols] = blk.entries[src : src + blk.cols]
            coff += col_sizes[bj]
        roff += row_sizes[bi]
    return QMatrix(total_r, total_c, out)


def is_nilpotent(M: QMatrix) -> bool:
    """True iff M^n = 0 where n is the size of the square matrix M."""
    if not M.is_square():
        raise ValueError("nilpotency is only defined for square matrices")
    n = M.rows
    if n == 0:
        return True
    P = M
    k = 1
    while k < n:
        if P.is_zero():
            return True
        P = P @ P
        k *= 2
    return P.is_zero()


def minimal_polynomial(M: QMatrix):
    """Monic minimal polynomial of M, as a Polynomial.

    Found as the first linear dependence among I, M, M^2, ... (exact
    elimination on the flattened powers).
    """
    from .poly import Polynomial  # local import to avoid a cycle

    if not M.is_square():
        raise ValueError("minimal polynomial of a non-square matrix")
    n = M.rows
    if n == 0:
        return Polynomial([1])
    powers = [QMatrix.identity(n)]
    for k in range(1, n + 1):
        powers.append(powers[-1] @ M)
        # columns = vec(M^0) ... vec(M^k); a kernel vector gives the dependence
        cols = [p.vec() for p in powers]
        stacked = QMatrix(n * n, k + 1, [cols[j][i] for i in range(n * n) for j in range(k + 1)])
        ker = kernel_basis(stacked)
        if ker:
            v = ker[0]
            lead = v[k]
            coeffs = [c / lead for c in v]
            return Polynomial(coeffs)
    raise RuntimeError("no minimal polynomial found; unreachable by Cayley-Hamilton")
