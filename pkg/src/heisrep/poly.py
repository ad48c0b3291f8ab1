"""Univariate rational polynomials and quotient algebras k[t]/(p).

Coefficients are stored lowest degree first with trailing zeros
stripped; the zero polynomial has an empty coefficient tuple.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .linalg import QMatrix, scalar_from_json, scalar_to_json

__all__ = [
    "Polynomial",
    "QuotientAlgebra",
    "companion",
    "eval_at_matrix",
    "regular_representation",
    "poly_gcd",
    "poly_xgcd",
    "crt_split",
    "parse_poly",
    "PolyParseError",
]


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class Polynomial:
    """Polynomial over the rationals in one variable t."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        c = [_frac(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def t_power(cls, k: int) -> "Polynomial":
        return cls([0] * k + [1])

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls([c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def monic(self) -> "Polynomial":
        """Divide through by the leading coefficient (idempotent)."""
        if self.is_zero() or self.is_monic():
            return self
        lc = self.leading()
        return Polynomial([c / lc for c in self.coeffs])

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial([self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial([self.coeff(i) - other.coeff(i) for i in range(n)])

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if self.is_zero() or other.is_zero():
                return Polynomial()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Polynomial(out)
        return Polynomial([c * _frac(other) for c in self.coeffs])

    __rmul__ = __mul__

    def divmod(self, other: "Polynomial"):
        """Exact polynomial division with remainder."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        d = other.degree
        if self.degree < d:
            return Polynomial(), self
        a = list(self.coeffs)
        lead = other.leading()
        q = [Fraction(0)] * (self.degree - d + 1)
        for k in range(self.degree - d, -1, -1):
            coef = a[k + d] / lead
            if coef != 0:
                q[k] = coef
                for i in range(d + 1):
                    a[k + i] -= coef * other.coeffs[i]
        return Polynomial(q), Polynomial(a[:d])

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return self.divmod(other)[1]

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return self.divmod(other)[0]

    def derivative(self) -> "Polynomial":
        return Polynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * _frac(x) + c
        return acc

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeff(k)
            if c == 0:
                continue
            if k == 0:
                term = str(c)
            else:
                tk = "t" if k == 1 else f"t^{k}"
                if c == 1:
                    term = tk
                elif c == -1:
                    term = f"-{tk}"
                else:
                    term = f"{c}*{tk}"
            parts.append(term)
        s = parts[0]
        for term in parts[1:]:
            s += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return s

    def to_json(self) -> dict:
        return {"coeffs": [scalar_to_json(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "Polynomial":
        try:
            coeffs = data["coeffs"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed polynomial object: {exc}") from exc
        return cls([scalar_from_json(c) for c in coeffs])


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean algorithm."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: Polynomial, b: Polynomial):
    """Extended Euclid: returns (g, u, v) with u*a + v*b = g, g monic."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    r0, r1 = a, b
    s0, s1 = Polynomial([1]), Polynomial()
    t0, t1 = Polynomial(), Polynomial([1])
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    lc = r0.leading()
    inv = Fraction(1) / lc
    return r0.monic(), s0 * inv, t0 * inv


def squarefree_part(p: Polynomial) -> Polynomial:
    """p / gcd(p, p'), monic; shares exactly the roots of p."""
    if p.degree < 1:
        raise ValueError("squarefree part needs degree >= 1")
    g = poly_gcd(p, p.derivative())
    return (p // g).monic()


def companion(p: Polynomial) -> QMatrix:
    """Companion matrix of a monic polynomial of degree >= 1.

    Subdiagonal ones; last column holds -a_0, ..., -a_{d-1}.
    """
    if p.degree < 1:
        raise ValueError(f"companion matrix needs degree >= 1, got {p!s}")
    if not p.is_monic():
        raise ValueError(f"companion matrix needs a monic polynomial, got {p!s}")
    d = p.degree
    entries = [Fraction(0)] * (d * d)
    for i in range(1, d):
        entries[i * d + (i - 1)] = Fraction(1)
    for i in range(d):
        entries[i * d + (d - 1)] = -p.coeff(i)
    return QMatrix(d, d, entries)


def eval_at_matrix(q: Polynomial, M: QMatrix) -> QMatrix:
    """Horner evaluation q(M) for square M."""
    if not M.is_square():
        raise ValueError("polynomial evaluation needs a square matrix")
    n = M.rows
    acc = QMatrix.zero(n, n)
    for c in reversed(q.coeffs):
        acc = acc @ M
        if c != 0:
            acc = acc + QMatrix.identity(n).scale(c)
    return acc


class QuotientAlgebra:
    """The algebra k[t]/(p) for a monic modulus p of degree >= 1.

    Caches the companion matrix P of multiplication by t; a non-monic
    input is normalized (the ideal is unchanged) and flagged.
    """

    __slots__ = ("modulus", "companion", "normalized")

    def __init__(self, modulus: Polynomial):
        if modulus.degree < 1:
            raise ValueError(
                f"modulus must have degree >= 1 (got {modulus!s}); "
                "a nonzero constant gives the zero algebra"
            )
        normalized = not modulus.is_monic()
        modulus = modulus.monic()
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "companion", companion(modulus))
        object.__setattr__(self, "normalized", normalized)

    def __setattr__(self, name, value):
        raise AttributeError("QuotientAlgebra is immutable")

    @property
    def dim(self) -> int:
        return self.modulus.degree

    def reduce(self, q: Polynomial) -> Polynomial:
        return q % self.modulus

    def multiply(self, q1: Polynomial, q2: Polynomial) -> Polynomial:
        return (q1 * q2) % self.modulus

    def __eq__(self, other):
        return isinstance(other, QuotientAlgebra) and self.modulus == other.modulus

    def __hash__(self):
        return hash(self.modulus)

    def __repr__(self):
        return f"QuotientAlgebra(t mod {self.modulus!s})"


def regular_representation(Q: QuotientAlgebra) -> list:
    """(P^0, P^1, ..., P^{d-1}): multiplication by t^i on k[t]/(p)."""
    d = Q.dim
    out = [QMatrix.identity(d)]
    for _ in range(1, d):
        out.append(out[-1] @ Q.companion)
    return out


def crt_split(p: Polynomial, factors: Sequence[Polynomial]):
    """Change of basis realizing k[t]/(p) = direct sum of k[t]/(p_l).

    The factors must be monic, pairwise coprime and multiply to p.
    Returns (T, T_inv) with T @ companion(p) @ T_inv equal to the
    block diagonal of the factor companions.
    """
    p = p.monic()
    if p.degree < 1:
        raise ValueError("crt_split needs degree >= 1")
    factors = [f for f in factors]
    for f in factors:
        if f.degree < 1 or not f.is_monic():
            raise ValueError(f"factor {f!s} must be monic of degree >= 1")
    prod = Polynomial([1])
    for f in factors:
        prod = prod * f
    if prod != p:
        raise ValueError(f"factors multiply to {prod!s}, expected {p!s}")
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            if poly_gcd(factors[i], factors[j]).degree != 0:
                raise ValueError(
                    f"factors {factors[i]!s} and {factors[j]!s} are not coprime"
                )
    d = p.degree
    # column j of T = coordinates of t^j in each k[t]/(p_l), stacked
    cols = []
    for j in range(d):
        tj = Polynomial.t_power(j)
        col = []
        for f in factors:
            r = tj % f
            col.extend(r.coeff(k) for k in range(f.degree))
        cols.append(col)
    T = QMatrix(d, d, [cols[j][i] for i in range(d) for j in range(d)])
    return T, T.inverse()


class PolyParseError(ValueError):
    """Raised on malformed polynomial text, with the offending position."""

    def __init__(self, text: str, pos: int, message: str):
        self.pos = pos
        super().__init__(f"{message} at position {pos} in {text!r}")


def parse_poly(text: str) -> Polynomial:
    """Parse a sum of monomials like "t^3 - 2*t + 1" or "1/2*t^2".

    Grammar: rational coefficients, variable t, ^ powers, explicit *
    between coefficient and t, whitespace ignored.
    """
    s = text
    i = 0
    n = len(s)

    def skip_ws():
        nonlocal i
        while i < n and s[i].isspace():
            i += 1

    def parse_number() -> Fraction:
        nonlocal i
        start = i
        while i < n and s[i].isdigit():
            i += 1
        if i == start:
            raise PolyParseError(text, i, "expected a number")
        num = int(s[start:i])
        skip_ws()
        if i < n and s[i] == "/":
            i += 1
            skip_ws()
            dstart = i
            while i < n and s[i].isdigit():
                i += 1
            if i == dstart:
                raise PolyParseError(text, i, "expected a denominator")
            den = int(s[dstart:i])
            if den == 0:
                raise PolyParseError(text, dstart, "zero denominator")
            return Fraction(num, den)
        return Fraction(num)

    result = Polynomial()
    skip_ws()
    if i == n:
        raise PolyParseError(text, i, "empty polynomial")
    first = True
    while True:
        skip_ws()
        if i == n:
            if first:
                raise PolyParseError(text, i, "empty polynomial")
            break
        sign = Fraction(1)
        if s[i] in "+-":
            if first and s[i] == "+":
                raise PolyParseError(text, i, "unexpected leading '+'")
            if s[i] == "-":
                sign = Fraction(-1)
            i += 1
            skip_ws()
        elif not first:
            raise PolyParseError(text, i, "expected '+' or '-' between terms")
        # term: number [* t [^ k]]  |  t [^ k]
        if i < n and s[i] == "t":
            coef = sign
            i += 1
        elif i < n and s[i].isdigit():
            coef = sign * parse_number()
            skip_ws()
            if i < n and s[i] == "*":
                i += 1
                skip_ws()
                if i >= n or s[i] != "t":
                    raise PolyParseError(text, i, "expected 't' after '*'")
                i += 1
            else:
                result = result + Polynomial.constant(coef)
                first = False
                continue
        else:
            raise PolyParseError(text, i, "expected a term")
        power = 1
        skip_ws()
        if i < n and s[i] == "^":
            i += 1
            skip_ws()
            start = i
            while i < n and s[i].isdigit():
                i += 1
            if i == start:
                raise PolyParseError(text, i, "expected an exponent")
            power = int(s[start:i])
        result = result + Polynomial.t_power(power) * coef
        first = False
    return result
