"""Exact rational scalars and dense exact matrices.

`Rational` is the stdlib `fractions.Fraction`: arbitrary-precision, always
in lowest terms with positive denominator, which is exactly the contract
every other module relies on.  Matrices are small (bounded by the level,
N <= 16 or so) and dense; elimination is fraction-free in the Bareiss
style so intermediate entries stay controlled.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction

RationalLike = Union[Fraction, int]


class SingularMatrixError(ZeroDivisionError):
    """Raised when inverting a matrix whose rank is below its size."""


class DegreeError(ArithmeticError):
    """Raised when a product would create a degree-two term in d_a.

    The calculus proves every such product vanishes before it can occur,
    so reaching this error means a rewrite rule is wrong, not the input.
    """


def fmt_rational(q: RationalLike) -> str:
    """Render p/q, or just p when the denominator is 1 (JSON convention)."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


@dataclass(frozen=True)
class LinearCoeff:
    """Value of the form `const + da_part * d_a` with d_a a free symbol.

    d_a is the degree of the pushed-down self-intersection of the zero
    section; it stays symbolic because no identity in scope needs its
    numeric value.  Products may never produce d_a**2.
    """

    const: Fraction = Fraction(0)
    da_part: Fraction = Fraction(0)

    @staticmethod
    def of(value: RationalLike) -> "LinearCoeff":
        return LinearCoeff(Fraction(value), Fraction(0))

    @staticmethod
    def d_a(scale: RationalLike = 1) -> "LinearCoeff":
        return LinearCoeff(Fraction(0), Fraction(scale))

    def __bool__(self) -> bool:
        return bool(self.const) or bool(self.da_part)

    def __add__(self, other: "LinearCoeff") -> "LinearCoeff":
        return LinearCoeff(self.const + other.const, self.da_part + other.da_part)

    def __sub__(self, other: "LinearCoeff") -> "LinearCoeff":
        return LinearCoeff(self.const - other.const, self.da_part - other.da_part)

    def __neg__(self) -> "LinearCoeff":
        return LinearCoeff(-self.const, -self.da_part)

    def __mul__(self, other: "LinearCoeff") -> "LinearCoeff":
        if self.da_part and other.da_part:
            raise DegreeError("product would have a d_a^2 term")
        return LinearCoeff(
            self.const * other.const,
            self.const * other.da_part + self.da_part * other.const,
        )

    def scale(self, k: RationalLike) -> "LinearCoeff":
        k = Fraction(k)
        return LinearCoeff(self.const * k, self.da_part * k)

    def __str__(self) -> str:
        if not self.da_part:
            return fmt_rational(self.const)
        da = "d_a" if self.da_part == 1 else f"{fmt_rational(self.da_part)}*d_a"
        if not self.const:
            return da
        return f"{fmt_rational(self.const)} + {da}"


ZERO_COEFF = LinearCoeff()
ONE_COEFF = LinearCoeff.of(1)


class RatMatrix:
    """Dense exact-rational matrix."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[RationalLike]]):
        self.entries = [[Fraction(x) for x in row] for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        if any(len(row) != self.cols for row in self.entries):
            raise ValueError("ragged matrix")

    @staticmethod
    def identity(n: int) -> "RatMatrix":
        return RatMatrix([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @staticmethod
    def zero(rows: int, cols: int) -> "RatMatrix":
        return RatMatrix([[Fraction(0)] * cols for _ in range(rows)])

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        return self.entries[ij[0]][ij[1]]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RatMatrix) and self.entries == other.entries

    def __hash__(self):  # pragma: no cover - matrices are not dict keys
        return hash(tuple(tuple(row) for row in self.entries))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(fmt_rational(x) for x in row) for row in self.entries)
        return f"RatMatrix[{body}]"

    def transpose(self) -> "RatMatrix":
        return RatMatrix([[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def __mul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                row.append(sum((self.entries[i][k] * other.entries[k][j] for k in range(self.cols)), Fraction(0)))
            out.append(row)
        return RatMatrix(out)

    def submatrix(self, row_idx: Iterable[int], col_idx: Iterable[int]) -> "RatMatrix":
        rows = list(row_idx)
        cols = list(col_idx)
        return RatMatrix([[self.entries[i][j] for j in cols] for i in rows])

    def to_json(self) -> list[list[str]]:
        return [[fmt_rational(x) for x in row] for row in self.entries]


def mat_rank(m: RatMatrix) -> int:
    """Rank by fraction-free (Bareiss) elimination; exact."""
    a = [row[:] for row in m.entries]
    rows, cols = m.rows, m.cols
    rank = 0
    prev = Fraction(1)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivot_row = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if pivot_row is None:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        pivot = a[r][c]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                a[i][j] = (a[i][j] * pivot - a[i][c] * a[r][j]) / prev
            a[i][c] = Fraction(0)
        prev = pivot
        r += 1
        rank += 1
    return rank


def mat_inverse(m: RatMatrix) -> RatMatrix:
    """Exact inverse via Gauss-Jordan; raises SingularMatrixError."""
    if m.rows != m.cols:
        raise SingularMatrixError("inverse of a non-square matrix")
    n = m.rows
    a = [row[:] + ident_row for row, ident_row in zip(m.entries, RatMatrix.identity(n).entries)]
    for c in range(n):
        pivot_row = next((i for i in range(c, n) if a[i][c] != 0), None)
        if pivot_row is None:
            raise SingularMatrixError("matrix is singular")
        a[c], a[pivot_row] = a[pivot_row], a[c]
        pivot = a[c][c]
        a[c] = [x / pivot for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                factor = a[i][c]
                a[i] = [x - factor * y for x, y in zip(a[i], a[c])]
    return RatMatrix([row[n:] for row in a])


def mat_kernel(m: RatMatrix) -> list[list[Fraction]]:
    """Basis of the right kernel, exact (reduced row echelon back-solve)."""
    a = [row[:] for row in m.entries]
    rows, cols = m.rows, m.cols
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivot_row = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if pivot_row is None:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        pivot = a[r][c]
        a[r] = [x / pivot for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                factor = a[i][c]
                a[i] = [x - factor * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * cols
        vec[f] = Fraction(1)
        for row_i, piv_c in enumerate(pivots):
            vec[piv_c] = -a[row_i][f]
        basis.append(vec)
    return basis
