"""Exact dense linear algebra over arbitrary-precision integers and rationals.

Matrices are immutable values; every operation returns a fresh matrix.  No
floating point is used anywhere: integer matrices carry Python ints, rational
matrices carry ``fractions.Fraction`` (which keeps entries in lowest terms
with positive denominators).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence


class DimensionError(ValueError):
    """Raised when matrix shapes do not conform."""


def _freeze(data: Iterable[Iterable], caster) -> tuple:
    rows = tuple(tuple(caster(x) for x in row) for row in data)
    if not rows or not rows[0]:
        raise DimensionError("matrices must have at least one row and one column")
    width = len(rows[0])
    if any(len(row) != width for row in rows):
        raise DimensionError("ragged row lengths")
    return rows


class IntMatrix:
    """Dense matrix of arbitrary-precision integers, row-major, immutable."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Iterable[Iterable[int]]):
        self.data = _freeze(data, self._cast)
        self.rows = len(self.data)
        self.cols = len(self.data[0])

    @staticmethod
    def _cast(x) -> int:
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise ValueError(f"non-integer entry {x}")
            return x.numerator
        if isinstance(x, bool) or not isinstance(x, int):
            raise ValueError(f"non-integer entry {x!r}")
        return x

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def unit(cls, rows: int, cols: int, i: int, j: int) -> "IntMatrix":
        """Matrix unit E_{ij} (1-based indices)."""
        if not (1 <= i <= rows and 1 <= j <= cols):
            raise DimensionError(f"unit position ({i},{j}) outside {rows}x{cols}")
        m = [[0] * cols for _ in range(rows)]
        m[i - 1][j - 1] = 1
        return cls(m)

    def __getitem__(self, ij) -> int:
        i, j = ij
        return self.data[i][j]

    def row(self, i: int) -> tuple:
        return self.data[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.data)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntMatrix) and self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self.data]!r})"

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> "IntMatrix":
        return IntMatrix(zip(*self.data))

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([[-x for x in r] for r in self.data])

    def _check_same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionError(
                f"shape mismatch {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same_shape(other)
        return IntMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)]
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same_shape(other)
        return IntMatrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)]
        )

    def scale(self, c: int) -> "IntMatrix":
        return IntMatrix([[c * x for x in r] for r in self.data])

    def __mul__(self, other):
        if isinstance(other, RatMatrix):
            return self.to_rat() * other
        if self.cols != other.rows:
            raise DimensionError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        cols = list(zip(*other.data))
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.data]
        )

    def pow(self, k: int) -> "IntMatrix":
        """Non-negative integer power; negative powers live in RatMatrix."""
        if not self.is_square:
            raise DimensionError("power of a non-square matrix")
        if k < 0:
            raise ValueError("negative power of an IntMatrix; use to_rat().pow")
        result = IntMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_skew_symmetric(self) -> bool:
        if not self.is_square:
            return False
        d = self.data
        return all(d[i][j] == -d[j][i] for i in range(self.rows) for j in range(i + 1))

    def to_rat(self) -> "RatMatrix":
        return RatMatrix(self.data)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "IntMatrix":
        return IntMatrix([[self.data[i][j] for j in cols] for i in rows])


class RatMatrix:
    """Dense matrix of exact rationals (Fraction entries), immutable."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Iterable[Iterable]):
        self.data = _freeze(data, Fraction)
        self.rows = len(self.data)
        self.cols = len(self.data[0])

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls([[0] * cols for _ in range(rows)])

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other) -> bool:
        if isinstance(other, IntMatrix):
            other = other.to_rat()
        return isinstance(other, RatMatrix) and self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def __repr__(self):
        return f"RatMatrix({[[str(x) for x in r] for r in self.data]!r})"

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> "RatMatrix":
        return RatMatrix(zip(*self.data))

    def __neg__(self) -> "RatMatrix":
        return RatMatrix([[-x for x in r] for r in self.data])

    def _check_same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionError(
                f"shape mismatch {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def __add__(self, other):
        if isinstance(other, IntMatrix):
            other = other.to_rat()
        self._check_same_shape(other)
        return RatMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)]
        )

    def __sub__(self, other):
        if isinstance(other, IntMatrix):
            other = other.to_rat()
        self._check_same_shape(other)
        return RatMatrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)]
        )

    def scale(self, c) -> "RatMatrix":
        c = Fraction(c)
        return RatMatrix([[c * x for x in r] for r in self.data])

    def __mul__(self, other):
        if isinstance(other, IntMatrix):
            other = other.to_rat()
        if self.cols != other.rows:
            raise DimensionError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        cols = list(zip(*other.data))
        return RatMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.data]
        )

    def pow(self, k: int) -> "RatMatrix":
        if not self.is_square:
            raise DimensionError("power of a non-square matrix")
        if k < 0:
            inv = inverse(self)
            if inv is None:
                raise ValueError("negative power of a singular matrix")
            return inv.pow(-k)
        result = RatMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_integer(self) -> bool:
        return all(x.denominator == 1 for r in self.data for x in r)

    def to_int(self) -> IntMatrix:
        if not self.is_integer():
            raise ValueError("matrix has non-integer entries")
        return IntMatrix([[x.numerator for x in r] for r in self.data])


@dataclass(frozen=True)
class KernelBasis:
    """Primitive integer basis of a rational nullspace."""

    vectors: tuple
    dimension: int

    def __iter__(self):
        return iter(self.vectors)


def det(m: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if not m.is_square:
        raise DimensionError("determinant of a non-square matrix")
    n = m.rows
    a = [list(r) for r in m.data]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                # exact by the Bareiss divisibility property
                row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def det_cofactor(m: IntMatrix) -> int:
    """Determinant by cofactor expansion; brute-force oracle for small sizes."""
    if not m.is_square:
        raise DimensionError("determinant of a non-square matrix")
    d = m.data

    def rec(rows, cols):
        if len(rows) == 1:
            return d[rows[0]][cols[0]]
        total = 0
        r0 = rows[0]
        rest = rows[1:]
        for t, c in enumerate(cols):
            if d[r0][c] == 0:
                continue
            sub = cols[:t] + cols[t + 1 :]
            total += (-1) ** t * d[r0][c] * rec(rest, sub)
        return total

    idx = tuple(range(m.rows))
    return rec(idx, idx)


def _row_echelon_fraction_free(m: IntMatrix):
    """Integer row echelon with gcd-reduced rows; returns (echelon rows, pivot cols)."""
    a = [list(r) for r in m.data]
    nrows, ncols = m.rows, m.cols
    pivots = []
    row = 0
    for col in range(ncols):
        piv = None
        for i in range(row, nrows):
            if a[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        p = a[row][col]
        for i in range(row + 1, nrows):
            if a[i][col] == 0:
                continue
            q = a[i][col]
            a[i] = [p * x - q * y for x, y in zip(a[i], a[row])]
            g = 0
            for x in a[i]:
                g = gcd(g, x)
                if g == 1:
                    break
            if g > 1:
                a[i] = [x // g for x in a[i]]
        pivots.append(col)
        row += 1
        if row == nrows:
            break
    return a[: len(pivots)], pivots


def rank(m: IntMatrix) -> int:
    """Rank over the rationals by fraction-free elimination."""
    _, pivots = _row_echelon_fraction_free(m)
    return len(pivots)


def inverse(m) -> "RatMatrix | None":
    """Exact inverse of a square matrix, or None when singular."""
    if not m.is_square:
        raise DimensionError("inverse of a non-square matrix")
    n = m.rows
    a = [[Fraction(x) for x in row] for row in m.data]
    inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = None
        for i in range(col, n):
            if a[i][col] != 0:
                piv = i
                break
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        p = a[col][col]
        if p != 1:
            a[col] = [x / p for x in a[col]]
            inv[col] = [x / p for x in inv[col]]
        for i in range(n):
            if i == col or a[i][col] == 0:
                continue
            q = a[i][col]
            a[i] = [x - q * y for x, y in zip(a[i], a[col])]
            inv[i] = [x - q * y for x, y in zip(inv[i], inv[col])]
    return RatMatrix(inv)


def _primitive(vec: Sequence[int]) -> tuple:
    """Divide by the gcd and make the first nonzero entry positive."""
    g = 0
    for x in vec:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    out = [x // g for x in vec]
    for x in out:
        if x != 0:
            if x < 0:
                out = [-y for y in out]
            break
    return tuple(out)


def kernel(m: IntMatrix) -> KernelBasis:
    """Primitive integer basis of the rational nullspace of m."""
    ech, pivots = _row_echelon_fraction_free(m)
    free_cols = [j for j in range(m.cols) if j not in pivots]
    vectors = []
    for fc in free_cols:
        # back-substitute over Q, then clear denominators
        x = [Fraction(0)] * m.cols
        x[fc] = Fraction(1)
        for row_idx in range(len(pivots) - 1, -1, -1):
            pc = pivots[row_idx]
            row = ech[row_idx]
            s = sum((Fraction(row[j]) * x[j] for j in range(pc + 1, m.cols)), Fraction(0))
            x[pc] = -s / row[pc]
        lcm = 1
        for v in x:
            lcm = lcm * v.denominator // gcd(lcm, v.denominator)
        vectors.append(_primitive([int(v * lcm) for v in x]))
    return KernelBasis(tuple(vectors), len(vectors))


def block_assemble(blocks) -> IntMatrix:
    """Concatenate a 2-d grid of matrices into one matrix.

    Row heights must agree along each block row and column widths along each
    block column; a ragged grid raises DimensionError.
    """
    grid = [list(row) for row in blocks]
    if not grid or not grid[0]:
        raise DimensionError("empty block grid")
    ncols_blocks = len(grid[0])
    if any(len(row) != ncols_blocks for row in grid):
        raise DimensionError("ragged block grid")
    heights = [row[0].rows for row in grid]
    widths = [b.cols for b in grid[0]]
    for i, row in enumerate(grid):
        for j, b in enumerate(row):
            if b.rows != heights[i] or b.cols != widths[j]:
                raise DimensionError(f"block ({i},{j}) has shape {b.rows}x{b.cols}")
    out = []
    for i, row in enumerate(grid):
        for k in range(heights[i]):
            out.append([x for b in row for x in b.data[k]])
    return IntMatrix(out)


def block_assemble_rat(blocks) -> RatMatrix:
    """Rational variant of block_assemble."""
    grid = [[b.to_rat() if isinstance(b, IntMatrix) else b for b in row] for row in blocks]
    if not grid or not grid[0]:
        raise DimensionError("empty block grid")
    ncols_blocks = len(grid[0])
    if any(len(row) != ncols_blocks for row in grid):
        raise DimensionError("ragged block grid")
    heights = [row[0].rows for row in grid]
    widths = [b.cols for b in grid[0]]
    for i, row in enumerate(grid):
        for j, b in enumerate(row):
            if b.rows != heights[i] or b.cols != widths[j]:
                raise DimensionError(f"block ({i},{j}) has shape {b.rows}x{b.cols}")
    out = []
    for i, row in enumerate(grid):
        for k in range(heights[i]):
            out.append([x for b in row for x in b.data[k]])
    return RatMatrix(out)
