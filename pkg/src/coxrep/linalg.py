"""Exact rational matrices: rank, kernels, cokernels and full linear solving.

Dense matrices over arbitrary-precision rationals.  Zero-dimensional matrices
are legal and required (empty kernels, zero representations).  Elimination is
fraction free: rows are scaled to integers and reduced by cross-multiplication
with gcd stripping, so no intermediate rationals appear in the hot loop.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


class NoSolution(Exception):
    """The linear system A X = B is inconsistent."""


class Mat:
    """Immutable dense matrix over Fraction."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data=None):
        if rows < 0 or cols < 0:
            raise ValueError("negative dimensions")
        if data is None:
            grid = tuple(tuple(Fraction(0) for _ in range(cols)) for _ in range(rows))
        else:
            grid = tuple(tuple(Fraction(x) for x in row) for row in data)
            if len(grid) != rows or any(len(r) != cols for r in grid):
                raise ValueError("data shape does not match dimensions")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "data", grid)

    def __setattr__(self, *args):
        raise AttributeError("Mat is immutable")

    @classmethod
    def from_rows(cls, data) -> "Mat":
        data = [list(r) for r in data]
        rows = len(data)
        cols = len(data[0]) if rows else 0
        return cls(rows, cols, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Mat":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls(n, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __eq__(self, other):
        return (
            isinstance(other, Mat)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __getitem__(self, rc):
        r, c = rc
        return self.data[r][c]

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def transpose(self) -> "Mat":
        return Mat(
            self.cols,
            self.rows,
            [[self.data[r][c] for r in range(self.rows)] for c in range(self.cols)],
        )

    def __add__(self, other: "Mat") -> "Mat":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in addition")
        return Mat(
            self.rows,
            self.cols,
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ],
        )

    def __sub__(self, other: "Mat") -> "Mat":
        return self + (-other)

    def __neg__(self) -> "Mat":
        return Mat(self.rows, self.cols, [[-x for x in row] for row in self.data])

    def scale(self, s) -> "Mat":
        s = Fraction(s)
        return Mat(self.rows, self.cols, [[s * x for x in row] for row in self.data])

    def __mul__(self, other: "Mat") -> "Mat":
        if not isinstance(other, Mat):
            return self.scale(other)
        if self.cols != other.rows:
            raise ValueError("shape mismatch in product")
        ot = other.transpose().data
        return Mat(
            self.rows,
            other.cols,
            [
                [sum(a * b for a, b in zip(row, col)) for col in ot]
                for row in self.data
            ],
        )

    def hstack(self, other: "Mat") -> "Mat":
        if self.rows != other.rows:
            raise ValueError("row mismatch in hstack")
        return Mat(
            self.rows,
            self.cols + other.cols,
            [list(a) + list(b) for a, b in zip(self.data, other.data)],
        )

    def vstack(self, other: "Mat") -> "Mat":
        if self.cols != other.cols:
            raise ValueError("column mismatch in vstack")
        return Mat(self.rows + other.rows, self.cols, list(self.data) + list(other.data))

    def submatrix(self, row_range, col_range) -> "Mat":
        rows = list(row_range)
        cols = list(col_range)
        return Mat(
            len(rows), len(cols), [[self.data[r][c] for c in cols] for r in rows]
        )

    def columns(self) -> list[tuple[Fraction, ...]]:
        return [tuple(self.data[r][c] for r in range(self.rows)) for c in range(self.cols)]

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.data]

    @classmethod
    def from_json(cls, obj, rows: int, cols: int) -> "Mat":
        data = [[Fraction(x) for x in row] for row in obj]
        return cls(rows, cols, data)

    def __repr__(self):
        return f"Mat({self.rows}x{self.cols})"


def _int_rows(M: Mat, extra: Mat | None = None) -> list[list[int]]:
    # scale each row of [M | extra] by the lcm of denominators
    out = []
    for i in range(M.rows):
        row = list(M.data[i]) + (list(extra.data[i]) if extra is not None else [])
        mult = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * mult) for x in row])
    return out


def _echelon(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """In-place fraction-free row echelon; returns (rows, pivot columns)."""
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        best = -1
        best_mag = None
        for i in range(r, nrows):
            v = rows[i][c]
            if v:
                mag = abs(v)
                if best_mag is None or mag < best_mag:
                    best, best_mag = i, mag
                    if mag == 1:
                        break
        if best < 0:
            continue
        rows[r], rows[best] = rows[best], rows[r]
        prow = rows[r]
        p = prow[c]
        for i in range(r + 1, nrows):
            row = rows[i]
            m = row[c]
            if not m:
                continue
            g = gcd(p, m)
            a, b = p // g, m // g
            for j in range(c, ncols):
                row[j] = row[j] * a - prow[j] * b
            gg = 0
            for x in row:
                if x:
                    gg = gcd(gg, x)
                    if gg == 1:
                        break
            if gg > 1:
                for j in range(c, ncols):
                    if row[j]:
                        row[j] //= gg
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rank(M: Mat) -> int:
    """Exact rank."""
    if M.rows == 0 or M.cols == 0:
        return 0
    _, pivots = _echelon(_int_rows(M), M.cols)
    return len(pivots)


def _back_substitute(rows, pivots, ncols, free_col, rhs_col=None):
    # one kernel / solution vector from an echelon form, as Fractions
    x = [Fraction(0)] * ncols
    if free_col is not None:
        x[free_col] = Fraction(1)
    for r in range(len(pivots) - 1, -1, -1):
        pc = pivots[r]
        row = rows[r]
        s = Fraction(rhs_col[r]) if rhs_col is not None else Fraction(0)
        for j in range(pc + 1, ncols):
            if row[j] and x[j]:
                s -= Fraction(row[j]) * x[j]
        x[pc] = s / row[pc]
    return x


def kernel_basis(M: Mat) -> Mat:
    """Matrix whose columns form a basis of the null space of M."""
    if M.cols == 0:
        return Mat(0, 0)
    if M.rows == 0:
        return Mat.identity(M.cols)
    rows, pivots = _echelon(_int_rows(M), M.cols)
    pivot_set = set(pivots)
    free = [c for c in range(M.cols) if c not in pivot_set]
    cols = [_back_substitute(rows, pivots, M.cols, f) for f in free]
    return Mat(M.cols, len(free), [[col[r] for col in cols] for r in range(M.cols)])


def cokernel_projection(M: Mat) -> Mat:
    """A surjection from the codomain of M onto a complement of its column space.

    The result P has full row rank rows(M) - rank(M) and satisfies P M = 0.
    """
    return kernel_basis(M.transpose()).transpose()


class Solution:
    """Affine description of all solutions of A X = B.

    Every solution is ``particular + homogeneous * C`` for an arbitrary
    coefficient matrix C.  ``homogeneous`` has a column per free parameter.
    """

    __slots__ = ("particular", "homogeneous")

    def __init__(self, particular: Mat, homogeneous: Mat):
        object.__setattr__(self, "particular", particular)
        object.__setattr__(self, "homogeneous", homogeneous)

    def __setattr__(self, *args):
        raise AttributeError("Solution is immutable")

    @property
    def is_unique(self) -> bool:
        return self.homogeneous.cols == 0


def solve_all(A: Mat, B: Mat) -> Solution:
    """Full solution space of A X = B; raises NoSolution if inconsistent."""
    if A.rows != B.rows:
        raise ValueError("incompatible shapes")
    n, p = A.cols, B.cols
    if A.rows == 0:
        return Solution(Mat.zeros(n, p), Mat.identity(n))
    rows, pivots = _echelon(_int_rows(A, B), n + p)
    if any(pc >= n for pc in pivots):
        raise NoSolution("system is inconsistent")
    pivot_set = set(pivots)
    free = [c for c in range(n) if c not in pivot_set]
    part_cols = []
    for k in range(p):
        rhs = [rows[r][n + k] for r in range(len(pivots))]
        part_cols.append(_back_substitute(rows, pivots, n, None, rhs))
    particular = Mat(n, p, [[col[r] for col in part_cols] for r in range(n)])
    hom_cols = [_back_substitute(rows, pivots, n, f) for f in free]
    homogeneous = Mat(n, len(free), [[col[r] for col in hom_cols] for r in range(n)])
    return Solution(particular, homogeneous)
