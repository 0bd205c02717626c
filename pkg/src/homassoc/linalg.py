"""Exact dense linear algebra over Q(i).

Everything downstream (axiom checks, derivation spaces, cohomology,
simplicity certificates) reduces to the operations in this module:
reduced row echelon form, kernels, solving, characteristic polynomials
and a small lattice of subspace operations.  The reduced echelon form is
the single canonical representative of a subspace, so subspace equality
is plain equality of matrices.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .scalars import ZERO, ONE, GaussianRational, gr

Vector = tuple[GaussianRational, ...]


class ShapeError(ValueError):
    """Raised when operand dimensions are incompatible."""


def as_scalar(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    raise TypeError(f"not a scalar: {x!r}")


def vector(entries: Iterable) -> Vector:
    return tuple(as_scalar(x) for x in entries)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def basis_vector(n: int, i: int) -> Vector:
    return tuple(ONE if j == i else ZERO for j in range(n))


def vec_add(x: Vector, y: Vector) -> Vector:
    return tuple(a + b for a, b in zip(x, y, strict=True))


def vec_sub(x: Vector, y: Vector) -> Vector:
    return tuple(a - b for a, b in zip(x, y, strict=True))


def vec_scale(c, x: Vector) -> Vector:
    c = as_scalar(c)
    return tuple(c * a for a in x)


def vec_is_zero(x: Vector) -> bool:
    return all(not a for a in x)


class Matrix:
    """Immutable dense matrix of Gaussian rationals (row major)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence]):
        rows = tuple(tuple(as_scalar(x) for x in row) for row in entries)
        ncols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != ncols:
                raise ShapeError("ragged rows")
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", ncols)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @staticmethod
    def zero(rows: int, cols: int) -> "Matrix":
        m = Matrix.__new__(Matrix)
        object.__setattr__(m, "rows", rows)
        object.__setattr__(m, "cols", cols)
        object.__setattr__(m, "entries", tuple((ZERO,) * cols for _ in range(rows)))
        return m

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @staticmethod
    def from_rows(rows: Sequence[Vector], cols: int | None = None) -> "Matrix":
        if not rows:
            if cols is None:
                raise ShapeError("empty row list needs an explicit column count")
            return Matrix.zero(0, cols)
        return Matrix(rows)

    @staticmethod
    def from_columns(columns: Sequence[Vector]) -> "Matrix":
        n = len(columns[0])
        return Matrix([[columns[j][i] for j in range(len(columns))] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i][j] for i in range(self.rows))

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise ShapeError("matrix addition shape mismatch")
        return Matrix(
            [
                [self.entries[i][j] + other.entries[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise ShapeError("matrix subtraction shape mismatch")
        return Matrix(
            [
                [self.entries[i][j] - other.entries[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ]
        )

    def __neg__(self) -> "Matrix":
        return Matrix([[-x for x in row] for row in self.entries])

    def scale(self, c) -> "Matrix":
        c = as_scalar(c)
        return Matrix([[c * x for x in row] for row in self.entries])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ShapeError("matrix product shape mismatch")
        ot = other.entries
        out = []
        for i in range(self.rows):
            srow = self.entries[i]
            out_row = []
            for j in range(other.cols):
                acc = ZERO
                for k in range(self.cols):
                    s = srow[k]
                    if s:
                        acc = acc + s * ot[k][j]
                out_row.append(acc)
            out.append(out_row)
        return Matrix(out)

    def apply(self, v: Vector) -> Vector:
        """Matrix-vector product, treating v as a column vector."""
        if len(v) != self.cols:
            raise ShapeError("matrix-vector shape mismatch")
        out = []
        for i in range(self.rows):
            acc = ZERO
            row = self.entries[i]
            for k in range(self.cols):
                if row[k] and v[k]:
                    acc = acc + row[k] * v[k]
            out.append(acc)
        return tuple(out)

    def transpose(self) -> "Matrix":
        return Matrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)]
        )

    def is_zero(self) -> bool:
        return all(not x for row in self.entries for x in row)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def trace(self) -> GaussianRational:
        if not self.is_square():
            raise ShapeError("trace of a non-square matrix")
        t = ZERO
        for i in range(self.rows):
            t = t + self.entries[i][i]
        return t

    def flatten(self) -> Vector:
        """Row-major flattening; the coordinate convention for operators."""
        return tuple(x for row in self.entries for x in row)

    @staticmethod
    def unflatten(v: Vector, rows: int, cols: int) -> "Matrix":
        if len(v) != rows * cols:
            raise ShapeError("flat vector has the wrong length")
        return Matrix([list(v[i * cols : (i + 1) * cols]) for i in range(rows)])

    def rank(self) -> int:
        return len(rref(self)[1])

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise ShapeError("inverse of a non-square matrix")
        n = self.rows
        aug = Matrix(
            [
                list(self.entries[i]) + [ONE if i == j else ZERO for j in range(n)]
                for i in range(n)
            ]
        )
        red, pivots = rref(aug)
        if pivots != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return Matrix([list(red.entries[i][n:]) for i in range(n)])

    def is_invertible(self) -> bool:
        return self.is_square() and self.rank() == self.rows

    def __repr__(self):
        body = "; ".join(
            " ".join(str(x) for x in row) for row in self.entries
        )
        return f"Matrix[{self.rows}x{self.cols}: {body}]"


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the (strictly increasing) pivot columns."""
    rows = [list(r) for r in m.entries]
    nrows, ncols = m.rows, m.cols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = rows[r][c].inverse()
        prow = rows[r]
        # only touch columns where the pivot row is nonzero
        support = [j for j in range(c, ncols) if prow[j]]
        for j in support:
            prow[j] = inv * prow[j]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                row = rows[i]
                for j in support:
                    row[j] = row[j] - f * prow[j]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return Matrix.from_rows([tuple(row) for row in rows], ncols), pivots


def nullspace(m: Matrix) -> "Subspace":
    """The kernel {v : m v = 0} as a canonical subspace."""
    red, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [ZERO] * m.cols
        v[fc] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -red.entries[r][fc]
        basis.append(tuple(v))
    return Subspace.from_vectors(m.cols, basis)


def solve(m: Matrix, rhs: Vector) -> Optional[Vector]:
    """One particular solution of ``m x = rhs`` or None.

    When the system is underdetermined the echelon-canonical solution is
    returned: all free variables are set to zero.
    """
    if len(rhs) != m.rows:
        raise ShapeError("right-hand side has the wrong length")
    aug = Matrix([list(m.entries[i]) + [rhs[i]] for i in range(m.rows)])
    red, pivots = rref(aug)
    if m.cols in pivots:
        return None
    x = [ZERO] * m.cols
    for r, pc in enumerate(pivots):
        x[pc] = red.entries[r][m.cols]
    return tuple(x)


def charpoly(m: Matrix) -> list[GaussianRational]:
    """Monic characteristic polynomial coefficients [1, c1, ..., cn].

    Faddeev-LeVerrier recursion; the only divisions are by the integers
    1..n, so the computation stays exact over any field of
    characteristic zero.
    """
    if not m.is_square():
        raise ShapeError("characteristic polynomial of a non-square matrix")
    n = m.rows
    coeffs = [ONE]
    mk = Matrix.identity(n)
    for k in range(1, n + 1):
        mk = m @ mk
        ck = -(mk.trace() / k)
        coeffs.append(ck)
        mk = mk + Matrix.identity(n).scale(ck)
    return coeffs


class Subspace:
    """A linear subspace given by its reduced-echelon row basis.

    The echelon basis is the unique canonical representative, so two
    subspaces are equal iff their basis matrices are equal.
    """

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, basis: Matrix):
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "basis", basis)

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @staticmethod
    def from_vectors(ambient_dim: int, vectors: Sequence[Vector]) -> "Subspace":
        for v in vectors:
            if len(v) != ambient_dim:
                raise ShapeError("vector length does not match ambient dimension")
        if not vectors:
            return Subspace(ambient_dim, Matrix.zero(0, ambient_dim))
        red, pivots = rref(Matrix(vectors))
        rows = [red.row(i) for i in range(len(pivots))]
        return Subspace(ambient_dim, Matrix.from_rows(rows, ambient_dim))

    @staticmethod
    def zero(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, Matrix.zero(0, ambient_dim))

    @staticmethod
    def full(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, Matrix.identity(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def vectors(self) -> list[Vector]:
        return [self.basis.row(i) for i in range(self.basis.rows)]

    def contains(self, v: Vector) -> bool:
        if len(v) != self.ambient_dim:
            raise ShapeError("vector length does not match ambient dimension")
        if vec_is_zero(v):
            return True
        stacked = Matrix.from_rows(self.vectors() + [v], self.ambient_dim)
        return stacked.rank() == self.dim

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.vectors())

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != b.ambient_dim:
        raise ShapeError("ambient dimension mismatch")
    return Subspace.from_vectors(a.ambient_dim, a.vectors() + b.vectors())


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    """Zassenhaus intersection: row reduce [[A A],[B 0]] and read the
    rows of the form (0, v)."""
    if a.ambient_dim != b.ambient_dim:
        raise ShapeError("ambient dimension mismatch")
    n = a.ambient_dim
    rows = []
    for v in a.vectors():
        rows.append(list(v) + list(v))
    for v in b.vectors():
        rows.append(list(v) + [ZERO] * n)
    if not rows:
        return Subspace.zero(n)
    red, pivots = rref(Matrix(rows))
    out = []
    for i in range(len(pivots)):
        left = red.entries[i][:n]
        if all(not x for x in left):
            right = red.entries[i][n:]
            if any(right):
                out.append(tuple(right))
    return Subspace.from_vectors(n, out)
