"""Twisted Hochschild-type cochain complex in low degrees.

An n-cochain is an n-linear map compatible with the twist
(alpha . phi = phi . (alpha x ... x alpha)), stored as a flat
coordinate vector over basis tuples: the coordinate of
phi(e_{i1},...,e_{in}) on e_k sits at index ((i1*d+i2)*d+...+i_n)*d+k.

The coboundary is implemented once, generically in the degree, from the
single defining formula; degree 1, 2, 3 specializations follow.  The
supported degree window is a configuration constant, not a structural
limit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iter_product
from typing import Optional, Sequence

from .core import HomAlgebra, VerificationReport, Witness, apply_twist, mul
from .derivations import twist_power
from .linalg import (
    Matrix,
    ShapeError,
    Subspace,
    Vector,
    basis_vector,
    nullspace,
    vec_is_zero,
)
from .scalars import ONE, ZERO, GaussianRational

MAX_DEGREE = 3

SparseVector = list[tuple[int, GaussianRational]]


def _sparse(v: Vector) -> SparseVector:
    return [(i, c) for i, c in enumerate(v) if c]


@dataclass(frozen=True)
class Cochain:
    """A multilinear map with one output index, flattened row-major."""

    arity: int
    dim: int
    coords: Vector

    def __post_init__(self):
        if len(self.coords) != self.dim ** (self.arity + 1):
            raise ShapeError("cochain coordinate length mismatch")

    @staticmethod
    def zero(arity: int, dim: int) -> "Cochain":
        return Cochain(arity, dim, (ZERO,) * dim ** (arity + 1))

    @staticmethod
    def from_entries(
        arity: int, dim: int, entries: dict[tuple[int, ...], Sequence]
    ) -> "Cochain":
        """Build from a map of input tuples (0-based) to output vectors."""
        from .linalg import as_scalar

        coords = [ZERO] * dim ** (arity + 1)
        for idx, value in entries.items():
            if len(idx) != arity:
                raise ShapeError("input tuple has the wrong arity")
            base = 0
            for i in idx:
                base = base * dim + i
            base *= dim
            for k, x in enumerate(value):
                coords[base + k] = as_scalar(x)
        return Cochain(arity, dim, tuple(coords))

    def value_at(self, idx: tuple[int, ...]) -> Vector:
        base = 0
        for i in idx:
            base = base * self.dim + i
        base *= self.dim
        return self.coords[base : base + self.dim]

    def evaluate(self, *args: Vector) -> Vector:
        if len(args) != self.arity:
            raise ShapeError("wrong number of cochain arguments")
        return _eval_flat(self.coords, self.arity, self.dim, [_sparse(a) for a in args])

    def is_zero(self) -> bool:
        return all(not c for c in self.coords)


def _eval_flat(
    coords: Vector, arity: int, dim: int, sparse_args: list[SparseVector]
) -> Vector:
    out = [ZERO] * dim
    for combo in iter_product(*sparse_args):
        coeff = ONE
        base = 0
        for i, c in combo:
            coeff = coeff * c
            base = base * dim + i
        base *= dim
        for k in range(dim):
            v = coords[base + k]
            if v:
                out[k] = out[k] + coeff * v
    return tuple(out)


def cochain_space(algebra: HomAlgebra, arity: int) -> Subspace:
    """Solutions of the twist-compatibility constraints in degree ``arity``."""
    if not 1 <= arity <= MAX_DEGREE:
        raise ValueError(f"supported cochain degrees are 1..{MAX_DEGREE}")
    n = algebra.dim
    alpha = algebra.twist
    total = n ** (arity + 1)

    def flat(idx: tuple[int, ...], out: int) -> int:
        base = 0
        for i in idx:
            base = base * n + i
        return base * n + out

    rows = []
    alpha_cols = [_sparse(alpha.column(i)) for i in range(n)]
    for idx in iter_product(range(n), repeat=arity):
        for s in range(n):
            row = [ZERO] * total
            # alpha . phi term
            for p in range(n):
                if alpha[s, p]:
                    row[flat(idx, p)] = row[flat(idx, p)] + alpha[s, p]
            # phi . (alpha x ... x alpha) term
            for combo in iter_product(*[alpha_cols[i] for i in idx]):
                coeff = ONE
                for _, c in combo:
                    coeff = coeff * c
                target = tuple(p for p, _ in combo)
                row[flat(target, s)] = row[flat(target, s)] - coeff
            rows.append(tuple(row))
    return nullspace(Matrix(rows))


def coboundary_of(algebra: HomAlgebra, c: Cochain) -> Cochain:
    """The degree-(arity+1) image of ``c`` under the twisted coboundary."""
    n = algebra.dim
    arity = c.arity
    alpha_pow = twist_power(algebra, arity - 1)
    basis = [basis_vector(n, i) for i in range(n)]
    alpha_basis = [apply_twist(algebra, b) for b in basis]
    out_coords: list[GaussianRational] = []
    for idx in iter_product(range(n), repeat=arity + 1):
        args = [basis[i] for i in idx]
        value = mul(algebra, alpha_pow.apply(args[0]), c.evaluate(*args[1:]))
        sign = -1
        for k in range(1, arity + 1):
            inner = list(args)
            merged = mul(algebra, args[k - 1], args[k])
            new_args = (
                [alpha_basis[idx[t]] for t in range(k - 1)]
                + [merged]
                + [alpha_basis[idx[t]] for t in range(k + 1, arity + 1)]
            )
            term = c.evaluate(*new_args)
            if sign > 0:
                value = tuple(a + b for a, b in zip(value, term))
            else:
                value = tuple(a - b for a, b in zip(value, term))
            sign = -sign
        last = mul(algebra, c.evaluate(*args[:-1]), alpha_pow.apply(args[-1]))
        if sign > 0:
            value = tuple(a + b for a, b in zip(value, last))
        else:
            value = tuple(a - b for a, b in zip(value, last))
        out_coords.extend(value)
    return Cochain(arity + 1, n, tuple(out_coords))


def coboundary_matrix(algebra: HomAlgebra, arity: int) -> tuple[Matrix, Subspace]:
    """Matrix of the coboundary restricted to the cochain space.

    Columns follow the echelon basis of ``cochain_space(algebra, arity)``;
    rows are the full coordinate space of (arity+1)-tensors.  The basis
    subspace is returned alongside so callers can map coefficient
    vectors back to cochains.
    """
    space = cochain_space(algebra, arity)
    n = algebra.dim
    columns = []
    for v in space.vectors():
        image = coboundary_of(algebra, Cochain(arity, n, v))
        columns.append(image.coords)
    if columns:
        matrix = Matrix.from_columns(columns)
    else:
        matrix = Matrix.zero(n ** (arity + 2), 0)
    return matrix, space


@dataclass(frozen=True)
class DegreeData:
    dim_cochain: int
    dim_z: int
    dim_b: int
    dim_h: int


@dataclass(frozen=True)
class CohomologyTable:
    algebra_label: str
    degrees: dict[int, DegreeData]
    cocycle_bases: dict[int, tuple[Cochain, ...]]
    certificates: dict[int, dict[str, int]]

    def dim_z(self, n: int) -> int:
        return self.degrees[n].dim_z

    def dim_b(self, n: int) -> int:
        return self.degrees[n].dim_b

    def dim_h(self, n: int) -> int:
        return self.degrees[n].dim_h


def cocycle_subspace(algebra: HomAlgebra, arity: int) -> Subspace:
    """Z^arity as a subspace of the full cochain coordinate space."""
    matrix, space = coboundary_matrix(algebra, arity)
    kernel = nullspace(matrix)
    n = algebra.dim
    vectors = []
    basis = space.vectors()
    for coeffs in kernel.vectors():
        acc = [ZERO] * n ** (arity + 1)
        for c, b in zip(coeffs, basis):
            if c:
                for t, x in enumerate(b):
                    if x:
                        acc[t] = acc[t] + c * x
        vectors.append(tuple(acc))
    return Subspace.from_vectors(n ** (arity + 1), vectors)


def coboundary_image(algebra: HomAlgebra, arity: int) -> Subspace:
    """B^{arity+1} as a subspace of the full coordinate space."""
    matrix, _ = coboundary_matrix(algebra, arity)
    return Subspace.from_vectors(
        matrix.rows, [matrix.column(j) for j in range(matrix.cols)]
    )


def _combine(space_basis: list[Vector], coeffs: Vector, length: int) -> Vector:
    acc = [ZERO] * length
    for c, b in zip(coeffs, space_basis):
        if c:
            for t, x in enumerate(b):
                if x:
                    acc[t] = acc[t] + c * x
    return tuple(acc)


def cohomology_table(algebra: HomAlgebra, max_degree: int = MAX_DEGREE) -> CohomologyTable:
    """Cochain/cocycle/coboundary/cohomology dimensions for degrees 1..max_degree.

    B^1 is zero (the complex starts in degree 1) and H^1 = Z^1.  All
    dimensions come from exact rank computations; the certificate dict
    records the underlying matrix sizes and ranks.
    """
    n = algebra.dim
    degrees: dict[int, DegreeData] = {}
    bases: dict[int, tuple[Cochain, ...]] = {}
    certificates: dict[int, dict[str, int]] = {}
    prev_image_rank = 0
    for arity in range(1, max_degree + 1):
        matrix, space = coboundary_matrix(algebra, arity)
        kernel = nullspace(matrix)
        dim_c = space.dim
        rank = dim_c - kernel.dim
        dim_z = kernel.dim
        dim_b = prev_image_rank
        degrees[arity] = DegreeData(dim_c, dim_z, dim_b, dim_z - dim_b)
        space_basis = space.vectors()
        z_vectors = [
            _combine(space_basis, coeffs, n ** (arity + 1))
            for coeffs in kernel.vectors()
        ]
        z_space = Subspace.from_vectors(n ** (arity + 1), z_vectors)
        bases[arity] = tuple(Cochain(arity, n, v) for v in z_space.vectors())
        certificates[arity] = {
            "cochain_dim": dim_c,
            "coboundary_rows": matrix.rows,
            "coboundary_cols": matrix.cols,
            "coboundary_rank": rank,
        }
        prev_image_rank = rank
    return CohomologyTable(algebra.label, degrees, bases, certificates)


def cocycle_check(algebra: HomAlgebra, c: Cochain) -> VerificationReport:
    """Twist compatibility plus vanishing coboundary, with witnesses."""
    if not 1 <= c.arity <= MAX_DEGREE:
        raise ValueError(f"supported cochain degrees are 1..{MAX_DEGREE}")
    if c.dim != algebra.dim:
        raise ShapeError("cochain dimension mismatch")
    n = algebra.dim
    witnesses = []
    basis = [basis_vector(n, i) for i in range(n)]
    alpha_basis = [apply_twist(algebra, b) for b in basis]
    for idx in iter_product(range(n), repeat=c.arity):
        lhs = apply_twist(algebra, c.value_at(idx))
        rhs = c.evaluate(*[alpha_basis[i] for i in idx])
        if lhs != rhs:
            witnesses.append(Witness(idx, lhs, rhs))
    image = coboundary_of(algebra, c)
    for idx in iter_product(range(n), repeat=c.arity + 1):
        value = image.value_at(idx)
        if not vec_is_zero(value):
            witnesses.append(Witness(idx, value, (ZERO,) * n))
    return VerificationReport("cocycle", tuple(witnesses))


def hochschild_coboundary_of(compatible: HomAlgebra, c: Cochain) -> Cochain:
    """Untwisted (identity twist) coboundary of the compatible algebra."""
    ident = HomAlgebra(
        compatible.dim, compatible.product, Matrix.identity(compatible.dim)
    )
    return coboundary_of(ident, c)


def lift_assoc_cocycle(
    algebra: HomAlgebra, compatible: HomAlgebra, c: Cochain
) -> Cochain:
    """Push a cocycle of the compatible associative product through alpha.

    Requires mu = alpha . mu', that ``c`` is a cocycle of the untwisted
    complex of mu', and that alpha . c = c . (alpha x ... x alpha); the
    returned alpha . c is then a cocycle of the twisted complex.
    """
    n = algebra.dim
    if compatible.dim != n or c.dim != n:
        raise ShapeError("dimension mismatch")
    for i in range(n):
        for j in range(n):
            expected = apply_twist(algebra, compatible.basis_product(i, j))
            if expected != algebra.basis_product(i, j):
                raise ValueError(
                    "compatible product does not satisfy mu = alpha . mu' "
                    f"at basis pair ({i + 1}, {j + 1})"
                )
    image = hochschild_coboundary_of(compatible, c)
    for idx in iter_product(range(n), repeat=c.arity + 1):
        if not vec_is_zero(image.value_at(idx)):
            raise ValueError(f"input is not a cocycle of the compatible product at {idx}")
    basis = [basis_vector(n, i) for i in range(n)]
    alpha_basis = [apply_twist(algebra, b) for b in basis]
    for idx in iter_product(range(n), repeat=c.arity):
        lhs = apply_twist(algebra, c.value_at(idx))
        rhs = c.evaluate(*[alpha_basis[i] for i in idx])
        if lhs != rhs:
            raise ValueError(f"twist-compatibility hypothesis fails at {idx}")
    coords = []
    for idx in iter_product(range(n), repeat=c.arity):
        coords.extend(apply_twist(algebra, c.value_at(idx)))
    return Cochain(c.arity, n, tuple(coords))
