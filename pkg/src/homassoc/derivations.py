"""Twisted derivation spaces and inner derivations.

Operators on the algebra are n x n matrices in the same column
convention as the twist map; the space of alpha^k-derivations is the
kernel of one stacked linear system (commutation with alpha plus the
twisted Leibniz rule on all basis pairs) inside the n^2-dimensional
operator coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import HomAlgebra, apply_twist, mul
from .linalg import (
    Matrix,
    ShapeError,
    Subspace,
    Vector,
    basis_vector,
    nullspace,
)
from .scalars import ZERO


def twist_power(algebra: HomAlgebra, k: int) -> Matrix:
    out = Matrix.identity(algebra.dim)
    for _ in range(k):
        out = algebra.twist @ out
    return out


@dataclass(frozen=True)
class DerivationSpace:
    k: int
    space: Subspace

    def operators(self) -> list[Matrix]:
        n_sq = self.space.ambient_dim
        n = int(round(n_sq**0.5))
        return [Matrix.unflatten(v, n, n) for v in self.space.vectors()]

    def contains(self, operator: Matrix) -> bool:
        return self.space.contains(operator.flatten())


def derivation_space(algebra: HomAlgebra, k: int) -> DerivationSpace:
    """All D with D.alpha = alpha.D and the alpha^k-Leibniz rule."""
    if k < 0:
        raise ValueError("twist power must be non-negative")
    n = algebra.dim
    alpha = algebra.twist
    alpha_k = twist_power(algebra, k)
    tensor = algebra.product

    def op_index(p: int, q: int) -> int:
        return p * n + q

    rows = []
    # commutation: (D A - A D)_{p q} = 0
    for p in range(n):
        for q in range(n):
            row = [ZERO] * (n * n)
            for m in range(n):
                row[op_index(p, m)] = row[op_index(p, m)] + alpha[m, q]
                row[op_index(m, q)] = row[op_index(m, q)] - alpha[p, m]
            rows.append(tuple(row))
    # Leibniz on basis pairs: D(e_i e_j) = D(e_i) alpha^k(e_j) + alpha^k(e_i) D(e_j)
    for i in range(n):
        for j in range(n):
            for s in range(n):
                row = [ZERO] * (n * n)
                for m in range(n):
                    c = tensor[i][j][m]
                    if c:
                        row[op_index(s, m)] = row[op_index(s, m)] + c
                for p in range(n):
                    for q in range(n):
                        c = tensor[p][q][s]
                        if not c:
                            continue
                        if alpha_k[q, j]:
                            row[op_index(p, i)] = row[op_index(p, i)] - c * alpha_k[q, j]
                        if alpha_k[p, i]:
                            row[op_index(q, j)] = row[op_index(q, j)] - c * alpha_k[p, i]
                rows.append(tuple(row))
    return DerivationSpace(k, nullspace(Matrix(rows)))


def alpha_fixed_space(algebra: HomAlgebra) -> Subspace:
    """Nullspace of (alpha - id): the admissible arguments for inner
    derivations."""
    return nullspace(algebra.twist - Matrix.identity(algebra.dim))


def inner_derivation(algebra: HomAlgebra, f: Vector, k: int) -> Matrix:
    """The operator g -> mu(alpha^k(g), f) for an alpha-fixed f."""
    if apply_twist(algebra, f) != tuple(f):
        raise ValueError("inner derivations require alpha(f) = f")
    n = algebra.dim
    alpha_k = twist_power(algebra, k)
    columns = []
    for j in range(n):
        g = alpha_k.apply(basis_vector(n, j))
        columns.append(mul(algebra, g, f))
    return Matrix.from_columns(columns)


def inner_derivation_space(algebra: HomAlgebra, k: int) -> Subspace:
    """Span of all inner operators built from the alpha-fixed space."""
    fixed = alpha_fixed_space(algebra)
    n = algebra.dim
    flat = [inner_derivation(algebra, f, k).flatten() for f in fixed.vectors()]
    return Subspace.from_vectors(n * n, flat)


def commutator(d1: Matrix, d2: Matrix) -> Matrix:
    if d1.rows != d2.rows or d1.cols != d2.cols or not d1.is_square():
        raise ShapeError("commutator needs square operators of equal size")
    return d1 @ d2 - d2 @ d1
