"""Algebra-building operations: twisting, untwisting, transport of
structure, direct sums, graph subalgebras and isomorphism checks.

Two group-action conventions coexist in the literature this library
covers; ``transport`` is primary and ``gl_action(f, A)`` is exactly
``transport(A, f^{-1})``.
"""

from __future__ import annotations

from typing import NamedTuple

from .core import (
    HomAlgebra,
    VerificationReport,
    apply_twist,
    check_morphism,
    mul,
    zero_product,
)
from .linalg import (
    Matrix,
    ShapeError,
    Subspace,
    Vector,
    basis_vector,
    charpoly,
    vec_add,
)
from .scalars import ZERO, GaussianRational


class PreconditionError(ValueError):
    """A construction was invoked outside its domain of validity."""


def yau_twist(algebra: HomAlgebra, beta: Matrix, label: str = "") -> HomAlgebra:
    """Compose product and twist with an algebra self-morphism beta.

    The result is (A, beta . mu, beta . alpha); for an associative base
    with identity twist this is the classical twisting construction.
    """
    report = check_morphism(beta, algebra, algebra)
    if not report.holds:
        raise PreconditionError(
            f"beta is not a self-morphism ({len(report.witnesses)} witnesses)"
        )
    n = algebra.dim
    product = [
        [beta.apply(algebra.basis_product(i, j)) for j in range(n)] for i in range(n)
    ]
    return HomAlgebra(n, product, beta @ algebra.twist, algebra.unit, label)


def untwist(algebra: HomAlgebra, label: str = "") -> HomAlgebra:
    """The compatible associative product alpha^{-1} . mu, with identity twist."""
    if not algebra.twist.is_invertible():
        raise PreconditionError("twist map is singular; no untwist exists")
    inv = algebra.twist.inverse()
    n = algebra.dim
    product = [
        [inv.apply(algebra.basis_product(i, j)) for j in range(n)] for i in range(n)
    ]
    return HomAlgebra(n, product, Matrix.identity(n), algebra.unit, label)


def transport(algebra: HomAlgebra, phi: Matrix, label: str = "") -> HomAlgebra:
    """Transport of structure: (phi . mu . (phi^{-1} x phi^{-1}), phi alpha phi^{-1})."""
    if not phi.is_invertible():
        raise PreconditionError("transport requires an invertible map")
    inv = phi.inverse()
    n = algebra.dim
    inv_basis = [inv.apply(basis_vector(n, i)) for i in range(n)]
    product = [
        [phi.apply(mul(algebra, inv_basis[i], inv_basis[j])) for j in range(n)]
        for i in range(n)
    ]
    unit = algebra.unit
    if unit is not None and phi.apply(basis_vector(n, unit)) != basis_vector(n, unit):
        # the transported unit is phi(e_u); it stays a basis unit only
        # when phi fixes it, otherwise the unit marker is dropped
        unit = None
    return HomAlgebra(n, product, phi @ algebra.twist @ inv, unit, label)


def gl_action(f: Matrix, algebra: HomAlgebra, label: str = "") -> HomAlgebra:
    """The inverse-convention action f . A = transport(A, f^{-1})."""
    if not f.is_invertible():
        raise PreconditionError("group action requires an invertible map")
    return transport(algebra, f.inverse(), label)


def direct_sum(a: HomAlgebra, b: HomAlgebra, label: str = "") -> HomAlgebra:
    """Block product and block-diagonal twist on dimension n_a + n_b."""
    n, m = a.dim, b.dim
    total = n + m
    product = [[[ZERO] * total for _ in range(total)] for _ in range(total)]
    for i in range(n):
        for j in range(n):
            cell = a.basis_product(i, j)
            for k in range(n):
                product[i][j][k] = cell[k]
    for i in range(m):
        for j in range(m):
            cell = b.basis_product(i, j)
            for k in range(m):
                product[n + i][n + j][n + k] = cell[k]
    twist = [[ZERO] * total for _ in range(total)]
    for i in range(n):
        for j in range(n):
            twist[i][j] = a.twist[i, j]
    for i in range(m):
        for j in range(m):
            twist[n + i][n + j] = b.twist[i, j]
    return HomAlgebra(total, product, Matrix(twist), None, label)


def graph_subspace(phi: Matrix, a: HomAlgebra, b: HomAlgebra) -> Subspace:
    n = a.dim
    vectors = []
    for i in range(n):
        e = basis_vector(n, i)
        vectors.append(tuple(e) + tuple(phi.apply(e)))
    return Subspace.from_vectors(n + b.dim, vectors)


def graph_is_subalgebra(phi: Matrix, a: HomAlgebra, b: HomAlgebra) -> bool:
    """Is the graph {(x, phi x)} closed in the direct sum under product
    and twist?  Equivalent to phi being a morphism."""
    if phi.cols != a.dim or phi.rows != b.dim:
        raise ShapeError("graph map shape mismatch")
    total = direct_sum(a, b)
    graph = graph_subspace(phi, a, b)
    for v in graph.vectors():
        if not graph.contains(apply_twist(total, v)):
            return False
        for w in graph.vectors():
            if not graph.contains(mul(total, v, w)):
                return False
    return True


def iso_verify(a1: HomAlgebra, a2: HomAlgebra, phi: Matrix) -> VerificationReport:
    """Verify that an explicit invertible phi is an isomorphism a1 -> a2."""
    if not phi.is_square() or not phi.is_invertible():
        raise PreconditionError("isomorphism candidate must be invertible")
    return check_morphism(phi, a1, a2)


def stabilizer_member(f: Matrix, algebra: HomAlgebra) -> bool:
    """Membership in the stabilizer: f^{-1}.mu.(f x f) == mu and f.alpha == alpha.f."""
    if not f.is_invertible():
        raise PreconditionError("stabilizer members are invertible")
    if f @ algebra.twist != algebra.twist @ f:
        return False
    n = algebra.dim
    finv = f.inverse()
    images = [f.apply(basis_vector(n, i)) for i in range(n)]
    for i in range(n):
        for j in range(n):
            if finv.apply(mul(algebra, images[i], images[j])) != algebra.basis_product(
                i, j
            ):
                return False
    return True


class Fingerprint(NamedTuple):
    """Ordered isomorphism invariants, comparable across runs."""

    dim: int
    twist_rank: int
    twist_charpoly: tuple[GaussianRational, ...]
    der0_dim: int
    der1_dim: int
    center_dim: int
    z2: int
    b2: int
    h2: int
    z3: int
    h3: int


def fingerprint(algebra: HomAlgebra) -> Fingerprint:
    """Isomorphism-invariant tuple; equal for isomorphic algebras."""
    from .cohomology import cohomology_table
    from .derivations import derivation_space
    from .structure import center

    table = cohomology_table(algebra)
    return Fingerprint(
        dim=algebra.dim,
        twist_rank=algebra.twist.rank(),
        twist_charpoly=tuple(charpoly(algebra.twist)),
        der0_dim=derivation_space(algebra, 0).space.dim,
        der1_dim=derivation_space(algebra, 1).space.dim,
        center_dim=center(algebra).dim,
        z2=table.dim_z(2),
        b2=table.dim_b(2),
        h2=table.dim_h(2),
        z3=table.dim_z(3),
        h3=table.dim_h(3),
    )
