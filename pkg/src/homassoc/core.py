"""The Hom-algebra data model and the axiom verification predicates.

A finite-dimensional algebra with twist is stored by structure
constants: ``product[i][j][k]`` is the coefficient of ``e_k`` in
``e_i * e_j`` and the twist matrix holds the images of basis vectors in
its columns (entry ``(j, i)`` is the coefficient of ``e_j`` in
``alpha(e_i)``).

Verification is witness-producing: a failed check reports every basis
tuple on which the identity breaks, together with both side values, so
regression reports are diagnosable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .linalg import (
    Matrix,
    ShapeError,
    Vector,
    basis_vector,
    vec_add,
    vec_is_zero,
    zero_vector,
)
from .scalars import ZERO, GaussianRational

ProductTensor = tuple[tuple[Vector, ...], ...]


def product_tensor(entries: Sequence[Sequence[Sequence]]) -> ProductTensor:
    """Normalize a nested n x n x n array of scalars into a tensor."""
    from .linalg import as_scalar

    return tuple(
        tuple(tuple(as_scalar(x) for x in cell) for cell in row) for row in entries
    )


def zero_product(n: int) -> ProductTensor:
    return tuple(tuple((ZERO,) * n for _ in range(n)) for _ in range(n))


class HomAlgebra:
    """A multiplication tensor and a twist map on a fixed basis."""

    __slots__ = ("dim", "product", "twist", "unit", "label", "_nonzero")

    def __init__(
        self,
        dim: int,
        product: Sequence[Sequence[Sequence]],
        twist: Matrix,
        unit: Optional[int] = None,
        label: str = "",
    ):
        tensor = product_tensor(product)
        if len(tensor) != dim or any(
            len(row) != dim or any(len(cell) != dim for cell in row) for row in tensor
        ):
            raise ShapeError("product tensor shape does not match dim")
        if twist.rows != dim or twist.cols != dim:
            raise ShapeError("twist matrix shape does not match dim")
        if unit is not None and not (0 <= unit < dim):
            raise ShapeError("unit index out of range")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "product", tensor)
        object.__setattr__(self, "twist", twist)
        object.__setattr__(self, "unit", unit)
        object.__setattr__(self, "label", label)
        nz = [
            (i, j, k, tensor[i][j][k])
            for i in range(dim)
            for j in range(dim)
            for k in range(dim)
            if tensor[i][j][k]
        ]
        object.__setattr__(self, "_nonzero", tuple(nz))

    def __setattr__(self, name, value):
        raise AttributeError("HomAlgebra is immutable")

    def relabel(self, label: str) -> "HomAlgebra":
        return HomAlgebra(self.dim, self.product, self.twist, self.unit, label)

    def with_unit(self, unit: Optional[int]) -> "HomAlgebra":
        return HomAlgebra(self.dim, self.product, self.twist, unit, self.label)

    def basis_product(self, i: int, j: int) -> Vector:
        return self.product[i][j]

    def product_is_zero(self) -> bool:
        return not self._nonzero

    def __eq__(self, other):
        """Structural equality; the label is ignored."""
        if not isinstance(other, HomAlgebra):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.product == other.product
            and self.twist == other.twist
            and self.unit == other.unit
        )

    def __hash__(self):
        return hash((self.dim, self.product, self.twist, self.unit))

    def __repr__(self):
        tag = self.label or "HomAlgebra"
        return f"<{tag} dim={self.dim}>"


@dataclass(frozen=True)
class Witness:
    indices: tuple[int, ...]
    lhs: Vector
    rhs: Vector


@dataclass(frozen=True)
class VerificationReport:
    property_name: str
    witnesses: tuple[Witness, ...] = field(default_factory=tuple)

    @property
    def holds(self) -> bool:
        return not self.witnesses

    def __bool__(self):
        return self.holds


def mul(algebra: HomAlgebra, x: Vector, y: Vector) -> Vector:
    """Bilinear extension of the structure tensor."""
    n = algebra.dim
    if len(x) != n or len(y) != n:
        raise ShapeError("vector length does not match algebra dimension")
    out = [ZERO] * n
    for i, j, k, c in algebra._nonzero:
        if x[i] and y[j]:
            out[k] = out[k] + x[i] * y[j] * c
    return tuple(out)


def apply_twist(algebra: HomAlgebra, x: Vector) -> Vector:
    return algebra.twist.apply(x)


def hom_associator(algebra: HomAlgebra, x: Vector, y: Vector, z: Vector) -> Vector:
    """mu(mu(x,y), alpha(z)) - mu(alpha(x), mu(y,z)); identically zero
    iff the algebra is Hom-associative."""
    left = mul(algebra, mul(algebra, x, y), apply_twist(algebra, z))
    right = mul(algebra, apply_twist(algebra, x), mul(algebra, y, z))
    return tuple(a - b for a, b in zip(left, right))


def check_hom_associative(algebra: HomAlgebra) -> VerificationReport:
    """Hom-associativity on all basis triples (sufficient by trilinearity)."""
    n = algebra.dim
    witnesses = []
    basis = [basis_vector(n, i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = mul(
                    algebra,
                    algebra.basis_product(i, j),
                    apply_twist(algebra, basis[k]),
                )
                rhs = mul(
                    algebra,
                    apply_twist(algebra, basis[i]),
                    algebra.basis_product(j, k),
                )
                if lhs != rhs:
                    witnesses.append(Witness((i, j, k), lhs, rhs))
    return VerificationReport("hom_associative", tuple(witnesses))


def check_multiplicative(algebra: HomAlgebra) -> VerificationReport:
    """alpha(mu(x,y)) == mu(alpha(x), alpha(y)) on all basis pairs."""
    n = algebra.dim
    witnesses = []
    basis = [basis_vector(n, i) for i in range(n)]
    images = [apply_twist(algebra, b) for b in basis]
    for i in range(n):
        for j in range(n):
            lhs = apply_twist(algebra, algebra.basis_product(i, j))
            rhs = mul(algebra, images[i], images[j])
            if lhs != rhs:
                witnesses.append(Witness((i, j), lhs, rhs))
    return VerificationReport("multiplicative", tuple(witnesses))


def check_unital(algebra: HomAlgebra) -> VerificationReport:
    """Unit equations mu(x,u) = mu(u,x) = alpha(x) and alpha(u) = u."""
    if algebra.unit is None:
        raise ValueError("algebra has no declared unit")
    n = algebra.dim
    u = algebra.unit
    witnesses = []
    unit_vec = basis_vector(n, u)
    alpha_u = apply_twist(algebra, unit_vec)
    if alpha_u != unit_vec:
        witnesses.append(Witness((u,), alpha_u, unit_vec))
    for i in range(n):
        target = apply_twist(algebra, basis_vector(n, i))
        right = algebra.basis_product(i, u)
        if right != target:
            witnesses.append(Witness((i, u), right, target))
        left = algebra.basis_product(u, i)
        if left != target:
            witnesses.append(Witness((u, i), left, target))
    return VerificationReport("unital", tuple(witnesses))


def check_morphism(
    phi: Matrix, source: HomAlgebra, target: HomAlgebra
) -> VerificationReport:
    """phi(mu1(x,y)) == mu2(phi x, phi y) and alpha2 . phi == phi . alpha1.

    For unital algebras (both units declared) the unit must also map to
    the unit.
    """
    if phi.cols != source.dim or phi.rows != target.dim:
        raise ShapeError("morphism matrix shape mismatch")
    n = source.dim
    witnesses = []
    images = [phi.apply(basis_vector(n, i)) for i in range(n)]
    for i in range(n):
        for j in range(n):
            lhs = phi.apply(source.basis_product(i, j))
            rhs = mul(target, images[i], images[j])
            if lhs != rhs:
                witnesses.append(Witness((i, j), lhs, rhs))
    for i in range(n):
        lhs = phi.apply(apply_twist(source, basis_vector(n, i)))
        rhs = apply_twist(target, images[i])
        if lhs != rhs:
            witnesses.append(Witness((i,), lhs, rhs))
    if source.unit is not None and target.unit is not None:
        lhs = images[source.unit]
        rhs = basis_vector(target.dim, target.unit)
        if lhs != rhs:
            witnesses.append(Witness((source.unit,), lhs, rhs))
    return VerificationReport("morphism", tuple(witnesses))
