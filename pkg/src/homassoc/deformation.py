"""Truncated one-parameter formal deformations with a fixed twist.

A jet stores the base product together with higher-order bilinear terms
mu_1 ... mu_N; every term is required to be twist-compatible so each
order lives in the cochain complex.  The residual at order m is the
t^m coefficient of mu_t(mu_t(x,y), alpha z) - mu_t(alpha x, mu_t(y,z));
its order-1 value on a jet equals minus the degree-2 coboundary of
mu_1 (the sign is fixed here once and asserted by the test suite).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import product as iter_product
from typing import Optional, Sequence

from .cohomology import (
    Cochain,
    cochain_space,
    coboundary_matrix,
    coboundary_of,
    cocycle_check,
    cohomology_table,
)
from .core import (
    HomAlgebra,
    VerificationReport,
    Witness,
    apply_twist,
    mul,
    product_tensor,
    zero_product,
)
from .linalg import (
    Matrix,
    ShapeError,
    Vector,
    basis_vector,
    solve,
    vec_is_zero,
)
from .scalars import ZERO


def _tensor_to_cochain(dim: int, tensor) -> Cochain:
    coords = []
    for i in range(dim):
        for j in range(dim):
            coords.extend(tensor[i][j])
    return Cochain(2, dim, tuple(coords))


def _cochain_to_tensor(c: Cochain):
    d = c.dim
    return tuple(
        tuple(c.value_at((i, j)) for j in range(d)) for i in range(d)
    )


def _is_equivariant(algebra: HomAlgebra, tensor) -> bool:
    n = algebra.dim
    basis = [basis_vector(n, i) for i in range(n)]
    alpha_basis = [apply_twist(algebra, b) for b in basis]
    c = _tensor_to_cochain(n, tensor)
    for i in range(n):
        for j in range(n):
            lhs = apply_twist(algebra, tensor[i][j])
            rhs = c.evaluate(alpha_basis[i], alpha_basis[j])
            if lhs != rhs:
                return False
    return True


class DeformationJet:
    """Base algebra plus bilinear terms mu_1 ... mu_N (twist fixed)."""

    __slots__ = ("base", "terms")

    def __init__(self, base: HomAlgebra, terms: Sequence):
        normalized = []
        for t in terms:
            if isinstance(t, Cochain):
                if t.arity != 2 or t.dim != base.dim:
                    raise ShapeError("jet terms must be bilinear on the base space")
                tensor = _cochain_to_tensor(t)
            else:
                tensor = product_tensor(t)
            if len(tensor) != base.dim:
                raise ShapeError("jet term shape mismatch")
            if not _is_equivariant(base, tensor):
                raise ValueError("jet terms must be twist-compatible")
            normalized.append(tensor)
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "terms", tuple(normalized))

    def __setattr__(self, name, value):
        raise AttributeError("DeformationJet is immutable")

    @property
    def order(self) -> int:
        return len(self.terms)

    def term(self, i: int):
        """mu_i as a tensor; mu_0 is the base product."""
        if i == 0:
            return self.base.product
        return self.terms[i - 1]

    def term_cochain(self, i: int) -> Cochain:
        return _tensor_to_cochain(self.base.dim, self.term(i))


def _bilinear_eval(dim: int, tensor, x: Vector, y: Vector) -> Vector:
    out = [ZERO] * dim
    for i in range(dim):
        if not x[i]:
            continue
        for j in range(dim):
            if not y[j]:
                continue
            cell = tensor[i][j]
            f = x[i] * y[j]
            for k in range(dim):
                if cell[k]:
                    out[k] = out[k] + f * cell[k]
    return tuple(out)


def deformation_residual(jet: DeformationJet, m: int) -> Cochain:
    """The t^m coefficient of the deformed associativity defect, as a
    trilinear tensor over basis triples."""
    if not 0 <= m <= 2 * jet.order:
        raise ValueError("order out of range for this jet")
    n = jet.base.dim
    basis = [basis_vector(n, i) for i in range(n)]
    alpha_basis = [apply_twist(jet.base, b) for b in basis]
    coords = []
    pairs = [
        (i, m - i)
        for i in range(m + 1)
        if i <= jet.order and (m - i) <= jet.order
    ]
    for x, y, z in iter_product(range(n), repeat=3):
        acc = [ZERO] * n
        for i, k in pairs:
            outer = jet.term(i)
            inner = jet.term(k)
            left = _bilinear_eval(
                n, outer, _bilinear_eval(n, inner, basis[x], basis[y]), alpha_basis[z]
            )
            right = _bilinear_eval(
                n, outer, alpha_basis[x], _bilinear_eval(n, inner, basis[y], basis[z])
            )
            for t in range(n):
                acc[t] = acc[t] + left[t] - right[t]
        coords.extend(acc)
    return Cochain(3, n, tuple(coords))


def check_deformation(jet: DeformationJet, up_to: int) -> VerificationReport:
    """Does the deformed associativity identity hold through order up_to?"""
    if up_to > 2 * jet.order:
        raise ValueError("up_to exceeds twice the jet order")
    n = jet.base.dim
    witnesses = []
    for m in range(up_to + 1):
        residual = deformation_residual(jet, m)
        for idx in iter_product(range(n), repeat=3):
            value = residual.value_at(idx)
            if not vec_is_zero(value):
                witnesses.append(Witness((m,) + idx, value, (ZERO,) * n))
    return VerificationReport("deformation", tuple(witnesses))


class Obstruction(Enum):
    EXTENDABLE = "extendable"
    OBSTRUCTED = "obstructed"


@dataclass(frozen=True)
class ObstructionResult:
    kind: Obstruction
    mu2: Optional[Cochain] = None
    obstruction_class: Optional[Cochain] = None

    @property
    def extendable(self) -> bool:
        return self.kind is Obstruction.EXTENDABLE


def first_obstruction(algebra: HomAlgebra, mu1: Cochain) -> ObstructionResult:
    """Decide whether an order-1 deformation extends to order 2.

    Q(x,y,z) = mu1(mu1(x,y), alpha z) - mu1(alpha x, mu1(y,z)) is checked
    to be a degree-3 cocycle and the linear system for mu2 (whose
    coboundary must cancel Q) is solved exactly over the twist-compatible
    bilinear maps.
    """
    report = cocycle_check(algebra, mu1)
    if not report.holds:
        raise ValueError("mu1 must be a degree-2 cocycle")
    n = algebra.dim
    jet = DeformationJet(algebra, [_cochain_to_tensor(mu1)])
    q = deformation_residual(jet, 2)
    q_check = cocycle_check(algebra, q)
    if not q_check.holds:
        raise AssertionError("order-2 residual of a cocycle must be a 3-cocycle")
    matrix, space = coboundary_matrix(algebra, 2)
    coeffs = solve(matrix, q.coords)
    if coeffs is None:
        return ObstructionResult(Obstruction.OBSTRUCTED, obstruction_class=q)
    acc = [ZERO] * n**3
    for c, b in zip(coeffs, space.vectors()):
        if c:
            for t, x in enumerate(b):
                if x:
                    acc[t] = acc[t] + c * x
    mu2 = Cochain(2, n, tuple(acc))
    return ObstructionResult(Obstruction.EXTENDABLE, mu2=mu2)


def equivalence_apply(jet: DeformationJet, phi_jet: Sequence[Matrix]) -> DeformationJet:
    """Transform a jet by a formal isomorphism phi_t = id + t phi_1 + ...

    The inverse power series is computed exactly and the transformed
    product phi_t . mu_t . (phi_t^{-1} x phi_t^{-1}) is truncated at the
    jet order.  Higher phi terms must commute with the twist so the
    result stays inside the cochain complex.
    """
    n = jet.base.dim
    phis = list(phi_jet)
    if not phis or phis[0] != Matrix.identity(n):
        raise ValueError("phi_0 must be the identity")
    for p in phis[1:]:
        if p.rows != n or p.cols != n:
            raise ShapeError("phi term shape mismatch")
        if p @ jet.base.twist != jet.base.twist @ p:
            raise ValueError("phi terms must commute with the twist")
    order = jet.order
    while len(phis) <= order:
        phis.append(Matrix.zero(n, n))
    # power-series inverse: psi_0 = id, psi_m = -sum phi_i psi_{m-i}
    psis = [Matrix.identity(n)]
    for m in range(1, order + 1):
        acc = Matrix.zero(n, n)
        for i in range(1, m + 1):
            acc = acc + phis[i] @ psis[m - i]
        psis.append(-acc)

    basis = [basis_vector(n, i) for i in range(n)]
    new_terms = []
    for m in range(1, order + 1):
        tensor = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                acc = [ZERO] * n
                for a in range(m + 1):
                    for b in range(m + 1 - a):
                        for c in range(m + 1 - a - b):
                            d = m - a - b - c
                            if b > order:
                                continue
                            value = phis[a].apply(
                                _bilinear_eval(
                                    n,
                                    jet.term(b),
                                    psis[c].apply(basis[i]),
                                    psis[d].apply(basis[j]),
                                )
                            )
                            for t in range(n):
                                acc[t] = acc[t] + value[t]
                tensor[i][j] = tuple(acc)
        new_terms.append(tensor)
    return DeformationJet(jet.base, new_terms)


class Rigidity(Enum):
    RIGID_INDICATED = "rigid_indicated"
    UNKNOWN = "unknown"


def rigidity_probe(algebra: HomAlgebra) -> Rigidity:
    """Vanishing degree-2 cohomology indicates rigidity (every order-1
    term is a coboundary, removable order by order)."""
    table = cohomology_table(algebra, max_degree=2)
    if table.dim_h(2) == 0:
        return Rigidity.RIGID_INDICATED
    return Rigidity.UNKNOWN
