"""Structure theory: ideals, center, kernel ideal, multiplication
algebra, simplicity certificates and the associative-type decision.

Simplicity uses a Burnside-style dimension criterion: if the unital
operator algebra generated by all left/right multiplications and the
twist is the full endomorphism algebra (dimension n^2) then no proper
invariant subspace exists over any field extension, hence no proper
two-sided ideal.  A smaller operator algebra triggers an explicit
spinning search instead of a wrong negative verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .core import HomAlgebra, apply_twist, hom_associator, mul
from .linalg import (
    Matrix,
    ShapeError,
    Subspace,
    Vector,
    basis_vector,
    nullspace,
    rref,
    solve,
    vec_is_zero,
    zero_vector,
)
from .scalars import I, ONE, ZERO, GaussianRational


def is_ideal(space: Subspace, algebra: HomAlgebra) -> bool:
    """Two-sided Hom-ideal test: alpha-invariant and absorbing on both sides."""
    if space.ambient_dim != algebra.dim:
        raise ShapeError("subspace ambient dimension does not match algebra")
    basis = [basis_vector(algebra.dim, i) for i in range(algebra.dim)]
    for v in space.vectors():
        if not space.contains(apply_twist(algebra, v)):
            return False
        for e in basis:
            if not space.contains(mul(algebra, v, e)):
                return False
            if not space.contains(mul(algebra, e, v)):
                return False
    return True


def ideal_closure(generators: Sequence[Vector], algebra: HomAlgebra) -> Subspace:
    """Smallest subspace containing the generators that is invariant
    under the twist and all left/right basis multiplications."""
    n = algebra.dim
    current = Subspace.from_vectors(n, list(generators))
    basis = [basis_vector(n, i) for i in range(n)]
    while True:
        new_vectors = list(current.vectors())
        for v in current.vectors():
            new_vectors.append(apply_twist(algebra, v))
            for e in basis:
                new_vectors.append(mul(algebra, v, e))
                new_vectors.append(mul(algebra, e, v))
        expanded = Subspace.from_vectors(n, new_vectors)
        if expanded == current:
            return current
        current = expanded


def kernel_alpha_ideal(algebra: HomAlgebra) -> Subspace:
    """Ker(alpha), which is a two-sided ideal of any multiplicative algebra."""
    ker = nullspace(algebra.twist)
    if not is_ideal(ker, algebra):
        raise ValueError(
            "Ker(alpha) is not an ideal; the algebra is not multiplicative"
        )
    return ker


def center(algebra: HomAlgebra) -> Subspace:
    """Solutions of mu(x,y)=mu(y,x) and mu(alpha x, y)=mu(y, alpha x) for all y."""
    n = algebra.dim
    rows = []
    tensor = algebra.product
    twist = algebra.twist
    # commutation constraints: sum_i x_i (C^k_{ij} - C^k_{ji}) = 0
    for j in range(n):
        for k in range(n):
            rows.append(tuple(tensor[i][j][k] - tensor[j][i][k] for i in range(n)))
    # twisted constraints on alpha(x)
    for j in range(n):
        for k in range(n):
            row = []
            for p in range(n):
                acc = ZERO
                for i in range(n):
                    d = tensor[i][j][k] - tensor[j][i][k]
                    if d and twist[i, p]:
                        acc = acc + twist[i, p] * d
                row.append(acc)
            rows.append(tuple(row))
    return nullspace(Matrix(rows))


def left_multiplication(algebra: HomAlgebra, i: int) -> Matrix:
    n = algebra.dim
    return Matrix([[algebra.product[i][j][k] for j in range(n)] for k in range(n)])


def right_multiplication(algebra: HomAlgebra, i: int) -> Matrix:
    n = algebra.dim
    return Matrix([[algebra.product[j][i][k] for j in range(n)] for k in range(n)])


def multiplication_algebra_dim(algebra: HomAlgebra) -> int:
    """Dimension of the unital operator algebra generated by all left
    and right multiplications together with the twist."""
    n = algebra.dim
    generators = [left_multiplication(algebra, i) for i in range(n)]
    generators += [right_multiplication(algebra, i) for i in range(n)]
    generators.append(algebra.twist)
    span = Subspace.from_vectors(n * n, [Matrix.identity(n).flatten()])
    frontier = [Matrix.identity(n)]
    while frontier:
        new_frontier = []
        for op in frontier:
            for g in generators:
                for candidate in (g @ op, op @ g):
                    flat = candidate.flatten()
                    if not span.contains(flat):
                        span = Subspace.from_vectors(
                            n * n, span.vectors() + [flat]
                        )
                        new_frontier.append(candidate)
        frontier = new_frontier
    return span.dim


class Verdict(Enum):
    CERTIFIED_SIMPLE = "certified_simple"
    PROPER_IDEAL_FOUND = "proper_ideal_found"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class SimplicityVerdict:
    verdict: Verdict
    multiplication_algebra_dim: int
    ideal: Optional[Subspace] = None

    @property
    def is_simple(self) -> bool:
        return self.verdict is Verdict.CERTIFIED_SIMPLE


def _probe_vectors(n: int) -> list[Vector]:
    probes = [basis_vector(n, i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            e_i, e_j = basis_vector(n, i), basis_vector(n, j)
            probes.append(tuple(a + b for a, b in zip(e_i, e_j)))
            probes.append(tuple(a + I * b for a, b in zip(e_i, e_j)))
    return probes


def simplicity_certificate(algebra: HomAlgebra) -> SimplicityVerdict:
    """Certify simplicity or exhibit a proper two-sided ideal.

    Candidacy requires a nonzero twist and a nonzero product; the kernel
    of the twist is tried first (it is always an ideal of a
    multiplicative algebra), then deterministic spinning probes.
    """
    n = algebra.dim
    if n < 1:
        raise ShapeError("simplicity is only defined for n >= 1")
    madim = multiplication_algebra_dim(algebra)
    nontrivial = not algebra.twist.is_zero() and not algebra.product_is_zero()
    if nontrivial and madim == n * n:
        return SimplicityVerdict(Verdict.CERTIFIED_SIMPLE, madim)
    ker = nullspace(algebra.twist)
    if 0 < ker.dim < n and is_ideal(ker, algebra):
        return SimplicityVerdict(Verdict.PROPER_IDEAL_FOUND, madim, ker)
    for probe in _probe_vectors(n):
        closure = ideal_closure([probe], algebra)
        if 0 < closure.dim < n:
            return SimplicityVerdict(Verdict.PROPER_IDEAL_FOUND, madim, closure)
    return SimplicityVerdict(Verdict.INCONCLUSIVE, madim)


class AssocType(Enum):
    YES = "yes"
    NO = "no"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class AssociativeTypeResult:
    kind: AssocType
    compatible: Optional[HomAlgebra] = None
    detail: str = ""


def _is_associative(algebra: HomAlgebra) -> bool:
    n = algebra.dim
    ident = Matrix.identity(n)
    plain = HomAlgebra(n, algebra.product, ident)
    basis = [basis_vector(n, i) for i in range(n)]
    for x in basis:
        for y in basis:
            for z in basis:
                if not vec_is_zero(hom_associator(plain, x, y, z)):
                    return False
    return True


def associative_type_check(
    algebra: HomAlgebra, budget: int = 100_000
) -> AssociativeTypeResult:
    """Decide whether mu factors as alpha . mu' with mu' associative.

    Invertible twist: the unique candidate alpha^{-1}.mu settles it.
    Singular twist: solve the linear system alpha.mu' = mu; pose the
    associativity of the affine solution family as a polynomial system
    and fall back to a Groebner computation when sampling fails.
    """
    from .constructions import untwist

    n = algebra.dim
    ident = Matrix.identity(n)
    if algebra.twist.is_invertible():
        candidate = untwist(algebra)
        if _is_associative(candidate):
            return AssociativeTypeResult(AssocType.YES, candidate, "unique untwist")
        return AssociativeTypeResult(
            AssocType.NO, None, "unique candidate alpha^{-1}.mu is not associative"
        )
    # solve alpha . mu' = mu columnwise: for each pair (i, j) the vector
    # mu'(e_i, e_j) solves twist * v = mu(e_i, e_j)
    particular: list[list[Vector]] = []
    for i in range(n):
        row = []
        for j in range(n):
            sol = solve(algebra.twist, algebra.basis_product(i, j))
            if sol is None:
                return AssociativeTypeResult(
                    AssocType.NO,
                    None,
                    f"no preimage of the product at basis pair ({i + 1}, {j + 1})",
                )
            row.append(sol)
        particular.append(row)
    kernel = nullspace(algebra.twist)
    base = HomAlgebra(n, particular, ident)
    if kernel.dim == 0 or _is_associative(base):
        if _is_associative(base):
            return AssociativeTypeResult(AssocType.YES, base, "canonical solution")
        return AssociativeTypeResult(
            AssocType.NO, None, "unique solution of the linear system is not associative"
        )
    return _associative_type_groebner(algebra, particular, kernel, budget)


def _associative_type_groebner(
    algebra: HomAlgebra,
    particular: list[list[Vector]],
    kernel: Subspace,
    budget: int,
) -> AssociativeTypeResult:
    """Associativity constraints on the affine solution family, decided
    by a Groebner basis over the free parameters."""
    from .poly import MonomialOrder, MultiPoly, buchberger, BudgetExceeded

    n = algebra.dim
    kernel_vectors = kernel.vectors()
    # unknowns t[(i, j, r)]: kernel coefficient r of the cell (i, j);
    # only rational data is supported by the polynomial engine
    names = []
    index = {}
    for i in range(n):
        for j in range(n):
            for r in range(len(kernel_vectors)):
                index[(i, j, r)] = len(names)
                names.append(f"t{i + 1}{j + 1}{r + 1}")
    nvars = len(names)

    def cell_poly(i: int, j: int, k: int) -> MultiPoly | None:
        value = particular[i][j][k]
        if not value.is_rational():
            return None
        terms = {(0,) * nvars: value.re} if value.re else {}
        for r, kv in enumerate(kernel_vectors):
            comp = kv[k]
            if comp:
                if not comp.is_rational():
                    return None
                exp = [0] * nvars
                exp[index[(i, j, r)]] = 1
                terms[tuple(exp)] = comp.re
        return MultiPoly(names, terms)

    cells: dict[tuple[int, int, int], MultiPoly] = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                p = cell_poly(i, j, k)
                if p is None:
                    return AssociativeTypeResult(
                        AssocType.INCONCLUSIVE,
                        None,
                        "non-rational solution family is outside the polynomial engine",
                    )
                cells[(i, j, k)] = p

    zero = MultiPoly(names, {})
    gens = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for s in range(n):
                    # associativity of mu': (e_i e_j) e_k = e_i (e_j e_k), component s
                    acc = zero
                    for m in range(n):
                        acc = acc + cells[(i, j, m)] * cells[(m, k, s)]
                        acc = acc - cells[(j, k, m)] * cells[(i, m, s)]
                    if acc.terms:
                        gens.append(acc)
    if not gens:
        return AssociativeTypeResult(
            AssocType.YES,
            HomAlgebra(n, particular, Matrix.identity(n)),
            "associativity holds on the whole solution family",
        )
    order = MonomialOrder.degrevlex(names)
    try:
        basis = buchberger(gens, order, budget=budget)
    except BudgetExceeded:
        return AssociativeTypeResult(
            AssocType.INCONCLUSIVE, None, "Groebner budget exceeded"
        )
    if basis.is_unit_ideal():
        return AssociativeTypeResult(
            AssocType.NO, None, "associativity constraints have no solution"
        )
    point = basis.rational_point_if_linear()
    if point is not None:
        product = [
            [
                tuple(
                    particular[i][j][k]
                    + sum(
                        (point[index[(i, j, r)]] * kv[k] for r, kv in enumerate(kernel_vectors)),
                        ZERO,
                    )
                    for k in range(n)
                )
                for j in range(n)
            ]
            for i in range(n)
        ]
        candidate = HomAlgebra(n, product, Matrix.identity(n))
        if _is_associative(candidate):
            return AssociativeTypeResult(AssocType.YES, candidate, "solved point")
    return AssociativeTypeResult(
        AssocType.INCONCLUSIVE, None, "no rational point extracted from the basis"
    )
