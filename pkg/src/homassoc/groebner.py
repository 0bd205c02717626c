"""Variety ideals of Hom-associative structures and Groebner-backed
certificates.

Variable naming follows the report syntax: ``cKIJ`` is the coefficient
of ``e_K`` in ``e_I * e_J`` and ``aIJ`` is the twist entry (row I,
column J), all indices 1-based.  Default order: degrevlex with the
product constants below the twist constants.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

from .core import HomAlgebra
from .poly import (
    BudgetExceeded,
    GroebnerBasis,
    MonomialOrder,
    MultiPoly,
    buchberger,
    normal_form,
)


def structure_variable_names(n: int) -> list[str]:
    """c111, c211, ..., then a11, a21, ... in increasing precedence."""
    names = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                names.append(f"c{k}{i}{j}")
    for j in range(1, n + 1):
        for i in range(1, n + 1):
            names.append(f"a{i}{j}")
    return names


def default_order(n: int) -> MonomialOrder:
    return MonomialOrder.degrevlex(structure_variable_names(n))


def _vars(n: int):
    names = structure_variable_names(n)

    def c(k: int, i: int, j: int) -> MultiPoly:
        return MultiPoly.variable(names, f"c{k}{i}{j}")

    def a(i: int, j: int) -> MultiPoly:
        return MultiPoly.variable(names, f"a{i}{j}")

    return names, c, a


def homass_ideal(
    n: int,
    hom_assoc: bool = True,
    multiplicativity: bool = False,
    unitality: bool = False,
) -> list[MultiPoly]:
    """Generators of the defining ideal of the structure-constant variety.

    The twisted associativity family comes from
    mu(alpha(e_i), mu(e_j, e_k)) = mu(mu(e_i, e_j), alpha(e_k)), the
    multiplicativity family from alpha . mu = mu . (alpha x alpha), and
    the unitality relations pin the products with e_1 to the twist
    columns.
    """
    if n < 1:
        raise ValueError("dimension must be at least 1")
    names, c, a = _vars(n)
    zero = MultiPoly.zero(names)
    gens: list[MultiPoly] = []
    rng = range(1, n + 1)
    if hom_assoc:
        for i in rng:
            for j in rng:
                for k in rng:
                    for s in rng:
                        acc = zero
                        for l in rng:
                            for m in rng:
                                acc = acc + a(l, i) * c(m, j, k) * c(s, l, m)
                                acc = acc - a(m, k) * c(l, i, j) * c(s, l, m)
                        gens.append(acc)
    if multiplicativity:
        for i in rng:
            for j in rng:
                for s in rng:
                    acc = zero
                    for p in rng:
                        acc = acc + a(s, p) * c(p, i, j)
                    for p in rng:
                        for q in rng:
                            acc = acc - a(p, i) * a(q, j) * c(s, p, q)
                    gens.append(acc)
    if unitality:
        for i in rng:
            for k in rng:
                gens.append(c(k, i, 1) - a(k, i))
                gens.append(c(k, 1, i) - a(k, i))
    return gens


def evaluate_on_algebra(p: MultiPoly, algebra: HomAlgebra) -> Fraction:
    """Evaluate a structure-variable polynomial at an algebra's constants.

    Only rational structure constants are supported (the variety
    generators have rational coefficients; Gaussian points would need a
    coefficient extension which this engine deliberately avoids).
    """
    n = algebra.dim
    names = structure_variable_names(n)
    if tuple(p.names) != tuple(names):
        raise ValueError("polynomial is not over the structure variables")
    values = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                x = algebra.product[i - 1][j - 1][k - 1]
                if not x.is_rational():
                    raise ValueError("algebra has non-rational structure constants")
                values.append(x.re)
    for j in range(1, n + 1):
        for i in range(1, n + 1):
            x = algebra.twist[i - 1, j - 1]
            if not x.is_rational():
                raise ValueError("algebra has non-rational twist entries")
            values.append(x.re)
    return p.evaluate(values)


def ideal_membership(p: MultiPoly, basis: GroebnerBasis) -> bool:
    return basis.contains(p)


class NonIso(Enum):
    PROVEN_NON_ISOMORPHIC = "proven_non_isomorphic"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class NonIsoResult:
    kind: NonIso
    stats: dict[str, int]
    detail: str = ""

    @property
    def proven(self) -> bool:
        return self.kind is NonIso.PROVEN_NON_ISOMORPHIC


def _morphism_system_names(n: int) -> list[str]:
    names = [f"x{p}{q}" for p in range(1, n + 1) for q in range(1, n + 1)]
    names.append("t")
    return names


def _det_poly(names: list[str], n: int) -> MultiPoly:
    from itertools import permutations

    det = MultiPoly.zero(names)
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = MultiPoly.constant(names, sign)
        for i in range(n):
            term = term * MultiPoly.variable(names, f"x{i + 1}{perm[i] + 1}")
        det = det + term
    return det


def noniso_certificate(
    a1: HomAlgebra, a2: HomAlgebra, budget: int = 1_000_000
) -> NonIsoResult:
    """Prove two algebras non-isomorphic over every field extension.

    The isomorphism conditions on an unknown invertible map phi form a
    polynomial system (with det(phi) t - 1 forcing invertibility); a
    Groebner basis equal to {1} means the system has no solution over
    any extension of the rationals.
    """
    if a1.dim != a2.dim:
        raise ValueError("algebras of different dimensions are trivially non-isomorphic")
    n = a1.dim
    names = _morphism_system_names(n)

    def x(p: int, q: int) -> MultiPoly:
        return MultiPoly.variable(names, f"x{p}{q}")

    def rational(c) -> Fraction:
        if not c.is_rational():
            raise ValueError("noniso certificates need rational structure constants")
        return c.re

    gens: list[MultiPoly] = []
    # product condition: phi(mu1(e_i, e_j)) = mu2(phi e_i, phi e_j)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for q in range(1, n + 1):
                acc = MultiPoly.zero(names)
                for k in range(1, n + 1):
                    c1 = rational(a1.product[i - 1][j - 1][k - 1])
                    if c1:
                        acc = acc + x(q, k) * c1
                for p in range(1, n + 1):
                    for k in range(1, n + 1):
                        d = rational(a2.product[p - 1][k - 1][q - 1])
                        if d:
                            acc = acc - x(p, i) * x(k, j) * d
                if not acc.is_zero():
                    gens.append(acc)
    # twist intertwining: phi . alpha1 = alpha2 . phi
    for i in range(1, n + 1):
        for q in range(1, n + 1):
            acc = MultiPoly.zero(names)
            for j in range(1, n + 1):
                c1 = rational(a1.twist[j - 1, i - 1])
                if c1:
                    acc = acc + x(q, j) * c1
            for p in range(1, n + 1):
                c2 = rational(a2.twist[q - 1, p - 1])
                if c2:
                    acc = acc - x(p, i) * c2
            if not acc.is_zero():
                gens.append(acc)
    det = _det_poly(names, n)
    one = MultiPoly.constant(names, 1)
    gens.append(det * MultiPoly.variable(names, "t") - one)
    order = MonomialOrder.degrevlex(names)
    try:
        basis = buchberger(gens, order, budget=budget)
    except BudgetExceeded as exc:
        return NonIsoResult(NonIso.INCONCLUSIVE, exc.stats, "budget exceeded")
    if basis.is_unit_ideal():
        return NonIsoResult(NonIso.PROVEN_NON_ISOMORPHIC, basis.stats)
    return NonIsoResult(
        NonIso.INCONCLUSIVE, basis.stats, "system is solvable or undecided"
    )
