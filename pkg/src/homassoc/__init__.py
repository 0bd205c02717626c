"""Exact-arithmetic toolkit for multiplicative Hom-associative algebras.

Provides structure-constant models of finite-dimensional algebras with a
twist map over Q(i), together with: axiom verification, twisting and
transport constructions, ideals and simplicity certificates, twisted
derivation spaces, low-degree twisted Hochschild cohomology, truncated
formal deformations, Groebner bases of the defining variety ideals, a
catalog of reference algebras and a small text format with a CLI.
"""

from .scalars import GaussianRational, Rational, gr, I, ONE, ZERO
from .linalg import (
    Matrix,
    ShapeError,
    Subspace,
    charpoly,
    nullspace,
    rref,
    solve,
    subspace_intersect,
    subspace_sum,
)
from .core import (
    HomAlgebra,
    VerificationReport,
    Witness,
    apply_twist,
    check_hom_associative,
    check_morphism,
    check_multiplicative,
    check_unital,
    hom_associator,
    mul,
)
from .constructions import (
    Fingerprint,
    PreconditionError,
    direct_sum,
    fingerprint,
    gl_action,
    graph_is_subalgebra,
    iso_verify,
    stabilizer_member,
    transport,
    untwist,
    yau_twist,
)
from .structure import (
    AssocType,
    SimplicityVerdict,
    Verdict,
    associative_type_check,
    center,
    ideal_closure,
    is_ideal,
    kernel_alpha_ideal,
    multiplication_algebra_dim,
    simplicity_certificate,
)
from .derivations import (
    DerivationSpace,
    alpha_fixed_space,
    commutator,
    derivation_space,
    inner_derivation,
    inner_derivation_space,
)
from .cohomology import (
    Cochain,
    CohomologyTable,
    coboundary_matrix,
    coboundary_of,
    cochain_space,
    cocycle_check,
    cohomology_table,
    lift_assoc_cocycle,
)
from .deformation import (
    DeformationJet,
    Obstruction,
    ObstructionResult,
    Rigidity,
    check_deformation,
    deformation_residual,
    equivalence_apply,
    first_obstruction,
    rigidity_probe,
)
from .poly import (
    BudgetExceeded,
    GroebnerBasis,
    MonomialOrder,
    MultiPoly,
    buchberger,
    normal_form,
    parse_poly,
)
from .groebner import (
    NonIso,
    NonIsoResult,
    default_order,
    homass_ideal,
    ideal_membership,
    noniso_certificate,
    structure_variable_names,
)
from .catalog import (
    catalog_get,
    catalog_list,
    catalog_verify_all,
    cohomology_discrepancies,
    matrix_algebra_m2,
    twisting_morphism,
)

__version__ = "0.1.0"
