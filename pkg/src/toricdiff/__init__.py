"""Exact de Rham data of affine toric charts over QQ and GF(p).

The package is organized bottom up: :mod:`toricdiff.linalg` holds exact
integer and field linear algebra, :mod:`toricdiff.cones` the polyhedral
geometry, :mod:`toricdiff.forms` the graded subspace model of the forms,
:mod:`toricdiff.complexes` the per-degree complexes with their cohomology
and the whole-box oracle, and :mod:`toricdiff.cartier` the characteristic-p
verification suite.  :mod:`toricdiff.cli` exposes all of it on the command
line.
"""

from .cartier import (
    CartierReport,
    CheckResult,
    LevelSummary,
    PhiMap,
    check_chain_map,
    check_split,
    inverse_cartier_generator_check,
    phi,
    verify_isomorphism,
)
from .cones import Cone, Facet, NotInConeError, NotPointedError
from .complexes import (
    CohomologyTable,
    DegreeComplex,
    NoVertexError,
    PoincareReport,
    cohomology,
    cohomology_table,
    degree_complex,
    oracle_full_complex,
    poincare_check,
)
from .forms import (
    FormExpression,
    FormTerm,
    GradedPiece,
    degree_subspace,
    facet_subspace,
    graded_piece,
    integer_lifts,
    to_form,
    wedge_subsets,
)
from .linalg import (
    GF,
    QQ,
    SaturatedLattice,
    Subspace,
    field_of_characteristic,
    hnf,
    intersect,
    is_prime,
    kernel,
    left_kernel,
    rank,
    reduce_mod_p,
    saturate,
    subspace,
    sum_spaces,
)

__version__ = "0.1.0"

__all__ = [
    "Cone",
    "Facet",
    "NotInConeError",
    "NotPointedError",
    "NoVertexError",
    "GF",
    "QQ",
    "SaturatedLattice",
    "Subspace",
    "field_of_characteristic",
    "hnf",
    "intersect",
    "is_prime",
    "kernel",
    "left_kernel",
    "rank",
    "reduce_mod_p",
    "saturate",
    "subspace",
    "sum_spaces",
    "FormExpression",
    "FormTerm",
    "GradedPiece",
    "degree_subspace",
    "facet_subspace",
    "graded_piece",
    "integer_lifts",
    "to_form",
    "wedge_subsets",
    "CohomologyTable",
    "DegreeComplex",
    "PoincareReport",
    "cohomology",
    "cohomology_table",
    "degree_complex",
    "oracle_full_complex",
    "poincare_check",
    "CartierReport",
    "CheckResult",
    "LevelSummary",
    "PhiMap",
    "check_chain_map",
    "check_split",
    "inverse_cartier_generator_check",
    "phi",
    "verify_isomorphism",
]
