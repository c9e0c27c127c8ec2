"""Exact Sullivan-model computations of sphere-brane operations on mapping spaces."""

__version__ = "0.1.0"

from .algebra import (
    AlgebraError,
    AlgebraMorphism,
    Derivation,
    Element,
    FreeGCA,
    Generator,
    ModuleMorphism,
    basis_of_degree,
    format_element,
    parse_element,
)
from .brane import (
    BraneError,
    BraneOperation,
    PreconditionError,
    brane_coproduct_dual,
    brane_operation,
    brane_product_dual,
    build_section_phi,
    build_section_psi,
    build_shriek_constant,
    build_shriek_diagonal,
    compose_operations,
    gorenstein_shifts,
    verify_invariants,
)
from .cohomology import cocycle_basis, cohomology_dims, is_coboundary, lift_through_surjection
from .mapping_spaces import (
    build_collapse_model,
    build_disk_model,
    build_path_model,
    build_sphere_model,
    build_torus_model,
)
from .parsing import ParseError, parse_model
from .sullivan import SullivanModel, check_pure, make_model

__all__ = [
    "AlgebraError", "AlgebraMorphism", "Derivation", "Element", "FreeGCA", "Generator",
    "ModuleMorphism", "basis_of_degree", "format_element", "parse_element",
    "BraneError", "BraneOperation", "PreconditionError", "brane_coproduct_dual", "brane_operation",
    "brane_product_dual", "build_section_phi", "build_section_psi", "build_shriek_constant", "build_shriek_diagonal", "compose_operations",
    "gorenstein_shifts", "verify_invariants",
    "cocycle_basis", "cohomology_dims", "is_coboundary", "lift_through_surjection",
    "build_collapse_model", "build_disk_model", "build_path_model", "build_sphere_model",
    "build_torus_model", "ParseError", "parse_model", "SullivanModel", "check_pure", "make_model",
]
