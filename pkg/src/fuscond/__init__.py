"""Fusion rings, modular data, and condensable algebras as finite exact
data, plus the checks built on them: Wedderburn splitting of the condensed
ring, the multiplicity-space matching, and the subring correspondence.
"""
from .condense import (Ambient, CondensableAlgebra, CondensationBundle,
                       SchurWeylReport, check_bundle, codegree_check, e_sub,
                       indicator, schur_weyl)
from .cyclotomic import Cyc, as_mpc, exact_scalar
from .errors import (CapabilityError, NotSemisimpleError,
                     NumericalDegeneracyError, SchemaError,
                     TheoremViolationError, ValidationReport)
from .families import FAMILIES, build
from .galois import (GaloisReport, group_quotient, hasse_dot,
                     invariant_subalgebra, lattice, markdown_table,
                     verify_correspondence)
from .modular import ModularData, deligne, verlinde
from .modular import dims as modular_dims
from .modular import validate as validate_modular
from .ring import (SUBRING_RANK_CAP, BasedRing, DimVector, closure,
                   element_product, enumerate_subrings, fp_dims, group_ring,
                   product_ring)
from .ring import validate as validate_ring
from .serialize import dumps, parse_any, read_path, write_path
from .wedderburn import (SPLIT_SEED, AssocAlgebra, block_profiles,
                         central_idempotents, normalized_block_trace)

__all__ = [
    "Ambient", "AssocAlgebra", "BasedRing", "CapabilityError",
    "CondensableAlgebra", "CondensationBundle", "Cyc", "DimVector",
    "FAMILIES", "GaloisReport", "ModularData", "NotSemisimpleError",
    "NumericalDegeneracyError", "SPLIT_SEED", "SUBRING_RANK_CAP",
    "SchemaError", "SchurWeylReport", "TheoremViolationError",
    "ValidationReport", "as_mpc", "block_profiles", "build", "central_idempotents",
    "check_bundle", "closure", "codegree_check", "deligne", "dumps", "e_sub",
    "element_product", "enumerate_subrings", "exact_scalar", "fp_dims",
    "group_quotient", "group_ring", "hasse_dot", "indicator",
    "invariant_subalgebra", "lattice", "markdown_table", "modular_dims",
    "normalized_block_trace", "parse_any", "product_ring", "read_path",
    "schur_weyl", "validate_modular", "validate_ring", "verify_correspondence",
    "verlinde", "write_path",
]
