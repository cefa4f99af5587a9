"""Exact-arithmetic invariants of bound-quiver representations.

The public surface re-exports the main types and operations; see the
module docstrings for the conventions (path order, cocycle shapes, form
signs).
"""

from .errors import (DecompositionMismatch, HomNotZero, InequalityViolated,
                     InvalidLabel, MixedEndpoints, NegativeExt2,
                     NonComposable, NotACocycle, NotAVarietyPoint, ParseError,
                     QuivrepError, ShapeMismatch, WrongDimension)
from .linalg import (MatrixQ, kernel_basis, kron, random_invertible, random_matrix,
                     rank, seeded_rng)
from .quiver import (Arrow, BoundQuiver, DimVector, Path, Quiver, Relation,
                     SupportInfo, compose_paths, euler_form, expected_dim,
                     full_subquiver, is_triangular, minimal_convex,
                     relation_endpoints, support, tits_form)
from .rep import (CocycleElement, Representation, conjugate, direct_sum,
                  make_rep, middle_term, simple_rep, twisted_evaluate,
                  zero_rep)
from .homology import (CocycleBasis, ExtReport, HomBasis, coboundary_space,
                       cocycle_space, end_dim, ext1_dim, ext2_dim_via_euler,
                       ext_report, hom_basis, hom_dim, iso_probable,
                       orbit_dim)
from .geometry import (RegularityCertificate, StratumReport,
                       bisection_classify, classify_dimvector,
                       constrained_cocycles, direct_sum_stratum_dim,
                       ext_stratum_tangent_bound, regularity_certificate)
from .family import (Family, FamilyParams, FamilyReport, build_family,
                     canonical_dimvecs, verify_family)
from .textio import (parse_dimvec, parse_quiver, parse_rep, serialize_quiver,
                     serialize_rep)

__version__ = "0.1.0"
