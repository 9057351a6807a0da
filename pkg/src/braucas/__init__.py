"""Exact Casimir elements for orthogonal and symplectic Lie algebras.

Builds Brauer-algebra projectors, applies them on tensor legs to form
trace-form central elements of U(o_N) and U(sp_2n), computes their
Harish-Chandra images by exact PBW rewriting, and verifies the images
against factorial complete/elementary symmetric polynomials with
zero-tolerance rational arithmetic.
"""

from .scalars import Q, RatFunc, UPoly, MPoly, PoleError, OMEGA
from .brauer import (Diagram, BrauerElement, all_diagrams, jucys_murphy,
                     symmetrizer, antisymmetrizer)
from .tensor import ActionConfig, TensorOp, rep_diagram, rep_element
from .liealg import (LieBasis, build_basis, is_central, NonCentralError,
                     hc_image, eval_in_defining_rep, scalar_matrix_value,
                     check_defining_relation)
from .symfun import (ShiftConfig, factorial_e, factorial_h, a_lambda,
                     vanishing_check, target_chi)
from .casimir import (CasimirSpec, theorem_spec, build_casimir,
                      build_casimir_upoly, hc_image_upoly,
                      upoly_coefficients, VerificationReport,
                      verify_theorem, verify_corollary,
                      verify_trace_permutation, trace_side_agreement)

__all__ = [
    "Q", "RatFunc", "UPoly", "MPoly", "PoleError", "OMEGA",
    "Diagram", "BrauerElement", "all_diagrams", "jucys_murphy",
    "symmetrizer", "antisymmetrizer",
    "ActionConfig", "TensorOp", "rep_diagram", "rep_element",
    "LieBasis", "build_basis", "is_central", "NonCentralError",
    "hc_image", "eval_in_defining_rep", "scalar_matrix_value",
    "check_defining_relation",
    "ShiftConfig", "factorial_e", "factorial_h", "a_lambda",
    "vanishing_check", "target_chi",
    "CasimirSpec", "theorem_spec", "build_casimir", "build_casimir_upoly",
    "hc_image_upoly", "upoly_coefficients", "VerificationReport",
    "verify_theorem", "verify_corollary", "verify_trace_permutation",
    "trace_side_agreement",
]

__version__ = "1.0.0"
