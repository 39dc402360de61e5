"""Exact arithmetic toolkit for Jordan algebras that contain H2(F).

Certify Jordan algebras given by structure constants, split them along an
H2(F) frame into a graded algebra S = Z + N with an odd bracket, rebuild
them as H2(F) (x) S0 + Fk (x) S1, and build the converse examples.
"""

from .algebra import (Algebra, Element, NoUnit, Report, find_unit, is_associative,
                      is_commutative, is_jordan, pchelintsev_k, plus_algebra, span_closure)
from .constructions import (BilinearFormData, InvolutiveAlgebra, build_bilinear_form_algebra,
                            build_h2_matrix, cohn_envelope, h2f, h4f, involutive, m2_plus,
                            spin_factor, split_involution, verify_lemma4)
from .fields import FieldSpec, GaussianRational, NoSqrtMinusOne, Residue
from .graded import (GradedBracketAlgebra, Suite, build_tensor_algebra, m2, rescale_bracket,
                     verify_bracket_identities)
from .h2 import (H2Frame, LinearMap, compute_N, compute_Z, decompose, extract_brackets,
                 reconstruct, roundtrip, verify_h2_frame, verify_isomorphism)
from .identities import sample_identities
from .linalg import Subspace, kernel
from .peirce import PeirceDecomposition, peirce_decompose

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "BilinearFormData",
    "Element",
    "FieldSpec",
    "GaussianRational",
    "GradedBracketAlgebra",
    "H2Frame",
    "InvolutiveAlgebra",
    "LinearMap",
    "NoSqrtMinusOne",
    "NoUnit",
    "PeirceDecomposition",
    "Report",
    "Residue",
    "Subspace",
    "Suite",
    "build_bilinear_form_algebra",
    "build_h2_matrix",
    "build_tensor_algebra",
    "cohn_envelope",
    "compute_N",
    "compute_Z",
    "decompose",
    "extract_brackets",
    "find_unit",
    "h2f",
    "h4f",
    "involutive",
    "is_associative",
    "is_commutative",
    "is_jordan",
    "kernel",
    "m2",
    "m2_plus",
    "pchelintsev_k",
    "peirce_decompose",
    "plus_algebra",
    "reconstruct",
    "rescale_bracket",
    "roundtrip",
    "sample_identities",
    "span_closure",
    "spin_factor",
    "split_involution",
    "verify_bracket_identities",
    "verify_h2_frame",
    "verify_isomorphism",
    "verify_lemma4",
]
