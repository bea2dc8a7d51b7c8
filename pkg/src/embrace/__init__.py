"""Exact Hochschild, brace and first-order deformation computations on finite graded quivers."""

from .linalg import FieldSpec, Mod, SparseMatrix, kernel_basis, quotient_dim, rank, rref, solve
from .graded import Arrow, GradedQuiver, canonical_iso_sign, koszul_swap_sign, shift_quiver, tensor_apply
from .cochains import (
    Cochain, SuspendedCochain, a_brace, brace, dot, hochschild_differential, is_brace_morphism,
    lie_bracket, project_zero, suspend, unsuspend,
)
from .structures import (
    AInfStructure, StructuredCategory, check_structure, infinity_part, restrict, transport,
)
from .twisted import (
    ComplexWindow, FreeObject, TwistedObject, TwistedQuiver, build_com, build_pcom, is_iln,
    lembr_sign, phi_reach,
)
from .deformation import (
    DeformationLab, FirstOrderDeformation, deform_category, find_gauge, gauge_apply,
    hochschild_cohomology, normalize_zero_part, verify_precomplexes,
)
from .documents import InputError, Problem

__version__ = "0.1.0"

__all__ = [
    "FieldSpec", "Mod", "SparseMatrix", "kernel_basis", "quotient_dim", "rank", "rref", "solve",
    "Arrow", "GradedQuiver", "canonical_iso_sign", "koszul_swap_sign", "shift_quiver", "tensor_apply",
    "Cochain", "SuspendedCochain", "a_brace", "brace", "dot", "hochschild_differential",
    "is_brace_morphism", "lie_bracket", "project_zero", "suspend", "unsuspend",
    "AInfStructure", "StructuredCategory", "check_structure", "infinity_part", "restrict", "transport",
    "ComplexWindow", "FreeObject", "TwistedObject", "TwistedQuiver", "build_com", "build_pcom",
    "is_iln", "lembr_sign", "phi_reach",
    "DeformationLab", "FirstOrderDeformation", "deform_category", "find_gauge", "gauge_apply",
    "hochschild_cohomology", "normalize_zero_part", "verify_precomplexes",
    "InputError", "Problem",
]
