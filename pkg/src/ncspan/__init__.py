"""Exact classification of noncommutative polynomials by their matrix values."""

from .classifier import (
    ClassReport,
    InconsistencyError,
    classify,
    classify_nostar,
    classify_star_firstkind,
    classify_star_secondkind,
    span_sample,
)
from .freealg import (
    CycWitness,
    Letter,
    NcPolynomial,
    commutator_witness,
    cyc_equiv,
    cyc_normal_form,
    cyclic_reduce_linear,
    extract_components,
    multihomog_components,
    standard_polynomial,
)
from .generic import GenericContext, eval_generic, eval_numeric, is_central, is_identity, trace_zero
from .kernels import BACKEND
from .matrices import (
    CanonicalName,
    Involution,
    Matrix,
    Subspace,
    apply_star,
    canonical_subspace,
    check_lie_closure,
    classify_subspace,
    congruence_closure,
    exact_span,
    lie_ideal_closure,
    skew_ideal_closure,
)
from .parser import format_poly, parse_poly
from .scalars import CPoly, GaussianRational, Var, gauss

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CPoly",
    "CanonicalName",
    "ClassReport",
    "CycWitness",
    "GaussianRational",
    "GenericContext",
    "InconsistencyError",
    "Involution",
    "Letter",
    "Matrix",
    "NcPolynomial",
    "Subspace",
    "Var",
    "apply_star",
    "canonical_subspace",
    "check_lie_closure",
    "classify",
    "classify_nostar",
    "classify_star_firstkind",
    "classify_star_secondkind",
    "classify_subspace",
    "commutator_witness",
    "congruence_closure",
    "cyc_equiv",
    "cyc_normal_form",
    "cyclic_reduce_linear",
    "eval_generic",
    "eval_numeric",
    "exact_span",
    "extract_components",
    "format_poly",
    "gauss",
    "is_central",
    "is_identity",
    "lie_ideal_closure",
    "multihomog_components",
    "parse_poly",
    "skew_ideal_closure",
    "span_sample",
    "standard_polynomial",
    "trace_zero",
]
