"""catkit: exact catalecticant matrices, apolarity, and power-sum decompositions.

A small exact-arithmetic library for deciding, at desk scale, when a
homogeneous form is a sum of few powers of linear forms: catalecticant
matrices and their ranks, apolar ideals and Hilbert sequences, symbolic
minor generators of the rank loci, tangent-space dimensions, and exact
Waring / generalized additive decompositions of binary forms.
"""

from .apolarity import (
    GradedSubspace,
    HilbertSequence,
    apolar_slice,
    hilbert_sequence,
    product_slice,
    tangent_dim_gor,
    tangent_dim_vr,
)
from .binary import (
    Decomposition,
    apolar_generator,
    min_apolar_degree,
    squarefree_classify,
    verify_decomposition,
    waring_decompose,
)
from .catalecticant import (
    CatalecticantMatrix,
    GeneratorSet,
    GenericCatalecticant,
    MinorPolynomial,
    build_cat,
    build_generic_cat,
    differentiate_minor,
    emit_minors,
    evaluate_minor,
    jacobian_rank,
)
from .formio import export_generators, read_form, read_generators, write_form
from .forms import (
    Form,
    RPoly,
    contract,
    convert_basis,
    dim_forms,
    embed,
    enumerate_monomials,
    linear_power,
    multiply_r,
    substitute,
)
from .linalg import Matrix, determinant, inverse, kernel_basis, rank
from .sampling import SampleSpec, SplitMix64, random_unimodular, sample, splitmix64
from .suites import SuiteReport, run_suite
from .varieties import (
    Ps2Class,
    SingularReport,
    classify_ps2,
    decompose_form,
    dim_gor_leq,
    dim_ps2,
    dim_vr,
    en_term_rank,
    essential_vars,
    hilbert_cap,
    member_gor_leq,
    member_ps2,
    member_vr,
    singular_test,
    t2s_sequence,
)

__version__ = "0.1.0"

__all__ = [
    "CatalecticantMatrix",
    "Decomposition",
    "Form",
    "GeneratorSet",
    "GenericCatalecticant",
    "GradedSubspace",
    "HilbertSequence",
    "Matrix",
    "MinorPolynomial",
    "Ps2Class",
    "RPoly",
    "SampleSpec",
    "SingularReport",
    "SplitMix64",
    "SuiteReport",
    "apolar_generator",
    "apolar_slice",
    "build_cat",
    "build_generic_cat",
    "classify_ps2",
    "contract",
    "convert_basis",
    "decompose_form",
    "determinant",
    "differentiate_minor",
    "dim_forms",
    "dim_gor_leq",
    "dim_ps2",
    "dim_vr",
    "embed",
    "emit_minors",
    "en_term_rank",
    "enumerate_monomials",
    "essential_vars",
    "evaluate_minor",
    "export_generators",
    "hilbert_cap",
    "hilbert_sequence",
    "inverse",
    "jacobian_rank",
    "kernel_basis",
    "linear_power",
    "member_gor_leq",
    "member_ps2",
    "member_vr",
    "min_apolar_degree",
    "multiply_r",
    "product_slice",
    "random_unimodular",
    "rank",
    "read_form",
    "read_generators",
    "run_suite",
    "sample",
    "singular_test",
    "splitmix64",
    "squarefree_classify",
    "substitute",
    "t2s_sequence",
    "tangent_dim_gor",
    "tangent_dim_vr",
    "verify_decomposition",
    "waring_decompose",
    "write_form",
]
