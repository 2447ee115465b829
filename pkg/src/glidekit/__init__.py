"""Exact computations around monomial quasisymmetric functions and glides."""

__version__ = "0.1.0"

from .compositions import (
    positive_part,
    run_decode,
    run_encode,
    semistandardize,
    sorting_data,
    standardize,
)
from .glides import (
    check_binomial_identity,
    enumerate_C,
    enumerate_C_tilde,
    glide_polynomial,
    monomial_glide_weak,
    mu_closed,
    mu_prime,
)
from .ktheory import (
    KRingElement,
    chern_substitute,
    is_quasisymmetric,
    knutson_class,
    line_bundle_to_y,
    projective_structure_class,
    y_to_line_bundle,
    z_locus,
)
from .poly import SparsePoly
from .poset import BOTTOM, GlidePoset, atoms, build_poset, join
from .qsym import (
    GradedRingData,
    QSymElement,
    cpinf_ring,
    glide_expand,
    glide_structure_constants,
    m_multiply,
    m_to_polynomial,
    overlapping_shuffle,
    polynomial_to_m,
    qsym_r_product,
)
from .schur import (
    SkewShape,
    Tableau,
    buk_structure_constant,
    grassmannian_to_partition,
    is_ballot,
    lr_coefficient,
    partition_to_grassmannian,
    schur_polynomial,
    schur_ring,
    ssyt_enumerate,
)

__all__ = [
    "BOTTOM",
    "GlidePoset",
    "GradedRingData",
    "KRingElement",
    "QSymElement",
    "SkewShape",
    "SparsePoly",
    "Tableau",
    "atoms",
    "build_poset",
    "buk_structure_constant",
    "check_binomial_identity",
    "chern_substitute",
    "cpinf_ring",
    "enumerate_C",
    "enumerate_C_tilde",
    "glide_expand",
    "glide_polynomial",
    "glide_structure_constants",
    "grassmannian_to_partition",
    "is_ballot",
    "is_quasisymmetric",
    "join",
    "knutson_class",
    "line_bundle_to_y",
    "lr_coefficient",
    "m_multiply",
    "m_to_polynomial",
    "monomial_glide_weak",
    "mu_closed",
    "mu_prime",
    "overlapping_shuffle",
    "partition_to_grassmannian",
    "polynomial_to_m",
    "positive_part",
    "projective_structure_class",
    "qsym_r_product",
    "run_decode",
    "run_encode",
    "schur_polynomial",
    "schur_ring",
    "semistandardize",
    "sorting_data",
    "ssyt_enumerate",
    "standardize",
    "y_to_line_bundle",
    "z_locus",
]
