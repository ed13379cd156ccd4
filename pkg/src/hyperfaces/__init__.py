"""Genus distributions of two-face hypermaps with face-type [2, n-2].

Exact closed forms, brute-force and character-sum oracles, and checks of the
structural claims (parity, zeros on the imaginary axis, log-concavity).
"""

from .analysis import verify_imaginary_zeros, verify_log_concavity
from .characters import chi_beta_special, chi_two_face, mn_character
from .combinat import Partition, Permutation, class_size, parse_partition, partitions_of
from .exact import BigRational, RationalPolynomial
from .products import CycleHistogram, brute_force_histogram, xi_character, xi_fixed_first
from .twoface import (
    TwoFacePolynomial,
    build_P,
    special_P_1n1,
    special_P_2n2,
    theta_decompose,
    two_face_polynomial,
)

__version__ = "0.1.0"

__all__ = [
    "BigRational",
    "CycleHistogram",
    "Partition",
    "Permutation",
    "RationalPolynomial",
    "TwoFacePolynomial",
    "brute_force_histogram",
    "build_P",
    "chi_beta_special",
    "chi_two_face",
    "class_size",
    "mn_character",
    "parse_partition",
    "partitions_of",
    "special_P_1n1",
    "special_P_2n2",
    "theta_decompose",
    "two_face_polynomial",
    "verify_imaginary_zeros",
    "verify_log_concavity",
    "xi_character",
    "xi_fixed_first",
]
