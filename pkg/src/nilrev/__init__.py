"""Exact reversers for nilpotent and unipotent upper triangular matrices.

Works over the rationals, Gaussian rationals and rational quaternions with
exact arithmetic throughout, so every certificate is checked by equality.
"""

from .certificate import GroupTag, Level, Method, ReversalCertificate, check_certificate
from .expmap import exp, log
from .jordan import (
    jordan_structure,
    no_unipotent_reverser_certificate,
    paired_block_witness,
)
from .nilmat import Matrix, conjugate, invert_signed_unipotent, is_involution, parse_matrix
from .oracle import group_reverser_feasible, nonreal_search, reverser_feasible
from .reverser import (
    closed_form_n2,
    closed_form_n3,
    diagonal_parity_reverser,
    reverse_group_star,
    reverse_star,
)
from .scalar import GaussianRational, RationalQuaternion, ScalarRing

__version__ = "0.1.0"

__all__ = [
    "GaussianRational",
    "GroupTag",
    "Level",
    "Matrix",
    "Method",
    "RationalQuaternion",
    "ReversalCertificate",
    "ScalarRing",
    "check_certificate",
    "closed_form_n2",
    "closed_form_n3",
    "conjugate",
    "diagonal_parity_reverser",
    "exp",
    "group_reverser_feasible",
    "invert_signed_unipotent",
    "is_involution",
    "jordan_structure",
    "log",
    "no_unipotent_reverser_certificate",
    "nonreal_search",
    "paired_block_witness",
    "parse_matrix",
    "reverse_group_star",
    "reverse_star",
    "reverser_feasible",
]
