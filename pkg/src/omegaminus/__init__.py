"""Construction and exact verification of factorizations of minus-type
orthogonal groups over small finite fields."""

from .algebra import FieldSpec, SemilinearElement, gf, quadratic_extension
from .forms import HermitianSpace, QuadraticSpace, hermitian_standard, minus_standard_space
from .orders import GroupOrderSpec, identity_suite, order
from .permgrp import GroupHandle, StabChain, build_chain
from .verify import VerificationReport, build_instance, emit_report, verify_row

__version__ = "0.1.0"

__all__ = [
    "FieldSpec", "GroupHandle", "GroupOrderSpec", "HermitianSpace", "QuadraticSpace",
    "SemilinearElement", "StabChain", "VerificationReport", "build_chain", "build_instance",
    "emit_report", "gf", "hermitian_standard", "identity_suite", "minus_standard_space",
    "order", "quadratic_extension", "verify_row",
]
