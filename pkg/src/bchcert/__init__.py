"""Weight certificates and exact minimum distances for narrow-sense BCH codes.

The package builds cyclic BCH codes over small prime-power alphabets,
certifies codewords of weight equal to the designed distance through a
subfield membership criterion on the locator set, cross-checks the
certified distances with brute-force oracles, and classifies the
resulting codes against the sphere-packing bound.
"""

from .bch import (
    BchCode,
    Codeword,
    bch_bound,
    bose_distance,
    build_code,
    cyclotomic_coset,
    dimension_closed_form,
    is_codeword,
    minimal_polynomial,
    ord_mod,
)
from .bounds import OptimalityReport, classify, max_distance_allowed, sphere_packing_holds
from .errors import (
    BadParameters,
    BchCertError,
    BudgetExceeded,
    CertificateError,
    CriterionFailed,
    DegenerateCode,
    DeltaOutOfRange,
    FieldTooLarge,
    InvalidDelta,
    NormCheckFailed,
    NotADivisor,
    NotCoprime,
    NotNarrowSense,
    NotPrimePower,
    OutOfLemmaRange,
    RowMismatch,
    TooLarge,
)
from .gf import Field, FieldElement, build_field
from .locator import (
    Certificate,
    certify,
    construct_nonprimitive_family,
    construct_qt_family,
    construct_small_delta,
    lift_certificate,
    load_certificate,
    s_values,
    search_certificate,
)
from .oracle import LowerBoundOnly, OracleResult, min_distance_full, min_distance_support
from .poly import Polynomial
from .tables import TableRow, generate_all, generate_family

__version__ = "0.1.0"

__all__ = [
    "BadParameters", "BchCertError", "BchCode", "BudgetExceeded",
    "Certificate", "CertificateError", "Codeword", "CriterionFailed",
    "DegenerateCode", "DeltaOutOfRange", "Field", "FieldElement",
    "FieldTooLarge", "InvalidDelta", "LowerBoundOnly", "NormCheckFailed",
    "NotADivisor", "NotCoprime", "NotNarrowSense", "NotPrimePower",
    "OptimalityReport", "OracleResult", "OutOfLemmaRange", "Polynomial",
    "RowMismatch", "TableRow", "TooLarge", "bch_bound", "bose_distance",
    "build_code", "build_field", "certify", "classify",
    "construct_nonprimitive_family", "construct_qt_family",
    "construct_small_delta", "cyclotomic_coset", "dimension_closed_form",
    "generate_all", "generate_family", "is_codeword", "lift_certificate",
    "load_certificate", "max_distance_allowed", "min_distance_full",
    "min_distance_support", "minimal_polynomial", "ord_mod", "s_values",
    "search_certificate", "sphere_packing_holds",
]
