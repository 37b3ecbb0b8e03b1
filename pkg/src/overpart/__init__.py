"""Exact enumeration, q-series and bijection machinery for verifying
overpartition identities of Rogers-Ramanujan-Gordon and Bressoud type."""

from .core import (
    DuplicateOverline,
    FrequencyProfile,
    InvalidParameters,
    NonPositivePart,
    Overpartition,
    frequency_profile,
    make_overpartition,
    v_stat,
)
from .enumeration import (
    CountTable,
    FAMILIES,
    ResidueRules,
    count_condition_side,
    count_residue_side,
    count_restricted,
    count_table,
    overpartitions_of,
    partitions_of,
    residue_rules,
    satisfies,
)
from .bijections import (
    CellRecord,
    CellSpec,
    DomainViolation,
    UnsupportedRange,
    card,
    chi,
    chi_inv,
    iota,
    phi,
    phi_inv,
)
from .series import (
    IllFormedMonomial,
    Monomial,
    NonUnitConstantTerm,
    OrderMismatch,
    QSeries,
    XQSeries,
    bilateral_theta,
    gen_d,
    invert,
    pochhammer,
    residue_product,
    series_j,
    series_w,
    theta_halves,
    triple_product,
)
from .qexpr import EvalError, ParseError, evaluate, evaluate_x, parse, unparse
from .verify import CheckRecord, VerificationReport, run_campaign

__version__ = "0.1.0"

__all__ = [
    "CellRecord", "CellSpec", "CheckRecord", "CountTable", "DomainViolation",
    "DuplicateOverline", "EvalError", "FAMILIES", "FrequencyProfile",
    "IllFormedMonomial", "InvalidParameters", "Monomial", "NonPositivePart",
    "NonUnitConstantTerm", "OrderMismatch", "Overpartition", "ParseError",
    "QSeries", "ResidueRules", "UnsupportedRange", "VerificationReport",
    "XQSeries", "bilateral_theta", "card", "chi", "chi_inv",
    "count_condition_side", "count_residue_side", "count_restricted",
    "count_table", "evaluate", "evaluate_x", "frequency_profile", "gen_d",
    "invert", "iota", "make_overpartition", "overpartitions_of", "parse",
    "partitions_of", "phi", "phi_inv", "pochhammer", "residue_product",
    "residue_rules", "run_campaign", "satisfies", "series_j", "series_w",
    "theta_halves", "triple_product", "unparse", "v_stat",
]
