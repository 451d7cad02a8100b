"""Exact base-60 arithmetic and large reciprocal tables built by doubling."""
from .regular import (
    NotRegular,
    ReciprocalPair,
    RegularExponents,
    factor_regular,
    is_regular,
    reciprocal,
    verify_pair,
)
from .reconstruct import ReconstructionReport, TableEntry, diff, golden_excerpts, reconstruct
from .sexcore import (
    ParseError,
    SexagesimalError,
    SexNumber,
    compare,
    divide_small,
    format_number,
    mul,
    normalize_mantissa,
    parse,
    scale_small,
    shift_point,
)
from .tables import FamilySpec, FamilyTable, generate_family, standard_families, table_one

__all__ = [
    "FamilySpec", "FamilyTable", "NotRegular", "ParseError", "ReciprocalPair",
    "ReconstructionReport", "RegularExponents", "SexNumber", "SexagesimalError",
    "TableEntry", "compare", "diff", "divide_small", "factor_regular", "format_number",
    "generate_family", "golden_excerpts", "is_regular", "mul", "normalize_mantissa",
    "parse", "reciprocal", "reconstruct", "scale_small", "shift_point",
    "standard_families", "table_one", "verify_pair",
]
