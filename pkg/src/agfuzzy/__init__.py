"""Finite AG-groupoids, their chain-valued fuzzy subsets, and statement checks."""

__version__ = "0.1.0"

from .algebra import CayleyTable, parse_table, parse_tables, format_table  # noqa: E402
from .fuzzy import FuzzySubset, GradeChain, parse_fuzzy, format_fuzzy, product  # noqa: E402
from .enumeration import EnumSpec, EnumResult, enumerate_ag  # noqa: E402
from .kernels import BACKEND  # noqa: E402

__all__ = [
    "__version__", "BACKEND", "CayleyTable", "parse_table", "parse_tables", "format_table",
    "FuzzySubset", "GradeChain", "parse_fuzzy", "format_fuzzy", "product",
    "EnumSpec", "EnumResult", "enumerate_ag",
]
