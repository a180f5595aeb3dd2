"""Exact-arithmetic toolkit for the flickering central factorial triangle
(A395021), its companion array (A394582) and integer-only power sums.

Everything is computed in plain Python integers and Fractions; identities
come with independent computation routes and the `verify` suite cross-checks
them all.
"""

from .exact import CheckResult, InexactDivisionError, exact_div
from .powersum import (
    BenchReport,
    PowerSumResult,
    bench_power_sum,
    expand_power_check,
    fallshift,
    integral_basis,
    lemma_difference_check,
    power_sum,
    power_sum_naive,
)
from .series import (
    PolyZ,
    RationalFunctionZ,
    SeriesQ,
    bell_closed_form,
    bell_ogf_coefficients,
    expand_rational,
    row_gf_full,
    row_gf_odd,
)
from .stirling import a008957_fd, a008957_stirling, stirling2
from .todd import (
    ColumnFactorization,
    ToddGrid,
    base_poly,
    column_transition_check,
    fit_column_polynomial,
    subgrid_check,
    todd_column,
    todd_finite_difference,
    todd_recurrence,
    todd_row,
    todd_stirling,
)
from .transforms import (
    IntSeq,
    antidiagonal_sums,
    bell_with_leading_one,
    binomial_transform,
    inverse_binomial_transform,
    kernel,
    row_sums,
)
from .triangle import (
    DiffTable,
    FlickerTriangle,
    build_diff_table,
    triangle_entry_recurrence,
    triangle_row_extraction,
    triangle_rows,
)
from .verify import PropertyReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "BenchReport",
    "CheckResult",
    "ColumnFactorization",
    "DiffTable",
    "FlickerTriangle",
    "InexactDivisionError",
    "IntSeq",
    "PolyZ",
    "PowerSumResult",
    "PropertyReport",
    "RationalFunctionZ",
    "SeriesQ",
    "ToddGrid",
    "a008957_fd",
    "a008957_stirling",
    "antidiagonal_sums",
    "base_poly",
    "bell_closed_form",
    "bell_ogf_coefficients",
    "bell_with_leading_one",
    "bench_power_sum",
    "binomial_transform",
    "build_diff_table",
    "column_transition_check",
    "exact_div",
    "expand_power_check",
    "expand_rational",
    "fallshift",
    "fit_column_polynomial",
    "integral_basis",
    "inverse_binomial_transform",
    "kernel",
    "lemma_difference_check",
    "power_sum",
    "power_sum_naive",
    "row_gf_full",
    "row_gf_odd",
    "row_sums",
    "run_suite",
    "stirling2",
    "subgrid_check",
    "todd_column",
    "todd_finite_difference",
    "todd_recurrence",
    "todd_row",
    "todd_stirling",
    "triangle_entry_recurrence",
    "triangle_row_extraction",
    "triangle_rows",
]
