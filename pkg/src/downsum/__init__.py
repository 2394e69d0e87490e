"""downsum: exact correction weights for downsampled summation.

The package computes the polynomial family w_r(x) generated by
z/((1+xz)^(1/x)-1), whose specializations recover Bernoulli numbers,
Gregory quadrature coefficients, and the Euler transform, verifies the
associated summation identities exactly over the rationals, and applies
the weights to floating-point time series (downsampling-error correction,
series acceleration, quadrature).
"""

from .errors import (
    DownsumError,
    EmptySeries,
    EndpointIsRoot,
    InsufficientOrder,
    InsufficientTable,
    InsufficientTerms,
    NonDivisibleWindow,
    NonExactDivision,
    NonUnitConstantTerm,
    NonzeroConstantTerm,
    OrderMismatch,
    OutOfRange,
    ParseError,
    ZeroStep,
)
from .exact import Polynomial, PowerSeries, format_rational, parse_rational
from .family import (
    CoefficientTable,
    CorrectionFamily,
    classical_numbers,
    coefficient_table,
    correction_family,
    count_real_roots,
    falling_factorial,
    reversed_falling_factorial,
    special_value,
    unit_weight_recurrence_residual,
    weight_recurrence_residual,
)
from .sumcalc import (
    SumIdentityReport,
    alternating_residual,
    downsampled_sum,
    euler_maclaurin_residual,
    forward_difference,
    fractional_sum,
    gregory_residual,
    indefinite_sum,
    random_polynomial,
    scaled_difference_residual,
    unit_difference_residual,
)
from .timeseries import (
    ErrorReport,
    TimeSeries,
    corrected_sum,
    error_report,
    euler_mascheroni,
    euler_transform,
    gaussian_bump,
    gregory_integral,
    load_series,
    windowed_sum,
)

__version__ = "0.1.0"

__all__ = [
    "DownsumError",
    "EmptySeries",
    "EndpointIsRoot",
    "InsufficientOrder",
    "InsufficientTable",
    "InsufficientTerms",
    "NonDivisibleWindow",
    "NonExactDivision",
    "NonUnitConstantTerm",
    "NonzeroConstantTerm",
    "OrderMismatch",
    "OutOfRange",
    "ParseError",
    "ZeroStep",
    "Polynomial",
    "PowerSeries",
    "format_rational",
    "parse_rational",
    "CoefficientTable",
    "CorrectionFamily",
    "classical_numbers",
    "coefficient_table",
    "correction_family",
    "count_real_roots",
    "falling_factorial",
    "reversed_falling_factorial",
    "special_value",
    "unit_weight_recurrence_residual",
    "weight_recurrence_residual",
    "SumIdentityReport",
    "alternating_residual",
    "downsampled_sum",
    "euler_maclaurin_residual",
    "forward_difference",
    "fractional_sum",
    "gregory_residual",
    "indefinite_sum",
    "random_polynomial",
    "scaled_difference_residual",
    "unit_difference_residual",
    "ErrorReport",
    "TimeSeries",
    "corrected_sum",
    "error_report",
    "euler_mascheroni",
    "euler_transform",
    "gaussian_bump",
    "gregory_integral",
    "load_series",
    "windowed_sum",
    "__version__",
]
