"""Exact umbral calculus for higher-order Bernoulli and poly-Bernoulli mixed-type polynomials."""

from .combinat import (
    StirlingTable,
    bernoulli_number,
    binomial,
    falling_factorial,
    stirling1_unsigned,
    stirling2,
    stirling_table,
)
from .errors import (
    BasisMismatch,
    CompositionConstantTerm,
    DivisionByZeroSeries,
    LambdaUnit,
    NotDeltaSeries,
    OrderMismatch,
    PrecisionExhausted,
    UmbralError,
)
from .families import (
    FamilyParams,
    euler_poly,
    frobenius_euler_poly,
    higher_bernoulli,
    mixed_gf,
    mixed_poly,
    mixed_poly_conv_path,
    mixed_poly_gf_path,
    mixed_poly_shift_avg_path,
    mixed_poly_stirling_monomial,
    mixed_poly_stirling_path,
    poly_bernoulli,
    polylog_series,
)
from .identities import AuditGrid, IdentityReport, audit, audit_all
from .poly import Poly, poly_shift
from .rational import rat, rat_str
from .series import (
    Series,
    series_add,
    series_antideriv,
    series_compose,
    series_deriv,
    series_div,
    series_int_pow,
    series_mul,
    series_reversion,
)
from .umbral import (
    ShefferPair,
    apply_operator,
    appell_recurrence_step,
    connection_coefficients,
    expand_in_basis,
    functional_apply,
    sheffer_deriv_check,
    sheffer_polynomial,
)

__version__ = "0.1.0"
