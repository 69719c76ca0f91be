"""Closed forms, series identities and pi-limits for integrals of powers of arcsin."""
from .chebyshev import IntPoly, chebyshev_t, chebyshev_u, eval_poly, lemma33_residuals
from .closed_form import (
    ClosedForm,
    TrigPartialPoly,
    arcsine_power_integral,
    eval_closed_form,
    specialize_pi,
    trig_partial,
)
from .exact_core import (
    BigRational,
    NumberTheoryTable,
    RationalOverPi,
    bernoulli,
    binomial,
    euler_number,
    half_integer_central_binomial,
    lemma43_sum,
    poly_value_half,
)
from .harmonic import HarmonicTable, g_table, h_table
from .identities import corollary_rhs, lupu_rhs
from .kernels import BACKEND
from .limits import pi_limit_value, zeta_beta_finite
from .pipoly import PiPoly, QSqrt2
from .precision import PrecisionContext
from .series import SeriesResult, SeriesSpec, central_binomial_ratio_step, partial_fraction_series, sum_series
from .verify import (
    QuadratureReport,
    WSeries,
    check_cor54,
    check_lemma32,
    j_closed_form,
    quadrature_I,
    quadrature_J,
    run_suite,
    w_expand_J,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BigRational",
    "ClosedForm",
    "HarmonicTable",
    "IntPoly",
    "NumberTheoryTable",
    "PiPoly",
    "PrecisionContext",
    "QSqrt2",
    "QuadratureReport",
    "RationalOverPi",
    "SeriesResult",
    "SeriesSpec",
    "TrigPartialPoly",
    "WSeries",
    "arcsine_power_integral",
    "bernoulli",
    "binomial",
    "central_binomial_ratio_step",
    "chebyshev_t",
    "chebyshev_u",
    "check_cor54",
    "check_lemma32",
    "corollary_rhs",
    "euler_number",
    "eval_closed_form",
    "eval_poly",
    "g_table",
    "h_table",
    "half_integer_central_binomial",
    "j_closed_form",
    "lemma33_residuals",
    "lemma43_sum",
    "lupu_rhs",
    "partial_fraction_series",
    "pi_limit_value",
    "poly_value_half",
    "quadrature_I",
    "quadrature_J",
    "run_suite",
    "specialize_pi",
    "sum_series",
    "trig_partial",
    "w_expand_J",
    "zeta_beta_finite",
]
