"""Special functions around the log-gamma family, their full-period
trigonometric series, and a verification suite that recomputes every
stored quantity by an independent route.
"""

from .fourier import (CrossCoeffs, FourierSeries, SERIES_LABELS,
                      b2_series, clausen_series, connon_assemble,
                      kummer_series, logbarnes_series, logsin_series,
                      parseval_pair, series_by_label, series_integrand,
                      xclausen_series, xlgamma_cos_from_kummer,
                      xlgamma_series, xsin_xcos_coeffs)
from .identities import (AdjudicationCase, AdjudicationOutcome, GnRow,
                         Identity, IdentityReport, Reading, ReadingResult,
                         Suite, adjudicate, adjudication_cases,
                         build_catalog, build_suite, gn_asymptotics,
                         gn_trend_ok, run_all, run_identity,
                         select_identities)
from .quadrature import (ConvergenceError, IntegrandError, IntegrandSpec,
                         QuadratureResult, fourier_coeff_numeric, integrate,
                         moment_E, moment_G, moment_L, u_integral)
from .series import (TailPolicy, harmonic_zeta, harmonic_zeta_prime2,
                     lemma1_sum_a, lemma1_sum_b, log_rational_sum, t_n,
                     v_sum, x2z_moment, z_function)
from .special import (ApproxValue, ArgumentError, ConstantsTable, DomainError,
                      bernoulli2, clausen2, constants, digamma_complex,
                      harmonic, ln_barnes_g, ln_gamma, zeta, zeta_derivative,
                      zeta_derivative_neg)

__version__ = "0.1.0"

__all__ = [
    "ApproxValue", "ArgumentError", "ConstantsTable", "DomainError",
    "bernoulli2", "clausen2", "constants", "digamma_complex", "harmonic",
    "ln_barnes_g", "ln_gamma", "zeta", "zeta_derivative",
    "zeta_derivative_neg",
    "TailPolicy", "harmonic_zeta", "harmonic_zeta_prime2", "lemma1_sum_a",
    "lemma1_sum_b", "log_rational_sum", "t_n", "v_sum", "x2z_moment",
    "z_function",
    "ConvergenceError", "IntegrandError", "IntegrandSpec", "QuadratureResult",
    "fourier_coeff_numeric", "integrate", "moment_E", "moment_G", "moment_L",
    "u_integral",
    "CrossCoeffs", "FourierSeries", "SERIES_LABELS", "b2_series",
    "clausen_series", "connon_assemble", "kummer_series", "logbarnes_series",
    "logsin_series", "parseval_pair", "series_by_label", "series_integrand",
    "xclausen_series", "xlgamma_cos_from_kummer", "xlgamma_series",
    "xsin_xcos_coeffs",
    "AdjudicationCase", "AdjudicationOutcome", "GnRow", "Identity",
    "IdentityReport", "Reading", "ReadingResult", "Suite", "adjudicate",
    "adjudication_cases", "build_catalog", "build_suite", "gn_asymptotics",
    "gn_trend_ok", "run_all", "run_identity", "select_identities",
    "__version__",
]
