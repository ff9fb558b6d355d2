"""Trigonometric series with explicitly stored coefficients.

Convention used throughout: a series stores a0, a_n, b_n with

    f(x) = a0/2 + sum a_n cos(2 pi n x) + sum b_n sin(2 pi n x),
    a_n = 2 int_0^1 f cos(2 pi n x) dx,  b_n = 2 int_0^1 f sin(2 pi n x) dx,

and for two series the pairing 2 int_0^1 f g = a0 A0 / 2 + sum (a_n A_n +
b_n B_n).  Arrays are 1-indexed; slot 0 is unused.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ._emtail import em_tail, em_tail_geometric
from .quadrature import IntegrandSpec
from .series import _chunked_fsum, _t_table
from .special import (ApproxValue, ArgumentError, DomainError, bernoulli2,
                      clausen2, constants, ln_barnes_g, ln_gamma)


@dataclass(frozen=True, eq=False)
class FourierSeries:
    """Stored coefficients of one trigonometric expansion."""

    a0: float
    a: np.ndarray
    b: np.ndarray
    label: str = ""

    @property
    def n_terms(self) -> int:
        return len(self.a) - 1

    def partial_sum(self, x: float) -> float:
        """Evaluate the truncated expansion at a point."""
        n = np.arange(1, len(self.a))
        ang = 2.0 * math.pi * float(x) * n
        return (0.5 * self.a0 + float(self.a[1:] @ np.cos(ang))
                + float(self.b[1:] @ np.sin(ang)))


def _check_n_max(n_max: int) -> None:
    if not isinstance(n_max, int) or isinstance(n_max, bool) or n_max < 1:
        raise ArgumentError("n_max must be an integer >= 1")


def kummer_series(n_max: int) -> FourierSeries:
    """Expansion of log Gamma(x) on (0, 1).

    a0 = log 2pi, a_n = 1/(2n), b_n = (log 2pi + euler_gamma + log n)/(pi n).
    """
    _check_n_max(n_max)
    c = constants()
    n = np.arange(0.0, n_max + 1.0)
    n[0] = 1.0
    a = 0.5 / n
    b = (c.c_const + np.log(n)) / (math.pi * n)
    a[0] = 0.0
    b[0] = 0.0
    return FourierSeries(c.log_2pi, a, b, label="kummer")


def xlgamma_series(n_max: int) -> FourierSeries:
    """Expansion of x log Gamma(x) on (0, 1)."""
    _check_n_max(n_max)
    c = constants()
    t = _t_table(n_max)
    n = np.arange(0.0, n_max + 1.0)
    n[0] = 1.0
    h = np.concatenate(([0.0], np.cumsum(1.0 / n[1:])))
    pi2 = math.pi ** 2
    a = (0.25 / n - c.c_const / (pi2 * n * n)
         - np.log(n) / (4.0 * pi2 * n * n) - t / pi2)
    b = (c.euler_gamma + np.log(n) - h) / (2.0 * math.pi * n) \
        + 1.0 / (2.0 * math.pi * n * n)
    a[0] = 0.0
    b[0] = 0.0
    a0 = 0.5 * (c.log_2pi - 4.0 * c.log_glaisher)
    return FourierSeries(a0, a, b, label="xlgamma")


def logbarnes_series(n_max: int) -> FourierSeries:
    """Expansion of log G(x) on (0, 1), G the Barnes G function."""
    _check_n_max(n_max)
    c = constants()
    t = _t_table(n_max)
    n = np.arange(0.0, n_max + 1.0)
    n[0] = 1.0
    h = np.concatenate(([0.0], np.cumsum(1.0 / n[1:])))
    pi2 = math.pi ** 2
    a = ((0.5 * np.log(n) - c.c_const - 1.0) / (2.0 * pi2 * n * n)
         - 0.25 / n - t / pi2)
    b = (0.5 / n - c.euler_gamma - np.log(4.0 * pi2 * n) - h) \
        / (2.0 * math.pi * n)
    a[0] = 0.0
    b[0] = 0.0
    a0 = 2.0 * (1.0 / 12.0 - 2.0 * c.log_glaisher - 0.25 * c.log_2pi)
    return FourierSeries(a0, a, b, label="logbarnes")


def logsin_series(n_max: int) -> FourierSeries:
    """Expansion of log sin(pi x): a0 = -2 log 2, a_n = -1/n."""
    _check_n_max(n_max)
    n = np.arange(0.0, n_max + 1.0)
    n[0] = 1.0
    a = -1.0 / n
    a[0] = 0.0
    return FourierSeries(-2.0 * math.log(2.0), a, np.zeros(n_max + 1),
                         label="logsin")


def xclausen_series(n_max: int) -> FourierSeries:
    """Expansion of x Cl2(2 pi x).

    a0 = -zeta(3)/pi, a_n = (H_n/n^2 - 3/(2 n^3))/pi, b_n = 1/(2 n^2).
    """
    _check_n_max(n_max)
    c = constants()
    n = np.arange(0.0, n_max + 1.0)
    n[0] = 1.0
    h = np.concatenate(([0.0], np.cumsum(1.0 / n[1:])))
    a = (h / (n * n) - 1.5 / (n * n * n)) / math.pi
    b = 0.5 / (n * n)
    a[0] = 0.0
    b[0] = 0.0
    return FourierSeries(-c.zeta3 / math.pi, a, b, label="xclausen")


def b2_series(n_max: int) -> FourierSeries:
    """Expansion of the Bernoulli polynomial B2(x): a_n = 1/(pi^2 n^2)."""
    _check_n_max(n_max)
    n = np.arange(0.0, n_max + 1.0)
    n[0] = 1.0
    a = 1.0 / (math.pi ** 2 * n * n)
    a[0] = 0.0
    return FourierSeries(0.0, a, np.zeros(n_max + 1), label="b2")


def clausen_series(n_max: int) -> FourierSeries:
    """Expansion of Cl2(2 pi x): pure sine, b_n = 1/n^2."""
    _check_n_max(n_max)
    n = np.arange(0.0, n_max + 1.0)
    n[0] = 1.0
    b = 1.0 / (n * n)
    b[0] = 0.0
    return FourierSeries(0.0, np.zeros(n_max + 1), b, label="clausen")


_GENERATORS = {
    "kummer": kummer_series,
    "xlgamma": xlgamma_series,
    "logbarnes": logbarnes_series,
    "logsin": logsin_series,
    "xclausen": xclausen_series,
    "b2": b2_series,
}


def series_by_label(label: str, n_max: int) -> FourierSeries:
    if label not in _GENERATORS:
        raise ArgumentError(f"unknown series label {label!r}")
    return _GENERATORS[label](n_max)


def series_integrand(label: str) -> IntegrandSpec:
    """The function each labelled series expands, as an IntegrandSpec."""
    if label == "kummer":
        return IntegrandSpec(ln_gamma, singular_left=True,
                             description="log-gamma")
    if label == "xlgamma":
        return IntegrandSpec(lambda x: x * ln_gamma(x), singular_left=True,
                             description="x log-gamma")
    if label == "logbarnes":
        return IntegrandSpec(ln_barnes_g, singular_left=True,
                             description="log Barnes G")
    if label == "logsin":
        return IntegrandSpec(lambda x: math.log(math.sin(math.pi * x)),
                             singular_left=True, singular_right=True,
                             description="log sin")
    if label == "xclausen":
        return IntegrandSpec(lambda x: x * clausen2(2.0 * math.pi * x),
                             singular_left=True, singular_right=True,
                             description="x Cl2")
    if label == "b2":
        return IntegrandSpec(bernoulli2, description="Bernoulli B2")
    raise ArgumentError(f"unknown series label {label!r}")


SERIES_LABELS = tuple(_GENERATORS)


# ---------------------------------------------------------------------------
# cross coefficients of x cos(2 pi n x) and x sin(2 pi n x)


@dataclass(frozen=True)
class CrossCoeffs:
    """Coefficients at index m of the expansions of x cos(2 pi n x)
    and x sin(2 pi n x).  For m = 0 the cosine slots hold a0."""

    cos_a: float
    cos_b: float
    sin_a: float
    sin_b: float


def xsin_xcos_coeffs(n: int, m: int) -> CrossCoeffs:
    """Closed-form expansion coefficients of x*cos(2 pi n x), x*sin(2 pi n x)."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ArgumentError("n must be an integer >= 0")
    if not isinstance(m, int) or isinstance(m, bool) or m < 0:
        raise ArgumentError("m must be an integer >= 0")
    # x cos(2 pi n x)
    if m == 0:
        cos_a = 1.0 if n == 0 else 0.0
        cos_b = 0.0
    else:
        cos_a = 0.5 if m == n else 0.0
        if m == n:
            cos_b = -1.0 / (4.0 * math.pi * m)
        else:
            cos_b = m / (math.pi * (float(n) * n - float(m) * m))
    # x sin(2 pi n x): identically zero for n = 0
    if n == 0:
        sin_a = 0.0
        sin_b = 0.0
    elif m == 0:
        sin_a = -1.0 / (math.pi * n)
        sin_b = 0.0
    elif m == n:
        sin_a = -1.0 / (4.0 * math.pi * n)
        sin_b = 0.5
    else:
        sin_a = n / (math.pi * (float(m) * m - float(n) * n))
        sin_b = 0.0
    return CrossCoeffs(cos_a, cos_b, sin_a, sin_b)


def xlgamma_cos_from_kummer(n: int, n_terms: int = 100_000) -> ApproxValue:
    """Cosine coefficient a_n of x log Gamma(x), assembled from the
    log-gamma series paired against the x cos(2 pi n x) cross table.

    a_n(x f) = a_n(f)/2 + sum_m b_m(f) beta_{n,m}, with the m > n_terms tail
    summed by Euler-Maclaurin.  Independent of the direct closed form.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ArgumentError("n must be an integer >= 1")
    if n_terms < 4 * n:
        raise ArgumentError("n_terms must be at least 4n")
    c = constants()
    ks = kummer_series(n_terms)
    m = np.arange(1.0, n_terms + 1.0)
    den = float(n) * n - m * m
    den[n - 1] = 1.0
    beta = m / (math.pi * den)
    beta[n - 1] = -1.0 / (4.0 * math.pi * n)
    total = 0.5 * float(ks.a[n]) + _chunked_fsum(ks.b[1:] * beta)
    # tail: sum_{m>N} (C + log m)/(pi m) * m/(pi (n^2 - m^2))
    #     = -(1/pi^2) sum_{m>N} (C + log m)/(m^2 - n^2)
    t1, e1 = em_tail_geometric([c.c_const, 1.0], 2.0, float(n) * n,
                               n_terms, 4)
    total -= t1 / math.pi ** 2
    return ApproxValue(total, e1 / math.pi ** 2 + 2e-15 * (1.0 + abs(total)))


# ---------------------------------------------------------------------------
# pairing two series


def parseval_pair(f: FourierSeries, g: FourierSeries, n_terms: int) -> ApproxValue:
    """int_0^1 f g from stored coefficients: (1/2)[a0 A0/2 + sum (aA + bB)].

    The tail beyond n_terms is estimated by fitting (c0 + c1 log n +
    c2 log^2 n)/n^2 on the last octave and summing the fit by
    Euler-Maclaurin; the fit residual enters the error bound.  Exactly
    symmetric in f and g.
    """
    if not isinstance(n_terms, int) or isinstance(n_terms, bool) or n_terms < 16:
        raise ArgumentError("n_terms must be an integer >= 16")
    if f.n_terms < n_terms or g.n_terms < n_terms:
        raise ArgumentError("both series need at least n_terms coefficients")
    s = f.a[1:n_terms + 1] * g.a[1:n_terms + 1] \
        + f.b[1:n_terms + 1] * g.b[1:n_terms + 1]
    head = 0.25 * f.a0 * g.a0 + 0.5 * _chunked_fsum(s)
    lo = n_terms // 2 + 1
    ns = np.arange(float(lo), n_terms + 1.0)
    ln = np.log(ns)
    basis = np.stack([1.0 / ns ** 2, ln / ns ** 2, ln * ln / ns ** 2], axis=1)
    octave = s[lo - 1:n_terms]
    coef, *_ = np.linalg.lstsq(basis, octave, rcond=None)
    fit_resid = float(np.abs(octave - basis @ coef).sum())
    tail, tail_err = em_tail([float(coef[0]), float(coef[1]), float(coef[2])],
                             2.0, n_terms, 4)
    value = head + 0.5 * tail
    err = 0.5 * (tail_err + fit_resid) + 2e-15 * (1.0 + abs(value))
    return ApproxValue(value, err)


# ---------------------------------------------------------------------------
# log Barnes G reassembled from series data


def connon_assemble(x: float, n_terms: int = 100_000) -> float:
    """log G(x) for 0 < x < 1 rebuilt from expansion data.

    Closed pieces (Cl2, B2, log-gamma) plus the one genuinely truncated sum,
    sum log(n) cos(2 pi n x)/n^2.
    """
    x = float(x)
    if not 0.0 < x < 1.0:
        raise DomainError("connon_assemble requires 0 < x < 1")
    if not isinstance(n_terms, int) or isinstance(n_terms, bool) or n_terms < 1:
        raise ArgumentError("n_terms must be an integer >= 1")
    c = constants()
    n = np.arange(1.0, n_terms + 1.0)
    logsum = _chunked_fsum(np.log(n) * np.cos(2.0 * math.pi * x * n) / (n * n))
    b2 = bernoulli2(x)
    return (c.zeta_p_m1
            - clausen2(2.0 * math.pi * x) / (4.0 * math.pi)
            + 0.5 * (c.c_const - 1.5) * b2
            + logsum / (2.0 * math.pi ** 2)
            + 0.25 * b2
            + (x - 1.0) * ln_gamma(x))
