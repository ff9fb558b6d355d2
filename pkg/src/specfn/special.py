"""Scalar special functions and the shared constants table.

Log-gamma, the logarithm of the Barnes G function, the Clausen function
Cl2, the Riemann zeta function for real s > 1 with its first two
derivatives, zeta derivatives at negative odd integers via the functional
equation, a digamma that accepts complex arguments, harmonic numbers, and
the second Bernoulli polynomial.

Derived constants are computed on first use from the evaluators in this
module; their decimal digits are never pasted into the source.
"""

from __future__ import annotations

import cmath
import functools
import math
from dataclasses import dataclass

import numpy as np

from ._ddouble import dd_add, dd_log, dd_mul, dd_mul_d, two_prod
from ._emtail import em_tail


class DomainError(ValueError):
    """Argument outside a function's mathematical domain."""


class ArgumentError(ValueError):
    """Structurally invalid argument: wrong type, unsupported order, bad range."""


@dataclass(frozen=True)
class ApproxValue:
    """A float paired with an absolute error bound.

    Addition and subtraction combine bounds additively; scaled() multiplies
    both the value and the bound.
    """

    value: float
    abs_err: float

    def __add__(self, other: "ApproxValue | float") -> "ApproxValue":
        if isinstance(other, ApproxValue):
            return ApproxValue(self.value + other.value, self.abs_err + other.abs_err)
        return ApproxValue(self.value + other, self.abs_err)

    __radd__ = __add__

    def __sub__(self, other: "ApproxValue | float") -> "ApproxValue":
        if isinstance(other, ApproxValue):
            return ApproxValue(self.value - other.value, self.abs_err + other.abs_err)
        return ApproxValue(self.value - other, self.abs_err)

    def __neg__(self) -> "ApproxValue":
        return ApproxValue(-self.value, self.abs_err)

    def scaled(self, c: float) -> "ApproxValue":
        return ApproxValue(self.value * c, self.abs_err * abs(c))


@dataclass(frozen=True)
class ConstantsTable:
    """Shared numerical constants, all computed rather than transcribed."""

    euler_gamma: float
    log_2pi: float
    c_const: float        # log(2 pi) + euler_gamma
    log_glaisher: float   # 1/12 - zeta'(-1)
    zeta3: float
    zeta_p_2: float       # zeta'(2)
    zeta_pp_2: float      # zeta''(2)
    zeta_p_3: float       # zeta'(3)
    zeta_p_m1: float      # zeta'(-1)
    zeta_p_m3: float      # zeta'(-3)


def _euler_gamma() -> float:
    # H_N - log N minus the asymptotic correction terms; next term ~ 1e-22
    n = 100
    h = math.fsum(1.0 / k for k in range(1, n + 1))
    n2 = float(n) * n
    return (h - math.log(n) - 0.5 / n + 1.0 / (12.0 * n2)
            - 1.0 / (120.0 * n2 * n2) + 1.0 / (252.0 * n2 * n2 * n2)
            - 1.0 / (240.0 * n2 * n2 * n2 * n2))


@functools.lru_cache(maxsize=1)
def constants() -> ConstantsTable:
    """Build the constants table once.

    Safe under concurrent first calls: recomputation is idempotent and every
    caller sees an identical table.
    """
    g = _euler_gamma()
    log_2pi = math.log(2.0 * math.pi)
    zpm1 = zeta_derivative_neg(1)
    return ConstantsTable(
        euler_gamma=g,
        log_2pi=log_2pi,
        c_const=log_2pi + g,
        log_glaisher=1.0 / 12.0 - zpm1,
        zeta3=zeta(3.0),
        zeta_p_2=zeta_derivative(2.0).value,
        zeta_pp_2=zeta_derivative(2.0, order=2).value,
        zeta_p_3=zeta_derivative(3.0).value,
        zeta_p_m1=zpm1,
        zeta_p_m3=zeta_derivative_neg(3),
    )


# ---------------------------------------------------------------------------
# log-gamma


def ln_gamma(x: float) -> float:
    """log Gamma(x) for x > 0.

    Delegates to the platform lgamma, which is correctly rounded to about
    one ulp over this range; re-deriving it would only add error.
    """
    x = float(x)
    if not (x > 0.0):  # also rejects NaN
        raise DomainError("ln_gamma requires x > 0")
    return math.lgamma(x)


# ---------------------------------------------------------------------------
# log Barnes G

# Tail coefficients B_{2k}/(2k*(2k - 2)) for k = 2..6 of the large-argument
# expansion of log G(1 + z); truncation is below 1e-18 once z >= 20.
_LNG_TAIL = (-1.0 / 240.0, 1.0 / 1008.0, -1.0 / 1440.0, 1.0 / 1056.0,
             -691.0 / 327600.0)

_LOG2PI_DD = dd_add(*dd_log(math.pi), 0.6931471805599453, 2.3190468138462996e-17)


def _lng_asym_parts(x: float) -> list[float]:
    # Parts of log G at x = 1 + z, summed by the caller with fsum.
    # (z*z/2 - 1/12) log z - 3 z*z/4 + z/2 log(2 pi) + zeta'(-1) + tail.
    z = x - 1.0  # exact: x >= 21 here and 1 is representable at x's scale
    lh, ll = dd_log(z)
    z2h, z2l = two_prod(z, z)
    t1h, t1l = dd_mul(0.5 * z2h, 0.5 * z2l, lh, ll)
    t2h, t2l = dd_mul_d(z2h, z2l, -0.75)
    t3h, t3l = dd_mul_d(*_LOG2PI_DD, 0.5 * z)
    t4h, t4l = dd_mul_d(lh, ll, -1.0 / 12.0)
    parts = [t1h, t1l, t2h, t2l, t3h, t3l, t4h, t4l,
             constants().zeta_p_m1]
    iz2 = 1.0 / (z * z)
    t = iz2
    for c in _LNG_TAIL:
        parts.append(c * t)
        t *= iz2
    return parts


def ln_barnes_g(x: float) -> float:
    """log G(x) for x > 0, where G is the Barnes G function.

    G(1) = G(2) = G(3) = 1 and G(x + 1) = Gamma(x) G(x).  Strategy: walk the
    recurrence up to an anchor near 21 that shares the fractional part of x,
    evaluate the asymptotic expansion there in double-double pieces, and fsum
    everything once.  Absolute error stays near 1e-13 across (0, 100].
    """
    x = float(x)
    if not (x > 0.0):
        raise DomainError("ln_barnes_g requires x > 0")
    if math.isinf(x):
        raise DomainError("ln_barnes_g requires a finite argument")
    if x >= 22.0:
        return math.fsum(_lng_asym_parts(x))
    f = x - math.floor(x)  # exact
    anchor = 21.0 + f
    parts = _lng_asym_parts(anchor)
    k = 0
    t = x
    # fl(x + k) lands exactly on the anchor when floor(x) + k == 21, so the
    # telescoped recurrence and the asymptotic point agree bitwise.
    while t < anchor - 0.5:
        parts.append(-math.lgamma(t))
        k += 1
        t = x + k
    return math.fsum(parts)


# ---------------------------------------------------------------------------
# Clausen function Cl2

_CL2_COEF: list[float] = []  # zeta(2j)/(j*(2j+1)) for j = 1, 2, ...


def _cl2_coef(j: int) -> float:
    while len(_CL2_COEF) < j:
        k = len(_CL2_COEF) + 1
        _CL2_COEF.append(zeta(2.0 * k) / (k * (2 * k + 1)))
    return _CL2_COEF[j - 1]


def clausen2(theta: float) -> float:
    """Clausen function Cl2(theta) = -int_0^theta log|2 sin(t/2)| dt.

    Reduces modulo 2 pi, uses oddness, then sums the power series
    theta (1 - log theta) + sum_j zeta(2j) theta^(2j+1) / (j (2j+1) (2pi)^2j),
    which converges on |theta| <= pi.
    """
    theta = float(theta)
    if not math.isfinite(theta):
        raise DomainError("clausen2 requires a finite angle")
    r = math.remainder(theta, math.tau)
    sign = 1.0
    if r < 0.0:
        sign = -1.0
        r = -r
    if r == 0.0:
        return 0.0
    q = (r / math.tau) ** 2
    s = r * (1.0 - math.log(r))
    pw = q
    for j in range(1, 80):
        term = _cl2_coef(j) * pw
        s += r * term
        if term < 1e-18:
            break
        pw *= q
    return sign * s


# ---------------------------------------------------------------------------
# zeta and derivatives

_ZETA_N = 60


@functools.lru_cache(maxsize=None)
def zeta(s: float) -> float:
    """Riemann zeta for real s > 1, via direct terms plus an EM tail.

    Cached: callers sum series whose terms revisit the same arguments.
    """
    s = float(s)
    if not (s > 1.0) or math.isinf(s):
        raise DomainError("zeta requires finite s > 1")
    if s >= 60.0:
        # five terms leave a remainder below 1e-42
        return 1.0 + 2.0 ** -s + 3.0 ** -s + 4.0 ** -s + 5.0 ** -s
    direct = math.fsum(k ** -s for k in range(1, _ZETA_N + 1))
    tail, _ = em_tail([1.0], s, _ZETA_N, 6)
    return direct + tail


def zeta_derivative(s: float, order: int = 1) -> ApproxValue:
    """d^order/ds^order zeta(s) for real s > 1, order 1 or 2."""
    s = float(s)
    if order not in (1, 2):
        raise ArgumentError("order must be 1 or 2")
    if not (s > 1.0) or math.isinf(s):
        raise DomainError("zeta_derivative requires finite s > 1")
    p = [0.0, 1.0] if order == 1 else [0.0, 0.0, 1.0]
    direct = math.fsum(math.log(k) ** order * k ** -s
                       for k in range(2, _ZETA_N + 1))
    tail, err = em_tail(p, s, _ZETA_N, 6)
    total = direct + tail
    if order == 1:
        total = -total
    return ApproxValue(total, err + 4e-16 * (1.0 + abs(total)))


def zeta_derivative_neg(k: int) -> float:
    """zeta'(-k) for k in {1, 3}, via the functional equation.

    Differentiating zeta(1 - s) = 2 (2 pi)^(-s) cos(pi s / 2) Gamma(s) zeta(s)
    at even s = k + 1 (where the tangent term vanishes) gives
    zeta'(1 - s) = -F(s) (-log 2pi + psi(s) + zeta'(s)/zeta(s)).
    """
    if k not in (1, 3):
        raise ArgumentError("k must be 1 or 3")
    s = k + 1
    zs = zeta(float(s))
    cos_half = -1.0 if s % 4 == 2 else 1.0
    f = 2.0 * (2.0 * math.pi) ** -s * cos_half * math.factorial(s - 1) * zs
    psi_s = harmonic(s - 1) - _euler_gamma()
    return -f * (-math.log(2.0 * math.pi) + psi_s
                 + zeta_derivative(float(s)).value / zs)


# ---------------------------------------------------------------------------
# digamma for complex arguments

# B_{2k}/(2k) for k = 1..7, the asymptotic series coefficients
_PSI_COEF = (1.0 / 12.0, -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0,
             1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0)


def digamma_complex(z: complex) -> complex:
    """psi(z) for complex z away from the poles at 0, -1, -2, ...

    Reflects Re z < 1/2, shifts the argument until |z| >= 12, then applies
    the asymptotic series.  Componentwise error is well below 1e-12.
    """
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError("digamma_complex requires a finite argument")
    if z.imag == 0.0 and z.real <= 0.0 and z.real == int(z.real):
        raise DomainError("digamma_complex pole at non-positive integer")
    shift = 0.0 + 0.0j
    if z.real < 0.5:
        # psi(z) = psi(1 - z) - pi cot(pi z)
        shift -= math.pi / cmath.tan(math.pi * z)
        z = 1.0 - z
    while abs(z) < 12.0:
        shift -= 1.0 / z
        z = z + 1.0
    w = 1.0 / (z * z)
    series = 0.0 + 0.0j
    pw = w
    for c in _PSI_COEF:
        series += c * pw
        pw *= w
    return shift + cmath.log(z) - 0.5 / z - series


# ---------------------------------------------------------------------------
# harmonic numbers, Bernoulli polynomial


def harmonic(n: int) -> float:
    """H_n = 1 + 1/2 + ... + 1/n for integer n >= 1.

    Direct summation up to 1e7, asymptotic expansion beyond; the crossover
    keeps every result within a few ulps.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ArgumentError("harmonic requires an integer n >= 1")
    if n <= 10_000:
        return math.fsum(1.0 / k for k in range(1, n + 1))
    if n <= 10_000_000:
        total = 0.0
        lo = 1
        while lo <= n:
            hi = min(lo + (1 << 20) - 1, n)
            total += float((1.0 / np.arange(lo, hi + 1, dtype=np.float64)).sum())
            lo = hi + 1
        return total
    n2 = float(n) * n
    return (_euler_gamma() + math.log(n) + 0.5 / n - 1.0 / (12.0 * n2)
            + 1.0 / (120.0 * n2 * n2) - 1.0 / (252.0 * n2 * n2 * n2))


def bernoulli2(x: float) -> float:
    """Second Bernoulli polynomial B2(x) = x^2 - x + 1/6."""
    x = float(x)
    return x * x - x + 1.0 / 6.0
