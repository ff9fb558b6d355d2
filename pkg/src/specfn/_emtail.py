"""Euler-Maclaurin tails for sums of P(log n) * n**(-a).

The term class f(t) = P(log t) * t**(-a) is closed under differentiation:
f'(t) = Q(log t) * t**(-a-1) with Q = P' - a*P.  That makes every correction
term of the Euler-Maclaurin formula mechanical for the tails this package
needs: zeta values, zeta derivatives, and log-weighted rational kernels
expanded geometrically in n**(-2).
"""

from __future__ import annotations

import math

# -B_{2k}/(2k)! for k = 1..7; one more entry than the deepest correction
# order so an error estimate (first omitted term) is always available.
_EM_COEF = (
    -1.0 / 12.0,
    1.0 / 720.0,
    -1.0 / 30240.0,
    1.0 / 1209600.0,
    -1.0 / 47900160.0,
    (691.0 / 2730.0) / 479001600.0,
    -1.0 / 74724249600.0,
)

MAX_CORRECTIONS = 6


def poly_eval(p: list[float], u: float) -> float:
    s = 0.0
    for c in reversed(p):
        s = s * u + c
    return s


def deriv_step(p: list[float], a: float) -> tuple[list[float], float]:
    """(P, a) representing f -> (Q, a + 1) representing f'."""
    q = [0.0] * len(p)
    for k in range(1, len(p)):
        q[k - 1] += k * p[k]
    for k in range(len(p)):
        q[k] -= a * p[k]
    while len(q) > 1 and q[-1] == 0.0:
        q.pop()
    return q, a + 1.0


def tail_integral(p: list[float], a: float, n: float) -> float:
    """integral over (n, inf) of P(log t) * t**(-a), for a > 1."""
    lg = math.log(n)
    total = 0.0
    for k, c in enumerate(p):
        if c == 0.0:
            continue
        s = 0.0
        fac = 1.0
        for j in range(k + 1):
            s += fac * lg ** (k - j) / (a - 1.0) ** (j + 1)
            fac *= k - j
        total += c * n ** (1.0 - a) * s
    return total


def em_tail(p: list[float], a: float, n: int,
            corrections: int = 4) -> tuple[float, float]:
    """sum over m > n of P(log m) * m**(-a), with an error estimate.

    Returns (value, err); err is the magnitude of the first omitted
    Bernoulli correction term.
    """
    if not 0 <= corrections <= MAX_CORRECTIONS:
        raise ValueError("corrections must be between 0 and 6")
    lg = math.log(n)
    val = tail_integral(p, a, n) - 0.5 * poly_eval(p, lg) * n ** (-a)
    cur_p, cur_a = list(p), float(a)
    order = 0
    err = 0.0
    for k in range(corrections + 1):
        while order < 2 * k + 1:
            cur_p, cur_a = deriv_step(cur_p, cur_a)
            order += 1
        term = _EM_COEF[k] * poly_eval(cur_p, lg) * n ** (-cur_a)
        if k < corrections:
            val += term
        else:
            err = abs(term)
    return val, err


def em_tail_geometric(p: list[float], a: float, c: float, n: int,
                      corrections: int = 4) -> tuple[float, float]:
    """sum over m > n of P(log m) / (m**a * (1 - c/m**2)).

    Expands the kernel geometrically in c/m**2, so it needs |c| < n*n;
    callers arrange n >= 2*sqrt(|c|).  Returns (value, err).
    """
    if abs(c) >= n * n:
        raise ValueError("geometric expansion needs |c| < n*n")
    ratio = abs(c) / (n * n)
    val = 0.0
    err = 0.0
    power = 1.0
    for j in range(80):
        t, e = em_tail(p, a + 2.0 * j, n, corrections)
        term = power * t
        val += term
        err += abs(power) * e
        if abs(term) <= 1e-19 * (abs(val) + 1e-300) and j >= 2:
            err += abs(term) * ratio / (1.0 - ratio)
            break
        power *= c
    return val, err
