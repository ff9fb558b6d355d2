"""Tanh-sinh quadrature on (0, 1) and the integral moments built on it.

The substitution x = 1/(1 + exp(-pi sinh t)) clusters nodes doubly
exponentially at both endpoints, so integrable logarithmic singularities
cost nothing special.  Levels halve the step; node tables are cached per
level and never mutated.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Callable

from .series import z_function
from .special import ApproxValue, ArgumentError, ln_barnes_g, ln_gamma

_T_MAX = 4.0
MAX_LEVELS = 14


@dataclass(frozen=True)
class IntegrandSpec:
    """An integrand on (0, 1) with endpoint singularity hints."""

    evaluator: Callable[[float], float]
    singular_left: bool = False
    singular_right: bool = False
    description: str = ""


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    abs_err: float
    levels_used: int
    evaluations: int


class IntegrandError(ValueError):
    """The integrand produced NaN or an infinity at an interior node."""


class ConvergenceError(RuntimeError):
    """Requested tolerance not reached; carries the best estimate."""

    def __init__(self, message: str, best: QuadratureResult):
        super().__init__(message)
        self.best = best


def _node(t: float) -> tuple[float, float] | None:
    u = 0.5 * math.pi * math.sinh(t)
    au = abs(u)
    if au > 360.0:
        return None
    s = math.exp(-2.0 * au)
    x = 1.0 / (1.0 + s) if t >= 0.0 else s / (1.0 + s)
    w = math.pi * math.cosh(t) * s / ((1.0 + s) * (1.0 + s))
    if x <= 0.0 or x >= 1.0 or w == 0.0:
        return None
    return x, w


@functools.lru_cache(maxsize=None)
def _level_nodes(level: int) -> tuple[tuple[float, float], ...]:
    # level 0: integer abscissas; level l > 0: odd multiples of 2^-l
    if level == 0:
        ts = [float(j) for j in range(-int(_T_MAX), int(_T_MAX) + 1)]
    else:
        h = 2.0 ** -level
        top = int(_T_MAX * 2 ** level)
        ts = []
        for k in range(1, top + 1, 2):
            ts.append(k * h)
            ts.append(-k * h)
    out = []
    for t in ts:
        node = _node(t)
        if node is not None:
            out.append(node)
    return tuple(out)


def integrate(spec: IntegrandSpec, target_abs_err: float = 1e-10,
              max_levels: int = 12) -> QuadratureResult:
    """Integrate spec over (0, 1) to the requested absolute error.

    Raises ConvergenceError (carrying the best estimate) if the level budget
    runs out, and IntegrandError on a non-finite interior value.
    """
    if not target_abs_err >= 1e-13:
        raise ArgumentError("target_abs_err must be at least 1e-13")
    if not 1 <= max_levels <= MAX_LEVELS:
        raise ArgumentError(f"max_levels must be between 1 and {MAX_LEVELS}")
    f = spec.evaluator
    terms: list[float] = []
    evaluations = 0
    prev = None
    value = 0.0
    err = math.inf
    for level in range(max_levels + 1):
        for x, w in _level_nodes(level):
            fx = f(x)
            if not math.isfinite(fx):
                raise IntegrandError(
                    f"non-finite integrand value at x={x!r}"
                    + (f" ({spec.description})" if spec.description else ""))
            terms.append(w * fx)
            evaluations += 1
        value = 2.0 ** -level * math.fsum(terms)
        if prev is not None and level >= 2:
            err = 2.0 * abs(value - prev) + 5e-16 * (1.0 + abs(value))
            if err <= target_abs_err:
                return QuadratureResult(value, err, level, evaluations)
        prev = value
    best = QuadratureResult(value, err, max_levels, evaluations)
    raise ConvergenceError(
        f"no convergence to {target_abs_err:g} within {max_levels} levels"
        + (f" ({spec.description})" if spec.description else ""), best)


# ---------------------------------------------------------------------------
# moments of the log-gamma family


def moment_L(n: int) -> ApproxValue:
    """integral over (0, 1) of (log Gamma(x))^n, for 1 <= n <= 20."""
    if not isinstance(n, int) or isinstance(n, bool) or not 1 <= n <= 20:
        raise ArgumentError("moment_L requires an integer 1 <= n <= 20")
    if n <= 6:
        target, levels = 1e-10, 12
    elif n <= 12:
        target, levels = 1e-7, 13
    else:
        target, levels = 1e-4, 13
    spec = IntegrandSpec(lambda x: ln_gamma(x) ** n, singular_left=True,
                         description=f"log-gamma moment {n}")
    res = integrate(spec, target, levels)
    return ApproxValue(res.value, res.abs_err)


def moment_G(n: int) -> ApproxValue:
    """integral over (0, 1) of (log G(x))^n, for 1 <= n <= 12."""
    if not isinstance(n, int) or isinstance(n, bool) or not 1 <= n <= 12:
        raise ArgumentError("moment_G requires an integer 1 <= n <= 12")
    if n <= 4:
        target, levels = 1e-9, 12
    elif n <= 10:
        target, levels = 1e-6, 13
    else:
        target, levels = 1.0, 13
    spec = IntegrandSpec(lambda x: ln_barnes_g(x) ** n, singular_left=True,
                         description=f"log-Barnes moment {n}")
    res = integrate(spec, target, levels)
    return ApproxValue(res.value, res.abs_err)


@functools.lru_cache(maxsize=4096)
def _moment_e_cached(n: int) -> ApproxValue:
    spec = IntegrandSpec(lambda x: x ** n * ln_gamma(x), singular_left=True,
                         description=f"power-weighted log-gamma moment {n}")
    res = integrate(spec, 1e-12, 12)
    return ApproxValue(res.value, res.abs_err)


def moment_E(n: int) -> ApproxValue:
    """integral over (0, 1) of x^n log Gamma(x), for 0 <= n <= 2000."""
    if not isinstance(n, int) or isinstance(n, bool) or not 0 <= n <= 2000:
        raise ArgumentError("moment_E requires an integer 0 <= n <= 2000")
    return _moment_e_cached(n)


def u_integral() -> ApproxValue:
    """integral over (0, 1) of Z(t)^2, Z as in series.z_function."""
    spec = IntegrandSpec(lambda t: z_function(t).value ** 2,
                         singular_right=True,
                         description="squared Z series")
    res = integrate(spec, 1e-9, 12)
    return ApproxValue(res.value, res.abs_err)


# ---------------------------------------------------------------------------
# trigonometric coefficients by panel-split quadrature


def fourier_coeff_numeric(spec: IntegrandSpec, n: int, kind: str) -> ApproxValue:
    """2 * integral of f(x) * trig(2 pi n x) over (0, 1).

    kind is "cosine" or "sine".  The interval is split at the zeros of the
    oscillating factor (2n + 1 cosine panels, 2n sine panels) and each panel
    is integrated by tanh-sinh after an affine substitution.
    """
    if kind not in ("cosine", "sine"):
        raise ArgumentError('kind must be "cosine" or "sine"')
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ArgumentError("coefficient index must be an integer >= 0")
    if kind == "sine" and n == 0:
        raise ArgumentError("sine coefficient index must be >= 1")
    if n == 0:
        cuts = [0.0, 1.0]
    elif kind == "cosine":
        cuts = [0.0] + [(2 * k + 1) / (4.0 * n) for k in range(2 * n)] + [1.0]
    else:
        cuts = [k / (2.0 * n) for k in range(2 * n + 1)]
    trig = math.cos if kind == "cosine" else math.sin
    panels = len(cuts) - 1
    target = max(1e-13, 1e-11 / panels)
    values = []
    errs = 0.0
    f = spec.evaluator
    w = 2.0 * math.pi * n
    for p in range(panels):
        a, b = cuts[p], cuts[p + 1]
        length = b - a

        def g(s: float, a=a, length=length) -> float:
            x = a + length * s
            return f(x) * trig(w * x) * length

        sub = IntegrandSpec(
            g,
            singular_left=spec.singular_left and p == 0,
            singular_right=spec.singular_right and p == panels - 1,
            description=spec.description)
        try:
            res = integrate(sub, target, 10)
        except ConvergenceError as exc:
            # keep the best panel estimate; its error bound stays honest
            res = exc.best
        values.append(res.value)
        errs += res.abs_err
    total = 2.0 * math.fsum(values)
    return ApproxValue(total, 2.0 * errs + 5e-16 * (1.0 + abs(total)))
