"""Double-double helpers for the few places where plain floats run out of bits.

Error-free transforms (two_sum, two_prod) plus a small exp/log pair built on
them.  This is only what ln_barnes_g needs to stay below an absolute error of
1e-12 near the top of its range, where half an ulp of the result is already
most of that budget.  It is not a general extended-precision layer.
"""

from __future__ import annotations

import math

_SPLIT = 134217729.0  # 2**27 + 1, Dekker splitting constant


def two_sum(a: float, b: float) -> tuple[float, float]:
    """Exact sum: (s, e) with s = fl(a + b) and a + b = s + e."""
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def fast_two_sum(a: float, b: float) -> tuple[float, float]:
    # valid only for |a| >= |b|
    s = a + b
    return s, b - (s - a)


def two_prod(a: float, b: float) -> tuple[float, float]:
    """Exact product: (p, e) with p = fl(a * b) and a * b = p + e."""
    p = a * b
    a1 = a * _SPLIT
    ah = a1 - (a1 - a)
    al = a - ah
    b1 = b * _SPLIT
    bh = b1 - (b1 - b)
    bl = b - bh
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def dd_add(xh: float, xl: float, yh: float, yl: float) -> tuple[float, float]:
    sh, sl = two_sum(xh, yh)
    th, tl = two_sum(xl, yl)
    sl += th
    sh, sl = fast_two_sum(sh, sl)
    sl += tl
    return fast_two_sum(sh, sl)


def dd_mul(xh: float, xl: float, yh: float, yl: float) -> tuple[float, float]:
    ph, pl = two_prod(xh, yh)
    pl += xh * yl + xl * yh
    return fast_two_sum(ph, pl)


def dd_mul_d(xh: float, xl: float, c: float) -> tuple[float, float]:
    ph, pl = two_prod(xh, c)
    pl += xl * c
    return fast_two_sum(ph, pl)


# log 2 split into a high part and the exact remainder of the high part.
LN2_H = 0.6931471805599453
LN2_L = 2.3190468138462996e-17


def dd_exp(uh: float, ul: float) -> tuple[float, float]:
    """exp of a double-double, good to ~1e-32 relative for moderate u."""
    k = round((uh + ul) / LN2_H)
    vh, vl = dd_add(uh, ul, *two_prod(-float(k), LN2_H))
    vh, vl = dd_add(vh, vl, -float(k) * LN2_L, 0.0)
    sh, sl = 1.0, 0.0
    th, tl = 1.0, 0.0
    for j in range(1, 22):
        th, tl = dd_mul(th, tl, vh, vl)
        th, tl = dd_mul_d(th, tl, 1.0 / j)
        sh, sl = dd_add(sh, sl, th, tl)
    return math.ldexp(sh, k), math.ldexp(sl, k)


def dd_log(z: float) -> tuple[float, float]:
    """log of a positive float as a double-double.

    One Newton step on exp: h = fl(log z) is already correct to ~1 ulp, and
    z * exp(-h) - 1 recovers the residual with dd arithmetic.
    """
    h = math.log(z)
    eh, el = dd_exp(-h, 0.0)
    ph, pl = dd_mul_d(eh, el, z)
    dh, dl = dd_add(ph, pl, -1.0, 0.0)
    # log(1 + d) = d - d^2/2 + O(d^3); d ~ 1e-16 so two terms suffice
    ch, cl = dd_add(dh, dl, *dd_mul_d(*dd_mul(dh, dl, dh, dl), -0.5))
    return dd_add(h, 0.0, ch, cl)
