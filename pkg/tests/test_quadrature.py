import math

import pytest

from specfn import (ArgumentError, ConvergenceError, IntegrandSpec,
                    fourier_coeff_numeric, integrate, ln_gamma, moment_E,
                    moment_G, moment_L, u_integral)

# log-gamma moments over the unit interval, 40-digit references
L_MOMENTS = {
    1: 0.91893853320467274178,
    2: 1.866317083793562081,
    3: 5.74038880722947428,
    4: 23.38951446551680162,
}
G_MOMENTS = {
    1: -0.87364488733657156265,
    2: 1.7912727222277242819,
    3: -5.5888552271997564861,
    4: 23.017006619549365494,
    10: 3625434.5733303475249,
}
E_MOMENTS = {
    1: 0.21071478956855210834,
    2: 0.088006824426166588826,
    4: 0.029259040544772360933,
    200: 1.4417457796588280893e-5,
}


def test_integrate_polynomial():
    spec = IntegrandSpec(lambda x: x * x)
    res = integrate(spec, 1e-12)
    assert abs(res.value - 1.0 / 3.0) < 1e-14
    assert res.abs_err < 1e-11
    assert res.levels_used >= 2
    assert res.evaluations > 0


def test_integrate_endpoint_singularity():
    spec = IntegrandSpec(lambda x: math.log(x), singular_left=True)
    res = integrate(spec, 1e-12)
    assert abs(res.value + 1.0) < 1e-13


@pytest.mark.parametrize("n,want", sorted(L_MOMENTS.items()))
def test_moment_l(n, want):
    r = moment_L(n)
    assert abs(r.value - want) <= r.abs_err + 1e-13 * (1.0 + abs(want))


@pytest.mark.parametrize("n,want", sorted(G_MOMENTS.items()))
def test_moment_g(n, want):
    r = moment_G(n)
    assert abs(r.value - want) <= r.abs_err + 1e-12 * (1.0 + abs(want))


@pytest.mark.parametrize("n,want", sorted(E_MOMENTS.items()))
def test_moment_e(n, want):
    r = moment_E(n)
    assert abs(r.value - want) <= r.abs_err + 5e-15


def test_moment_argument_ranges():
    with pytest.raises(ArgumentError):
        moment_L(0)
    with pytest.raises(ArgumentError):
        moment_L(21)
    with pytest.raises(ArgumentError):
        moment_G(13)
    with pytest.raises(ArgumentError):
        moment_E(-1)
    with pytest.raises(ArgumentError):
        moment_E(2001)


def test_u_integral():
    u = u_integral()
    assert abs(u.value - 0.4785935081690661305) <= u.abs_err + 1e-12
    assert u.abs_err < 1e-8


def test_fourier_coeff_numeric_kummer():
    spec = IntegrandSpec(ln_gamma, singular_left=True,
                         description="log-gamma")
    log_2pi = math.log(2.0 * math.pi)
    c = log_2pi + 0.57721566490153286061
    a0 = fourier_coeff_numeric(spec, 0, "cosine")
    assert abs(a0.value - log_2pi) <= a0.abs_err + 1e-12
    for n in (1, 2, 5):
        a = fourier_coeff_numeric(spec, n, "cosine")
        b = fourier_coeff_numeric(spec, n, "sine")
        assert abs(a.value - 0.5 / n) <= a.abs_err + 1e-12
        want_b = (c + math.log(n)) / (math.pi * n)
        assert abs(b.value - want_b) <= b.abs_err + 1e-12


def test_fourier_coeff_numeric_arguments():
    spec = IntegrandSpec(lambda x: x)
    with pytest.raises(ArgumentError):
        fourier_coeff_numeric(spec, 1, "tangent")
    with pytest.raises(ArgumentError):
        fourier_coeff_numeric(spec, -1, "cosine")
    with pytest.raises(ArgumentError):
        fourier_coeff_numeric(spec, 0, "sine")


def test_integrate_argument_ranges():
    spec = IntegrandSpec(lambda x: x)
    with pytest.raises(ArgumentError):
        integrate(spec, 1e-14)
    with pytest.raises(ArgumentError):
        integrate(spec, 1e-10, 0)
    with pytest.raises(ArgumentError):
        integrate(spec, 1e-10, 15)


def test_convergence_error_carries_best():
    # a kink integrand converges too slowly for two levels
    spec = IntegrandSpec(lambda x: abs(x - 1.0 / math.pi))
    with pytest.raises(ConvergenceError) as info:
        integrate(spec, 1e-13, 2)
    best = info.value.best
    want = 0.5 - 1.0 / math.pi + 1.0 / math.pi ** 2
    # the partial result must stay honest about its own accuracy
    assert abs(best.value - want) < 3.0 * best.abs_err
    assert best.abs_err > 1e-13
