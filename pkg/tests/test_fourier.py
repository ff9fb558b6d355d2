import math

import pytest

from specfn import (ArgumentError, DomainError, clausen2, connon_assemble,
                    constants, kummer_series, ln_barnes_g, ln_gamma,
                    logbarnes_series, logsin_series, parseval_pair,
                    series_by_label, series_integrand, xclausen_series,
                    xlgamma_cos_from_kummer, xlgamma_series,
                    xsin_xcos_coeffs)

ZETA3 = 1.2020569031595942854
PI = math.pi


def test_kummer_coefficient_formulas():
    c = constants()
    ser = kummer_series(16)
    assert abs(ser.a0 - c.log_2pi) < 5e-16
    for n in (1, 2, 7, 16):
        assert ser.a[n] == 0.5 / n
        want = (c.c_const + math.log(n)) / (PI * n)
        assert abs(ser.b[n] - want) < 5e-16
    assert ser.a[0] == 0.0 and ser.b[0] == 0.0
    assert ser.n_terms == 16


def test_xlgamma_coefficient_values():
    c = constants()
    ser = xlgamma_series(8)
    # the n = 1 sine coefficient collapses to gamma/(2 pi)
    assert abs(ser.b[1] - c.euler_gamma / (2.0 * PI)) < 5e-16
    # constant term equals the first power-weighted moment
    assert abs(0.5 * ser.a0 - 0.21071478956855210834) < 5e-15


def test_logbarnes_constant_term():
    c = constants()
    want = 1.0 / 12.0 - 2.0 * c.log_glaisher - 0.25 * c.log_2pi
    ser = logbarnes_series(4)
    assert abs(0.5 * ser.a0 - want) < 5e-16
    # equals the mean of the function itself
    assert abs(0.5 * ser.a0 - (-0.87364488733657156265)) < 5e-15


def test_simple_series_formulas():
    logsin = logsin_series(5)
    assert abs(logsin.a0 + 2.0 * math.log(2.0)) < 5e-16
    assert logsin.a[3] == -1.0 / 3.0
    assert logsin.b[3] == 0.0
    xcl = xclausen_series(4)
    assert abs(xcl.a0 + ZETA3 / PI) < 5e-16
    # H_2/4 - 3/16, all over pi
    assert abs(xcl.a[2] - (1.5 / 4.0 - 3.0 / 16.0) / PI) < 5e-16
    assert xcl.b[2] == 1.0 / 8.0
    b2 = series_by_label("b2", 4)
    assert abs(b2.a[2] - 1.0 / (4.0 * PI ** 2)) < 5e-17
    assert b2.a0 == 0.0 and b2.b[2] == 0.0


def test_series_label_errors():
    with pytest.raises(ArgumentError):
        series_by_label("nope", 4)
    with pytest.raises(ArgumentError):
        series_by_label("kummer", 0)
    with pytest.raises(ArgumentError):
        series_by_label("kummer", 2.0)
    with pytest.raises(ArgumentError):
        series_integrand("nope")


@pytest.mark.parametrize("label", ["kummer", "xlgamma", "logbarnes",
                                   "logsin", "xclausen", "b2"])
def test_partial_sums_converge_pointwise(label):
    targets = {
        "kummer": ln_gamma,
        "xlgamma": lambda x: x * ln_gamma(x),
        "logbarnes": ln_barnes_g,
        "logsin": lambda x: math.log(math.sin(PI * x)),
        "xclausen": lambda x: x * clausen2(2.0 * PI * x),
        "b2": lambda x: x * x - x + 1.0 / 6.0,
    }
    f = targets[label]
    small = series_by_label(label, 10_000)
    large = series_by_label(label, 100_000)
    xs = (0.1, 0.25, 0.5, 0.7, 0.9)
    worst_small = max(abs(small.partial_sum(x) - f(x)) for x in xs)
    worst_large = max(abs(large.partial_sum(x) - f(x)) for x in xs)
    assert worst_small < 5e-3
    assert worst_large < worst_small


@pytest.mark.parametrize("label", ["kummer", "xlgamma", "logbarnes",
                                   "logsin", "xclausen", "b2"])
def test_coefficients_do_not_grow(label):
    ser = series_by_label(label, 100_000)
    for lo, hi in ((10, 100), (100, 1_000), (1_000, 10_000),
                   (10_000, 100_000)):
        assert abs(ser.a[hi]) < 10.0 * abs(ser.a[lo]) + 1e-300
        assert abs(ser.b[hi]) < 10.0 * abs(ser.b[lo]) + 1e-300


def test_cross_coefficient_table():
    # x cos(2 pi n x) against cos(2 pi m x) and sin(2 pi m x)
    r = xsin_xcos_coeffs(2, 1)
    assert r.cos_a == 0.0
    assert abs(r.cos_b - 1.0 / (3.0 * PI)) < 5e-17
    assert abs(r.sin_a + 2.0 / (3.0 * PI)) < 5e-17
    assert r.sin_b == 0.0
    d = xsin_xcos_coeffs(3, 3)
    assert d.cos_a == 0.5
    assert abs(d.cos_b + 1.0 / (12.0 * PI)) < 5e-17
    assert abs(d.sin_a + 1.0 / (12.0 * PI)) < 5e-17
    assert d.sin_b == 0.5
    z = xsin_xcos_coeffs(0, 0)
    assert z.cos_a == 1.0 and z.sin_a == 0.0 and z.sin_b == 0.0
    m0 = xsin_xcos_coeffs(2, 0)
    assert m0.cos_a == 0.0
    assert abs(m0.sin_a + 1.0 / (2.0 * PI)) < 5e-17
    with pytest.raises(ArgumentError):
        xsin_xcos_coeffs(-1, 0)
    with pytest.raises(ArgumentError):
        xsin_xcos_coeffs(0, -1)


def test_cross_table_against_quadrature():
    from specfn import IntegrandSpec, fourier_coeff_numeric
    for n, m in ((1, 2), (2, 2), (3, 1)):
        spec = IntegrandSpec(lambda x, n=n: x * math.cos(2.0 * PI * n * x))
        got = fourier_coeff_numeric(spec, m, "sine")
        want = xsin_xcos_coeffs(n, m).cos_b
        assert abs(got.value - want) <= got.abs_err + 1e-12


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
def test_xlgamma_cosine_from_kummer_route(n):
    ser = xlgamma_series(8)
    rec = xlgamma_cos_from_kummer(n)
    assert abs(rec.value - ser.a[n]) < 1e-8
    assert abs(rec.value - ser.a[n]) <= 10.0 * (rec.abs_err + 1e-15)


def test_xlgamma_cos_from_kummer_arguments():
    with pytest.raises(ArgumentError):
        xlgamma_cos_from_kummer(0)
    with pytest.raises(ArgumentError):
        xlgamma_cos_from_kummer(10, 20)


def test_parseval_pair_symmetric_and_exact():
    k = kummer_series(100_000)
    ls = logsin_series(100_000)
    p_kl = parseval_pair(k, ls, 100_000)
    p_lk = parseval_pair(ls, k, 100_000)
    assert p_kl.value == p_lk.value
    assert p_kl.abs_err == p_lk.abs_err
    # squared log-sine mean: pi^2/12 + log^2 2
    p_ll = parseval_pair(ls, ls, 100_000)
    want = PI ** 2 / 12.0 + math.log(2.0) ** 2
    assert abs(p_ll.value - want) <= p_ll.abs_err + 1e-10
    # log-gamma times log-sine, known in closed form
    want_kl = -0.5 * math.log(2.0) * math.log(2.0 * PI) - PI ** 2 / 24.0
    assert abs(p_kl.value - want_kl) <= p_kl.abs_err + 1e-9


def test_parseval_pair_arguments():
    k = kummer_series(64)
    with pytest.raises(ArgumentError):
        parseval_pair(k, k, 8)
    with pytest.raises(ArgumentError):
        parseval_pair(k, k, 128)


def test_connon_assemble_matches_direct():
    for x in (0.25, 0.5, 0.75):
        got = connon_assemble(x)
        want = ln_barnes_g(x)
        assert abs(got - want) < 1e-5
    with pytest.raises(DomainError):
        connon_assemble(0.0)
    with pytest.raises(DomainError):
        connon_assemble(1.0)
    with pytest.raises(ArgumentError):
        connon_assemble(0.5, 0)
    # truncation error shrinks with more terms
    target = ln_barnes_g(0.25)
    crude = abs(connon_assemble(0.25, 100) - target)
    fine = abs(connon_assemble(0.25, 10_000) - target)
    assert fine < crude
