import math

import pytest

from specfn import (ArgumentError, DomainError, TailPolicy, harmonic,
                    harmonic_zeta, harmonic_zeta_prime2, lemma1_sum_a,
                    lemma1_sum_b, log_rational_sum, moment_E, t_n, v_sum,
                    x2z_moment, z_function)
from specfn.series import _t_table

ZETA3 = 1.2020569031595942854

# slow log-weighted sums, evaluated once to 40 digits by brute force plus
# high-order tail corrections
T_TABLE = {
    1: 1.0231387264279392,
    2: 0.9204917248059518,
    3: 0.6949584642969742,
    4: 0.5497103929876191,
    5: 0.45276883696273,
    8: 0.29436963788122383,
    16: 0.1513769821636755,
    32: 0.07656670012109093,
    64: 0.03846055791548725,
}


@pytest.mark.parametrize("n,want", sorted(T_TABLE.items()))
def test_t_n_values(n, want):
    got = t_n(n)
    assert abs(got.value - want) <= got.abs_err + 5e-15
    assert got.abs_err < 1e-13


def test_t_n_policy_insensitive():
    # the tail correction must absorb any reasonable cutoff change
    loose = TailPolicy(direct_terms=5_000, em_corrections=4)
    tight = TailPolicy(direct_terms=400_000, em_corrections=6)
    for n in (1, 3, 17):
        a = t_n(n, loose).value
        b = t_n(n, tight).value
        assert abs(a - b) < 5e-14


def test_t_table_matches_scalar():
    tab = _t_table(6000)
    for n in (1, 2, 3, 255, 256, 257, 4095, 4096, 4097, 5000, 6000):
        assert abs(tab[n] - t_n(n).value) < 1e-13


def test_t_n_rejects_bad_arguments():
    with pytest.raises(ArgumentError):
        t_n(0)
    with pytest.raises(ArgumentError):
        t_n(2.0)
    with pytest.raises(ArgumentError):
        t_n(True)


@pytest.mark.parametrize("n", [1, 2, 3, 7, 20])
def test_lemma1_closed_forms(n):
    assert abs(lemma1_sum_a(n) - 0.75 / n ** 2) < 1e-12
    want_b = 1.25 / n ** 3 - harmonic(n) / n ** 2
    assert abs(lemma1_sum_b(n) - want_b) < 1e-12


def test_harmonic_zeta_known_values():
    # Euler: sum H_n/n^2 = 2 zeta(3); sum H_n/n^3 = pi^4/72
    h2 = harmonic_zeta(2.0)
    h3 = harmonic_zeta(3.0)
    h4 = harmonic_zeta(4.0)
    assert abs(h2.value - 2.0 * ZETA3) <= h2.abs_err + 5e-15
    assert abs(h3.value - math.pi ** 4 / 72.0) <= h3.abs_err + 5e-15
    # zeta(2)zeta(3)-based closed form: 3 zeta(5) - pi^2 zeta(3)/6
    assert abs(h4.value - 1.1334789151328136608) <= h4.abs_err + 5e-15
    with pytest.raises(DomainError):
        harmonic_zeta(1.0)


def test_harmonic_zeta_prime2():
    zh = harmonic_zeta_prime2()
    assert abs(zh.value - 2.6238659662902015) < 5e-10
    assert zh.abs_err < 1e-10


def test_z_function():
    z5 = z_function(0.5)
    z9 = z_function(0.9)
    assert abs(z5.value - 0.044197249829307463372) <= z5.abs_err + 5e-16
    assert abs(z9.value - 0.9246243311070612794) <= z9.abs_err + 5e-15
    assert z_function(0.0).value == 0.0
    # even in t
    assert z_function(-0.5).value == z5.value
    for bad in (1.0, -1.0, 1.5, float("inf"), float("nan")):
        with pytest.raises(DomainError):
            z_function(bad)


def test_v_sum():
    v = v_sum(moment_E)
    assert abs(v.value - 0.02800095309253711753) <= v.abs_err + 1e-12
    assert v.abs_err < 1e-6


def test_x2z_moment():
    m = x2z_moment()
    assert abs(m.value - 0.24281852808164591755) <= m.abs_err + 5e-15
    assert m.abs_err < 1e-10


def test_log_rational_sum():
    s = log_rational_sum()
    assert abs(s.value - 0.023704367290373841748) <= s.abs_err + 5e-15


def test_tail_policy_validation():
    with pytest.raises(ArgumentError):
        TailPolicy(direct_terms=0)
    with pytest.raises(ArgumentError):
        TailPolicy(em_corrections=7)
    with pytest.raises(ArgumentError):
        TailPolicy(em_corrections=-1)
    p = TailPolicy(direct_terms=1234, em_corrections=2)
    assert p.direct_terms == 1234


def test_abs_err_is_positive_everywhere():
    # every ApproxValue producer must report a nonzero error bound
    values = [t_n(3), harmonic_zeta(2.5), z_function(0.25), x2z_moment(),
              log_rational_sum(), harmonic_zeta_prime2()]
    for v in values:
        assert v.abs_err > 0.0
        assert math.isfinite(v.value)
