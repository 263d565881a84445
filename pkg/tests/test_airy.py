"""Evaluator and zero-finder checks against high-precision references."""

import mpmath as mp
import numpy as np
import pytest

from airybasis.airy import (AI_AT_ZERO, AIP_AT_ZERO, ai_prime_values,
                            ai_values, airy_ai, airy_ai_prime, airy_prime_zero,
                            airy_zero, zero_table)
from airybasis.errors import DomainError

mp.mp.dps = 30

# anchors frozen from a 25-digit run
A_ZEROS = {
    1: -2.33810741045976704,
    2: -4.08794944413097062,
    3: -5.52055982809555106,
    4: -6.786708090071759,
    5: -7.94413358712085312,
    10: -12.8287767528657572,
    25: -23.8715644555359186,
}
AP_ZEROS = {
    1: -1.01879297164747109,
    2: -3.24819758217983654,
    3: -4.82009921117873564,
    4: -6.16330735563948655,
    5: -7.37217725504777018,
    10: -12.3847883718457473,
    25: -23.5485262959288016,
}


def test_values_at_zero():
    assert airy_ai(0.0).value == AI_AT_ZERO
    assert airy_ai_prime(0.0).value == AIP_AT_ZERO
    assert abs(AI_AT_ZERO - 0.355028053887817239) < 1e-16
    assert abs(AIP_AT_ZERO - (-0.258819403792806798)) < 1e-16


@pytest.mark.parametrize("x,ref", [
    (1.5, 0.0717494970081054097),
    (-6.6, -0.163526462727729839),
    (8.0, 4.69220761609923163e-8),
])
def test_spot_values(x, ref):
    assert abs(airy_ai(x).value - ref) < 1e-12


def test_sweep_against_mpmath():
    # spans both series and asymptotic regimes, including the seams
    xs = np.concatenate([
        np.linspace(-30.0, 12.0, 337),
        np.array([-6.6 - 1e-9, -6.6 + 1e-9, 6.6 - 1e-9, 6.6 + 1e-9]),
        np.linspace(12.0, 80.0, 35),
    ])
    ai = ai_values(xs)
    aip = ai_prime_values(xs)
    for i, x in enumerate(xs):
        ref = float(mp.airyai(mp.mpf(float(x))))
        refp = float(mp.airyai(mp.mpf(float(x)), 1))
        assert abs(ai[i] - ref) < 1e-10, f"Ai({x})"
        assert abs(aip[i] - refp) < 1e-10, f"Ai'({x})"


def test_error_bound_is_honest():
    xs = np.linspace(-25.0, 25.0, 1501)
    for x in xs:
        r = airy_ai(float(x))
        ref = float(mp.airyai(mp.mpf(float(x))))
        assert abs(r.value - ref) <= r.abs_error_bound + 1e-16, f"x={x}"
        rp = airy_ai_prime(float(x))
        refp = float(mp.airyai(mp.mpf(float(x)), 1))
        assert abs(rp.value - refp) <= rp.abs_error_bound + 1e-16, f"x={x}"


def test_error_bound_is_useful():
    xs = np.linspace(-12.0, 12.0, 241)
    assert max(airy_ai(float(x)).abs_error_bound for x in xs) < 1e-9


def test_ode_residual():
    # y'' = x y on a window covering both regimes; 5-point stencil
    x = np.arange(-10.0, 5.0, 0.015)
    v = ai_values(x)
    h = 0.015
    lap = (-v[4:] + 16 * v[3:-1] - 30 * v[2:-2] + 16 * v[1:-3] - v[:-4]) / (
        12 * h * h
    )
    assert np.max(np.abs(lap - x[2:-2] * v[2:-2])) < 1e-6


def test_derivative_consistency():
    # 4th-order difference of Ai tracks Ai' well below stencil error
    x = np.arange(-8.0, 4.0, 0.01)
    v = ai_values(x)
    d = (-v[4:] + 8 * v[3:-1] - 8 * v[1:-3] + v[:-4]) / (12 * 0.01)
    assert np.max(np.abs(d - ai_prime_values(x[2:-2]))) < 1e-6


@pytest.mark.parametrize("k", sorted(A_ZEROS))
def test_ai_zeros(k):
    assert abs(airy_zero(k) - A_ZEROS[k]) < 1e-12


@pytest.mark.parametrize("k", sorted(AP_ZEROS))
def test_aiprime_zeros(k):
    assert abs(airy_prime_zero(k) - AP_ZEROS[k]) < 1e-12


def test_zeros_against_mpmath_deep():
    for k in (40, 50):
        assert abs(airy_zero(k) - float(mp.airyaizero(k))) < 1e-11
        assert abs(
            airy_prime_zero(k) - float(mp.airyaizero(k, derivative=1))
        ) < 1e-11


def test_zero_table_interlacing():
    zt = zero_table(50)
    a, ap = zt.ai_zeros, zt.ai_prime_zeros
    assert len(a) == len(ap) == 50
    for k in range(49):
        assert ap[k] > a[k] > ap[k + 1]


def test_zero_function_values():
    zt = zero_table(30)
    assert max(abs(airy_ai(z).value) for z in zt.ai_zeros) < 1e-12
    assert max(abs(airy_ai_prime(z).value) for z in zt.ai_prime_zeros) < 1e-12


def test_vector_scalar_agree():
    xs = np.array([-7.25, -0.4, 3.3, 9.1])
    vec = ai_values(xs)
    for i, x in enumerate(xs):
        assert vec[i] == airy_ai(float(x)).value


@pytest.mark.parametrize("bad", [np.nan, np.inf, -np.inf])
def test_non_finite_rejected(bad):
    with pytest.raises(DomainError):
        airy_ai(bad)
    with pytest.raises(DomainError):
        ai_values(np.array([0.0, bad]))


@pytest.mark.parametrize("bad", [0, -1, 2.5])
def test_bad_zero_index(bad):
    with pytest.raises(DomainError):
        airy_zero(bad)
    with pytest.raises(DomainError):
        airy_prime_zero(bad)
