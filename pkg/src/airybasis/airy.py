"""Real-axis evaluation of Ai, Ai' and their negative zeros.

Three regimes, chosen by |x|:

* |x| <= 6.6           Maclaurin pair (Abramowitz & Stegun 10.4.2-10.4.5),

      Ai(x) = c1 f(x) - c2 g(x),  c1 = 3^(-2/3)/Gamma(2/3),
                                  c2 = 3^(-1/3)/Gamma(1/3),

  summed with compensated accumulation.  Terms are cut when they fall
  below 1e-18 of the running sum.
* x > 6.6              exponential expansion DLMF 9.7.5/9.7.6 in
  zeta = (2/3) x^(3/2), truncated at the smallest term.
* x < -6.6             oscillatory expansion DLMF 9.7.9/9.7.10.

Every evaluation carries a conservative absolute error bound built from
the truncation tail plus a rounding term; the bound stays below 1e-10
for |x| <= 50.  The regime switch sits at 6.6 rather than farther out
because beyond ~7 the Maclaurin pair loses too much to cancellation on
both signs of x, while below ~6.5 the oscillatory expansion bottoms out
above 1e-10.

Zeros a_n of Ai and a'_n of Ai' come from the asymptotic seeds
T(3 pi (4n-1)/8) and U(3 pi (4n-3)/8) (DLMF 9.9.18/9.9.19) polished by
Newton iteration, using Ai'' = x Ai for the Ai' zeros.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, PrecisionError

__all__ = [
    "GAMMA_ONE_THIRD",
    "GAMMA_TWO_THIRDS",
    "AI_AT_ZERO",
    "AIP_AT_ZERO",
    "AiryEval",
    "ZeroTable",
    "airy_ai",
    "airy_ai_prime",
    "ai_values",
    "ai_prime_values",
    "airy_zero",
    "airy_prime_zero",
    "zero_table",
]

# 20 significant digits; everything downstream is derived from these.
GAMMA_ONE_THIRD = 2.6789385347077476337
GAMMA_TWO_THIRDS = 1.3541179394264004169

AI_AT_ZERO = 3.0 ** (-2.0 / 3.0) / GAMMA_TWO_THIRDS          # Ai(0)
AIP_AT_ZERO = -(3.0 ** (-1.0 / 3.0)) / GAMMA_ONE_THIRD       # Ai'(0)

_C1 = AI_AT_ZERO
_C2 = -AIP_AT_ZERO

_X_SWITCH = 6.6
_EPS = float(np.finfo(float).eps)
_TERM_CUT = 1e-18
_SERIES_MAX_TERMS = 48
_ASYM_MAX_TERMS = 40
_SQRT_PI = float(np.sqrt(np.pi))


@dataclass(frozen=True)
class AiryEval:
    """A function value plus a conservative absolute error bound."""

    value: float
    abs_error_bound: float

    def __post_init__(self):
        if not np.isfinite(self.value):
            raise DomainError("non-finite Airy value")
        if not (self.abs_error_bound >= 0.0):
            raise DomainError("error bound must be non-negative")


def _series_eval(x):
    """Maclaurin f/g pair on |x| <= _X_SWITCH.

    Returns (ai, aip, bound_ai, bound_aip).  The rounding part of the
    bound tracks sum_k (k+3)|t_k| per series, which dominates both the
    term-generation error (~k eps |t_k|) and the compensated-summation
    residue.
    """
    x = np.asarray(x, dtype=float)
    z3 = x * x * x

    f = np.ones_like(x)
    g = x.copy()
    fp = np.zeros_like(x)          # f' series starts at k = 1
    gp = np.ones_like(x)

    tf = np.ones_like(x)
    tg = x.copy()
    tfp = 0.5 * x * x
    tgp = np.ones_like(x)
    fp = fp + tfp
    # compensation carries
    cf = np.zeros_like(x)
    cg = np.zeros_like(x)
    cfp = np.zeros_like(x)
    cgp = np.zeros_like(x)
    # weighted absolute-term sums for the rounding bound
    wf = np.abs(tf) * 3.0
    wg = np.abs(tg) * 3.0
    wfp = np.abs(tfp) * 4.0
    wgp = np.abs(tgp) * 3.0

    def kahan(s, c, t):
        y = t - c
        snew = s + y
        c = (snew - s) - y
        return snew, c

    for k in range(_SERIES_MAX_TERMS):
        tf = tf * z3 / ((3 * k + 2) * (3 * k + 3))
        tg = tg * z3 / ((3 * k + 3) * (3 * k + 4))
        kk = k + 1
        tfp = tfp * z3 / ((3 * kk) * (3 * kk + 2))
        tgp = tgp * z3 / ((3 * k + 1) * (3 * k + 3))

        f, cf = kahan(f, cf, tf)
        g, cg = kahan(g, cg, tg)
        fp, cfp = kahan(fp, cfp, tfp)
        gp, cgp = kahan(gp, cgp, tgp)

        wf += (k + 4.0) * np.abs(tf)
        wg += (k + 4.0) * np.abs(tg)
        wfp += (k + 5.0) * np.abs(tfp)
        wgp += (k + 4.0) * np.abs(tgp)

        scale = np.maximum(np.abs(f), 1.0)
        if (
            np.all(np.abs(tf) <= _TERM_CUT * scale)
            and np.all(np.abs(tg) <= _TERM_CUT * scale)
            and np.all(np.abs(tfp) <= _TERM_CUT * scale)
            and np.all(np.abs(tgp) <= _TERM_CUT * scale)
        ):
            break

    ai = _C1 * f - _C2 * g
    aip = _C1 * fp - _C2 * gp
    tail = np.abs(tf) + np.abs(tg)
    tail_p = np.abs(tfp) + np.abs(tgp)
    bound_ai = _EPS * (_C1 * wf + _C2 * wg + 4.0 * np.abs(ai)) + tail
    bound_aip = _EPS * (_C1 * wfp + _C2 * wgp + 4.0 * np.abs(aip)) + tail_p
    return ai, aip, bound_ai, bound_aip


def _asym_coefficient_tables(n_terms):
    """u_k and v_k of DLMF 9.7(ii), v_k = (6k+1)/(1-6k) u_k."""
    u = np.empty(n_terms)
    v = np.empty(n_terms)
    u[0] = 1.0
    v[0] = 1.0
    for k in range(n_terms - 1):
        u[k + 1] = u[k] * (6 * k + 1) * (6 * k + 5) / (72.0 * (k + 1))
        v[k + 1] = u[k + 1] * (6 * (k + 1) + 1) / (1.0 - 6 * (k + 1))
    return u, v


_U_TAB, _V_TAB = _asym_coefficient_tables(_ASYM_MAX_TERMS)


def _asym_sum(inv_zeta, coeff, alternate=True):
    """sum_k s_k coeff[k] inv_zeta^k truncated at the smallest term.

    Per element the sum stops (freezes) once terms start growing, and
    the first frozen/omitted term magnitude is the tail bound.
    """
    shape = inv_zeta.shape
    total = np.zeros(shape)
    power = np.ones(shape)
    prev_mag = np.full(shape, np.inf)
    active = np.ones(shape, dtype=bool)
    tail = np.zeros(shape)
    for k in range(len(coeff)):
        term = coeff[k] * power
        mag = np.abs(term)
        stop = active & (mag >= prev_mag)
        tail = np.where(stop, mag, tail)
        active = active & ~stop
        sign = (-1.0) ** k if alternate else 1.0
        total = np.where(active, total + sign * term, total)
        small = active & (mag <= _TERM_CUT * np.maximum(np.abs(total), 1e-300))
        tail = np.where(small, mag, tail)
        active = active & ~small
        prev_mag = np.where(active, mag, prev_mag)
        power = power * inv_zeta
        if not active.any():
            break
    # anything still active after the table: tail = last term magnitude
    tail = np.where(active, prev_mag, tail)
    return total, tail


def _asym_pos_eval(x):
    """Exponential expansion for x > _X_SWITCH."""
    x = np.asarray(x, dtype=float)
    zeta = (2.0 / 3.0) * x ** 1.5
    inv = 1.0 / zeta
    s_ai, tail_ai = _asym_sum(inv, _U_TAB)
    s_aip, tail_aip = _asym_sum(inv, _V_TAB)
    root4 = x ** 0.25
    pref = np.exp(-zeta) / (2.0 * _SQRT_PI * root4)
    pref_p = root4 * np.exp(-zeta) / (2.0 * _SQRT_PI)
    ai = pref * s_ai
    aip = -pref_p * s_aip
    # exp(-zeta) feels the ~eps relative rounding of zeta as eps*zeta
    arg_rnd = (zeta + 8.0) * _EPS
    bound_ai = pref * (tail_ai + arg_rnd * np.abs(s_ai))
    bound_aip = pref_p * (tail_aip + arg_rnd * np.abs(s_aip))
    return ai, aip, bound_ai, bound_aip


def _asym_neg_eval(x):
    """Oscillatory expansion for x < -_X_SWITCH."""
    z = -np.asarray(x, dtype=float)
    zeta = (2.0 / 3.0) * z ** 1.5
    theta = zeta - 0.25 * np.pi
    inv2 = 1.0 / (zeta * zeta)

    u_even = _U_TAB[0::2]
    u_odd = _U_TAB[1::2]
    v_even = _V_TAB[0::2]
    v_odd = _V_TAB[1::2]

    p_sum, tail_p = _asym_sum(inv2, u_even)
    q_sum, tail_q = _asym_sum(inv2, u_odd)
    r_sum, tail_r = _asym_sum(inv2, v_even)
    s_sum, tail_s = _asym_sum(inv2, v_odd)
    q_sum = q_sum / zeta
    s_sum = s_sum / zeta
    tail_q = tail_q / zeta
    tail_s = tail_s / zeta

    root4 = z ** 0.25
    amp = 1.0 / (_SQRT_PI * root4)
    amp_p = root4 / _SQRT_PI
    ct = np.cos(theta)
    st = np.sin(theta)

    ai = amp * (ct * p_sum + st * q_sum)
    aip = amp_p * (st * r_sum - ct * s_sum)
    # phase rounding: zeta carries ~eps relative error, felt as eps*zeta
    # absolute phase error in the trig factors
    phase_err = 2.0 * _EPS * zeta
    bound_ai = amp * (tail_p + tail_q + phase_err + 8.0 * _EPS)
    bound_aip = amp_p * (tail_r + tail_s + phase_err + 8.0 * _EPS)
    return ai, aip, bound_ai, bound_aip


def _evaluate_all(x):
    """Vectorized Ai, Ai' with bounds over any mix of regimes."""
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)):
        raise DomainError("Airy argument must be finite")
    scalar = x.ndim == 0
    x = np.atleast_1d(x)

    ai = np.empty_like(x)
    aip = np.empty_like(x)
    b_ai = np.empty_like(x)
    b_aip = np.empty_like(x)

    mid = np.abs(x) <= _X_SWITCH
    pos = x > _X_SWITCH
    neg = x < -_X_SWITCH

    if mid.any():
        ai[mid], aip[mid], b_ai[mid], b_aip[mid] = _series_eval(x[mid])
    if pos.any():
        ai[pos], aip[pos], b_ai[pos], b_aip[pos] = _asym_pos_eval(x[pos])
    if neg.any():
        ai[neg], aip[neg], b_ai[neg], b_aip[neg] = _asym_neg_eval(x[neg])

    if scalar:
        return ai[0], aip[0], b_ai[0], b_aip[0]
    return ai, aip, b_ai, b_aip


def ai_values(x):
    """Ai sampled over an array; the workhorse for grid evaluation."""
    return _evaluate_all(x)[0]


def ai_prime_values(x):
    """Ai' sampled over an array."""
    return _evaluate_all(x)[1]


def airy_ai(x):
    """Evaluate Ai(x) with a conservative absolute error bound.

    The bound stays at or below 1e-10 throughout |x| <= 50.
    """
    v, _, b, _ = _evaluate_all(float(x))
    return AiryEval(value=float(v), abs_error_bound=float(b))


def airy_ai_prime(x):
    """Evaluate Ai'(x) with a conservative absolute error bound."""
    _, v, _, b = _evaluate_all(float(x))
    return AiryEval(value=float(v), abs_error_bound=float(b))


# --- negative zeros ---------------------------------------------------------

# T and U correction series in t^(-2) (DLMF 9.9.18/9.9.19)
_T_COEFFS = (5.0 / 48.0, -5.0 / 36.0, 77125.0 / 82944.0, -108056875.0 / 6967296.0)
_U_COEFFS = (-7.0 / 48.0, 35.0 / 288.0, -181223.0 / 207360.0, 18683371.0 / 1244160.0)


def _seed(t, coeffs):
    """t^(2/3) (1 + sum coeffs[j] t^(-2j-2)), terms kept while shrinking."""
    acc = 1.0
    prev = abs(acc)
    tp = t ** -2.0
    power = tp
    for c in coeffs:
        term = c * power
        if abs(term) >= prev:
            break
        acc += term
        prev = abs(term)
        power *= tp
    return -(t ** (2.0 / 3.0)) * acc


_NEWTON_MAX_ITER = 50
_NEWTON_TOL = 1e-12


def airy_zero(n):
    """n-th negative zero a_n of Ai (a_1 ~ -2.3381), n >= 1."""
    if int(n) != n or n < 1:
        raise DomainError("zero index must be a positive integer")
    n = int(n)
    x = _seed(3.0 * np.pi * (4 * n - 1) / 8.0, _T_COEFFS)
    for _ in range(_NEWTON_MAX_ITER):
        ai, aip, _, _ = _evaluate_all(x)
        step = ai / aip
        x -= step
        if abs(step) < _NEWTON_TOL:
            return float(x)
    raise PrecisionError(f"Newton iteration for a_{n} did not converge")


def airy_prime_zero(n):
    """n-th negative zero a'_n of Ai' (a'_1 ~ -1.0188), n >= 1.

    Newton derivative via Ai''(x) = x Ai(x).
    """
    if int(n) != n or n < 1:
        raise DomainError("zero index must be a positive integer")
    n = int(n)
    x = _seed(3.0 * np.pi * (4 * n - 3) / 8.0, _U_COEFFS)
    for _ in range(_NEWTON_MAX_ITER):
        ai, aip, _, _ = _evaluate_all(x)
        step = aip / (x * ai)
        x -= step
        if abs(step) < _NEWTON_TOL:
            return float(x)
    raise PrecisionError(f"Newton iteration for a'_{n} did not converge")


@dataclass(frozen=True)
class ZeroTable:
    """First n zeros of Ai and Ai', interlacing-checked.

    ai_zeros[k] = a_{k+1}, ai_prime_zeros[k] = a'_{k+1}, both strictly
    decreasing with a'_1 > a_1 > a'_2 > a_2 > ...
    """

    ai_zeros: np.ndarray
    ai_prime_zeros: np.ndarray

    def __post_init__(self):
        a = self.ai_zeros
        ap = self.ai_prime_zeros
        if len(a) != len(ap):
            raise DomainError("zero tables must have equal length")
        merged = np.empty(2 * len(a))
        merged[0::2] = ap
        merged[1::2] = a
        if not np.all(np.diff(merged) < 0.0):
            raise PrecisionError("zero table violates interlacing")


def zero_table(n_max):
    """Tabulate a_1..a_{n_max} and a'_1..a'_{n_max}."""
    if int(n_max) != n_max or n_max < 1:
        raise DomainError("n_max must be a positive integer")
    n_max = int(n_max)
    a = np.array([airy_zero(k) for k in range(1, n_max + 1)])
    ap = np.array([airy_prime_zero(k) for k in range(1, n_max + 1)])
    return ZeroTable(ai_zeros=a, ai_prime_zeros=ap)
