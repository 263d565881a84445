"""Acceptance gate: ten criteria, one pass/fail line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines.
Criteria 2, 7 and 10 contain clauses the implementation cannot meet;
each failure message states the measured value and the margin by which
the stated tolerance is missed.  See notes in the repository for the
analysis behind each one.
"""

import csv
import time

import mpmath
import numpy as np
import pytest

from airybasis.airy import airy_ai, airy_prime_zero, airy_zero
from airybasis.cli import main
from airybasis.continuum import DisplacedAiryParams, displaced_airy
from airybasis.dynamics import (GaussianPacketParams, evolve, gaussian_packet,
                                project, trajectory)
from airybasis.grin import (GrinMedium, WaveletParams, airy_wavelet,
                            intensity_map)
from airybasis.oracle import build_hamiltonian, diagonalize
from airybasis.quadrature import make_grid
from airybasis.spectrum import build_basis
from airybasis.statemaps import (airy_from_momentum, fock_position_state,
                                 quadrature_expectation)

PUBLISHED_LEVELS = [0.808616, 1.855757, 2.578096, 3.244607, 3.825715, 4.381671]


def _report(num, ok, detail):
    print(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
    return f"criterion {num}: {detail}"


def test_criterion_01_eigenvalue_reproduction(tmp_path):
    out = tmp_path / "eigs.csv"
    t0 = time.perf_counter()
    code = main(["eigs", "--out", str(out)])
    elapsed = time.perf_counter() - t0
    with open(out, newline="") as fh:
        rows = list(csv.reader(fh))[1:]
    devs = [abs(float(r[2]) - ref) for r, ref in zip(rows, PUBLISHED_LEVELS)]
    ok = code == 0 and len(rows) == 6 and max(devs) <= 5e-6 and elapsed < 1.0
    msg = _report(1, ok,
                  f"eigs E_0..E_5 max deviation {max(devs):.1e} "
                  f"(tol 5e-6), {elapsed:.2f} s")
    assert ok, msg


def test_criterion_02_zero_table_consistency():
    first = 2.0 ** (-2.0 / 3.0) * airy_zero(1)
    dev_a = abs(first - (-1.472910))
    second = -(0.5 ** (1.0 / 3.0)) * airy_prime_zero(1)
    dev_b = abs(second - 0.808616)
    ok = dev_a <= 5e-6 and dev_b <= 5e-6
    msg = _report(
        2, ok,
        f"2^(-2/3) a_1 = {first:.10f}, cited -1.472910, off {dev_a:.2e} "
        f"(tol 5e-6); -(1/2)^(1/3) a'_1 off {dev_b:.2e} (tol 5e-6). "
        "The first identity cannot hold: the cited -1.472910 agrees "
        "with the true -1.4729154 only through the fifth decimal, so "
        "its trailing 0 is a typo for 5 and the 5e-6 tolerance sits "
        "just inside the resulting 5.4e-6 gap."
    )
    assert ok, msg


def test_criterion_03_orthonormality():
    t0 = time.perf_counter()
    grid = make_grid(-40.0, 40.0, 8001)
    basis = build_basis(1.0, 20, grid)
    psi = basis.psi_matrix
    gram = (psi * grid.weights) @ psi.T
    dev = float(np.max(np.abs(gram - np.eye(20))))
    elapsed = time.perf_counter() - t0
    ok = dev <= 1e-6 and elapsed < 10.0
    msg = _report(3, ok,
                  f"20-state Gram deviation {dev:.1e} (tol 1e-6), "
                  f"{elapsed:.1f} s")
    assert ok, msg


def test_criterion_04_oracle_equivalence():
    def errors(n_points):
        g = make_grid(-40.0, 40.0, n_points)
        basis = build_basis(1.0, 6, g)
        pairs = diagonalize(build_hamiltonian(1.0, g), 6)
        return [abs(pairs[n][0] - basis.energies[n]) for n in range(6)]

    fine = errors(8001)
    coarse = errors(4001)
    ratios = [c / f for c, f in zip(coarse, fine)]
    ok = max(fine) <= 1e-4 and all(3.0 < r < 5.0 for r in ratios)
    msg = _report(4, ok,
                  f"finite-difference max error {max(fine):.1e} (tol 1e-4); "
                  f"error ratio under h/2 in "
                  f"[{min(ratios):.2f}, {max(ratios):.2f}] (want about 4)")
    assert ok, msg


def test_criterion_05_unitarity_and_conservation():
    grid = make_grid(-45.0, 45.0, 9001)
    basis = build_basis(1.0, 120, grid)
    coeffs = project(gaussian_packet(GaussianPacketParams(10.0, 2.0), grid),
                     basis)
    weight = coeffs.weight
    t_g = 2.0 ** (-1.0 / 3.0)
    times = np.linspace(0.0, 100.0 * t_g, 11)
    h = grid.spacing

    def field_energy(v):
        grad = np.zeros_like(v)
        grad[2:-2] = (-v[4:] + 8 * v[3:-1] - 8 * v[1:-3] + v[:-4]) / (12 * h)
        kin = 0.5 * np.sum(grid.weights * np.abs(grad) ** 2)
        pot = np.sum(grid.weights * np.abs(v) ** 2 * np.abs(grid.points))
        return float(kin + pot)

    norms, energies = [], []
    for t in times:
        wf = evolve(coeffs, basis, t)
        norms.append(wf.norm())
        energies.append(field_energy(wf.samples))
    ndrift = float(np.max(np.abs(np.array(norms) - norms[0])))
    edrift = float(np.max(np.abs(np.array(energies) - energies[0]))
                   / energies[0])
    ok = weight >= 0.999 and ndrift < 1e-8 and edrift < 1e-3
    msg = _report(5, ok,
                  f"captured weight {weight:.6f} (>= 0.999); norm drift "
                  f"{ndrift:.1e} (tol 1e-8); <H> relative drift {edrift:.1e} "
                  f"(tol 1e-3) over t in [0, 100 t_g]")
    assert ok, msg


def test_criterion_06_collapse_and_revival():
    t0 = time.perf_counter()
    grid = make_grid(-45.0, 45.0, 9001)
    basis = build_basis(1.0, 120, grid)
    packet = GaussianPacketParams(10.0, 2.0)
    coeffs = project(gaussian_packet(packet, grid), basis)
    dt = 0.25
    times = np.arange(0.0, 6500.0, dt)
    xs = np.array([x for _, x in trajectory(packet, basis, times)])

    n_star = int(np.argmax(np.abs(coeffs.c)))
    t_bounce = 2.0 * np.pi / (basis.energies[n_star + 1]
                              - basis.energies[n_star])

    # initial bounces: extrema of <x>(t) with swing > 0.1 x0
    early = xs[times < 3.0 * t_bounce]
    d = np.diff(early)
    extrema = np.nonzero(d[:-1] * d[1:] < 0.0)[0] + 1
    swings = np.abs(np.diff(early[extrema]))
    n_bounces = int(np.sum(swings > 0.1 * packet.x0))

    # sliding amplitude windows
    win = int(round(2.0 * t_bounce / dt))
    step = win // 8
    starts = np.arange(0, len(xs) - win, step)
    amps = np.array([xs[s:s + win].max() - xs[s:s + win].min()
                     for s in starts])
    a0 = amps[0]
    collapsed = np.nonzero(amps < 0.3 * a0)[0]
    has_collapse = len(collapsed) > 0
    has_revival = has_collapse and bool(
        np.any(amps[collapsed[0]:] > 0.6 * a0))
    revival_t = (float(times[starts[collapsed[0]
                 + int(np.argmax(amps[collapsed[0]:] > 0.6 * a0))]])
                 if has_revival else float("nan"))
    elapsed = time.perf_counter() - t0
    ok = (n_bounces >= 3 and has_collapse and has_revival
          and elapsed < 120.0)
    msg = _report(6, ok,
                  f"{n_bounces} bounces (>= 3); amplitude falls to "
                  f"{amps.min() / a0:.2f} of initial (< 0.3) and recovers to "
                  f"{amps[collapsed[0]:].max() / a0 if has_collapse else 0:.2f} "
                  f"(> 0.6) near t = {revival_t:.0f}; {elapsed:.0f} s")
    assert ok, msg


def test_criterion_07_grin_propagation():
    grid = make_grid(-64.0, 64.0, 6401)
    basis = build_basis(0.1, 60, grid)
    medium = GrinMedium(kappa=1.0, lam=0.1)
    field = airy_wavelet(WaveletParams(q=-1.472910), grid)

    zs = np.linspace(0.0, 200.0, 401)
    rows = intensity_map(field, medium, basis, zs)
    power_dev = float(np.max(np.abs(rows @ grid.weights - 1.0)))
    mirror_dev = float(np.max(np.abs(rows - rows[:, ::-1])))

    # second moment over a long scan, through basis matrix elements
    coeffs = project(field, basis)
    scaled = coeffs.c / np.sqrt(coeffs.weight)
    mom2 = (basis.psi_matrix * (grid.weights * grid.points**2)) \
        @ basis.psi_matrix.T
    z_long = np.arange(0.0, 30000.0, 0.5)
    x2 = np.empty(len(z_long))
    for lo in range(0, len(z_long), 4096):
        hi = min(lo + 4096, len(z_long))
        phases = np.exp(1j * np.outer(z_long[lo:hi], basis.energies))
        amp = phases * scaled[None, :]
        x2[lo:hi] = np.einsum("zm,mn,zn->z", np.conj(amp), mom2, amp).real
    x2_0 = x2[0]
    grew = float(np.max(x2) / x2_0)
    grow_at = int(np.argmax(x2 >= 2.0 * x2_0))
    later_min = float(np.min(x2[grow_at:]))
    returns = later_min <= 1.25 * x2_0

    ok = (power_dev <= 1e-8 and mirror_dev <= 1e-8 and grew >= 2.0
          and returns)
    msg = _report(
        7, ok,
        f"row power dev {power_dev:.1e}, mirror dev {mirror_dev:.1e} "
        f"(tol 1e-8 each); <x^2> grows {grew:.0f}x (>= 2x); recurrence "
        f"clause: min <x^2> after the growth is {later_min:.1f} vs "
        f"{1.25 * x2_0:.2f} needed (within 25% of {x2_0:.2f}) over "
        "z in [0, 30000] at step 0.5 -- the 60 dephased modes never "
        "refocus"
    )
    assert ok, msg


def test_criterion_08_fourier_bridge():
    pts = list(np.linspace(-6.0, 3.0, 20)) + [airy_zero(1)]
    devs = [abs(airy_from_momentum(float(x)).real - airy_ai(float(x)).value)
            for x in pts]
    zero_val = abs(airy_from_momentum(airy_zero(1)))
    ok = max(devs) <= 1e-3
    msg = _report(8, ok,
                  f"momentum route max deviation {max(devs):.1e} over "
                  f"[-6, 3] (tol 1e-3); |value at a_1| = {zero_val:.1e}")
    assert ok, msg


def test_criterion_09_displaced_airy_eigenrelation():
    g = make_grid(-20.0, 8.0, 5601)
    h = g.spacing
    worst = 0.0
    for gamma in (-2.0, 0.0, 1.0, 5.0):
        v = displaced_airy(DisplacedAiryParams(gamma), g).samples.real
        lap = (-v[4:] + 16 * v[3:-1] - 30 * v[2:-2] + 16 * v[1:-3]
               - v[:-4]) / (12 * h * h)
        r = -lap + (g.points[2:-2] - gamma) * v[2:-2]
        rel = float(np.linalg.norm(r) / np.linalg.norm(v[2:-2]))
        worst = max(worst, rel)
    ok = worst <= 1e-5
    msg = _report(9, ok,
                  f"max relative operator residual {worst:.1e} over "
                  "gamma in {-2, 0, 1, 5} (tol 1e-5)")
    assert ok, msg


def test_criterion_10_fock_construction():
    mpmath.mp.dps = 30
    sqrt_pi = mpmath.sqrt(mpmath.pi)

    quad_devs = {}
    coeff_dev = 0.0
    for x in (0.0, 1.0, -1.0, 3.0, -3.0):
        vec = fock_position_state(x, 200)
        quad_devs[x] = abs(quadrature_expectation(vec) - x)
        ex = mpmath.exp(-mpmath.mpf(x) ** 2 / 2)
        for n in range(201):
            ref = float(mpmath.hermite(n, x) * ex
                        / mpmath.sqrt(mpmath.mpf(2) ** n
                                      * mpmath.factorial(n) * sqrt_pi))
            got = vec.coeffs[n]
            if abs(ref) > 1e-12:
                coeff_dev = max(coeff_dev, abs(got - ref) / abs(ref))
            else:
                assert abs(got - ref) < 1e-12
    worst_quad = max(quad_devs.values())
    ok = worst_quad <= 1e-6 and coeff_dev <= 1e-10
    msg = _report(
        10, ok,
        f"Hermite-oracle max relative coefficient error {coeff_dev:.1e} "
        f"(tol 1e-10); quadrature deviation at x=0: {quad_devs[0.0]:.1e}, "
        f"at |x|=1: {quad_devs[1.0]:.1e}, at |x|=3: {quad_devs[3.0]:.1e} "
        "(tol 1e-6) -- the truncated vector's expectation misses x by "
        "~ sin(2 theta_N)/(2 pi S), an O(1e-2) effect at n_max = 200 "
        "that no implementation choice can remove"
    )
    assert ok, msg
