"""Finite-difference route against the analytic one."""

import numpy as np
import pytest

from airybasis.errors import DomainError
from airybasis.oracle import TridiagonalOperator, build_hamiltonian, diagonalize
from airybasis.quadrature import make_grid
from airybasis.spectrum import eigenfunction, even_energy, odd_energy


def _energy(n, lam=1.0):
    return even_energy(n // 2, lam) if n % 2 == 0 else odd_energy(n // 2, lam)


def test_small_grid_bands():
    g = make_grid(-2.0, 2.0, 5)
    op = build_hamiltonian(1.0, g)
    assert np.allclose(op.diagonal, [2.0, 1.0, 2.0])
    assert np.allclose(op.off_diagonal, [-0.5, -0.5])


def test_six_lowest_energies_agree():
    g = make_grid(-40.0, 40.0, 8001)
    pairs = diagonalize(build_hamiltonian(1.0, g), 6)
    errs = [abs(e - _energy(n)) for n, (e, _) in enumerate(pairs)]
    assert max(errs) < 1e-4


def test_second_order_convergence():
    # halving h should cut the energy error by about 4
    coarse = make_grid(-40.0, 40.0, 4001)
    fine = make_grid(-40.0, 40.0, 8001)
    e_c = diagonalize(build_hamiltonian(1.0, coarse), 3)
    e_f = diagonalize(build_hamiltonian(1.0, fine), 3)
    for n in range(3):
        err_c = abs(e_c[n][0] - _energy(n))
        err_f = abs(e_f[n][0] - _energy(n))
        assert 3.0 < err_c / err_f < 5.0


def test_ground_state_vector_overlap():
    g = make_grid(-40.0, 40.0, 8001)
    _, wf = diagonalize(build_hamiltonian(1.0, g), 1)[0]
    ana = eigenfunction(0, 1.0, g).samples.samples.real
    ov = g.spacing * np.sum(wf.samples.real * ana)
    assert ov > 1.0 - 1e-6


def test_vector_normalization_and_walls():
    g = make_grid(-30.0, 30.0, 3001)
    for _, wf in diagonalize(build_hamiltonian(1.0, g), 4):
        assert abs(g.spacing * np.sum(np.abs(wf.samples) ** 2) - 1.0) < 1e-12
        assert wf.samples[0] == 0.0 and wf.samples[-1] == 0.0


def test_sign_convention_matches_analytic_states():
    # convention (right tail positive) must agree with the closed forms,
    # signed overlap near +1 for every state, not just |overlap|
    g = make_grid(-30.0, 30.0, 3001)
    pairs = diagonalize(build_hamiltonian(1.0, g), 4)
    for n, (_, wf) in enumerate(pairs):
        ana = eigenfunction(n, 1.0, g).samples.samples.real
        ov = g.spacing * np.sum(wf.samples.real * ana)
        assert ov > 0.999


def test_lambda_sweep():
    g = make_grid(-20.0, 20.0, 4001)
    for lam in (0.5, 2.0):
        e0 = diagonalize(build_hamiltonian(lam, g), 1)[0][0]
        assert abs(e0 - _energy(0, lam)) < 1e-3


def test_bad_arguments():
    g = make_grid(-2.0, 2.0, 5)
    with pytest.raises(DomainError):
        build_hamiltonian(0.0, g)
    with pytest.raises(DomainError):
        build_hamiltonian(1.0, make_grid(-1.0, 1.0, 3))
    op = build_hamiltonian(1.0, g)
    with pytest.raises(DomainError):
        diagonalize(op, 0)
    with pytest.raises(DomainError):
        diagonalize(op, 99)
    with pytest.raises(DomainError):
        TridiagonalOperator(grid=g, diagonal=np.ones(4), off_diagonal=np.ones(2))
