#!/usr/bin/env python3
"""Continuum states of V = |k|x and the displaced-Airy family.

Shows three things on one figure: the delta-normalized continuum state
at a few energies, the same state rebuilt by squeezing and displacing
the bare Airy profile, and a Gaussian reconstructed by smearing through
the displaced-Airy kernel (the completeness relation at work).
"""
import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from airybasis.continuum import (LinearPotentialParams, SqueezeDisplaceParams,
                                 apply_displaced_squeeze, completeness_smear,
                                 psi_E)
from airybasis.airy import ai_values
from airybasis.quadrature import WaveFunction, make_grid

grid = make_grid(-18.0, 8.0, 2601)

fig, axes = plt.subplots(3, 1, figsize=(7, 8))

for energy in (0.0, 1.0, 2.5):
    wf = psi_E(LinearPotentialParams(k_abs=1.0, energy=energy), grid)
    axes[0].plot(grid.points, wf.samples.real, lw=0.9, label=f"E = {energy}")
axes[0].legend(fontsize=8)
axes[0].set_title("continuum states, slope 1")

p = LinearPotentialParams(k_abs=1.0, energy=1.0)
direct = psi_E(p, grid).samples.real
rebuilt = apply_displaced_squeeze(
    ai_values, SqueezeDisplaceParams.for_linear_potential(p))(grid.points)
print(f"squeeze+displace vs direct: max diff {np.max(np.abs(direct - rebuilt)):.2e}")
axes[1].plot(grid.points, direct, lw=1.2, label="direct formula")
axes[1].plot(grid.points, rebuilt, "--", lw=1.0, label="D(alpha) S(r) Ai")
axes[1].legend(fontsize=8)
axes[1].set_title("one state, two constructions")

sg = make_grid(-10.0, 10.0, 1001)
f = WaveFunction(grid=sg,
                 samples=(np.pi**-0.25 * np.exp(-sg.points**2 / 2)).astype(complex))
out = completeness_smear(f, make_grid(-25.0, 25.0, 2001))
err = np.max(np.abs(out.samples - f.samples))
print(f"completeness smear: max reconstruction error {err:.2e}")
axes[2].plot(sg.points, f.samples.real, lw=1.2, label="Gaussian")
axes[2].plot(sg.points, out.samples.real, "--", lw=1.0, label="smeared")
axes[2].legend(fontsize=8)
axes[2].set_title("resolution of identity through the Ai(x - gamma) kernel")

for ax in axes:
    ax.set_xlabel("x")
fig.tight_layout()
fig.savefig("continuum_family.png", dpi=150)
print("wrote continuum_family.png")
