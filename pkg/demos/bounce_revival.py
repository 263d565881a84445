#!/usr/bin/env python3
"""Gaussian packet dropped at x0 = 10 in the |x| well.

The packet bounces a few times, the bounces wash out as the discrete
levels dephase, and near t ~ 5900 the oscillation partially rephases.
Both the early bouncing and the long collapse/revival record come from
the same spectral trajectory call.
"""
import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from airybasis.dynamics import GaussianPacketParams, gaussian_packet, project, trajectory
from airybasis.quadrature import make_grid
from airybasis.spectrum import build_basis

packet = GaussianPacketParams(x0=10.0, sigma=2.0)
grid = make_grid(-45.0, 45.0, 9001)
basis = build_basis(1.0, 120, grid)

coeffs = project(gaussian_packet(packet, grid), basis)
print(f"captured weight: {coeffs.weight:.12f}")
n_star = int(np.argmax(np.abs(coeffs.c)))
t_b = 2 * np.pi / (basis.energies[n_star + 1] - basis.energies[n_star])
print(f"dominant level n = {n_star}, bounce period ~ {t_b:.2f}")

t_short = np.arange(0.0, 8 * t_b, 0.05)
t_long = np.arange(0.0, 6500.0, 0.5)
xs_short = np.array([x for _, x in trajectory(packet, basis, t_short)])
xs_long = np.array([x for _, x in trajectory(packet, basis, t_long)])

fig, (top, bot) = plt.subplots(2, 1, figsize=(9, 6))
top.plot(t_short, xs_short, lw=0.9)
top.set_xlabel("t")
top.set_ylabel("<x>")
top.set_title("early bounces")

bot.plot(t_long, xs_long, lw=0.4)
bot.set_xlabel("t")
bot.set_ylabel("<x>")
bot.set_title("collapse and partial revival")
fig.tight_layout()
fig.savefig("bounce_revival.png", dpi=150)
print("wrote bounce_revival.png")
