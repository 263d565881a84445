#!/usr/bin/env python3
# Two state-map routes:
#   left   Ai recovered from its flat-phase momentum profile, compared
#          against direct evaluation
#   right  windowed position kernels and the Fock-basis quadrature
#          defect that truncation leaves behind
import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from airybasis.airy import ai_values
from airybasis.quadrature import make_grid
from airybasis.statemaps import (airy_from_momentum, fock_position_state,
                                 position_from_airy, quadrature_expectation)

xs = np.linspace(-8.0, 3.0, 120)
bridge = np.array([airy_from_momentum(float(x)).real for x in xs])
direct = ai_values(xs)
print(f"momentum-route max error on [-8, 3]: {np.max(np.abs(bridge - direct)):.2e}")

kgrid = make_grid(-6.0, 6.0, 1201)
kernels = {x0: position_from_airy(x0, kgrid).samples for x0 in (-2.0, 0.0, 2.0)}

ns = np.arange(201)
defects = []
for x0 in (0.0, 0.5, 1.0, 2.0, 3.0):
    v = fock_position_state(x0, 200)
    defects.append(quadrature_expectation(v) - x0)
    print(f"<X> - x at x = {x0}: {defects[-1]:+.2e}   (n_max = 200)")

fig, axes = plt.subplots(1, 3, figsize=(12, 4))
axes[0].plot(xs, direct, lw=1.4, label="direct")
axes[0].plot(xs, bridge, "--", lw=1.0, label="momentum integral")
axes[0].set_title("two routes to Ai")
axes[0].legend(fontsize=8)

for x0, k in kernels.items():
    axes[1].plot(kgrid.points, np.abs(k) ** 2, lw=0.9, label=f"x = {x0}")
axes[1].set_title("windowed position kernels")
axes[1].legend(fontsize=8)

v = fock_position_state(1.0, 200)
axes[2].plot(ns, v.coeffs, lw=0.7)
axes[2].set_title("|x=1> in the number basis")
axes[2].set_xlabel("n")

fig.tight_layout()
fig.savefig("momentum_and_fock.png", dpi=150)
print("wrote momentum_and_fock.png")
