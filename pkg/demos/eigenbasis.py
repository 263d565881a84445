#!/usr/bin/env python3
# Six lowest bound states of V = lam|x|, drawn at their energy offsets,
# plus the finite-difference cross-check of the same energies.
import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from airybasis.oracle import build_hamiltonian, diagonalize
from airybasis.quadrature import make_grid
from airybasis.spectrum import build_basis

LAM = 1.0
NSTATES = 6

grid = make_grid(-15.0, 15.0, 3001)
basis = build_basis(LAM, NSTATES, grid)

fd = diagonalize(build_hamiltonian(LAM, make_grid(-40.0, 40.0, 8001)), NSTATES)
print("state  energy (zeros)   energy (finite diff)   difference")
for n in range(NSTATES):
    e, efd = basis.energies[n], fd[n][0]
    print(f"  {n}    {e:.9f}      {efd:.9f}       {abs(e - efd):.2e}")

fig, ax = plt.subplots(figsize=(7, 6))
x = grid.points
ax.plot(x, LAM * np.abs(x), "k-", lw=1, label="V = |x|")
for st in basis.states:
    y = st.samples.samples.real
    ax.fill_between(x, st.energy, st.energy + 0.55 * y, alpha=0.6)
    ax.axhline(st.energy, color="gray", lw=0.4)
    ax.text(12.8, st.energy + 0.08, f"E{st.n} = {st.energy:.4f}", fontsize=8)
ax.set_xlim(-14, 14)
ax.set_ylim(0, 5.2)
ax.set_xlabel("x")
ax.set_ylabel("energy / offset eigenfunctions")
ax.set_title("Airy eigenbasis of the symmetric linear well")
ax.legend(loc="upper center")
fig.tight_layout()
fig.savefig("eigenbasis.png", dpi=150)
print("wrote eigenbasis.png")
