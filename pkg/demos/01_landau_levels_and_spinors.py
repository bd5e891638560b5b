"""Landau levels and stationary spinors.

Walks through the level parameters (E_n, A_n, B_n, eta_n), plots the first
few mode profiles, and verifies the spinor orthonormality numerically.
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from diracwig import PhysParams, f_basis, level_data, stationary_spinor
from diracwig.landau import orthonormality_defect

OUT = __import__("pathlib").Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

p = PhysParams(m=1.0, kz=1.0, eB=1.0)

print("Level parameters for m = kz = eB = 1:")
print(f"{'n':>3} {'E_n':>10} {'A_n':>10} {'B_n':>10} {'eta_n':>10} {'eta(A^2+B^2+1)':>16}")
for n in range(6):
    lv = level_data(n, p)
    closure = lv.eta * (lv.A**2 + lv.B**2 + 1.0)
    print(f"{n:>3} {lv.E:>10.6f} {lv.A:>10.6f} {lv.B:>10.6f} {lv.eta:>10.6f} {closure:>16.12f}")

s = np.linspace(-6, 6, 601)

fig, axes = plt.subplots(1, 2, figsize=(11, 4))
for n in range(4):
    axes[0].plot(s, f_basis(n, s, p.eB), label=f"$F_{n}$")
axes[0].set_xlabel("s")
axes[0].set_title("oscillator modes $F_n(s)$")
axes[0].legend()

u = stationary_spinor(2, 1, 1, s, p)
for idx in range(4):
    axes[1].plot(s, u[idx].real, label=f"component {idx + 1}")
axes[1].set_xlabel("s")
axes[1].set_title("stationary spinor $u^+_{2,1}(s)$")
axes[1].legend()
fig.tight_layout()
fig.savefig(OUT / "01_levels_and_spinors.png", dpi=150)
print(f"saved {OUT / '01_levels_and_spinors.png'}")

nodes = np.linspace(-12, 12, 1001)
w = np.full(nodes.size, nodes[1] - nodes[0])
w[0] *= 0.5
w[-1] *= 0.5
print(f"spinor orthonormality defect (n <= 3): {orthonormality_defect(3, p, (nodes, w)):.2e}")
