"""Cat states in phase space.

Builds symmetric and anti-symmetric two-packet superpositions, shows the
interference fringes in their quasi-probability densities, and checks the
truncation-error control knob.
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from diracwig import CatSpec, PhysParams, cat_eval, quasi_density, truncation_error, wigner_matrix
from diracwig.states import auto_truncation

OUT = __import__("pathlib").Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

p = PhysParams(m=1.0, kz=1.0, eB=1.0)

print("truncation-error table Er(a, l):")
for a in (1.0, 2.0, 5.0):
    row = "  ".join(f"l={l}: {truncation_error(a, l):.4f}" for l in (0, 2, 4, 8, 12))
    print(f"  a = {a:g}: {row}   auto-l(1e-6) = {auto_truncation(a, 1e-6)}")

fig, axes = plt.subplots(2, 2, figsize=(10, 8))
for col, a in enumerate((1.0, 5.0)):
    half = 4.0 + a
    x = np.linspace(-half, half, 201)
    S, K = x[:, None], x[None, :]
    for row, sym in enumerate(("S", "A")):
        spec = CatSpec(sym, a, p, epsilon=1e-8)
        dens = quasi_density(wigner_matrix(spec, 0.0, S, K)) / np.sqrt(p.eB)
        lim = np.abs(dens).max()
        im = axes[row, col].pcolormesh(x, x, dens.T, cmap="RdBu_r", vmin=-lim, vmax=lim, shading="auto")
        axes[row, col].set_title(f"{sym}-state, a = {a:g} (l = {spec.l_effective})")
        axes[row, col].set_xlabel("s")
        axes[row, col].set_ylabel("$k_x$")
        fig.colorbar(im, ax=axes[row, col])
fig.suptitle("cat-state quasi-probability density at t = 0")
fig.tight_layout()
fig.savefig(OUT / "04_cat_densities.png", dpi=150)

# the packets in configuration space, before and after half a period
fig, axes = plt.subplots(1, 2, figsize=(10, 4))
s = np.linspace(-9, 9, 601)
for ax, sym in zip(axes, ("S", "A")):
    spec = CatSpec(sym, 3.0, p, epsilon=1e-8)
    for t, label in ((0.0, "t = 0"), (0.7853981633974483, "E_1 t = pi/2")):
        dens = np.sum(np.abs(cat_eval(spec, s, t)) ** 2, axis=0)
        ax.plot(s, dens, label=label)
    ax.set_title(f"{sym}-state, a = 3")
    ax.set_xlabel("s")
    ax.legend()
axes[0].set_ylabel(r"$|\phi|^2$")
fig.tight_layout()
fig.savefig(OUT / "04_cat_profiles.png", dpi=150)
print(f"saved two figures under {OUT}")
