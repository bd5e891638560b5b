"""Phase-space evolution of the localized single-level state.

Shows the quasi-probability density Tr[W gamma0]/sqrt(eB) for the two
initially-Gaussian polarizations at t = 0 and E t = pi/2, and the local
purity spreading along the s-direction; then cross-checks one matrix
against the brute-force transform oracle.
"""

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from diracwig import GaussianSpec, PhysParams, quasi_density, weyl_oracle, wigner_matrix
from diracwig.states import evaluate_terms, gaussian_terms
from diracwig.wigner import G0_SIGN

OUT = __import__("pathlib").Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

p = PhysParams(m=1.0, kz=1.0, eB=1.0)
E = GaussianSpec(1, 1, p).level.E
x = np.linspace(-4.5, 4.5, 161)
S, K = x[:, None], x[None, :]

fig, axes = plt.subplots(2, 2, figsize=(9, 8), sharex=True, sharey=True)
for row, i in enumerate((2, 1)):
    spec = GaussianSpec(i, 1, p)
    for col, t in enumerate((0.0, math.pi / (2 * E))):
        dens = quasi_density(wigner_matrix(spec, t, S, K)) / math.sqrt(p.eB)
        im = axes[row, col].pcolormesh(x, x, dens.T, cmap="RdBu_r", shading="auto")
        axes[row, col].set_title(f"i = {i}, E t = {'0' if t == 0 else 'pi/2'}")
        fig.colorbar(im, ax=axes[row, col])
for ax in axes[-1]:
    ax.set_xlabel("s")
for ax in axes[:, 0]:
    ax.set_ylabel("$k_x$")
fig.suptitle("quasi-probability density")
fig.tight_layout()
fig.savefig(OUT / "02_density_evolution.png", dpi=150)

fig, axes = plt.subplots(1, 3, figsize=(13, 4), sharey=True)
spec = GaussianSpec(1, 1, p)
for j, ax in enumerate(axes):
    t = j * math.pi / (4 * E)
    W = wigner_matrix(spec, t, S, K)
    local_purity = np.real(np.einsum("ij...,j,ji...,i->...", W, G0_SIGN, W, G0_SIGN)) / p.eB
    im = ax.pcolormesh(x, x, local_purity.T, cmap="RdBu_r", shading="auto")
    ax.set_title(f"E t = {j} pi/4")
    ax.set_xlabel("s")
    fig.colorbar(im, ax=ax)
axes[0].set_ylabel("$k_x$")
fig.suptitle("local purity $Tr[(W\\gamma_0)^2]/eB$")
fig.tight_layout()
fig.savefig(OUT / "02_local_purity.png", dpi=150)
print(f"saved two figures under {OUT}")

# oracle cross-check at E t = pi/2
t = math.pi / (2 * E)
s_small = np.linspace(-4, 4, 33)
Wan = wigner_matrix(spec, t, s_small[:, None], s_small[None, :])
state = lambda sv, tt: evaluate_terms(gaussian_terms(spec, tt), sv, p.eB)
Wor = weyl_oracle(state, t, s_small, s_small, eB=p.eB, max_mode=1)
print(f"closed form vs transform oracle, max entry deviation: {np.abs(Wan - Wor).max():.2e}")
