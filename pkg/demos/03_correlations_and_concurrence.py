"""Spin-parity correlation dynamics of the single-level state.

Reproduces the mutual-information / concurrence interplay: total vs
classical correlations, the local concurrence map with its negative
pockets, and the anti-aligned chirality and entanglement oscillations.
"""

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from diracwig import GaussianSpec, PhysParams, concurrence_local, info_report, wigner_matrix

OUT = __import__("pathlib").Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

# correlation curves for a sweep of field strengths
fig, axes = plt.subplots(1, 3, figsize=(13, 4), sharey=True)
for ax, kz2 in zip(axes, (0.0, 10.0, 100.0)):
    for eB, style in ((0.1, ":"), (1.0, "-."), (10.0, "-")):
        p = PhysParams(m=1.0, kz=math.sqrt(kz2), eB=eB)
        spec = GaussianSpec(1, 1, p)
        E = spec.level.E
        theta = np.linspace(0, 2 * math.pi, 301)
        reports = [info_report(spec, th / E) for th in theta]
        ax.plot(theta, [r.M for r in reports], "gray", linestyle=style, label=f"M, eB={eB}")
        ax.plot(theta, [r.C2 for r in reports], "k", linestyle=style, label=f"$C^2$, eB={eB}")
    ax.set_title(f"$k_z^2 = {kz2:g}$")
    ax.set_xlabel("$E_1 t$")
axes[0].set_ylabel("correlation")
axes[0].legend(fontsize=7)
fig.tight_layout()
fig.savefig(OUT / "03_mutual_information.png", dpi=150)

# local concurrence maps: negativity appears away from the axes
p = PhysParams(1.0, 1.0, 1.0)
x = np.linspace(-4.5, 4.5, 161)
S, K = x[:, None], x[None, :]
fig, axes = plt.subplots(2, 3, figsize=(12, 7), sharex=True, sharey=True)
for row, n in enumerate((1, 5)):
    spec = GaussianSpec(1, n, p)
    E = spec.level.E
    for col, j in enumerate((8, 4, 2)):
        c2 = concurrence_local(wigner_matrix(spec, math.pi / (j * E), S, K)) / p.eB
        lim = np.abs(c2).max()
        im = axes[row, col].pcolormesh(x, x, c2.T, cmap="RdBu_r", vmin=-lim, vmax=lim, shading="auto")
        axes[row, col].set_title(f"n = {n}, E t = pi/{j}")
        fig.colorbar(im, ax=axes[row, col])
fig.suptitle("local squared concurrence (red positive, blue negative)")
fig.tight_layout()
fig.savefig(OUT / "03_local_concurrence.png", dpi=150)

# chirality vs entanglement of formation
fig, axes = plt.subplots(1, 2, figsize=(10, 4), sharey=True)
for ax, eB in zip(axes, (1.0, 3.0)):
    for kz2, color in ((0.01, "gray"), (10.0, "k")):
        p = PhysParams(m=1.0, kz=math.sqrt(kz2), eB=eB)
        spec = GaussianSpec(1, 1, p)
        E = spec.level.E
        theta = np.linspace(0, 2 * math.pi, 301)
        reports = [info_report(spec, th / E) for th in theta]
        ax.plot(theta, [r.EoF for r in reports], color=color, linestyle="--", label=f"EoF, $k_z^2$={kz2}")
        ax.plot(theta, [r.chi for r in reports], color=color, label=f"$\\langle\\gamma_5\\rangle$, $k_z^2$={kz2}")
    ax.set_title(f"eB = {eB:g}")
    ax.set_xlabel("$E_1 t$")
    ax.legend(fontsize=7)
fig.tight_layout()
fig.savefig(OUT / "03_chirality_vs_eof.png", dpi=150)
print(f"saved three figures under {OUT}")

p = PhysParams(1.0, 1.0, 1.0)
rep = info_report(GaussianSpec(1, 1, p), math.pi / 4)
print(f"benchmark (E t = pi/2): M = {rep.M:.6f}, M_cl = {rep.M_cl:.6f}, "
      f"C^2 = {rep.C2:.6f} = M - M_cl, EoF = {rep.EoF:.5f}, chi = {rep.chi:.6f}")
