"""Deterministic quadrature grids for the phase-space integrals.

Trapezoid rules on wide uniform windows are spectrally accurate for the
Gaussian-weighted integrands used throughout, and keep every reduction a
fixed-order einsum, so repeated runs are bit-identical.  A Gauss-Legendre
rule is available as an alternative node set.
"""

import math
from dataclasses import dataclass, replace

import numpy as np

from .basis import hermite_functions

__all__ = [
    "QuadratureSpec",
    "Grid",
    "make_grid",
    "spec_for_modes",
    "integrate2d",
    "NonConvergenceError",
]

MIN_POINTS = 64


class NonConvergenceError(RuntimeError):
    """Grid refinement failed to stabilize the requested integral."""


@dataclass(frozen=True)
class QuadratureSpec:
    s_window: tuple[float, float] = (-8.0, 8.0)
    k_window: tuple[float, float] = (-8.0, 8.0)
    ns: int = 256
    nk: int = 256
    rule: str = "trapezoid"

    def __post_init__(self):
        if self.ns < MIN_POINTS or self.nk < MIN_POINTS:
            raise ValueError(f"ns and nk must be at least {MIN_POINTS}")
        if self.rule not in ("trapezoid", "gauss"):
            raise ValueError("rule must be 'trapezoid' or 'gauss'")
        if self.s_window[0] >= self.s_window[1] or self.k_window[0] >= self.k_window[1]:
            raise ValueError("windows must be ordered (min, max)")


def _nodes_1d(window, n, rule):
    lo, hi = window
    if rule == "trapezoid":
        x = np.linspace(lo, hi, n)
        w = np.full(n, (hi - lo) / (n - 1))
        w[0] *= 0.5
        w[-1] *= 0.5
        return x, w
    x, w = np.polynomial.legendre.leggauss(n)
    mid, half = 0.5 * (hi + lo), 0.5 * (hi - lo)
    return mid + half * x, half * w


class Grid:
    """A 2-dim product rule over (s, kx) with broadcastable meshes.

    ``integrate`` realizes the phase-space integral int dx int dkx, i.e. it
    carries the 1/sqrt(eB) Jacobian of x = s/sqrt(eB).
    """

    def __init__(self, spec: QuadratureSpec, eB=1.0):
        self.spec = spec
        self.eB = float(eB)
        self.s, self.ws = _nodes_1d(spec.s_window, spec.ns, spec.rule)
        self.kx, self.wk = _nodes_1d(spec.k_window, spec.nk, spec.rule)
        self.S = self.s[:, None]
        self.K = self.kx[None, :]

    @property
    def shape(self):
        return (self.spec.ns, self.spec.nk)

    def integrate(self, values):
        return np.einsum("i,ij,j->", self.ws, values, self.wk) / math.sqrt(self.eB)

    def integrate_s(self, values):
        """1-dim integral over x (values sampled on the s nodes)."""
        return np.dot(self.ws, values) / math.sqrt(self.eB)


def make_grid(spec: QuadratureSpec, eB=1.0) -> Grid:
    return Grid(spec, eB)


def spec_for_modes(max_index, pad=7.0, points_per_unit=None, rule="trapezoid"):
    """A window/resolution adequate for mode indices up to ``max_index``.

    The window covers the classical turning point sqrt(2n+1) plus ``pad``;
    the node density resolves the fastest oscillation with a wide safety
    margin (trapezoid aliasing error is then far below 1e-10).
    """
    band = math.sqrt(2.0 * max(max_index, 1) + 1.0)
    half = band + pad
    ppu = points_per_unit if points_per_unit is not None else max(8.0, 1.6 * band)
    n = int(math.ceil(2.0 * half * ppu))
    n = max(MIN_POINTS, (n + 15) // 16 * 16)
    return QuadratureSpec(s_window=(-half, half), k_window=(-half, half), ns=n, nk=n, rule=rule)


def _widen(spec: QuadratureSpec) -> QuadratureSpec:
    grow = lambda w: (w[0] * 1.3, w[1] * 1.3)
    scale = lambda n: (int(n * 1.3) + 15) // 16 * 16
    return replace(spec, s_window=grow(spec.s_window), k_window=grow(spec.k_window),
                   ns=scale(spec.ns), nk=scale(spec.nk))


def ensure_resolves(spec: QuadratureSpec, max_index, tol=1e-6, max_widen=6):
    """Widen the window until the highest mode's 1-dim norm defect is < tol."""
    for _ in range(max_widen + 1):
        s, ws = _nodes_1d(spec.s_window, spec.ns, spec.rule)
        norm = np.dot(ws, hermite_functions(max_index, s)[max_index] ** 2)
        if abs(norm - 1.0) < tol:
            return spec
        spec = _widen(spec)
    raise NonConvergenceError(f"could not resolve mode {max_index} after widening")


def integrate2d(f, spec: QuadratureSpec, eB=1.0, tol=1e-8, max_refine=2):
    """Phase-space integral int dx int dkx f(s, kx) with a refinement-based
    error estimate.

    ``f`` is evaluated on broadcastable (s, kx) meshes.  The node count is
    doubled until two successive values agree within ``tol``; failure after
    ``max_refine`` refinements raises NonConvergenceError.  Returns
    (value, error_estimate).
    """
    grid = make_grid(spec, eB)
    value = grid.integrate(np.broadcast_to(f(grid.S, grid.K), grid.shape))
    err = math.inf
    for _ in range(max_refine):
        spec = replace(spec, ns=2 * spec.ns - 1, nk=2 * spec.nk - 1)
        grid = make_grid(spec, eB)
        new = grid.integrate(np.broadcast_to(f(grid.S, grid.K), grid.shape))
        err = abs(new - value)
        value = new
        if err < tol:
            return value, err
    if err > tol:
        raise NonConvergenceError(f"integral did not stabilize: last change {err:.3e}")
    return value, err
