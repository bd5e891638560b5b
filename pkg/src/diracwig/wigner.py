"""Matrix-valued Wigner functions: closed forms for the localized states,
the Clifford decomposition, and a brute-force transform oracle.

The equal-time Wigner matrix of a spinor phi is

    W(s, kx; t) = pi^-1 int du e^(2i kx u) phi(s+u, t) phi^dag(s-u, t) gamma0,

reduced to the s-coordinate.  For any state given as a term table (a finite
mode series per component) the transform is exact: a mode pair (a, b)
contributes the mixed-index function Lab_ab(s, kx), so

    W[i, j] = sum_ab  c_i[a] conj(c_j[b]) g0[j] Lab_ab(s, kx),

with g0 = (1, 1, -1, -1) the diagonal of gamma0.  Equal-index pairs give
the diagonal functions L_n; index pairs differing by one give the complex
functions whose symmetrized combination is sqrt(2) M_n.  Under phase-space
integration the mixed terms carry exactly the M_n bookkeeping, so every
averaged quantity can also be read off the printed coefficient forms.
"""

import math
from dataclasses import dataclass

import numpy as np

from .basis import PhaseSpaceCache, frak_L, lag_L
from .landau import GAMMA, GAMMA0, GAMMA5, METRIC, PhysParams, level_data
from .quadrature import NonConvergenceError
from .states import CatSpec, GaussianSpec, cat_terms, evaluate_terms, gaussian_terms

__all__ = [
    "G0_SIGN",
    "GaussianWignerCoeffs",
    "gaussian_coeffs",
    "wigner_from_terms",
    "gaussian_wigner",
    "cat_wigner",
    "wigner_matrix",
    "quasi_density",
    "CliffordComponents",
    "clifford_components",
    "clifford_reconstruct",
    "weyl_oracle",
    "max_mode_index",
]

G0_SIGN = np.array([1.0, 1.0, -1.0, -1.0])


@dataclass(frozen=True)
class GaussianWignerCoeffs:
    """Time-dependent coefficients of the single-level (i = 1) Wigner matrix.

    They satisfy |a13|^2 = -a11 a33, |a14|^2 = -a11 a44, a34^2 = a33 a44 and
    the normalization a11 - a33 - a44 = 1.
    """

    a11: float
    a33: float
    a44: float
    a13: complex
    a31: complex
    a14: complex
    a41: complex
    a34: float
    a43: float


def gaussian_coeffs(n, t, p: PhysParams) -> GaussianWignerCoeffs:
    """Closed-form coefficients for level n >= 1 at time t."""
    if n < 1:
        raise ValueError("Wigner coefficients require n >= 1")
    lv = level_data(n, p)
    sn = math.sin(lv.E * t)
    cs = math.cos(lv.E * t)
    s2 = sn * sn
    eta, A, B = lv.eta, lv.A, lv.B
    K = A * A + B * B
    phase = cs + 1j * sn * (1.0 - 2.0 * eta)
    a13 = -2j * eta * sn * A * phase
    a14 = 2j * eta * sn * B * phase
    return GaussianWignerCoeffs(
        a11=1.0 - 4.0 * K * eta**2 * s2,
        a33=-4.0 * A**2 * eta**2 * s2,
        a44=-4.0 * B**2 * eta**2 * s2,
        a13=a13,
        a31=-np.conj(a13),
        a14=a14,
        a41=-np.conj(a14),
        a34=-4.0 * A * B * eta**2 * s2,
        a43=-4.0 * A * B * eta**2 * s2,
    )


def wigner_from_terms(terms, s, kx, eB=1.0, cache=None):
    """Exact Wigner matrix of a term-table state; shape (4, 4) + broadcast(s, kx)."""
    if cache is None:
        cache = PhaseSpaceCache(s, kx, eB)
    shape = np.broadcast(cache.rho, cache.rho).shape
    weights = {}
    for i in range(4):
        for idx_a, ca in terms[i]:
            for j in range(4):
                for idx_b, cb in terms[j]:
                    w = ca * np.conj(cb) * G0_SIGN[j]
                    key = (idx_a, idx_b)
                    mat = weights.get(key)
                    if mat is None:
                        mat = np.zeros((4, 4), dtype=complex)
                        weights[key] = mat
                    mat[i, j] += w
    W = np.zeros((4, 4) + shape, dtype=complex)
    for (a, b), mat in sorted(weights.items()):
        Lab = cache.frak(a, b)
        for i, j in zip(*np.nonzero(mat)):
            W[i, j] += mat[i, j] * Lab
    return W


def gaussian_wigner(n, t, s, kx, p: PhysParams, i=1):
    """Wigner matrix of the single-level state with polarization i.

    For i = 1 the matrix is assembled from the closed-form coefficients:
    the (1,1), (1,3), (3,1), (3,3) entries ride on L_{n-1}, the (4,4) entry
    on L_n, and the mode-mixing entries (1,4), (4,1), (3,4), (4,3) on the
    complex pair Lab_{n-1,n} / Lab_{n,n-1} produced by the transform of an
    (F_{n-1}, F_n) product.  The (3,4) pair carries weight -a34 = +|a34|,
    the sign that follows from the outer product of the lower components.
    Other polarizations are built directly from their term tables.
    """
    if i == 1:
        c = gaussian_coeffs(n, t, p)
        shape = np.broadcast(np.asarray(s, dtype=float), np.asarray(kx, dtype=float)).shape
        W = np.zeros((4, 4) + shape, dtype=complex)
        Lm = lag_L(n - 1, s, kx, p.eB)
        Ln = lag_L(n, s, kx, p.eB)
        Fup = frak_L(n - 1, n, s, kx, p.eB)
        Fdn = frak_L(n, n - 1, s, kx, p.eB)
        W[0, 0] = c.a11 * Lm
        W[0, 2] = c.a13 * Lm
        W[2, 0] = c.a31 * Lm
        W[2, 2] = c.a33 * Lm
        W[3, 3] = c.a44 * Ln
        W[0, 3] = c.a14 * Fup
        W[3, 0] = c.a41 * Fdn
        W[2, 3] = -c.a34 * Fup
        W[3, 2] = -c.a43 * Fdn
        return W
    return wigner_from_terms(gaussian_terms(GaussianSpec(i=i, n=n, p=p), t), s, kx, p.eB)


def cat_wigner(spec: CatSpec, t, s, kx, cache=None):
    """Wigner matrix of a truncated cat state via its double mode series.

    The term table is materialized once per (spec, t); all seven nonzero
    elements come out of the generic pair rule, normalized by the full
    series constant so that the integrated trace is 1 - Er(a, l).
    """
    return wigner_from_terms(cat_terms(spec, t), s, kx, spec.p.eB, cache=cache)


def wigner_matrix(spec, t, s, kx, cache=None):
    """Dispatch on the state spec: Gaussian or cat."""
    if isinstance(spec, GaussianSpec):
        return gaussian_wigner(spec.n, t, s, kx, spec.p, i=spec.i)
    if isinstance(spec, CatSpec):
        return cat_wigner(spec, t, s, kx, cache=cache)
    raise TypeError(f"unsupported state spec: {type(spec).__name__}")


def quasi_density(W, imag_tol=1e-12):
    """Tr[W gamma0] = W11 + W22 - W33 - W44, a real quasi-probability density."""
    tr = W[0, 0] + W[1, 1] - W[2, 2] - W[3, 3]
    resid = np.max(np.abs(np.imag(tr))) if np.ndim(tr) else abs(np.imag(tr))
    if resid > imag_tol:
        raise ValueError(f"quasi-density has imaginary residue {resid:.3e}")
    return np.real(tr)


@dataclass(frozen=True)
class CliffordComponents:
    """The 16 components of a Wigner matrix on the Clifford generators:
    scalar, pseudoscalar, vector, axial vector, antisymmetric tensor."""

    S: complex
    P: complex
    V: np.ndarray
    A: np.ndarray
    T: np.ndarray


def _sigma_upper(mu, nu):
    return 0.5j * (GAMMA[mu] @ GAMMA[nu] - GAMMA[nu] @ GAMMA[mu])


def _tr_project(W, M):
    return np.einsum("ij...,ji->...", W, M) / 4.0


def clifford_components(W) -> CliffordComponents:
    """Trace projections with the appropriate generator and 1/4 normalization.

    The decomposition W = S + i gamma5 P + gamma_mu V^mu + gamma_mu gamma5 A^mu
    + (1/2) sigma_munu T^munu is a basis of the 4x4 matrices, so the
    components reconstruct W exactly (complex components for generic input,
    real for physical Wigner matrices).
    """
    S = _tr_project(W, np.eye(4, dtype=complex))
    P = _tr_project(W, -1j * GAMMA5)
    V = np.stack([_tr_project(W, GAMMA[mu]) for mu in range(4)])
    A = np.stack([_tr_project(W, GAMMA5 @ GAMMA[mu]) for mu in range(4)])
    shape = np.shape(S)
    T = np.zeros((4, 4) + shape, dtype=complex)
    for mu in range(4):
        for nu in range(mu + 1, 4):
            comp = _tr_project(W, _sigma_upper(mu, nu))
            T[mu, nu] = comp
            T[nu, mu] = -comp
    return CliffordComponents(S=S, P=P, V=V, A=A, T=T)


def clifford_reconstruct(comp: CliffordComponents):
    shape = np.shape(comp.S)
    W = np.zeros((4, 4) + shape, dtype=complex)
    eye = np.eye(4, dtype=complex)
    add = lambda M, c: np.add(W, M.reshape(M.shape + (1,) * len(shape)) * c, out=W)
    add(eye, comp.S)
    add(1j * GAMMA5, comp.P)
    for mu in range(4):
        glow = METRIC[mu, mu]
        add(glow * GAMMA[mu], comp.V[mu])
        add(glow * GAMMA[mu] @ GAMMA5, comp.A[mu])
        for nu in range(mu + 1, 4):
            add(METRIC[mu, mu] * METRIC[nu, nu] * _sigma_upper(mu, nu), comp.T[mu, nu])
    return W


def max_mode_index(terms):
    return max((idx for comp in terms for idx, _ in comp), default=0)


def _oracle_nodes(smax, kmax, band, pad=6.0):
    # aliasing gap of ~30 beyond the integrand bandwidth; Gaussian decay
    # makes the endpoint truncation error negligible at this reach
    reach = band + pad
    u_half = reach + min(smax, reach)
    du = 2.0 * math.pi / (2.0 * kmax + 2.0 * band + 30.0)
    n = int(math.ceil(2.0 * u_half / du)) | 1
    u = np.linspace(-u_half, u_half, n)
    w = np.full(n, u[1] - u[0])
    w[0] *= 0.5
    w[-1] *= 0.5
    return u, w


def weyl_oracle(state, t, s, kx, eB=1.0, max_mode=None, quad=None, u_nodes=None, check=True):
    """Brute-force Wigner matrix by numerical quadrature of the transform.

    ``state(s_values, t)`` must return the four spinor components on an
    array of s values.  Independent of every closed form above: the
    integral pi^-1 int du e^(2i kx u) phi(s+u) phi^dag(s-u) gamma0 is
    evaluated with a trapezoid rule in u sized from ``max_mode`` (the
    highest oscillator index in the state); a QuadratureSpec ``quad`` (its
    s window and node count become the u rule) or explicit ``u_nodes``
    override the automatic sizing.  With ``check`` a halved-step probe
    guards against quadrature non-convergence.

    Returns shape (4, 4, len(s), len(kx)).
    """
    s = np.atleast_1d(np.asarray(s, dtype=float))
    kx = np.atleast_1d(np.asarray(kx, dtype=float))
    if u_nodes is not None:
        u, wu = u_nodes
    elif quad is not None:
        from .quadrature import _nodes_1d

        u, wu = _nodes_1d(quad.s_window, quad.ns, quad.rule)
    else:
        if max_mode is None:
            raise ValueError("weyl_oracle needs max_mode, quad, or u_nodes")
        band = math.sqrt(2.0 * max(max_mode, 1) + 1.0)
        u, wu = _oracle_nodes(np.max(np.abs(s)), np.max(np.abs(kx)), band)
    phase = np.exp(2j * np.outer(u, kx)) * wu[:, None]

    def transform(u_arr, ph):
        out = np.empty((4, 4, len(s), kx.size), dtype=complex)
        for idx, sv in enumerate(s):
            left = state(sv + u_arr, t)
            right = np.conj(state(sv - u_arr, t))
            prod = left[:, None, :] * right[None, :, :]
            out[:, :, idx, :] = (prod @ ph) / math.pi
        return out * G0_SIGN[None, :, None, None]

    W = transform(u, phase)
    if check:
        u2 = 0.5 * (u[:-1] + u[1:])
        all_u = np.concatenate([u, u2])
        w2 = np.full(all_u.size, 0.5 * (u[1] - u[0]))
        w2[0] = w2[len(u) - 1] = 0.25 * (u[1] - u[0])
        phase2 = np.exp(2j * np.outer(all_u, kx[:: max(kx.size // 4, 1)])) * w2[:, None]
        mid = len(s) // 2
        probe_s = s[mid : mid + 1]
        left = state(probe_s[0] + all_u, t)
        right = np.conj(state(probe_s[0] - all_u, t))
        prod = left[:, None, :] * right[None, :, :]
        fine = (prod @ phase2) / math.pi * G0_SIGN[None, :, None]
        coarse = W[:, :, mid, :: max(kx.size // 4, 1)]
        dev = np.max(np.abs(fine - coarse))
        if dev > 1e-8:
            raise NonConvergenceError(f"Weyl quadrature not converged: step halving moved entries by {dev:.3e}")
    return W
