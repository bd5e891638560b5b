"""Landau-level parameters, Dirac-representation gamma matrices, and
stationary spinors for a charged fermion in a uniform magnetic field.

Conventions: natural units (hbar = c = 1), field along z with coupling
eB > 0, transverse plane-wave momentum ky fixed to 0 so that both parity
sectors share the same dimensionless coordinate s = sqrt(eB) x.  Spinor
components are ordered (parity+, spin up), (parity+, spin down),
(parity-, spin up), (parity-, spin down), matching gamma0 = diag(1,1,-1,-1).
"""

import math
from dataclasses import dataclass

import numpy as np

from .basis import f_basis, hermite_functions

__all__ = [
    "PhysParams",
    "LevelData",
    "level_data",
    "stationary_spinor",
    "orthonormality_defect",
    "GAMMA",
    "GAMMA0",
    "GAMMA5",
    "SPIN_FLIP",
    "METRIC",
    "QuadratureWindowError",
]


@dataclass(frozen=True)
class PhysParams:
    """The three knobs of every formula: rest mass, longitudinal momentum,
    magnetic coupling.  ky is fixed to 0."""

    m: float = 1.0
    kz: float = 1.0
    eB: float = 1.0

    def __post_init__(self):
        if self.eB <= 0:
            raise ValueError("eB must be positive")
        if self.m < 0:
            raise ValueError("m must be non-negative")


@dataclass(frozen=True)
class LevelData:
    """Per-level derived quantities for the n-th Landau level."""

    n: int
    E: float
    A: float
    B: float
    eta: float


def level_data(n, p: PhysParams) -> LevelData:
    """Energy and weight parameters of Landau level n >= 0.

    E_n = sqrt(m^2 + kz^2 + 2 n eB),  A_n = kz/(E_n + m),
    B_n = sqrt(2 n eB)/(E_n + m),     eta_n = (E_n + m)/(2 E_n),
    satisfying eta_n (A_n^2 + B_n^2 + 1) = 1 and 0 <= A_n, B_n <= 1.
    """
    if n < 0:
        raise ValueError("level index must be non-negative")
    E = math.sqrt(p.m**2 + p.kz**2 + 2.0 * n * p.eB)
    A = p.kz / (E + p.m)
    B = math.sqrt(2.0 * n * p.eB) / (E + p.m)
    eta = (E + p.m) / (2.0 * E)
    return LevelData(n=n, E=E, A=A, B=B, eta=eta)


# Dirac representation
GAMMA0 = np.diag([1.0, 1.0, -1.0, -1.0]).astype(complex)

_SX = np.array([[0, 1], [1, 0]], dtype=complex)
_SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
_SZ = np.array([[1, 0], [0, -1]], dtype=complex)
_Z2 = np.zeros((2, 2), dtype=complex)


def _offdiag(sig):
    return np.block([[_Z2, sig], [-sig, _Z2]])


GAMMA = (GAMMA0, _offdiag(_SX), _offdiag(_SY), _offdiag(_SZ))
GAMMA5 = np.block([[_Z2, np.eye(2)], [np.eye(2), _Z2]]).astype(complex)
METRIC = np.diag([1.0, -1.0, -1.0, -1.0])

# gamma2 = i sigma_y x sigma_y; the spin-flip kernel gamma2 gamma0 implements
# the two-qubit conjugation used by the concurrence.
SPIN_FLIP = GAMMA[2] @ GAMMA0
SIGMA_Y_SIGMA_Y = np.kron(_SY, _SY)


def stationary_spinor(n, r, pol, s, p: PhysParams):
    """Stationary spinor u^pol_{n,r}(s) of level n, parity r in {1,2},
    spin projection pol in {+1,-1}.

    Returns a complex array of shape (4,) + shape(s).  The F_{n-1} entries
    use the negative-index convention F_{-1} = 0, so for n = 0 half the
    spinors are identically null (the lowest level carries a single spin
    state per parity sector).
    """
    if n < 0:
        raise ValueError("level index must be non-negative")
    if r not in (1, 2):
        raise ValueError("parity r must be 1 or 2")
    if pol not in (1, -1):
        raise ValueError("spin projection must be +1 or -1")
    lv = level_data(n, p)
    s = np.asarray(s, dtype=float)
    fn = f_basis(n, s, p.eB)
    fnm1 = f_basis(n - 1, s, p.eB)
    zero = np.zeros_like(fn)
    root_eta = math.sqrt(lv.eta)
    if r == 1 and pol == 1:
        comps = (fnm1, zero, lv.A * fnm1, -lv.B * fn)
    elif r == 1 and pol == -1:
        comps = (zero, fn, -lv.B * fnm1, -lv.A * fn)
    elif r == 2 and pol == 1:
        comps = (lv.B * fnm1, lv.A * fn, zero, fn)
    else:
        comps = (-lv.A * fnm1, lv.B * fn, fnm1, zero)
    return root_eta * np.stack(comps).astype(complex)


class QuadratureWindowError(ValueError):
    """The integration window is too narrow to hold the requested states."""


def orthonormality_defect(n_max, p: PhysParams, quad):
    """Maximum deviation of all pairwise spinor inner products from their
    Kronecker targets, over levels n <= n_max, both parities and spins.

    ``quad`` is either a QuadratureSpec (its s window and node count define
    the 1-dim rule) or an explicit (nodes, weights) pair.  Inner products
    are int u^dag v dx = (1/sqrt(eB)) int u^dag v ds.  Raises
    QuadratureWindowError when the rule cannot even integrate F_{n_max}^2
    to sqrt(eB) within 1e-6, which signals a too-narrow window.

    Identically null spinors (n = 0 with the empty spin slot) are skipped.
    """
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    if hasattr(quad, "s_window"):
        from .quadrature import _nodes_1d

        s_nodes, weights = _nodes_1d(quad.s_window, quad.ns, quad.rule)
    else:
        s_nodes, weights = quad
    s_nodes = np.asarray(s_nodes, dtype=float)
    weights = np.asarray(weights, dtype=float)
    psi = hermite_functions(max(n_max, 1), s_nodes)
    norm_top = np.dot(weights, psi[n_max] ** 2)  # = 1 for an adequate rule
    if abs(norm_top - 1.0) > 1e-6:
        raise QuadratureWindowError(
            f"window cannot resolve F_{n_max}: norm defect {abs(norm_top - 1.0):.2e}"
        )
    states = []
    for n in range(n_max + 1):
        for r in (1, 2):
            for pol in (1, -1):
                if n == 0 and ((r, pol) == (1, 1) or (r, pol) == (2, -1)):
                    continue  # null at the lowest level
                states.append(stationary_spinor(n, r, pol, s_nodes, p))
    u = np.stack(states)  # (nstates, 4, npts)
    gram = np.einsum("acp,p,bcp->ab", np.conj(u), weights, u) / math.sqrt(p.eB)
    defect = np.abs(gram - np.eye(len(states)))
    return float(defect.max())
