"""Polynomial recurrences and the normalized phase-space basis functions.

Everything here is dimensionless: positions enter as s = sqrt(eB)*x and
transverse momenta as kx in units of sqrt(eB).  The magnetic coupling eB
only appears through explicit sqrt(eB) prefactors, so the orthonormality
relations of the basis hold verbatim:

    int F_n F_m ds                     = sqrt(eB) * delta_nm
    int dx int dkx  L_n                = 1
    int dx int dkx  M_n                = 0
    int dx int dkx  L_n L_m            = delta_nm * sqrt(eB)/(2 pi)
    int dx int dkx  M_n M_m            = delta_nm * sqrt(eB)/(2 pi)
    int dx int dkx  Lab_mn             = delta_mn
    int dx int dkx  Lab_mn Lab_m'n'    = delta_mn' delta_nm' * sqrt(eB)/(2 pi)

All functions are pure and accept scalars or numpy arrays for the
phase-space arguments.
"""

import math
from typing import NamedTuple

import numpy as np

__all__ = [
    "BasisPoint",
    "hermite",
    "laguerre",
    "hermite_functions",
    "f_basis",
    "lag_L",
    "lag_M",
    "frak_L",
]


class BasisPoint(NamedTuple):
    """A (batch of) dimensionless phase-space point(s); eB > 0."""

    s: float | np.ndarray
    kx: float | np.ndarray
    eB: float = 1.0


def hermite(n, s):
    """Physicists' Hermite polynomial H_n(s) by three-term recurrence.

    H_{k+1} = 2 s H_k - 2 k H_{k-1},  H_0 = 1,  H_1 = 2 s.
    """
    if n < 0:
        raise ValueError("hermite requires n >= 0")
    s = np.asarray(s, dtype=float)
    h_prev = np.ones_like(s)
    if n == 0:
        return h_prev
    h = 2.0 * s
    for k in range(1, n):
        h, h_prev = 2.0 * s * h - 2.0 * k * h_prev, h
    return h


def laguerre(n, alpha, z):
    """Generalized Laguerre polynomial L_n^(alpha)(z), integer alpha >= 0.

    Upward recurrence in the degree,
    (k+1) L_{k+1} = (2k + 1 + alpha - z) L_k - (k + alpha) L_{k-1},
    which is stable for the weighted evaluations used here.
    """
    if n < 0 or alpha < 0:
        raise ValueError("laguerre requires n >= 0 and alpha >= 0")
    z = np.asarray(z, dtype=float)
    l_prev = np.ones_like(z)
    if n == 0:
        return l_prev
    l = 1.0 + alpha - z
    for k in range(1, n):
        l, l_prev = ((2.0 * k + 1.0 + alpha - z) * l - (k + alpha) * l_prev) / (k + 1.0), l
    return l


def hermite_functions(nmax, s):
    """Orthonormal Hermite functions psi_0 .. psi_nmax, stacked on axis 0.

    psi_n(s) = (2^n n! sqrt(pi))^(-1/2) e^(-s^2/2) H_n(s), computed with the
    normalized recurrence so large n neither overflow nor lose the
    exponential weight.
    """
    s = np.asarray(s, dtype=float)
    out = np.empty((nmax + 1,) + s.shape, dtype=float)
    out[0] = np.pi ** (-0.25) * np.exp(-0.5 * s * s)
    if nmax >= 1:
        out[1] = math.sqrt(2.0) * s * out[0]
    for k in range(1, nmax):
        out[k + 1] = math.sqrt(2.0 / (k + 1)) * s * out[k] - math.sqrt(k / (k + 1)) * out[k - 1]
    return out


def f_basis(n, s, eB=1.0):
    """Oscillator eigenfunction F_n(s) normalized to int F_n F_m ds = sqrt(eB) delta_nm.

    Negative n returns exactly 0, which keeps superposition code branch-free.
    """
    s = np.asarray(s, dtype=float)
    if n < 0:
        return np.zeros_like(s)
    return eB**0.25 * hermite_functions(n, s)[n]


def _radius2(s, kx):
    s = np.asarray(s, dtype=float)
    kx = np.asarray(kx, dtype=float)
    return s * s + kx * kx


def lag_L(n, s, kx, eB=1.0):
    """Diagonal phase-space function L_n(s, kx).

    L_n = (-1)^n (sqrt(eB)/pi) e^(-(s^2+kx^2)) L_n[2(s^2+kx^2)]; 0 for n < 0.
    """
    rho = _radius2(s, kx)
    if n < 0:
        return np.zeros_like(rho)
    return (-1.0) ** n * (math.sqrt(eB) / math.pi) * np.exp(-rho) * laguerre(n, 0, 2.0 * rho)


def lag_M(n, s, kx, eB=1.0, strict=False):
    """Off-diagonal phase-space function M_n(s, kx), defined for n >= 1.

    M_n = ((-1)^n / 2 pi) sqrt(eB/n) e^(-(s^2+kx^2)) d/ds L_n[2(s^2+kx^2)],
    with the derivative taken exactly through dL_n/dz = -L_{n-1}^(1)(z), so
    d/ds L_n[2(s^2+kx^2)] = -4 s L_{n-1}^(1)[2(s^2+kx^2)].

    The 1/sqrt(n) normalization is singular at n = 0; M_0 is defined as 0
    (raise instead when strict=True) and never occurs in a Wigner matrix.
    """
    rho = _radius2(s, kx)
    if n <= 0:
        if strict:
            raise ValueError("lag_M requires n >= 1")
        return np.zeros_like(rho)
    dlag = -4.0 * np.asarray(s, dtype=float) * laguerre(n - 1, 1, 2.0 * rho)
    return (-1.0) ** n / (2.0 * math.pi) * math.sqrt(eB / n) * np.exp(-rho) * dlag


def _fact_ratio_sqrt(m, n):
    # sqrt(m!/n!) for 0 <= m <= n, kept exact in integer arithmetic
    r = 1
    for k in range(m + 1, n + 1):
        r *= k
    return 1.0 / math.sqrt(r)


def frak_L(m, n, s, kx, eB=1.0):
    """Mixed-index phase-space function Lab_mn(s, kx), complex valued.

    For n >= m:
        (sqrt(eB)/pi) sqrt(m!/n!) (-1)^m e^(-(s^2+kx^2))
            [sqrt(2)(s - i kx)]^(n-m) L_m^(n-m)[2(s^2+kx^2)]
    and for m >= n the complex-conjugate branch with (s + i kx).  The two
    branches agree for m = n, where Lab_nn = L_n.  Swapping indices
    conjugates the value: Lab_nm = conj(Lab_mn).
    """
    if m < 0 or n < 0:
        raise ValueError("frak_L requires m, n >= 0")
    rho = _radius2(s, kx)
    s = np.asarray(s, dtype=float)
    kx = np.asarray(kx, dtype=float)
    if n >= m:
        lo, d = m, n - m
        z = math.sqrt(2.0) * (s - 1j * kx)
    else:
        lo, d = n, m - n
        z = math.sqrt(2.0) * (s + 1j * kx)
    pref = (math.sqrt(eB) / math.pi) * _fact_ratio_sqrt(lo, lo + d) * (-1.0) ** lo
    return pref * np.exp(-rho) * z**d * laguerre(lo, d, 2.0 * rho)


class PhaseSpaceCache:
    """Memoized basis evaluation on a fixed (s, kx) grid.

    Wigner-matrix assembly touches the same Lab_mn many times; this caches
    the Laguerre tables per alpha and the complex powers per index offset,
    so a full cat-state matrix costs one recurrence sweep per distinct
    offset instead of one per term.
    """

    def __init__(self, s, kx, eB=1.0):
        self.s = np.asarray(s, dtype=float)
        self.kx = np.asarray(kx, dtype=float)
        self.eB = float(eB)
        self.rho = self.s * self.s + self.kx * self.kx
        self.z = 2.0 * self.rho
        self.expw = np.exp(-self.rho)
        self._zminus = math.sqrt(2.0) * (self.s - 1j * self.kx)
        self._powers = {0: np.ones_like(self._zminus)}
        self._lag = {}

    def _power(self, d):
        # (sqrt(2)(s - i kx))^d, built incrementally
        if d not in self._powers:
            self._powers[d] = self._power(d - 1) * self._zminus
        return self._powers[d]

    def _laguerre_table(self, nmax, alpha):
        have = self._lag.get(alpha)
        if have is not None and len(have) > nmax:
            return have
        table = [np.ones_like(self.z)]
        if nmax >= 1:
            table.append(1.0 + alpha - self.z)
        for k in range(1, nmax):
            table.append(((2.0 * k + 1.0 + alpha - self.z) * table[k] - (k + alpha) * table[k - 1]) / (k + 1.0))
        self._lag[alpha] = table
        return table

    def frak(self, m, n):
        if m < 0 or n < 0:
            raise ValueError("frak_L requires m, n >= 0")
        lo, d = (m, n - m) if n >= m else (n, m - n)
        lag = self._laguerre_table(lo, d)[lo]
        pw = self._power(d)
        if n < m:
            pw = np.conj(pw)
        pref = (math.sqrt(self.eB) / math.pi) * _fact_ratio_sqrt(lo, lo + d) * (-1.0) ** lo
        return pref * self.expw * pw * lag
