"""Time-dependent localized Dirac states: the Gaussian quartet and
symmetric/anti-symmetric cat superpositions with truncation control.

Every state handled here is a finite sum of oscillator modes per spinor
component, so states are represented internally as *term tables*: for each
of the four components, a list of (mode index, complex coefficient) pairs
valid at one instant.  The same tables drive pointwise evaluation, the
closed-form Wigner matrices and the brute-force transform oracle.

Plane-wave phases in y and z are never represented; the dynamics lives
entirely on the s-coordinate.
"""

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .basis import hermite_functions
from .landau import LevelData, PhysParams, level_data

__all__ = [
    "GaussianSpec",
    "CatSpec",
    "TruncationWarning",
    "gaussian_terms",
    "gaussian_eval",
    "cat_levels",
    "cat_level_weights",
    "cat_terms",
    "cat_eval",
    "cat_coefficients",
    "cat_norm_constant",
    "truncation_error",
    "auto_truncation",
    "evaluate_terms",
]

DEFAULT_TRUNCATION_EPS = 1e-6


class TruncationWarning(UserWarning):
    """Emitted when a requested truncation keeps too little of the series."""


@dataclass(frozen=True)
class GaussianSpec:
    """A single-level localized state with polarization index i in 1..4.

    i in {1, 3} starts as a Gaussian profile for n = 1 and acquires
    nontrivial dynamics; i in {2, 4} with n = 0 stays Gaussian forever.
    """

    i: int
    n: int
    p: PhysParams

    def __post_init__(self):
        if self.i not in (1, 2, 3, 4):
            raise ValueError("polarization index must be in 1..4")
        if self.n < 0:
            raise ValueError("level index must be non-negative")
        if self.n == 0 and self.i in (1, 3):
            raise ValueError("polarizations 1 and 3 are null at n = 0; use n >= 1")

    @property
    def level(self) -> LevelData:
        return level_data(self.n, self.p)


@dataclass(frozen=True)
class CatSpec:
    """Symmetric (S) or anti-symmetric (A) superposition of two Gaussian
    packets centered at s = +-a, built on the i = 1 polarization.

    ``l`` is the truncation index: the series keeps l+1 terms, i.e. levels
    {1, 3, ..., 2l+1} for S and {2, 4, ..., 2l+2} for A.  When l is None it
    is chosen automatically as the smallest value with truncation error
    below ``epsilon``.
    """

    symmetry: str
    a: float
    p: PhysParams
    l: int | None = None
    epsilon: float = DEFAULT_TRUNCATION_EPS

    def __post_init__(self):
        if self.symmetry not in ("S", "A"):
            raise ValueError("symmetry must be 'S' or 'A'")
        if self.a <= 0:
            raise ValueError("separation a must be positive")
        if self.l is not None and self.l < 0:
            raise ValueError("truncation index must be non-negative")

    @property
    def l_effective(self) -> int:
        if self.l is not None:
            return self.l
        return auto_truncation(self.a, self.epsilon, self.symmetry)

    @property
    def truncation(self) -> float:
        return truncation_error(self.a, self.l_effective, self.symmetry)

    @property
    def levels(self) -> tuple[int, ...]:
        return cat_levels(self.symmetry, self.l_effective)


def _empty_terms():
    return ([], [], [], [])


def gaussian_terms(spec: GaussianSpec, t):
    """Term table of the normalized state G^(i)_n at time t.

    With c(t) = exp(-i E t) + (A^2 + B^2) exp(i E t) and the overall eta_n
    normalization, the four polarizations read

        i=1: ( eta c F_{n-1},  0,  -2i eta A sin(Et) F_{n-1},  2i eta B sin(Et) F_n )
        i=2: ( 0,  eta c F_n,   2i eta B sin(Et) F_{n-1},      2i eta A sin(Et) F_n )
        i=3: ( -2i eta A sin(Et) F_{n-1},  2i eta B sin(Et) F_n,  eta conj(c) F_{n-1},  0 )
        i=4: (  2i eta B sin(Et) F_{n-1},  2i eta A sin(Et) F_n,  0,  eta conj(c) F_n )

    each with unit norm for all t.  Modes with negative index or zero
    coefficient are dropped.
    """
    lv = spec.level
    K = lv.A**2 + lv.B**2
    c = np.exp(-1j * lv.E * t) + K * np.exp(1j * lv.E * t)
    osc = 2j * math.sin(lv.E * t)
    eta = lv.eta
    i, n = spec.i, spec.n
    if i == 1:
        raw = ((0, n - 1, eta * c), (2, n - 1, -osc * eta * lv.A), (3, n, osc * eta * lv.B))
    elif i == 2:
        raw = ((1, n, eta * c), (2, n - 1, osc * eta * lv.B), (3, n, osc * eta * lv.A))
    elif i == 3:
        raw = ((0, n - 1, -osc * eta * lv.A), (1, n, osc * eta * lv.B), (2, n - 1, eta * np.conj(c)))
    else:
        raw = ((0, n - 1, osc * eta * lv.B), (1, n, osc * eta * lv.A), (3, n, eta * np.conj(c)))
    terms = _empty_terms()
    for comp, idx, coeff in raw:
        if idx >= 0 and coeff != 0:
            terms[comp].append((idx, complex(coeff)))
    return terms


def evaluate_terms(terms, s, eB):
    """Evaluate a term table pointwise: complex array (4,) + shape(s)."""
    s = np.asarray(s, dtype=float)
    nmax = max((idx for comp in terms for idx, _ in comp), default=0)
    psi = eB**0.25 * hermite_functions(nmax, s)
    out = np.zeros((4,) + s.shape, dtype=complex)
    for comp in range(4):
        for idx, coeff in terms[comp]:
            out[comp] += coeff * psi[idx]
    return out


def gaussian_eval(spec: GaussianSpec, s, t):
    """The four spinor components of G^(i)_n at (s, t); unit norm for all t."""
    return evaluate_terms(gaussian_terms(spec, t), s, spec.p.eB)


def cat_levels(symmetry, l):
    """Landau levels kept through truncation index l: odd levels for S,
    even levels for A."""
    if symmetry == "S":
        return tuple(2 * j + 1 for j in range(l + 1))
    if symmetry == "A":
        return tuple(2 * j + 2 for j in range(l + 1))
    raise ValueError("symmetry must be 'S' or 'A'")


def cat_level_weights(spec: CatSpec):
    """Per-level squared series weights v_n^2 = (a^2/2)^(n-1) / (n-1)!.

    These are the weights of the hyperbolic-cosine (S) / -sine (A) series:
    summed over the full level set they give cosh(a^2/2) or sinh(a^2/2).
    Returns (levels, v2) with a deterministic ascending order.
    """
    half = spec.a**2 / 2.0
    levels = spec.levels
    v2 = np.array([half ** (n - 1) / math.factorial(n - 1) for n in levels])
    return levels, v2


def cat_norm_constant(symmetry, a):
    """Series normalization constant: 1/cosh(a^2/2) for S, 1/sinh(a^2/2) for A.

    The anti-symmetric superposition degenerates to the null state at a = 0.
    """
    half = a**2 / 2.0
    if symmetry == "S":
        return 1.0 / math.cosh(half)
    if symmetry == "A":
        if a == 0:
            raise ValueError("anti-symmetric cat state is null at a = 0")
        return 1.0 / math.sinh(half)
    raise ValueError("symmetry must be 'S' or 'A'")


def truncation_error(a, l, symmetry="S"):
    """Normalized series-truncation error Er(a, l).

    Er = 1 - S_l / cosh(a^2/2) with S_l the cosh Taylor series through term
    l (sinh variant for A states).  Er -> 0 as l -> infinity.
    """
    if a <= 0:
        raise ValueError("separation a must be positive")
    if l < 0:
        raise ValueError("truncation index must be non-negative")
    half = a**2 / 2.0
    if symmetry == "S":
        partial = sum(half ** (2 * j) / math.factorial(2 * j) for j in range(l + 1))
        return max(0.0, 1.0 - partial / math.cosh(half))  # clamp rounding residue
    if symmetry == "A":
        partial = sum(half ** (2 * j + 1) / math.factorial(2 * j + 1) for j in range(l + 1))
        return max(0.0, 1.0 - partial / math.sinh(half))
    raise ValueError("symmetry must be 'S' or 'A'")


def auto_truncation(a, eps=DEFAULT_TRUNCATION_EPS, symmetry="S", l_max=200):
    """Smallest truncation index with Er(a, l) < eps."""
    for l in range(l_max + 1):
        if truncation_error(a, l, symmetry) < eps:
            return l
    raise RuntimeError(f"truncation error stays above {eps} up to l = {l_max}")


def cat_coefficients(symmetry, a, jmax=None):
    """Superposition coefficients c_j = exp(-a^2/4) (a/sqrt(2))^j / sqrt(j!)
    on even oscillator indices j for S states, odd for A; zero elsewhere.

    j is the mode index of the upper spinor component at t = 0; the
    contributing Landau level is n = j + 1.  Returns the (j, c_j) pairs
    through jmax (default: one past the auto-truncation cutoff).
    """
    if jmax is None:
        jmax = 2 * auto_truncation(a, symmetry=symmetry) + 2
    keep = 0 if symmetry == "S" else 1
    out = []
    for j in range(jmax + 1):
        if j % 2 == keep:
            c = math.exp(-(a**2) / 4.0) * (a / math.sqrt(2.0)) ** j / math.sqrt(math.factorial(j))
        else:
            c = 0.0
        out.append((j, c))
    return out


def cat_terms(spec: CatSpec, t, warn=True):
    """Term table of the truncated, normalized cat state at time t.

    Level n contributes the i = 1 single-level table scaled by
    q_n = v_n sqrt(N_a); with the full level set the state has unit norm,
    truncation removes exactly Er(a, l) of it.  A warning is emitted when
    the truncation error exceeds the spec's epsilon.
    """
    err = spec.truncation
    if warn and err > max(spec.epsilon, DEFAULT_TRUNCATION_EPS):
        warnings.warn(
            f"cat series truncated at l={spec.l_effective} with Er={err:.3e}",
            TruncationWarning,
            stacklevel=2,
        )
    levels, v2 = cat_level_weights(spec)
    norm = cat_norm_constant(spec.symmetry, spec.a)
    terms = _empty_terms()
    for n, w2 in zip(levels, v2):
        q = math.sqrt(w2 * norm)
        sub = gaussian_terms(GaussianSpec(i=1, n=n, p=spec.p), t)
        for comp in range(4):
            for idx, coeff in sub[comp]:
                terms[comp].append((idx, q * coeff))
    return terms


def cat_eval(spec: CatSpec, s, t):
    """The four spinor components of the cat state at (s, t).

    At t = 0 this is the two-packet profile
    (1/2)(eB/pi)^(1/4) [exp(-(s-a)^2/2) +- exp(-(s+a)^2/2)] in the first
    component only, up to the series normalization.
    """
    return evaluate_terms(cat_terms(spec, t), s, spec.p.eB)
