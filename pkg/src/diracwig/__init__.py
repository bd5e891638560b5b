"""diracwig: Wigner phase-space representation and spin-parity information
quantifiers for localized Dirac states in a uniform magnetic field."""

from .basis import BasisPoint, f_basis, frak_L, hermite, lag_L, lag_M, laguerre
from .infoquant import (
    InfoReport,
    chirality,
    classical_mutual_information,
    concurrence_avg,
    concurrence_local,
    decohere,
    eof,
    info_report,
    linear_entropies,
    mutual_information,
    purity,
)
from .landau import GAMMA, GAMMA0, GAMMA5, LevelData, PhysParams, level_data, stationary_spinor
from .quadrature import Grid, QuadratureSpec, integrate2d, make_grid, spec_for_modes
from .states import (
    CatSpec,
    GaussianSpec,
    cat_coefficients,
    cat_eval,
    cat_norm_constant,
    gaussian_eval,
    truncation_error,
)
from .wigner import (
    cat_wigner,
    clifford_components,
    clifford_reconstruct,
    gaussian_coeffs,
    gaussian_wigner,
    quasi_density,
    weyl_oracle,
    wigner_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "BasisPoint", "hermite", "laguerre", "f_basis", "lag_L", "lag_M", "frak_L",
    "PhysParams", "LevelData", "level_data", "stationary_spinor",
    "GAMMA", "GAMMA0", "GAMMA5",
    "GaussianSpec", "CatSpec", "gaussian_eval", "cat_eval", "cat_coefficients",
    "cat_norm_constant", "truncation_error",
    "gaussian_coeffs", "gaussian_wigner", "cat_wigner", "wigner_matrix",
    "quasi_density", "clifford_components", "clifford_reconstruct", "weyl_oracle",
    "InfoReport", "info_report", "purity", "linear_entropies", "mutual_information",
    "classical_mutual_information", "concurrence_avg", "concurrence_local",
    "decohere", "eof", "chirality",
    "QuadratureSpec", "Grid", "make_grid", "integrate2d", "spec_for_modes",
    "__version__",
]
