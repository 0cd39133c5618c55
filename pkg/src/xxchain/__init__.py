"""Equal-time spin-spin correlators of the XX chain, by mutually independent routes."""

__version__ = "0.1.0"

from .greens import INFINITE, LatticeSpec, g0
from .exact import (
    CorrelatorSample,
    LogProduct,
    Route,
    correlator,
    correlator_det,
    log_r_table,
    r_det,
    r_value,
)
from .ed import ed_correlator, ed_ground_state, ed_spectral_gap, spin_sector
from .special import bernoulli_numbers, polygamma, zeta_em, zeta_odd
from .amplitude import (
    ConstantsReport,
    amplitude_report,
    asymptotic_params,
    first_term_comparison,
    glaisher,
    log_r_barnes,
    log_r_gamma_product,
    log_r_series,
    lukyanov_integral,
)
from .asymptotics import (
    AsymptoticParams,
    LuttingerParams,
    asym_finite,
    asym_infinite,
    finite_size_energy,
    luttinger_from_lambda,
)
from .errors import DomainError, SizeError

__all__ = [
    "__version__",
    "INFINITE",
    "LatticeSpec",
    "g0",
    "CorrelatorSample",
    "LogProduct",
    "Route",
    "correlator",
    "correlator_det",
    "log_r_table",
    "r_det",
    "r_value",
    "ed_correlator",
    "ed_ground_state",
    "ed_spectral_gap",
    "spin_sector",
    "bernoulli_numbers",
    "polygamma",
    "zeta_em",
    "zeta_odd",
    "ConstantsReport",
    "amplitude_report",
    "asymptotic_params",
    "first_term_comparison",
    "glaisher",
    "log_r_barnes",
    "log_r_gamma_product",
    "log_r_series",
    "lukyanov_integral",
    "AsymptoticParams",
    "LuttingerParams",
    "asym_finite",
    "asym_infinite",
    "finite_size_energy",
    "luttinger_from_lambda",
    "DomainError",
    "SizeError",
]
