"""Open-cavity polariton spectra from weak to ultrastrong coupling.

Numerical engine for a one-dimensional cavity terminated by a perfect
mirror and a partially transparent membrane, filled with a Lorentz
dielectric. Exposes the bulk medium response, the discrete two-mode
diagonalization, boundary-condition cavity spectra with resonance and
dissipation-rate extraction, the cavity Green's function, an
input-output layer comparing two dissipation-rate prescriptions, and
equal-time field commutator scalings. Natural units throughout:
c = hbar = eps0 = 1.
"""

from .cavity import (
    CavityConfig,
    Resonance,
    find_resonances,
    intracavity_transfer,
    kappa_bare,
    kappa_mbc,
    lorentzian_extract,
    lorentzian_prefactor,
    reflection,
    tuned_length,
)
from .dielectric import (
    MediumParams,
    bulk_dispersion,
    epsilon,
    group_velocity,
    in_stop_band,
    refractive_index,
    wavenumber,
)
from .errors import (
    BranchError,
    ConfigError,
    PeakExtractionError,
    PolaritonError,
    ResonanceScanError,
    StepSizeError,
    StopBandError,
    ToleranceError,
)
from .fluct import (
    FieldCommutators,
    backward_commutator_decay,
    forward_commutator_decay,
    mode_commutators,
    solve_omega_q,
)
from .greens import (
    GreenCoefficients,
    delta_jump,
    green_coefficients,
    green_function,
    ode_residual,
)
from .hopfield import (
    BogoliubovProblem,
    Branch,
    HopfieldMode,
    bogoliubov_matrix,
    diagonalize,
    eigenfrequencies,
    photon_weight,
)
from .iomodel import (
    figure2_sweep,
    kappa_fit,
    kappa_rwa,
    output_amplitude,
    polariton_response,
)
from .tables import SweepTable, write_csv

__version__ = "0.1.0"

__all__ = [
    "BogoliubovProblem",
    "Branch",
    "BranchError",
    "CavityConfig",
    "ConfigError",
    "FieldCommutators",
    "GreenCoefficients",
    "HopfieldMode",
    "MediumParams",
    "PeakExtractionError",
    "PolaritonError",
    "Resonance",
    "ResonanceScanError",
    "StepSizeError",
    "StopBandError",
    "SweepTable",
    "ToleranceError",
    "backward_commutator_decay",
    "bogoliubov_matrix",
    "bulk_dispersion",
    "delta_jump",
    "diagonalize",
    "eigenfrequencies",
    "epsilon",
    "figure2_sweep",
    "find_resonances",
    "forward_commutator_decay",
    "green_coefficients",
    "green_function",
    "group_velocity",
    "in_stop_band",
    "intracavity_transfer",
    "kappa_bare",
    "kappa_fit",
    "kappa_mbc",
    "kappa_rwa",
    "lorentzian_extract",
    "lorentzian_prefactor",
    "mode_commutators",
    "ode_residual",
    "output_amplitude",
    "photon_weight",
    "polariton_response",
    "reflection",
    "refractive_index",
    "solve_omega_q",
    "tuned_length",
    "wavenumber",
    "write_csv",
]
