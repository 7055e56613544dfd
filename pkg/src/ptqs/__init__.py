"""PT-symmetric two-level quantum systems and two-flavor neutrino oscillations."""

from .errors import (
    BiorthogonalityViolation,
    BrokenPhaseError,
    ExceptionalPointError,
    NonPositiveProductError,
    NotSymmetricError,
    PhysicsDomainError,
    PTQSError,
    SingularMatrixError,
    UnbrokenViolationError,
    UnsupportedCouplingError,
)
from .inner import InnerProductSpec, Product, resolve
from .neutrino import OscillationConfig, probability_curve, survival_probability
from .ptcore import (
    Phase,
    PTParams,
    SpectralData,
    build_general_hamiltonian,
    build_symmetric_hamiltonian,
    classify_phase,
    decompose,
    spectral_decompose,
)
from .transitions import amplitude_raw, conservation_report, evolve, probability_cpt

__version__ = "0.1.0"

__all__ = [
    "BiorthogonalityViolation",
    "BrokenPhaseError",
    "ExceptionalPointError",
    "InnerProductSpec",
    "NonPositiveProductError",
    "NotSymmetricError",
    "OscillationConfig",
    "PTParams",
    "PTQSError",
    "Phase",
    "PhysicsDomainError",
    "Product",
    "SingularMatrixError",
    "SpectralData",
    "UnbrokenViolationError",
    "UnsupportedCouplingError",
    "amplitude_raw",
    "build_general_hamiltonian",
    "build_symmetric_hamiltonian",
    "classify_phase",
    "conservation_report",
    "decompose",
    "evolve",
    "probability_cpt",
    "probability_curve",
    "resolve",
    "spectral_decompose",
    "survival_probability",
]
