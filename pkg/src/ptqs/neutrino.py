"""Two-flavor vacuum oscillations with a PT-symmetric non-Hermitian Hamiltonian.

Units: mass-squared parameters (``delta_m2_32``, ``rho``, ``sigma``,
``m2_bar``) in eV^2, energy in GeV, baselines in km. Hamiltonian matrices are
returned in eV^2/GeV; :func:`baseline_to_time` gives the matching time
variable so that ``H * t`` is a phase in radians.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize_scalar

from . import linalg
from .errors import ExceptionalPointError, UnbrokenViolationError, UnsupportedCouplingError
from .ptcore import Phase, PTParams, SpectralData, classify_phase, decompose
from .transitions import cpt_eigenstate

# hbar*c in eV*m; exact given the SI definitions of h, c and e
HBARC_EV_M = 1.973269804e-7
# 1/(4 hbar c) in km^-1 GeV eV^-2: Delta m^2 L / (4E) = OSC_CONSTANT * dm2[eV^2] * L[km] / E[GeV]
OSC_CONSTANT = 1e3 / (4e9 * HBARC_EV_M)
ROUNDED_OSC_CONSTANT = 1.27

FIG1_DELTA_M2 = 2.5e-3
FIG1_ENERGY = 1.0
FIG1_ALPHA_PRIMES = (0.0, math.pi / 6, math.pi / 4, math.pi / 2)
DEFAULT_BASELINES = tuple(np.linspace(0.0, 2000.0, 2001).tolist())

_BOUND_RTOL = 1e-12


@dataclass(frozen=True)
class OscillationConfig:
    """Physical inputs for one survival/appearance curve.

    ``alpha_prime`` may be given instead of ``(rho, varphi)``; it fixes the
    non-Hermitian phase shift directly (``rho`` must then stay 0) and is the
    only way to reach the limiting ``alpha' = pi/2`` curve.
    """

    delta_m2_32: float
    rho: float = 0.0
    sigma: float = 0.0
    varphi: float = 0.0
    energy: float = 1.0
    baselines: tuple[float, ...] = field(default=DEFAULT_BASELINES, repr=False)
    m2_bar: float = 0.0
    alpha_prime: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "baselines", tuple(float(x) for x in self.baselines))
        for name in ("delta_m2_32", "rho", "sigma", "varphi", "energy", "m2_bar"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if not self.energy > 0:
            raise ValueError(f"energy must be positive, got {self.energy!r}")
        if any(not (x >= 0 and math.isfinite(x)) for x in self.baselines):
            raise ValueError("baselines must be finite and non-negative")
        if any(b < a for a, b in zip(self.baselines, self.baselines[1:])):
            raise ValueError("baselines must be in increasing order")
        if not self.coupling > 0:
            raise UnsupportedCouplingError(
                f"delta_m2_32 + sigma = {self.coupling!r} eV^2 must be positive"
            )
        if self.alpha_prime is not None:
            if self.rho != 0.0:
                raise ValueError("give either alpha_prime or rho/varphi, not both")
            if not abs(self.alpha_prime) <= math.pi / 2 * (1 + _BOUND_RTOL):
                raise UnbrokenViolationError(
                    f"|alpha_prime| = {abs(self.alpha_prime)!r} exceeds pi/2"
                )
        elif abs(self.rho * math.sin(self.varphi)) > self.coupling * (1 + _BOUND_RTOL):
            raise UnbrokenViolationError(
                f"|rho sin varphi| = {abs(self.rho * math.sin(self.varphi)):.6g} eV^2 violates the "
                f"unbroken bound |rho sin varphi| <= {self.coupling:.6g} eV^2 (delta_m2_32 + sigma)"
            )

    @property
    def coupling(self) -> float:
        return self.delta_m2_32 + self.sigma

    def effective_rho_varphi(self) -> tuple[float, float]:
        """``(rho, varphi)``, realising an ``alpha_prime`` override with ``varphi = pi/2``."""
        if self.alpha_prime is None:
            return self.rho, self.varphi
        return self.coupling * math.sin(self.alpha_prime), math.pi / 2


@dataclass(frozen=True)
class OscDerived:
    alpha_prime: float
    beta_prime_phase_per_km: float
    omega_plus: float
    omega_minus: float


@dataclass(frozen=True)
class ProbabilityCurve:
    alpha_prime: float
    baseline_km: np.ndarray
    p_mumu: np.ndarray
    p_mutau: np.ndarray


def build_vacuum_hamiltonian(theta23: float, m2_2: float, m2_3: float, energy: float) -> np.ndarray:
    """Hermitian vacuum Hamiltonian ``R diag(m2^2, m3^2) R^T / (2E)`` in eV^2/GeV."""
    if not energy > 0:
        raise ValueError("energy must be positive")
    c, s = math.cos(theta23), math.sin(theta23)
    rot = np.array([[c, s], [-s, c]])
    return linalg.as_mat2(rot @ np.diag([m2_2, m2_3]) @ rot.T / (2.0 * energy))


def build_pt_hamiltonian(cfg: OscillationConfig) -> np.ndarray:
    rho, varphi = cfg.effective_rho_varphi()
    diag = cfg.m2_bar + rho * complex(math.cos(varphi), math.sin(varphi))
    return linalg.as_mat2(
        np.array([[diag, cfg.coupling], [cfg.coupling, diag.conjugate()]]) / (4.0 * cfg.energy)
    )


def to_pt_params(cfg: OscillationConfig) -> PTParams:
    """Express the neutrino Hamiltonian in the generic symmetric form.

    The diagonal ``m2_bar + rho e^{i varphi}`` is rewritten as a single modulus
    and phase, so ``sin(alpha)`` of the generic form equals ``sin(alpha')``.
    """
    rho, varphi = cfg.effective_rho_varphi()
    diag = complex(cfg.m2_bar + rho * math.cos(varphi), rho * math.sin(varphi))
    scale = 4.0 * cfg.energy
    return PTParams(abs(diag) / scale, cfg.coupling / scale, math.atan2(diag.imag, diag.real))


def neutrino_spectral(cfg: OscillationConfig) -> SpectralData:
    return decompose(to_pt_params(cfg))


def baseline_to_time(baseline_km):
    """Time variable (GeV/eV^2) matching Hamiltonians in eV^2/GeV, with ``t = L/c``."""
    return 4.0 * OSC_CONSTANT * np.asarray(baseline_km, dtype=float)


def derive_osc_params(cfg: OscillationConfig) -> OscDerived:
    if cfg.alpha_prime is None:
        if classify_phase(to_pt_params(cfg)).phase is Phase.EXCEPTIONAL:
            raise ExceptionalPointError(
                "|rho sin varphi| equals |delta_m2_32 + sigma|; configuration is at the exceptional point"
            )
        rho, varphi = cfg.rho, cfg.varphi
        sin_a = max(-1.0, min(1.0, rho * math.sin(varphi) / cfg.coupling))
        alpha = math.asin(sin_a)
        disc = cfg.coupling**2 - (rho * math.sin(varphi)) ** 2
        cos_a = math.sqrt(max(disc, 0.0)) / cfg.coupling
    else:
        rho, varphi = cfg.effective_rho_varphi()
        alpha = cfg.alpha_prime
        cos_a = max(math.cos(alpha), 0.0)
    gap = cfg.coupling * cos_a
    mean = cfg.m2_bar + rho * math.cos(varphi)
    return OscDerived(
        alpha_prime=alpha,
        beta_prime_phase_per_km=2.0 * OSC_CONSTANT * gap / cfg.energy,
        omega_plus=(mean + gap) / (4.0 * cfg.energy),
        omega_minus=(mean - gap) / (4.0 * cfg.energy),
    )


def _half_phase(cfg: OscillationConfig, baseline_km):
    d = derive_osc_params(cfg)
    return 0.5 * d.alpha_prime - 0.5 * d.beta_prime_phase_per_km * np.asarray(baseline_km, dtype=float)


def survival_probability(cfg: OscillationConfig, baseline_km):
    """``P(mu -> mu~) = 1 - sin^2(alpha'/2 - K cos(alpha') (dm2 + sigma) L / E)``."""
    return 1.0 - np.sin(_half_phase(cfg, baseline_km)) ** 2


def appearance_probability(cfg: OscillationConfig, baseline_km):
    return np.sin(_half_phase(cfg, baseline_km)) ** 2


def probability_curve(cfg: OscillationConfig) -> ProbabilityCurve:
    L = np.asarray(cfg.baselines, dtype=float)
    return ProbabilityCurve(
        alpha_prime=derive_osc_params(cfg).alpha_prime,
        baseline_km=L,
        p_mumu=np.asarray(survival_probability(cfg, L)),
        p_mutau=np.asarray(appearance_probability(cfg, L)),
    )


def generate_fig1_curves(
    baselines=DEFAULT_BASELINES,
    alpha_primes=FIG1_ALPHA_PRIMES,
    delta_m2_32: float = FIG1_DELTA_M2,
    sigma: float = 0.0,
    energy: float = FIG1_ENERGY,
) -> list[ProbabilityCurve]:
    return [
        probability_curve(
            OscillationConfig(
                delta_m2_32=delta_m2_32,
                sigma=sigma,
                energy=energy,
                baselines=tuple(baselines),
                alpha_prime=a,
            )
        )
        for a in alpha_primes
    ]


def survival_minima(cfg: OscillationConfig, max_baseline_km: float, points: int = 4001) -> np.ndarray:
    """Baselines of the local minima of the survival probability in ``(0, max]``.

    Minima are bracketed on a uniform grid and then polished with a bounded
    scalar minimiser.
    """
    grid = np.linspace(0.0, max_baseline_km, points)
    p = np.asarray(survival_probability(cfg, grid))
    step = grid[1] - grid[0]
    minima = []
    for i in range(1, points - 1):
        if p[i] <= p[i - 1] and p[i] < p[i + 1]:
            res = minimize_scalar(
                lambda L: float(survival_probability(cfg, L)),
                bounds=(grid[i] - step, grid[i] + step),
                method="bounded",
                options={"xatol": 1e-10},
            )
            minima.append(res.x)
    return np.array(minima)


def cpt_flavor_states_neutrino(spec: SpectralData) -> tuple[np.ndarray, np.ndarray]:
    """CPT-symmetrised muon and tau flavor states."""
    return cpt_eigenstate(spec, "a"), cpt_eigenstate(spec, "b")
