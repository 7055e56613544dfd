"""PT-symmetric two-level Hamiltonians and their operator suite.

The symmetric Hamiltonian

    H = [[rho e^{i varphi}, sigma], [sigma, rho e^{-i varphi}]]

has real eigenvalues ``rho cos varphi +- sqrt(sigma^2 - rho^2 sin^2 varphi)``
while the discriminant is positive. Everything else (metric, C operator,
Hermitian equivalent) is expressed through the angle ``alpha`` with
``sin alpha = rho sin varphi / sigma``.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import linalg
from .errors import (
    BrokenPhaseError,
    ExceptionalPointError,
    NotSymmetricError,
    UnsupportedCouplingError,
)
from .linalg import PARITY

PHASE_RTOL = 1e-10
SYMMETRIC_PHASE_ATOL = 1e-12
MATRIX_MATCH_RTOL = 1e-12


@dataclass(frozen=True)
class PTParams:
    """Real parameters of the general PT-symmetric Hamiltonian.

    ``varphi`` is the diagonal phase and ``phi_offdiag`` the off-diagonal one.
    """

    rho: float
    sigma: float
    varphi: float
    phi_offdiag: float = 0.0

    def __post_init__(self):
        for name in ("rho", "sigma", "varphi", "phi_offdiag"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")

    @property
    def discriminant(self) -> float:
        return self.sigma**2 - (self.rho * math.sin(self.varphi)) ** 2


class Phase(enum.Enum):
    UNBROKEN = "unbroken"
    EXCEPTIONAL = "exceptional"
    BROKEN = "broken"


@dataclass(frozen=True)
class PTPhase:
    phase: Phase
    discriminant: float


@dataclass(frozen=True)
class SpectralData:
    params: PTParams
    hamiltonian: np.ndarray
    E_plus: float
    E_minus: float
    alpha: float
    u_plus: np.ndarray
    u_minus: np.ndarray
    A: np.ndarray
    A_inv: np.ndarray
    eta_plus: np.ndarray
    C: np.ndarray
    G: np.ndarray
    H_prime: np.ndarray
    V: np.ndarray
    beta: float

    @property
    def sec_alpha(self) -> float:
        return 1.0 / math.cos(self.alpha)

    @property
    def tan_alpha(self) -> float:
        return math.tan(self.alpha)

    @property
    def mass_basis(self) -> tuple[np.ndarray, np.ndarray]:
        return self.u_plus, self.u_minus

    @property
    def energies(self) -> tuple[float, float]:
        return self.E_plus, self.E_minus


class HermitianEquivalent(NamedTuple):
    G: np.ndarray
    H_prime: np.ndarray
    V: np.ndarray
    u_prime_plus: np.ndarray
    u_prime_minus: np.ndarray


def build_general_hamiltonian(p: PTParams) -> np.ndarray:
    return linalg.mat2(
        p.rho * cmath.exp(1j * p.varphi),
        p.sigma * cmath.exp(1j * p.phi_offdiag),
        p.sigma * cmath.exp(-1j * p.phi_offdiag),
        p.rho * cmath.exp(-1j * p.varphi),
    )


def _offdiag_sign(phi_offdiag: float) -> int:
    n = round(phi_offdiag / math.pi)
    if abs(phi_offdiag - n * math.pi) > SYMMETRIC_PHASE_ATOL * max(1.0, abs(phi_offdiag)):
        raise NotSymmetricError(
            f"phi_offdiag = {phi_offdiag!r} is not a multiple of pi; H would not be symmetric"
        )
    return -1 if n % 2 else 1


def build_symmetric_hamiltonian(p: PTParams) -> np.ndarray:
    """Symmetric form; requires ``phi_offdiag = n*pi`` (off-diagonal is then ``+-sigma``)."""
    s = _offdiag_sign(p.phi_offdiag) * p.sigma
    return linalg.mat2(
        p.rho * cmath.exp(1j * p.varphi),
        s,
        s,
        p.rho * cmath.exp(-1j * p.varphi),
    )


def pt_commutator(H: np.ndarray) -> np.ndarray:
    """Linear part of ``[PT, H]``; it acts on ``conj(psi)``.

    ``PT H psi - H PT psi = (P conj(H) - H P) conj(psi)``.
    """
    return linalg.as_mat2(PARITY @ np.conj(H) - H @ PARITY)


def _is_diagonal_hermitian(p: PTParams) -> bool:
    return p.sigma == 0.0 and abs(p.rho * math.sin(p.varphi)) <= 1e-15 * max(1.0, abs(p.rho))


def classify_phase(p: PTParams) -> PTPhase:
    disc = p.discriminant
    if _is_diagonal_hermitian(p):
        return PTPhase(Phase.UNBROKEN, disc)
    tol = PHASE_RTOL * max(p.sigma**2, p.rho**2)
    if abs(disc) <= tol:
        return PTPhase(Phase.EXCEPTIONAL, disc)
    if disc > 0:
        return PTPhase(Phase.UNBROKEN, disc)
    return PTPhase(Phase.BROKEN, disc)


def _metric(alpha: float) -> np.ndarray:
    sec, tan = 1.0 / math.cos(alpha), math.tan(alpha)
    return linalg.mat2(sec, -1j * tan, 1j * tan, sec)


def _c_matrix(alpha: float) -> np.ndarray:
    sec, tan = 1.0 / math.cos(alpha), math.tan(alpha)
    return linalg.mat2(1j * tan, sec, sec, -1j * tan)


def _g_matrix(alpha: float) -> np.ndarray:
    c, s = math.cos(alpha / 2), math.sin(alpha / 2)
    return linalg.as_mat2(np.array([[c, -1j * s], [1j * s, c]]) / math.sqrt(math.cos(alpha)))


V_MATRIX = linalg.as_mat2(np.array([[1, 1], [1, -1]]) / math.sqrt(2))


def _h_prime(mean: float, half_gap: float) -> np.ndarray:
    return linalg.mat2(mean, half_gap, half_gap, mean)


def spectral_decompose(H: np.ndarray, p: PTParams) -> SpectralData:
    """Eigen-system and derived operators of the symmetric Hamiltonian.

    ``p`` is taken alongside ``H`` so that ``rho`` and ``varphi`` never have to be
    unwrapped from the diagonal entries; ``H`` must match ``p``.

    Raises
    ------
    BrokenPhaseError
        Eigenvalues are a complex-conjugate pair (carried on the exception).
    ExceptionalPointError
        Eigenvalues coalesce and the eigensystem is incomplete.
    UnsupportedCouplingError
        Effective off-diagonal coupling is negative.
    """
    phase = classify_phase(p)
    center = p.rho * math.cos(p.varphi)
    if phase.phase is Phase.BROKEN:
        im = math.sqrt(-phase.discriminant)
        pair = (complex(center, im), complex(center, -im))
        raise BrokenPhaseError(
            f"PT symmetry is broken (discriminant {phase.discriminant:.6g}); "
            f"eigenvalues {pair[0]:.6g} and {pair[1]:.6g}",
            pair,
        )
    if phase.phase is Phase.EXCEPTIONAL:
        raise ExceptionalPointError(
            f"parameters sit at an exceptional point (discriminant {phase.discriminant:.3g}); "
            "the eigensystem is incomplete"
        )

    coupling = _offdiag_sign(p.phi_offdiag) * p.sigma
    if coupling < 0:
        raise UnsupportedCouplingError(
            f"effective off-diagonal coupling {coupling!r} is negative"
        )
    expected = build_symmetric_hamiltonian(p)
    if linalg.max_abs_diff(H, expected) > MATRIX_MATCH_RTOL * max(1.0, float(np.max(np.abs(expected)))):
        raise ValueError("H does not match the symmetric Hamiltonian built from p")

    if coupling == 0.0:
        alpha = 0.0
        half_gap = 0.0
    else:
        alpha = math.asin(p.rho * math.sin(p.varphi) / coupling)
        half_gap = math.sqrt(phase.discriminant)

    norm = 1.0 / math.sqrt(2.0 * math.cos(alpha))
    ph = cmath.exp(0.5j * alpha)
    u_plus = linalg.vec2(norm * ph, norm * ph.conjugate())
    u_minus = linalg.vec2(norm * ph.conjugate(), -norm * ph)
    A_inv = linalg.as_mat2(np.column_stack([u_plus, u_minus]))
    A = linalg.inverse(A_inv)

    return SpectralData(
        params=p,
        hamiltonian=linalg.as_mat2(H),
        E_plus=center + half_gap,
        E_minus=center - half_gap,
        alpha=alpha,
        u_plus=u_plus,
        u_minus=u_minus,
        A=A,
        A_inv=A_inv,
        eta_plus=_metric(alpha),
        C=_c_matrix(alpha),
        G=_g_matrix(alpha),
        H_prime=_h_prime(center, half_gap),
        V=V_MATRIX,
        beta=2.0 * half_gap,
    )


def decompose(p: PTParams) -> SpectralData:
    """Shorthand for ``spectral_decompose(build_symmetric_hamiltonian(p), p)``."""
    return spectral_decompose(build_symmetric_hamiltonian(p), p)


def build_metric(spec: SpectralData) -> np.ndarray:
    """Positive-definite metric ``eta_+ = [[sec a, -i tan a], [i tan a, sec a]]``."""
    return _metric(spec.alpha)


def build_c_operator(spec: SpectralData) -> np.ndarray:
    return _c_matrix(spec.alpha)


def build_hermitian_equivalent(spec: SpectralData) -> HermitianEquivalent:
    """Similarity map ``G`` to the real symmetric ``H' = G H G^-1`` and its
    diagonalizer ``V``, with eigenvectors ``(1, +-1)/sqrt(2)``."""
    mean = 0.5 * (spec.E_plus + spec.E_minus)
    half_gap = 0.5 * spec.beta
    r = 1.0 / math.sqrt(2.0)
    return HermitianEquivalent(
        G=_g_matrix(spec.alpha),
        H_prime=_h_prime(mean, half_gap),
        V=V_MATRIX,
        u_prime_plus=linalg.vec2(r, r),
        u_prime_minus=linalg.vec2(r, -r),
    )
