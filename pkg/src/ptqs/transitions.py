"""Time evolution and flavor transition probabilities.

Time is measured in inverse energy units of the Hamiltonian (phase = E t);
unit conversion belongs to the caller.

Two families of probabilities live here. With the raw flavor vectors as final
states the row sums are not conserved (:func:`amplitude_raw`). With the
CPT-symmetrised final states ``(u + CPT u)/2`` they are
(:func:`probability_cpt`).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from . import linalg
from .errors import NonPositiveProductError
from .inner import InnerProductSpec, Product, inner, norm, resolve
from .linalg import PARITY
from .ptcore import SpectralData

Flavor = Literal["a", "b"]
Label = Literal["a", "b", "abar", "bbar"]

SWEEP_POINTS = 256
_INDEX = {"a": 0, "b": 1}


@dataclass(frozen=True)
class EvolvedState:
    vector: np.ndarray
    time: float
    origin: str


@dataclass(frozen=True)
class TransitionResult:
    amplitude: complex
    probability: float
    normalization: float


@dataclass(frozen=True)
class ConservationReport:
    row_a: float
    row_b: float
    column_a: float
    column_b: float

    @property
    def weak(self) -> float:
        return 0.5 * (self.row_a + self.row_b)


@dataclass(frozen=True)
class AsymmetryReport:
    delta_T: float
    delta_CPT: float
    time: float


def _base(label: str) -> str:
    if label not in ("a", "b", "abar", "bbar"):
        raise ValueError(f"unknown flavor label {label!r}")
    return label[0]


def cpt_apply(spec: SpectralData, psi) -> np.ndarray:
    """Antilinear action of CPT: ``C P conj(psi)``."""
    return linalg.as_vec2(spec.C @ PARITY @ np.conj(np.asarray(psi, dtype=complex)))


def flavor_state(spec: SpectralData, label: str) -> np.ndarray:
    """Flavor basis vector, or its antiflavor partner ``C u``."""
    u = np.zeros(2, dtype=complex)
    u[_INDEX[_base(label)]] = 1.0
    if label.endswith("bar"):
        u = spec.C @ u
    return linalg.as_vec2(u)


def cpt_eigenstate(spec: SpectralData, origin: str) -> np.ndarray:
    """``(u + CPT u) / 2`` for a flavor or antiflavor label."""
    u = flavor_state(spec, origin)
    return linalg.as_vec2(0.5 * (u + cpt_apply(spec, u)))


def _phases(spec: SpectralData, t: float) -> tuple[complex, complex]:
    return cmath.exp(-1j * spec.E_plus * t), cmath.exp(-1j * spec.E_minus * t)


def evolve(spec: SpectralData, psi, t: float) -> np.ndarray:
    """Evolve an arbitrary state by expanding it in the mass basis."""
    c_plus, c_minus = spec.A @ np.asarray(psi, dtype=complex)
    p_plus, p_minus = _phases(spec, t)
    return linalg.as_vec2(c_plus * p_plus * spec.u_plus + c_minus * p_minus * spec.u_minus)


def evolve_flavor(spec: SpectralData, origin: Flavor, t: float) -> EvolvedState:
    i = _INDEX[origin]
    p_plus, p_minus = _phases(spec, t)
    vec = spec.A_inv[i, 0] * p_plus * spec.u_plus + spec.A_inv[i, 1] * p_minus * spec.u_minus
    return EvolvedState(linalg.as_vec2(vec), t, origin)


def _transition(ip: InnerProductSpec, final, evolved) -> TransitionResult:
    amp = inner(ip, final, evolved)
    normalization = norm(ip, final) * norm(ip, evolved)
    if not normalization > 0:
        raise ArithmeticError(f"non-positive normalization {normalization!r}")
    return TransitionResult(amp, abs(amp) ** 2 / normalization, normalization)


def amplitude_raw(
    spec: SpectralData, product: Product, alpha_from: Flavor, beta_to: Flavor, t: float
) -> TransitionResult:
    """Transition to the raw flavor vector ``u_beta``; does not conserve probability."""
    if product not in (Product.CPT, Product.ETA_PLUS):
        raise NonPositiveProductError(
            f"{product.value} product cannot normalise transition probabilities; use CPT or eta+"
        )
    ip = resolve(product, spec)
    evolved = evolve_flavor(spec, alpha_from, t).vector
    return _transition(ip, flavor_state(spec, beta_to), evolved)


def probability_cpt(spec: SpectralData, alpha_from: str, beta_to: str, t: float) -> TransitionResult:
    """Transition ``u_alpha(t) -> u~_beta`` under the CPT product.

    Labels may be antiflavors (``"abar"``, ``"bbar"``); initial and final
    labels must then both be antiflavors for the result to be meaningful.
    """
    ip = resolve(Product.CPT, spec)
    evolved = evolve(spec, flavor_state(spec, alpha_from), t)
    return _transition(ip, cpt_eigenstate(spec, beta_to), evolved)


def conservation_report(spec: SpectralData, t: float) -> ConservationReport:
    p = {(i, j): probability_cpt(spec, i, j, t).probability for i in "ab" for j in "ab"}
    return ConservationReport(
        row_a=p["a", "a"] + p["a", "b"],
        row_b=p["b", "a"] + p["b", "b"],
        column_a=p["a", "a"] + p["b", "a"],
        column_b=p["a", "b"] + p["b", "b"],
    )


def asymmetries(spec: SpectralData, t: float) -> AsymmetryReport:
    p_ab = probability_cpt(spec, "a", "b", t).probability
    p_ba = probability_cpt(spec, "b", "a", t).probability
    p_bbar_abar = probability_cpt(spec, "bbar", "abar", t).probability
    return AsymmetryReport(delta_T=p_ab - p_ba, delta_CPT=p_ab - p_bbar_abar, time=t)


def hermitian_picture_probability(
    spec: SpectralData, alpha_from: Flavor, beta_to: Flavor, t: float
) -> TransitionResult:
    """Same transition computed in the Hermitian picture.

    Flavor states are mapped by ``G``, evolved under ``H'`` (diagonalised by
    the orthogonal ``V``) and compared with the Euclidean product.
    """
    G, V = spec.G, spec.V
    u_from = G @ flavor_state(spec, alpha_from)
    u_to = G @ flavor_state(spec, beta_to)
    p_plus, p_minus = _phases(spec, t)
    evolved = V.T @ (np.array([p_plus, p_minus]) * (V @ u_from))
    return _transition(resolve(Product.T, spec), u_to, evolved)


def tilde_initial_sum_check(spec: SpectralData, t: float, origin: Flavor = "a") -> float:
    """Sum over final states of normalized ``|<u~_beta|u~_alpha(t)>_CPT|^2``,
    with the system prepared in a CPT eigenstate rather than a flavor state."""
    ip = resolve(Product.CPT, spec)
    evolved = evolve(spec, cpt_eigenstate(spec, origin), t)
    return sum(_transition(ip, cpt_eigenstate(spec, b), evolved).probability for b in "ab")


def period_grid(spec: SpectralData, points: int = SWEEP_POINTS) -> np.ndarray:
    """``points`` uniform times covering one oscillation period ``2 pi / beta``."""
    if spec.beta <= 0:
        raise ValueError("degenerate spectrum has no oscillation period")
    return np.linspace(0.0, 2.0 * math.pi / spec.beta, points)


def raw_row_sum(spec: SpectralData, alpha_from: Flavor, t: float, product: Product = Product.CPT) -> float:
    return sum(amplitude_raw(spec, product, alpha_from, b, t).probability for b in "ab")
