"""Inner products of the form ``<psi|phi>_eta = (eta psi)^T phi``.

``eta`` is either a matrix (linear) or a matrix composed with complex
conjugation (antilinear). All six products used for the two-level system are
pairs of that kind, so they share one engine.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import linalg
from .linalg import IDENTITY, PARITY
from .ptcore import SpectralData

NORM_IMAG_ATOL = 1e-12


@dataclass(frozen=True)
class InnerProductSpec:
    linear_part: np.ndarray
    antilinear: bool

    def __post_init__(self):
        object.__setattr__(self, "linear_part", linalg.as_mat2(self.linear_part))


class Product(enum.Enum):
    ORTHOGONAL = "orthogonal"
    T = "T"
    P = "P"
    PT = "PT"
    CPT = "CPT"
    ETA_PLUS = "eta+"


POSITIVE_DEFINITE = frozenset({Product.T, Product.CPT, Product.ETA_PLUS})


def resolve(name: Product, spec: SpectralData) -> InnerProductSpec:
    if name is Product.ORTHOGONAL:
        return InnerProductSpec(IDENTITY, False)
    if name is Product.T:
        return InnerProductSpec(IDENTITY, True)
    if name is Product.P:
        return InnerProductSpec(PARITY, False)
    if name is Product.PT:
        return InnerProductSpec(PARITY, True)
    if name is Product.CPT:
        return InnerProductSpec(spec.C @ PARITY, True)
    if name is Product.ETA_PLUS:
        # (eta^-1 conj(psi))^T phi = psi^dagger eta phi, because eta^-T = eta
        return InnerProductSpec(linalg.inverse(spec.eta_plus), True)
    raise ValueError(f"unknown product {name!r}")


def inner(spec: InnerProductSpec, psi, phi) -> complex:
    psi = np.asarray(psi, dtype=complex)
    if spec.antilinear:
        psi = np.conj(psi)
    return complex((spec.linear_part @ psi) @ np.asarray(phi, dtype=complex))


def gram(spec: InnerProductSpec, basis) -> np.ndarray:
    """Matrix of pairwise products ``G[i, j] = <basis_i|basis_j>``."""
    return linalg.as_mat2([[inner(spec, x, y) for y in basis] for x in basis])


def norm(spec: InnerProductSpec, psi) -> float:
    """``<psi|psi>``, which must come out real."""
    value = inner(spec, psi, psi)
    if abs(value.imag) > NORM_IMAG_ATOL * max(1.0, abs(value.real)):
        raise ArithmeticError(f"norm has an imaginary part: {value!r}")
    return value.real
