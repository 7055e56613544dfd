"""Brute-force verification paths.

Nothing here reads the closed-form operators of :mod:`ptqs.ptcore`; the only
shared code is the 2x2 arithmetic in :mod:`ptqs.linalg`. Evolution goes
through a series matrix exponential, eigenvalues through the characteristic
polynomial and the metric through the biorthogonal dual basis.
"""

from __future__ import annotations

import cmath
import json
import math
import os
from dataclasses import asdict, dataclass
from typing import IO, Iterable

import numpy as np

from . import linalg, ptcore, transitions
from .errors import BiorthogonalityViolation
from .ptcore import PTParams

FD_STEP = 1e-5
FD_TOL = 1e-8
BIORTHO_TOL = 1e-10
DEFAULT_TOL = 1e-12
TOLERANCE_ENV = "PTQS_TOLERANCE"


@dataclass(frozen=True)
class OracleReport:
    quantity: str
    primary: float
    oracle: float
    difference: float
    tolerance: float
    passed: bool

    @classmethod
    def compare(cls, quantity: str, primary, oracle, tolerance: float) -> "OracleReport":
        """Entry-wise comparison, summarised at the worst entry (magnitudes)."""
        p = np.atleast_1d(np.asarray(primary, dtype=complex)).ravel()
        o = np.atleast_1d(np.asarray(oracle, dtype=complex)).ravel()
        gaps = np.abs(p - o)
        i = int(np.argmax(gaps))
        diff = float(gaps[i])
        return cls(quantity, float(abs(p[i])), float(abs(o[i])), diff, tolerance, diff <= tolerance)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def write_reports(reports: Iterable[OracleReport], fh: IO[str]) -> None:
    for r in reports:
        fh.write(r.to_json() + "\n")


def default_tolerance() -> float:
    raw = os.environ.get(TOLERANCE_ENV)
    return float(raw) if raw else DEFAULT_TOL


def evolve_by_series(H, state, t: float) -> np.ndarray:
    """``exp(-i H t) state`` with the series exponential; valid in any phase."""
    return linalg.as_vec2(linalg.mat_exp(H, -1j * t) @ np.asarray(state, dtype=complex))


def eigen_by_charpoly(H) -> tuple[complex, complex]:
    """Roots of ``lambda^2 - tr(H) lambda + det(H)``, larger real part first
    (for a complex pair, positive imaginary part first)."""
    half_tr = 0.5 * (H[0, 0] + H[1, 1])
    root = cmath.sqrt(half_tr**2 - linalg.det(H))
    lo, hi = sorted([half_tr - root, half_tr + root], key=lambda z: (z.real, z.imag))
    return complex(hi), complex(lo)


def dual_basis(u_plus, u_minus) -> tuple[np.ndarray, np.ndarray]:
    """Vectors ``phi_i`` with ``<phi_i|psi_j> = delta_ij``: columns of ``(Psi^-1)^dagger``."""
    psi = np.column_stack([u_plus, u_minus])
    phi = linalg.adjoint(linalg.inverse(psi))
    return linalg.as_vec2(phi[:, 0]), linalg.as_vec2(phi[:, 1])


def metric_from_eigvecs(u_plus, u_minus, phi_plus, phi_minus) -> np.ndarray:
    """``sum_i |phi_i><phi_i|`` after checking biorthonormality."""
    psis = (np.asarray(u_plus), np.asarray(u_minus))
    phis = (np.asarray(phi_plus), np.asarray(phi_minus))
    overlap = np.array([[np.vdot(f, p) for p in psis] for f in phis])
    err = linalg.max_abs_diff(overlap, np.eye(2))
    if err > BIORTHO_TOL:
        raise BiorthogonalityViolation(f"<phi_i|psi_j> deviates from delta_ij by {err:.3g}")
    return linalg.as_mat2(sum(np.outer(f, np.conj(f)) for f in phis))


def inverse_metric_from_eigvecs(u_plus, u_minus) -> np.ndarray:
    return linalg.as_mat2(sum(np.outer(u, np.conj(u)) for u in (u_plus, u_minus)))


def norm_under(eta, psi) -> float:
    psi = np.asarray(psi)
    return float(np.real(np.vdot(psi, np.asarray(eta) @ psi)))


def _norm_increment(eta, psi, d) -> float:
    """``<psi+d|eta|psi+d> - <psi|eta|psi>`` for Hermitian ``eta``."""
    eta = np.asarray(eta)
    return float(2.0 * np.real(np.vdot(psi, eta @ d)) + np.real(np.vdot(d, eta @ d)))


def norm_derivative_analytic(H, eta, psi) -> float:
    """``d/dt <psi|eta|psi> = -i <psi|(eta H - H^dagger eta)|psi>``."""
    H = np.asarray(H)
    eta = np.asarray(eta)
    psi = np.asarray(psi)
    return float(np.real(-1j * np.vdot(psi, (eta @ H - H.conj().T @ eta) @ psi)))


def numeric_time_derivative_check(
    H, eta_matrix, state, t: float, step: float = FD_STEP, tolerance: float = FD_TOL
) -> OracleReport:
    """Central-difference derivative of ``<psi(t)|eta|psi(t)>`` against the
    analytic commutator expression. The report's ``primary`` is the numeric
    derivative, so callers can also test it for (non)vanishing."""
    psi_t = evolve_by_series(H, state, t)
    # f(t +- h) - f(t) from the increments d = (exp(-+iHh) - I) psi(t), so the
    # large common value f(t) never enters a subtraction
    f_hi = _norm_increment(eta_matrix, psi_t, linalg.mat_expm1(H, -1j * step) @ psi_t)
    f_lo = _norm_increment(eta_matrix, psi_t, linalg.mat_expm1(H, 1j * step) @ psi_t)
    numeric = (f_hi - f_lo) / (2.0 * step)
    analytic = norm_derivative_analytic(H, eta_matrix, psi_t)
    diff = abs(numeric - analytic)
    return OracleReport("norm time-derivative", numeric, analytic, diff, tolerance, diff <= tolerance)


def random_unbroken_params(rng: np.random.Generator, n: int, margin: float = 1e-4):
    """``n`` draws of ``(rho, sigma, varphi)`` strictly inside the unbroken phase.

    ``rho, sigma ~ U[0.1, 3]``, ``varphi ~ U(-pi, pi)``; draws with
    ``sigma^2 - rho^2 sin^2 varphi < margin * sigma^2`` are rejected.
    """
    out = []
    while len(out) < n:
        rho, sigma = rng.uniform(0.1, 3.0, size=2)
        varphi = rng.uniform(-math.pi, math.pi)
        if sigma**2 - (rho * math.sin(varphi)) ** 2 >= margin * sigma**2:
            out.append(PTParams(float(rho), float(sigma), float(varphi)))
    return out


def run_verification(draws: int = 100, seed: int = 0, tolerance: float | None = None) -> list[OracleReport]:
    """Compare primary paths with their oracles over random unbroken draws.

    One aggregated report per quantity, holding the worst difference seen.
    """
    tol = default_tolerance() if tolerance is None else tolerance
    rng = np.random.default_rng(seed)
    worst: dict[str, OracleReport] = {}

    def record(name, primary, oracle, tol_):
        rep = OracleReport.compare(name, primary, oracle, tol_)
        if name not in worst or rep.difference > worst[name].difference:
            worst[name] = rep

    for p in random_unbroken_params(rng, draws):
        spec = ptcore.decompose(p)
        H = spec.hamiltonian
        record("eigenvalues vs characteristic polynomial", [spec.E_plus, spec.E_minus], eigen_by_charpoly(H), tol)
        phis = dual_basis(spec.u_plus, spec.u_minus)
        record("eta+ vs dual-basis outer products", spec.eta_plus, metric_from_eigvecs(spec.u_plus, spec.u_minus, *phis), tol)
        record("eta+^-1 vs completeness sum", linalg.inverse(spec.eta_plus), inverse_metric_from_eigvecs(spec.u_plus, spec.u_minus), tol)
        t = float(rng.uniform(0.0, 4.0 * math.pi / spec.beta))
        for origin, e in (("a", (1, 0)), ("b", (0, 1))):
            record(
                "spectral vs series evolution",
                transitions.evolve_flavor(spec, origin, t).vector,
                evolve_by_series(H, e, t),
                max(tol, 1e-10),
            )
        rep = numeric_time_derivative_check(H, spec.eta_plus, (1, 0), t)
        record("eta+ norm derivative (numeric vs analytic)", rep.primary, rep.oracle, FD_TOL)
        record("eta+ norm derivative vanishes", rep.primary, 0.0, FD_TOL)

    return list(worst.values())
