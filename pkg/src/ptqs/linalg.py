"""Dense complex linear algebra for two-level systems.

Matrices are ``(2, 2)`` and vectors ``(2,)`` ``complex128`` numpy arrays.
Arrays returned by the constructors and operations here are read-only, so a
value handed out by one part of the package cannot be mutated by another.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import SingularMatrixError

SINGULAR_RTOL = 1e-12
EXP_TAYLOR_ORDER = 18
EXP_SCALED_NORM = 0.5


def _freeze(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


def as_mat2(m) -> np.ndarray:
    """Validate and copy ``m`` into a read-only 2x2 complex matrix."""
    arr = np.array(m, dtype=complex)
    if arr.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("matrix entries must be finite")
    return _freeze(arr)


def as_vec2(v) -> np.ndarray:
    arr = np.array(v, dtype=complex)
    if arr.shape != (2,):
        raise ValueError(f"expected a 2-vector, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("vector components must be finite")
    return _freeze(arr)


def mat2(a, b, c, d) -> np.ndarray:
    """Row-major constructor: ``[[a, b], [c, d]]``."""
    return as_mat2([[a, b], [c, d]])


def vec2(c0, c1) -> np.ndarray:
    return as_vec2([c0, c1])


IDENTITY = mat2(1, 0, 0, 1)
ZERO = mat2(0, 0, 0, 0)
PARITY = mat2(0, 1, 1, 0)


def mat_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return _freeze(np.asarray(a) @ np.asarray(b))


def adjoint(m: np.ndarray) -> np.ndarray:
    return _freeze(np.conj(np.asarray(m)).T.copy())


def det(m: np.ndarray) -> complex:
    return complex(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])


def inverse(m: np.ndarray) -> np.ndarray:
    """Adjugate inverse.

    Raises
    ------
    SingularMatrixError
        If ``|det m| <= 1e-12 * max|m_ij|**2``. The threshold scales with the
        entries, so uniformly tiny but well-conditioned matrices still invert.
    """
    d = det(m)
    scale = float(np.max(np.abs(m))) ** 2
    if abs(d) <= SINGULAR_RTOL * scale or scale == 0.0:
        raise SingularMatrixError(f"matrix is singular to tolerance (det={d!r})")
    adj = np.array([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]], dtype=complex)
    return _freeze(adj / d)


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return _freeze(a @ b - b @ a)


def mat_exp(m: np.ndarray, scale: complex = 1.0) -> np.ndarray:
    """``exp(scale * m)`` by scaling and squaring a truncated Taylor series.

    Deliberately free of any eigendecomposition, so it can serve as an
    independent check on spectral time evolution (and it stays valid at
    exceptional points and in the broken phase).
    """
    x, squarings = _scaled(m, scale)
    # Horner evaluation of sum_k x^k / k!
    result = np.eye(2, dtype=complex)
    for k in range(EXP_TAYLOR_ORDER, 0, -1):
        result = np.eye(2, dtype=complex) + (x @ result) / k
    for _ in range(squarings):
        result = result @ result
    return _freeze(result)


def mat_expm1(m: np.ndarray, scale: complex = 1.0) -> np.ndarray:
    """``exp(scale * m) - I`` without the cancellation of subtracting I.

    Accurate to relative precision even when ``scale * m`` is tiny, which is
    what finite differences of evolved quantities need.
    """
    x, squarings = _scaled(m, scale)
    inner = np.eye(2, dtype=complex)
    for k in range(EXP_TAYLOR_ORDER, 1, -1):
        inner = np.eye(2, dtype=complex) + (x @ inner) / k
    result = x @ inner
    # exp(2y) - I = (exp(y) - I)^2 + 2 (exp(y) - I)
    for _ in range(squarings):
        result = result @ result + 2.0 * result
    return _freeze(result)


def _scaled(m, scale) -> tuple[np.ndarray, int]:
    x = complex(scale) * np.asarray(m, dtype=complex)
    norm = float(np.max(np.sum(np.abs(x), axis=1)))
    if norm <= EXP_SCALED_NORM:
        return x, 0
    squarings = math.ceil(math.log2(norm / EXP_SCALED_NORM))
    return x / 2.0**squarings, squarings


def max_abs_diff(a, b) -> float:
    """Largest entry-wise absolute difference; the comparison used everywhere."""
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))
