"""Orthogonal multiplications: bilinear maps that multiply norms.

A multiplication is stored through its coefficient slices: slice i is the
matrix sending y to the i-th block of mu(e_i, y), so mu(x, y) = sum_i x_i *
(slices[i] @ y).  Norm preservation |mu(x, y)| = |x| |y| is checked at seeded
sample pairs, and exactly through the column-orthogonality identities when
the slices are square.

The square case is interchangeable with orthogonal member tuples, and every
multiplication with matching factor and output dimensions induces a
quadratic harmonic morphism on the doubled space (the Hopf construction).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import osystem as _osystem
from .core import (
    DEFAULT_TOLERANCES,
    TolerancePolicy,
    as_matrix,
    common_mode,
    frobenius,
    is_exact,
    rel_residual,
    sample_points,
    to_float,
)
from .errors import DimensionMismatch, NotNormPreserving, NotSquare, ShapeMismatch, UnsupportedDimension
from .generators import left_multiplication_matrix

__all__ = [
    "OrthogonalMultiplication",
    "MultiplicationReport",
    "verify_orthomul",
    "multiply",
    "from_osystem",
    "to_osystem",
    "standard_multiplication",
    "hopf_construction",
]


@dataclass(frozen=True)
class OrthogonalMultiplication:
    """Bilinear norm multiplier R^p x R^q -> R^d with d = n_out.

    slices[i] is the d x q matrix of y -> mu(e_i, y).
    """

    p: int
    q: int
    n_out: int
    slices: tuple


@dataclass(frozen=True)
class MultiplicationReport:
    norm_preserving: bool
    max_defect: float
    exact: bool
    samples: int


def multiply(mu: OrthogonalMultiplication, x, y) -> np.ndarray:
    xv = np.asarray(x, dtype=np.float64).reshape(-1)
    yv = np.asarray(y, dtype=np.float64).reshape(-1)
    if xv.shape[0] != mu.p or yv.shape[0] != mu.q:
        raise DimensionMismatch(
            f"expected factors of dimension {mu.p} and {mu.q}, "
            f"got {xv.shape[0]} and {yv.shape[0]}")
    out = np.zeros(mu.n_out)
    for xi, s in zip(xv, mu.slices):
        out += xi * (to_float(s) @ yv)
    return out


def verify_orthomul(candidate_slices, samples: int = 64, seed: int = 0,
                    tol: TolerancePolicy = DEFAULT_TOLERANCES) -> OrthogonalMultiplication:
    """Validate coefficient slices as a norm-preserving multiplication.

    Exact square slices are checked through the identities s_i^T s_i = I and
    s_i^T s_j + s_j^T s_i = 0; otherwise |mu(x,y)| is compared against
    |x| |y| at seeded sample pairs.
    """
    mats = [as_matrix(s) for s in candidate_slices]
    if not mats:
        raise ShapeMismatch("a multiplication needs at least one slice")
    d, q = mats[0].shape if mats[0].ndim == 2 else (0, 0)
    for s in mats:
        if s.ndim != 2 or s.shape != (d, q):
            raise ShapeMismatch("all slices must share one shape")
    mats = list(common_mode(*mats))
    p = len(mats)
    exact = is_exact(mats[0]) and d == q
    if exact:
        eye = np.eye(d, dtype=np.int64)
        for i, s in enumerate(mats):
            gram = s.T @ s
            if not np.array_equal(to_float(gram), to_float(eye)):
                raise NotNormPreserving(i + 1, i + 1, frobenius(gram - eye))
        for i in range(p):
            for j in range(i + 1, p):
                mix = mats[i].T @ mats[j] + mats[j].T @ mats[i]
                if np.any(to_float(mix)):
                    raise NotNormPreserving(i + 1, j + 1, frobenius(mix))
        return OrthogonalMultiplication(p=p, q=q, n_out=d, slices=tuple(mats))
    if samples < 1:
        raise ValueError("samples must be >= 1")
    floats = np.stack([to_float(s) for s in mats])
    X = sample_points(p, samples, seed)
    Y = sample_points(q, samples, seed + 1)
    prods = np.einsum("pi,idq,pq->pd", X, floats, Y)
    lhs = np.sqrt(np.sum(prods * prods, axis=1))
    rhs = np.sqrt(np.sum(X * X, axis=1) * np.sum(Y * Y, axis=1))
    defects = np.abs(lhs - rhs) / np.maximum(1.0, rhs)
    worst_idx = int(np.argmax(defects))
    worst = float(defects[worst_idx])
    if worst > tol.identity_tol:
        raise NotNormPreserving(worst_idx + 1, worst_idx + 1, worst,
                                note="norm defect at a sample pair")
    return OrthogonalMultiplication(p=p, q=q, n_out=d, slices=tuple(mats))


def measure(mu: OrthogonalMultiplication, samples: int = 64, seed: int = 0,
            tol: TolerancePolicy = DEFAULT_TOLERANCES) -> MultiplicationReport:
    """Norm-preservation report without raising."""
    floats = np.stack([to_float(s) for s in mu.slices])
    X = sample_points(mu.p, samples, seed)
    Y = sample_points(mu.q, samples, seed + 1)
    prods = np.einsum("pi,idq,pq->pd", X, floats, Y)
    lhs = np.sqrt(np.sum(prods * prods, axis=1))
    rhs = np.sqrt(np.sum(X * X, axis=1) * np.sum(Y * Y, axis=1))
    worst = float(np.max(np.abs(lhs - rhs) / np.maximum(1.0, rhs)))
    exact = is_exact(mu.slices[0]) and mu.q == mu.n_out
    return MultiplicationReport(norm_preserving=worst <= tol.identity_tol,
                                max_defect=worst, exact=exact, samples=samples)


def from_osystem(os) -> OrthogonalMultiplication:
    """Members of an orthogonal tuple become the coefficient slices."""
    return OrthogonalMultiplication(p=os.n, q=os.m, n_out=os.m, slices=tuple(os.matrices))


def to_osystem(mu: OrthogonalMultiplication,
               tol: TolerancePolicy = DEFAULT_TOLERANCES):
    """Square multiplications viewed as orthogonal member tuples."""
    if mu.q != mu.n_out:
        raise NotSquare(f"slices are {mu.n_out} x {mu.q}; need square slices")
    return _osystem.verify_osystem(mu.slices, tol)


def standard_multiplication(n: int) -> OrthogonalMultiplication:
    """Real, complex, quaternion or octonion multiplication on R^n.

    Slice i is the left-multiplication matrix of the i-th basis unit, so the
    entries are 0 and +-1 and the multiplication is exact.
    """
    if n not in (1, 2, 4, 8):
        raise UnsupportedDimension(
            f"norm-multiplying products with equal dimensions exist only for "
            f"n in (1, 2, 4, 8), not {n}")
    slices = tuple(left_multiplication_matrix(n, i) for i in range(n))
    return OrthogonalMultiplication(p=n, q=n, n_out=n, slices=slices)


def hopf_construction(mu: OrthogonalMultiplication,
                      tol: TolerancePolicy = DEFAULT_TOLERANCES):
    """Quadratic map (|x|^2 - |y|^2, 2 mu(x, y)) on R^(p+q) as a verified
    harmonic morphism; requires p = q so the first component stays conformal
    with the rest."""
    from . import qhm as _qhm

    if mu.p != mu.q:
        raise ShapeMismatch(
            f"the doubled map needs equal factor dimensions, got {mu.p} and {mu.q}")
    p, q, d = mu.p, mu.q, mu.n_out
    mats = list(common_mode(*[as_matrix(s) for s in mu.slices]))
    dtype = mats[0].dtype
    size = p + q
    first = np.zeros((size, size), dtype=dtype)
    for i in range(p):
        first[i, i] = 1
    for i in range(q):
        first[p + i, p + i] = -1
    components = [first]
    for k in range(d):
        N = np.zeros((p, q), dtype=dtype)
        for i in range(p):
            N[i, :] = mats[i][k, :]
        comp = np.zeros((size, size), dtype=dtype)
        comp[:p, p:] = N
        comp[p:, :p] = N.T
        components.append(comp)
    return _qhm.verify_qhm(components, tol)
