"""Dense matrix arithmetic with a dual scalar model.

Matrices are plain 2-D numpy arrays in one of two modes:

* exact mode: integer dtype, or object dtype holding python ints and
  ``fractions.Fraction`` values.  Algebraic identities are checked bit for
  bit in this mode, with no tolerance.
* approx mode: float64.  Checks go through a ``TolerancePolicy``.

Mixed arithmetic promotes exact to approx, never the reverse.  All spectral
work (eigendecomposition, rank by singular values, seeded orthogonal
generation) happens in approx mode on top of LAPACK via numpy.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

__all__ = [
    "TolerancePolicy",
    "DEFAULT_TOLERANCES",
    "SpectralDecomposition",
    "as_matrix",
    "is_exact",
    "to_float",
    "common_mode",
    "identity_matrix",
    "zero_matrix",
    "block_diag2",
    "frobenius",
    "rel_residual",
    "is_exactly_zero",
    "matrices_equal",
    "spectral_decompose",
    "numeric_rank",
    "exact_rank",
    "random_orthogonal",
    "sample_points",
    "nullspace_dimension_exact",
    "symmetric_pair_index",
]

from .errors import NoConvergence, NotSymmetric


# ---------------------------------------------------------------------------
# tolerances


@dataclass(frozen=True)
class TolerancePolicy:
    """Thresholds for approx-mode checks.

    identity_tol is a relative Frobenius tolerance for matrix identities,
    eig_pair_tol matches eigenvalues into clusters and +/- pairs, rank_tol
    scales the largest singular value when counting rank.
    """

    identity_tol: float = 1e-9
    eig_pair_tol: float = 1e-8
    rank_tol: float = 1e-9

    def __post_init__(self):
        for name in ("identity_tol", "eig_pair_tol", "rank_tol"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be strictly positive")


DEFAULT_TOLERANCES = TolerancePolicy()


# ---------------------------------------------------------------------------
# scalar/matrix mode handling


def _coerce_scalar(x):
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (float, np.floating)):
        return float(x)
    raise TypeError(f"unsupported scalar {x!r}")


def as_matrix(rows):
    """Build a matrix from nested data, picking the tightest mode.

    Accepts an existing ndarray (returned with dtype normalized), or nested
    sequences of ints, Fractions, floats, and rational strings like "2/3".
    All-integer data lands in int64 when it fits, exact rationals in object
    dtype, anything float in float64.
    """
    if isinstance(rows, np.ndarray):
        if rows.dtype == object or rows.dtype == np.float64 or rows.dtype == np.int64:
            return rows
        if np.issubdtype(rows.dtype, np.integer):
            return rows.astype(np.int64)
        if np.issubdtype(rows.dtype, np.floating):
            return rows.astype(np.float64)
        raise TypeError(f"unsupported dtype {rows.dtype}")
    data = [[_coerce_scalar(x) for x in row] for row in rows]
    flat = [x for row in data for x in row]
    if any(isinstance(x, float) for x in flat):
        return np.array([[float(x) for x in row] for row in data], dtype=np.float64)
    if all(isinstance(x, int) for x in flat) and all(abs(x) < 2**32 for x in flat):
        return np.array(data, dtype=np.int64)
    out = np.empty((len(data), len(data[0]) if data else 0), dtype=object)
    for i, row in enumerate(data):
        for j, x in enumerate(row):
            out[i, j] = x
    return out


def is_exact(a) -> bool:
    return a.dtype != np.float64


def to_float(a) -> np.ndarray:
    if a.dtype == np.float64:
        return a
    return a.astype(np.float64)


def common_mode(*arrays):
    """Promote a group of matrices to a shared mode (exact -> approx only)."""
    if any(a.dtype == np.float64 for a in arrays):
        return tuple(to_float(a) for a in arrays)
    if any(a.dtype == object for a in arrays):
        return tuple(a if a.dtype == object else a.astype(object) for a in arrays)
    return arrays


def identity_matrix(n, exact=True):
    return np.eye(n, dtype=np.int64 if exact else np.float64)


def zero_matrix(rows, cols, exact=True):
    return np.zeros((rows, cols), dtype=np.int64 if exact else np.float64)


def block_diag2(a, b):
    a, b = common_mode(a, b)
    out = np.zeros((a.shape[0] + b.shape[0], a.shape[1] + b.shape[1]), dtype=a.dtype)
    out[: a.shape[0], : a.shape[1]] = a
    out[a.shape[0]:, a.shape[1]:] = b
    return out


# ---------------------------------------------------------------------------
# residuals and equality


def frobenius(a) -> float:
    return float(np.linalg.norm(to_float(a)))


def rel_residual(actual, expected) -> float:
    """Frobenius residual of actual against expected, relative with floor 1."""
    return frobenius(actual - expected) / max(1.0, frobenius(expected))


def is_exactly_zero(a) -> bool:
    return not np.any(a)


def matrices_equal(a, b, tol: TolerancePolicy = DEFAULT_TOLERANCES) -> bool:
    """Exact equality when both operands are exact, tolerance check otherwise."""
    if a.shape != b.shape:
        return False
    if is_exact(a) and is_exact(b):
        return bool(np.array_equal(a, b))
    return rel_residual(to_float(a), to_float(b)) <= tol.identity_tol


# ---------------------------------------------------------------------------
# spectral decomposition with deterministic tie-breaking


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues descending, eigenvector columns aligned and orthonormal."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def eigenvalue_clusters(values, pair_tol):
    """Split a descending sequence into runs separated by relative gaps."""
    groups, start = [], 0
    n = len(values)
    for i in range(1, n + 1):
        if i == n or values[i - 1] - values[i] > pair_tol * max(1.0, abs(values[i - 1])):
            groups.append((start, i))
            start = i
    return groups


def _sign_normalize(col):
    k = int(np.argmax(np.abs(col)))
    return -col if col[k] < 0 else col


def spectral_decompose(a, tol: TolerancePolicy = DEFAULT_TOLERANCES) -> SpectralDecomposition:
    """Eigendecomposition of a symmetric matrix, descending, deterministic.

    Within an eigenvalue cluster (relative gap below eig_pair_tol) the
    eigenvector columns are rebuilt by Gram-Schmidt on the projections of the
    standard basis vectors taken in index order, then sign-normalized.  That
    makes repeated-eigenvalue output reproducible and, for exactly diagonal
    input, a signed permutation.
    """
    A = to_float(a)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise NotSymmetric(1, None)
    sym_defect = rel_residual(A, A.T)
    if sym_defect > tol.identity_tol:
        raise NotSymmetric(1, sym_defect)
    S = (A + A.T) / 2.0
    try:
        w, v = np.linalg.eigh(S)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK rarely fails
        raise NoConvergence(str(exc)) from exc
    w = w[::-1].copy()
    v = v[:, ::-1].copy()
    n = len(w)
    for lo, hi in eigenvalue_clusters(w, tol.eig_pair_tol):
        if hi - lo == 1:
            v[:, lo] = _sign_normalize(v[:, lo])
            continue
        proj = v[:, lo:hi] @ v[:, lo:hi].T
        basis = []
        for i in range(n):
            cand = proj[:, i].copy()
            for b in basis:
                cand -= (b @ cand) * b
            nrm = np.linalg.norm(cand)
            # a rank-(hi-lo) projector always leaves some column with
            # residual norm >= sqrt((hi-lo-len(basis))/n) > 1e-6
            if nrm > 1e-6:
                basis.append(_sign_normalize(cand / nrm))
            if len(basis) == hi - lo:
                break
        v[:, lo:hi] = np.column_stack(basis)
    recon = rel_residual(v @ np.diag(w) @ v.T, S)
    if recon > tol.identity_tol:  # pragma: no cover - defensive
        raise NoConvergence(f"reconstruction residual {recon:.3e} exceeds tolerance")
    return SpectralDecomposition(eigenvalues=w, eigenvectors=v)


# ---------------------------------------------------------------------------
# rank


def exact_rank(a) -> int:
    """Rank over the rationals by fraction-exact Gaussian elimination."""
    rows = [[Fraction(x) for x in row] for row in a.tolist()]
    ncols = a.shape[1]
    rank, pivot_row = 0, 0
    for col in range(ncols):
        sel = None
        for r in range(pivot_row, len(rows)):
            if rows[r][col] != 0:
                sel = r
                break
        if sel is None:
            continue
        rows[pivot_row], rows[sel] = rows[sel], rows[pivot_row]
        piv = rows[pivot_row][col]
        rows[pivot_row] = [x / piv for x in rows[pivot_row]]
        for r in range(len(rows)):
            if r != pivot_row and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
        rank += 1
        if pivot_row == len(rows):
            break
    return rank


def numeric_rank(a, tol: TolerancePolicy = DEFAULT_TOLERANCES) -> int:
    """Rank: exact elimination in exact mode, singular values otherwise."""
    if a.size == 0:
        return 0
    if is_exact(a):
        return exact_rank(a)
    s = np.linalg.svd(to_float(a), compute_uv=False)
    if len(s) == 0 or s[0] == 0.0:
        return 0
    return int(np.sum(s > tol.rank_tol * s[0]))


# ---------------------------------------------------------------------------
# seeded generators


def random_orthogonal(m: int, seed: int) -> np.ndarray:
    """Deterministic near-Haar orthogonal matrix from a seeded Gaussian QR."""
    if m < 1:
        raise ValueError("m must be >= 1")
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((m, m))
    q, r = np.linalg.qr(g)
    d = np.sign(np.diag(r))
    d[d == 0] = 1.0
    return q * d


def sample_points(dim: int, count: int, seed: int) -> np.ndarray:
    """count x dim standard-normal sample, deterministic per (dim, count, seed)."""
    rng = np.random.default_rng(seed)
    return rng.standard_normal((count, dim))


# ---------------------------------------------------------------------------
# sparse exact linear algebra (for commutant computations)


def symmetric_pair_index(n):
    """Index map (i<=j) -> position for unknowns ranging over symmetric matrices."""
    idx = {}
    for i in range(n):
        for j in range(i, n):
            idx[(i, j)] = len(idx)
    return idx


def nullspace_dimension_exact(rows, n_unknowns: int) -> int:
    """Nullity of a sparse rational system given as dicts {column: coefficient}.

    Incremental row reduction keyed by pivot column; suited to the very
    sparse systems produced by signed-permutation matrices.
    """
    pivots = {}
    for row in rows:
        row = {c: Fraction(v) for c, v in row.items() if v != 0}
        while row:
            col = min(row)
            if col in pivots:
                factor = row.pop(col)
                for c, v in pivots[col].items():
                    if c == col:
                        continue
                    newv = row.get(c, Fraction(0)) - factor * v
                    if newv:
                        row[c] = newv
                    else:
                        row.pop(c, None)
            else:
                piv = row[col]
                pivots[col] = {c: v / piv for c, v in row.items()}
                break
    return n_unknowns - len(pivots)
