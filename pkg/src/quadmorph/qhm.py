"""Quadratic harmonic morphisms as tuples of symmetric component matrices.

A map phi(X) = (X^T A_1 X, ..., X^T A_n X) is a harmonic morphism exactly
when every A_alpha is traceless, distinct components anticommute, and all
A_alpha^2 agree.  Verification runs those matrix identities and, as an
independent oracle, a finite-difference check of the harmonicity and
conformality conditions at seeded sample points (central differences are
exact for quadratics, so both paths must agree).

On top of verification: rank/spectrum classification, the block normal form
of full-rank maps, kernel projection for rank-deficient ones, splitting into
scaled umbilical summands, representation of all components as one quadratic
function composed with orthogonal maps, extension of domain-minimal maps
with additional components up to the Radon-Hurwitz bound, counting of sign
classes, and sphere-restriction / isoparametric sample checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import clifford as _clifford
from . import osystem as _osystem
from .core import (
    DEFAULT_TOLERANCES,
    TolerancePolicy,
    as_matrix,
    block_diag2,
    common_mode,
    eigenvalue_clusters,
    frobenius,
    identity_matrix,
    is_exact,
    is_exactly_zero,
    numeric_rank,
    rel_residual,
    sample_points,
    spectral_decompose,
    to_float,
)
from .errors import (
    AlreadyRangeMaximal,
    ArityMismatch,
    DimensionMismatch,
    NotDomainMinimal,
    NotExtendable,
    NotHarmonic,
    NotHorizontallyConformal,
    NotSymmetric,
    NotUmbilical,
    OddRank,
    QSingular,
    RankMismatch,
    SampleDisagreement,
    ShapeMismatch,
    SharedKernelViolated,
    ZeroMap,
)

__all__ = [
    "QuadraticHarmonicMorphism",
    "NormalForm",
    "ClassificationReport",
    "SingleFunctionRepresentation",
    "SampleReport",
    "IsoparametricReport",
    "SphereRestrictionReport",
    "verify_qhm",
    "sampled_check",
    "evaluate",
    "quadratic_form_value",
    "from_clifford",
    "direct_sum",
    "scale",
    "classify",
    "normal_form",
    "assemble_normal_form",
    "project_nonsingular",
    "single_function_representation",
    "range_extend",
    "count_biequivalence_classes",
    "verify_isoparametric",
    "sphere_restriction_check",
]


@dataclass(frozen=True)
class QuadraticHarmonicMorphism:
    m: int
    n: int
    components: tuple


@dataclass(frozen=True)
class NormalForm:
    """change_of_coords G with G A_1 G^T = diag(D, -D), D positive diagonal
    descending, and every later component carried to [[0, B],[B^T, 0]].

    The blocks obey D B_i = B_i D, B_i^T B_i = D^2 and
    B_i^T B_j = -B_j^T B_i for i != j.
    """

    change_of_coords: np.ndarray
    D: np.ndarray
    B: tuple


@dataclass(frozen=True)
class ClassificationReport:
    """Rank, spectrum and splitting data of a verified map.

    splitting lists (scale, summand) pairs in descending scale order; with
    z = split_change @ X chopped into consecutive blocks matching the summand
    domain dimensions, phi(X) = sum_j scale_j * summand_j(z_j).  projection
    is the kernel-removing row map when the input was rank-deficient.
    """

    q_rank: int
    positive_eigenvalues: tuple
    zero_count: int
    is_q_nonsingular: bool
    is_umbilical: bool
    splitting: tuple
    split_change: np.ndarray
    projection: Optional[np.ndarray]


@dataclass(frozen=True)
class SingleFunctionRepresentation:
    """One quadratic function reproducing every component.

    matrix is diag(D, -D) in descending order; scales/block_sizes describe
    its block structure (distinct positive eigenvalues with multiplicities).
    transforms[alpha] is orthogonal with
    phi^alpha(X) = quadratic_form_value(matrix, transforms[alpha] @ X).
    """

    scales: tuple
    block_sizes: tuple
    matrix: np.ndarray
    transforms: tuple


@dataclass(frozen=True)
class SampleReport:
    samples: int
    max_harmonic_defect: float
    max_offdiagonal_defect: float
    max_diagonal_spread: float
    passed: bool


@dataclass(frozen=True)
class IsoparametricReport:
    holds: bool
    scale: float
    laplacian_coefficient: float
    max_gradient_defect: float
    max_laplacian_defect: float
    samples: int


@dataclass(frozen=True)
class SphereRestrictionReport:
    holds: bool
    radius: float
    max_defect: float
    samples: int


# ---------------------------------------------------------------------------
# evaluation


def evaluate(phi: QuadraticHarmonicMorphism, x) -> np.ndarray:
    """Componentwise quadratic form values at a point."""
    vec = np.asarray(x, dtype=np.float64).reshape(-1)
    if vec.shape[0] != phi.m:
        raise DimensionMismatch(f"point has dimension {vec.shape[0]}, map domain is {phi.m}")
    return np.array([vec @ to_float(A) @ vec for A in phi.components])


def quadratic_form_value(matrix, x) -> float:
    vec = np.asarray(x, dtype=np.float64).reshape(-1)
    return float(vec @ to_float(as_matrix(matrix)) @ vec)


def _batch_values(mats_float, X):
    """Values of each quadratic form at each row of X; shape (points, components)."""
    stack = np.stack(mats_float)
    return np.einsum("pi,aij,pj->pa", X, stack, X)


# ---------------------------------------------------------------------------
# verification


def sampled_check(candidate, samples: int = 64, seed: int = 0,
                  tol: TolerancePolicy = DEFAULT_TOLERANCES) -> SampleReport:
    """Finite-difference test of harmonicity and conformality at seeded points.

    Uses central differences with step 1/2, which are exact for quadratics up
    to rounding: the Laplacian of each component must vanish, gradients of
    distinct components must be orthogonal, and all gradient norms must agree
    pointwise (their common value is the squared dilation at the point).
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    mats = [to_float(as_matrix(M)) for M in candidate]
    m = mats[0].shape[0]
    X = sample_points(m, samples, seed)
    h = 0.5
    shift = h * np.eye(m)
    Xp = X[:, None, :] + shift[None, :, :]
    Xm = X[:, None, :] - shift[None, :, :]
    grads = []
    max_harm = 0.0
    for A in mats:
        vals0 = np.einsum("pi,ij,pj->p", X, A, X)
        vals_p = np.einsum("pki,ij,pkj->pk", Xp, A, Xp)
        vals_m = np.einsum("pki,ij,pkj->pk", Xm, A, Xm)
        grads.append((vals_p - vals_m) / (2 * h))
        lap = np.sum(vals_p + vals_m - 2 * vals0[:, None], axis=1) / h**2
        max_harm = max(max_harm, float(np.max(np.abs(lap))) / max(1.0, frobenius(A)))
    G = np.einsum("api,bpi->pab", np.stack(grads), np.stack(grads))
    diag = np.einsum("paa->pa", G)
    point_scale = np.maximum(1.0, np.max(diag, axis=1))
    n = len(mats)
    if n > 1:
        off_mask = ~np.eye(n, dtype=bool)
        max_off = float(np.max(np.abs(G[:, off_mask]) / point_scale[:, None]))
        max_spread = float(np.max((np.max(diag, axis=1) - np.min(diag, axis=1)) / point_scale))
    else:
        max_off = 0.0
        max_spread = 0.0
    passed = (max_harm <= tol.identity_tol and max_off <= tol.identity_tol
              and max_spread <= tol.identity_tol)
    return SampleReport(samples=samples, max_harmonic_defect=max_harm,
                        max_offdiagonal_defect=max_off, max_diagonal_spread=max_spread,
                        passed=passed)


def verify_qhm(candidate, tol: TolerancePolicy = DEFAULT_TOLERANCES,
               samples: int = 64, seed: int = 0) -> QuadraticHarmonicMorphism:
    """Validate a component tuple through both the matrix identities and the
    sampled finite-difference oracle; both must accept."""
    mats = [as_matrix(M) for M in candidate]
    if not mats:
        raise ShapeMismatch("a map needs at least one component")
    size = mats[0].shape[0]
    for M in mats:
        if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] != size:
            raise ShapeMismatch("all components must be square matrices of one size")
    mats = list(common_mode(*mats))
    exact = is_exact(mats[0])
    for i, M in enumerate(mats):
        if exact:
            if not np.array_equal(M, M.T):
                raise NotSymmetric(i + 1)
        else:
            defect = rel_residual(M, M.T)
            if defect > tol.identity_tol:
                raise NotSymmetric(i + 1, defect)
    if all(is_exactly_zero(M) if exact else frobenius(M) <= tol.identity_tol for M in mats):
        raise ZeroMap("all components vanish")
    for i, M in enumerate(mats):
        tr = sum(M[k, k] for k in range(size)) if exact else float(np.trace(M))
        bad = (tr != 0) if exact else abs(tr) > tol.identity_tol * max(1.0, frobenius(M))
        if bad:
            raise NotHarmonic(i + 1, tr)
    squares = [M @ M for M in mats]
    for i in range(1, len(mats)):
        if exact:
            if not np.array_equal(squares[i], squares[0]):
                raise NotHorizontallyConformal(1, i + 1, frobenius(squares[i] - squares[0]),
                                               note="component squares differ")
        else:
            resid = rel_residual(squares[i], squares[0])
            if resid > tol.identity_tol:
                raise NotHorizontallyConformal(1, i + 1, resid, note="component squares differ")
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            anti = mats[i] @ mats[j] + mats[j] @ mats[i]
            if exact:
                if not is_exactly_zero(anti):
                    raise NotHorizontallyConformal(i + 1, j + 1, frobenius(anti))
            else:
                resid = frobenius(anti) / max(1.0, frobenius(mats[i]) * frobenius(mats[j]))
                if resid > tol.identity_tol:
                    raise NotHorizontallyConformal(i + 1, j + 1, resid)
    phi = QuadraticHarmonicMorphism(m=size, n=len(mats), components=tuple(mats))
    report = sampled_check(mats, samples=samples, seed=seed, tol=tol)
    if not report.passed:
        raise SampleDisagreement(
            f"matrix identities accept but the sampled check rejects: {report}")
    return phi


# ---------------------------------------------------------------------------
# constructors


def from_clifford(cs, tol: TolerancePolicy = DEFAULT_TOLERANCES) -> QuadraticHarmonicMorphism:
    """Use the system members directly as component matrices.

    Valid whenever the members are traceless (always true with two or more
    members); the result has all positive eigenvalues equal to 1.
    """
    return verify_qhm(cs.matrices, tol)


def direct_sum(a: QuadraticHarmonicMorphism, b: QuadraticHarmonicMorphism) -> QuadraticHarmonicMorphism:
    if a.n != b.n:
        raise ArityMismatch(f"operands have {a.n} and {b.n} components")
    return verify_qhm([block_diag2(x, y) for x, y in zip(a.components, b.components)])


def scale(phi: QuadraticHarmonicMorphism, factor) -> QuadraticHarmonicMorphism:
    """Multiply every component by a scalar.  Not re-verified: a zero factor
    gives the zero tuple, which is only usable inside direct sums."""
    scaled = tuple(M * factor for M in phi.components)
    return QuadraticHarmonicMorphism(m=phi.m, n=phi.n, components=scaled)


# ---------------------------------------------------------------------------
# rank, spectrum, projection


def _component_spectra_checked(phi, tol):
    """Common descending spectrum of all components, with pairing checks."""
    first = spectral_decompose(phi.components[0], tol)
    eigs = first.eigenvalues
    for idx, A in enumerate(phi.components[1:], start=2):
        other = spectral_decompose(A, tol).eigenvalues
        if np.max(np.abs(other - eigs)) > tol.eig_pair_tol * max(1.0, float(np.max(np.abs(eigs)))):
            raise RankMismatch(f"component {idx} has a different spectrum than component 1")
    return first


def classify(phi: QuadraticHarmonicMorphism,
             tol: TolerancePolicy = DEFAULT_TOLERANCES) -> ClassificationReport:
    """Rank and spectrum facts plus the splitting into scaled umbilical pieces.

    Rank-deficient maps are first projected onto the shared non-kernel
    subspace; the splitting then regroups block-form coordinates by distinct
    positive eigenvalue.
    """
    ranks = [numeric_rank(A, tol) for A in phi.components]
    if len(set(ranks)) != 1:
        raise RankMismatch(f"component ranks differ: {ranks}")
    q_rank = ranks[0]
    if q_rank == 0:
        raise RankMismatch("all components are zero")
    if q_rank % 2 != 0:
        raise OddRank(q_rank)
    sd = _component_spectra_checked(phi, tol)
    eigs = sd.eigenvalues
    cutoff = tol.rank_tol * max(1.0, float(np.max(np.abs(eigs))))
    pos = eigs[eigs > cutoff]
    neg = eigs[eigs < -cutoff]
    zero_count = phi.m - len(pos) - len(neg)
    if len(pos) != q_rank // 2 or len(neg) != q_rank // 2:
        raise RankMismatch("spectrum inconsistent with component rank")
    mirrored = -neg[::-1]  # descending magnitudes of the negative side
    if np.max(np.abs(pos - mirrored)) > tol.eig_pair_tol * max(1.0, float(pos[0])):
        raise RankMismatch("spectrum does not come in +/- pairs")
    is_nonsingular = q_rank == phi.m
    projection = None
    core = phi
    if not is_nonsingular:
        projection, core = project_nonsingular(phi, tol)
    nf = _normal_form_core(core, tol)
    d = np.diag(to_float(nf.D))
    k = len(d)
    groups = [list(range(lo, hi)) for lo, hi in eigenvalue_clusters(d, tol.eig_pair_tol)]
    bmats = [to_float(B) for B in nf.B]
    for B in bmats:
        for gi in groups:
            for gj in groups:
                if gi is not gj and np.max(np.abs(B[np.ix_(gi, gj)])) > 1e3 * tol.identity_tol * max(1.0, d[0]):
                    raise RankMismatch("blocks couple distinct eigenvalue groups; not a valid map")
    order = []
    for g in groups:
        order.extend(g)
        order.extend(k + i for i in g)
    perm = np.zeros((2 * k, 2 * k))
    perm[np.arange(2 * k), order] = 1.0
    split_change = perm @ to_float(nf.change_of_coords)
    if projection is not None:
        split_change = split_change @ to_float(projection)
    splitting = []
    for g in groups:
        lam = float(d[g[0]])
        kk = len(g)
        head = np.diag(np.concatenate([np.ones(kk), -np.ones(kk)]))
        members = [head]
        for B in bmats:
            sub = B[np.ix_(g, g)] / lam
            M = np.zeros((2 * kk, 2 * kk))
            M[:kk, kk:] = sub
            M[kk:, :kk] = sub.T
            members.append(M)
        summand = QuadraticHarmonicMorphism(m=2 * kk, n=phi.n, components=tuple(members))
        splitting.append((lam, summand))
    return ClassificationReport(
        q_rank=q_rank,
        positive_eigenvalues=tuple(float(v) for v in pos),
        zero_count=zero_count,
        is_q_nonsingular=is_nonsingular,
        is_umbilical=len(groups) == 1,
        splitting=tuple(splitting),
        split_change=split_change,
        projection=projection,
    )


def project_nonsingular(phi: QuadraticHarmonicMorphism,
                        tol: TolerancePolicy = DEFAULT_TOLERANCES):
    """Remove the common kernel of a rank-deficient map.

    Returns (projection, core): projection has orthonormal rows spanning the
    non-kernel subspace, core is the restricted map with full rank, and
    phi(X) = core(projection @ X).  Rejects inputs whose later components do
    not annihilate the kernel of the first.
    """
    q_rank = numeric_rank(phi.components[0], tol)
    if q_rank >= phi.m:
        raise ValueError("map already has full rank; nothing to project")
    exact = is_exact(phi.components[0])
    # axis-aligned fast path: rows that vanish in every component
    zero_rows = []
    for i in range(phi.m):
        if exact:
            if all(is_exactly_zero(M[i, :]) for M in phi.components):
                zero_rows.append(i)
        else:
            scale_row = max(frobenius(M) for M in phi.components)
            if all(np.max(np.abs(to_float(M[i, :]))) <= tol.rank_tol * max(1.0, scale_row)
                   for M in phi.components):
                zero_rows.append(i)
    if len(zero_rows) == phi.m - q_rank:
        keep = [i for i in range(phi.m) if i not in zero_rows]
        proj = np.zeros((q_rank, phi.m), dtype=np.int64 if exact else np.float64)
        for row, col in enumerate(keep):
            proj[row, col] = 1
        core_mats = [M[np.ix_(keep, keep)] for M in phi.components]
        return proj, QuadraticHarmonicMorphism(m=q_rank, n=phi.n, components=tuple(core_mats))
    sd = spectral_decompose(phi.components[0], tol)
    eigs = sd.eigenvalues
    cutoff = tol.rank_tol * max(1.0, float(np.max(np.abs(eigs))))
    keep_mask = np.abs(eigs) > cutoff
    if int(np.sum(keep_mask)) != q_rank:
        raise RankMismatch("eigenvalue zero pattern disagrees with the rank")
    kernel = sd.eigenvectors[:, ~keep_mask]
    for idx, M in enumerate(phi.components, start=1):
        defect = frobenius(to_float(M) @ kernel) / max(1.0, frobenius(M))
        if defect > tol.identity_tol:
            raise SharedKernelViolated(
                f"component {idx} does not annihilate the kernel of component 1 "
                f"(defect {defect:.3e})")
    proj = sd.eigenvectors[:, keep_mask].T
    core_mats = [proj @ to_float(M) @ proj.T for M in phi.components]
    return proj, QuadraticHarmonicMorphism(m=q_rank, n=phi.n, components=tuple(core_mats))


# ---------------------------------------------------------------------------
# normal form


def _is_exact_normal_layout(phi):
    """Exact inputs already shaped as diag(D, -D) with D positive descending
    and off-diagonal later components pass through unchanged."""
    first = phi.components[0]
    if not is_exact(first) or phi.m % 2 != 0:
        return False
    k = phi.m // 2
    if np.any(to_float(first) != np.diag(np.diag(to_float(first)))):
        return False
    d = np.diag(to_float(first))
    head, tail = d[:k], d[k:]
    if not (np.all(head > 0) and np.all(head[:-1] >= head[1:]) and np.array_equal(tail, -head)):
        return False
    for M in phi.components[1:]:
        if np.any(to_float(M[:k, :k])) or np.any(to_float(M[k:, k:])):
            return False
    return True


def _normal_form_core(phi, tol) -> NormalForm:
    k = phi.m // 2
    if _is_exact_normal_layout(phi):
        D = phi.components[0][:k, :k].copy()
        B = tuple(M[:k, k:].copy() for M in phi.components[1:])
        return NormalForm(change_of_coords=identity_matrix(phi.m), D=D, B=B)
    sd = spectral_decompose(phi.components[0], tol)
    eigs = sd.eigenvalues
    if int(np.sum(eigs > 0)) != k or int(np.sum(eigs < 0)) != k:
        raise RankMismatch("eigenvalues do not split evenly into positive and negative")
    vpos = sd.eigenvectors[:, :k]
    vneg = sd.eigenvectors[:, k:][:, ::-1]  # most negative first pairs with largest positive
    G = np.column_stack([vpos, vneg]).T
    d = eigs[:k]
    mirrored = -eigs[k:][::-1]
    if np.max(np.abs(d - mirrored)) > tol.eig_pair_tol * max(1.0, float(d[0])):
        raise RankMismatch("spectrum does not come in +/- pairs")
    D = np.diag(d)
    B = []
    for idx, A in enumerate(phi.components[1:], start=2):
        M = G @ to_float(A) @ G.T
        corner = max(frobenius(M[:k, :k]), frobenius(M[k:, k:])) / max(1.0, frobenius(M))
        if corner > 1e3 * tol.identity_tol:
            raise NotHorizontallyConformal(
                1, idx, corner, note="component does not reach off-diagonal block form")
        B.append(M[:k, k:])
    nf = NormalForm(change_of_coords=G, D=D, B=tuple(B))
    _check_block_relations(nf, tol)
    return nf


def _check_block_relations(nf: NormalForm, tol):
    D = to_float(nf.D)
    D2 = D @ D
    for i, B in enumerate(nf.B):
        Bf = to_float(B)
        if rel_residual(D @ Bf, Bf @ D) > tol.identity_tol:
            raise RankMismatch("eigenvalue matrix does not commute with a block")
        if rel_residual(Bf.T @ Bf, D2) > tol.identity_tol:
            raise RankMismatch("block gram matrix does not match the squared eigenvalues")
        for j in range(i + 1, len(nf.B)):
            Cf = to_float(nf.B[j])
            anti = Bf.T @ Cf + Cf.T @ Bf
            if frobenius(anti) / max(1.0, frobenius(Bf) * frobenius(Cf)) > tol.identity_tol:
                raise RankMismatch("blocks fail the transpose anticommutation relation")


def normal_form(phi: QuadraticHarmonicMorphism,
                tol: TolerancePolicy = DEFAULT_TOLERANCES) -> NormalForm:
    """Block normal form of a full-rank map with at least two components."""
    if phi.n < 2:
        raise ValueError("normal form needs at least two components")
    if phi.m % 2 != 0:
        raise QSingular(f"odd domain dimension {phi.m} cannot carry a full-rank map")
    if numeric_rank(phi.components[0], tol) != phi.m:
        raise QSingular("components are rank-deficient; project the kernel away first")
    return _normal_form_core(phi, tol)


def assemble_normal_form(nf: NormalForm):
    """Rebuild component matrices from (G, D, B); inverse of normal_form."""
    D = to_float(nf.D)
    k = D.shape[0]
    G = to_float(nf.change_of_coords)
    first = np.zeros((2 * k, 2 * k))
    first[:k, :k] = D
    first[k:, k:] = -D
    out = [G.T @ first @ G]
    for B in nf.B:
        M = np.zeros((2 * k, 2 * k))
        M[:k, k:] = to_float(B)
        M[k:, :k] = to_float(B).T
        out.append(G.T @ M @ G)
    return out


# ---------------------------------------------------------------------------
# single-function representation


def single_function_representation(phi: QuadraticHarmonicMorphism,
                                   tol: TolerancePolicy = DEFAULT_TOLERANCES,
                                   samples: int = 100,
                                   seed: int = 0) -> SingleFunctionRepresentation:
    """Express every component as F composed with an orthogonal map.

    F's matrix is diag(D, -D) from the normal form; each transform aligns the
    spectral decomposition of a component with that of F (components share
    one spectrum, so they are orthogonally congruent).  The identity
    phi^alpha(X) = F(transform_alpha @ X) is verified at seeded points.
    """
    if numeric_rank(phi.components[0], tol) != phi.m:
        raise QSingular("components are rank-deficient; project the kernel away first")
    nf = _normal_form_core(phi, tol)
    d = np.diag(to_float(nf.D))
    k = len(d)
    MF = np.diag(np.concatenate([d, -d]))
    # eigencolumns of MF in descending eigenvalue order form this permutation
    E = np.zeros((2 * k, 2 * k))
    for i in range(k):
        E[i, i] = 1.0
    for t in range(k):
        E[2 * k - 1 - t, k + t] = 1.0
    transforms = []
    for A in phi.components:
        sd = spectral_decompose(A, tol)
        transforms.append(E @ sd.eigenvectors.T)
    groups = eigenvalue_clusters(d, tol.eig_pair_tol)
    scales = tuple(float(d[lo]) for lo, _ in groups)
    block_sizes = tuple(hi - lo for lo, hi in groups)
    X = sample_points(phi.m, samples, seed)
    worst = 0.0
    for A, Gt in zip(phi.components, transforms):
        lhs = np.einsum("pi,ij,pj->p", X, to_float(A), X)
        Y = X @ Gt.T
        rhs = np.einsum("pi,ij,pj->p", Y, MF, Y)
        worst = max(worst, float(np.max(np.abs(lhs - rhs) / np.maximum(1.0, np.abs(lhs)))))
    if worst > tol.identity_tol:
        raise SampleDisagreement(
            f"single-function identity fails at sample points (defect {worst:.3e})")
    return SingleFunctionRepresentation(scales=scales, block_sizes=block_sizes,
                                        matrix=MF, transforms=tuple(transforms))


# ---------------------------------------------------------------------------
# range extension


def _normalized_products(taus):
    first = to_float(taus[0])
    return [to_float(t) @ first.T for t in taus[1:]]


def range_extend(phi: QuadraticHarmonicMorphism,
                 tol: TolerancePolicy = DEFAULT_TOLERANCES,
                 seed: int = 0) -> QuadraticHarmonicMorphism:
    """Append components to a domain-minimal map up to the Radon-Hurwitz bound.

    The scaled components form a system whose block reduction yields an
    orthogonal tuple; that tuple is aligned (two-sidedly) with the canonical
    range-maximal family and the missing members are pulled back.  Raises
    rather than guessing when the profile or the alignment fails.
    """
    report = classify(phi, tol)
    if not report.is_q_nonsingular:
        raise NotDomainMinimal("map has a kernel; project it away first")
    if not report.is_umbilical:
        raise NotDomainMinimal("distinct eigenvalue scales: the map splits off summands")
    lam = report.positive_eigenvalues[0]
    if is_exact(phi.components[0]) and lam == 1.0:
        system_mats = list(phi.components)
    else:
        system_mats = [to_float(A) / lam for A in phi.components]
    cs = _clifford.verify_clifford(system_mats, tol)
    if phi.n == 1:
        if phi.m != 2:
            raise NotDomainMinimal(
                "a single-component map is domain-minimal only on the plane")
        sd = spectral_decompose(phi.components[0], tol)
        swap = np.array([[0.0, 1.0], [1.0, 0.0]])
        partner = lam * (sd.eigenvectors @ swap @ sd.eigenvectors.T)
        return verify_qhm([to_float(phi.components[0]), partner], tol)
    m_half = phi.m // 2
    sigma = _osystem.hurwitz_radon(m_half).sigma
    if phi.n - 1 >= sigma:
        raise AlreadyRangeMaximal(
            f"{phi.n} components is the maximum for domain dimension {phi.m}")
    if not _clifford.is_irreducible(cs, tol):
        raise NotDomainMinimal("the associated system splits; the map is not domain-minimal")
    coords, os = _clifford.to_standard_representation(cs, tol)
    canon = _osystem.construct_range_maximal(m_half)
    ours = [to_float(t) for t in os.matrices]
    failures = []
    for flip_last in (False, True):
        targets = [to_float(t) for t in canon.matrices[: phi.n - 1]]
        if flip_last:
            targets[-1] = -targets[-1]
        prods_ours = _normalized_products(ours)
        prods_canon = _normalized_products(targets)
        if prods_ours:
            R = _clifford.find_orthogonal_intertwiner(prods_ours, prods_canon, tol, seed)
        else:
            R = np.eye(m_half)
        if R is None:
            failures.append("no orthogonal intertwiner"
                            + (" (last member negated)" if flip_last else ""))
            continue
        right = targets[0].T @ R.T @ ours[0]
        align = max(rel_residual(R @ t @ right, o) for t, o in zip(targets, ours))
        if align > tol.eig_pair_tol:
            failures.append(f"alignment residual {align:.3e}"
                            + (" (last member negated)" if flip_last else ""))
            continue
        coords_f = to_float(coords)
        new_components = []
        for j in range(phi.n - 1, sigma):
            tau_new = R @ to_float(canon.matrices[j]) @ right
            block = np.zeros((phi.m, phi.m))
            block[:m_half, m_half:] = tau_new
            block[m_half:, :m_half] = tau_new.T
            new_components.append(lam * (coords_f.T @ block @ coords_f))
        extended = [to_float(A) for A in phi.components] + new_components
        return verify_qhm(extended, tol)
    raise NotExtendable("canonical alignment failed: " + "; ".join(failures))


# ---------------------------------------------------------------------------
# class counting


def count_biequivalence_classes(n: int, k: int) -> int:
    """Number of sign classes of k-fold sums of minimal maps to R^(n+1):
    one unless n is a multiple of 4, else 2^(k-1)."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be >= 1")
    return 2 ** (k - 1) if n % 4 == 0 else 1


# ---------------------------------------------------------------------------
# sampled geometric checks


def verify_isoparametric(f_matrix, samples: int = 64, seed: int = 0,
                         tol: TolerancePolicy = DEFAULT_TOLERANCES) -> IsoparametricReport:
    """Sample check that F(x) = x^T M x has gradient norm 4*scale^2*|x|^2 and
    constant Laplacian; scale^2 is estimated as trace(M^2)/m."""
    M = as_matrix(f_matrix)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ShapeMismatch("the function matrix must be square")
    Mf = to_float(M)
    if rel_residual(Mf, Mf.T) > tol.identity_tol:
        raise NotSymmetric(1, rel_residual(Mf, Mf.T))
    m = Mf.shape[0]
    if samples < 1:
        raise ValueError("samples must be >= 1")
    scale_sq = float(np.trace(Mf @ Mf)) / m
    c = 2.0 * float(np.trace(Mf))
    X = sample_points(m, samples, seed)
    h = 0.5
    shift = h * np.eye(m)
    Xp = X[:, None, :] + shift[None, :, :]
    Xm = X[:, None, :] - shift[None, :, :]
    vals0 = np.einsum("pi,ij,pj->p", X, Mf, X)
    vals_p = np.einsum("pki,ij,pkj->pk", Xp, Mf, Xp)
    vals_m = np.einsum("pki,ij,pkj->pk", Xm, Mf, Xm)
    grad = (vals_p - vals_m) / (2 * h)
    lap = np.sum(vals_p + vals_m - 2 * vals0[:, None], axis=1) / h**2
    grad_sq = np.sum(grad * grad, axis=1)
    target = 4.0 * scale_sq * np.sum(X * X, axis=1)
    grad_defect = float(np.max(np.abs(grad_sq - target) / np.maximum(1.0, target)))
    lap_defect = float(np.max(np.abs(lap - c))) / max(1.0, abs(c))
    holds = grad_defect <= tol.identity_tol and lap_defect <= tol.identity_tol
    return IsoparametricReport(holds=holds, scale=math.sqrt(scale_sq),
                               laplacian_coefficient=c,
                               max_gradient_defect=grad_defect,
                               max_laplacian_defect=lap_defect, samples=samples)


def sphere_restriction_check(phi: QuadraticHarmonicMorphism, samples: int = 64,
                             seed: int = 0,
                             tol: TolerancePolicy = DEFAULT_TOLERANCES) -> SphereRestrictionReport:
    """Check |phi(x)| = radius * |x|^2 at seeded points, where radius is the
    common positive eigenvalue of an umbilical map (so spheres map to spheres)."""
    report = classify(phi, tol)
    if not report.is_umbilical:
        raise NotUmbilical("positive eigenvalues are not all equal")
    radius = report.positive_eigenvalues[0]
    if samples < 1:
        raise ValueError("samples must be >= 1")
    X = sample_points(phi.m, samples, seed)
    vals = _batch_values([to_float(A) for A in phi.components], X)
    norms = np.sqrt(np.sum(vals * vals, axis=1))
    target = radius * np.sum(X * X, axis=1)
    defect = float(np.max(np.abs(norms - target) / target))
    return SphereRestrictionReport(holds=defect <= tol.identity_tol, radius=radius,
                                   max_defect=defect, samples=samples)
