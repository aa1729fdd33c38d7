"""O-systems: tuples of orthogonal matrices with anticommuting transposes.

A system is n orthogonal matrices tau_1..tau_n on R^m with

    tau_i^T tau_j + tau_j^T tau_i = 2 delta_ij I.

The maximal n for given m is the classical Radon-Hurwitz number sigma(m),
computed here from the unique factorization m = (2r+1) 2^(c+4d) with
0 <= c <= 3 as sigma = 2^c + 8d.  The module verifies the relation, builds
range-maximal integer families, moves back and forth to Clifford systems
(one extra member, doubled dimension), and provides transpose, subset and
direct-sum closure operations.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .clifford import CliffordSystem, to_standard_representation, verify_clifford
from .core import (
    DEFAULT_TOLERANCES,
    TolerancePolicy,
    as_matrix,
    block_diag2,
    common_mode,
    frobenius,
    identity_matrix,
    is_exact,
    is_exactly_zero,
    rel_residual,
)
from .errors import (
    AnticommutationViolated,
    ArityMismatch,
    BadIndices,
    NotOrthogonal,
    ShapeMismatch,
)
from .generators import skew_anticommuting_family

__all__ = [
    "OSystem",
    "SigmaDecomposition",
    "verify_osystem",
    "hurwitz_radon",
    "construct_range_maximal",
    "from_clifford",
    "to_clifford",
    "transpose_system",
    "sub_system",
    "direct_sum",
]


@dataclass(frozen=True)
class OSystem:
    m: int
    n: int
    matrices: tuple


@dataclass(frozen=True)
class SigmaDecomposition:
    """m = (2r+1) * 2^(c+4d) with 0 <= c <= 3; sigma = 2^c + 8d."""

    m: int
    r: int
    c: int
    d: int
    sigma: int


# ---------------------------------------------------------------------------
# verification


def verify_osystem(candidate, tol: TolerancePolicy = DEFAULT_TOLERANCES) -> OSystem:
    """Check orthogonality and pairwise transpose-anticommutation."""
    mats = [as_matrix(M) for M in candidate]
    if not mats:
        raise ShapeMismatch("a system needs at least one matrix")
    size = mats[0].shape[0]
    for M in mats:
        if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] != size:
            raise ShapeMismatch("all members must be square matrices of one size")
    mats = list(common_mode(*mats))
    exact = is_exact(mats[0])
    eye = identity_matrix(size, exact=exact)
    odd_note = ""
    if size % 2 == 1 and len(mats) >= 2:
        odd_note = (f"no O-system with two or more members exists on an "
                    f"odd-dimensional space (m={size})")
    for i in range(len(mats)):
        gram = mats[i].T @ mats[i]
        if exact:
            if not np.array_equal(gram, eye):
                raise NotOrthogonal(i + 1, frobenius(gram - eye))
        else:
            resid = rel_residual(gram, eye)
            if resid > tol.identity_tol:
                raise NotOrthogonal(i + 1, resid)
        for j in range(i + 1, len(mats)):
            anti = mats[i].T @ mats[j] + mats[j].T @ mats[i]
            if exact:
                if not is_exactly_zero(anti):
                    raise AnticommutationViolated(i + 1, j + 1, frobenius(anti), note=odd_note)
            else:
                resid = frobenius(anti) / max(1.0, frobenius(mats[i]) * frobenius(mats[j]))
                if resid > tol.identity_tol:
                    raise AnticommutationViolated(i + 1, j + 1, resid, note=odd_note)
    return OSystem(m=size, n=len(mats), matrices=tuple(mats))


# ---------------------------------------------------------------------------
# the Radon-Hurwitz count


def hurwitz_radon(m: int) -> SigmaDecomposition:
    if m < 1:
        raise ValueError("m must be >= 1")
    odd, v = m, 0
    while odd % 2 == 0:
        odd //= 2
        v += 1
    c, d = v % 4, v // 4
    return SigmaDecomposition(m=m, r=(odd - 1) // 2, c=c, d=d, sigma=2**c + 8 * d)


# ---------------------------------------------------------------------------
# construction and conversions


def construct_range_maximal(m: int) -> OSystem:
    """The canonical system with sigma(m) members: identity plus the maximal
    skew anticommuting family.  Entries are exact integers in {0, +1, -1}."""
    members = [identity_matrix(m)] + skew_anticommuting_family(m)
    return verify_osystem(members)


def to_clifford(os: OSystem) -> CliffordSystem:
    """Double the dimension: diag(I, -I) first, then each tau in an
    off-diagonal symmetric block.  One more member than the input."""
    size = 2 * os.m
    exact = is_exact(os.matrices[0])
    first = identity_matrix(size, exact=exact)
    first[os.m:, os.m:] *= -1
    members = [first]
    for tau in os.matrices:
        P = np.zeros((size, size), dtype=tau.dtype)
        P[: os.m, os.m:] = tau
        P[os.m:, : os.m] = tau.T
        members.append(P)
    return verify_clifford(members)


def from_clifford(cs: CliffordSystem) -> OSystem:
    """Inverse direction: split off the first member's eigenspaces and read
    the orthogonal blocks.  Needs at least two members."""
    if cs.n < 2:
        raise ValueError("need at least two members; a lone member carries no blocks")
    _, os = to_standard_representation(cs)
    return os


# ---------------------------------------------------------------------------
# closure operations


def transpose_system(os: OSystem) -> OSystem:
    return verify_osystem([M.T.copy() for M in os.matrices])


def sub_system(os: OSystem, indices) -> OSystem:
    """Subsystem at the given 0-based positions (order preserved)."""
    idx = list(indices)
    if not idx:
        raise BadIndices("need at least one index")
    if len(set(idx)) != len(idx):
        raise BadIndices("indices must be distinct")
    if any(i < 0 or i >= os.n for i in idx):
        raise BadIndices(f"indices must lie in [0, {os.n - 1}]")
    return verify_osystem([os.matrices[i] for i in idx])


def direct_sum(a: OSystem, b: OSystem) -> OSystem:
    if a.n != b.n:
        raise ArityMismatch(f"operands have {a.n} and {b.n} members")
    return verify_osystem([block_diag2(x, y) for x, y in zip(a.matrices, b.matrices)])
