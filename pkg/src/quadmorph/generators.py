"""Integer generator families behind the existence constructions.

Everything here is exact int64 with entries in {0, +1, -1}.

Division-algebra products come from Cayley-Dickson doubling with the
convention (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)) and conjugation
(a,b)* = (a*, -b); left-multiplication by a basis unit is then a signed
permutation matrix.

The maximal families of mutually anticommuting skew orthogonal matrices
follow the classical period-8 pattern: complex, quaternion and octonion
left multiplications up to dimension 8, then a fixed 16-dimensional
doubling family combined, through its symmetric product element, with the
family four steps down the recursion, and finally a tensor with the
identity on the odd factor of the dimension.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "cayley_dickson_multiply",
    "left_multiplication_matrix",
    "skew_anticommuting_family",
]


def cayley_dickson_conjugate(x):
    return (x[0],) + tuple(-v for v in x[1:])


def cayley_dickson_multiply(x, y):
    """Product of coefficient tuples of length 1, 2, 4 or 8 (exact ints)."""
    n = len(x)
    if n == 1:
        return (x[0] * y[0],)
    h = n // 2
    a, b = x[:h], x[h:]
    c, d = y[:h], y[h:]
    left = tuple(p - q for p, q in zip(cayley_dickson_multiply(a, c),
                                       cayley_dickson_multiply(cayley_dickson_conjugate(d), b)))
    right = tuple(p + q for p, q in zip(cayley_dickson_multiply(d, a),
                                        cayley_dickson_multiply(b, cayley_dickson_conjugate(c))))
    return left + right


def left_multiplication_matrix(dim: int, i: int) -> np.ndarray:
    """Matrix of y -> e_i * y in the dim-dimensional Cayley-Dickson algebra."""
    if dim not in (1, 2, 4, 8):
        raise ValueError("dim must be one of 1, 2, 4, 8")
    ei = tuple(1 if k == i else 0 for k in range(dim))
    cols = []
    for j in range(dim):
        ej = tuple(1 if k == j else 0 for k in range(dim))
        cols.append(cayley_dickson_multiply(ei, ej))
    return np.array(cols, dtype=np.int64).T


def _doubling_family_16():
    """Eight anticommuting skew orthogonal 16x16 matrices, plus their product.

    Members 1..7 pair an imaginary octonion left multiplication across the
    two 8-dimensional halves; member 8 is the plain rotation between halves.
    The ordered product of all eight is symmetric, orthogonal, squares to the
    identity and anticommutes with every member, which is what lets the
    recursion restart four steps down.
    """
    eye8 = np.eye(8, dtype=np.int64)
    members = []
    for i in range(1, 8):
        block = left_multiplication_matrix(8, i)
        K = np.zeros((16, 16), dtype=np.int64)
        K[:8, 8:] = block
        K[8:, :8] = block
        members.append(K)
    last = np.zeros((16, 16), dtype=np.int64)
    last[:8, 8:] = -eye8
    last[8:, :8] = eye8
    members.append(last)
    product = members[0]
    for K in members[1:]:
        product = product @ K
    return members, product


def _skew_family_power_of_two(v: int):
    if v == 0:
        return []
    if v == 1:
        return [np.array([[0, -1], [1, 0]], dtype=np.int64)]
    if v == 2:
        return [left_multiplication_matrix(4, i) for i in range(1, 4)]
    if v == 3:
        return [left_multiplication_matrix(8, i) for i in range(1, 8)]
    members, product = _doubling_family_16()
    scale = 2 ** (v - 4)
    eye_scale = np.eye(scale, dtype=np.int64)
    family = [np.kron(K, eye_scale) for K in members]
    family += [np.kron(product, A) for A in _skew_family_power_of_two(v - 4)]
    return family


def skew_anticommuting_family(m: int):
    """Maximal family of skew orthogonal mutually anticommuting m x m matrices.

    The family has sigma(m) - 1 members with entries in {0, +1, -1}; together
    with the identity it forms a maximal orthogonal anticommuting system.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    odd, v = m, 0
    while odd % 2 == 0:
        odd //= 2
        v += 1
    eye_odd = np.eye(odd, dtype=np.int64)
    return [np.kron(J, eye_odd) for J in _skew_family_power_of_two(v)]
