"""Clifford systems: construction, standard representation, and deciding
when two systems are orthogonally conjugate."""

import numpy as np

from quadmorph import clifford
from quadmorph.core import random_orthogonal, to_float

# an irreducible five-member system on R^8
cs = clifford.construct_irreducible(4)
print(f"system: {cs.n} members on R^{cs.two_m}, dtype {cs.matrices[0].dtype}")
print("first member:")
print(cs.matrices[0])

# anticommutation relations hold exactly
for i in range(cs.n):
    for j in range(i + 1, cs.n):
        anti = cs.matrices[i] @ cs.matrices[j] + cs.matrices[j] @ cs.matrices[i]
        assert not anti.any()
print("all pairwise anticommutators vanish exactly")

# reduction to diag(I, -I) + off-diagonal blocks gives an orthogonal tuple
coords, taus = clifford.to_standard_representation(cs)
print(f"standard representation: {taus.n} orthogonal {taus.m}x{taus.m} blocks")

# a conjugated copy is recognized, with an explicit certificate
g = random_orthogonal(8, seed=1)
conj = clifford.verify_clifford([g @ to_float(P) @ g.T for P in cs.matrices])
verdict = clifford.algebraically_equivalent(cs, conj)
print(f"conjugated copy: {verdict.status.value} ({verdict.reason})")

# flipping the sign of the last member lands in the other class here
flipped = clifford.verify_clifford(list(cs.matrices[:-1]) + [-cs.matrices[-1]])
verdict = clifford.algebraically_equivalent(cs, flipped)
print(f"last member negated: {verdict.status.value} ({verdict.reason})")

# with four members instead of five the flip is absorbable
cs4 = clifford.construct_irreducible(3)
flipped4 = clifford.verify_clifford(list(cs4.matrices[:-1]) + [-cs4.matrices[-1]])
verdict = clifford.algebraically_equivalent(cs4, flipped4)
print(f"four-member flip: {verdict.status.value}")

# reducibility is visible in the symmetric commutant
ds = clifford.direct_sum(cs, cs)
print(f"direct sum irreducible? {clifford.is_irreducible(ds)} "
      f"(commutant dimension {clifford.symmetric_commutant_dimension(ds.matrices)})")
