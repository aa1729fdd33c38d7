"""Adding components to a map that is as small as its range allows.

A domain-minimal map with n components on R^(2m) can be extended until it
has sigma(m)+1 components; after that no further component exists.
"""

import numpy as np

from quadmorph import orthomul, osystem, qhm
from quadmorph.errors import AlreadyRangeMaximal, NotDomainMinimal

# the quaternion multiplication map R^8 -> R^4 (no norm-difference component)
hopf4 = orthomul.hopf_construction(orthomul.standard_multiplication(4))
mu_map = qhm.verify_qhm(hopf4.components[1:])
print(f"start: {mu_map.n} components on R^{mu_map.m}, "
      f"bound sigma({mu_map.m // 2}) + 1 = {osystem.hurwitz_radon(mu_map.m // 2).sigma + 1}")

extended = qhm.range_extend(mu_map)
report = qhm.classify(extended)
print(f"extended to {extended.n} components; rank {report.q_rank}, "
      f"umbilical {report.is_umbilical}")

# one more component cannot exist
try:
    qhm.range_extend(extended)
except AlreadyRangeMaximal as exc:
    print("further extension refused:", exc)

# x^2 - y^2 on the plane completes to z^2
plane = qhm.verify_qhm([np.diag([1, -1]).astype(np.int64)])
z2 = qhm.range_extend(plane)
print("plane map completes to:", [np.round(np.asarray(c, dtype=float)).tolist()
                                  for c in z2.components])

# maps that split, or that could live on a smaller domain, are refused
two_scale = qhm.direct_sum(qhm.scale(orthomul.hopf_construction(
    orthomul.standard_multiplication(2)), 2), orthomul.hopf_construction(
    orthomul.standard_multiplication(2)))
try:
    qhm.range_extend(two_scale)
except NotDomainMinimal as exc:
    print("two-scale sum refused:", exc)

reducible = qhm.direct_sum(
    orthomul.hopf_construction(orthomul.standard_multiplication(1)),
    orthomul.hopf_construction(orthomul.standard_multiplication(1)))
try:
    qhm.range_extend(reducible)
except NotDomainMinimal as exc:
    print("reducible map refused:", exc)
