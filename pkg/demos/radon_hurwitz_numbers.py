"""How many anticommuting orthogonal matrices fit on R^m, and how small a
domain an (n+1)-component quadratic harmonic morphism can have."""

from quadmorph import clifford, osystem

print("sigma(m) and its decomposition m = (2r+1) * 2^(c+4d):")
for m in range(1, 33):
    d = osystem.hurwitz_radon(m)
    print(f"  m={m:3d}  r={d.r:2d} c={d.c} d={d.d}  sigma={d.sigma}")

print()
print("smallest m with an irreducible (n+1)-member system on R^(2m):")
for n in range(1, 17):
    print(f"  n={n:2d}  m(n)={clifford.minimal_domain_dimension(n)}")

# the bound is tight: the canonical construction hits it
for m in (2, 4, 8, 16, 32):
    os_ = osystem.construct_range_maximal(m)
    print(f"constructed {os_.n} members on R^{m} (bound {osystem.hurwitz_radon(m).sigma})")
