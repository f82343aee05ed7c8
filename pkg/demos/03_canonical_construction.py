"""End-to-end construction of a canonical system for B3.

Starting from the even power sums, each seed h is pushed through
sum_j x_j * transfer(d_j h), where the transfer map applies a polynomial to
the antiinvariant twice.  Because the B3 invariant degrees are distinct, no
orthogonalization is needed; verification then confirms, with exact
arithmetic, that every cross-pairing f_i(d)f_j vanishes identically.
"""

from canoninv import (
    ReflectionGroup,
    antiinvariant,
    build_root_system,
    canonical_system,
    seed_invariants,
    verify_canonical,
)
from canoninv.canonical import candidate_invariants

rs = build_root_system("B", 3)
group = ReflectionGroup(rs)
delta = antiinvariant(rs)
seeds = seed_invariants(group)

print("seeds (even power sums):")
for h in seeds.polynomials:
    print("  ", h)

print("\nraw candidates sum_j x_j * transfer(d_j h):")
for g in candidate_invariants(seeds, delta):
    print("  ", g)

system = canonical_system(group, mode="refined")
print("\ncanonical system (leading coefficients pinned to 1):")
for i, e in enumerate(system.entries, start=1):
    print(f"  f_{i} (degree {e.degree}, <f,f> = {e.norm}):", e.polynomial)

report = verify_canonical(system, group)
print("\nverification:", "pass" if report.passed else report.summary())
print("norms are exactly positive rationals; the float view divides by their roots:")
for f in system.float_normalized():
    print("  ", f)
