"""Type D with even rank: the one repeated invariant degree.

D4 has degrees (2, 4, 4, 6).  The differential of the monomial x1*x2*x3*x4
is an exact eigenvector of the transfer map on one-forms, so the monomial
itself can be placed into the canonical system directly; the other degree-4
slot is filled by transferring a single cross-pairing combination of the two
seeds.  The generic path (orthogonalize the candidate block) must produce
the same per-degree spans.
"""

from canoninv import (
    Polynomial,
    ReflectionGroup,
    antiinvariant,
    build_root_system,
    canonical_system,
    differential,
    verify_canonical,
)
from canoninv.canonical import transfer_form
from canoninv.oracle import spans_agree
from canoninv.scalars import QQ

rs = build_root_system("D", 4)
group = ReflectionGroup(rs)
delta = antiinvariant(rs)

mono = Polynomial(4, QQ, {(1, 1, 1, 1): 1})
dm = differential(mono)
image = transfer_form(dm, delta)
ratio = image.components[0].sorted_terms()[0][1] / dm.components[0].sorted_terms()[0][1]
print("transfer of d(x1 x2 x3 x4) = lambda * d(x1 x2 x3 x4) with lambda =", ratio)
assert image == ratio * dm

refined = canonical_system(group, mode="refined")
generic = canonical_system(group, mode="generic")
print("\nrefined system:")
for i, e in enumerate(refined.entries, start=1):
    print(f"  f_{i} (degree {e.degree}):", e.polynomial)

print("\nboth modes verify:",
      verify_canonical(refined, group).passed and verify_canonical(generic, group).passed)
print("per-degree spans agree:", spans_agree(refined.polynomials(), generic.polynomials()))
