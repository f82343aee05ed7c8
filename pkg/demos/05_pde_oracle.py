"""The brute-force oracle: solve the defining equations degree by degree.

For B2 the degree-4 canonical member must be an invariant annihilated by the
Laplacian (the degree-2 member acting as an operator).  The invariant space
of degree 4 is two-dimensional, one Laplacian condition cuts it to one
dimension, and the solution is x^4 - 6 x^2 y^2 + y^4.  The oracle does this
with exact linear algebra for every degree and never touches the transfer
machinery, so agreement with the construction is a genuine cross-check.
"""

from canoninv import ReflectionGroup, build_root_system, canonical_system, verify_canonical
from canoninv.oracle import pde_solve, invariant_basis, spans_agree

rs = build_root_system("B", 2)
group = ReflectionGroup(rs)

for d in (2, 3, 4):
    basis = invariant_basis(group, d)
    print(f"invariant polynomials of degree {d}: dimension {len(basis)}")
    for b in basis:
        print("   ", b)

oracle = pde_solve(group)
print("\noracle system:")
for i, e in enumerate(oracle.entries, start=1):
    print(f"  f_{i} (degree {e.degree}):", e.polynomial)
print("oracle verifies:", verify_canonical(oracle, group).passed)

constructed = canonical_system(group)
print("spans agree with the construction:",
      spans_agree(oracle.polynomials(), constructed.polynomials()))
