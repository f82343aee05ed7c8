"""Build root systems and their fundamental antiinvariants.

Each reflection group is realized by exact orthogonal matrices.  Groups whose
angles do not fit the coefficient field in their own rank are realized in a
larger ambient space: A_n permutes n+1 coordinates, I2(5) sits inside
3-space over Q(sqrt5).
"""

from canoninv import ReflectionGroup, antiinvariant, build_root_system

for params in [("B", 2, None), ("A", 2, None), ("D", 4, None), ("I2", 2, 5), ("H3", None, None)]:
    rs = build_root_system(params[0], params[1], m=params[2])
    group = ReflectionGroup(rs)
    delta = antiinvariant(rs)
    print(f"{rs.describe()}: field {rs.field.name}, {rs.num_vars} coordinates")
    print(f"  positive roots: {len(rs.positive_roots)}, group order: {len(group.enumerate())}")
    print(f"  invariant degrees: {rs.degrees}")
    if len(delta) <= 10:
        print(f"  antiinvariant: {delta}")
    else:
        print(f"  antiinvariant: degree {delta.homogeneous_degree()}, {len(delta)} terms")
    print()

print("the B2 antiinvariant is the product of the four mirror forms:")
rs = build_root_system("B", 2)
for root in sorted(rs.positive_roots):
    print("  root", tuple(str(c) for c in root))
print("  product:", antiinvariant(rs))
