"""H3 and the pentagonal dihedral groups over Q(sqrt 5).

The icosahedral group H3 has root coordinates built from the golden ratio;
all arithmetic stays in Q(sqrt 5), so the canonical conditions are still
verified exactly.  I2(5) is realized inside 3-space (its planar rotation
matrices would need sqrt of (5 + sqrt 5)/8, which leaves the field).
"""

from canoninv import ReflectionGroup, build_root_system, canonical_system, verify_canonical
from canoninv.scalars import GOLDEN

print("golden ratio:", GOLDEN, "->", float(GOLDEN))

for params in [("H3", None, None), ("I2", 2, 5), ("I2", 2, 10)]:
    rs = build_root_system(params[0], params[1], m=params[2])
    group = ReflectionGroup(rs)
    system = canonical_system(group)
    report = verify_canonical(system, group)
    print(f"\n{rs.describe()} over {rs.field.name}: degrees {system.degrees},",
          "verified exactly" if report.passed else "FAILED")
    smallest = system.entries[0]
    print("  quadratic member:", smallest.polynomial, "| norm:", smallest.norm)
