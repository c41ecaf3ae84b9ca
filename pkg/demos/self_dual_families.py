"""Self-dual Z2Z4 codes from the three parametrized families.

For each family member the script reports whether it is self-dual, whether it
contains the all-(1|2) word, and whether it splits as C_X x C_Y.
"""

from z2z4 import self_dual_report
from z2z4.selfdual import build_family

print(f"{'family':8}{'params':12}{'type':16}{'self-dual':11}{'antipodal':11}{'separable':10}r")
for name, k, d, b in [("a", 1, 1, 2), ("a", 2, 1, 3), ("b", 2, 1, 6), ("b", 2, 1, 4),
                      ("c", 2, 1, 4), ("c", 3, 1, 4), ("c", 2, 1, 6)]:
    c = build_family(name, k, d, b)
    r = self_dual_report(c)
    yes = {True: "yes", False: "no", None: "-"}
    rr = "-" if r.replication_exponent_r is None else r.replication_exponent_r
    print(f"{name:8}{str((k, d, b)):12}{c.type!s:16}{yes[r.is_self_dual]:11}"
          f"{yes[r.is_antipodal]:11}{yes[r.is_separable]:10}{rr}")

# with no order-four rows family b is self-dual for every beta
print("\nb with delta=0:", [self_dual_report(build_family("b", 2, 0, b)).is_self_dual for b in range(6)])
