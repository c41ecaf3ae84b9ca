"""Walk through a small mixed binary/quaternary code.

Builds the code, reads off its type, reduces it to canonical form, then
computes the additive dual three ways and checks they all give the same code.
Run with ``python3 demos/canonical_and_dual.py``.
"""

from z2z4 import codes_equal, dual, dual_type, new_code, standard_form, weight_enumerator
from z2z4.duality import macwilliams_transform


def show(title, rows, alpha):
    print(title)
    for r in rows:
        print("   ", " ".join(map(str, r[:alpha])), "|", " ".join(map(str, r[alpha:])))


c = new_code(1, 3, [[1, 2, 2, 2], [0, 1, 1, 0], [1, 1, 2, 3]])
print(f"type {c.type}, {c.cardinality} codewords")

sf = standard_form(c)
show("canonical generators:", sf.canonical_array().tolist(), c.alpha)
print("X permutation", sf.x_permutation, "Y permutation", sf.y_permutation)

# the dual's type is predicted from the type alone
d = dual(c, "standard")
print(f"\ndual type {d.type} (predicted {dual_type(c.type)}), {d.cardinality} codewords")
show("dual generators:", d.generator_array.tolist(), c.alpha)
for method in ("lift", "brute"):
    print(f"  {method:>5} agrees:", codes_equal(dual(c, method), d))
print("  |C| |C^perp| =", c.cardinality * d.cardinality, "= 2 ^", c.alpha + 2 * c.beta)

# Lee weight distribution of the dual without enumerating it
w = weight_enumerator(c)
print("\nLee weights of C:      ", w.coefficients)
print("MacWilliams prediction:", macwilliams_transform(w, c.cardinality).coefficients)
print("direct count on dual:  ", weight_enumerator(d).coefficients)
