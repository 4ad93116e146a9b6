"""
Brauer classes that vanish at every finite place
================================================

A class in the kernel of b has local invariant 0 away from the real places
and 0 or 1/2 at each real place, with an even number of halves.  So the
kernel only sees the real places and the parity of the center.
"""

from profsol.brauer import ker_b, validate_class
from profsol.lie_data import CartanType
from profsol.number_field import NumberFieldProfile

signatures = [(0, 2), (1, 1), (2, 0), (3, 0), (4, 2)]
types = ["A2", "A3", "B3", "C2", "D4", "D5", "E6", "E7"]

print("type  " + "  ".join(f"{r1},{r2}".rjust(5) for r1, r2 in signatures))
for name in types:
    t = CartanType.parse(name)
    counts = [ker_b(t, NumberFieldProfile.from_signature(*s)).total_count for s in signatures]
    print(f"{name:<5} " + "  ".join(f"{c:>5}" for c in counts))

# Over a totally real cubic field, C_2 has three nontrivial classes.
k = NumberFieldProfile.from_signature(3, 0)
desc = ker_b(CartanType("C", 2), k)
for classes in desc.to_brauer_classes():
    c = classes[0]
    print(sorted(str(v) for v in c.support), "valid:", validate_class(c))
