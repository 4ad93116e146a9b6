"""
Cartan matrices, centers and diagram symmetries
===============================================

The center of a simply-connected group is the cokernel of its Cartan
matrix.  We read it off the Smith normal form and compare the group order
with the determinant.
"""

from profsol.lie_data import (
    CartanType,
    admissible_types,
    cartan_matrix,
    center,
    determinant,
    dynkin_symmetry_order,
    smith_normal_form,
)

# A Cartan matrix, Bourbaki ordering.  The short root comes first in G_2.
g2 = CartanType.parse("G2")
for row in cartan_matrix(g2):
    print(row)

# The Smith diagonal of D_6 has two factors of 2, so the center is not cyclic.
d6 = CartanType("D", 6)
print("SNF of D_6:", smith_normal_form(cartan_matrix(d6)))

# Every admissible type up to rank 8, with center and symmetry group order.
print(f"\n{'type':<5} {'center':<12} {'det':>4} {'|Sym|':>6}")
for t in admissible_types(8):
    z = center(t)
    print(f"{t.compact_name:<5} {str(z):<12} {determinant(cartan_matrix(t)):>4} "
          f"{dynkin_symmetry_order(t):>6}")

# D_4 is the one type with a symmetric group S_3 of diagram automorphisms.
print("\nD_4 symmetries:", dynkin_symmetry_order(CartanType("D", 4)))
