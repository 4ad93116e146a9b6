"""
Inner real forms and the kernel of g
====================================

Each element of ker g is a choice of inner real form at every real place
whose H^2 invariants add up to zero.  Its archimedean rank decides whether
its arithmetic groups are higher rank lattices.
"""

from profsol.lie_data import CartanType
from profsol.number_field import NumberFieldProfile
from profsol.real_forms import inner_real_forms
from profsol.solitude import archimedean_rank, enumerate_ker_g, finite_splitting_principle

for name in ["A3", "B4", "C3", "D6", "E7", "F4"]:
    t = CartanType.parse(name)
    print(name, [(r.name, r.real_rank, r.h2_invariant) for r in inner_real_forms(t)])

# Sp_4 over a real quadratic field: twist at both real places at once.
t, k = CartanType("C", 2), NumberFieldProfile.from_signature(2, 0)
print(f"\nker g for {t} over signature {k.signature}:")
for a in enumerate_ker_g(t, k):
    print(f"  {str(a):<22} rank {archimedean_rank(a, t, k)}")

# With one real place the invariants cannot cancel, and the kernel is trivial.
k1 = NumberFieldProfile.from_signature(1, 1)
print("\nfinite splitting principle for C_2 at (1,1):", finite_splitting_principle(t, k1))
print("kernel:", [str(a) for a in enumerate_ker_g(t, k1)])

# B_4 over Q has twists of real rank 0 and 1 only, too small for a witness.
b4, q = CartanType("B", 4), NumberFieldProfile.rationals()
print("\nB_4 over Q:", [(str(a), archimedean_rank(a, b4, q)) for a in enumerate_ker_g(b4, q)])
