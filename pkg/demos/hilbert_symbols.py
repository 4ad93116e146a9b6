"""
Hilbert symbols and local invariants of quadratic forms
=======================================================

Diagonal forms over Q are classified locally by dimension, discriminant and
Hasse invariant (plus the signature over R).  The forms <1,1,1,1> and
<-1,-1,-1,-1> agree at every prime and differ only at infinity, which is
the mechanism behind the spin witnesses.
"""

from math import prod

from profsol.qforms import (
    DiagonalForm,
    hilbert_symbol,
    isometric_at_all_finite,
    local_invariants,
    locally_isometric,
)

# A small table of symbols at p = 2.
units = [-1, 2, 3, 5, 6, -2]
print("(a,b)_2".ljust(8), *[f"{b:>3}" for b in units])
for a in units:
    print(f"{a:<8}", *[f"{hilbert_symbol(a, b, 2):>3}" for b in units])

# The product formula over all places, for one pair.
a, b = 6, -35
places = ["inf", 2, 3, 5, 7]
symbols = {v: hilbert_symbol(a, b, v) for v in places}
print(f"\n({a},{b}) at each place:", symbols)
print("product:", prod(symbols.values()))

# Four signs flipped: same at every prime, different over R.
pos, neg = DiagonalForm.signed(4, 0), DiagonalForm.signed(0, 4)
for v in ["inf", 2, 3]:
    print(v, local_invariants(pos, v), local_invariants(neg, v))
print("finite places agree:", isometric_at_all_finite(pos, neg))
print("real place agrees:", locally_isometric(pos, neg, "inf"))

# The same swap inside the split form of B_5 gives Spin(2,9).
n = 5
split, twisted = DiagonalForm.signed(n + 1, n), DiagonalForm.signed(n - 3, n + 4)
print(f"\n{split} vs {twisted}:", isometric_at_all_finite(split, twisted))
