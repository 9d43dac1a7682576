"""
Fusion rings as integer tensors
===============================

A based ring is stored as a cubic tensor of nonnegative structure
constants together with a duality permutation.  This script builds a few
small rings, validates the axioms, and walks the subring lattice.
"""
import numpy as np

from fuscond import (BasedRing, enumerate_subrings, fp_dims, group_ring,
                     product_ring, validate_ring)

# The cyclic group Z4 as a Cayley table with the identity at index 0.
z4 = [[(i + j) % 4 for j in range(4)] for i in range(4)]
ring = group_ring(z4, labels=("1", "g", "g2", "g3"))
print("Z4 group ring:", ring.labels)
print("validation problems:", validate_ring(ring).problems)
print("dims:", fp_dims(ring).values)

# The Fibonacci ring: one nontrivial object t with t*t = 1 + t.
F = np.zeros((2, 2, 2), dtype=np.int64)
F[0, 0, 0] = F[0, 1, 1] = F[1, 0, 1] = 1
F[1, 1, 0] = F[1, 1, 1] = 1
fib = BasedRing(labels=("1", "t"), fusion=F, dual=(0, 1))
print("\nFibonacci dims:", fp_dims(fib).values)  # golden ratio

# Subrings are unital, dual-closed, fusion-closed label subsets.
subs = enumerate_subrings(ring)
print("\nZ4 subrings:", subs)

# Products of rings multiply labels and tensor the structure constants.
prod = product_ring(fib, fib)
print("\nfib x fib rank:", prod.rank)
print("fib x fib dims:", np.round(fp_dims(prod).values, 6))
