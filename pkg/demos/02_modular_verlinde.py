"""
Modular data and the Verlinde formula
=====================================

A modular datum is an S matrix plus a vector of twists.  The Verlinde
formula turns the S matrix back into integer fusion rules; the rows of
S/S[0] are the characters of that fusion ring.
"""
import numpy as np

from fuscond import as_mpc, modular_dims, validate_modular, verlinde
from fuscond.families import ising_modular, toric_modular
from fuscond.modular import central_idempotent, characters

toric = toric_modular()
print("toric labels:", toric.labels)
print("validation problems:", validate_modular(toric).problems)
print("dims:", modular_dims(toric).values)

# The Verlinde formula recovers the Z2 x Z2 fusion table.
ring = verlinde(toric)
print("e * m =", ring.fusion[1, 2])  # the f column

ising = ising_modular()
ring = verlinde(ising)
print("\nising labels:", ising.labels)
print("s * s =", ring.fusion[2, 2])  # 1 + p

# Characters evaluate exactly when the S entries are exact.
chi = characters(ising)
print("chi_s on (1, p, s):",
      [complex(as_mpc(v)).real for v in chi[2]])

# The idempotents attached to the characters resolve the identity.
idems = np.array([[complex(as_mpc(v)) for v in central_idempotent(ising, x)]
                  for x in range(ising.rank)])
print("sum of idempotents:", np.round(idems.sum(axis=0).real, 12))
