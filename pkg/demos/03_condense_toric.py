"""
Condensing the toric code
=========================

A condensation bundle packages an ambient theory, a multiplicity vector
for the algebra object, the fusion ring of the condensed phase, and the
induction matrix between them.  The projected condensed ring splits into
matrix blocks whose sizes reproduce the multiplicities, and each block
evaluates sectors through its character.
"""
from fuscond import check_bundle, codegree_check, indicator, schur_weyl
from fuscond.families import toric_code

b = toric_code()
print("ambient sectors:", b.ambient.labels)
print("algebra multiplicities:", b.mult)
print("condensed ring:", b.module_ring.labels)
print("bundle problems:", check_bundle(b).problems)

# Split the projected condensed ring into matrix blocks and match each
# block to the ambient sector whose character it carries.
swr = schur_weyl(b)
print("\nkernel dimension:", swr.kernel_dim)
for bi, x in swr.matched_pairs():
    m = swr.blocks[bi].m
    print(f"block of size {m} carries sector {b.ambient.labels[x]}")

# The indicator evaluates one sector's character on condensed elements.
# On the vacuum it counts the multiplicity; on local elements it scales
# by the algebra dimension.
for y, lab in enumerate(b.module_ring.labels):
    a = [0] * b.module_ring.rank
    a[y] = 1
    print(f"indicator(e, {lab}) = {complex(indicator(swr, 'e', a)).real:g}")

# Formal codegrees act as scalars on their own block and zero elsewhere.
cg = codegree_check(swr)
print("\ncodegrees:", [(name, round(v, 9)) for name, v in cg.entries])
print("codegree residual:", f"{cg.residual:.2e}")
