"""
The subring correspondence on a lattice family
==============================================

For each subring of the condensed ring containing the local part there is
an invariant subalgebra of the condensation algebra, read off from the
block multiplicities of the subring integral.  The assignment reverses
inclusion, and the dimension formula ties the three sizes together.
"""
from fuscond import group_quotient, markdown_table, schur_weyl, \
    verify_correspondence
from fuscond.families import a2nplus1, build
from fuscond.ring import enumerate_subrings

# The n=1 member of the first lattice family: ambient rank 25, condensed
# ring of rank 8 (a dihedral group with two extra size-sqrt(3) sectors).
b = build("a2n", n=1)
swr = schur_weyl(b)
rep = verify_correspondence(b, swr=swr)
print(markdown_table(rep))
print("injective:", rep.injective)
print("max residual:", f"{rep.max_residual:.2e}")

# Quotienting the condensed ring by the local part recovers the orbifold
# group on the pointed cosets, here the dihedral group on three points.
q = group_quotient(swr)
print("\ncosets:", len(q.cosets), "pointed:", len(q.pointed))
t = q.pointed_table
print("noncommutative:", t[1][3] != t[3][1])

# The second lattice family keeps ten subrings that are not groups.
b2 = a2nplus1(1)
subs = enumerate_subrings(b2.module_ring, must_contain=b2.local)
big = [s for s in subs
       if len(s) < b2.module_ring.rank and any(i >= 8 for i in s)]
print("\nnon-group subrings in the n=1 member:", len(big))
