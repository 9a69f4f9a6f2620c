"""
Representation subrings
=======================

Sets of irreducibles closed under products and duals correspond to normal
subgroups, and each one is the representation ring of a quotient group.
"""

from fusionscope import adjoint_subring, catalog, enumerate_subrings, find_order_isomorphism, quotient_ring

d4 = catalog.get("D4").to_ring()
lattice = enumerate_subrings(d4)
print(f"D4 has {len(lattice)} representation subrings")
for i, sub in enumerate(lattice.subrings):
    print(f"  [{i}] {sub.labels()}")
print("Hasse edges:", lattice.covers())

# the adjoint subring (constituents of p x p*) matches the center; its
# quotient ring is the representation ring of D4 / Z(D4) = Z2 x Z2
adj = adjoint_subring(d4)
q = quotient_ring(adj)
print("adjoint subring:", adj.labels())
print("quotient ~ Z2xZ2:", find_order_isomorphism(q, catalog.get("Z2xZ2").to_ring()) is not None)

# subring counts track normal subgroup counts
for name in ("Z6", "S3", "Q8", "A4"):
    print(name, len(enumerate_subrings(catalog.get(name).to_ring())))
