"""
Center and abelianization from fusion rules
===========================================

The one-dimensional characters form a group under multiplication, dual to
G/[G, G].  Declaring two irreducibles equivalent whenever they occur in a
common product gives another abelian group, dual to the center Z(G).
"""

from fusionscope import catalog, chain_group, invertible_characters
from fusionscope.su2_engine import export_truncated_ring

print(f"{'group':8s} {'1-dim chars':14s} chain group")
for name in catalog.FINITE_GROUPS:
    ring = catalog.get(name).to_ring()
    print(f"{name:8s} {str(invertible_characters(ring)):14s} {chain_group(ring).group}")

# S3 and A4 have trivial center: every irrep lands in one class
a4 = catalog.get("A4").to_ring()
print("A4 classes:", [[a4.labels[p] for p in c] for c in chain_group(a4).classes()])

# SU(2), through a truncation: integer and half-integer spins separate
su2 = export_truncated_ring(10)
res = chain_group(su2)
print("SU(2):", res.group)
for cls in res.classes():
    print("  ", [su2.labels[p] for p in cls])
