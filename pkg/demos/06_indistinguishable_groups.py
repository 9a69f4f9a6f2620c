"""
Two groups, one fusion ring
===========================

D4 and Q8 have different multiplication tables but the same fusion rules,
so nothing computed from fusion data alone can tell them apart.  Frobenius-
Schur indicators, which are extra data, do differ.
"""

from fusionscope import catalog, find_order_isomorphism
from fusionscope.group_recovery import check_oddfusion_pseudoreal_center

d4, q8 = catalog.get("D4"), catalog.get("Q8")
iso = find_order_isomorphism(d4.to_ring(), q8.to_ring())
print("order isomorphism D4 -> Q8:", iso.mapping())

print("indicators D4:", d4.fs_indicators)
print("indicators Q8:", q8.fs_indicators)

# with a pseudo-real irrep and only odd multiplicities the center must be nontrivial
for doc in (d4, q8, catalog.get("SU2-trunc-jmax5")):
    res = check_oddfusion_pseudoreal_center(doc.to_ring(), doc.fs_indicators)
    print(f"{doc.name}: {res.status} ({res.message})")
