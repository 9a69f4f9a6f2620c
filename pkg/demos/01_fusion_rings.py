"""
Fusion rings and generalized characters
=======================================

A fusion ring stores the multiplicities N[p, q, r] of irreducible ``r`` in the
product of irreducibles ``p`` and ``q``.  Here we load D4 from the catalog,
multiply characters and watch validation catch a broken table.
"""

from fusionscope import FusionRing, catalog, decompose, dual_char, leq, validate

d4 = catalog.get("D4").to_ring()
print(d4, d4.labels)

# the two-dimensional irrep squared is the sum of all four one-dimensional ones
g = d4.basis("2")
print("g * g =", g * g)
print("constituents:", decompose(g * g))

# generalized characters are integer combinations; the order compares coefficients
x = d4.basis("1a") + 2 * g - d4.basis("1c")
print("x =", x, "| character?", x.is_character())
print("1 < g*g:", leq(d4.one, g * g))
print("dual of x:", dual_char(x))

# every catalog ring satisfies the axioms
print("D4 report ok:", validate(d4).ok)

# drop N[g, g, 1] and the duality axiom fails, with a witness
entries = [e for e in d4.entries if e != (4, 4, 0, 1)]
broken = FusionRing.from_entries("D4-broken", d4.labels, d4.unit, d4.dual, entries)
for v in validate(broken).violations[:3]:
    print(f"  {v.axiom:13s} witness={v.witness} {v.detail}")
