"""
Character tables from fusion rules
==================================

Solutions of a_p a_q = sum_r N[p, q, r] a_r with a_1 = 1 are the columns of
the character table.  Positive integer solutions give the dimensions.
"""

import numpy as np

from fusionscope import catalog, fp_dimensions, integer_positive_solutions, solve_character_system

np.set_printoptions(precision=3, suppress=True)

for name in ("S3", "D4", "A4"):
    ring = catalog.get(name).to_ring()
    sols = solve_character_system(ring)
    # + 0j clears negative zeros from rounding
    table = np.round(np.array([s.values for s in sols]).T, 6) + 0j
    print(f"{name}: irreps {ring.labels}, worst residual {max(s.residual for s in sols):.1e}")
    print(table.real if np.allclose(table.imag, 0) else table)

# A4 columns above carry cube roots of unity; its dimensions are 1, 1, 1, 3
ring = catalog.get("A4").to_ring()
print("A4 dims from integer search:", integer_positive_solutions(ring, bound=10))
print("A4 FP dimensions:", fp_dimensions(ring))
