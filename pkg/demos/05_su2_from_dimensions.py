"""
SU(2) fusion rules from dimension counting
==========================================

Knowing only that SU(2) has one irrep of each dimension, all self-dual, the
product D_1/2 x D_k is pinned down step by step.  Powers of chi_1/2 then give
every Clebsch-Gordan series.
"""

from fusionscope.su2_engine import (cg_product, chi_half_power, chi_in_half_powers, derive_half_tensor,
                                    spin_label)

trace = []
derive_half_tensor(6, trace=trace)
for step in trace:
    rhs = " + ".join(f"D_{spin_label(t)}" for t in step.result)
    print(f"D_1/2 x D_{spin_label(step.twice_k):3s} = {rhs}")


def show(ch):
    return " + ".join(f"{m} chi_{spin_label(t)}" for t, m in sorted(ch.items(), reverse=True))


# the sum must run to floor(n/2); one term shorter loses the lowest irrep
print("chi_1/2^4          =", show(chi_half_power(4)))
print("one term too short =", show(chi_half_power(4, short_limit=True)))

# chi_2 as a polynomial in chi_1/2
print("chi_2 =", " ".join(f"{c:+d} chi_1/2^{n}" for n, c in sorted(chi_in_half_powers(4).items(), reverse=True)))

# products recovered through that route agree with the closed form
print("D_3/2 x D_1 =", show(cg_product(3, 2)))
