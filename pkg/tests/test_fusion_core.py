from __future__ import annotations

import itertools
import warnings

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fusionscope import catalog
from fusionscope.errors import MalformedRingError, NotACharacterError, UsageError
from fusionscope.fusion_core import (FusionRing, TruncationWarning, decompose, dual_char, leq, multiply,
                                     validate)

CATALOG = catalog.catalog_names()
FINITE = list(catalog.FINITE_GROUPS)


def dense_axioms_hold(ring: FusionRing) -> bool:
    """Brute-force check of the five axioms on the dense tensor (complete rings only)."""
    N = ring.dense()
    n, u = ring.rank, ring.unit
    d = np.array(ring.dual)
    if not (np.all(d[d] == np.arange(n)) and d[u] == u):
        return False
    if not np.array_equal(N[u], np.eye(n, dtype=N.dtype)):
        return False
    if not np.array_equal(N, N.transpose(1, 0, 2)):
        return False
    if not np.array_equal(N[:, :, u], np.eye(n, dtype=N.dtype)[:, d]):
        return False
    left = np.einsum("pqs,srt->pqrt", N, N)
    right = np.einsum("pst,qrs->pqrt", N, N)
    return np.array_equal(left, right)


def test_catalog_rings_validate(rings):
    for name, ring in rings.items():
        rep = validate(ring)
        assert rep.ok, (name, rep.violations)
        if not ring.is_truncated:
            assert dense_axioms_hold(ring), name


def test_trivial_ring_valid():
    ring = FusionRing.from_entries("one", ["1"], 0, [0], [(0, 0, 0, 1)])
    assert validate(ring).ok


def test_d4_product_g_g(rings):
    d4 = rings["D4"]
    g = d4.basis("2")
    assert decompose(g * g) == [(0, 1), (1, 1), (2, 1), (3, 1)]


def test_su2_half_squared(rings):
    r = rings["SU2-trunc-jmax2"]
    h = r.basis("1/2")
    assert decompose(multiply(h, h)) == [(0, 1), (2, 1)]
    assert leq(r.one, h * h)
    assert not leq(r.basis("1"), h)


def test_su2_half_cubed(rings):
    r = rings["SU2-trunc-jmax5"]
    h = r.basis("1/2")
    assert decompose(h ** 3) == [(1, 2), (3, 1)]


def test_dual_char_z3(rings):
    z3 = rings["Z3"]
    assert dual_char(z3.basis(1)).coeffs == z3.basis(2).coeffs
    assert dual_char(z3.basis(0)).coeffs == z3.basis(0).coeffs


def test_decompose_rejects_negative(rings):
    z2 = rings["Z2"]
    with pytest.raises(NotACharacterError):
        decompose(z2.basis(0) - z2.basis(1))


def test_mismatched_rings(rings):
    with pytest.raises(UsageError):
        multiply(rings["Z2"].one, rings["Z3"].one)
    with pytest.raises(UsageError):
        leq(rings["Z2"].one, rings["Z3"].one)


def test_malformed_inputs():
    with pytest.raises(MalformedRingError):
        FusionRing.from_entries("bad", ["1", "s"], 0, [0, 1], [(0, 0, 0, 1), (0, 1, 2, 1)])
    with pytest.raises(MalformedRingError):
        FusionRing.from_entries("bad", ["1", "s"], 0, [0, 1], [(0, 0, 0, -1)])
    with pytest.raises(MalformedRingError):
        FusionRing.from_entries("bad", ["1", "1"], 0, [0, 1], [(0, 0, 0, 1)])


def test_noncommutative_data_rejected():
    with pytest.raises(MalformedRingError):
        FusionRing.from_entries("nc", ["1", "a", "b"], 0, [0, 1, 2], [(1, 2, 0, 1), (2, 1, 0, 2)])
    dense = np.zeros((2, 2, 2), dtype=int)
    dense[0, 1, 1] = 1
    with pytest.raises(MalformedRingError):
        FusionRing.from_dense("nc", ["1", "s"], 0, [0, 1], dense)


def test_involution_violation_reported():
    # dual is a 3-cycle on the non-unit elements
    ring = FusionRing.from_entries("cyc", ["1", "a", "b", "c"], 0, [0, 2, 3, 1],
                                   [(0, k, k, 1) for k in range(4)])
    rep = validate(ring)
    assert "involution" in rep.axioms_violated()
    assert {v.witness for v in rep.violations if v.axiom == "involution"} == {(1,), (2,), (3,)}


def test_unit_and_duality_violations_reported():
    ring = FusionRing.from_entries("z2bad", ["1", "s"], 0, [0, 1], [(0, 0, 0, 1), (0, 1, 1, 2), (1, 1, 1, 1)])
    rep = validate(ring)
    assert {"unit", "duality"} <= set(rep.axioms_violated())
    assert all(v.witness for v in rep.violations)


def test_associativity_witness_is_real():
    # x*x = 1 + 2y with y*y = 1 is not associative
    ring = FusionRing.from_entries("bad", ["1", "x", "y"], 0, [0, 1, 2],
                                   [(0, 0, 0, 1), (0, 1, 1, 1), (0, 2, 2, 1), (1, 1, 0, 1), (1, 1, 2, 2),
                                    (1, 2, 1, 1), (2, 2, 0, 1)])
    rep = validate(ring)
    assoc = [v for v in rep.violations if v.axiom == "associativity"]
    assert assoc
    p, q, r, t = assoc[0].witness
    N = ring.dense()
    lhs = sum(N[p, q, s] * N[s, r, t] for s in range(3))
    rhs = sum(N[p, s, t] * N[q, r, s] for s in range(3))
    assert lhs != rhs


def test_multiply_warns_when_clipped(rings):
    r = rings["SU2-trunc-jmax1"]
    with pytest.warns(TruncationWarning):
        multiply(r.basis("1"), r.basis("1"))
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        multiply(r.basis("1/2"), r.basis("1/2"))


def test_truncated_validation_only_uses_complete_products(rings):
    r = rings["SU2-trunc-jmax2"]
    assert r.is_truncated
    assert r.is_complete(1, 3) and not r.is_complete(2, 3)
    assert validate(r).ok


def test_str_of_character(rings):
    z3 = rings["Z3"]
    assert "[" in str(z3.basis(1) * 2 - z3.basis(2))
    assert str(z3.zero) == "0"


# -- property tests ---------------------------------------------------------------

def _chars(ring, lo=-3, hi=3):
    return st.lists(st.integers(lo, hi), min_size=ring.rank, max_size=ring.rank).map(ring.character)


@pytest.mark.parametrize("name", FINITE)
@settings(max_examples=100, deadline=None)
@given(data=st.data())
def test_multiply_commutative_associative(name, data):
    ring = catalog.get(name).to_ring()
    a, b, c = (data.draw(_chars(ring)) for _ in range(3))
    assert (a * b).coeffs == (b * a).coeffs
    assert ((a * b) * c).coeffs == (a * (b * c)).coeffs
    assert (ring.one * a).coeffs == a.coeffs


@pytest.mark.parametrize("name", FINITE)
@settings(max_examples=50, deadline=None)
@given(data=st.data())
def test_positive_cone_and_dual_homomorphism(name, data):
    ring = catalog.get(name).to_ring()
    a, b = (data.draw(_chars(ring, 0, 3)) for _ in range(2))
    assert (a * b).is_character()
    assert dual_char(a * b).coeffs == (dual_char(a) * dual_char(b)).coeffs
    x = a * dual_char(a)
    assert dual_char(x).coeffs == x.coeffs
    assert dual_char(dual_char(a)).coeffs == a.coeffs


@pytest.mark.parametrize("name", ["D4", "A4"])
@settings(max_examples=50, deadline=None)
@given(data=st.data())
def test_leq_partial_order(name, data):
    ring = catalog.get(name).to_ring()
    a, b, c = (data.draw(_chars(ring)) for _ in range(3))
    assert leq(a, a)
    if leq(a, b) and leq(b, a):
        assert a.coeffs == b.coeffs
    if leq(a, b) and leq(b, c):
        assert leq(a, c)
    if leq(a, b):
        assert leq(a + c, b + c)


def test_mutations_match_dense_oracle(rings):
    """Every single-entry edit of a finite-group ring: validate agrees with the dense oracle."""
    for name in FINITE:
        ring = rings[name]
        n = ring.rank
        for p, q, r in itertools.product(range(n), repeat=3):
            if p > q:
                continue
            for delta in (1, -1):
                m = ring.N(p, q, r) + delta
                if m < 0:
                    continue
                ents = [e for e in ring.entries if e[:3] != (p, q, r)] + ([(p, q, r, m)] if m else [])
                mut = FusionRing.from_entries(name, ring.labels, ring.unit, ring.dual, ents)
                rep = validate(mut)
                assert rep.ok == dense_axioms_hold(mut), (name, p, q, r, delta)
                assert all(v.witness for v in rep.violations)
