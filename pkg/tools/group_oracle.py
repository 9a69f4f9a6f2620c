"""Brute-force facts about small finite groups, straight from multiplication tables.

This module deliberately does not import fusionscope: it is the independent
source that the library's answers are compared against.  Everything here is
computed by enumerating group elements:

* conjugacy classes, center, commutator subgroup, normal subgroups
  (unions of classes closed under multiplication);
* character tables through Burnside's class-multiplication coefficients;
* fusion rules, duals and Frobenius-Schur indicators from the characters;
* abelian group structure by matching element-order censuses against all
  candidate invariant-factor lists.
"""

from __future__ import annotations

import itertools
from collections import Counter

import numpy as np


class FiniteGroup:
    """A finite group closed up from generators under a multiplication function."""

    def __init__(self, name, generators, mul, identity):
        self.name = name
        elems = [identity]
        index = {identity: 0}
        frontier = [identity]
        while frontier:
            nxt = []
            for a in frontier:
                for g in generators:
                    b = mul(a, g)
                    if b not in index:
                        index[b] = len(elems)
                        elems.append(b)
                        nxt.append(b)
            frontier = nxt
        self.elements = elems
        n = len(elems)
        self.order = n
        self.table = [[index[mul(a, b)] for b in elems] for a in elems]
        self.e = 0
        self.inv = [next(j for j in range(n) if self.table[i][j] == 0) for i in range(n)]

    def mul(self, a, b):
        return self.table[a][b]

    def element_order(self, a):
        k, x = 1, a
        while x != self.e:
            x = self.mul(x, a)
            k += 1
        return k

    def conjugacy_classes(self):
        seen, classes = set(), []
        for a in range(self.order):
            if a in seen:
                continue
            cls = sorted({self.mul(self.mul(g, a), self.inv[g]) for g in range(self.order)})
            seen.update(cls)
            classes.append(cls)
        classes.sort(key=lambda c: (self.element_order(c[0]), c[0]))
        return classes

    def center(self):
        return [a for a in range(self.order)
                if all(self.mul(a, g) == self.mul(g, a) for g in range(self.order))]

    def closure(self, gens):
        sub = {self.e} | set(gens)
        while True:
            new = {self.mul(a, b) for a in sub for b in sub} | sub
            if new == sub:
                return sorted(sub)
            sub = new

    def commutator_subgroup(self):
        comms = {self.mul(self.mul(self.inv[a], self.inv[b]), self.mul(a, b))
                 for a in range(self.order) for b in range(self.order)}
        return self.closure(comms)

    def normal_subgroups(self):
        classes = self.conjugacy_classes()
        rest = classes[1:]
        out = []
        for mask in itertools.product((0, 1), repeat=len(rest)):
            s = set(classes[0])
            for take, cls in zip(mask, rest):
                if take:
                    s |= set(cls)
            if all(self.mul(a, b) in s for a in s for b in s):
                out.append(sorted(s))
        return out

    def count_order(self, k):
        return sum(1 for a in range(self.order) if self.element_order(a) == k)


# -- abelian structure by census matching ------------------------------------

def _chains(n, smallest=2):
    """All lists d1 | d2 | ... | dk (di >= 2) with product n."""
    if n == 1:
        yield []
        return
    for d in range(smallest, n + 1):
        if n % d:
            continue
        for rest in _chains(n // d, d):
            if all(r % d == 0 for r in rest):
                yield [d] + rest


def _census_of_product(factors):
    census = Counter()
    for t in itertools.product(*[range(d) for d in factors]):
        order = 1
        for x, d in zip(t, factors):
            k = d // np.gcd(x, d)
            order = order * k // np.gcd(order, k)
        census[int(order)] += 1
    return census


def abelian_invariant_factors(orders):
    """Invariant factors of the abelian group whose element orders are ``orders``."""
    census = Counter(orders)
    n = len(orders)
    hits = [c for c in _chains(n) if _census_of_product(c) == census]
    if len(hits) != 1:
        raise RuntimeError(f"census {dict(census)} matched {hits}")
    return hits[0]


def center_factors(G):
    return abelian_invariant_factors([G.element_order(a) for a in G.center()])


def abelianization_factors(G):
    K = set(G.commutator_subgroup())
    orders = []
    cosets = set()
    for g in range(G.order):
        coset = frozenset(G.mul(g, k) for k in K)
        if coset in cosets:
            continue
        cosets.add(coset)
        k, x = 1, g
        while x not in K:
            x = G.mul(x, g)
            k += 1
        orders.append(k)
    return abelian_invariant_factors(orders)


# -- characters ----------------------------------------------------------------

def character_table(G, seed=12345):
    """Rows = irreps, columns = conjugacy classes (``G.conjugacy_classes()`` order)."""
    classes = G.conjugacy_classes()
    k = len(classes)
    class_of = {}
    for i, cls in enumerate(classes):
        for a in cls:
            class_of[a] = i
    sizes = np.array([len(c) for c in classes], dtype=float)
    # a[i, j, l] = #{(x, y) in C_i x C_j : x y = rep(C_l)}
    a = np.zeros((k, k, k))
    for i, ci in enumerate(classes):
        for j, cj in enumerate(classes):
            counts = Counter(class_of[G.mul(x, y)] for x in ci for y in cj)
            for l, c in counts.items():
                a[i, j, l] = c / sizes[l]
    rng = np.random.default_rng(seed)
    M = np.einsum("i,ijl->jl", rng.normal(size=k), a)
    _, vecs = np.linalg.eig(M)
    rows = []
    for v in vecs.T:
        omega = v / v[0]
        deg2 = G.order / np.sum(np.abs(omega) ** 2 / sizes)
        deg = np.sqrt(deg2.real)
        rows.append(omega * deg / sizes)
    table = np.array(rows)
    # sanity: row orthogonality
    gram = (table * sizes) @ table.conj().T / G.order
    assert np.allclose(gram, np.eye(k), atol=1e-8), gram
    return table, classes


def _sort_key(row):
    return (round(row[0].real),) + tuple((-round(x.real, 6) + 0.0, -round(x.imag, 6) + 0.0) for x in row)


def ordered_character_table(G):
    table, classes = character_table(G)
    rows = sorted(table, key=_sort_key)
    trivial = [i for i, r in enumerate(rows) if np.allclose(r, 1)]
    assert trivial == [0]
    return np.array(rows), classes


def labels_for(dims):
    """``[1, 1, 1, 2] -> ['1', '1a', '1b', '2']``: dimension plus a letter when ambiguous."""
    total = Counter(dims[1:])
    seen = Counter()
    labels = ["1"]
    for d in dims[1:]:
        letter = "abcdefghijklmnopqrstuvwxyz"[seen[d]] if (d == 1 or total[d] > 1) else ""
        seen[d] += 1
        labels.append(f"{d}{letter}")
    return labels


def fusion_data(G):
    """Everything a ring document needs, plus oracle facts."""
    table, classes = ordered_character_table(G)
    sizes = np.array([len(c) for c in classes], dtype=float)
    k = len(classes)
    dims = [int(round(r[0].real)) for r in table]
    entries = []
    for p in range(k):
        for q in range(p, k):
            for r in range(k):
                x = np.sum(sizes * table[p] * table[q] * table[r].conj()) / G.order
                m = int(round(x.real))
                assert abs(x - m) < 1e-8
                if m:
                    entries.append([p, q, r, m])
    dual = []
    for p in range(k):
        hits = [r for r in range(k) if np.allclose(table[r], table[p].conj(), atol=1e-8)]
        assert len(hits) == 1
        dual.append(hits[0])
    class_index = {a: i for i, c in enumerate(classes) for a in c}
    fs = []
    for p in range(k):
        nu = sum(table[p][class_index[G.mul(g, g)]] for g in range(G.order)) / G.order
        nu = int(round(nu.real))
        fs.append({1: "real", 0: "complex", -1: "pseudoreal"}[nu])
    labels = labels_for(dims)
    return {
        "labels": labels,
        "dual": dual,
        "fusion": entries,
        "dims": dims,
        "fs_indicators": dict(zip(labels, fs)),
        "character_table": [[[float(x.real), float(x.imag)] for x in row] for row in table],
        "class_sizes": [len(c) for c in classes],
    }


# -- the catalog groups -----------------------------------------------------------

def _perm_mul(a, b):
    return tuple(a[i] for i in b)


def _quat_mul(x, y):
    a1, b1, c1, d1 = x
    a2, b2, c2, d2 = y
    return (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)


def cyclic(n):
    return FiniteGroup(f"Z{n}", [1 % n], lambda a, b: (a + b) % n, 0)


def klein_four():
    return FiniteGroup("Z2xZ2", [(1, 0), (0, 1)], lambda a, b: ((a[0] + b[0]) % 2, (a[1] + b[1]) % 2), (0, 0))


def symmetric3():
    return FiniteGroup("S3", [(1, 0, 2), (1, 2, 0)], _perm_mul, (0, 1, 2))


def dihedral4():
    return FiniteGroup("D4", [(1, 2, 3, 0), (0, 3, 2, 1)], _perm_mul, (0, 1, 2, 3))


def quaternion8():
    return FiniteGroup("Q8", [(0, 1, 0, 0), (0, 0, 1, 0)], _quat_mul, (1, 0, 0, 0))


def alternating4():
    return FiniteGroup("A4", [(1, 2, 0, 3), (1, 0, 3, 2)], _perm_mul, (0, 1, 2, 3))


def trivial():
    return FiniteGroup("trivial", [], lambda a, b: 0, 0)


def catalog_groups():
    return [trivial(), cyclic(2), cyclic(3), cyclic(4), cyclic(5), cyclic(6),
            klein_four(), symmetric3(), dihedral4(), quaternion8(), alternating4()]


def group_facts(G):
    data = fusion_data(G)
    return {
        "order": G.order,
        "order_two_elements": G.count_order(2),
        "square_roots_of_identity": G.count_order(1) + G.count_order(2),
        "center_factors": center_factors(G),
        "abelianization_factors": abelianization_factors(G),
        "normal_subgroups": len(G.normal_subgroups()),
        "is_abelian": len(G.center()) == G.order,
        "dims": data["dims"],
        "character_table": data["character_table"],
        "class_sizes": data["class_sizes"],
        "fs_indicators": data["fs_indicators"],
    }
