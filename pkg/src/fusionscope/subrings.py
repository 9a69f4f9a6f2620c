"""Representation subrings, quotient rings and order automorphisms.

A representation subring is spanned by a set ``J`` of irreducibles that
contains the unit and is closed under duals and under taking constituents of
products.  These subrings correspond one-to-one to the closed normal subgroups
``H`` of the group, and the subring for ``H`` is the representation ring of
``G/H``.  The smallest subring containing all constituents of ``p x p*``
corresponds to the center.

Isomorphism search works on basis bijections that preserve the unit, the dual
and every multiplicity.  Candidates are pruned with isomorphism invariants
(Frobenius-Perron dimension, self-duality, sorted multiplicity row) before
backtracking.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .char_solver import fp_dimensions
from .errors import ResourceLimitError, UsageError
from .fusion_core import FusionRing

__all__ = [
    "RepresentationSubring", "SubringLattice", "OrderIsomorphism", "DEFAULT_MAX_RANK",
    "close", "enumerate_subrings", "quotient_ring", "adjoint_subring", "order_automorphisms",
    "find_order_isomorphism", "characteristic_check",
]

DEFAULT_MAX_RANK = 16


@dataclass(frozen=True)
class RepresentationSubring:
    ring: FusionRing
    basis: tuple[int, ...]

    def __contains__(self, p: int) -> bool:
        return p in self.basis

    def __len__(self):
        return len(self.basis)

    def labels(self) -> list[str]:
        return [self.ring.labels[p] for p in self.basis]

    def is_closed(self) -> bool:
        """Check the subring conditions exhaustively."""
        J = set(self.basis)
        if self.ring.unit not in J or any(self.ring.dual[p] not in J for p in J):
            return False
        return all(r in J for p in J for q in J for r, _ in self.ring.product(p, q))


@dataclass(frozen=True)
class SubringLattice:
    """All representation subrings, smallest first, with ``inclusion`` pairs ``(i, j)`` for ``S_i <= S_j``."""

    subrings: tuple[RepresentationSubring, ...]
    inclusion: frozenset[tuple[int, int]]

    def __len__(self):
        return len(self.subrings)

    def index_of(self, basis: Iterable[int]) -> int:
        key = tuple(sorted(basis))
        for i, s in enumerate(self.subrings):
            if s.basis == key:
                return i
        raise KeyError(key)

    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram edges."""
        strict = {(i, j) for i, j in self.inclusion if i != j}
        return sorted((i, j) for i, j in strict
                      if not any((i, k) in strict and (k, j) in strict for k in range(len(self))))


@dataclass(frozen=True)
class OrderIsomorphism:
    source: FusionRing
    target: FusionRing
    perm: tuple[int, ...]

    def mapping(self) -> dict[str, str]:
        return {self.source.labels[p]: self.target.labels[q] for p, q in enumerate(self.perm)}


def close(ring: FusionRing, seed: Iterable[int]) -> RepresentationSubring:
    """Smallest representation subring containing ``seed``."""
    J = {ring.unit} | set(seed)
    work = list(J)
    while work:
        p = work.pop()
        new = {ring.dual[p]}
        for q in list(J):
            new.update(r for r, _ in ring.product(p, q))
        for r in new - J:
            J.add(r)
            work.append(r)
    return RepresentationSubring(ring, tuple(sorted(J)))


def _check_rank(ring: FusionRing, max_rank: int):
    if ring.rank > max_rank:
        raise ResourceLimitError(f"rank {ring.rank} exceeds the search bound {max_rank}")


def enumerate_subrings(ring: FusionRing, max_rank: int = DEFAULT_MAX_RANK) -> SubringLattice:
    """The lattice of representation subrings.

    Every subring is the join of the subrings generated by single irreps, so
    the lattice is built by closing the singleton closures under pairwise
    joins until nothing new appears.
    """
    _check_rank(ring, max_rank)
    seen: dict[frozenset, None] = {frozenset(close(ring, ()).basis): None}
    for p in range(ring.rank):
        seen[frozenset(close(ring, (p,)).basis)] = None
    frontier = list(seen)
    while frontier:
        new = []
        known = list(seen)
        for a in frontier:
            for b in known:
                j = frozenset(close(ring, a | b).basis)
                if j not in seen:
                    seen[j] = None
                    new.append(j)
        frontier = new
    bases = sorted((tuple(sorted(s)) for s in seen), key=lambda b: (len(b), b))
    subs = tuple(RepresentationSubring(ring, b) for b in bases)
    sets = [set(b) for b in bases]
    inclusion = frozenset((i, j) for i in range(len(sets)) for j in range(len(sets)) if sets[i] <= sets[j])
    return SubringLattice(subs, inclusion)


def quotient_ring(sub: RepresentationSubring) -> FusionRing:
    """The subring as a standalone ring (the representation ring of ``G/H``).

    Basis ``J`` is renumbered ``0 .. |J|-1`` in increasing order and keeps its
    labels.  Truncated rings are only supported for the full subring, since the
    renumbering does not preserve the truncation bound.
    """
    ring = sub.ring
    J = sub.basis
    if ring.is_truncated and len(J) != ring.rank:
        raise UsageError("quotients of truncated rings are not supported")
    new = {p: i for i, p in enumerate(J)}
    entries = [(new[p], new[q], new[r], m) for p, q, r, m in ring.entries if p in new and q in new]
    return FusionRing.from_entries(
        f"{ring.name}/[{','.join(ring.labels[p] for p in J)}]",
        [ring.labels[p] for p in J], new[ring.unit], [new[ring.dual[p]] for p in J], entries,
        complete_below=ring.complete_below, connected=ring.connected)


def adjoint_subring(ring: FusionRing) -> RepresentationSubring:
    """Subring generated by the constituents of every ``p x p*`` (corresponds to the center)."""
    seed = set()
    for p in range(ring.rank):
        if ring.is_complete(p, ring.dual[p]):
            seed.update(r for r, _ in ring.product(p, ring.dual[p]))
    return close(ring, seed)


def _fingerprints(ring: FusionRing) -> list[tuple]:
    dims = np.round(fp_dimensions(ring), 6) + 0.0
    out = []
    for p in range(ring.rank):
        row = sorted(m for q in range(ring.rank) for _, m in ring.product(p, q))
        out.append((float(dims[p]), ring.is_self_dual(p), p == ring.unit, tuple(row)))
    return out


def _search(a: FusionRing, b: FusionRing, first_only: bool, max_rank: int) -> list[tuple[int, ...]]:
    _check_rank(a, max_rank)
    _check_rank(b, max_rank)
    if a.rank != b.rank or len(a.entries) != len(b.entries) or a.complete_below != b.complete_below:
        return []
    n = a.rank
    fa, fb = _fingerprints(a), _fingerprints(b)
    if sorted(fa) != sorted(fb):
        return []
    options = [[q for q in range(n) if fb[q] == fa[p]] for p in range(n)]
    order = sorted(range(n), key=lambda p: (len(options[p]), p))
    # unit first: it is fixed
    order.remove(a.unit)
    order.insert(0, a.unit)
    perm = [-1] * n
    used = [False] * n
    results: list[tuple[int, ...]] = []

    def consistent(p: int) -> bool:
        x = perm[p]
        if perm[a.dual[p]] != -1 and perm[a.dual[p]] != b.dual[x]:
            return False
        inv = {perm[r]: r for r in range(n) if perm[r] != -1}
        for q in range(n):
            y = perm[q]
            if y == -1:
                continue
            got = dict(a.product(p, q))
            want = dict(b.product(x, y))
            for r, m in got.items():
                if perm[r] != -1 and want.get(perm[r], 0) != m:
                    return False
            for s, m in want.items():
                if s in inv and got.get(inv[s], 0) != m:
                    return False
        return True

    def full_check() -> bool:
        for p, q, r, m in a.entries:
            if b.N(perm[p], perm[q], perm[r]) != m:
                return False
        return all(perm[a.dual[p]] == b.dual[perm[p]] for p in range(n))

    def rec(k: int) -> bool:
        if k == n:
            if full_check():
                results.append(tuple(perm))
                return first_only
            return False
        p = order[k]
        for x in options[p]:
            if used[x] or (p == a.unit and x != b.unit):
                continue
            perm[p], used[x] = x, True
            if consistent(p) and rec(k + 1):
                return True
            perm[p], used[x] = -1, False
        return False

    rec(0)
    return sorted(results)


def order_automorphisms(ring: FusionRing, max_rank: int = DEFAULT_MAX_RANK) -> list[OrderIsomorphism]:
    """All basis permutations preserving unit, dual and multiplicities, sorted."""
    return [OrderIsomorphism(ring, ring, p) for p in _search(ring, ring, False, max_rank)]


def find_order_isomorphism(a: FusionRing, b: FusionRing,
                           max_rank: int = DEFAULT_MAX_RANK) -> OrderIsomorphism | None:
    found = _search(a, b, True, max_rank)
    return OrderIsomorphism(a, b, found[0]) if found else None


def characteristic_check(ring: FusionRing, sub: RepresentationSubring,
                         max_rank: int = DEFAULT_MAX_RANK) -> bool:
    """Whether every order automorphism maps the subring's basis onto itself.

    For connected groups this says the normal subgroup is characteristic; for
    other groups the ring-level answer carries no such meaning.
    """
    J = set(sub.basis)
    return all({auto.perm[p] for p in J} == J for auto in order_automorphisms(ring, max_rank))
