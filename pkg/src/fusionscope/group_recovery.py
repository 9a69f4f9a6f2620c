"""Abelian groups recoverable from fusion rules.

* :func:`invertible_characters` -- the one-dimensional characters, i.e. the dual
  of the abelianization ``G/[G, G]``.
* :func:`chain_group` / :func:`center_dual` -- irreducibles modulo "occur together
  in some product", which is isomorphic to the dual of the center ``Z(G)``.
* :func:`check_oddfusion_pseudoreal_center` -- instance-level check that odd
  fusion multiplicities plus a pseudo-real irrep force a nontrivial center.

Finite abelian groups are reported in canonical form through their invariant
factors, so isomorphism questions reduce to list equality.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod
from typing import Hashable, Mapping, Sequence

from sympy import factorint

from .errors import AxiomViolationError, ConsistencyError, InputError, NotAGroupError
from .fusion_core import FusionRing

__all__ = [
    "AbelianGroupStructure", "ChainGroupResult", "CheckResult",
    "identify_invariant_factors", "invertible_characters", "chain_group", "center_dual",
    "check_oddfusion_pseudoreal_center", "format_factors",
]

FS_KINDS = ("real", "complex", "pseudoreal")


def format_factors(factors: Sequence[int]) -> str:
    """``[2, 4] -> 'Z2 x Z4'``; the trivial group prints as ``'1'``."""
    return " x ".join(f"Z{d}" for d in factors) if factors else "1"


def _check_group_axioms(elements: Sequence[Hashable], table: Mapping, identity) -> None:
    elems = list(elements)
    members = set(elems)
    if identity not in members:
        raise NotAGroupError(f"identity {identity!r} is not an element")
    for a in elems:
        for b in elems:
            if (a, b) not in table:
                raise NotAGroupError(f"product {a!r}*{b!r} missing from the table")
            if table[a, b] not in members:
                raise NotAGroupError(f"product {a!r}*{b!r} = {table[a, b]!r} is not an element")
    for a in elems:
        if table[identity, a] != a or table[a, identity] != a:
            raise NotAGroupError(f"{identity!r} does not act as identity on {a!r}")
        if not any(table[a, b] == identity for b in elems):
            raise NotAGroupError(f"{a!r} has no inverse")
        for b in elems:
            if table[a, b] != table[b, a]:
                raise NotAGroupError(f"{a!r} and {b!r} do not commute")
    for a in elems:
        for b in elems:
            ab = table[a, b]
            for c in elems:
                if table[ab, c] != table[a, table[b, c]]:
                    raise NotAGroupError(f"associativity fails at ({a!r}, {b!r}, {c!r})")


def _element_order(a, table, identity) -> int:
    k, x = 1, a
    while x != identity:
        x = table[x, a]
        k += 1
    return k


def identify_invariant_factors(elements: Sequence[Hashable], table: Mapping, identity) -> list[int]:
    """Invariant factors ``d1 | d2 | ... | dk`` of a finite abelian group.

    The group is given by its element list and a multiplication table keyed by
    pairs.  Uses the element-order census: for each prime ``p``, the number of
    elements killed by ``p**k`` equals ``p**sum(min(k, e_i))`` over the exponents
    ``e_i`` of the cyclic ``p``-power factors, which pins those exponents down.

    Raises
    ------
    NotAGroupError
        If the table is not an abelian group.
    """
    _check_group_axioms(elements, table, identity)
    orders = [_element_order(a, table, identity) for a in elements]
    n = len(orders)
    primary: dict[int, list[int]] = {}
    for p, e_total in factorint(n).items():
        # killed[k] = log_p #{a : a^(p^k) = 1}
        killed = []
        for k in range(e_total + 1):
            count = sum(1 for o in orders if (p ** k) % o == 0)
            e = 0
            while p ** e < count:
                e += 1
            if p ** e != count:
                raise ConsistencyError(f"order census not a power of {p}: {count}")
            killed.append(e)
        # number of cyclic factors with exponent >= k is killed[k] - killed[k-1]
        at_least = [killed[k] - killed[k - 1] for k in range(1, e_total + 1)] + [0]
        exps = []
        for k in range(1, e_total + 1):
            exps += [k] * (at_least[k - 1] - at_least[k])
        primary[p] = sorted(exps, reverse=True)
    width = max((len(v) for v in primary.values()), default=0)
    factors = []
    for i in range(width):
        factors.append(prod(p ** v[i] for p, v in primary.items() if i < len(v)))
    return sorted(factors)


@dataclass(frozen=True)
class AbelianGroupStructure:
    """Finite abelian group given by a multiplication table.

    ``invariant_factors`` is filled in from the table when not supplied.
    """

    elements: tuple
    table: Mapping = field(repr=False)
    identity: Hashable
    invariant_factors: tuple[int, ...] = None

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "table", dict(self.table))
        factors = identify_invariant_factors(self.elements, self.table, self.identity)
        if self.invariant_factors is not None and list(self.invariant_factors) != factors:
            raise ConsistencyError(f"declared invariant factors {self.invariant_factors} != computed {factors}")
        object.__setattr__(self, "invariant_factors", tuple(factors))

    @property
    def order(self) -> int:
        return len(self.elements)

    def is_trivial(self) -> bool:
        return self.order == 1

    def mul(self, a, b):
        return self.table[a, b]

    def inverse(self, a):
        return next(b for b in self.elements if self.table[a, b] == self.identity)

    def __str__(self):
        return format_factors(self.invariant_factors)


@dataclass(frozen=True)
class ChainGroupResult:
    """Classes of the chain relation and the group they form.

    ``class_of[p]`` is the class id of basis element ``p``; class ids are
    numbered by their smallest member, so the unit's class is 0 whenever the
    unit has index 0.
    """

    class_of: tuple[int, ...]
    group: AbelianGroupStructure

    def classes(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for p, c in enumerate(self.class_of):
            out.setdefault(c, []).append(p)
        return [out[c] for c in sorted(out)]


def invertible_characters(ring: FusionRing) -> AbelianGroupStructure:
    """Group of invertible basis elements (the one-dimensional characters).

    ``p`` is invertible iff ``p x p*`` is the unit alone.  In a truncated ring an
    element whose product with its dual is clipped cannot be certified and is
    left out.
    """
    u = ring.unit
    elems = [p for p in range(ring.rank)
             if ring.is_complete(p, ring.dual[p]) and ring.product(p, ring.dual[p]) == ((u, 1),)]
    table = {}
    for p in elems:
        for q in elems:
            if not ring.is_complete(p, q):
                raise AxiomViolationError(f"product of invertibles {p} x {q} is truncated")
            prod_pq = ring.product(p, q)
            if len(prod_pq) != 1 or prod_pq[0][1] != 1:
                raise AxiomViolationError(
                    f"product of invertibles {p} x {q} = {dict(prod_pq)} is not a single basis element")
            table[p, q] = prod_pq[0][0]
    try:
        return AbelianGroupStructure(tuple(elems), table, u)
    except NotAGroupError as exc:
        raise AxiomViolationError(f"invertible characters do not form a group: {exc}") from exc


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if ra > rb:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True


def chain_group(ring: FusionRing) -> ChainGroupResult:
    """Chain group of the ring.

    Constituents of one product ``p x q`` are merged into one class, for every
    pair, until nothing changes; the resulting partition is the transitive
    closure of the chain relation on a finite basis.  The class product is
    then read off any constituent and checked to be independent of the
    representatives.  Truncated rings only use complete products.

    Raises
    ------
    ConsistencyError
        If the class product is not well defined or the classes do not form
        an abelian group.
    """
    n = ring.rank
    uf = _UnionFind(n)
    changed = True
    while changed:
        changed = False
        for p in range(n):
            for q in range(p, n):
                if not ring.is_complete(p, q):
                    continue
                constituents = ring.product(p, q)
                for r, _ in constituents[1:]:
                    changed |= uf.union(constituents[0][0], r)

    roots = sorted({uf.find(p) for p in range(n)})
    cid = {root: i for i, root in enumerate(roots)}
    class_of = tuple(cid[uf.find(p)] for p in range(n))

    table: dict[tuple[int, int], int] = {}
    for p in range(n):
        for q in range(n):
            if not ring.is_complete(p, q):
                continue
            a, b = class_of[p], class_of[q]
            for r, _ in ring.product(p, q):
                c = class_of[r]
                if table.setdefault((a, b), c) != c:
                    raise ConsistencyError(
                        f"class product ill defined: {p} x {q} has constituent {r} in class {c}, "
                        f"but class {a} * class {b} was already {table[a, b]}")
    k = len(roots)
    missing = [(a, b) for a in range(k) for b in range(k) if (a, b) not in table]
    if missing:
        raise ConsistencyError(f"no complete product represents class pair {missing[0]}")
    try:
        group = AbelianGroupStructure(tuple(range(k)), table, class_of[ring.unit])
    except NotAGroupError as exc:
        raise ConsistencyError(f"chain classes do not form an abelian group: {exc}") from exc
    return ChainGroupResult(class_of, group)


def center_dual(ring: FusionRing) -> AbelianGroupStructure:
    """The dual of the center, realized as the chain group."""
    return chain_group(ring).group


@dataclass(frozen=True)
class CheckResult:
    """Outcome of :func:`check_oddfusion_pseudoreal_center`.

    ``status`` is ``"pass"``, ``"fail"`` or ``"not-applicable"``.
    """

    status: str
    hypothesis_holds: bool
    odd_fusion: bool
    pseudoreal: tuple[int, ...]
    even_witness: tuple[int, int, int, int] | None
    chain_group: tuple[int, ...] | None
    message: str


def _normalize_fs(ring: FusionRing, fs_indicators: Mapping) -> dict[int, str]:
    out = {}
    for key, kind in fs_indicators.items():
        p = ring.index(key) if isinstance(key, str) else int(key)
        if not 0 <= p < ring.rank:
            raise InputError(f"indicator given for unknown irrep {key!r}")
        kind = str(kind).lower().replace("-", "").replace("_", "")
        if kind not in FS_KINDS:
            raise InputError(f"indicator for {key!r} must be one of {FS_KINDS}, got {kind!r}")
        if (kind == "complex") == ring.is_self_dual(p):
            raise InputError(
                f"irrep {ring.labels[p]!r} is {'self-dual' if ring.is_self_dual(p) else 'not self-dual'} "
                f"but marked {kind}")
        out[p] = kind
    return out


def check_oddfusion_pseudoreal_center(ring: FusionRing, fs_indicators: Mapping) -> CheckResult:
    """Verify, on one ring, that odd fusion + a pseudo-real irrep gives a nontrivial center.

    The hypothesis is taken literally: every nonzero multiplicity is odd and at
    least one irrep is marked pseudo-real.  Frobenius-Schur data is an external
    input (it is not determined by fusion rules), keyed by label or index; it
    must agree with duality (complex exactly for the non-self-dual irreps).

    Raises
    ------
    InputError
        If an indicator contradicts duality or names an unknown irrep.
    """
    fs = _normalize_fs(ring, fs_indicators)
    even = next(((p, q, r, m) for p, q, r, m in ring.entries if m % 2 == 0), None)
    pseudo = tuple(sorted(p for p, k in fs.items() if k == "pseudoreal"))
    odd = even is None
    if not (odd and pseudo):
        why = f"even multiplicity N[{even[0]},{even[1]},{even[2]}] = {even[3]}" if not odd \
            else "no pseudo-real irrep"
        return CheckResult("not-applicable", False, odd, pseudo, even, None, f"hypothesis fails: {why}")
    group = center_dual(ring)
    if group.is_trivial():
        return CheckResult("fail", True, True, pseudo, None, group.invariant_factors,
                           "hypothesis holds but the chain group is trivial")
    return CheckResult("pass", True, True, pseudo, None, group.invariant_factors,
                       f"hypothesis holds and the chain group is {group}")
