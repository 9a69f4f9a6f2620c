"""Fusion rings of compact groups and their generalized characters.

A fusion ring is stored by its multiplicities ``N[p, q, r]`` (how often the
irreducible ``r`` occurs in ``p x q``).  The tensor is kept sparse, as sorted
``(p, q, r, m)`` entries with ``p <= q``; the other half follows from
commutativity.  All arithmetic in this module is exact integer arithmetic.

Infinite rings (SU(2)) only enter as finite truncations.  A truncated ring
carries ``complete_below = B``: the product of basis elements ``p`` and ``q``
is known completely iff ``p + q <= B``; otherwise constituents beyond the
truncation were dropped.  Axiom checks only look at complete data.

Example
-------
>>> z2 = FusionRing.from_entries("Z2", ["1", "s"], 0, [0, 1],
...                              [(0, 0, 0, 1), (0, 1, 1, 1), (1, 1, 0, 1)])
>>> s = z2.basis(1)
>>> decompose(s * s)
[(0, 1)]
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import MalformedRingError, NotACharacterError, UsageError

__all__ = [
    "FusionRing", "GeneralizedCharacter", "Violation", "ValidationReport", "TruncationWarning",
    "validate", "multiply", "leq", "decompose", "dual_char",
]

AXIOMS = ("involution", "unit", "commutativity", "associativity", "duality")


class TruncationWarning(UserWarning):
    """A product in a truncated ring lost constituents beyond the truncation."""


@dataclass(frozen=True)
class FusionRing:
    """Finite-rank commutative fusion data.

    Attributes
    ----------
    name : str
    labels : tuple of str
        One distinct label per irreducible character.
    unit : int
        Basis index of the trivial character.
    dual : tuple of int
        The involution ``p -> p*`` as a permutation of basis indices.
    entries : tuple of (p, q, r, m)
        Nonzero multiplicities with ``p <= q``, sorted, without repetitions.
    complete_below : int or None
        Truncation bound, see the module docstring. ``None`` for complete rings.
    connected : bool or None
        User-asserted connectedness of the underlying group. Not derivable
        from fusion data; only used to phrase characteristic-subgroup claims.
    """

    name: str
    labels: tuple[str, ...]
    unit: int
    dual: tuple[int, ...]
    entries: tuple[tuple[int, int, int, int], ...]
    complete_below: int | None = None
    connected: bool | None = None

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "dual", tuple(int(d) for d in self.dual))
        object.__setattr__(self, "entries", tuple(tuple(int(x) for x in e) for e in self.entries))
        n = len(self.labels)
        if n < 1:
            raise MalformedRingError("a fusion ring needs at least one basis element")
        if len(set(self.labels)) != n:
            raise MalformedRingError(f"labels are not distinct: {list(self.labels)}")
        if not 0 <= self.unit < n:
            raise MalformedRingError(f"unit index {self.unit} out of range [0, {n})")
        if len(self.dual) != n or sorted(self.dual) != list(range(n)):
            raise MalformedRingError(f"dual {list(self.dual)} is not a permutation of range({n})")
        if self.complete_below is not None and self.complete_below < 0:
            raise MalformedRingError("complete_below must be nonnegative")
        previous = None
        for entry in self.entries:
            if len(entry) != 4:
                raise MalformedRingError(f"fusion entry {entry} is not a (p, q, r, m) quadruple")
            p, q, r, m = entry
            for x in (p, q, r):
                if not 0 <= x < n:
                    raise MalformedRingError(f"index {x} in fusion entry {entry} out of range [0, {n})")
            if m < 0:
                raise MalformedRingError(f"negative multiplicity in fusion entry {entry}")
            if m == 0:
                raise MalformedRingError(f"zero multiplicity stored explicitly in {entry}")
            if p > q:
                raise MalformedRingError(f"fusion entry {entry} not normalized to p <= q")
            if previous is not None and entry[:3] <= previous[:3]:
                raise MalformedRingError(f"fusion entries unsorted or repeated at {entry}")
            previous = entry

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_entries(cls, name: str, labels: Sequence[str], unit: int, dual: Sequence[int],
                     entries: Iterable[Sequence[int]], *, complete_below: int | None = None,
                     connected: bool | None = None) -> FusionRing:
        """Build a ring from ``(p, q, r, m)`` quadruples in any order.

        ``(q, p, r, m)`` and ``(p, q, r, m)`` describe the same multiplicity; giving
        both with equal ``m`` is accepted, giving them with different ``m`` means the
        data is not commutative and is rejected. Zero multiplicities are dropped.
        """
        n = len(labels)
        table: dict[tuple[int, int, int], int] = {}
        for entry in entries:
            if len(entry) != 4:
                raise MalformedRingError(f"fusion entry {tuple(entry)} is not a (p, q, r, m) quadruple")
            p, q, r, m = (int(x) for x in entry)
            for x in (p, q, r):
                if not 0 <= x < n:
                    raise MalformedRingError(f"index {x} in fusion entry {tuple(entry)} out of range [0, {n})")
            if m < 0:
                raise MalformedRingError(f"negative multiplicity in fusion entry {tuple(entry)}")
            key = (min(p, q), max(p, q), r)
            if key in table and table[key] != m:
                raise MalformedRingError(
                    f"noncommutative or conflicting data: N[{p},{q},{r}] given as {table[key]} and {m}")
            table[key] = m
        normalized = tuple(sorted((p, q, r, m) for (p, q, r), m in table.items() if m))
        return cls(name, tuple(labels), int(unit), tuple(dual), normalized,
                   complete_below=complete_below, connected=connected)

    @classmethod
    def from_dense(cls, name: str, labels: Sequence[str], unit: int, dual: Sequence[int],
                   tensor, **kwargs) -> FusionRing:
        """Build a ring from a dense array ``tensor[p][q][r]``.

        Raises
        ------
        MalformedRingError
            If the array is not symmetric in ``p, q`` (noncommutative data is not supported).
        """
        arr = np.asarray(tensor)
        n = len(labels)
        if arr.shape != (n, n, n):
            raise MalformedRingError(f"dense tensor has shape {arr.shape}, expected {(n, n, n)}")
        if (arr < 0).any():
            p, q, r = (int(x) for x in np.argwhere(arr < 0)[0])
            raise MalformedRingError(f"negative multiplicity N[{p},{q},{r}] = {arr[p, q, r]}")
        bad = np.argwhere(arr != arr.transpose(1, 0, 2))
        if len(bad):
            p, q, r = (int(x) for x in bad[0])
            raise MalformedRingError(
                f"noncommutative data: N[{p},{q},{r}] = {arr[p, q, r]} but N[{q},{p},{r}] = {arr[q, p, r]}")
        entries = [(p, q, r, int(arr[p, q, r])) for p, q, r in np.argwhere(arr > 0) if p <= q]
        return cls.from_entries(name, labels, unit, dual, entries, **kwargs)

    # -- basic queries ------------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.labels)

    @property
    def is_truncated(self) -> bool:
        return self.complete_below is not None

    @cached_property
    def tensor(self) -> dict[tuple[int, int, int], int]:
        """Multiplicities keyed by normalized ``(p, q, r)``."""
        return {(p, q, r): m for p, q, r, m in self.entries}

    @cached_property
    def _products(self) -> list[list[tuple[tuple[int, int], ...]]]:
        rows: list[list[list[tuple[int, int]]]] = [[[] for _ in range(self.rank)] for _ in range(self.rank)]
        for p, q, r, m in self.entries:
            rows[p][q].append((r, m))
            if p != q:
                rows[q][p].append((r, m))
        return [[tuple(cell) for cell in row] for row in rows]

    def N(self, p: int, q: int, r: int) -> int:
        """Multiplicity of ``r`` in ``p x q``."""
        return self.tensor.get((min(p, q), max(p, q), r), 0)

    def product(self, p: int, q: int) -> tuple[tuple[int, int], ...]:
        """Constituents ``(r, m)`` of the basis product ``p x q``, sorted by ``r``."""
        return self._products[p][q]

    def is_complete(self, p: int, q: int) -> bool:
        """Whether ``p x q`` is known without truncation loss."""
        return self.complete_below is None or p + q <= self.complete_below

    def is_self_dual(self, p: int) -> bool:
        return self.dual[p] == p

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no irreducible labelled {label!r} in ring {self.name!r}") from None

    def dense(self) -> np.ndarray:
        """Dense ``(rank, rank, rank)`` int64 array with ``out[p, q, r] = N[p, q, r]``."""
        out = np.zeros((self.rank,) * 3, dtype=np.int64)
        for p, q, r, m in self.entries:
            out[p, q, r] = m
            out[q, p, r] = m
        return out

    # -- element constructors -----------------------------------------------

    def character(self, coeffs: Sequence[int]) -> GeneralizedCharacter:
        return GeneralizedCharacter(self, tuple(int(c) for c in coeffs))

    def basis(self, p: int | str) -> GeneralizedCharacter:
        if isinstance(p, str):
            p = self.index(p)
        coeffs = [0] * self.rank
        coeffs[p] = 1
        return GeneralizedCharacter(self, tuple(coeffs))

    @property
    def zero(self) -> GeneralizedCharacter:
        return GeneralizedCharacter(self, (0,) * self.rank)

    @property
    def one(self) -> GeneralizedCharacter:
        return self.basis(self.unit)

    def __repr__(self):
        trunc = f", complete_below={self.complete_below}" if self.is_truncated else ""
        return f"FusionRing({self.name!r}, rank={self.rank}{trunc})"


@dataclass(frozen=True)
class GeneralizedCharacter:
    """An integer combination of irreducible characters of ``ring``."""

    ring: FusionRing = field(repr=False)
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.ring.rank:
            raise UsageError(f"{len(self.coeffs)} coefficients given for a rank {self.ring.rank} ring")

    def is_character(self) -> bool:
        """Membership in the positive cone."""
        return all(c >= 0 for c in self.coeffs)

    def _check(self, other: GeneralizedCharacter):
        if not isinstance(other, GeneralizedCharacter):
            raise UsageError(f"expected a GeneralizedCharacter, got {type(other).__name__}")
        if other.ring is not self.ring and other.ring != self.ring:
            raise UsageError(f"characters live in different rings ({self.ring.name!r}, {other.ring.name!r})")

    def __add__(self, other):
        self._check(other)
        return GeneralizedCharacter(self.ring, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return GeneralizedCharacter(self.ring, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return GeneralizedCharacter(self.ring, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return GeneralizedCharacter(self.ring, tuple(other * a for a in self.coeffs))
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise UsageError("negative powers are not defined in a representation ring")
        out = self.ring.one
        for _ in range(n):
            out = multiply(out, self)
        return out

    def __str__(self):
        terms = []
        for label, c in zip(self.ring.labels, self.coeffs):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            terms.append(f"{sign} {mag}[{label}]")
        if not terms:
            return "0"
        text = " ".join(terms)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


@dataclass(frozen=True)
class Violation:
    """One failed axiom with the basis indices that exhibit it."""

    axiom: str
    witness: tuple[int, ...]
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    ring_name: str
    violations: tuple[Violation, ...]
    truncated: bool = False

    @property
    def ok(self) -> bool:
        return not self.violations

    def axioms_violated(self) -> list[str]:
        return sorted({v.axiom for v in self.violations}, key=AXIOMS.index)


def _lin_combo(ring: FusionRing, terms, q: int, sign: int, acc: dict[int, int]):
    for s, m in terms:
        for t, m2 in ring.product(s, q):
            acc[t] = acc.get(t, 0) + sign * m * m2


def validate(ring: FusionRing) -> ValidationReport:
    """Check the fusion ring axioms and report every violation with a witness.

    Checked: ``dual`` is an involution fixing the unit; the unit acts as the
    identity; commutativity; associativity; and ``N[p, q, unit] = 1`` exactly
    when ``q = p*``.  Structural problems never get this far: they are rejected
    by the :class:`FusionRing` constructor.  On truncated rings only complete
    products (and triples built from complete products) are examined.
    """
    n, u = ring.rank, ring.unit
    out: list[Violation] = []

    for p in range(n):
        if ring.dual[ring.dual[p]] != p:
            out.append(Violation("involution", (p,), f"dual(dual({p})) = {ring.dual[ring.dual[p]]}"))
    if ring.dual[u] != u:
        out.append(Violation("involution", (u,), f"dual(unit) = {ring.dual[u]}"))

    for q in range(n):
        if not ring.is_complete(u, q):
            continue
        got = dict(ring.product(u, q))
        if got != {q: 1}:
            out.append(Violation("unit", (u, q), f"unit x {q} = {got}, expected {{{q}: 1}}"))

    # storage is symmetric by construction; this guards the lookup path itself
    for p in range(n):
        for q in range(p + 1, n):
            if ring.product(p, q) != ring.product(q, p):
                out.append(Violation("commutativity", (p, q), "p x q != q x p"))

    for p in range(n):
        for q in range(n):
            if not ring.is_complete(p, q):
                continue
            m = ring.N(p, q, u)
            want = 1 if q == ring.dual[p] else 0
            if m != want:
                out.append(Violation("duality", (p, q, u), f"N[{p},{q},unit] = {m}, expected {want}"))

    for p in range(n):
        for q in range(n):
            if not ring.is_complete(p, q):
                continue
            pq = ring.product(p, q)
            for r in range(n):
                if not ring.is_complete(q, r):
                    continue
                qr = ring.product(q, r)
                if not all(ring.is_complete(s, r) for s, _ in pq):
                    continue
                if not all(ring.is_complete(p, s) for s, _ in qr):
                    continue
                diff: dict[int, int] = {}
                _lin_combo(ring, pq, r, 1, diff)
                _lin_combo(ring, qr, p, -1, diff)
                bad = sorted(t for t, d in diff.items() if d)
                if bad:
                    t = bad[0]
                    out.append(Violation(
                        "associativity", (p, q, r, t),
                        f"coefficient of {t} in ({p} x {q}) x {r} and {p} x ({q} x {r}) differ by {diff[t]}"))
    return ValidationReport(ring.name, tuple(out), ring.is_truncated)


def multiply(a: GeneralizedCharacter, b: GeneralizedCharacter) -> GeneralizedCharacter:
    """Bilinear extension of the fusion product.

    Warns with :class:`TruncationWarning` when a truncated ring clips the result.
    """
    a._check(b)
    ring = a.ring
    out = [0] * ring.rank
    clipped = False
    for p, ap in enumerate(a.coeffs):
        if not ap:
            continue
        for q, bq in enumerate(b.coeffs):
            if not bq:
                continue
            if not ring.is_complete(p, q):
                clipped = True
            for r, m in ring.product(p, q):
                out[r] += ap * bq * m
    if clipped:
        warnings.warn(f"product in truncated ring {ring.name!r} lost constituents beyond the truncation",
                      TruncationWarning, stacklevel=2)
    return GeneralizedCharacter(ring, tuple(out))


def leq(a: GeneralizedCharacter, b: GeneralizedCharacter) -> bool:
    """``a`` precedes ``b`` in the order iff ``b - a`` is a genuine character."""
    a._check(b)
    return all(y >= x for x, y in zip(a.coeffs, b.coeffs))


def decompose(a: GeneralizedCharacter) -> list[tuple[int, int]]:
    """Irreducible constituents ``(index, multiplicity)`` of a character."""
    neg = [p for p, c in enumerate(a.coeffs) if c < 0]
    if neg:
        raise NotACharacterError(f"negative coefficient at basis index {neg[0]}: {a}")
    return [(p, c) for p, c in enumerate(a.coeffs) if c > 0]


def dual_char(a: GeneralizedCharacter) -> GeneralizedCharacter:
    out = [0] * a.ring.rank
    for p, c in enumerate(a.coeffs):
        out[a.ring.dual[p]] = c
    return GeneralizedCharacter(a.ring, tuple(out))
