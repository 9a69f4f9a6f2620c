"""SU(2) fusion rules rebuilt from dimension data.

The only inputs are: there is exactly one irrep ``D_j`` of every dimension
``2j + 1``, every irrep is therefore self-dual, and ``D_0`` occurs in
``D_j x D_k`` exactly once when ``j = k`` and never otherwise.  From these,
:func:`derive_half_tensor` recovers ``D_1/2 x D_k = D_(k-1/2) + D_(k+1/2)`` by
an explicit constraint search, one ``k`` at a time.  Powers of ``chi_1/2`` and
the inverse expansion of ``chi_j`` in those powers then give the full
Clebsch-Gordan series, which :func:`cg_product` checks against the closed form.

Spins are stored as ``twice_j`` integers so that all arithmetic is exact.

Summation limit of the power formula
------------------------------------
The decomposition of ``chi_1/2 ** n`` is

    chi_(n/2) + sum_{i=1}^{floor(n/2)} [C(n, i) - C(n, i-1)] chi_(n/2 - i).

Stopping the sum at ``floor(n/2 - 1)`` instead drops the lowest term, e.g. the
``2 chi_0`` in ``chi_1/2 ** 4 = chi_2 + 3 chi_1 + 2 chi_0`` and the
``2 chi_1/2`` in ``chi_1/2 ** 3``.  :func:`chi_half_power` uses ``floor(n/2)``
and can reproduce the shorter sum with ``short_limit=True`` for comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterator, Mapping

from .errors import ConsistencyError, DerivationError
from .fusion_core import FusionRing
from .group_recovery import AbelianGroupStructure

__all__ = [
    "SpinIndex", "SU2Character", "derive_half_tensor", "chi_half_power", "chi_in_half_powers",
    "cg_product", "cg_series", "parity_grading", "parity_class", "export_truncated_ring",
    "times_half", "spin_label",
]


@dataclass(frozen=True, order=True)
class SpinIndex:
    """Spin ``j = twice_j / 2``."""

    twice_j: int

    def __post_init__(self):
        if self.twice_j < 0:
            raise ValueError(f"spin must be nonnegative, got twice_j={self.twice_j}")

    @classmethod
    def parse(cls, text: str | int | float | Fraction) -> SpinIndex:
        """Accepts ``'3/2'``, ``'1.5'``, ``1.5`` or ``Fraction(3, 2)``."""
        j = Fraction(str(text)) if not isinstance(text, Fraction) else text
        if (2 * j).denominator != 1:
            raise ValueError(f"{text!r} is not a half-integer")
        return cls(int(2 * j))

    @property
    def j(self) -> Fraction:
        return Fraction(self.twice_j, 2)

    @property
    def dimension(self) -> int:
        return self.twice_j + 1

    def __str__(self):
        return spin_label(self.twice_j)


def spin_label(twice_j: int) -> str:
    return str(twice_j // 2) if twice_j % 2 == 0 else f"{twice_j}/2"


class SU2Character(Mapping[int, int]):
    """Finitely supported integer combination of the ``chi_j``, keyed by ``twice_j``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self._c = {int(k): int(v) for k, v in (coeffs or {}).items() if v}
        if any(k < 0 for k in self._c):
            raise ValueError("negative twice_j in SU2Character")

    @classmethod
    def irrep(cls, twice_j: int) -> SU2Character:
        return cls({twice_j: 1})

    def __getitem__(self, k: int) -> int:
        return self._c.get(k, 0)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self._c))

    def __len__(self):
        return len(self._c)

    def __eq__(self, other):
        if isinstance(other, SU2Character):
            return self._c == other._c
        if isinstance(other, Mapping):
            return self._c == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other: SU2Character) -> SU2Character:
        out = dict(self._c)
        for k, v in other.items():
            out[k] = out.get(k, 0) + v
        return SU2Character(out)

    def __sub__(self, other: SU2Character) -> SU2Character:
        return self + other.scale(-1)

    def scale(self, c: int) -> SU2Character:
        return SU2Character({k: c * v for k, v in self._c.items()})

    def dimension(self) -> int:
        return sum(m * (k + 1) for k, m in self._c.items())

    def __repr__(self):
        terms = [f"{m}*chi[{spin_label(k)}]" for k, m in sorted(self._c.items())]
        return "SU2Character(" + (" + ".join(terms) or "0") + ")"


def _multisets(total: int, smallest_part: int) -> Iterator[dict[int, int]]:
    """All multisets of parts ``>= smallest_part`` summing to ``total`` (part = dimension)."""
    if total == 0:
        yield {}
        return
    for part in range(smallest_part, total + 1):
        for rest in _multisets(total - part, part):
            out = dict(rest)
            out[part] = out.get(part, 0) + 1
            yield out


@dataclass(frozen=True)
class HalfTensorStep:
    """One induction step: the candidates that survived the constraints for ``D_1/2 x D_k``."""

    twice_k: int
    forced: dict[int, int]
    candidates: tuple[SU2Character, ...]

    @property
    def result(self) -> SU2Character:
        return self.candidates[0]


def derive_half_tensor(max_twice_j: int, *, trace: list | None = None) -> dict[int, SU2Character]:
    """Decompose ``D_1/2 x D_k`` for ``twice_k = 0 .. max_twice_j`` without assuming the answer.

    At step ``k`` a candidate is any multiset of irreps of total dimension
    ``2 (2k + 1)`` such that

    * ``D_0`` occurs once if ``k = 1/2`` and not at all otherwise (self-duality);
    * for ``0 < j < k``, ``D_j`` occurs exactly as often as ``D_0`` occurs in
      ``D_j x D_1/2 x D_k``.  Rewriting ``D_j x D_1/2`` with the rows already
      derived, and using that ``D_0`` lies in ``D_s x D_k`` only for ``s = k``,
      that count is the multiplicity of ``D_k`` in the earlier row for ``j``.

    The irreps with ``j >= k`` are left free and the search enumerates every
    way of filling the remaining dimension with them.  Exactly one candidate
    must survive at every step, and it must be ``D_(k-1/2) + D_(k+1/2)``.

    Parameters
    ----------
    max_twice_j : int
        Largest ``2k`` to derive (at least 1).
    trace : list, optional
        If given, receives one :class:`HalfTensorStep` per ``k``.

    Raises
    ------
    DerivationError
        If some step has zero or several candidates, or the survivor differs
        from the expected pair.
    """
    if max_twice_j < 1:
        raise ValueError("max_twice_j must be at least 1")
    rows: dict[int, SU2Character] = {}
    for k in range(max_twice_j + 1):
        forced = {0: 1 if k == 1 else 0}
        for t in range(1, k):
            forced[t] = rows[t][k]
        used = sum(m * (t + 1) for t, m in forced.items())
        remaining = 2 * (k + 1) - used
        candidates = []
        if remaining >= 0:
            # free irreps have twice_j >= max(k, 1), i.e. dimension >= max(k, 1) + 1
            for free in _multisets(remaining, max(k, 1) + 1):
                c = {t: m for t, m in forced.items() if m}
                for dim, m in free.items():
                    c[dim - 1] = c.get(dim - 1, 0) + m
                candidates.append(SU2Character(c))
        if trace is not None:
            trace.append(HalfTensorStep(k, forced, tuple(candidates)))
        if len(candidates) != 1:
            raise DerivationError(f"D_1/2 x D_{spin_label(k)}: {len(candidates)} candidate decompositions")
        expected = SU2Character({k + 1: 1}) if k == 0 else SU2Character({k - 1: 1, k + 1: 1})
        if candidates[0] != expected:
            raise DerivationError(f"D_1/2 x D_{spin_label(k)} derived as {candidates[0]}, expected {expected}")
        rows[k] = candidates[0]
    return rows


@lru_cache(maxsize=None)
def _half_rows(max_twice_j: int) -> dict[int, SU2Character]:
    return derive_half_tensor(max(max_twice_j, 1))


def times_half(x: SU2Character) -> SU2Character:
    """``x * chi_1/2`` using the derived ``D_1/2 x D_k`` rows."""
    if not x:
        return SU2Character()
    rows = _half_rows(_round_up(max(x)))
    out = SU2Character()
    for k, m in x.items():
        out = out + rows[k].scale(m)
    return out


def _round_up(n: int) -> int:
    # share cache entries between nearby sizes
    return max(8, 1 << (n - 1).bit_length()) if n > 0 else 8


@lru_cache(maxsize=None)
def chi_half_power(n: int, *, short_limit: bool = False) -> SU2Character:
    """Decomposition of ``chi_1/2 ** n`` from the closed formula.

    ``short_limit=True`` stops the sum at ``floor(n/2 - 1)``, which loses the
    lowest term for every ``n >= 2`` (kept only to demonstrate the difference).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    top = (n - 2) // 2 if short_limit else n // 2
    coeffs = {n: 1}
    for i in range(1, top + 1):
        coeffs[n - 2 * i] = comb(n, i) - comb(n, i - 1)
    return SU2Character(coeffs)


def chi_in_half_powers(j: SpinIndex | int) -> dict[int, int]:
    """Express ``chi_j`` as an integer polynomial in ``chi_1/2``.

    Returns ``{power: coefficient}``; the coefficient of ``chi_1/2 ** (2j - 2i)``
    is ``(-1)**i * C(2j - i, i)`` for ``0 <= i <= floor(j)``.
    """
    twice_j = j.twice_j if isinstance(j, SpinIndex) else int(j)
    return {twice_j - 2 * i: (-1) ** i * comb(twice_j - i, i) for i in range(twice_j // 2 + 1)}


def _substitute(poly: Mapping[int, int]) -> SU2Character:
    out = SU2Character()
    for n, c in poly.items():
        out = out + chi_half_power(n).scale(c)
    return out


def cg_series(twice_j: int, twice_j2: int) -> SU2Character:
    """Closed form: ``chi_j chi_j' = chi_|j-j'| + ... + chi_(j+j')``, step 1."""
    lo, hi = abs(twice_j - twice_j2), twice_j + twice_j2
    return SU2Character({t: 1 for t in range(lo, hi + 1, 2)})


def cg_product(j: SpinIndex | int, j2: SpinIndex | int) -> SU2Character:
    """``chi_j * chi_j2``, computed through the power expansion and checked against the series.

    Raises
    ------
    ConsistencyError
        If the two routes disagree.
    """
    a = j.twice_j if isinstance(j, SpinIndex) else int(j)
    b = j2.twice_j if isinstance(j2, SpinIndex) else int(j2)
    pa, pb = chi_in_half_powers(a), chi_in_half_powers(b)
    poly: dict[int, int] = {}
    for n1, c1 in pa.items():
        for n2, c2 in pb.items():
            poly[n1 + n2] = poly.get(n1 + n2, 0) + c1 * c2
    derived = _substitute(poly)
    closed = cg_series(a, b)
    if derived != closed:
        raise ConsistencyError(f"chi_{spin_label(a)} * chi_{spin_label(b)}: derived {derived} != closed form {closed}")
    return derived


def parity_class(j: SpinIndex | int) -> int:
    """Class of ``D_j`` in the chain group: 0 for integer spin, 1 for half-integer."""
    twice_j = j.twice_j if isinstance(j, SpinIndex) else int(j)
    return twice_j % 2


def parity_grading() -> AbelianGroupStructure:
    """The chain group of SU(2), as Z2 acting on :func:`parity_class` values."""
    table = {(a, b): (a + b) % 2 for a in (0, 1) for b in (0, 1)}
    return AbelianGroupStructure((0, 1), table, 0)


def truncated_ring_name(max_twice_j: int) -> str:
    return "SU2-trunc-jmax" + spin_label(max_twice_j).replace("/", "_")


def export_truncated_ring(max_twice_j: int) -> FusionRing:
    """Irreps ``twice_j = 0 .. max_twice_j`` as a truncated :class:`FusionRing`.

    Basis index equals ``twice_j``; constituents above the bound are dropped and
    the ring is marked ``complete_below = max_twice_j``, so the product of ``p``
    and ``q`` is exact precisely when ``p + q <= max_twice_j``.
    """
    if max_twice_j < 0:
        raise ValueError("max_twice_j must be nonnegative")
    entries = []
    for p in range(max_twice_j + 1):
        for q in range(p, max_twice_j + 1):
            for r, m in cg_product(p, q).items():
                if r <= max_twice_j:
                    entries.append((p, q, r, m))
    labels = [spin_label(t) for t in range(max_twice_j + 1)]
    return FusionRing.from_entries(truncated_ring_name(max_twice_j), labels, 0, list(range(max_twice_j + 1)),
                                   entries, complete_below=max_twice_j, connected=True)
