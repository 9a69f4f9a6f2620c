"""Solutions of the character equations ``a_p a_q = sum_r N[p, q, r] a_r``.

For a finite group the nonzero solutions are exactly the columns of the
character table.  They are found here by simultaneous diagonalization of the
fusion matrices ``M_p`` (``M_p[r, q] = N[p, q, r]``): a solution is a common
left eigenvector, read off from the eigenvectors of one random combination
``sum_p c_p M_p``.

Truncated rings are handled separately.  Their clipped matrices no longer
commute, and the equations whose right side was clipped are dropped from
both solving and verification.  Solutions are then taken from the clipped
matrix of a single generator (by default the first non-unit irrep) and kept
only if they satisfy every remaining equation.

Frobenius-Perron dimensions use the Perron eigenvalue of each ``M_p``.
"""

from __future__ import annotations

import logging
import math
import os
from dataclasses import dataclass

import numpy as np

from .errors import ConsistencyError, ConvergenceError, DegenerateSpectrumError, ResourceLimitError
from .fusion_core import FusionRing

__all__ = [
    "FusionMatrixSet", "CharacterSolution", "fusion_matrices", "solve_character_system",
    "verify_solution", "integer_positive_solutions", "fp_dimensions", "default_seed",
    "DEFAULT_TOL", "DEFAULT_SEED",
]

log = logging.getLogger(__name__)

DEFAULT_TOL = 1e-9
DEFAULT_SEED = 20240601
DEFAULT_RETRIES = 5


def default_seed() -> int:
    """Solver seed, overridable with the ``FUSIONSCOPE_SEED`` environment variable."""
    value = os.environ.get("FUSIONSCOPE_SEED")
    return int(value) if value not in (None, "") else DEFAULT_SEED


@dataclass(frozen=True)
class FusionMatrixSet:
    """Stacked fusion matrices; ``matrices[p][r, q] = N[p, q, r]``."""

    ring: FusionRing
    matrices: np.ndarray

    def __getitem__(self, p: int) -> np.ndarray:
        return self.matrices[p]

    def __len__(self):
        return len(self.matrices)


@dataclass(frozen=True)
class CharacterSolution:
    values: np.ndarray
    residual: float

    def rounded(self, digits: int = 9) -> list[complex]:
        return [complex(round(v.real, digits) + 0.0, round(v.imag, digits) + 0.0) for v in self.values]


def fusion_matrices(ring: FusionRing) -> FusionMatrixSet:
    """Regular representation of the fusion algebra.

    Raises
    ------
    ConsistencyError
        If a complete ring yields non-commuting matrices.
    """
    mats = ring.dense().transpose(0, 2, 1).copy()
    if not ring.is_truncated:
        for p in range(ring.rank):
            for q in range(p + 1, ring.rank):
                if not np.array_equal(mats[p] @ mats[q], mats[q] @ mats[p]):
                    raise ConsistencyError(f"fusion matrices of {p} and {q} do not commute")
    return FusionMatrixSet(ring, mats)


def verify_solution(ring: FusionRing, alpha, tol: float | None = None) -> float:
    """Largest ``|a_p a_q - sum_r N[p, q, r] a_r|`` over all complete pairs.

    ``tol`` is accepted for symmetry with the solvers and not used: the caller
    compares the returned residual.
    """
    a = np.asarray(alpha, dtype=complex)
    worst = 0.0
    for p in range(ring.rank):
        for q in range(p, ring.rank):
            if not ring.is_complete(p, q):
                continue
            rhs = sum(m * a[r] for r, m in ring.product(p, q))
            worst = max(worst, abs(a[p] * a[q] - rhs))
    return float(worst)


def _min_gap(vals: np.ndarray) -> float:
    if len(vals) < 2:
        return math.inf
    d = np.abs(vals[:, None] - vals[None, :])
    d[np.diag_indices(len(vals))] = np.inf
    return float(d.min())


def _canonical_order(sols: list[CharacterSolution]) -> list[CharacterSolution]:
    def key(s):
        return tuple((-round(v.real, 6) + 0.0, -round(v.imag, 6) + 0.0) for v in s.values)
    return sorted(sols, key=key)


def _solutions_from_left_eigvecs(ring: FusionRing, A: np.ndarray, tol: float) -> list[CharacterSolution]:
    vals, vecs = np.linalg.eig(A.T)
    out = []
    for v in vecs.T:
        if abs(v[ring.unit]) < 1e-12:
            continue
        alpha = v / v[ring.unit]
        out.append(CharacterSolution(alpha, verify_solution(ring, alpha)))
    return out


def solve_character_system(ring: FusionRing, tol: float = DEFAULT_TOL, seed: int | None = None,
                           retries: int = DEFAULT_RETRIES, generator: int | None = None
                           ) -> list[CharacterSolution]:
    """All solutions of the character equations with ``a_unit = 1``.

    Parameters
    ----------
    ring : FusionRing
    tol : float
        Maximum allowed residual per solution.
    seed : int, optional
        Seed for the random combination; defaults to :func:`default_seed`.
    retries : int
        Fresh random combinations to try when the spectrum is degenerate.
    generator : int, optional
        Truncated rings only: the irrep whose clipped matrix is diagonalized.

    Returns
    -------
    list of CharacterSolution
        ``rank`` solutions for complete rings, in a canonical order independent
        of the seed.

    Raises
    ------
    DegenerateSpectrumError
        If every random combination had a repeated eigenvalue.
    ConvergenceError
        If some solution misses ``tol``.
    """
    seed = default_seed() if seed is None else seed
    fm = fusion_matrices(ring)
    n = ring.rank
    if ring.is_truncated:
        g = generator if generator is not None else (1 if ring.unit == 0 and n > 1 else ring.unit)
        sols = _solutions_from_left_eigvecs(ring, fm[g].astype(float), tol)
        kept = [s for s in sols if s.residual < tol]
        log.info("truncated ring %s: kept %d of %d eigenvector solutions", ring.name, len(kept), len(sols))
        return _canonical_order(kept)

    rng = np.random.default_rng(seed)
    scale = max(1.0, float(np.abs(fm.matrices).max()))
    for attempt in range(retries + 1):
        c = rng.normal(size=n)
        A = np.einsum("p,prq->rq", c, fm.matrices.astype(float))
        vals = np.linalg.eigvals(A)
        if _min_gap(vals) > 1e-7 * scale:
            break
        log.debug("degenerate spectrum on attempt %d (gap %.3g)", attempt, _min_gap(vals))
    else:
        raise DegenerateSpectrumError(f"no simple spectrum for {ring.name!r} after {retries + 1} tries")
    sols = _solutions_from_left_eigvecs(ring, A, tol)
    if len(sols) != n:
        raise ConvergenceError(f"expected {n} solutions, found {len(sols)}")
    bad = [s for s in sols if not s.residual < tol]
    if bad:
        raise ConvergenceError(f"solution residual {bad[0].residual:.3g} exceeds tol {tol:g}")
    return _canonical_order(sols)


def fp_dimensions(ring: FusionRing) -> np.ndarray:
    """Frobenius-Perron dimensions, normalized so the unit has dimension 1.

    Complete rings: ``d_p`` is the spectral radius of ``M_p`` (the Perron
    eigenvalue of a nonnegative matrix).  Truncated rings: the clipped matrices
    no longer share a Perron vector, so ``d`` is the Perron eigenvector of the
    first non-unit irrep's clipped matrix, normalized at the unit; it solves
    every complete equation but is an artifact of the truncation.
    """
    fm = fusion_matrices(ring)
    if ring.is_truncated and ring.rank > 1:
        g = 1 if ring.unit == 0 else 0
        vals, vecs = np.linalg.eig(fm[g].astype(float).T)
        v = vecs[:, int(np.argmax(vals.real))].real
        return v / v[ring.unit]
    return np.array([max(abs(np.linalg.eigvals(m.astype(float)))) for m in fm.matrices])


def integer_positive_solutions(ring: FusionRing, bound: int, max_nodes: int = 2_000_000) -> list[tuple[int, ...]]:
    """Every solution in positive integers ``1..bound`` with ``a_unit = 1``.

    Depth-first search over the irreps in index order.  After each assignment,
    equations with a single unknown on the right-hand side are solved directly
    (forced values), and any equation whose terms are all known is checked.
    Only complete products are used on truncated rings.

    Raises
    ------
    ResourceLimitError
        If the search tree exceeds ``max_nodes`` nodes.
    """
    n = ring.rank
    eqs = [(p, q, ring.product(p, q)) for p in range(n) for q in range(p, n) if ring.is_complete(p, q)]
    by_var: list[list[int]] = [[] for _ in range(n)]
    for i, (p, q, rhs) in enumerate(eqs):
        for v in {p, q} | {r for r, _ in rhs}:
            by_var[v].append(i)

    found: list[tuple[int, ...]] = []
    nodes = 0

    def propagate(a: list[int | None], changed: list[int]) -> bool:
        work = list(changed)
        while work:
            v = work.pop()
            for i in by_var[v]:
                p, q, rhs = eqs[i]
                if a[p] is None or a[q] is None:
                    continue
                lhs = a[p] * a[q]
                unknown = [(r, m) for r, m in rhs if a[r] is None]
                known = sum(m * a[r] for r, m in rhs if a[r] is not None)
                if not unknown:
                    if lhs != known:
                        return False
                elif len(unknown) == 1:
                    r, m = unknown[0]
                    val, rem = divmod(lhs - known, m)
                    if rem or not 1 <= val <= bound:
                        return False
                    a[r] = val
                    work.append(r)
                elif lhs - known < sum(m for _, m in unknown):
                    return False
        return True

    def search(a: list[int | None]):
        nonlocal nodes
        nodes += 1
        if nodes > max_nodes:
            raise ResourceLimitError(f"integer search exceeded {max_nodes} nodes (rank {n}, bound {bound})")
        try:
            v = a.index(None)
        except ValueError:
            found.append(tuple(a))
            return
        for val in range(1, bound + 1):
            b = list(a)
            b[v] = val
            if propagate(b, [v]):
                search(b)

    start: list[int | None] = [None] * n
    start[ring.unit] = 1
    if propagate(start, [ring.unit]):
        search(start)
    return sorted(set(found))
