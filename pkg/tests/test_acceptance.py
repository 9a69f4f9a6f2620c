"""Acceptance gate: ten criteria, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v -s`` or directly with
``python tests/test_acceptance.py``.  Every criterion must also finish within
10 seconds.
"""

from __future__ import annotations

import json
import random
import sys
import time
from pathlib import Path

import numpy as np
import pytest

HERE = Path(__file__).resolve().parent
sys.path.insert(0, str(HERE))

from conftest import FIXTURES  # noqa: E402
from fusionscope import catalog  # noqa: E402
from fusionscope.char_solver import (fp_dimensions, integer_positive_solutions,  # noqa: E402
                                     solve_character_system)
from fusionscope.cli import main as cli_main  # noqa: E402
from fusionscope.document import dump  # noqa: E402
from fusionscope.fusion_core import FusionRing, validate  # noqa: E402
from fusionscope.group_recovery import chain_group, invertible_characters  # noqa: E402
from fusionscope.su2_engine import (SU2Character, cg_product, cg_series, chi_half_power,  # noqa: E402
                                    chi_in_half_powers, derive_half_tensor, export_truncated_ring,
                                    times_half)
from fusionscope.subrings import (adjoint_subring, enumerate_subrings, find_order_isomorphism,  # noqa: E402
                                  quotient_ring)

TIME_LIMIT = 10.0
FINITE = list(catalog.FINITE_GROUPS)


def facts() -> dict:
    return json.loads((FIXTURES / "group_facts.json").read_text())


def ring(name: str) -> FusionRing:
    return catalog.get(name).to_ring()


def c1_d4_q8(tmp: Path):
    paths = []
    for name in ("D4", "Q8"):
        paths.append(str(tmp / f"{name}.json"))
        dump(catalog.get(name), paths[-1])
    code = cli_main(["isomorphic", *paths])
    f = facts()
    counts = {g: f[g]["square_roots_of_identity"] for g in ("Q8", "D4")}
    ok = code == 0 and counts == {"Q8": 2, "D4": 6}
    return ok, f"isomorphic exit {code}; oracle #{{x : x^2 = e}}: {counts}"


def c2_chain_center(tmp: Path):
    f = facts()
    bad = {g: (list(chain_group(ring(g)).group.invariant_factors), f[g]["center_factors"]) for g in FINITE}
    bad = {g: v for g, v in bad.items() if v[0] != v[1]}
    return not bad, f"{len(FINITE)} groups checked, mismatches: {bad or 'none'}"


def c3_su2_chain(tmp: Path):
    res = chain_group(export_truncated_ring(10))
    classes = res.classes()
    ok = list(res.group.invariant_factors) == [2] and classes == [[0, 2, 4, 6, 8, 10], [1, 3, 5, 7, 9]]
    return ok, f"chain group {res.group}, classes by 2j: {classes}"


def c4_abelianization(tmp: Path):
    f = facts()
    got = {g: list(invertible_characters(ring(g)).invariant_factors) for g in FINITE}
    bad = {g: (got[g], f[g]["abelianization_factors"]) for g in FINITE if got[g] != f[g]["abelianization_factors"]}
    return not bad, f"D4 {got['D4']}, Q8 {got['Q8']}, S3 {got['S3']}, A4 {got['A4']}; mismatches: {bad or 'none'}"


def c5_galois_count(tmp: Path):
    f = facts()
    got = {g: len(enumerate_subrings(ring(g))) for g in FINITE}
    bad = {g: (got[g], f[g]["normal_subgroups"]) for g in FINITE if got[g] != f[g]["normal_subgroups"]}
    return not bad, f"counts {got}; mismatches: {bad or 'none'}"


def c6_quotient(tmp: Path):
    sub = adjoint_subring(ring("D4"))
    iso = find_order_isomorphism(quotient_ring(sub), ring("Z2xZ2"))
    return iso is not None, f"adjoint subring {sub.labels()}, quotient ~ Z2xZ2: {iso is not None}"


def c7_character_tables(tmp: Path):
    f = facts()
    notes = []
    ok = True
    for g in ("D4", "S3", "A4", "Z6"):
        table = np.array([[complex(a, b) for a, b in row] for row in f[g]["character_table"]])
        cols = [table[:, c] for c in range(table.shape[1])]
        sols = solve_character_system(ring(g))
        matched = 0
        for s in sols:
            hits = [i for i, c in enumerate(cols) if np.max(np.abs(s.values - c)) < 1e-6]
            if len(hits) == 1:
                cols.pop(hits[0])
                matched += 1
        worst = max(s.residual for s in sols)
        good = matched == len(sols) and not cols and worst < 1e-9
        ok &= good
        notes.append(f"{g} {matched}/{table.shape[1]} res {worst:.1e}")
    return ok, "; ".join(notes)


def c8_integer_solutions(tmp: Path):
    d4 = ring("D4")
    ints = integer_positive_solutions(d4, 10)
    fp = fp_dimensions(d4)
    ok = ints == [(1, 1, 1, 1, 2)] and np.allclose(fp, [1, 1, 1, 1, 2], rtol=0, atol=1e-9)
    return ok, f"integer solutions {ints}, FP dims {np.round(fp, 12).tolist()}"


def c9_su2_derivation(tmp: Path):
    trace = []
    derive_half_tensor(40, trace=trace)
    steps_ok = all(len(s.candidates) == 1 and dict(s.result) == ({1: 1} if s.twice_k == 0 else
                                                                  {s.twice_k - 1: 1, s.twice_k + 1: 1})
                   for s in trace) and len(trace) == 41
    x = SU2Character({0: 1})
    powers_ok = chi_half_power(0) == x
    for n in range(1, 26):
        x = times_half(x)
        powers_ok &= chi_half_power(n) == x
    inverse_ok = True
    for t in range(26):
        total = SU2Character()
        for n, c in chi_in_half_powers(t).items():
            total = total + chi_half_power(n).scale(c)
        inverse_ok &= dict(total) == {t: 1}
    cg_ok = True
    for a in range(41):
        for b in range(41):
            got = cg_product(a, b)
            cg_ok &= got == cg_series(a, b) and set(got.values()) == {1} and got.dimension() == (a + 1) * (b + 1)
    ok = steps_ok and powers_ok and inverse_ok and cg_ok
    return ok, f"derivation {steps_ok}, powers n<=25 {powers_ok}, inverse 2j<=25 {inverse_ok}, CG 2j,2j'<=40 {cg_ok}"


def _spot_checks(r: FusionRing, rng: random.Random, count: int = 100) -> int:
    failures = 0
    n, u = r.rank, r.unit
    for _ in range(count):
        p, q, s = (rng.randrange(n) for _ in range(3))
        if r.is_complete(p, q):
            failures += any(r.N(p, q, t) != r.N(q, p, t) for t in range(n))
            failures += r.N(p, q, u) != (1 if q == r.dual[p] else 0)
        pq, qs = r.product(p, q), r.product(q, s)
        pairs = [(p, q), (q, s)] + [(x, s) for x, _ in pq] + [(p, x) for x, _ in qs]
        if all(r.is_complete(a, b) for a, b in pairs):
            for t in range(n):
                lhs = sum(m * r.N(x, s, t) for x, m in pq)
                rhs = sum(m * r.N(p, x, t) for x, m in qs)
                failures += lhs != rhs
    return failures


def c10_axiom_suite(tmp: Path):
    rng = random.Random(20240601)
    spot_failures = {}
    missed = []
    total = 0
    for name in catalog.catalog_names():
        r = ring(name)
        k = _spot_checks(r, rng)
        if k:
            spot_failures[name] = k
        for p in range(r.rank):
            for q in range(p, r.rank):
                if not r.is_complete(p, q):
                    continue
                for t in range(r.rank):
                    for delta in (1, -1):
                        m = r.N(p, q, t) + delta
                        if m < 0:
                            continue
                        ents = [e for e in r.entries if e[:3] != (p, q, t)] + ([(p, q, t, m)] if m else [])
                        mut = FusionRing.from_entries(name, r.labels, r.unit, r.dual, ents,
                                                      complete_below=r.complete_below)
                        total += 1
                        rep = validate(mut)
                        if rep.ok or not all(v.witness for v in rep.violations):
                            missed.append(f"{name}:N[{p},{q},{t}]{delta:+d}")
    ok = not spot_failures and not missed
    detail = (f"spot-check failures: {spot_failures or 'none'}; "
              f"{total - len(missed)}/{total} single-entry edits detected")
    if missed:
        detail += "; undetected: " + ", ".join(missed)
    return ok, detail


CRITERIA = [
    (1, "D4/Q8 indistinguishable, different involution counts", c1_d4_q8),
    (2, "chain group = dual of the center", c2_chain_center),
    (3, "SU(2) chain group is Z2 by parity", c3_su2_chain),
    (4, "one-dim characters = dual of the abelianization", c4_abelianization),
    (5, "subring count = normal subgroup count", c5_galois_count),
    (6, "D4 adjoint quotient ~ Z2xZ2", c6_quotient),
    (7, "character tables recovered", c7_character_tables),
    (8, "D4 positive integer solutions and FP dimensions", c8_integer_solutions),
    (9, "SU(2) derivation and Clebsch-Gordan series", c9_su2_derivation),
    (10, "axiom spot checks and mutation detection", c10_axiom_suite),
]


def run_criterion(fn, tmp: Path) -> tuple[bool, str, float]:
    start = time.perf_counter()
    ok, detail = fn(tmp)
    elapsed = time.perf_counter() - start
    if elapsed >= TIME_LIMIT:
        ok, detail = False, detail + f"; too slow ({elapsed:.1f}s)"
    return ok, detail, elapsed


def _line(num, title, ok, detail, elapsed) -> str:
    return f"criterion {num:2d} {'PASS' if ok else 'FAIL'} [{elapsed:5.2f}s] {title}: {detail}"


@pytest.mark.parametrize("num, title, fn", CRITERIA, ids=[f"criterion_{c[0]:02d}" for c in CRITERIA])
def test_criterion(num, title, fn, tmp_path, capsys):
    ok, detail, elapsed = run_criterion(fn, tmp_path)
    with capsys.disabled():
        print("\n" + _line(num, title, ok, detail, elapsed))
    assert ok, detail


if __name__ == "__main__":
    import tempfile

    failed = 0
    with tempfile.TemporaryDirectory() as d:
        for num, title, fn in CRITERIA:
            ok, detail, elapsed = run_criterion(fn, Path(d))
            failed += not ok
            print(_line(num, title, ok, detail, elapsed))
    sys.exit(1 if failed else 0)
