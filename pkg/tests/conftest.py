from __future__ import annotations

import json
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "tools"))

from fusionscope import catalog  # noqa: E402
from fusionscope.fusion_core import FusionRing  # noqa: E402

FIXTURES = ROOT / "tests" / "fixtures"


@pytest.fixture(scope="session")
def group_facts() -> dict:
    return json.loads((FIXTURES / "group_facts.json").read_text())


@pytest.fixture(scope="session")
def rings() -> dict[str, FusionRing]:
    return {name: catalog.get(name).to_ring() for name in catalog.catalog_names()}


def cyclic_ring(n: int) -> FusionRing:
    """Z_n fusion ring built directly from addition mod n."""
    entries = [(a, b, (a + b) % n, 1) for a in range(n) for b in range(a, n)]
    return FusionRing.from_entries(f"Z{n}", [str(k) for k in range(n)], 0, [(-k) % n for k in range(n)], entries)
