"""Named example rings.

Finite-group rings are shipped as generated JSON documents (see
``tools/generate_catalog.py``, which computes them from group multiplication
tables).  Truncated SU(2) rings are exported by :mod:`fusionscope.su2_engine`
on demand.
"""

from __future__ import annotations

from importlib.resources import files

from .document import RingDocument, parse
from .su2_engine import export_truncated_ring, truncated_ring_name

__all__ = ["FINITE_GROUPS", "SU2_TRUNCATIONS", "catalog", "catalog_names", "get"]

FINITE_GROUPS = ("trivial", "Z2", "Z3", "Z4", "Z5", "Z6", "Z2xZ2", "S3", "D4", "Q8", "A4")
SU2_TRUNCATIONS = (2, 4, 10)  # twice jmax


def _su2_docs() -> dict[str, int]:
    return {truncated_ring_name(t): t for t in SU2_TRUNCATIONS}


def catalog_names() -> list[str]:
    return list(FINITE_GROUPS) + list(_su2_docs())


def get(name: str) -> RingDocument:
    if name in FINITE_GROUPS:
        return parse(files("fusionscope").joinpath("data", f"{name}.json").read_bytes())
    su2 = _su2_docs()
    if name in su2:
        ring = export_truncated_ring(su2[name])
        # half-integer spins are pseudo-real, integer spins real
        fs = {lab: "pseudoreal" if t % 2 else "real" for t, lab in enumerate(ring.labels)}
        return RingDocument.from_ring(ring, fs)
    raise KeyError(f"no catalog entry {name!r}; known: {', '.join(catalog_names())}")


def catalog() -> list[RingDocument]:
    return [get(name) for name in catalog_names()]
