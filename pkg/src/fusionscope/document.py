"""Ring documents: the on-disk JSON form of fusion data.

A document looks like::

    {
      "name": "Z2",
      "rank": 2,
      "labels": ["1", "s"],
      "unit": 0,
      "dual": [0, 1],
      "fusion": [
        [0, 0, 0, 1],
        [0, 1, 1, 1],
        [1, 1, 0, 1]
      ],
      "metadata": {}
    }

``fusion`` lists ``[p, q, r, m]`` with ``m >= 1``; ``[q, p, r, m]`` names the same
entry, so after swapping to ``p <= q`` no ``(p, q, r)`` may repeat.  Optional
metadata keys are ``complete_below`` (truncation bound), ``connected`` and
``fs_indicators`` (label -> ``real`` | ``complex`` | ``pseudoreal``).

Parsing is strict: unknown keys, wrong types, out-of-range indices and
duplicates are rejected with a line/column position.  :func:`serialize`
writes the canonical form (fixed key order, sorted metadata keys, normalized
and sorted quadruples, one per line), and canonical bytes round-trip exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import InputError
from .fusion_core import FusionRing

__all__ = ["RingDocument", "DocumentError", "parse", "serialize", "load", "dump"]

TOP_KEYS = ("name", "rank", "labels", "unit", "dual", "fusion", "metadata")
META_KEYS = ("complete_below", "connected", "fs_indicators")
FS_VALUES = ("real", "complex", "pseudoreal")


class DocumentError(InputError):
    """Malformed ring document; carries the position of the offending value."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line, self.column = line, column
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)


@dataclass(frozen=True)
class RingDocument:
    name: str
    rank: int
    labels: tuple[str, ...]
    unit: int
    dual: tuple[int, ...]
    fusion: tuple[tuple[int, int, int, int], ...]
    metadata: dict = field(default_factory=dict, hash=False)

    @property
    def complete_below(self) -> int | None:
        return self.metadata.get("complete_below")

    @property
    def connected(self) -> bool | None:
        return self.metadata.get("connected")

    @property
    def fs_indicators(self) -> dict[str, str] | None:
        return self.metadata.get("fs_indicators")

    def to_ring(self) -> FusionRing:
        return FusionRing(self.name, self.labels, self.unit, self.dual, self.fusion,
                          complete_below=self.complete_below, connected=self.connected)

    @classmethod
    def from_ring(cls, ring: FusionRing, fs_indicators: dict[str, str] | None = None) -> RingDocument:
        meta: dict = {}
        if ring.complete_below is not None:
            meta["complete_below"] = ring.complete_below
        if ring.connected is not None:
            meta["connected"] = ring.connected
        if fs_indicators:
            meta["fs_indicators"] = dict(fs_indicators)
        return cls(ring.name, ring.rank, ring.labels, ring.unit, ring.dual, ring.entries, meta)


# -- positions ------------------------------------------------------------------

def _value_positions(text: str) -> dict[tuple, int]:
    """Map JSON paths (tuples of keys / indices) to the offset where each value starts.

    Only run on text that ``json.loads`` has already accepted.
    """
    pos: dict[tuple, int] = {}
    stack: list[list] = []  # [container_type, path, next_index_or_key]
    i, n = 0, len(text)

    def path_here():
        if not stack:
            return ()
        kind, path, cur = stack[-1]
        return path + (cur,)

    expecting_key = False
    while i < n:
        c = text[i]
        if c in " \t\r\n,:":
            if c == "," and stack and stack[-1][0] == "list":
                stack[-1][2] += 1
            if c == "," and stack and stack[-1][0] == "dict":
                expecting_key = True
            i += 1
            continue
        if c == '"':
            j = i + 1
            while text[j] != '"':
                j += 2 if text[j] == "\\" else 1
            if expecting_key:
                stack[-1][2] = json.loads(text[i:j + 1])
                expecting_key = False
            else:
                pos[path_here()] = i
            i = j + 1
            continue
        if c in "[{":
            here = path_here()
            pos[here] = i
            stack.append(["list" if c == "[" else "dict", here, 0 if c == "[" else None])
            expecting_key = c == "{"
            i += 1
            continue
        if c in "]}":
            stack.pop()
            i += 1
            continue
        j = i
        while j < n and text[j] not in " \t\r\n,:]}":
            j += 1
        pos[path_here()] = i
        i = j
    return pos


def _line_col(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


def parse(data: bytes | str) -> RingDocument:
    """Parse and check a ring document.

    Raises
    ------
    DocumentError
        On syntax errors, unknown or missing keys, wrong types, indices out of
        range, nonpositive multiplicities or duplicate fusion entries.
    """
    text = data.decode("utf-8") if isinstance(data, (bytes, bytearray)) else data

    def dup_keys(pairs):
        keys = [k for k, _ in pairs]
        for k in keys:
            if keys.count(k) > 1:
                raise DocumentError(f"duplicate key {k!r}")
        return dict(pairs)

    try:
        obj = json.loads(text, object_pairs_hook=dup_keys)
    except json.JSONDecodeError as exc:
        raise DocumentError(exc.msg, exc.lineno, exc.colno) from None
    positions = _value_positions(text)

    def fail(msg, path=()):
        off = None
        while off is None and path is not None:
            off = positions.get(path)
            path = path[:-1] if path else None
        if off is None:
            raise DocumentError(msg)
        raise DocumentError(msg, *_line_col(text, off))

    def is_int(x):
        return isinstance(x, int) and not isinstance(x, bool)

    if not isinstance(obj, dict):
        fail("top level must be an object")
    unknown = [k for k in obj if k not in TOP_KEYS]
    if unknown:
        fail(f"unknown field {unknown[0]!r}", (unknown[0],))
    missing = [k for k in TOP_KEYS if k != "metadata" and k not in obj]
    if missing:
        fail(f"missing field {missing[0]!r}")

    name = obj["name"]
    if not isinstance(name, str):
        fail("name must be a string", ("name",))
    rank = obj["rank"]
    if not is_int(rank) or rank < 1:
        fail("rank must be a positive integer", ("rank",))
    labels = obj["labels"]
    if not isinstance(labels, list) or len(labels) != rank:
        fail(f"labels must be a list of {rank} strings", ("labels",))
    for i, lab in enumerate(labels):
        if not isinstance(lab, str):
            fail("labels must be strings", ("labels", i))
        if labels.index(lab) != i:
            fail(f"repeated label {lab!r}", ("labels", i))
    unit = obj["unit"]
    if not is_int(unit) or not 0 <= unit < rank:
        fail(f"unit must be an index in [0, {rank})", ("unit",))
    dual = obj["dual"]
    if not isinstance(dual, list) or len(dual) != rank:
        fail(f"dual must be a list of {rank} indices", ("dual",))
    for i, d in enumerate(dual):
        if not is_int(d) or not 0 <= d < rank:
            fail(f"dual entry {d!r} out of range [0, {rank})", ("dual", i))
    if sorted(dual) != list(range(rank)):
        fail("dual is not a permutation", ("dual",))

    fusion = obj["fusion"]
    if not isinstance(fusion, list):
        fail("fusion must be a list of [p, q, r, m] quadruples", ("fusion",))
    seen: dict[tuple[int, int, int], int] = {}
    quads = []
    for i, entry in enumerate(fusion):
        where = ("fusion", i)
        if not isinstance(entry, list) or len(entry) != 4 or not all(is_int(x) for x in entry):
            fail(f"fusion entry {i} must be a list of four integers", where)
        p, q, r, m = entry
        for k, x in enumerate((p, q, r)):
            if not 0 <= x < rank:
                fail(f"index {x} out of range [0, {rank}) in fusion entry {entry}", where + (k,))
        if m < 1:
            fail(f"multiplicity must be >= 1 in fusion entry {entry}", where + (3,))
        key = (min(p, q), max(p, q), r)
        if key in seen:
            fail(f"duplicate fusion entry for (p, q, r) = {key} (first at entry {seen[key]})", where)
        seen[key] = i
        quads.append(key + (m,))

    meta = obj.get("metadata", {})
    if not isinstance(meta, dict):
        fail("metadata must be an object", ("metadata",))
    for k, v in meta.items():
        where = ("metadata", k)
        if k not in META_KEYS:
            fail(f"unknown metadata field {k!r}", where)
        if k == "complete_below" and (not is_int(v) or v < 0):
            fail("complete_below must be a nonnegative integer", where)
        if k == "connected" and not isinstance(v, bool):
            fail("connected must be true or false", where)
        if k == "fs_indicators":
            if not isinstance(v, dict):
                fail("fs_indicators must be an object", where)
            for lab, kind in v.items():
                if lab not in labels:
                    fail(f"fs_indicators names unknown label {lab!r}", where + (lab,))
                if kind not in FS_VALUES:
                    fail(f"fs indicator must be one of {FS_VALUES}, got {kind!r}", where + (lab,))
    return RingDocument(name, rank, tuple(labels), unit, tuple(dual), tuple(sorted(quads)), dict(meta))


def serialize(doc: RingDocument) -> bytes:
    """Canonical bytes for ``doc``."""
    def dumps(x):
        return json.dumps(x, ensure_ascii=False)

    quads = sorted((min(p, q), max(p, q), r, m) for p, q, r, m in doc.fusion)
    lines = [
        "{",
        f'  "name": {dumps(doc.name)},',
        f'  "rank": {doc.rank},',
        f'  "labels": {dumps(list(doc.labels))},',
        f'  "unit": {doc.unit},',
        f'  "dual": {dumps(list(doc.dual))},',
    ]
    if quads:
        lines.append('  "fusion": [')
        lines += [f"    {dumps(list(q))}," for q in quads]
        lines[-1] = lines[-1][:-1]
        lines.append("  ],")
    else:
        lines.append('  "fusion": [],')
    meta = json.dumps(doc.metadata, ensure_ascii=False, sort_keys=True, indent=2)
    lines.append('  "metadata": ' + meta.replace("\n", "\n  "))
    lines.append("}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def load(path: str | Path) -> RingDocument:
    return parse(Path(path).read_bytes())


def dump(doc: RingDocument, path: str | Path) -> None:
    Path(path).write_bytes(serialize(doc))
