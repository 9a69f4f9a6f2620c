"""Regenerate the finite-group catalog documents and the oracle fact sheet.

    python tools/generate_catalog.py           # write files
    python tools/generate_catalog.py --check   # exit 1 if files are stale

Ring documents go to ``src/fusionscope/data/<name>.json``; group facts used by
the test-suite (center, abelianization, normal subgroups, character tables,
involution counts) go to ``tests/fixtures/group_facts.json``.
"""

import argparse
import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))
sys.path.insert(0, str(ROOT / "tools"))

import group_oracle  # noqa: E402
from fusionscope.document import RingDocument, serialize  # noqa: E402

DATA = ROOT / "src" / "fusionscope" / "data"
FACTS = ROOT / "tests" / "fixtures" / "group_facts.json"


def build():
    files = {}
    facts = {}
    for G in group_oracle.catalog_groups():
        data = group_oracle.fusion_data(G)
        doc = RingDocument(G.name, len(data["labels"]), tuple(data["labels"]), 0, tuple(data["dual"]),
                           tuple(tuple(e) for e in data["fusion"]),
                           {"fs_indicators": data["fs_indicators"]})
        files[DATA / f"{G.name}.json"] = serialize(doc)
        facts[G.name] = group_oracle.group_facts(G)
    files[FACTS] = (json.dumps(facts, indent=1, sort_keys=True) + "\n").encode()
    return files


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--check", action="store_true", help="only compare against the files on disk")
    args = ap.parse_args(argv)
    files = build()
    stale = [p for p, b in files.items() if not p.exists() or p.read_bytes() != b]
    if args.check:
        for p in stale:
            print(f"stale: {p.relative_to(ROOT)}")
        return 1 if stale else 0
    for p, b in files.items():
        p.parent.mkdir(parents=True, exist_ok=True)
        p.write_bytes(b)
        print(f"wrote {p.relative_to(ROOT)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
