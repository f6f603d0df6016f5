#!/usr/bin/env python3
"""Validate the JSON fixtures against docs/schemas."""
import json
import pathlib
import sys

import jsonschema

root = pathlib.Path(__file__).resolve().parent.parent
schemas = {p.name.split(".")[0]: json.loads(p.read_text()) for p in (root / "docs" / "schemas").glob("*.schema.json")}

# fixture -> schema; bad_pairing.json is well-formed JSON but has the wrong shape
# only semantically, so it is checked by the CLI tests instead
plan = {
    "kodaira.json": "degeneration",
    "odp_m3.json": "degeneration",
    "cycle3.json": "degeneration",
    "bad_pairing.json": "degeneration",
    "elliptic.json": "mhs",
    "tate3.json": "mhs",
    "kodaira_mhs.json": "mhs",
    "odp_input_m3.json": "odp-input",
    "odp_input_m4.json": "odp-input",
    "k3_hodge.json": "hodge-numbers",
    "lefschetz_schoen.json": "lefschetz-input",
}

failed = 0
for name, kind in sorted(plan.items()):
    doc = json.loads((root / "fixtures" / name).read_text())
    try:
        jsonschema.validate(doc, schemas[kind])
        print(f"ok   {name} ({kind})")
    except jsonschema.ValidationError as e:
        failed += 1
        print(f"FAIL {name} ({kind}): {e.message}")
missing = sorted(p.name for p in (root / "fixtures").glob("*.json") if p.name not in plan)
for name in missing:
    failed += 1
    print(f"FAIL {name}: no schema assigned")
sys.exit(1 if failed else 0)
