#!/usr/bin/env python3
"""Validate `zlab verify --json` output against docs/report.schema.json."""

import json
import subprocess
import sys

import jsonschema


def main() -> int:
    zlab, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as fh:
        schema = json.load(fh)

    runs = [
        ["verify", "--theorem", "small-groups", "--p", "3", "--json", "-"],
        ["verify", "--theorem", "A", "--k", "2", "--p", "2", "--n", "2", "--json", "-"],
        ["verify", "--theorem", "filtration", "--k", "2", "--p", "3", "--m", "3",
         "--json", "-"],
    ]
    for args in runs:
        out = subprocess.run([zlab] + args, capture_output=True, text=True, check=True)
        doc = json.loads(out.stdout)
        jsonschema.validate(doc, schema)
        print(f"ok: {' '.join(args)}")

    # suite output is an array of report documents
    out = subprocess.run(
        [zlab, "verify", "--theorem", "standard", "--json", "-"],
        capture_output=True, text=True, check=True)
    docs = json.loads(out.stdout)
    assert isinstance(docs, list) and len(docs) >= 16
    for doc in docs:
        jsonschema.validate(doc, schema)
    print(f"ok: standard suite array of {len(docs)} reports")
    return 0


if __name__ == "__main__":
    sys.exit(main())
