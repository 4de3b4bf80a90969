#!/usr/bin/env python3
"""Validate JSON documents against one of the shipped schemas.

usage: validate_schema.py SCHEMA DOC [DOC...]
SCHEMA is a file in schemas/ (cross-references resolve within that directory).
Exit 0 if every document validates, 1 otherwise, 2 on bad usage.
"""
import json
import pathlib
import sys

import jsonschema
from referencing import Registry, Resource


def registry(schema_dir):
    resources = []
    for p in sorted(schema_dir.glob("*.schema.json")):
        doc = json.loads(p.read_text())
        resources.append((doc["$id"], Resource.from_contents(doc)))
    return Registry().with_resources(resources)


def main(argv):
    if len(argv) < 3:
        print(__doc__.strip(), file=sys.stderr)
        return 2
    schema_path = pathlib.Path(argv[1])
    schema = json.loads(schema_path.read_text())
    validator = jsonschema.Draft202012Validator(schema, registry=registry(schema_path.parent))
    ok = True
    for name in argv[2:]:
        text = sys.stdin.read() if name == "-" else pathlib.Path(name).read_text()
        errors = sorted(validator.iter_errors(json.loads(text)), key=lambda e: list(e.path))
        for e in errors:
            where = "/".join(str(x) for x in e.absolute_path)
            print(f"{name}: {where or '(root)'}: {e.message}", file=sys.stderr)
        ok = ok and not errors
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main(sys.argv))
