"""Validate every golden JSON record under a scenario directory against the report schema."""
import json
import pathlib
import sys

import jsonschema


def main() -> int:
    if len(sys.argv) != 3:
        print("usage: validate_goldens.py SCHEMA SCENARIO_DIR", file=sys.stderr)
        return 2
    schema = json.loads(pathlib.Path(sys.argv[1]).read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    goldens = sorted(pathlib.Path(sys.argv[2]).glob("*.jsonl"))
    if not goldens:
        print("no golden files found", file=sys.stderr)
        return 1
    failures = 0
    records = 0
    for path in goldens:
        for lineno, line in enumerate(path.read_text().splitlines(), start=1):
            records += 1
            for err in validator.iter_errors(json.loads(line)):
                failures += 1
                print(f"{path.name}:{lineno}: {err.message}")
    print(f"{records} records in {len(goldens)} files, {failures} schema violations")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
