"""Runs the CLI in JSON mode and validates every document against docs/tetrabox.schema.json.

Each command runs twice; the two outputs must be byte-identical.
"""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema

CASES = [
    ("loop", 0, ["bracket", "x12", "x03"]),
    ("value", 0, ["eval", "x*(2*t-1) + y/t"]),
    ("value", 0, ["eval", "(t^2 + 1)/(t - 1)^2"]),
    ("value", 0, ["prime", "--times", "2", "x03"]),
    ("coords", 0, ["coords", "--basis", "xyz", "a2"]),
    ("coords", 0, ["coords", "--basis", "ab", "--prime", "1", "a7'"]),
    ("coords", 0, ["coords", "--basis", "delta", "--prime", "2", "X3'' - 1/2*Z1''"]),
    ("not_in_subalgebra", 1, ["coords", "x/t + y*t^2"]),
    ("grid", 0, ["decompose", "x*t^-2 + y*(t-1)^-3 + z*t^5"]),
    ("expansion", 0, ["expand", "1/(t^2*(t-1))"]),
    ("loop_expansion", 0, ["expand", "x/t + z*(t-1)^-2"]),
    ("like", 0, ["like", "x03", "y*t + z*(t-1)"]),
    ("like", 1, ["like", "x12", "y"]),
    ("report", 0, ["verify", "--suite", "tetra"]),
    ("report", 0, ["verify", "--suite", "operators", "--max", "10"]),
]


def run(binary, args):
    return subprocess.run([binary, "--format", "json", *args], capture_output=True, check=False)


def main():
    binary, schema_path = sys.argv[1], Path(sys.argv[2])
    schema = json.loads(schema_path.read_text(encoding="utf-8"))
    failures = 0
    for definition, want_code, args in CASES:
        first = run(binary, args)
        second = run(binary, args)
        label = " ".join(args)
        if first.returncode != want_code:
            print(f"FAIL {label}: exit {first.returncode}, wanted {want_code}")
            failures += 1
            continue
        if first.stdout != second.stdout:
            print(f"FAIL {label}: output differs between runs")
            failures += 1
            continue
        document = json.loads(first.stdout.decode("utf-8"))
        wrapper = {"$ref": f"#/$defs/{definition}", "$defs": schema["$defs"]}
        try:
            jsonschema.validate(document, wrapper, cls=jsonschema.Draft202012Validator)
        except jsonschema.ValidationError as err:
            print(f"FAIL {label}: {err.message}")
            failures += 1
            continue
        print(f"ok   {label} [{definition}]")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
