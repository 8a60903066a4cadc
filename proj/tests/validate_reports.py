"""Runs the semiid tool over a spread of inputs and validates every JSON
report against the schemas in schema/; also checks byte-stable output."""

import json
import pathlib
import subprocess
import sys

import jsonschema

tool = sys.argv[1]
schema_dir = pathlib.Path(sys.argv[2])

check_schema = json.loads((schema_dir / "check_report.schema.json").read_text())
closure_schema = json.loads((schema_dir / "closure_report.schema.json").read_text())

checks = [
    ["--monoid", "u", "--n", "3", "--semiring", "bool", "abab=abba"],
    ["--monoid", "u", "--n", "3", "--semiring", "nat", "abab=abba"],
    ["--monoid", "u", "--n", "4", "--semiring", "nat:2,3", "abab=abba"],
    ["--monoid", "ut", "--n", "2", "--semiring", "bool", "xy=yx"],
    ["--monoid", "ut", "--n", "2", "--semiring", "maxplus", "xyyx=yxxy"],
    ["--monoid", "ut", "--n", "2", "--semiring", "nat", "x=xx"],
    ["--monoid", "r", "--n", "3", "--semiring", "minplus01inf", "--spot-checks", "50", "abab=abba"],
    ["--monoid", "r", "--n", "4", "--semiring", "interval01", "abab=abba"],
    ["--monoid", "u", "--n", "2", "--semiring", "lattice:diamond", "x=xx"],
]
closures = [
    ["--family", "catalanU", "--n", "4"],
    ["--family", "gossip", "--n", "3"],
    ["--family", "doubleCatalan_S", "--n", "2", "--semiring", "minplus01inf"],
]

failures = 0


def run(args):
    proc = subprocess.run([tool] + args, capture_output=True, text=True)
    if proc.returncode not in (0, 1):
        raise RuntimeError(f"{args}: exit {proc.returncode}: {proc.stderr}")
    return proc.stdout


for args in checks:
    out = run(["check"] + args)
    try:
        jsonschema.validate(json.loads(out), check_schema)
    except jsonschema.ValidationError as e:
        failures += 1
        print(f"FAIL check {' '.join(args)}: {e.message}")
    stable = ["check", "--stable"] + args
    if run(stable) != run(stable):
        failures += 1
        print(f"FAIL unstable output for {' '.join(args)}")

for args in closures:
    out = run(["closure", "--format", "json"] + args)
    try:
        jsonschema.validate(json.loads(out), closure_schema)
    except jsonschema.ValidationError as e:
        failures += 1
        print(f"FAIL closure {' '.join(args)}: {e.message}")

print(f"{len(checks) + len(closures)} reports validated, {failures} failures")
sys.exit(1 if failures else 0)
