"""Run CLI subcommands and validate their JSON against tools/schemas."""
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

cli, root = sys.argv[1], pathlib.Path(sys.argv[2])
codes, schemas = root / "tools" / "codes", root / "tools" / "schemas"
fixture, ham = str(codes / "fixture_12_6_13.code"), str(codes / "hamming74.code")

with tempfile.TemporaryDirectory() as out:
    runs = [
        ("analyze", ["analyze", ham, "--json"]),
        ("analyze", ["analyze", str(codes / "ext_hamming84.code"), "--r", "4", "--json"]),
        ("bounds", ["bound", "--q", "16", "--k", "6", "--r", "3", "--d", "5", "--assume-mds-conjecture", "--json"]),
        ("bounds", ["bound", "--q", "8", "--d", "9", "--r", "2", "--k", "4", "--divisible", "--disjoint", "--json"]),
        ("bounds", ["bound", "--q", "2", "--n", "200", "--d", "3", "--json"]),
        ("normal_form", ["normal-form", fixture, "--out", out]),
        ("normal_form", ["normal-form", ham]),
        ("derivation", ["transform", fixture, "--kind", "ci", "--rows", "1,2", "--out", out]),
        ("derivation", ["transform", fixture, "--kind", "residual"]),
        ("derivation", ["transform", fixture, "--kind", "mds"]),
        ("pipeline", ["pipeline", fixture]),
        ("pipeline", ["pipeline", ham]),
        ("propagation", ["propagate", fixture, "--a", "2", "--out", out]),
        ("reduction", ["reduce", fixture]),
        ("search", ["search", "--q", "2", "--n", "8", "--k", "4", "--d", "4", "--r", "3", "--require-disjoint"]),
        ("search", ["search", "--q", "3", "--n", "6", "--k", "2", "--d", "4", "--r", "1", "--random", "50", "--seed", "4"]),
    ]
    failures = 0
    for name, args in runs:
        schema = json.loads((schemas / f"{name}.schema.json").read_text())
        proc = subprocess.run([cli, *args], capture_output=True, text=True)
        try:
            if proc.returncode != 0:
                raise RuntimeError(f"exit {proc.returncode}: {proc.stderr.strip()}")
            jsonschema.validate(json.loads(proc.stdout), schema)
            print(f"ok   {name}: {' '.join(args[:2])}")
        except Exception as e:  # noqa: BLE001
            failures += 1
            print(f"FAIL {name}: {' '.join(args)}\n     {e}")
    # Files written with --out parse back.
    for f in sorted(pathlib.Path(out).iterdir()):
        if f.suffix == ".code":
            proc = subprocess.run([cli, "analyze", str(f), "--json"], capture_output=True, text=True)
            ok = proc.returncode == 0
            failures += not ok
            print(f"{'ok  ' if ok else 'FAIL'} reparse {f.name}")
sys.exit(1 if failures else 0)
