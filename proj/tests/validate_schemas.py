"""Runs every gpfield subcommand on small configs and validates the JSON
summary it prints against the schema files in the schemas directory."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

BASE = """
[run]
seed = 4

[grid]
dim = 2
N = 16
L = 6

[background]
type = constant

[nonlinearity]
kind = gross-pitaevskii

[perturbation]
type = gaussian
h1_norm = 0.1

[solver]
dt = 0.01
T = 0.1
snapshot_stride = 5

[strichartz]
steps = 5
num_fields = 3

[decompose]
cases = 5
"""


def run(binary, args):
    proc = subprocess.run([binary, *args], capture_output=True, text=True)
    return proc.returncode, json.loads(proc.stdout)


def main():
    binary, schema_dir = sys.argv[1], Path(sys.argv[2])
    schemas = {p.name.removesuffix(".schema.json"): json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)
        cfg = tmp / "run.ini"
        cfg.write_text(BASE)
        out = tmp / "out"
        cases = [(cmd, ["--config", str(cfg), "--out", str(out)])
                 for cmd in ["check-hypotheses", "evolve", "picard", "strichartz", "decompose-test", "convergence"]]
        cases.append(("energy", [str(out / "snapshots" / "w_00000010.gpf"), "--config", str(cfg)]))
        bad = tmp / "bad.gpf"
        bad.write_bytes(b"NOPE" + bytes(40))
        cases.append(("energy", [str(bad)]))
        bad_cfg = tmp / "bad.ini"
        bad_cfg.write_text(BASE.replace("dt = 0.01", "dt = 0.03"))
        cases.append(("evolve", ["--config", str(bad_cfg)]))

        for cmd, args in cases:
            code, doc = run(binary, [cmd, *args])
            schema = schemas["error" if doc.get("status") == "error" else cmd]
            try:
                jsonschema.validate(doc, schema)
                status = "ok"
            except jsonschema.ValidationError as e:
                failures += 1
                status = f"INVALID: {e.message}"
            if doc.get("exit_code") != code:
                failures += 1
                status += f" (exit code {code} != reported {doc.get('exit_code')})"
            print(f"{cmd:18s} exit={code} {status}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
