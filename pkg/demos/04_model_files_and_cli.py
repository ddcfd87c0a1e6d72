"""Declaring models as text and driving the command-line interface.

A model can bypass data fitting entirely: write the system down as a small
text file, one `var`, one rate equation and one role per variable.  The same
files feed the `prodfn` CLI, whose JSON/CSV output is deterministic and
round-trips losslessly between subcommands.
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

from prodfn import parse_model, render, to_model

MODEL_TEXT = """\
# exponential trends of the 1899-1922 indices
var L = 106.65;  dL/dt = 0.02549605 * L;  role labor L;
var K = 100.70;  dK/dt = 0.06472564 * K;  role capital K;
var Y = 106.08;  dY/dt = 0.03592651 * Y;  role output Y;
"""

# ---------------------------------------------------------------------------
# 1. Parse, inspect, serialize.  render() is the canonical writer: parsing
#    its output reproduces the ModelSpec object exactly.

spec = parse_model(MODEL_TEXT)
print("parsed variables:")
for v in spec.variables:
    print(f"  {v.name}: init = {v.init}, rate = {v.rate}")
print(f"roles: labor={spec.labor_var} capital={spec.capital_var} output={spec.output_var}")

assert parse_model(render(spec)) == spec
model = to_model(spec)
print(f"\nas a model: b = ({model.b1}, {model.b2}, {model.b3})")

# ---------------------------------------------------------------------------
# 2. The CLI on the same file.  Everything below shells out to `prodfn`
#    (via `python -m prodfn`, equivalent to the installed console script).


def prodfn(*args, expect=0):
    proc = subprocess.run(
        [sys.executable, "-m", "prodfn", *args], capture_output=True, text=True
    )
    assert proc.returncode == expect, proc.stderr
    return proc.stdout


with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)
    model_path = tmp / "model.txt"
    model_path.write_text(MODEL_TEXT)

    # derive the constant-returns Cobb-Douglas member (alpha defaults to it)
    derive_out = prodfn("derive", "--from-spec", str(model_path), "--family", "cobb-douglas")
    report = json.loads(derive_out)
    fn = report["function"]
    print("\nprodfn derive --family cobb-douglas:")
    print(f"  alpha = {report['alpha']:.10f}")
    print(f"  beta  = {fn['beta']:.10f}")
    print(f"  A     = {fn['A']:.6f}")
    print(f"  max relative deviation over 24y: {report['constancy']['max_relative_deviation']:.2e}")

    # feed the derived function back into an independent check
    fn_path = tmp / "fn.json"
    fn_path.write_text(derive_out)
    check_out = prodfn(
        "check",
        "--model", str(model_path),
        "--function", str(fn_path),
        "--grid", "0:24:0.5",
        "--table", str(tmp / "table.csv"),
    )
    print("\nprodfn check on the self-derived function:")
    print("  " + json.dumps(json.loads(check_out)["pass"]))
    print("  table head: " + (tmp / "table.csv").read_text().splitlines()[0])

    # trajectory table for plotting
    sim_out = prodfn("simulate", "--model", str(model_path), "--grid", "0:24:6")
    print("\nprodfn simulate --grid 0:24:6:")
    for line in sim_out.splitlines():
        print("  " + line)

    # a perturbed function fails the check, with exit code 1
    bent = json.loads(derive_out)["function"]
    bent["beta"] += 0.01
    bent_path = tmp / "bent.json"
    bent_path.write_text(json.dumps(bent))
    out = prodfn(
        "check",
        "--model", str(model_path),
        "--function", str(bent_path),
        "--grid", "0:24:0.5",
        expect=1,
    )
    dev = json.loads(out)["max_relative_deviation"]
    print(f"\nperturbed exponent is rejected: deviation = {dev:.3e}, exit code 1")
