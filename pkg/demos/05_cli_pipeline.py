"""The command-line pipeline: gen -> build -> verify -> bench.

Everything here also works from a shell via the ``ftabfs`` entry point;
this script drives the same main() in-process and shows the exit codes
scripts can rely on (0 pass, 1 verification failure, 2 work-limit guard,
3 input error).
"""

import json
import tempfile
from pathlib import Path

from ftabfs.cli import main

tmp = Path(tempfile.mkdtemp(prefix="ftabfs-demo-"))
g = tmp / "g.edges"
h = tmp / "h.edges"

print("$ ftabfs gen --family gnp --n 60 --p 0.08 --seed 3 --out g.edges")
main(["gen", "--family", "gnp", "--n", "60", "--p", "0.08", "--seed", "3", "--out", str(g)])

print("$ ftabfs build --algo mult1 --graph g.edges --source 0 --out h.edges")
main(["build", "--algo", "mult1", "--graph", str(g), "--source", "0", "--out", str(h)])

print("$ ftabfs verify --graph g.edges --structure h.edges --source 0 --alpha 3 --beta 0 --f 1")
code = main(
    ["verify", "--graph", str(g), "--structure", str(h),
     "--source", "0", "--alpha", "3", "--beta", "0", "--f", "1"]
)
print(f"verify exit code: {code}")

print("$ ftabfs bench --spec sweep.json")
spec = tmp / "sweep.json"
spec.write_text(json.dumps({
    "sweeps": [
        {"family": "gnp", "ns": [40, 60, 80], "p": 0.1, "seed": 5, "algo": "mult1"},
        {"family": "gnp", "ns": [40, 60], "p": 0.1, "seed": 5, "algo": "add4"},
    ]
}))
main(["bench", "--spec", str(spec)])

print("$ ftabfs build --algo multf --f 2 ... with a tiny work limit")
code = main(["build", "--algo", "multf", "--f", "2", "--graph", str(g), "--work-limit", "100"])
print(f"guarded exit code: {code}")
