"""Runs the CLI, validates JSON payloads against schemas/ and checks golden values."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource

BIN = sys.argv[1]
ROOT = pathlib.Path(__file__).resolve().parent.parent
SCHEMAS = {p.name: json.loads(p.read_text()) for p in (ROOT / "schemas").glob("*.json")}
REGISTRY = Registry().with_resources((name, Resource.from_contents(s)) for name, s in SCHEMAS.items())

failures = []


def run(args, status=0):
    out = subprocess.run([BIN, *args], capture_output=True, text=True)
    if out.returncode != status:
        failures.append(f"{args}: exit {out.returncode}, wanted {status}: {out.stderr.strip()}")
    return out


def payload(args, status=0):
    first = run(args, status)
    again = run(args, status)
    if first.stdout != again.stdout:
        failures.append(f"{args}: output differs between runs")
    try:
        env = json.loads(first.stdout)
    except json.JSONDecodeError:
        failures.append(f"{args}: not JSON")
        return {}
    for name in ("envelope.schema.json", env["schema"].split("/")[1] + ".schema.json"):
        target = env if name == "envelope.schema.json" else env["payload"]
        try:
            jsonschema.Draft202012Validator(SCHEMAS[name], registry=REGISTRY).validate(target)
        except jsonschema.ValidationError as e:
            failures.append(f"{args}: {name}: {e.message}")
    return env["payload"]


def expect(args, key, value, status=0):
    p = payload(args, status)
    if p.get(key) != value:
        failures.append(f"{args}: {key} = {p.get(key)!r}, wanted {value!r}")


expect(["datum", "info", "A(1)_2"], "comarks", [1, 1, 1])
expect(["datum", "info", "A(2)_2"], "kappa", [2, 1])
expect(["coherence", "--datum", "A(1)_1", "--mu", "1,0", "--Y", "0,1", "--a", "1"], "h_Y", 3)
expect(["coherence", "--datum", "A(1)_1", "--mu", "1,0", "--Y", "0,1", "--a", "1"], "equal", True)
expect(["coherence", "--datum", "A(1)_2", "--mu", "1,0,0+1,1,0", "--Y", "0", "--a", "1"], "h", 9)
expect(["adm", "--datum", "A(1)_1", "--mu", "1,0"], "size", 3)
expect(["adm", "--datum", "A(1)_2", "--mu", "0,0,0", "--Y", "0", "--list"], "cosets", 1)
expect(["hpoly", "--datum", "A(1)_2", "--mu", "1,0,0", "--Y", "all", "--a", "1"], "h_Y", 10)
expect(["hpoly", "--datum", "A(1)_1", "--mu", "1,0", "--Y", "0,1", "--a", "1", "--emit-paths"], "h_Y", 3)
expect(["weyl", "length", "--datum", "A(1)_2", "--elt", "t[1,0]"], "length", 2)
expect(["weyl", "leq", "--datum", "A(1)_2", "--elt", "s0", "--than", "s0.s1"], "leq", True)
expect(["weyl", "word", "--datum", "C(1)_2", "--elt", "s0.s1.s0"], "text", "s0.s1.s0")
expect(["kottwitz", "--torus", "gm", "--q", "3", "--elt", "t^-1 + 1"], "kappa", -1)
expect(["kottwitz", "--torus", "norm1", "--q", "3", "--elt", "-1 + O(u^4)"], "kappa", -1)
expect(["kottwitz", "--torus", "un", "--q", "3", "--elt", "sign", "--n", "3"], "kappa", -1)
expect(["kottwitz", "--torus", "un", "--q", "5", "--elt", "0,0,1;0,1,0;1,0,0"], "kappa", -1)
expect(["kottwitz", "--torus", "un", "--q", "5", "--elt", "1,0,0;0,1,0;0,0,1"], "kappa", 1)
expect(["kottwitz", "--torus", "norm1", "--q", "5", "--samples", "12", "--seed", "9"], "violations", 0)
expect(["cells", "--group", "sl", "--n", "3", "--word", "s0.s1", "--q", "2"], "count", 4)
expect(["cells", "--group", "sl", "--n", "2", "--word", "s0.s1", "--q", "3", "--count-only"], "closure_count", 16)
expect(["cells", "--group", "su3", "--word", "s0.s1.s0", "--q", "3", "--count-only"], "count", 27)
expect(["fiber", "--n", "3", "--r", "1", "--q", "3", "--I", "0"], "contains_admissible", True)
expect(["fiber", "--n", "4", "--r", "1", "--q", "3", "--I", "2"], "contains_admissible", None)
expect(["datum", "info", str(ROOT / "data" / "G(1)_2.json")], "marks", [1, 2, 3])

# shipped data files match the built-in catalog
names = payload(["datum", "list"]).get("data", [])
for n in names:
    f = ROOT / "data" / f"{n}.json"
    if not f.exists():
        failures.append(f"data/{n}.json missing")
        continue
    shipped = json.loads(f.read_text())
    jsonschema.validate(shipped, SCHEMAS["datum.schema.json"])
    if payload(["datum", "info", n])["cartan"] != shipped["cartan"]:
        failures.append(f"data/{n}.json disagrees with the catalog")

# sweep: CSV by default, JSON on request, row order as in the config
with tempfile.NamedTemporaryFile("w", suffix=".txt", delete=False) as cfg:
    cfg.write("# datum mu Y a\nA(1)_2 1,1,0 0,2 1..2\nA(1)_1 1,0 all 1\nA(2)_2 1,0,0 every 1\n")
csv = run(["sweep", "--config", cfg.name]).stdout.splitlines()
if csv[0] != "datum,mu,Y,a,h_Y,h,equal" or len(csv) != 7:
    failures.append(f"sweep csv: {csv}")
rows = payload(["sweep", "--config", cfg.name, "--format", "json"]).get("rows", [])
if [r["datum"] for r in rows] != ["A(1)_2", "A(1)_2", "A(1)_1", "A(2)_2", "A(2)_2", "A(2)_2"]:
    failures.append("sweep row order")

# exit statuses
run([], 2)
run(["adm", "--datum", "A(1)_2"], 2)
run(["adm", "--datum", "X(9)_1", "--mu", "1"], 2)
run(["adm", "--datum", "A(1)_2", "--mu", "4,0,0", "--cap", "5"], 3)
run(["fiber", "--n", "4", "--r", "1", "--q", "3", "--I", "2'"], 2)
run(["cells", "--group", "sl", "--n", "2", "--word", "s0.s0", "--q", "2"], 2)
run(["kottwitz", "--torus", "norm1", "--q", "3", "--elt", "1 + u"], 2)

for f in failures:
    print("FAIL", f)
print(f"{'FAIL' if failures else 'PASS'}: cli checks, {len(failures)} failures")
sys.exit(1 if failures else 0)
