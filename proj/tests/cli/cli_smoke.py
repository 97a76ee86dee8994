"""End-to-end checks of the diskcp executable."""

import json
import subprocess
import sys
import tempfile

EXE = sys.argv[1]
failures = []


def run(*args):
    p = subprocess.run([EXE, *args], capture_output=True, text=True)
    return p.returncode, p.stdout, p.stderr


def check(cond, what):
    if not cond:
        failures.append(what)


def close(a, b, tol=1e-12):
    return abs(a - b) <= tol


code, out, _ = run("classify", "--theta", "0", "--z0-re", "-0.5", "--z0-im", "0")
doc = json.loads(out)
check(code == 0 and doc["class"] == "hyperbolic", "classify hyperbolic")
check(doc["schema_version"] == 1, "schema version")
check([[round(v, 12) for v in p] for p in doc["fixed_points"]] == [[-1.0, 0.0], [1.0, 0.0]], "fixed points")

check(json.loads(run("classify", "--theta", "0", "--z0-re", "0", "--z0-im", "0")[1])["class"] == "identity",
      "classify identity")
check(json.loads(run("classify", "--theta", "0.25", "--z0-re", "0", "--z0-im", "0")[1])["class"] == "elliptic",
      "classify elliptic")

code, out, _ = run("orbit", "--theta", "0", "--z0-re", "-0.5", "--z0-im", "0", "--x", "0", "--range", "-2", "2")
pts = json.loads(out)["points"]
want = [-0.8, -0.5, 0.0, 0.5, 0.8]
check(code == 0 and all(close(p[0], w) and close(p[1], 0.0) for p, w in zip(pts, want)), "orbit example")

code, out, _ = run("rep-check", "--kind", "hyperbolic", "--x", "0.2i", "--N", "20")
check(code == 0 and json.loads(out)["table"][0]["covariance_residual"] < 1e-13, "rep-check residual")

code, out, err = run("rep-check", "--kind", "parabolic", "--x", "0", "--N-list", "5,10,20", "--verbose")
table = json.loads(out)["table"]
check(code == 0 and [r["N"] for r in table] == [5, 10, 20], "rep-check N list")
check("covariance" in err, "verbose summary on stderr")

with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
    json.dump({"model": "hyperbolic", "points": [{"kind": "orbit_class", "u": 0.3, "omega": [1, 0]}],
               "flags": []}, f)
    set_path = f.name
code, out, _ = run("spectrum-closure", "--model", "hyperbolic", "--in", set_path)
doc = json.loads(out)
check(code == 0 and doc["closure"]["flags"] == ["all_boundary_chars"], "spectrum closure flag")
check(doc["input_closed"] is False, "input not closed")

code, out, _ = run("classify", "--theta", "0", "--z0-re", "1.0", "--z0-im", "0")
check(code == 2 and json.loads(out)["error"]["code"] == "DomainError", "exit 2 on |z0| >= 1")
code, out, _ = run("classify", "--theta", "zero")
check(code == 3 and json.loads(out)["error"]["code"] == "ParseError", "exit 3 on bad number")
code, out, _ = run("orbit", "--x", "1+")
check(code == 3, "exit 3 on bad complex literal")
code, out, _ = run("rep-check", "--kind", "hyperbolic", "--theta", "0.25")
check(code == 1 and json.loads(out)["error"]["code"] == "KindMismatch", "module error object")

a = run("conjugacy", "--seed", "7", "--samples", "20")
b = run("conjugacy", "--seed", "7", "--samples", "20")
check(a == b and a[0] == 0, "byte-identical output for a fixed seed")
doc = json.loads(a[1])
check(doc["equivariance_residual"] < 1e-8 and doc["roundtrip_residual"] < 1e-7, "conjugacy residuals")

code, out, _ = run("symbol", "--a", "0.5")
doc = json.loads(out)
check(code == 0 and doc["plus"] == [{"n": 0, "c": [1.0, 0.0]}], "symbol of A")

code, out, _ = run("normal-form", "--theta", "0.1", "--z0-re", "0.5", "--z0-im", "0")
doc = json.loads(out)
check(code == 0 and doc["residual"] < 1e-9 and doc["invariant"]["kind"] == "hyperbolic", "normal form")

for f in failures:
    print("FAILED:", f)
print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
