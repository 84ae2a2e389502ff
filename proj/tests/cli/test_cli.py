#!/usr/bin/env python3
"""End-to-end checks of the mclab command line: schemas, examples, determinism, errors.

usage: test_cli.py MCLAB_BINARY SCHEMA_DIR
"""
import csv
import io
import json
import os
import subprocess
import sys
import tempfile

BIN, SCHEMAS = sys.argv[1], sys.argv[2]

try:
    import jsonschema
except ImportError:  # validation is skipped, everything else still runs
    jsonschema = None

failures = []


def check(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def run(*args, env=None):
    e = dict(os.environ)
    e.pop("MCLAB_MAX_RANK", None)
    if env:
        e.update(env)
    p = subprocess.run([BIN, *args], capture_output=True, text=True, env=e)
    return p.returncode, p.stdout, p.stderr


def schema(name):
    with open(os.path.join(SCHEMAS, name + ".schema.json")) as f:
        return json.load(f)


def validates(doc, name):
    if jsonschema is None:
        return True
    try:
        jsonschema.validate(doc, schema(name))
        return True
    except jsonschema.ValidationError as e:
        print("     " + e.message[:200])
        return False


# ---- every subcommand validates against its schema ----
SAMPLES = [
    ("rootsys", ["rootsys", "A", "1"]),
    ("rootsys", ["rootsys", "A", "3"]),
    ("rootsys", ["rootsys", "C", "3"]),
    ("hess", ["hess", "A", "3"]),
    ("hess", ["hess", "C", "2", "--hessenberg", "a,b,a+b"]),
    ("mc", ["mc", "A", "2"]),
    ("mc", ["mc", "A", "3", "--hessenberg", "type-2"]),
    ("mc", ["mc", "C", "2", "--hessenberg", "a,b,a+b"]),
    ("mc", ["mc", "A", "3", "--hessenberg", "100,010,001", "--degree-bound", "3"]),
    ("polybasis", ["polybasis", "A", "3"]),
    ("polybasis", ["polybasis", "C", "2"]),
    ("hessdefs", ["hessdefs", "A", "3", "--H", " -1,1/2,-1/2,1", "--hessenberg", "type-2"]),
    ("hessdefs", ["hessdefs", "A", "2", "--H", "symbolic", "--hessenberg", "10,01"]),
    ("hessdefs", ["hessdefs", "C", "2", "--hessenberg", "a,b,a+b"]),
    ("selftest", ["selftest"]),
]
docs = {}
for name, args in SAMPLES:
    code, out, _ = run(*args)
    ok = code == 0
    doc = json.loads(out) if ok else None
    docs[" ".join(args)] = doc
    check(ok and validates(doc, name), f"schema {name}: {' '.join(args)}")

# ---- examples from the build contract ----
d = docs["rootsys A 3"]["result"]
check(d["num_positive"] == 6 and len(d["positive_roots"]) == 6, "rootsys A 3 lists 6 positive roots")
d = json.loads(run("rootsys", "C", "2")[1])
check(d["result"]["highest_root"] == "21", "rootsys C 2 lists 21 (2a+b) as omega")
check(docs["rootsys A 1"]["result"]["num_positive"] == 1, "rootsys A 1 has a single root")
d = docs["mc A 3 --hessenberg type-2"]["result"][0]
check(d["dimension"] == 9, "mc A 3 type-2 dimension 9")
check(d["normalizer"]["equality"] and d["normalizer"]["dim_q_mod_nC"] == 9, "mc A 3 type-2 normalizer equality")
d = docs["mc C 2 --hessenberg a,b,a+b"]["result"][0]
check(d["dimension"] == 8 and d["normalizer"]["dim_q_mod_nC"] == 6 and d["normalizer"]["dim_conjecture"] == 8,
      "mc C 2 a,b,a+b: dimension 8, normalizer 6, conjecture 8")
d = docs["hessdefs A 3 --H  -1,1/2,-1/2,1 --hessenberg type-2"]["result"][0]
check(d["equations"][0]["root"] == "111" and "z" in d["equations"][0]["polynomial"], "hessdefs prints the z-equation")
check(d["certificate"]["identity_holds"] and d["matrix_oracle_agrees"], "hessdefs certificate and matrix oracle")
d = docs["mc A 3 --hessenberg 100,010,001 --degree-bound 3"]["result"][0]
check(not d["stabilized"] and d["warnings"], "rank-one slices are flagged as not stabilized")
check(docs["selftest"]["result"]["all_pass"], "selftest passes")

# ---- determinism ----
for args in (["mc", "C", "2", "--hessenberg", "a,b,a+b"], ["hess", "A", "3", "--format", "csv"],
             ["polybasis", "A", "2", "--format", "pretty"], ["selftest", "--seed", "7"]):
    outs = {run(*args)[1] for _ in range(3)}
    check(len(outs) == 1, "byte-identical repeat runs: " + " ".join(args))

# ---- --out writes the same bytes ----
with tempfile.TemporaryDirectory() as tmp:
    path = os.path.join(tmp, "o.json")
    code, out, _ = run("rootsys", "C", "2", "--out", path)
    with open(path) as f:
        check(code == 0 and f.read() == run("rootsys", "C", "2")[1], "--out file equals stdout")

    # config round trip: feeding the emitted config back reproduces the output
    for args in (["mc", "C", "2", "--hessenberg", "a,b,a+b"], ["hessdefs", "A", "3", "--H", "paper"],
                 ["hess", "A", "2", "--format", "csv"]):
        code, out, _ = run(*[a for a in args if a not in ("--format", "csv")])
        cfg = json.loads(out)["config"]
        if "csv" in args:
            cfg["format"] = "csv"
        cpath = os.path.join(tmp, "cfg.json")
        with open(cpath, "w") as f:
            json.dump(cfg, f)
        check(run("--config", cpath)[1] == run(*args)[1], "config round trip: " + " ".join(args))
    bad = os.path.join(tmp, "bad.json")
    with open(bad, "w") as f:
        f.write("{\"command\": \"mc\"")
    code, out, _ = run("--config", bad)
    check(code == 3 and json.loads(out)["error"]["kind"] == "invalid_config", "malformed config -> exit 3")
    code, out, _ = run("--config", os.path.join(tmp, "missing.json"))
    check(code == 3 and json.loads(out)["error"]["kind"] == "io", "missing config -> exit 3 io")

# ---- CSV output parses ----
code, out, _ = run("hess", "A", "3", "--format", "csv")
rows = list(csv.reader(io.StringIO(out)))
check(code == 0 and len(rows) == 15 and rows[0][0] == "R", "hess csv: header plus 14 Hessenberg sets")
code, out, _ = run("hessdefs", "A", "3", "--hessenberg", "type-2", "--format", "csv")
rows = list(csv.reader(io.StringIO(out)))
check(code == 0 and any(r[0] == "jacobian" for r in rows), "hessdefs csv carries Jacobian entries")

# ---- errors ----
ERRORS = [
    (["hess", "A", "2", "--hessenberg", "11"], 3, "not_hessenberg"),
    (["hessdefs", "A", "2", "--H", "2,-1,-1", "--hessenberg", "10,01"], 3, "not_regular"),
    (["hessdefs", "A", "2", "--H", "1,1,1"], 3, "invalid_argument"),
    (["mc", "X", "2"], 3, "invalid_argument"),
    (["mc", "A", "2", "--chart", "nonsense"], 3, "invalid_argument"),
    (["hess", "A", "5"], 3, "invalid_argument"),
    (["rootsys"], 2, "usage"),
    (["rootsys", "A", "2", "--format", "xml"], 2, "usage"),
    ([], 2, "usage"),
]
for args, want, kind in ERRORS:
    code, out, err = run(*args)
    doc = json.loads(out) if out.strip() else {}
    check(code == want and doc.get("error", {}).get("kind") == kind and validates(doc, "error") and err,
          f"error exit {want} ({kind}): {' '.join(args) or '<none>'}")
code, out, _ = run("hess", "A", "5", env={"MCLAB_MAX_RANK": "5"})
check(code == 0 and len(json.loads(out)["result"]) == 132, "MCLAB_MAX_RANK=5 enumerates A5 (132 sets)")

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
