"""End-to-end checks of the pd3 command line tool.

usage: cli_test.py PD3 SCHEMA CORPUS_DIR
"""

import json
import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

PD3, SCHEMA, CORPUS = sys.argv[1], Path(sys.argv[2]), Path(sys.argv[3])
failures = []


def run(*args):
    return subprocess.run([PD3, *args], capture_output=True, text=True, timeout=600)


def expect(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


schema = json.loads(SCHEMA.read_text())

full = run("verify", "--all", "-L", "3", "--format", "json", "--jobs", "4")
expect(full.returncode == 0, "verify --all exits 0")
report = json.loads(full.stdout)
try:
    jsonschema.validate(report, schema)
    expect(True, "report validates against the schema")
except jsonschema.ValidationError as e:
    expect(False, f"report validates against the schema: {e.message}")
expect(report["summary"] == {"total": 22, "pass": 20, "partial": 2, "fail": 0, "skip": 0},
       "summary is 20 PASS + 2 PARTIAL")
expect({r["id"]: r["status"] for r in report["results"]}["Y5"] == "PARTIAL(3)",
       "Y5 reports its radius")

one = run("verify", "--check", "X*", "--format", "json", "--deterministic")
two = run("verify", "--check", "X*", "--format", "json", "--deterministic")
expect(one.returncode == 0 and one.stdout == two.stdout, "deterministic json is byte-identical")
expect(len(json.loads(one.stdout)["results"]) == 8, "X* selects 8 checks")
jsonschema.validate(json.loads(one.stdout), schema)

empty = run("verify", "--check", "Q*", "--format", "json")
expect(empty.returncode == 0 and json.loads(empty.stdout)["results"] == [],
       "empty selection gives an empty report and exit 0")
expect(run("verify", "--check", "X99").returncode == 2, "unknown check exits 2")
expect(run("verify", "-L", "40").returncode == 2, "out-of-range radius exits 2")
expect(run("frobnicate").returncode == 2, "unknown subcommand exits 2")

text = run("verify", "--check", "X1", "--check", "H1")
expect(text.returncode == 0 and "summary: 2 checks, 2 PASS" in text.stdout, "text report")

with tempfile.TemporaryDirectory() as tmp:
    out = Path(tmp) / "report.json"
    r = run("verify", "--check", "X1", "--format", "json", "--out", str(out))
    expect(r.returncode == 0 and json.loads(out.read_text())["summary"]["pass"] == 1, "--out")

    bad = Path(tmp) / "corpus"
    shutil.copytree(CORPUS, bad)
    cycles = json.loads((bad / "cycles.json").read_text())
    cycles["psi"]["coords"][0] = "a + 1"
    (bad / "cycles.json").write_text(json.dumps(cycles))
    r = run("verify", "--check", "X2", "--corpus", str(bad))
    expect(r.returncode == 1 and "FAIL" in r.stdout, "tampered corpus fails X2 with exit 1")

    (bad / "bases.json").write_text("{")
    expect(run("verify", "--corpus", str(bad)).returncode == 2, "unreadable corpus exits 2")

    m = Path(tmp) / "m.json"
    m.write_text(json.dumps({"rows": [[2, 4], [6, 8]]}))
    snf = json.loads(run("snf", str(m)).stdout)
    expect(snf["D"] == [[2, 0], [0, 4]] and snf["rank"] == 2, "snf")

    p = Path(tmp) / "p.json"
    p.write_text(json.dumps({"generators": ["a", "b"], "relators": ["a^2", "a*b*a*b^-2"]}))
    fox = json.loads(run("fox", "--presentation", str(p)).stdout)
    expect(fox["differentials"][0]["rows"] == [["-1 + a", "-1 + b"]], "fox d1")

expect(run("normalize", "--group", "Pi", "c*b*a").stdout.strip() == "a*c^2*b^2", "normalize")
expect(run("normalize", "--group", "S3", "c").returncode == 2, "bad symbol exits 2")
expect("H3 = Z/6" in run("bar", "--group", "s3", "--degree", "3").stdout.replace("(S3)", ""),
       "bar S3")
hx = run("homology", "--complex", "x-universal").stdout.split("\n")
expect(hx[:4] == ["H0 = Z", "H1 = 0", "H2 = 0", "H3 = Z"], "homology of the universal cover")
expect("H1 = Z/3 + Z/3" in run("homology", "--complex", "y-double").stdout, "double cover")

sys.exit(1 if failures else 0)
