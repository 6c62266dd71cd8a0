"""Runs the grk binary end to end: exit codes, golden bytes, and schema validation."""
import json
import os
import subprocess
import sys
import tempfile

import jsonschema

grk, root = sys.argv[1], sys.argv[2]
failures = []


def run(*args, env=None):
    full = {k: v for k, v in os.environ.items() if k != "GRK_DATUM"}
    full.update(env or {})
    return subprocess.run([grk, *args], capture_output=True, text=True, env=full)


def expect(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def validate(text, what):
    doc = json.loads(text)
    path = os.path.join(root, doc["$schema"])
    with open(path) as f:
        schema = json.load(f)
    try:
        jsonschema.validate(doc, schema)
        expect(True, what + " matches " + doc["$schema"])
    except jsonschema.ValidationError as e:
        expect(False, what + ": " + e.message)
    expect(text == json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False) + "\n",
           what + " is canonical")


with open(os.path.join(root, "tests/golden/toda_sl2_q1.json")) as f:
    golden = f.read()
r = run("toda", "--n", "2", "--q", "1")
expect(r.returncode == 0 and r.stdout == golden, "toda --n 2 --q 1 equals the golden file")
validate(r.stdout, "toda --n 2 --q 1")

r = run("suite", "--type", "A", "--rank", "1")
expect(r.returncode == 0, "suite --type A --rank 1 exits 0")
validate(r.stdout, "suite")

r = run("length", "--word", "1,0", "--type", "A", "--rank", "1")
expect(r.returncode == 0 and r.stdout.strip() == "2", "length --word 1,0 prints 2")

with tempfile.TemporaryDirectory() as tmp:
    def image(word, name):
        r = run("image", "--type", "A", "--rank", "2", "--word", word)
        validate(r.stdout, "image " + word)
        p = os.path.join(tmp, name)
        with open(p, "w") as f:
            f.write(r.stdout)
        return p

    x, p = image("xi1 phi2", "x.json"), image("phi1", "p.json")
    r = run("mul", "--lhs", x, "--rhs", p)
    expect(r.returncode == 0, "mul exits 0")
    validate(r.stdout, "mul")
    r = run("decompose", "--type", "A", "--rank", "2", "--target", x, "--levi", "1,2", "--box", "2")
    expect(r.returncode == 0 and json.loads(r.stdout)["feasible"], "decompose xi1 phi2 is feasible")
    validate(r.stdout, "decompose")
    bad = os.path.join(tmp, "bad.json")
    with open(bad, "w") as f:
        f.write("{bad")
    r = run("mul", "--lhs", bad, "--rhs", p)
    expect(r.returncode == 2 and "byte" in r.stderr, "malformed JSON exits 2 with a location")

r = run("character", "--type", "B", "--rank", "2", "--weight", "1,1")
validate(r.stdout, "character")
r = run("character", "--type", "A", "--rank", "2", "--weight", "-1,0")
expect(r.returncode == 2, "non-dominant weight exits 2")
for kind, lhs, rhs in [("bruhat", "1", "1,0"), ("semiinf", "1", "e")]:
    r = run("order", "--kind", kind, "--lhs", lhs, "--rhs", rhs, "--type", "A", "--rank", "1")
    validate(r.stdout, "order " + kind)
r = run("relations", "--type", "G", "--rank", "2")
expect(r.returncode == 0, "relations G2 exits 0")
validate(r.stdout, "relations")
r = run("chain", "--type", "A", "--rank", "2", "--from", "1,2", "--to", "1", "--samples", "5")
expect(r.returncode == 0, "chain A2 exits 0")
validate(r.stdout, "chain")
r = run("relations", env={"GRK_DATUM": "A1xA1+T1"})
expect(r.returncode == 0 and json.loads(r.stdout)["datum"] == "A1xA1+T1", "GRK_DATUM selects the datum")
with tempfile.TemporaryDirectory() as tmp:
    cfg = {"factors": ["A1", {"type": "A", "rank": 2}], "central": 1}
    with open(os.path.join(root, "docs/schemas/datum.schema.json")) as f:
        jsonschema.validate(cfg, json.load(f))
    path = os.path.join(tmp, "datum.json")
    with open(path, "w") as f:
        json.dump(cfg, f)
    r = run("relations", "--config", path)
    expect(r.returncode == 0 and json.loads(r.stdout)["datum"] == "A1xA2+T1", "--config selects the datum")
r = run("relations", "--no-such-flag")
expect(r.returncode == 64, "unknown flag exits 64")

sys.exit(1 if failures else 0)
