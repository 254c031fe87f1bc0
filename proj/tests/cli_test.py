# Copyright 2026 The jetreduce Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exit codes, report schema and determinism of the jetreduce CLI."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

BIN = sys.argv[1]
SCHEMA = json.loads(Path(sys.argv[2]).read_text())
failures = []

SL2 = """signature 1 1
field A = [1 | 0]
field B = [x1 | 0]
field C = [x1^2 | 0]
"""

SPEC3 = """signature 3 3
maspec M 2p1
end
"""

BROKEN = """signature 2 2
field F = [1 + * x1, 0 | 0, 0]
"""


def run(*args):
    return subprocess.run([BIN, *args], capture_output=True, text=True, timeout=300)


def expect(name, args, code, check=None):
    p = run(*args)
    if p.returncode != code:
        failures.append(f"{name}: exit {p.returncode}, expected {code}\n{p.stderr}")
        return None
    if code in (0, 2) and "--format" not in args:
        try:
            report = json.loads(p.stdout)
            jsonschema.validate(report, SCHEMA)
        except (json.JSONDecodeError, jsonschema.ValidationError) as e:
            failures.append(f"{name}: invalid report: {e}")
            return None
        if report["verdict"] != ("ok" if code == 0 else "negative"):
            failures.append(f"{name}: verdict {report['verdict']} with exit {code}")
        if check:
            try:
                check(report)
            except AssertionError as e:
                failures.append(f"{name}: {e}")
        return report
    if code == 1 and not p.stderr.startswith("jetreduce") and "--help" not in p.stderr and "required" not in p.stderr:
        failures.append(f"{name}: diagnostic missing on stderr: {p.stderr!r}")
    return p


with tempfile.TemporaryDirectory() as tmp:
    sl2 = Path(tmp) / "sl2.session"
    sl2.write_text(SL2)
    spec3 = Path(tmp) / "spec3.session"
    spec3.write_text(SPEC3)
    broken = Path(tmp) / "broken.session"
    broken.write_text(BROKEN)

    S = ["--session", "ma1p1"]

    def bracket_is_zero(r):
        assert all(e == "0" for e in r["result"]["bracket"]["xi"]), r["result"]["bracket"]

    expect("bracket", [*S, "bracket", "X1", "X2"], 0, bracket_is_zero)
    expect("algebra", [*S, "check-algebra", "X1", "X2", "X3"], 0,
           lambda r: r["result"]["algebra"]["distribution_rank"] == 2 or (_ for _ in ()).throw(AssertionError("rank")))
    expect("algebra negative", ["--session", str(sl2), "check-algebra", "A", "B", "C"], 2)
    expect("symmetry", [*S, "check-symmetry", "MA", "X3"], 0)
    expect("symmetry negative", [*S, "check-symmetry", "MA", "Y3", "--mult-degree", "1"], 2)
    expect("canonical", [*S, "canonical", "X1", "X2", "X3"], 0)
    expect("canonical given", [*S, "canonical", "X1", "X2", "X3", "--transform", "CANON"], 0)

    def reached_done(r):
        assert r["result"]["reduction"]["reached"] == "done"

    expect("reduce", [*S, "reduce", "MA", "X1", "X2", "X3"], 0, reached_done)
    expect("reduce negative", [*S, "reduce", "MA", "Y1", "Y2", "Y3"], 2)
    expect("classify", [*S, "classify", "TARGET"], 0)
    expect("ma build", [*S, "ma", "build", "1p1", "WITNESS_SPEC"], 0)

    def forced_k1(r):
        assert r["result"]["forced"] == [{"unknown": "k1", "value": "-2"}], r["result"].get("forced")

    expect("ma conditions", [*S, "ma", "conditions", "1p1", "WITNESS_SPEC"], 0, forced_k1)

    def seven_hatted(r):
        assert len(r["result"]["report"]["hatted"]) == 7
        assert r["result"]["report"]["solved"] is False

    expect("ma conditions 2p1", ["--session", str(spec3), "ma", "conditions", "2p1", "M"], 0, seven_hatted)
    expect("ma von-karman", ["ma", "von-karman"], 0)
    expect("selftest pass", ["selftest", "--criteria", "1,2,9"], 0)
    expect("selftest fail", ["selftest", "--criteria", "5"], 2)

    expect("missing session", ["--session", str(Path(tmp) / "none.session"), "classify", "MA"], 1)
    expect("no session", ["classify", "MA"], 1)
    expect("unknown system", [*S, "classify", "NOPE"], 1)
    expect("dimension mismatch", [*S, "ma", "build", "2p1", "WITNESS_SPEC"], 1)
    p = expect("syntax error", ["--session", str(broken), "classify", "MA"], 1)
    if p is not None and "syntax error" not in p.stderr:
        failures.append(f"syntax error: stderr {p.stderr!r}")
    expect("bad format", [*S, "--format", "xml", "classify", "MA"], 1)
    expect("no subcommand", [], 1)

    text = run(*S, "--format", "text", "check-algebra", "X1", "X2", "X3")
    if text.returncode != 0 or not text.stdout.startswith("check-algebra: ok\n"):
        failures.append(f"text format: {text.stdout[:80]!r}")

    a = run(*S, "reduce", "MA", "X1", "X2", "X3").stdout
    b = run(*S, "reduce", "MA", "X1", "X2", "X3").stdout
    if a != b:
        failures.append("reduce output differs between runs")

for f in failures:
    print("FAIL", f)
print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
