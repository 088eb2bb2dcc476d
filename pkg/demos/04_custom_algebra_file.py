"""
Checking an algebra from a JSON file
====================================

so(3) with a rescaled basis, written out, read back and checked.
"""

import json
import tempfile

from twisted_rham.checks import run_checks
from twisted_rham.cli import main
from twisted_rham.spec_io import parse_algebra

doc = {
    "name": "so3_half",
    "dim": 3,
    "brackets": [
        {"i": 1, "j": 2, "k": 3, "value": "1/2"},
        {"i": 2, "j": 3, "k": 1, "value": "1/2"},
        {"i": 1, "j": 3, "k": 2, "value": "-1/2"},
    ],
}

spec = parse_algebra(json.dumps(doc))
report, code = run_checks(spec)
print(report.to_text())
print("exit code", code)

with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
    json.dump(doc, fh)

# the same through the command line, JSON report
main(["check", "--file", fh.name, "--report", "json", "--no-timing", "--s-values", "0,1/4"])

# floats are refused: rationals only
doc["brackets"][0]["value"] = 0.5
try:
    parse_algebra(json.dumps(doc))
except ValueError as exc:
    print("rejected:", exc)
