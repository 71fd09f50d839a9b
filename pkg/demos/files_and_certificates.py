"""
Instance files, digests and verification certificates
=====================================================

The command line writes instances to JSON and emits certificates whose
input_digest pins them to the exact file they were computed from.  The
same flow is scriptable; everything here runs in a temp directory.
"""

import json
import tempfile
from pathlib import Path

from ryserplanes import file_digest, load_certificate, load_hypergraph
from ryserplanes.cli import main

tmp = Path(tempfile.mkdtemp())
instance = tmp / "h1_32.json"
cert = tmp / "h1_32.cert.json"

code = main(["build", "--family", "h1", "--q", "3", "--out", str(instance)])
print("build exit code:", code)

h, meta = load_hypergraph(instance)
print("reloaded:", h.r, "sides,", len(h.edges), "edges, family", meta["family"])

code = main(["verify", "--in", str(instance), "--expect-nu", "2",
             "--expect-tau", "6", "--cert", str(cert)])
print("verify exit code:", code)

payload = load_certificate(cert)
print("certificate claim:", payload["claim"])
print("values:", json.dumps(payload["values"], sort_keys=True))
print("digest matches file:", payload["input_digest"] == file_digest(instance))

# decompose exit codes are contractual: 0 none, 2 pair found, 3 cap hit
code = main(["decompose", "--in", str(instance)])
print("decompose exit code:", code)
