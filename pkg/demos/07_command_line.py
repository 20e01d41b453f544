"""
The command-line interface
==========================

Everything above is also reachable from the ``fusionchar`` command. Output
is canonical JSON on stdout; exit status 0 means every check passed, 1 a
failed check and 2 a usage or domain error.
"""

from __future__ import annotations

import json
import subprocess
import sys


def run(*args):
    cmd = [sys.executable, "-m", "fusionchar.cli", *args]
    out = subprocess.run(cmd, capture_output=True, text=True)
    print("$ fusionchar", " ".join(args), "->", out.returncode)
    return out


doc = json.loads(run("table", "--catalog", "s3-c3-p3").stdout)
print(doc["table"]["X"], doc["summary"])

doc = json.loads(run("verify", "--catalog", "a5-p2", "--ell", "3,5").stdout)
print({k: doc["summary"][k] for k in ("passed", "failed", "skipped", "det_abs_sq", "alpha")})

out = run("batch", "--jobs", "2")
print(out.stderr)

# mixing primes in a product is refused
print(run("product", "--catalog", "s3-c3-p3", "--catalog", "c2-inner").stderr.strip())
