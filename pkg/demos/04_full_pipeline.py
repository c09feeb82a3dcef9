#!/usr/bin/env python3
"""End-to-end run writing every artifact, equivalent to:

    implicanet pipeline --paper-data --seed 42 --out out/

The emitted files are byte-stable: rerunning with the same configuration
reproduces them exactly.
"""

from pathlib import Path

from implicanet.cli import main

out = Path("out")
code = main(["pipeline", "--paper-data", "--seed", "42", "--out", str(out)])
print("exit status:", code)

for path in sorted(out.iterdir()):
    print(f"\n=== {path.name} ({path.stat().st_size} bytes) ===")
    text = path.read_text()
    head = text.splitlines()[:6]
    print("\n".join(head))
    if len(text.splitlines()) > 6:
        print("...")
