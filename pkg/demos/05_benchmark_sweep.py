"""A seeded benchmark sweep through the command-line interface.

Generates a few instances into a temporary directory, then runs
``labelvns bench`` over every (instance, variant, seed) triple and reads the
CSV back with the csv module.
"""
# %%
import csv
import io
import subprocess
import sys
import tempfile
from collections import defaultdict
from pathlib import Path

cli = [sys.executable, "-m", "labelvns"]
workdir = Path(tempfile.mkdtemp())
for seed in range(4):
    subprocess.run(cli + ["generate", "--nodes", "15", "--labels", "12", "--density", "0.25",
                          "--seed", str(seed), "--connected", "--out", str(workdir / f"inst{seed}.txt")],
                   check=True)

# %%
proc = subprocess.run(cli + ["bench", "--instances", str(workdir / "*.txt"), "--seeds", "0..4",
                             "--problem", "mlst", "--max-iter", "5", "--with-oracle", "--workers", "2"],
                      check=True, capture_output=True, text=True)
rows = list(csv.DictReader(io.StringIO(proc.stdout)))
print(f"{len(rows)} runs, columns: {list(rows[0])}")

# %%
matched = defaultdict(int)
for row in rows:
    matched[row["variant"]] += row["opt_match"] == "true"
for variant, count in sorted(matched.items()):
    print(f"{variant:7} matched the optimum in {count}/{len(rows) // len(matched)} runs")
