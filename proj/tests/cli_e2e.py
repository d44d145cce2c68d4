#!/usr/bin/env python3
"""End-to-end checks of the fermataudit CLI: subcommands, formats, output
files, exit codes, and byte determinism."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

BIN = sys.argv[1]
FAILURES = []


def run(*args, expect=0):
    proc = subprocess.run([BIN, *args], capture_output=True)
    if proc.returncode != expect:
        FAILURES.append(
            f"{' '.join(args)}: exit {proc.returncode}, expected {expect}; "
            f"stderr: {proc.stderr.decode(errors='replace')[:200]}"
        )
    return proc


def check(cond, message):
    if not cond:
        FAILURES.append(message)


def main():
    eps = "1/1000000000000"

    # instance: text format contains the claim lines.
    inst = run("instance", "--p", "3", "--u", "1/2", "--epsilon", eps)
    text = inst.stdout.decode()
    check("C5 fails" in text, "instance text is missing 'C5 fails'")
    check("C1 holds" in text, "instance text is missing 'C1 holds'")
    check("\r" not in text, "instance text contains CR characters")

    # instance: canonical JSON with the exact key set and no floats.
    inst_json = run("instance", "--p", "3", "--u", "1/2", "--epsilon", eps, "--format", "json")
    doc = json.loads(inst_json.stdout)
    check(
        list(doc.keys())
        == [
            "schema_version",
            "params",
            "polynomial",
            "descartes",
            "newton",
            "real_roots",
            "geometry",
            "vieta_product",
            "square_free_degree",
            "claims",
        ],
        f"unexpected top-level JSON keys: {list(doc.keys())}",
    )
    check(doc["params"]["u"] == "1/2", "u is not the canonical string 1/2")
    check("." not in inst_json.stdout.decode().replace("0.1.0", ""),
          "JSON output contains a floating-point literal")
    verdicts = {c["id"]: c["verdict"] for c in doc["claims"]}
    check(verdicts["C5"] == "fails" and verdicts["C8"] == "fails",
          f"unexpected verdicts: {verdicts}")
    check(all(verdicts[c] == "holds" for c in ["C1", "C2", "C3", "C4", "C6", "C7", "C9"]),
          f"unexpected verdicts: {verdicts}")

    # Determinism: two runs, identical bytes.
    again = run("instance", "--p", "3", "--u", "1/2", "--epsilon", eps, "--format", "json")
    check(again.stdout == inst_json.stdout, "instance JSON is not byte-deterministic")

    with tempfile.TemporaryDirectory() as tmp:
        # --out writes exactly the stdout bytes.
        out_file = Path(tmp) / "report.json"
        run("instance", "--p", "3", "--u", "1/2", "--epsilon", eps, "--format", "json",
            "--out", str(out_file))
        check(out_file.read_bytes() == inst_json.stdout, "--out file differs from stdout bytes")

        # grid --out writes one file per instance with stable names.
        grid_dir = Path(tmp) / "grid"
        run("grid", "--p", "3,5", "--u-count", "2", "--epsilon", eps, "--out", str(grid_dir))
        expected = {"p3_u1-3.json", "p3_u2-3.json", "p5_u1-3.json", "p5_u2-3.json"}
        actual = {p.name for p in grid_dir.iterdir()}
        check(actual == expected, f"grid files {actual} != {expected}")
        entry = json.loads((grid_dir / "p5_u2-3.json").read_text())
        check(entry["params"]["p"] == 5 and entry["params"]["u"] == "2/3",
              "grid entry file has wrong params")

    # grid to stdout is a JSON array, byte-deterministic across runs.
    grid1 = run("grid", "--p", "3", "--u-count", "2", "--epsilon", eps)
    grid2 = run("grid", "--p", "3", "--u-count", "2", "--epsilon", eps)
    check(grid1.stdout == grid2.stdout, "grid output is not byte-deterministic")
    entries = json.loads(grid1.stdout)
    check(len(entries) == 2, f"expected 2 grid entries, got {len(entries)}")

    # triple / search / reduce / diagonal.
    triple = run("triple", "--x", "6", "--y", "8", "--z", "9", "--p", "3")
    check(b"residual: 1/216" in triple.stdout, "triple residual missing")
    search = run("search", "--p", "3", "--max", "12", "--format", "json")
    sdoc = json.loads(search.stdout)
    check(sdoc["solutions"] == [], "search found spurious solutions")
    check([(m["x"], m["y"], m["z"], m["residual"]) for m in sdoc["near_misses"]]
          == [("6", "8", "9", "1"), ("9", "10", "12", "-1")],
          f"wrong near misses: {sdoc['near_misses']}")
    reduce_out = run("reduce", "--n", "100")
    check(reduce_out.stdout == b"reduce: n=100 p=5 q=20\n", "reduce output mismatch")
    diag = run("diagonal", "--n", "3", "--max", "100")
    check(b"hits: 0" in diag.stdout, "diagonal reported hits")

    # Exit codes: invalid parameters -> 2; missing required options -> 2.
    bad_u = run("instance", "--p", "3", "--u", "3/2", expect=2)
    check(b"error:" in bad_u.stderr, "stderr lacks an error message")
    run("instance", "--p", "4", "--u", "1/2", expect=2)
    run("instance", "--p", "3", expect=2)
    run("search", "--p", "3", "--max", "2", expect=2)
    run("reduce", "--n", "2", expect=2)
    run("nonsense", expect=2)
    run("--help", expect=0)

    if FAILURES:
        print("FAILED cli_e2e:")
        for f in FAILURES:
            print(" -", f)
        return 1
    print("cli_e2e: all checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
