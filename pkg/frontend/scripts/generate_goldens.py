#!/usr/bin/env python3
"""Regenerate the golden fixtures that pin the UI math to the CLI.

Runs the installed `ordifind` CLI on the bundled example context and records
its literal stdout for 20 scripted selections and for every object click, so
the vitest suite can compare byte for byte.

Usage: python3 scripts/generate_goldens.py
"""

import json
import random
import subprocess
import sys
import tempfile
from pathlib import Path

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"
N_SELECTIONS = 20


def cli(*args: str) -> str:
    result = subprocess.run(
        [sys.executable, "-m", "ordifind", *args],
        capture_output=True,
        text=True,
        check=True,
    )
    return result.stdout


def select_flag(vector: list[int]) -> str:
    return ",".join(f"f{i + 1}={p}" for i, p in enumerate(vector))


def main() -> None:
    from ordifind.data import socmed_path

    FIXTURES.mkdir(parents=True, exist_ok=True)
    with tempfile.TemporaryDirectory() as tmp:
        doc_path = Path(tmp) / "socmed.factors.json"
        cli("factorize", str(socmed_path()), "--out", str(doc_path))
        doc_bytes = doc_path.read_bytes()
        (FIXTURES / "socmed.factors.json").write_bytes(doc_bytes)

        doc = json.loads(doc_bytes)
        tick_counts = [len(f["ticks"]) for f in doc["factors"]]

        rng = random.Random(2024)
        selections = [[0] * len(tick_counts), list(tick_counts)]
        while len(selections) < N_SELECTIONS:
            selections.append([rng.randint(0, tc) for tc in tick_counts])

        golden_selections = []
        for vector in selections:
            stdout = cli("rank", str(doc_path), "--select", select_flag(vector))
            golden_selections.append({"vector": vector, "rank_output": stdout})

        golden_clicks = []
        for name in doc["objects"]:
            pos_out = cli("position", str(doc_path), "--object", name)
            positions = [int(line.split("\t")[1]) for line in pos_out.splitlines()]
            rank_out = cli("rank", str(doc_path), "--select", select_flag(positions))
            golden_clicks.append(
                {
                    "object": name,
                    "positions": positions,
                    "positions_output": pos_out,
                    "rank_output": rank_out,
                }
            )

    payload = {
        "tick_counts": tick_counts,
        "selections": golden_selections,
        "clicks": golden_clicks,
    }
    out = FIXTURES / "goldens.json"
    out.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {out} ({len(golden_selections)} selections, {len(golden_clicks)} clicks)")


if __name__ == "__main__":
    main()
