#!/usr/bin/env python3
"""Verify a prepared gloss/text corpus against published reference numbers.

Expects the six-file layout ({train,dev,test}.{gloss,txt}).  For the two
corpora with built-in expectations this checks the train-split sizes and
the copy-source BLEU on the test split:

  phoenix  RWTH-PHOENIX-Weather 2014T: 7,096 train pairs,
           1,066 gloss / 2,887 spoken types, copy BLEU ~1.36
  ncslgr   NCSLGR: copy BLEU ~1.5

Exit code 0 when every check passes, 1 otherwise.
"""

import argparse
import sys
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO / "src"))

from glossaug.bleu import copy_baseline  # noqa: E402
from glossaug.corpus import Origin, read_lines, read_parallel  # noqa: E402
from glossaug.datasets import vocab_stats  # noqa: E402

EXPECTATIONS = {
    "phoenix": {"pairs": 7096, "gloss_types": 1066, "text_types": 2887, "copy_bleu": 1.36},
    "ncslgr": {"copy_bleu": 1.5},
}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--corpus", required=True, help="directory with the six-file layout")
    parser.add_argument("--name", choices=sorted(EXPECTATIONS) + ["custom"], default="custom")
    parser.add_argument("--bleu-tolerance", type=float, default=0.2)
    args = parser.parse_args()

    base = Path(args.corpus)
    expected = EXPECTATIONS.get(args.name, {})
    failures = []

    stats = vocab_stats(read_parallel(base, "train", Origin.REAL))
    print(f"train: {stats.pair_count} pairs, "
          f"{stats.gloss_types} gloss / {stats.text_types} text types")
    for key, attr in (("pairs", "pair_count"), ("gloss_types", "gloss_types"),
                      ("text_types", "text_types")):
        if key in expected and getattr(stats, attr) != expected[key]:
            failures.append(f"{key}: expected {expected[key]}, got {getattr(stats, attr)}")

    report = copy_baseline(read_lines(base / "test.gloss"), read_lines(base / "test.txt"))
    print(f"copy baseline on test: {report.score:.2f} BLEU "
          f"(BP {report.brevity_penalty:.3f}, {report.hyp_len}/{report.ref_len} tokens)")
    if "copy_bleu" in expected:
        if abs(report.score - expected["copy_bleu"]) > args.bleu_tolerance:
            failures.append(
                f"copy BLEU: expected {expected['copy_bleu']} "
                f"+/- {args.bleu_tolerance}, got {report.score:.2f}"
            )

    if failures:
        for failure in failures:
            print(f"FAIL {failure}", file=sys.stderr)
        return 1
    print("all checks passed" if expected else "no reference numbers for this corpus")
    return 0


if __name__ == "__main__":
    sys.exit(main())
