#!/usr/bin/env python3
"""End-to-end walkthrough on the bundled fixture corpus.

Synthesizes gloss/text pairs with both rule systems, samples extra
general-rule variants as a stand-in for a large monolingual corpus,
builds the three curriculum stages, learns and applies BPE, and prints
vocabulary statistics plus the gloss/text similarity report.  Everything
goes through the glossaug CLI so each output directory carries a
reproducible manifest.
"""

import argparse
import json
import sys
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO / "src"))

from glossaug.cli import main as glossaug  # noqa: E402
from glossaug.corpus import Origin, parse_conllu, read_parallel, write_parallel  # noqa: E402
from glossaug.general_rules import AugmentConfig, augment_general  # noqa: E402
from glossaug.corpus import GlossSequence, ParallelPair  # noqa: E402


def run(*argv):
    code = glossaug([str(a) for a in argv])
    if code != 0:
        raise SystemExit(f"step failed ({code}): {' '.join(str(a) for a in argv)}")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--corpus", default=str(REPO / "tests/data/weather_de.conllu"))
    parser.add_argument("--out", default="demo_out")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--variants", type=int, default=40,
                        help="re-seeded general-rule samples per sentence")
    args = parser.parse_args()
    out = Path(args.out)

    # 1. both rule systems over the annotated corpus
    run("augment-specific", "--in", args.corpus, "--out", out / "real", "--seed", args.seed)
    run("augment-general", "--in", args.corpus, "--out", out / "synthetic",
        "--seed", args.seed)

    # 2. grow the synthetic side by re-seeding, mimicking a big monolingual crawl
    sentences = parse_conllu(Path(args.corpus).read_text(encoding="utf-8"))
    synthetic = list(read_parallel(out / "synthetic", "train", Origin.SYNTHETIC_GENERAL))
    for variant in range(1, args.variants):
        cfg = AugmentConfig(seed=args.seed + variant)
        for ordinal, sentence in enumerate(sentences):
            seq = augment_general(sentence, cfg, ordinal)
            if seq is not None:
                synthetic.append(
                    ParallelPair(gloss=seq, text=sentence.text(),
                                 origin=Origin.SYNTHETIC_GENERAL)
                )
    write_parallel(synthetic, out / "synthetic", "train")
    # the toy "real" corpus reuses its train split for dev/test
    for split in ("dev", "test"):
        real = read_parallel(out / "real", "train", Origin.REAL)
        write_parallel(real, out / "real", split)

    # 3. curriculum stages
    run("mix", "--real", out / "real", "--synthetic", out / "synthetic",
        "--out", out / "stages", "--seed", args.seed)

    # 4. subword segmentation of the pretrain stage
    run("bpe-learn", "--in", out / "stages/pretrain/train.gloss",
        "--in", out / "stages/pretrain/train.txt", "--merges", "200",
        "--out", out / "bpe")
    for side in ("gloss", "txt"):
        run("bpe-apply", "--codes", out / "bpe/bpe.codes",
            "--in", out / f"stages/pretrain/train.{side}", "--out", out / "bpe")

    # 5. reports
    print("\n--- vocabulary statistics (synthetic train) ---")
    run("stats", "--in", out / "synthetic", "--split", "train")
    print("\n--- gloss/text similarity ---")
    run("similarity", "--a", out / "synthetic/train.gloss",
        "--b", out / "synthetic/train.txt", "--a-tag", "gloss", "--b-tag", "text")
    print("\n--- copy baseline (gloss as hypothesis) ---")
    run("bleu", "--hyp", out / "real/test.gloss", "--ref", out / "real/test.txt",
        "--copy-baseline")

    manifest = json.loads((out / "stages/mixed/manifest.json").read_text(encoding="utf-8"))
    print("\nmixed-stage origins:", manifest["train_origins"])
    print(f"\ndone; outputs under {out}/")
    return 0


if __name__ == "__main__":
    sys.exit(main())
