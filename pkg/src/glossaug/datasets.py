"""Dataset statistics, fraction subsampling, and curriculum construction.

The training curriculum has three stages: pretrain on synthetic pairs
only, a mixed stage drawing the same number of pairs from the synthetic
and the real side (sized by the real side, which is orders of magnitude
smaller), and finetune on real pairs only.  The real side may first be
cut to a fraction of its pairs to simulate lower-resource conditions.

Every sampling decision is reproducible from (data, fraction, seed).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .corpus import ParallelPair
from .seeding import mix64

STAGES = ("pretrain", "mixed", "finetune")
REAL_FRACTIONS = (0.01, 0.05, 0.25, 1.0)


@dataclass(frozen=True)
class VocabStats:
    pair_count: int
    gloss_types: int
    text_types: int

    def to_dict(self) -> dict:
        return {
            "pair_count": self.pair_count,
            "gloss_types": self.gloss_types,
            "text_types": self.text_types,
        }


def vocab_stats(pairs: Sequence[ParallelPair]) -> VocabStats:
    gloss_types: set[str] = set()
    text_types: set[str] = set()
    for p in pairs:
        gloss_types.update(p.gloss.glosses)
        text_types.update(p.text.split())
    return VocabStats(
        pair_count=len(pairs),
        gloss_types=len(gloss_types),
        text_types=len(text_types),
    )


def subsample_fraction(
    pairs: Sequence[ParallelPair], fraction: float, seed: int
) -> list[ParallelPair]:
    """Uniform sample without replacement of round(fraction * n) pairs,
    keeping the original relative order."""
    if not 0.0 < fraction <= 1.0:
        raise ValueError(f"fraction must be in (0, 1], got {fraction}")
    n = len(pairs)
    k = round(fraction * n)
    if k <= 0:
        raise ValueError(f"fraction {fraction} of {n} pairs rounds to an empty sample")
    if k == n:
        return list(pairs)
    rng = random.Random(seed)
    chosen = sorted(rng.sample(range(n), k))
    return [pairs[i] for i in chosen]


@dataclass(frozen=True)
class MixPlan:
    """One curriculum stage over a real and a synthetic dataset."""

    real: tuple[ParallelPair, ...]
    synthetic: tuple[ParallelPair, ...]
    stage: str
    fraction: float = 1.0
    seed: int = 0

    def __post_init__(self):
        if self.stage not in STAGES:
            raise ValueError(f"stage must be one of {STAGES}, got {self.stage!r}")
        if self.fraction not in REAL_FRACTIONS:
            raise ValueError(
                f"fraction must be one of {REAL_FRACTIONS}, got {self.fraction}"
            )


def build_stage(plan: MixPlan) -> list[ParallelPair]:
    """Materialize the training pairs of one curriculum stage.

    pretrain: all synthetic pairs.  finetune: the fraction-subsampled real
    pairs.  mixed: the fraction-subsampled real pairs plus an equal count
    sampled from the synthetic side, shuffled deterministically.
    """
    if plan.stage == "pretrain":
        if not plan.synthetic:
            raise ValueError("pretrain stage needs a non-empty synthetic dataset")
        return list(plan.synthetic)
    real_part = subsample_fraction(plan.real, plan.fraction, mix64(plan.seed, 1))
    if plan.stage == "finetune":
        return real_part
    # mixed: equal pair counts from each side, sized by the real side
    k = len(real_part)
    if len(plan.synthetic) < k:
        raise ValueError(
            f"mixed stage needs {k} synthetic pairs, corpus has {len(plan.synthetic)}"
        )
    rng = random.Random(mix64(plan.seed, 2))
    chosen = sorted(rng.sample(range(len(plan.synthetic)), k))
    mixed = real_part + [plan.synthetic[i] for i in chosen]
    random.Random(mix64(plan.seed, 3)).shuffle(mixed)
    return mixed
