"""Corpus-level BLEU over pre-tokenized (whitespace-split) text.

Modified n-gram precision up to order 4 with per-sentence clipping, the
usual brevity penalty, and no smoothing by default: any zero precision
zeroes the score.  ``smooth=True`` adds one to numerator and denominator
of orders 2..4 for tiny dev sets.

The copy baseline scores the source lines themselves against the
references, which quantifies how far plain lexical overlap carries.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

MAX_ORDER = 4


@dataclass(frozen=True)
class BleuReport:
    score: float
    precisions: tuple[float, float, float, float]
    brevity_penalty: float
    hyp_len: int
    ref_len: int
    smoothed: bool = False

    def to_dict(self) -> dict:
        return {
            "bleu": round(self.score, 4),
            "precisions": [round(p, 6) for p in self.precisions],
            "brevity_penalty": round(self.brevity_penalty, 6),
            "hyp_len": self.hyp_len,
            "ref_len": self.ref_len,
            "smoothed": self.smoothed,
        }


def _ngrams(tokens: Sequence[str], order: int) -> Counter:
    return Counter(
        tuple(tokens[i : i + order]) for i in range(len(tokens) - order + 1)
    )


def corpus_bleu(
    hyps: Sequence[str], refs: Sequence[str], smooth: bool = False
) -> BleuReport:
    if len(hyps) != len(refs):
        raise ValueError(f"hypothesis/reference counts differ ({len(hyps)} vs {len(refs)})")
    if not hyps:
        raise ValueError("cannot score an empty corpus")
    matches = [0] * MAX_ORDER
    totals = [0] * MAX_ORDER
    hyp_len = 0
    ref_len = 0
    for hyp, ref in zip(hyps, refs):
        hyp_tokens = hyp.split()
        ref_tokens = ref.split()
        hyp_len += len(hyp_tokens)
        ref_len += len(ref_tokens)
        for order in range(1, MAX_ORDER + 1):
            hyp_counts = _ngrams(hyp_tokens, order)
            if not hyp_counts:
                continue
            ref_counts = _ngrams(ref_tokens, order)
            totals[order - 1] += sum(hyp_counts.values())
            matches[order - 1] += sum(
                min(count, ref_counts[gram]) for gram, count in hyp_counts.items()
            )
    precisions = []
    for order in range(1, MAX_ORDER + 1):
        m, t = matches[order - 1], totals[order - 1]
        if smooth and order > 1:
            m, t = m + 1, t + 1
        precisions.append(m / t if t > 0 else 0.0)
    if hyp_len == 0:
        brevity_penalty = 0.0
    elif hyp_len < ref_len:
        brevity_penalty = math.exp(1.0 - ref_len / hyp_len)
    else:
        brevity_penalty = 1.0
    if any(p == 0.0 for p in precisions) or hyp_len == 0:
        score = 0.0
    else:
        score = brevity_penalty * math.exp(
            sum(math.log(p) for p in precisions) / MAX_ORDER
        ) * 100.0
    return BleuReport(
        score=score,
        precisions=tuple(precisions),
        brevity_penalty=brevity_penalty,
        hyp_len=hyp_len,
        ref_len=ref_len,
        smoothed=smooth,
    )


def copy_baseline(
    src_lines: Sequence[str], ref_lines: Sequence[str], smooth: bool = False
) -> BleuReport:
    """Score the source side verbatim against the references."""
    return corpus_bleu(src_lines, ref_lines, smooth=smooth)
