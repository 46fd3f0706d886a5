"""Language-agnostic pseudo-gloss synthesis.

A spoken-language sentence becomes a gloss-like token sequence through
four composable steps, applied in this order:

1. keep only tokens from a configured part-of-speech set,
2. drop each remaining token independently with a fixed probability,
3. project every surviving token onto its lemma (optionally uppercased),
4. shuffle tokens under a hard displacement bound.

All randomness flows through one per-sentence RNG that is seeded from
``mix64(config.seed, sentence_ordinal)``: step 2 consumes one draw per
token in index order, then step 4 consumes one sort key per token.  The
same (sentence, config, ordinal) triple therefore always yields the same
gloss, no matter how the corpus is chunked across workers.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace

from .corpus import AnnotatedSentence, GlossSequence, renumber
from .seeding import stream_rng

DEFAULT_KEPT_POS = frozenset({"NOUN", "VERB", "ADJ", "ADV", "NUM"})
DEFAULT_NEGATION_LEMMAS = frozenset({"nicht", "nie", "niemals", "nichts", "kein"})

GENERAL_RULE_NAMES = (
    "pos_filter",
    "random_drop",
    "lemma_project",
    "bounded_permutation",
)


@dataclass(frozen=True)
class AugmentConfig:
    """Hyperparameters shared by both rule systems."""

    kept_pos: frozenset[str] = DEFAULT_KEPT_POS
    drop_prob: float = 0.2
    max_displacement: int = 4
    seed: int = 0
    casing: str = "upper"  # "upper" | "preserve"
    negation_lemmas: frozenset[str] = DEFAULT_NEGATION_LEMMAS

    def __post_init__(self):
        if not 0.0 <= self.drop_prob <= 1.0:
            raise ValueError(f"drop_prob must be in [0, 1], got {self.drop_prob}")
        if self.max_displacement < 0:
            raise ValueError(f"max_displacement must be >= 0, got {self.max_displacement}")
        if self.casing not in ("upper", "preserve"):
            raise ValueError(f"casing must be 'upper' or 'preserve', got {self.casing!r}")


def pos_filter(
    s: AnnotatedSentence,
    kept: frozenset[str] | set[str],
    exempt_lemmas: frozenset[str] | set[str] = frozenset(),
) -> AnnotatedSentence:
    """Keep tokens whose UPOS is in `kept`, preserving order.

    Tokens whose lemma is in `exempt_lemmas` survive regardless of POS
    (used to keep negation particles alive for the German rule system).
    Heads of survivors are renumbered; a removed governor becomes 0.
    """
    survivors = [
        t for t in s.tokens if t.upos in kept or t.lemma.lower() in exempt_lemmas
    ]
    return AnnotatedSentence(id=s.id, tokens=renumber(survivors))


def random_drop(s: AnnotatedSentence, drop_prob: float, rng: random.Random) -> AnnotatedSentence:
    """Remove each token independently with probability `drop_prob`.

    Exactly one draw is consumed per token, in index order, so the
    decision for token j never depends on tokens after j.
    """
    survivors = [t for t in s.tokens if not rng.random() < drop_prob]
    return AnnotatedSentence(id=s.id, tokens=renumber(survivors))


def lemma_project(s: AnnotatedSentence, casing: str = "upper") -> AnnotatedSentence:
    """Replace every form by its lemma, uppercased under the gloss convention."""
    projected = []
    for t in s.tokens:
        if not t.lemma:
            raise ValueError(f"empty lemma on token {t.index} ({t.form!r}) in sentence {s.id}")
        form = t.lemma.upper() if casing == "upper" else t.lemma
        projected.append(replace(t, form=form))
    return AnnotatedSentence(id=s.id, tokens=tuple(projected))


def bounded_permutation(
    s: AnnotatedSentence, max_displacement: int, rng: random.Random
) -> AnnotatedSentence:
    """Shuffle tokens so that no token moves more than `max_displacement` slots.

    Sampler: stable sort on keys ``i + u_i`` with ``u_i`` uniform in
    ``[0, max_displacement + 1)``.  Any two tokens more than
    `max_displacement` apart keep their relative order, which bounds every
    displacement by `max_displacement`; the sampler reaches every valid
    permutation, though not uniformly.
    """
    n = len(s.tokens)
    noise = [rng.random() * (max_displacement + 1) for _ in range(n)]
    order = sorted(range(n), key=lambda j: j + noise[j])
    return AnnotatedSentence(id=s.id, tokens=renumber([s.tokens[j] for j in order]))


def augment_general(
    s: AnnotatedSentence, cfg: AugmentConfig, ordinal: int = 0
) -> GlossSequence | None:
    """Run the four general rules on one sentence.

    `ordinal` is the sentence's position in its corpus; it selects the
    per-sentence random stream.  Returns None when nothing survives the
    filtering steps (the caller drops the pair).
    """
    rng = stream_rng(cfg.seed, ordinal)
    out = pos_filter(s, cfg.kept_pos)
    out = random_drop(out, cfg.drop_prob, rng)
    out = lemma_project(out, cfg.casing)
    out = bounded_permutation(out, cfg.max_displacement, rng)
    if not out.tokens:
        return None
    return GlossSequence(
        glosses=tuple(t.form for t in out.tokens),
        applied_rules=GENERAL_RULE_NAMES,
        source_id=s.id,
    )
