"""Cross-corpus similarity measures.

Lexical similarity is word overlap over corpus type sets,
``|T1 & T2| / (|T1| + |T2|)``, which tops out at 0.5 for identical
vocabularies.  Syntactic similarity is the cosine similarity between two
typological feature vectors, computed over the coordinates where both
sides have a value (missing entries are excluded pairwise).

Feature vectors come from a tab-separated table: header row, one language
per row, first column the language tag, remaining columns numeric with
``--`` for missing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence


@dataclass(frozen=True)
class TypeSet:
    language_tag: str
    types: frozenset[str]
    token_count: int


@dataclass(frozen=True)
class SimilarityReport:
    pair: tuple[str, str]
    word_overlap: Fraction
    syntactic: float | None

    def to_dict(self) -> dict:
        return {
            "pair": list(self.pair),
            "word_overlap": float(self.word_overlap),
            "word_overlap_exact": f"{self.word_overlap.numerator}/{self.word_overlap.denominator}",
            "syntactic_similarity": self.syntactic,
        }


def build_type_set(
    tokens: Iterable[str], casefold: bool = True, language_tag: str = ""
) -> TypeSet:
    types = set()
    count = 0
    for tok in tokens:
        count += 1
        types.add(tok.lower() if casefold else tok)
    return TypeSet(language_tag=language_tag, types=frozenset(types), token_count=count)


def word_overlap(a: TypeSet, b: TypeSet) -> Fraction:
    """Shared-type ratio |A & B| / (|A| + |B|), exact."""
    if not a.types or not b.types:
        raise ValueError("word overlap is undefined for an empty type set")
    return Fraction(len(a.types & b.types), len(a.types) + len(b.types))


def syntactic_similarity(
    fa: Sequence[float | None], fb: Sequence[float | None]
) -> float:
    """Cosine similarity over jointly present coordinates, in [-1, 1]."""
    if len(fa) != len(fb):
        raise ValueError(f"feature vectors differ in length ({len(fa)} vs {len(fb)})")
    xs = [(x, y) for x, y in zip(fa, fb) if x is not None and y is not None]
    if not xs:
        raise ValueError("no jointly present feature coordinates")
    dot = sum(x * y for x, y in xs)
    norm_a = math.sqrt(sum(x * x for x, _ in xs))
    norm_b = math.sqrt(sum(y * y for _, y in xs))
    if norm_a == 0.0 or norm_b == 0.0:
        raise ValueError("zero-norm feature vector")
    return dot / (norm_a * norm_b)


def load_feature_table(path: Path | str) -> dict[str, list[float | None]]:
    with open(path, encoding="utf-8") as f:
        lines = [line.rstrip("\n") for line in f if line.strip()]
    if not lines:
        raise ValueError(f"empty feature table {path}")
    table: dict[str, list[float | None]] = {}
    width = len(lines[0].split("\t")) - 1
    for line in lines[1:]:
        cells = line.split("\t")
        if len(cells) != width + 1:
            raise ValueError(f"feature table row for {cells[0]!r} has {len(cells) - 1} values, expected {width}")
        table[cells[0]] = [None if c == "--" else float(c) for c in cells[1:]]
    return table


def compare_corpora(
    a_tokens: Iterable[str],
    b_tokens: Iterable[str],
    a_tag: str,
    b_tag: str,
    casefold: bool = True,
    features: dict[str, list[float | None]] | None = None,
) -> SimilarityReport:
    ts_a = build_type_set(a_tokens, casefold=casefold, language_tag=a_tag)
    ts_b = build_type_set(b_tokens, casefold=casefold, language_tag=b_tag)
    syntactic = None
    if features is not None:
        for tag in (a_tag, b_tag):
            if tag not in features:
                raise ValueError(f"language tag {tag!r} not in feature table")
        syntactic = syntactic_similarity(features[a_tag], features[b_tag])
    return SimilarityReport(
        pair=(a_tag, b_tag), word_overlap=word_overlap(ts_a, ts_b), syntactic=syntactic
    )
