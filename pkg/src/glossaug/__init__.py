"""glossaug: pseudo-parallel sign-gloss/text corpus synthesis and tooling."""

__version__ = "0.1.0"

from .bleu import BleuReport, copy_baseline, corpus_bleu
from .bpe import BpeModel, bpe_apply, bpe_decode, bpe_learn, load_merges, save_merges
from .corpus import (
    AnnotatedSentence,
    ConlluParseError,
    GlossSequence,
    Origin,
    ParallelPair,
    Token,
    iter_conllu,
    parse_conllu,
    read_parallel,
    serialize_conllu,
    write_parallel,
)
from .datasets import MixPlan, VocabStats, build_stage, subsample_fraction, vocab_stats
from .general_rules import (
    AugmentConfig,
    augment_general,
    bounded_permutation,
    lemma_project,
    pos_filter,
    random_drop,
)
from .similarity import (
    SimilarityReport,
    TypeSet,
    build_type_set,
    compare_corpora,
    load_feature_table,
    syntactic_similarity,
    word_overlap,
)
from .specific_rules import (
    ClauseTriplet,
    augment_specific,
    compound_head,
    find_svo_triplets,
    front_tokens,
    negation_to_end,
    svo_to_sov,
)

__all__ = [
    "AnnotatedSentence",
    "AugmentConfig",
    "BleuReport",
    "BpeModel",
    "ClauseTriplet",
    "ConlluParseError",
    "GlossSequence",
    "MixPlan",
    "Origin",
    "ParallelPair",
    "SimilarityReport",
    "Token",
    "TypeSet",
    "VocabStats",
    "augment_general",
    "augment_specific",
    "bounded_permutation",
    "bpe_apply",
    "bpe_decode",
    "bpe_learn",
    "build_stage",
    "build_type_set",
    "compare_corpora",
    "compound_head",
    "copy_baseline",
    "corpus_bleu",
    "find_svo_triplets",
    "front_tokens",
    "iter_conllu",
    "lemma_project",
    "load_feature_table",
    "load_merges",
    "negation_to_end",
    "parse_conllu",
    "pos_filter",
    "random_drop",
    "read_parallel",
    "save_merges",
    "serialize_conllu",
    "subsample_fraction",
    "svo_to_sov",
    "syntactic_similarity",
    "vocab_stats",
    "word_overlap",
    "write_parallel",
]
