import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from glossaug.bleu import copy_baseline, corpus_bleu

from oracles import bleu_oracle

REFS = [
    "morgen scheint die sonne im süden",
    "heute regnet es nicht",
    "am wochenende wird es kalt und windig",
]


def test_identical_corpora_score_hundred():
    report = corpus_bleu(REFS, REFS)
    assert report.score == pytest.approx(100.0, abs=1e-9)
    assert report.brevity_penalty == 1.0
    assert report.precisions == (1.0, 1.0, 1.0, 1.0)


def test_clipping_example():
    report = corpus_bleu(["the the the"], ["the cat"])
    assert report.precisions[0] == pytest.approx(1 / 3, abs=1e-9)
    assert report.precisions[1] == 0.0
    assert report.score == 0.0
    assert report.brevity_penalty == 1.0  # hyp longer than ref


def test_hand_worked_positive_example():
    # p1=5/6, p2=3/5, p3=2/4, p4=1/3, BP=1
    # score = 100 * (5/6 * 3/5 * 1/2 * 1/3) ** 0.25 = 100 * (1/12) ** 0.25
    report = corpus_bleu(["the cat sat on the mat"], ["the cat sat on a mat"])
    assert report.precisions == pytest.approx((5 / 6, 3 / 5, 1 / 2, 1 / 3), abs=1e-12)
    assert report.score == pytest.approx(100 * (1 / 12) ** 0.25, abs=1e-9)
    assert report.score == pytest.approx(53.728497, abs=1e-4)


def test_mismatched_line_counts_rejected():
    with pytest.raises(ValueError, match="counts differ"):
        corpus_bleu(["a"], ["a", "b"])
    with pytest.raises(ValueError, match="empty corpus"):
        corpus_bleu([], [])


def test_brevity_penalty_applies_only_to_short_hypotheses():
    short = corpus_bleu(["morgen scheint"], ["morgen scheint die sonne"])
    assert short.brevity_penalty == pytest.approx(2.718281828 ** (1 - 4 / 2), rel=1e-6)
    long = corpus_bleu(["morgen scheint die sonne hell"], ["morgen scheint die sonne"])
    assert long.brevity_penalty == 1.0


def test_out_of_vocabulary_hypotheses_score_zero():
    hyps = ["xxx yyy zzz qqq" for _ in REFS]
    assert corpus_bleu(hyps, REFS).score == 0.0


def test_empty_hypotheses_score_zero():
    report = corpus_bleu(["", ""], ["a b", "c d"])
    assert report.score == 0.0
    assert report.hyp_len == 0


def test_permutation_invariance_under_joint_reordering():
    hyps = ["morgen scheint die sonne hell", "heute regnet es stark", "es wird kalt"]
    base = corpus_bleu(hyps, REFS)
    order = [2, 0, 1]
    shuffled = corpus_bleu([hyps[i] for i in order], [REFS[i] for i in order])
    assert shuffled == base


def test_smoothing_rescues_tiny_corpora():
    hyps, refs = ["morgen regnet es"], ["morgen schneit es"]
    assert corpus_bleu(hyps, refs).score == 0.0
    smoothed = corpus_bleu(hyps, refs, smooth=True)
    assert 0.0 < smoothed.score < 100.0
    assert smoothed.smoothed


def test_copy_baseline_is_corpus_bleu_of_sources():
    src = ["MORGEN SONNE", "REGEN NICHT"]
    refs = ["morgen kommt die sonne", "kein regen heute"]
    assert copy_baseline(src, refs) == corpus_bleu(src, refs)
    assert copy_baseline(REFS, REFS).score == pytest.approx(100.0)
    assert copy_baseline(["aaa"], ["bbb"]).score == 0.0


word = st.sampled_from(["sonne", "regen", "wind", "morgen", "heute", "kalt", "es", "die"])
line = st.lists(word, min_size=0, max_size=12).map(" ".join)


@settings(max_examples=150)
@given(st.lists(st.tuples(line, line), min_size=1, max_size=10), st.booleans())
def test_agreement_with_independent_oracle(pairs, smooth):
    hyps = [h for h, _ in pairs]
    refs = [r for _, r in pairs]
    report = corpus_bleu(hyps, refs, smooth=smooth)
    score, precisions, bp = bleu_oracle(hyps, refs, smooth=smooth)
    assert report.score == pytest.approx(score, abs=1e-4)
    assert report.precisions == pytest.approx(precisions, abs=1e-9)
    assert report.brevity_penalty == pytest.approx(bp, abs=1e-9)


def test_report_serialization():
    payload = corpus_bleu(REFS, REFS).to_dict()
    assert payload["bleu"] == 100.0
    assert payload["hyp_len"] == payload["ref_len"]
    assert payload["smoothed"] is False
