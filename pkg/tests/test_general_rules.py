import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from glossaug.general_rules import (
    AugmentConfig,
    augment_general,
    bounded_permutation,
    lemma_project,
    pos_filter,
    random_drop,
)

from conftest import annotated_sentences, flat_sentence, sent, tok
from oracles import general_oracle, valid_bounded_permutations


def upos_sentence(tags):
    return sent([tok(i, f"w{i}", upos=t) for i, t in enumerate(tags, start=1)])


def test_config_validation():
    AugmentConfig()
    with pytest.raises(ValueError, match="drop_prob"):
        AugmentConfig(drop_prob=1.5)
    with pytest.raises(ValueError, match="max_displacement"):
        AugmentConfig(max_displacement=-1)
    with pytest.raises(ValueError, match="casing"):
        AugmentConfig(casing="shout")


def test_pos_filter_drops_everything_when_nothing_matches():
    s = upos_sentence(["PUNCT", "PUNCT", "PUNCT"])
    assert pos_filter(s, AugmentConfig().kept_pos).tokens == ()


def test_pos_filter_keeps_matching_positions_in_order():
    s = upos_sentence(["DET", "NOUN", "VERB", "ADP", "NOUN"])
    out = pos_filter(s, AugmentConfig().kept_pos)
    assert [t.form for t in out.tokens] == ["w2", "w3", "w5"]
    assert [t.index for t in out.tokens] == [1, 2, 3]


def test_pos_filter_with_full_tag_set_is_identity():
    s = upos_sentence(["DET", "NOUN", "VERB"])
    from glossaug.corpus import UPOS_TAGS

    assert pos_filter(s, UPOS_TAGS) == s


def test_pos_filter_remaps_dangling_heads_to_zero():
    s = sent(
        [
            tok(1, "der", upos="DET", head=2, deprel="det"),
            tok(2, "Hund", upos="NOUN", head=3, deprel="nsubj"),
            tok(3, "bellt", upos="VERB", head=0, deprel="root"),
        ]
    )
    out = pos_filter(s, {"NOUN"})
    assert [t.form for t in out.tokens] == ["Hund"]
    assert out.tokens[0].head == 0


def test_pos_filter_exempt_lemmas_survive():
    s = sent(
        [
            tok(1, "nicht", upos="PART", lemma="nicht", head=2),
            tok(2, "regnen", upos="VERB", head=0, deprel="root"),
        ]
    )
    out = pos_filter(s, {"VERB"}, exempt_lemmas={"nicht"})
    assert [t.form for t in out.tokens] == ["nicht", "regnen"]


@pytest.mark.parametrize("seed", [0, 1, 99])
def test_random_drop_degenerate_probabilities(seed):
    s = flat_sentence(random.Random(0), 20)
    assert random_drop(s, 0.0, random.Random(seed)) == s
    assert random_drop(s, 1.0, random.Random(seed)).tokens == ()


def test_random_drop_concentrates_near_survival_rate():
    s = flat_sentence(random.Random(0), 10_000)
    out = random_drop(s, 0.2, random.Random(1234))
    assert 0.78 <= len(out.tokens) / 10_000 <= 0.82


@settings(max_examples=60)
@given(st.integers(1, 40), st.integers(0, 2**32 - 1), st.integers(0, 40))
def test_random_drop_prefix_stability(n, seed, cut):
    """Truncating a suffix never changes the keep/drop decision of the prefix."""
    s = flat_sentence(random.Random(0), n)  # forms are unique
    k = min(cut, n)
    prefix = sent(s.tokens[:k], s.id)
    full_out = random_drop(s, 0.3, random.Random(seed))
    prefix_out = random_drop(prefix, 0.3, random.Random(seed))
    prefix_forms = {t.form for t in s.tokens[:k]}
    full_prefix_survivors = [t.form for t in full_out.tokens if t.form in prefix_forms]
    assert [t.form for t in prefix_out.tokens] == full_prefix_survivors


def test_lemma_project_upper_and_preserve():
    s = sent([tok(1, "gehst", upos="VERB", lemma="gehen", head=0, deprel="root")])
    assert lemma_project(s, "upper").tokens[0].form == "GEHEN"
    assert lemma_project(s, "preserve").tokens[0].form == "gehen"


def test_lemma_project_fixed_point_when_lemma_equals_form():
    s = sent([tok(1, "heute", upos="ADV", lemma="heute", head=0, deprel="root")])
    assert lemma_project(s, "preserve") == s


def test_lemma_project_rejects_empty_lemma():
    s = sent([tok(1, "kaputt", upos="ADJ", lemma="", head=0, deprel="root")], sid="bad")
    with pytest.raises(ValueError, match=r"token 1 \('kaputt'\) in sentence bad"):
        lemma_project(s)


def test_bounded_permutation_zero_displacement_is_identity():
    s = flat_sentence(random.Random(0), 12)
    for seed in range(25):
        assert bounded_permutation(s, 0, random.Random(seed)) == s


def test_bounded_permutation_singleton_is_identity():
    s = flat_sentence(random.Random(0), 1)
    assert bounded_permutation(s, 5, random.Random(7)) == s


def test_bounded_permutation_support_n3_d1():
    s = flat_sentence(random.Random(0), 3)
    valid = valid_bounded_permutations(3, 1)
    assert len(valid) == 3
    seen = set()
    for seed in range(300):
        out = bounded_permutation(s, 1, random.Random(seed))
        perm = tuple(int(t.form[1:]) - 1 for t in out.tokens)
        assert perm in valid
        seen.add(perm)
    assert seen == valid


@settings(max_examples=80)
@given(st.integers(0, 50), st.sampled_from([0, 1, 2, 4, 7]), st.integers(0, 2**32 - 1))
def test_bounded_permutation_is_bounded_permutation(n, d, seed):
    s = flat_sentence(random.Random(0), n)
    out = bounded_permutation(s, d, random.Random(seed))
    assert Counter(t.form for t in out.tokens) == Counter(t.form for t in s.tokens)
    for new_pos, t in enumerate(out.tokens):
        old_pos = int(t.form[1:]) - 1
        assert abs(new_pos - old_pos) <= d


def test_bounded_permutation_renumbers_heads():
    s = sent(
        [
            tok(1, "a", head=2, deprel="dep"),
            tok(2, "b", head=0, deprel="root"),
            tok(3, "c", head=2, deprel="dep"),
        ]
    )
    out = bounded_permutation(s, 2, random.Random(11))
    by_form = {t.form: t for t in out.tokens}
    assert by_form["a"].head == by_form["b"].index
    assert by_form["b"].head == 0
    assert by_form["c"].head == by_form["b"].index


def test_augment_general_skips_function_word_sentences():
    s = upos_sentence(["DET", "ADP", "PRON", "PUNCT"])
    assert augment_general(s, AugmentConfig()) is None


def test_augment_general_without_randomness_is_filtered_lemmas_in_order():
    s = sent(
        [
            tok(1, "morgen", upos="ADV", lemma="morgen", head=2, deprel="advmod"),
            tok(2, "regnet", upos="VERB", lemma="regnen", head=0, deprel="root"),
            tok(3, "es", upos="PRON", lemma="es", head=2, deprel="expl"),
        ]
    )
    cfg = AugmentConfig(drop_prob=0.0, max_displacement=0, seed=42)
    seq = augment_general(s, cfg)
    assert seq.glosses == ("MORGEN", "REGNEN")
    assert seq.applied_rules == (
        "pos_filter", "random_drop", "lemma_project", "bounded_permutation",
    )
    assert seq.source_id == s.id


def test_augment_general_is_deterministic_per_ordinal():
    s = flat_sentence(random.Random(3), 9)
    cfg = AugmentConfig(seed=5)
    assert augment_general(s, cfg, ordinal=17) == augment_general(s, cfg, ordinal=17)
    outputs = {augment_general(s, cfg, ordinal=k).glosses for k in range(40)}
    assert len(outputs) > 1  # per-sentence streams really differ


@settings(max_examples=100)
@given(annotated_sentences(), st.integers(0, 1000))
def test_augment_general_agrees_with_straight_line_oracle(s, ordinal):
    cfg = AugmentConfig(seed=99)
    seq = augment_general(s, cfg, ordinal)
    expected = general_oracle(s, cfg, ordinal)
    assert (None if seq is None else list(seq.glosses)) == expected


@settings(max_examples=80)
@given(annotated_sentences(), st.integers(0, 500))
def test_augment_general_emits_only_kept_pos(s, ordinal):
    # give every token a lemma that encodes its POS so provenance survives
    marked = sent(
        [
            tok(t.index, t.form, upos=t.upos, lemma=f"{t.upos.lower()}x{t.index}",
                head=t.head, deprel=t.deprel)
            for t in s.tokens
        ],
        s.id,
    )
    cfg = AugmentConfig(seed=3)
    seq = augment_general(marked, cfg, ordinal)
    if seq is None:
        return
    for gloss in seq.glosses:
        source_pos = gloss.split("X")[0]
        assert source_pos in cfg.kept_pos


def test_augment_general_golden_fixture(weather_corpus):
    """Frozen output for the first fixture sentence; the same value is
    re-derived by the straight-line oracle in its own test above."""
    s = weather_corpus[0]
    assert s.text() == "morgen regnet es im Süden"
    cfg = AugmentConfig(seed=7)
    seq = augment_general(s, cfg, ordinal=0)
    assert list(seq.glosses) == general_oracle(s, cfg, 0)
    assert seq.glosses == GOLDEN_GENERAL_W1


# computed once with the straight-line oracle at seed 7, ordinal 0:
# filter keeps [morgen, regnet, Süden], no token drops (draws 0.43/0.88/0.78),
# sort keys 4.71/2.08/2.02 reverse the order
GOLDEN_GENERAL_W1 = ("SÜD", "REGNEN", "MORGEN")
