import pytest
from hypothesis import given, settings

from glossaug.corpus import (
    ConlluParseError,
    GlossSequence,
    Origin,
    ParallelPair,
    parse_conllu,
    read_parallel,
    serialize_conllu,
    write_parallel,
)

from conftest import annotated_sentences, sent, tok

CANONICAL = (
    "# sent_id = s1\n"
    "1\tMorgen\tmorgen\tADV\t_\t_\t2\tadvmod\t_\t_\n"
    "2\tregnet\tregnen\tVERB\t_\t_\t0\troot\t_\t_\n"
    "3\tes\tes\tPRON\t_\t_\t2\texpl\t_\t_\n"
    "\n"
)


def pair(glosses, text, origin=Origin.REAL, sid="p"):
    return ParallelPair(
        gloss=GlossSequence(glosses=tuple(glosses), applied_rules=(), source_id=sid),
        text=text,
        origin=origin,
    )


def test_empty_input_gives_empty_list():
    assert parse_conllu("") == []
    assert parse_conllu("# only a comment\n\n") == []


def test_three_row_sentence_round_trips_byte_identically():
    sentences = parse_conllu(CANONICAL)
    assert len(sentences) == 1
    assert len(sentences[0].tokens) == 3
    assert serialize_conllu(sentences) == CANONICAL


def test_parse_reads_fields():
    (s,) = parse_conllu(CANONICAL)
    assert s.id == "s1"
    t = s.tokens[0]
    assert (t.index, t.form, t.lemma, t.upos, t.deprel, t.head) == (
        1, "Morgen", "morgen", "ADV", "advmod", 2,
    )
    assert t.ner == "O" and t.misc == {}


def test_head_out_of_range_names_line():
    text = (
        "1\ta\ta\tNOUN\t_\t_\t0\troot\t_\t_\n"
        "2\tb\tb\tNOUN\t_\t_\t5\tdep\t_\t_\n"
        "3\tc\tc\tNOUN\t_\t_\t1\tdep\t_\t_\n"
    )
    with pytest.raises(ConlluParseError, match="line 2.*head 5"):
        parse_conllu(text)


def test_multiword_range_lines_are_skipped():
    text = (
        "1-2\tim\t_\tX\t_\t_\t0\t_\t_\t_\n"
        "1\tin\tin\tADP\t_\t_\t2\tcase\t_\t_\n"
        "2\tdem\tder\tDET\t_\t_\t0\troot\t_\t_\n"
    )
    (s,) = parse_conllu(text)
    assert [t.form for t in s.tokens] == ["in", "dem"]


@pytest.mark.parametrize(
    "row, message",
    [
        ("1\ta\ta\tNOUN\t_\t_\t0\troot\t_", "expected 10 columns"),
        ("x\ta\ta\tNOUN\t_\t_\t0\troot\t_\t_", "non-numeric token index"),
        ("1\ta\ta\tNOUN\t_\t_\ty\troot\t_\t_", "non-numeric head"),
        ("1\ta\ta\tBLORP\t_\t_\t0\troot\t_\t_", "unknown UPOS"),
        ("1\ta\ta\tNOUN\t_\t_\t0\troot\t_\tNER=CITY", "unknown NER label"),
        ("1\ta\t\tNOUN\t_\t_\t0\troot\t_\t_", "empty FORM or LEMMA"),
        ("2\ta\ta\tNOUN\t_\t_\t0\troot\t_\t_", "breaks 1..n ordering"),
    ],
)
def test_malformed_rows_raise(row, message):
    with pytest.raises(ConlluParseError, match=message):
        parse_conllu(row + "\n")


def test_self_head_and_multiple_roots_and_cycles_raise():
    with pytest.raises(ConlluParseError, match="own head"):
        parse_conllu(
            "1\ta\ta\tNOUN\t_\t_\t0\troot\t_\t_\n"
            "2\tb\tb\tNOUN\t_\t_\t2\tdep\t_\t_\n"
        )
    with pytest.raises(ConlluParseError, match="exactly one root"):
        parse_conllu(
            "1\ta\ta\tNOUN\t_\t_\t0\troot\t_\t_\n"
            "2\tb\tb\tNOUN\t_\t_\t0\troot\t_\t_\n"
        )
    with pytest.raises(ConlluParseError, match="cycle"):
        parse_conllu(
            "1\ta\ta\tNOUN\t_\t_\t0\troot\t_\t_\n"
            "2\tb\tb\tNOUN\t_\t_\t3\tdep\t_\t_\n"
            "3\tc\tc\tNOUN\t_\t_\t2\tdep\t_\t_\n"
        )


def test_misc_carries_ner_and_compound():
    text = "1\tWetterbericht\tWetterbericht\tNOUN\t_\t_\t0\troot\t_\tNER=LOC|Compound=Wetter|Bericht\n"
    (s,) = parse_conllu(text)
    t = s.tokens[0]
    assert t.ner == "LOC"
    assert t.misc == {"Compound": "Wetter|Bericht"}
    # trailing empty constituent survives parsing; the compound rule rejects it
    text = "1\tX\tx\tNOUN\t_\t_\t0\troot\t_\tCompound=Wetter|\n"
    (s,) = parse_conllu(text)
    assert s.tokens[0].misc["Compound"] == "Wetter|"


def test_misc_without_leading_key_raises():
    text = "1\ta\ta\tNOUN\t_\t_\t0\troot\t_\tBericht|NER=LOC\n"
    with pytest.raises(ConlluParseError, match="malformed MISC"):
        parse_conllu(text)


def test_parse_preserves_sentence_and_token_order(weather_corpus):
    assert [s.id for s in weather_corpus] == ["w1", "w2", "w3", "w4", "w5"]
    assert [t.index for t in weather_corpus[2].tokens] == list(range(1, 8))


@settings(max_examples=150)
@given(annotated_sentences())
def test_serialize_parse_is_identity_on_normalized_sentences(s):
    (parsed,) = parse_conllu(serialize_conllu([s]))
    assert parsed == s


def test_parse_serialize_parse_idempotent(weather_corpus):
    once = serialize_conllu(weather_corpus)
    again = serialize_conllu(parse_conllu(once))
    assert once == again
    assert parse_conllu(once) == weather_corpus


def test_write_parallel_counts_and_join(tmp_path):
    pairs = [pair(["WETTER", "MORGEN"], "das Wetter morgen"), pair(["REGEN"], "es regnet")]
    gloss_path, text_path = write_parallel(pairs, tmp_path, "train")
    gloss_lines = gloss_path.read_text(encoding="utf-8").splitlines()
    text_lines = text_path.read_text(encoding="utf-8").splitlines()
    assert gloss_lines == ["WETTER MORGEN", "REGEN"]
    assert text_lines == ["das Wetter morgen", "es regnet"]
    assert len(gloss_lines) == len(text_lines)


def test_write_parallel_rejects_empty(tmp_path):
    with pytest.raises(ValueError, match="empty"):
        write_parallel([], tmp_path / "sub", "train")
    assert not (tmp_path / "sub").exists()


def test_read_parallel_round_trip(tmp_path):
    pairs = [pair(["A", "B"], "a b"), pair(["C"], "c")]
    write_parallel(pairs, tmp_path, "dev")
    loaded = read_parallel(tmp_path, "dev", Origin.SYNTHETIC_GENERAL)
    assert [p.gloss.glosses for p in loaded] == [("A", "B"), ("C",)]
    assert [p.text for p in loaded] == ["a b", "c"]
    assert all(p.origin is Origin.SYNTHETIC_GENERAL for p in loaded)


def test_read_parallel_rejects_mismatched_lengths(tmp_path):
    (tmp_path / "train.gloss").write_text("A\nB\n", encoding="utf-8")
    (tmp_path / "train.txt").write_text("a\n", encoding="utf-8")
    with pytest.raises(ValueError, match="line counts differ"):
        read_parallel(tmp_path, "train", Origin.REAL)


def test_parallel_pair_rejects_empty_sides():
    with pytest.raises(ValueError, match="empty gloss"):
        pair([], "text")
    with pytest.raises(ValueError, match="empty text"):
        pair(["A"], "")
