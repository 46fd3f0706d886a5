import random
from pathlib import Path

import pytest
from hypothesis import strategies as st

from glossaug.corpus import AnnotatedSentence, Token

DATA_DIR = Path(__file__).parent / "data"

UPOS_POOL = (
    ["NOUN"] * 5 + ["VERB"] * 4 + ["ADV"] * 2 + ["ADJ"] * 2 + ["DET"] * 2
    + ["ADP"] * 2 + ["PRON", "PART", "NUM", "PUNCT", "AUX", "PROPN", "CCONJ"]
)
LEMMA_POOL = [
    "wetter", "regen", "sonne", "wind", "schnee", "wolke", "tag", "nacht",
    "kommen", "scheinen", "erwarten", "bleiben", "stark", "mild", "heute",
    "morgen", "land", "nord", "süd", "bericht", "ende", "schauer", "zwei",
]
NEGATION_POOL = ["nicht", "nie", "kein"]
VERB_CHILD_DEPRELS = ["nsubj", "obj", "advmod", "obl", "dep", "nsubj", "obj"]
OTHER_DEPRELS = ["det", "case", "amod", "nmod", "dep"]


def tok(index, form, upos="NOUN", lemma=None, head=0, deprel="dep", ner="O", misc=None):
    return Token(
        index=index,
        form=form,
        lemma=lemma if lemma is not None else form.lower(),
        upos=upos,
        deprel=deprel,
        head=head,
        ner=ner,
        misc=dict(misc) if misc else {},
    )


def sent(tokens, sid="t1"):
    return AnnotatedSentence(id=sid, tokens=tuple(tokens))


def flat_sentence(rng: random.Random, n: int, sid="flat") -> AnnotatedSentence:
    """Chain-tree sentence with unique forms, for permutation bookkeeping."""
    tokens = [
        tok(i, f"w{i}", upos="NOUN", head=i - 1, deprel="dep" if i > 1 else "root")
        for i in range(1, n + 1)
    ]
    return sent(tokens, sid)


def random_sentence(rng: random.Random, n: int | None = None, sid="fuzz") -> AnnotatedSentence:
    """Random valid sentence: random tree shape, POS, entities, compounds,
    negation lemmas, and subject/object relations under verbs."""
    if n is None:
        n = rng.randint(1, 12)
    order = list(range(1, n + 1))
    rng.shuffle(order)
    heads = {order[0]: 0}
    attached = [order[0]]
    for idx in order[1:]:
        heads[idx] = rng.choice(attached)
        attached.append(idx)

    upos_by_index = {i: rng.choice(UPOS_POOL) for i in range(1, n + 1)}
    tokens = []
    for i in range(1, n + 1):
        upos = upos_by_index[i]
        if rng.random() < 0.10:
            lemma = rng.choice(NEGATION_POOL)
            upos = rng.choice(["PART", "ADV"])
        else:
            lemma = rng.choice(LEMMA_POOL)
        head = heads[i]
        if head == 0:
            deprel = "root"
        elif upos_by_index[head] == "VERB":
            deprel = rng.choice(VERB_CHILD_DEPRELS)
        else:
            deprel = rng.choice(OTHER_DEPRELS)
        ner = "LOC" if rng.random() < 0.15 else rng.choice(["O", "O", "O", "PER", "ORG"])
        misc = {}
        if upos == "NOUN" and rng.random() < 0.25:
            first = rng.choice(LEMMA_POOL).capitalize()
            second = rng.choice(LEMMA_POOL).capitalize()
            misc["Compound"] = f"{first}|{second}"
            if rng.random() < 0.3:
                misc["CompoundLemma"] = f"{first.lower()}|{second.lower()}"
        form = lemma.capitalize() if upos in ("NOUN", "PROPN") else lemma
        tokens.append(
            Token(index=i, form=form, lemma=lemma, upos=upos, deprel=deprel,
                  head=head, ner=ner, misc=misc)
        )
    return sent(tokens, sid)


@st.composite
def annotated_sentences(draw, max_len=12):
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    n = draw(st.integers(min_value=1, max_value=max_len))
    return random_sentence(random.Random(seed), n=n, sid=f"fuzz{seed % 100000}")


@pytest.fixture
def weather_corpus():
    from glossaug.corpus import parse_conllu

    return parse_conllu((DATA_DIR / "weather_de.conllu").read_text(encoding="utf-8"))
