"""German-to-DGS gloss synthesis: a deterministic seven-step rewrite.

Step order: verb-after-object reordering, POS filtering (negation
particles exempted), adverb fronting, location fronting, negation
postposition, compound-head reduction, lemma projection.  No step draws
randomness, so repeated runs are byte-identical.

Fronting semantics: each fronting pass moves its matches to the absolute
sentence start as a stable block.  The location pass treats tokens already
fronted by the adverb pass as settled, so a token that is both an adverb
and a location is moved once; freshly fronted locations land before the
adverb block.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .corpus import AnnotatedSentence, GlossSequence, Token, renumber
from .general_rules import AugmentConfig, lemma_project, pos_filter

OBJECT_DEPRELS = frozenset({"obj", "dobj"})
SUBJECT_DEPREL = "nsubj"


@dataclass(frozen=True)
class ClauseTriplet:
    """Subject / verb / object of one clause, located by token index."""

    subject_head: int
    verb: int
    object_head: int
    object_span: tuple[int, int]  # contiguous index range of the object subtree


def _children(s: AnnotatedSentence) -> dict[int, list[Token]]:
    by_head: dict[int, list[Token]] = {}
    for t in s.tokens:
        by_head.setdefault(t.head, []).append(t)
    return by_head


def _subtree_indices(s: AnnotatedSentence, root_index: int) -> set[int]:
    by_head = _children(s)
    out = {root_index}
    stack = [root_index]
    while stack:
        for child in by_head.get(stack.pop(), []):
            if child.index not in out:
                out.add(child.index)
                stack.append(child.index)
    return out


def find_svo_triplets(s: AnnotatedSentence) -> list[ClauseTriplet]:
    """One triplet per verb that governs both a nominal subject and a
    direct object, in document order.

    The object span is the maximal contiguous run of object-subtree
    positions around the object head.
    """
    by_head = _children(s)
    triplets = []
    for t in s.tokens:
        if t.upos != "VERB":
            continue
        deps = by_head.get(t.index, [])
        subjects = [d for d in deps if d.deprel == SUBJECT_DEPREL]
        objects = [d for d in deps if d.deprel in OBJECT_DEPRELS]
        if not subjects or not objects:
            continue
        obj = objects[0]
        members = _subtree_indices(s, obj.index)
        lo = hi = obj.index
        while lo - 1 in members:
            lo -= 1
        while hi + 1 in members:
            hi += 1
        triplets.append(
            ClauseTriplet(
                subject_head=subjects[0].index,
                verb=t.index,
                object_head=obj.index,
                object_span=(lo, hi),
            )
        )
    return triplets


def svo_to_sov(s: AnnotatedSentence) -> AnnotatedSentence:
    """Move each clause's verb to just after its object span.

    Triplets are processed left to right; a verb that already follows its
    object, or was moved before, stays put.  Order inside the span is
    untouched.
    """
    triplets = find_svo_triplets(s)
    if not triplets:
        return s
    order = [t.index for t in s.tokens]
    by_index = {t.index: t for t in s.tokens}
    moved: set[int] = set()
    for trip in triplets:
        if trip.verb in moved:
            continue
        span_last = trip.object_span[1]
        verb_pos = order.index(trip.verb)
        if verb_pos > order.index(span_last):
            continue
        order.pop(verb_pos)
        order.insert(order.index(span_last) + 1, trip.verb)
        moved.add(trip.verb)
    return AnnotatedSentence(id=s.id, tokens=renumber([by_index[i] for i in order]))


def front_tokens(
    s: AnnotatedSentence, selector: str, protected: int = 0
) -> AnnotatedSentence:
    """Move tokens matching `selector` ("adverb" or "location") to the
    sentence start, keeping relative order on both sides of the split.

    The first `protected` tokens are an already-fronted block: matches
    inside it are not moved again, and new matches are placed before it.
    """
    if selector == "adverb":
        match = lambda t: t.upos == "ADV"
    elif selector == "location":
        match = lambda t: t.ner == "LOC"
    else:
        raise ValueError(f"unknown selector {selector!r}")
    block = list(s.tokens[:protected])
    rest = s.tokens[protected:]
    fronted = [t for t in rest if match(t)]
    if not fronted:
        return s
    remainder = [t for t in rest if not match(t)]
    return AnnotatedSentence(id=s.id, tokens=renumber(fronted + block + remainder))


def negation_to_end(
    s: AnnotatedSentence, negation_lemmas: frozenset[str] | set[str]
) -> AnnotatedSentence:
    """Move negation tokens (matched by lemma) to the sentence end, stable."""
    negs = [t for t in s.tokens if t.lemma.lower() in negation_lemmas]
    if not negs:
        return s
    others = [t for t in s.tokens if t.lemma.lower() not in negation_lemmas]
    return AnnotatedSentence(id=s.id, tokens=renumber(others + negs))


def compound_head(s: AnnotatedSentence) -> AnnotatedSentence:
    """Reduce segmented compound nouns to their first constituent.

    A NOUN carrying ``Compound=c1|...|cn`` in MISC gets form and lemma
    replaced by c1; ``CompoundLemma`` overrides the new lemma when present.
    """
    out = []
    for t in s.tokens:
        segmentation = t.misc.get("Compound")
        if t.upos != "NOUN" or segmentation is None:
            out.append(t)
            continue
        parts = segmentation.split("|")
        if any(not p for p in parts):
            raise ValueError(
                f"malformed compound segmentation {segmentation!r} "
                f"on token {t.index} ({t.form!r}) in sentence {s.id}"
            )
        lemma = t.misc.get("CompoundLemma", segmentation).split("|")[0]
        if not lemma:
            raise ValueError(
                f"malformed compound lemma on token {t.index} in sentence {s.id}"
            )
        out.append(replace(t, form=parts[0], lemma=lemma))
    return AnnotatedSentence(id=s.id, tokens=tuple(out))


def augment_specific(
    s: AnnotatedSentence, cfg: AugmentConfig, svo: bool = True
) -> GlossSequence | None:
    """Run the seven German-specific rules on one sentence.

    Returns None when the POS filter leaves nothing (the caller drops the
    pair).  `svo=False` skips the verb-object reordering step.
    """
    applied = []
    out = s
    if svo:
        out = svo_to_sov(out)
        applied.append("svo_to_sov")
    out = pos_filter(out, cfg.kept_pos, exempt_lemmas=cfg.negation_lemmas)
    applied.append("pos_filter")
    adverb_count = sum(1 for t in out.tokens if t.upos == "ADV")
    out = front_tokens(out, "adverb")
    applied.append("front_adverbs")
    out = front_tokens(out, "location", protected=adverb_count)
    applied.append("front_locations")
    out = negation_to_end(out, cfg.negation_lemmas)
    applied.append("negation_to_end")
    out = compound_head(out)
    applied.append("compound_head")
    out = lemma_project(out, cfg.casing)
    applied.append("lemma_project")
    if not out.tokens:
        return None
    return GlossSequence(
        glosses=tuple(t.form for t in out.tokens),
        applied_rules=tuple(applied),
        source_id=s.id,
    )
