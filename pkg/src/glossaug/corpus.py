"""Annotated-corpus and parallel-file I/O.

Two file families live here:

* CoNLL-U (10 tab-separated columns, ``#`` comments, blank-line sentence
  separators).  Named-entity labels and compound segmentations travel in
  the MISC column as ``NER=...`` and ``Compound=...`` entries.  Because a
  compound value itself contains ``|`` (``Compound=Wetter|Bericht``), a
  MISC segment without ``=`` continues the previous entry's value.
* The six-file parallel layout ``{train,dev,test}.{gloss,txt}``, one
  sentence per line, gloss tokens space-joined.

Everything is UTF-8 with Unix newlines.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Iterable, Iterator, Sequence, TextIO

UPOS_TAGS = frozenset(
    {
        "NOUN", "VERB", "AUX", "ADJ", "ADV", "NUM", "PRON", "DET", "ADP",
        "PART", "CCONJ", "SCONJ", "PROPN", "INTJ", "PUNCT", "SYM", "X",
    }
)

NER_LABELS = frozenset({"O", "LOC", "PER", "ORG", "MISC"})


class ConlluParseError(ValueError):
    """Raised on malformed CoNLL-U input; carries the offending line number."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


@dataclass(frozen=True, slots=True)
class Token:
    """One syntactic word with its dependency and entity annotation."""

    index: int
    form: str
    lemma: str
    upos: str
    deprel: str
    head: int
    ner: str = "O"
    misc: dict[str, str] = field(default_factory=dict)


@dataclass(frozen=True, slots=True)
class AnnotatedSentence:
    id: str
    tokens: tuple[Token, ...]

    def text(self) -> str:
        """Surface text as a space-joined token sequence."""
        return " ".join(t.form for t in self.tokens)

    def __len__(self) -> int:
        return len(self.tokens)


@dataclass(frozen=True, slots=True)
class GlossSequence:
    """Synthesized gloss side of a pair, with the rules that produced it."""

    glosses: tuple[str, ...]
    applied_rules: tuple[str, ...]
    source_id: str

    def text(self) -> str:
        return " ".join(self.glosses)


class Origin(enum.Enum):
    REAL = "real"
    SYNTHETIC_GENERAL = "synthetic_general"
    SYNTHETIC_SPECIFIC = "synthetic_specific"


@dataclass(frozen=True, slots=True)
class ParallelPair:
    gloss: GlossSequence
    text: str
    origin: Origin

    def __post_init__(self):
        if not self.gloss.glosses:
            raise ValueError("parallel pair with empty gloss side")
        if not self.text:
            raise ValueError("parallel pair with empty text side")


def _parse_misc(column: str, line_number: int) -> tuple[str, dict[str, str]]:
    """Split a MISC column into the NER label and the remaining entry map."""
    if column == "_":
        return "O", {}
    entries: list[tuple[str, str]] = []
    for segment in column.split("|"):
        if "=" in segment:
            key, value = segment.split("=", 1)
            entries.append((key, value))
        elif entries:
            # continuation of the previous value ("Compound=Wetter|Bericht")
            key, value = entries[-1]
            entries[-1] = (key, value + "|" + segment)
        else:
            raise ConlluParseError(line_number, f"malformed MISC entry {segment!r}")
    ner = "O"
    misc: dict[str, str] = {}
    for key, value in entries:
        if key in misc or (key == "NER" and ner != "O"):
            raise ConlluParseError(line_number, f"duplicate MISC key {key!r}")
        if key == "NER":
            if value not in NER_LABELS:
                raise ConlluParseError(line_number, f"unknown NER label {value!r}")
            ner = value
        else:
            misc[key] = value
    return ner, misc


def _format_misc(token: Token) -> str:
    entries = []
    if token.ner != "O":
        entries.append(f"NER={token.ner}")
    entries.extend(f"{key}={value}" for key, value in token.misc.items())
    return "|".join(entries) if entries else "_"


def _validate_sentence(rows: list[tuple[int, Token]], sent_start: int) -> None:
    n = len(rows)
    roots = [line for line, tok in rows if tok.head == 0]
    if len(roots) != 1:
        where = roots[1] if len(roots) > 1 else sent_start
        raise ConlluParseError(where, f"sentence must have exactly one root, found {len(roots)}")
    for line, tok in rows:
        if tok.head < 0 or tok.head > n:
            raise ConlluParseError(line, f"head {tok.head} out of range [0, {n}]")
        if tok.head == tok.index:
            raise ConlluParseError(line, "token is its own head")
    # acyclicity: walk each token to the root, bounded by sentence length
    for line, tok in rows:
        seen = set()
        cur = tok
        while cur.head != 0:
            if cur.index in seen:
                raise ConlluParseError(line, "cycle in dependency heads")
            seen.add(cur.index)
            cur = rows[cur.head - 1][1]


def iter_conllu(lines: Iterable[str]) -> Iterator[AnnotatedSentence]:
    """Stream sentences from CoNLL-U lines; raises ConlluParseError on bad input."""
    rows: list[tuple[int, Token]] = []
    sent_id: str | None = None
    sent_start = 1
    count = 0

    def finish() -> AnnotatedSentence:
        nonlocal rows, sent_id, count
        _validate_sentence(rows, sent_start)
        count += 1
        sent = AnnotatedSentence(
            id=sent_id if sent_id is not None else str(count),
            tokens=tuple(tok for _, tok in rows),
        )
        rows = []
        sent_id = None
        return sent

    line_number = 0
    for line_number, raw in enumerate(lines, start=1):
        line = raw.rstrip("\n")
        if not line.strip():
            if rows:
                yield finish()
            continue
        if line.startswith("#"):
            comment = line[1:].strip()
            if comment.startswith("sent_id"):
                _, _, value = comment.partition("=")
                sent_id = value.strip()
            continue
        columns = line.split("\t")
        if len(columns) != 10:
            raise ConlluParseError(line_number, f"expected 10 columns, got {len(columns)}")
        if "-" in columns[0]:
            # multiword-token range line; rules operate on syntactic words only
            continue
        if not rows:
            sent_start = line_number
        try:
            index = int(columns[0])
        except ValueError:
            raise ConlluParseError(line_number, f"non-numeric token index {columns[0]!r}") from None
        if index != len(rows) + 1:
            raise ConlluParseError(line_number, f"token index {index} breaks 1..n ordering")
        form, lemma, upos = columns[1], columns[2], columns[3]
        if not form or not lemma:
            raise ConlluParseError(line_number, "empty FORM or LEMMA column")
        if upos not in UPOS_TAGS:
            raise ConlluParseError(line_number, f"unknown UPOS tag {upos!r}")
        try:
            head = int(columns[6])
        except ValueError:
            raise ConlluParseError(line_number, f"non-numeric head {columns[6]!r}") from None
        ner, misc = _parse_misc(columns[9], line_number)
        rows.append(
            (
                line_number,
                Token(
                    index=index,
                    form=form,
                    lemma=lemma,
                    upos=upos,
                    deprel=columns[7],
                    head=head,
                    ner=ner,
                    misc=misc,
                ),
            )
        )
    if rows:
        yield finish()


def parse_conllu(source: str | Iterable[str]) -> list[AnnotatedSentence]:
    if isinstance(source, str):
        source = source.splitlines()
    return list(iter_conllu(source))


def serialize_sentence(sent: AnnotatedSentence) -> str:
    lines = [f"# sent_id = {sent.id}"]
    for t in sent.tokens:
        lines.append(
            "\t".join(
                (
                    str(t.index), t.form, t.lemma, t.upos, "_", "_",
                    str(t.head), t.deprel, "_", _format_misc(t),
                )
            )
        )
    lines.append("")
    return "\n".join(lines)


def serialize_conllu(sentences: Iterable[AnnotatedSentence]) -> str:
    return "".join(serialize_sentence(s) + "\n" for s in sentences)


def write_conllu(sentences: Iterable[AnnotatedSentence], out: TextIO) -> int:
    n = 0
    for s in sentences:
        out.write(serialize_sentence(s) + "\n")
        n += 1
    return n


def read_lines(path: Path | str) -> list[str]:
    with open(path, encoding="utf-8") as f:
        return [line.rstrip("\n") for line in f]


def write_lines(path: Path | str, lines: Iterable[str]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for line in lines:
            f.write(line + "\n")


def write_parallel(
    pairs: Sequence[ParallelPair], out_dir: Path | str, split: str
) -> tuple[Path, Path]:
    """Write ``<split>.gloss`` / ``<split>.txt`` under out_dir, one pair per line."""
    if not pairs:
        raise ValueError(f"refusing to write empty {split!r} split")
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    gloss_path = out_dir / f"{split}.gloss"
    text_path = out_dir / f"{split}.txt"
    write_lines(gloss_path, (p.gloss.text() for p in pairs))
    write_lines(text_path, (p.text for p in pairs))
    return gloss_path, text_path


def read_parallel(in_dir: Path | str, split: str, origin: Origin) -> list[ParallelPair]:
    """Load one split of the six-file layout, stamping every pair with origin."""
    in_dir = Path(in_dir)
    gloss_lines = read_lines(in_dir / f"{split}.gloss")
    text_lines = read_lines(in_dir / f"{split}.txt")
    if len(gloss_lines) != len(text_lines):
        raise ValueError(
            f"{split}: gloss/text line counts differ "
            f"({len(gloss_lines)} vs {len(text_lines)})"
        )
    pairs = []
    for i, (gloss, text) in enumerate(zip(gloss_lines, text_lines), start=1):
        seq = GlossSequence(glosses=tuple(gloss.split()), applied_rules=(), source_id=f"{split}:{i}")
        pairs.append(ParallelPair(gloss=seq, text=text, origin=origin))
    return pairs


def renumber(tokens: Sequence[Token]) -> tuple[Token, ...]:
    """Reassign indices 1..n in list order; heads follow their governor or
    fall back to 0 when the governor is gone."""
    new_index = {t.index: i + 1 for i, t in enumerate(tokens)}
    return tuple(
        replace(t, index=i + 1, head=new_index.get(t.head, 0))
        for i, t in enumerate(tokens)
    )
