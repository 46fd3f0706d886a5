"""Byte-pair-encoding subword segmentation (learn / apply / decode).

Learning is the classic greedy procedure: every word starts as its
characters plus a terminal ``</w>`` boundary symbol, and the most frequent
adjacent symbol pair is merged repeatedly.  Frequency ties break on
lexicographic pair order so learning is deterministic; learning stops
early once no pair occurs at least twice.

Application replays the learned merges on each whitespace token and marks
every non-final piece with a continuation marker (``@@`` by default), so
``decode(apply(line)) == line`` for any line that does not already contain
the marker.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

WORD_END = "</w>"


@dataclass
class BpeModel:
    merges: list[tuple[str, str]]
    marker: str = "@@"
    vocab_threshold: int = 1
    _ranks: dict[tuple[str, str], int] = field(init=False, repr=False)
    _cache: dict[str, tuple[str, ...]] = field(init=False, repr=False)

    def __post_init__(self):
        if len(set(self.merges)) != len(self.merges):
            raise ValueError("merge list contains duplicates")
        self._ranks = {pair: i for i, pair in enumerate(self.merges)}
        self._cache = {}

    def segment(self, word: str) -> tuple[str, ...]:
        """Split one word into subword pieces (no markers attached)."""
        cached = self._cache.get(word)
        if cached is not None:
            return cached
        symbols = list(word) + [WORD_END]
        # merging the lowest-ranked pair first is equivalent to replaying
        # the merge list in order: a merge can only create pairs that were
        # learned later than itself
        while len(symbols) > 1:
            best_rank = None
            best_pos = -1
            for i in range(len(symbols) - 1):
                rank = self._ranks.get((symbols[i], symbols[i + 1]))
                if rank is not None and (best_rank is None or rank < best_rank):
                    best_rank = rank
                    best_pos = i
            if best_rank is None:
                break
            pair = (symbols[best_pos], symbols[best_pos + 1])
            symbols = _merge_word(symbols, pair)
        if symbols[-1] == WORD_END:
            symbols = symbols[:-1]
        elif symbols[-1].endswith(WORD_END):
            symbols[-1] = symbols[-1][: -len(WORD_END)]
        pieces = tuple(symbols)
        self._cache[word] = pieces
        return pieces


def _merge_word(symbols: list[str], pair: tuple[str, str]) -> list[str]:
    """Replace every adjacent occurrence of `pair`, left to right."""
    out = []
    i = 0
    while i < len(symbols):
        if i < len(symbols) - 1 and (symbols[i], symbols[i + 1]) == pair:
            out.append(symbols[i] + symbols[i + 1])
            i += 2
        else:
            out.append(symbols[i])
            i += 1
    return out


def _pair_counts(words: dict[tuple[str, ...], int]) -> Counter:
    counts: Counter = Counter()
    for symbols, freq in words.items():
        for i in range(len(symbols) - 1):
            counts[(symbols[i], symbols[i + 1])] += freq
    return counts


def bpe_learn(
    tokens: Iterable[str],
    n_merges: int,
    marker: str = "@@",
    vocab_threshold: int = 1,
) -> BpeModel:
    """Learn up to `n_merges` merges from a token stream.

    `vocab_threshold` drops words seen fewer times from the learning
    corpus.  Raises on an empty corpus.
    """
    if n_merges < 0:
        raise ValueError(f"n_merges must be >= 0, got {n_merges}")
    word_freq = Counter(tokens)
    if not word_freq:
        raise ValueError("cannot learn BPE from an empty corpus")
    words: dict[tuple[str, ...], int] = {}
    for word, freq in word_freq.items():
        if freq >= vocab_threshold:
            key = tuple(word) + (WORD_END,)
            words[key] = words.get(key, 0) + freq
    merges: list[tuple[str, str]] = []
    for _ in range(n_merges):
        counts = _pair_counts(words)
        if not counts:
            break
        best_freq = max(counts.values())
        if best_freq < 2:
            break
        best = min(pair for pair, freq in counts.items() if freq == best_freq)
        merges.append(best)
        words = {
            tuple(_merge_word(list(symbols), best)): freq
            for symbols, freq in words.items()
        }
    return BpeModel(merges=merges, marker=marker, vocab_threshold=vocab_threshold)


def bpe_apply(model: BpeModel, line: str) -> str:
    """Segment every whitespace token of `line`, marking non-final pieces."""
    out = []
    for word in line.split():
        pieces = model.segment(word)
        out.extend(
            piece + model.marker if i < len(pieces) - 1 else piece
            for i, piece in enumerate(pieces)
        )
    return " ".join(out)


def bpe_decode(line: str, marker: str = "@@") -> str:
    """Join marker-suffixed pieces back into words; inverse of bpe_apply."""
    words = []
    buffer = ""
    for piece in line.split():
        if piece.endswith(marker):
            buffer += piece[: -len(marker)]
        else:
            words.append(buffer + piece)
            buffer = ""
    if buffer:
        raise ValueError(f"dangling continuation marker at end of line: {line!r}")
    return " ".join(words)


def save_merges(model: BpeModel, path: Path | str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for a, b in model.merges:
            f.write(f"{a} {b}\n")


def load_merges(path: Path | str, marker: str = "@@") -> BpeModel:
    merges = []
    with open(path, encoding="utf-8") as f:
        for line_number, raw in enumerate(f, start=1):
            line = raw.rstrip("\n")
            if not line or line.startswith("#version"):
                continue
            parts = line.split(" ")
            if len(parts) != 2:
                raise ValueError(f"{path}:{line_number}: malformed merge line {line!r}")
            merges.append((parts[0], parts[1]))
    return BpeModel(merges=merges, marker=marker)
