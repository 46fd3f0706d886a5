/** Sentence splitting and tokenization.
 *
 * Tokens are maximal letter/digit runs (hyphen/apostrophe-joined) or single
 * punctuation characters, so concatenating token forms reproduces the input
 * text minus whitespace.
 */

const ABBREVIATIONS = new Set([
  "z.b", "bzw", "dr", "nr", "ca", "u.a", "d.h", "evtl", "ggf", "inkl",
  "mio", "mrd", "st", "usw", "vgl", "mr", "mrs", "ms", "prof", "etc", "e.g", "i.e",
]);

const TOKEN_PATTERN = /[\p{L}\p{N}]+(?:[-'’][\p{L}\p{N}]+)*|[^\s\p{L}\p{N}]/gu;

function endsWithAbbreviation(text: string, dotIndex: number): boolean {
  const before = text.slice(0, dotIndex);
  const match = before.match(/[\p{L}.]+$/u);
  if (!match) return false;
  return ABBREVIATIONS.has(match[0].toLowerCase().replace(/\.$/, ""));
}

/** Split one line of text into sentence strings. */
export function splitSentences(line: string): string[] {
  const text = line.trim();
  if (!text) return [];
  const sentences: string[] = [];
  let start = 0;
  let i = 0;
  while (i < text.length) {
    const ch = text[i];
    if (ch === "." || ch === "!" || ch === "?") {
      while (i + 1 < text.length && ".!?".includes(text[i + 1])) i += 1;
      const rest = text.slice(i + 1);
      const next = rest.match(/^\s+(["'„«]?[\p{Lu}\p{N}])/u);
      const isBoundary =
        next !== null && !(ch === "." && endsWithAbbreviation(text, i));
      if (isBoundary) {
        sentences.push(text.slice(start, i + 1).trim());
        start = i + 1;
      }
    }
    i += 1;
  }
  const tail = text.slice(start).trim();
  if (tail) sentences.push(tail);
  return sentences;
}

export function tokenize(sentence: string): string[] {
  return sentence.match(TOKEN_PATTERN) ?? [];
}
