/** Greedy frequency-dictionary compound splitting for German nouns.
 *
 * A noun splits into constituents that are dictionary entries of at least
 * three characters, optionally joined by a linking element (s, es, n, en,
 * e, er).  Among split points the longer, more frequent prefix wins.  The
 * output keeps noun capitalization: "Wetterbericht" -> ["Wetter", "Bericht"].
 */

import { GERMAN_COMPOUND_PARTS } from "./lexicon.js";

const MIN_CONSTITUENT = 3;
const LINKERS = ["", "s", "es", "n", "en", "e", "er"];

function capitalize(word: string): string {
  return word.charAt(0).toUpperCase() + word.slice(1);
}

function decompose(lower: string, depth: number): string[] | null {
  if (lower.length === 0) return [];
  if (depth > 4) return null;
  const candidates: { parts: string[]; score: number }[] = [];
  if (GERMAN_COMPOUND_PARTS.has(lower)) {
    candidates.push({
      parts: [lower],
      score: lower.length + (GERMAN_COMPOUND_PARTS.get(lower) ?? 0) / 100,
    });
  }
  for (let end = lower.length - MIN_CONSTITUENT; end >= MIN_CONSTITUENT; end--) {
    const head = lower.slice(0, end);
    const freq = GERMAN_COMPOUND_PARTS.get(head);
    if (freq === undefined) continue;
    for (const linker of LINKERS) {
      if (!lower.startsWith(head + linker)) continue;
      const rest = lower.slice(end + linker.length);
      if (rest.length > 0 && rest.length < MIN_CONSTITUENT) continue;
      const restParts = decompose(rest, depth + 1);
      if (restParts === null) continue;
      candidates.push({
        parts: [head, ...restParts],
        score: head.length + freq / 100,
      });
    }
  }
  if (candidates.length === 0) return null;
  candidates.sort((a, b) => b.score - a.score);
  return candidates[0].parts;
}

/** Split a noun into >= 2 constituents, or return null to leave it alone. */
export function splitCompound(form: string): string[] | null {
  if (form.length < MIN_CONSTITUENT * 2) return null;
  const parts = decompose(form.toLowerCase(), 0);
  if (parts === null || parts.length < 2) return null;
  return parts.map(capitalize);
}
