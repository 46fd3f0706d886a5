/** Heuristic dependency attachment.
 *
 * Guarantees the structural contract of the downstream parser: exactly one
 * root, heads in range, no self-reference, no cycles.  Non-root tokens
 * attach either to the root or to a following nominal (which itself
 * attaches to the root), so head chains terminate after at most two hops.
 */

import type { TaggedToken } from "./tag.js";

export interface DepToken extends TaggedToken {
  head: number;
  deprel: string;
}

const NOMINAL = new Set(["NOUN", "PROPN", "PRON"]);

function pickRoot(tokens: TaggedToken[]): number {
  const byPriority = ["VERB", "AUX", "NOUN", "PROPN"];
  for (const pos of byPriority) {
    const index = tokens.findIndex((t) => t.upos === pos);
    if (index >= 0) return index;
  }
  return 0;
}

function nextNominal(tokens: TaggedToken[], from: number): number {
  for (let j = from + 1; j < tokens.length; j++) {
    if (NOMINAL.has(tokens[j].upos)) return j;
  }
  return -1;
}

export function attachHeads(tokens: TaggedToken[]): DepToken[] {
  if (tokens.length === 0) return [];
  const root = pickRoot(tokens);
  let sawSubject = false;
  let sawObject = false;
  return tokens.map((token, i) => {
    if (i === root) return { ...token, head: 0, deprel: "root" };
    const toRoot = (deprel: string) => ({ ...token, head: root + 1, deprel });
    const nominal = nextNominal(tokens, i);
    switch (token.upos) {
      case "DET":
        return nominal >= 0 && nominal !== root
          ? { ...token, head: nominal + 1, deprel: "det" }
          : toRoot("det");
      case "ADJ":
        return nominal >= 0 && nominal !== root
          ? { ...token, head: nominal + 1, deprel: "amod" }
          : toRoot("amod");
      case "ADP":
        return nominal >= 0 && nominal !== root
          ? { ...token, head: nominal + 1, deprel: "case" }
          : toRoot("case");
      case "NUM":
        return nominal >= 0 && nominal !== root
          ? { ...token, head: nominal + 1, deprel: "nummod" }
          : toRoot("nummod");
      case "NOUN":
      case "PROPN":
      case "PRON": {
        // a case-marked nominal (ADP possibly over premodifiers) is oblique
        let j = i - 1;
        while (j >= 0 && ["ADJ", "DET", "NUM"].includes(tokens[j].upos)) j -= 1;
        if (j >= 0 && tokens[j].upos === "ADP") return toRoot("obl");
        if (!sawSubject && i < root) {
          sawSubject = true;
          return toRoot("nsubj");
        }
        if (!sawSubject && token.upos === "PRON" && i > root) {
          // V2 clauses put the subject pronoun right after the verb
          sawSubject = true;
          return toRoot("nsubj");
        }
        if (!sawObject && i > root) {
          sawObject = true;
          return toRoot("obj");
        }
        return toRoot("obl");
      }
      case "ADV":
        return toRoot("advmod");
      case "PART":
        return toRoot(token.form.toLowerCase() === "zu" ? "mark" : "advmod");
      case "AUX":
        return toRoot("aux");
      case "VERB":
        return toRoot("conj");
      case "CCONJ":
        return toRoot("cc");
      case "SCONJ":
        return toRoot("mark");
      case "PUNCT":
        return toRoot("punct");
      default:
        return toRoot("dep");
    }
  });
}
