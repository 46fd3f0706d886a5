/** Heuristic UPOS tagging, lemmatization, and gazetteer NER. */

import type { Language } from "./config.js";
import { ENGLISH, GERMAN, type Lexicon } from "./lexicon.js";

export type NerLabel = "O" | "LOC" | "PER" | "ORG" | "MISC";

export interface TaggedToken {
  form: string;
  lemma: string;
  upos: string;
  ner: NerLabel;
}

const PUNCT = /^[^\p{L}\p{N}]+$/u;
const NUMERIC = /^\p{N}+(?:[.,]\p{N}+)*$/u;
const GERMAN_ADJ_SUFFIX = /(ig|lich|isch|sam|bar|haft|los|voll|arm|reich)$/u;

export function lexiconFor(language: Language): Lexicon {
  return language === "de" ? GERMAN : ENGLISH;
}

function closedClass(lower: string, lex: Lexicon): string | null {
  if (lex.particles.has(lower)) return "PART";
  if (lex.determiners.has(lower)) return "DET";
  if (lex.pronouns.has(lower)) return "PRON";
  if (lex.adpositions.has(lower)) return "ADP";
  if (lex.auxiliaries.has(lower)) return "AUX";
  if (lex.coordinators.has(lower)) return "CCONJ";
  if (lex.subordinators.has(lower)) return "SCONJ";
  if (lex.adverbs.has(lower)) return "ADV";
  if (lex.numberWords.has(lower)) return "NUM";
  return null;
}

function stripGermanAdjectiveInflection(lower: string): string {
  const stripped = lower.replace(/(e|en|er|es|em)$/u, "");
  return stripped.length >= 3 ? stripped : lower;
}

function germanVerbLemma(lower: string): string {
  if (lower.endsWith("en")) return lower;
  const stem = lower.replace(/(test|tet|st|te|t|e)$/u, "");
  if (stem.length < 2) return lower;
  return stem.endsWith("e") ? `${stem}n` : `${stem}en`;
}

function tagGerman(form: string, sentenceInitial: boolean, lex: Lexicon): TaggedToken {
  const lower = form.toLowerCase();
  if (PUNCT.test(form)) return { form, lemma: form, upos: "PUNCT", ner: "O" };
  if (NUMERIC.test(form)) return { form, lemma: form, upos: "NUM", ner: "O" };

  const entity = lex.gazetteer.get(form) ?? null;
  const capitalized = /^\p{Lu}/u.test(form);
  const closed = closedClass(lower, lex);

  // capitalized mid-sentence is a noun in German; sentence-initially the
  // closed-class reading wins ("Der", "Im", "Nicht", ...)
  let upos: string;
  if (capitalized && !sentenceInitial) {
    upos = entity !== null && lex.properLocations.has(form) ? "PROPN" : "NOUN";
  } else if (closed !== null) {
    upos = closed;
  } else if (capitalized) {
    upos = entity !== null && lex.properLocations.has(form) ? "PROPN" : "NOUN";
  } else if (
    lex.adjectives.has(stripGermanAdjectiveInflection(lower)) ||
    GERMAN_ADJ_SUFFIX.test(stripGermanAdjectiveInflection(lower))
  ) {
    upos = "ADJ";
  } else if (/(en|st|te|t|e)$/u.test(lower)) {
    upos = "VERB";
  } else {
    upos = "X";
  }

  let lemma: string;
  const exception = lex.lemmaExceptions.get(lower);
  if (exception !== undefined) {
    lemma = exception;
  } else if (upos === "VERB" || upos === "AUX") {
    lemma = germanVerbLemma(lower);
  } else if (upos === "ADJ") {
    lemma = stripGermanAdjectiveInflection(lower);
  } else if (upos === "NOUN" || upos === "PROPN") {
    lemma = form;
  } else {
    lemma = lower;
  }
  return { form, lemma, upos, ner: entity ?? "O" };
}

function tagEnglish(form: string, sentenceInitial: boolean, lex: Lexicon): TaggedToken {
  const lower = form.toLowerCase();
  if (PUNCT.test(form)) return { form, lemma: form, upos: "PUNCT", ner: "O" };
  if (NUMERIC.test(form)) return { form, lemma: form, upos: "NUM", ner: "O" };

  const entity = lex.gazetteer.get(form) ?? null;
  const closed = closedClass(lower, lex);
  let upos: string;
  if (closed !== null) {
    upos = closed;
  } else if (/^\p{Lu}/u.test(form) && !sentenceInitial) {
    upos = "PROPN";
  } else if (lex.adjectives.has(lower)) {
    upos = "ADJ";
  } else if (lower.endsWith("ly")) {
    upos = "ADV";
  } else if (/(ing|ed|es|s)$/u.test(lower) && lower.length > 4) {
    upos = "VERB";
  } else {
    upos = "NOUN";
  }
  const exception = lex.lemmaExceptions.get(lower);
  const lemma =
    exception ?? (upos === "PROPN" || upos === "NOUN" ? form : lower);
  return { form, lemma, upos, ner: entity ?? "O" };
}

export function tagToken(
  form: string,
  sentenceInitial: boolean,
  language: Language,
): TaggedToken {
  const lex = lexiconFor(language);
  return language === "de"
    ? tagGerman(form, sentenceInitial, lex)
    : tagEnglish(form, sentenceInitial, lex);
}
