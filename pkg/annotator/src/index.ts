export { annotateLines, annotateSentence, toConllu } from "./annotate.js";
export type { AnnotatedSentence, AnnotationResult } from "./annotate.js";
export { BUNDLED_MODELS, ConfigError, resolveConfig } from "./config.js";
export type { AdapterConfig, Language } from "./config.js";
export { splitCompound } from "./compounds.js";
export { attachHeads } from "./deps.js";
export type { DepToken } from "./deps.js";
export { tagToken } from "./tag.js";
export type { TaggedToken } from "./tag.js";
export { splitSentences, tokenize } from "./tokenize.js";
