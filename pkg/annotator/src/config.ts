/** Adapter configuration: language selects the bundled rule pipeline. */

export type Language = "de" | "en";

export interface AdapterConfig {
  language: Language;
  /** Identifier of the bundled pipeline; unknown values fail at startup. */
  model: string;
  compoundSplitting: boolean;
  /** Lines processed per chunk when streaming. */
  batchSize: number;
}

export const BUNDLED_MODELS: Record<Language, string> = {
  de: "de-rules-1",
  en: "en-rules-1",
};

export class ConfigError extends Error {}

export function resolveConfig(options: Partial<AdapterConfig> = {}): AdapterConfig {
  const language = options.language ?? "de";
  if (language !== "de" && language !== "en") {
    throw new ConfigError(`unsupported language '${language}' (expected de or en)`);
  }
  const model = options.model ?? BUNDLED_MODELS[language];
  if (model !== BUNDLED_MODELS[language]) {
    throw new ConfigError(
      `model '${model}' is not available for ${language}; bundled: ${BUNDLED_MODELS[language]}`,
    );
  }
  const compoundSplitting = options.compoundSplitting ?? language === "de";
  if (compoundSplitting && language !== "de") {
    throw new ConfigError("compound splitting is only available for German (de)");
  }
  const batchSize = options.batchSize ?? 1000;
  if (!Number.isInteger(batchSize) || batchSize < 1) {
    throw new ConfigError(`batch size must be a positive integer, got ${batchSize}`);
  }
  return { language, model, compoundSplitting, batchSize };
}
