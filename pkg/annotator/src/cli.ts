#!/usr/bin/env node
/** One-shot converter: plain text in, CoNLL-U out.
 *
 *   glossaug-annotate --in captions.txt --out corpus.conllu --language de
 *
 * Reads stdin / writes stdout when the file flags are omitted.  Lines are
 * processed in --batch-size chunks; lines with undecodable bytes are
 * skipped and counted on stderr.  Exit codes: 0 ok, 1 usage/startup
 * error, 2 I/O error.
 */

import { createReadStream, createWriteStream, realpathSync } from "node:fs";
import { stdin, stdout, stderr, argv, exit } from "node:process";
import { createInterface } from "node:readline";
import { fileURLToPath } from "node:url";
import { parseArgs } from "node:util";
import type { Writable } from "node:stream";

import { annotateLines } from "./annotate.js";
import { ConfigError, resolveConfig, type AdapterConfig } from "./config.js";

function usage(): string {
  return (
    "usage: glossaug-annotate [--in FILE] [--out FILE] [--language de|en]\n" +
    "                         [--model NAME] [--no-compounds] [--batch-size N] [--quiet]\n"
  );
}

async function run(cfg: AdapterConfig, inFile?: string, outFile?: string, quiet = false) {
  const input = inFile ? createReadStream(inFile, "utf8") : stdin;
  const output: Writable = outFile ? createWriteStream(outFile, "utf8") : stdout;
  const reader = createInterface({ input, crlfDelay: Infinity });

  let batch: string[] = [];
  let nextId = 1;
  let skipped = 0;
  const flush = () => {
    if (batch.length === 0) return;
    const result = annotateLines(batch, cfg, nextId);
    if (result.conllu) output.write(result.conllu);
    nextId += result.sentenceCount;
    skipped += result.skippedLines;
    batch = [];
  };
  for await (const line of reader) {
    batch.push(line);
    if (batch.length >= cfg.batchSize) flush();
  }
  flush();
  if (outFile) await new Promise((resolve) => output.end(resolve));
  if (!quiet) {
    stderr.write(`annotated ${nextId - 1} sentences (${skipped} lines skipped)\n`);
  }
}

export async function main(args: string[]): Promise<number> {
  let parsed;
  try {
    parsed = parseArgs({
      args,
      options: {
        in: { type: "string" },
        out: { type: "string" },
        language: { type: "string", default: "de" },
        model: { type: "string" },
        "no-compounds": { type: "boolean", default: false },
        "batch-size": { type: "string", default: "1000" },
        quiet: { type: "boolean", default: false },
        help: { type: "boolean", default: false },
      },
    });
  } catch (err) {
    stderr.write(`${(err as Error).message}\n${usage()}`);
    return 1;
  }
  const values = parsed.values;
  if (values.help) {
    stdout.write(usage());
    return 0;
  }
  let cfg: AdapterConfig;
  try {
    const language = values.language as AdapterConfig["language"];
    cfg = resolveConfig({
      language,
      model: values.model,
      compoundSplitting: values["no-compounds"] ? false : language === "de",
      batchSize: Number(values["batch-size"]),
    });
  } catch (err) {
    if (err instanceof ConfigError) {
      stderr.write(`startup error: ${err.message}\n`);
      return 1;
    }
    throw err;
  }
  try {
    await run(cfg, values.in, values.out, values.quiet);
  } catch (err) {
    stderr.write(`error: ${(err as Error).message}\n`);
    return 2;
  }
  return 0;
}

function isDirectRun(): boolean {
  if (!argv[1]) return false;
  try {
    return realpathSync(argv[1]) === fileURLToPath(import.meta.url);
  } catch {
    return false;
  }
}

if (isDirectRun()) {
  main(argv.slice(2)).then((code) => exit(code));
}
