"""Command-line entry point.

One subcommand per pipeline: augment-general, augment-specific,
similarity, stats, subsample, mix, bpe-learn, bpe-apply, bpe-decode,
bleu.  Every command that writes files drops a ``manifest.json`` with the
fully resolved configuration next to its outputs; report-only commands
embed the configuration in the JSON they print.  Exit codes: 0 success,
1 usage error, 2 data error.

Augmentation streams sentences so corpora of hundreds of thousands of
lines run in constant memory; ``--jobs N`` fans sentences out to worker
processes without changing output bytes, because each sentence's RNG is
seeded from its corpus ordinal rather than from a shared stream.
"""

from __future__ import annotations

import argparse
import functools
import json
import multiprocessing
import shutil
import sys
from pathlib import Path
from typing import Iterable, Iterator

from . import __version__
from .bleu import copy_baseline, corpus_bleu
from .bpe import bpe_apply, bpe_decode, bpe_learn, load_merges, save_merges
from .corpus import (
    AnnotatedSentence,
    ConlluParseError,
    Origin,
    iter_conllu,
    read_lines,
    read_parallel,
    write_lines,
    write_parallel,
)
from .datasets import MixPlan, REAL_FRACTIONS, STAGES, build_stage, subsample_fraction, vocab_stats
from .general_rules import AugmentConfig, DEFAULT_KEPT_POS, DEFAULT_NEGATION_LEMMAS, augment_general
from .similarity import compare_corpora, load_feature_table
from .specific_rules import augment_specific

USAGE_ERROR = 1
DATA_ERROR = 2


class _Parser(argparse.ArgumentParser):
    """argparse with exit code 1 on usage errors instead of 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _log(quiet: bool, message: str) -> None:
    if not quiet:
        print(message, file=sys.stderr)


def _config_dict(args: argparse.Namespace) -> dict:
    skip = {"func", "quiet"}
    out = {}
    for key, value in sorted(vars(args).items()):
        if key in skip:
            continue
        if isinstance(value, Path):
            value = str(value)
        elif isinstance(value, (list, tuple)):
            value = [str(v) if isinstance(v, Path) else v for v in value]
        out[key] = value
    return out


def _write_manifest(out_dir: Path, args: argparse.Namespace, **extra) -> None:
    manifest = {
        "tool": "glossaug",
        "version": __version__,
        "command": args.command,
        "config": _config_dict(args),
    }
    manifest.update(extra)
    with open(out_dir / "manifest.json", "w", encoding="utf-8", newline="\n") as f:
        json.dump(manifest, f, indent=2, sort_keys=True, ensure_ascii=False)
        f.write("\n")


def _print_report(args: argparse.Namespace, report: dict) -> None:
    payload = dict(report)
    payload["config"] = _config_dict(args)
    print(json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False))


def _augment_config(args: argparse.Namespace) -> AugmentConfig:
    return AugmentConfig(
        kept_pos=frozenset(p.strip() for p in args.kept_pos.split(",") if p.strip()),
        drop_prob=args.drop_prob,
        max_displacement=args.max_displacement,
        seed=args.seed,
        casing=args.casing,
        negation_lemmas=frozenset(
            l.strip() for l in getattr(args, "negation_lemmas", "").split(",") if l.strip()
        )
        or DEFAULT_NEGATION_LEMMAS,
    )


def _general_job(item: tuple[int, AnnotatedSentence], cfg: AugmentConfig):
    ordinal, sent = item
    seq = augment_general(sent, cfg, ordinal)
    return sent.text(), None if seq is None else seq.text()


def _specific_job(item: tuple[int, AnnotatedSentence], cfg: AugmentConfig, svo: bool):
    _, sent = item
    seq = augment_specific(sent, cfg, svo=svo)
    return sent.text(), None if seq is None else seq.text()


def _map_sentences(job, items: Iterable, jobs: int) -> Iterator:
    if jobs <= 1:
        yield from map(job, items)
        return
    with multiprocessing.Pool(jobs) as pool:
        yield from pool.imap(job, items, chunksize=32)


def _run_augment(args: argparse.Namespace, job) -> int:
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    gloss_path = out_dir / f"{args.split}.gloss"
    text_path = out_dir / f"{args.split}.txt"
    read = kept = 0
    with open(args.infile, encoding="utf-8") as src, \
            open(gloss_path, "w", encoding="utf-8", newline="\n") as gloss_f, \
            open(text_path, "w", encoding="utf-8", newline="\n") as text_f:
        items = enumerate(iter_conllu(src))
        for text, gloss in _map_sentences(job, items, args.jobs):
            read += 1
            if gloss is None:
                continue
            gloss_f.write(gloss + "\n")
            text_f.write(text + "\n")
            kept += 1
    if kept == 0:
        gloss_path.unlink()
        text_path.unlink()
        raise ValueError(f"no sentence survived augmentation ({read} read)")
    _write_manifest(
        out_dir,
        args,
        sentences_read=read,
        pairs_written=kept,
        pairs_skipped=read - kept,
        outputs=[gloss_path.name, text_path.name],
    )
    _log(args.quiet, f"wrote {kept} pairs ({read - kept} skipped) to {out_dir}")
    return 0


def _cmd_augment_general(args: argparse.Namespace) -> int:
    cfg = _augment_config(args)
    return _run_augment(args, functools.partial(_general_job, cfg=cfg))


def _cmd_augment_specific(args: argparse.Namespace) -> int:
    cfg = _augment_config(args)
    return _run_augment(
        args, functools.partial(_specific_job, cfg=cfg, svo=not args.no_svo)
    )


def _cmd_similarity(args: argparse.Namespace) -> int:
    a_tokens = [tok for line in read_lines(args.a) for tok in line.split()]
    b_tokens = [tok for line in read_lines(args.b) for tok in line.split()]
    features = load_feature_table(args.features) if args.features else None
    a_tag = args.a_tag or Path(args.a).stem
    b_tag = args.b_tag or Path(args.b).stem
    report = compare_corpora(
        a_tokens, b_tokens, a_tag, b_tag, casefold=args.casefold, features=features
    )
    _print_report(args, report.to_dict())
    if args.out:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        with open(out_dir / "similarity.json", "w", encoding="utf-8", newline="\n") as f:
            json.dump(report.to_dict(), f, indent=2, sort_keys=True, ensure_ascii=False)
            f.write("\n")
        syntactic = "" if report.syntactic is None else f"{report.syntactic:.6f}"
        write_lines(
            out_dir / "scatter.tsv",
            ["lexical\tsyntactic", f"{float(report.word_overlap):.6f}\t{syntactic}"],
        )
        _write_manifest(out_dir, args, outputs=["similarity.json", "scatter.tsv"])
    return 0


def _cmd_stats(args: argparse.Namespace) -> int:
    pairs = read_parallel(args.indir, args.split, Origin.REAL)
    _print_report(args, vocab_stats(pairs).to_dict())
    return 0


def _cmd_subsample(args: argparse.Namespace) -> int:
    pairs = read_parallel(args.indir, args.split, Origin.REAL)
    sample = subsample_fraction(pairs, args.fraction, args.seed)
    out_dir = Path(args.out)
    write_parallel(sample, out_dir, args.split)
    _write_manifest(
        out_dir,
        args,
        pairs_in=len(pairs),
        pairs_out=len(sample),
        outputs=[f"{args.split}.gloss", f"{args.split}.txt"],
    )
    _log(args.quiet, f"sampled {len(sample)}/{len(pairs)} pairs to {out_dir}")
    return 0


def _copy_split(src_dir: Path, split: str, dst_dir: Path) -> bool:
    src_gloss = src_dir / f"{split}.gloss"
    src_text = src_dir / f"{split}.txt"
    if not (src_gloss.exists() and src_text.exists()):
        return False
    shutil.copyfile(src_gloss, dst_dir / f"{split}.gloss")
    shutil.copyfile(src_text, dst_dir / f"{split}.txt")
    return True


def _cmd_mix(args: argparse.Namespace) -> int:
    real_dir = Path(args.real)
    synth_dir = Path(args.synthetic)
    synth_origin = (
        Origin.SYNTHETIC_SPECIFIC
        if args.synthetic_origin == "specific"
        else Origin.SYNTHETIC_GENERAL
    )
    real = tuple(read_parallel(real_dir, "train", Origin.REAL))
    synthetic = tuple(read_parallel(synth_dir, "train", synth_origin))
    stages = list(STAGES) if args.stage == "all" else [args.stage]
    for stage in stages:
        plan = MixPlan(
            real=real,
            synthetic=synthetic,
            stage=stage,
            fraction=args.fraction,
            seed=args.seed,
        )
        train = build_stage(plan)
        stage_dir = Path(args.out) / stage
        write_parallel(train, stage_dir, "train")
        # dev: the pretrain stage validates on synthetic data when available
        dev_done = False
        if stage == "pretrain":
            dev_done = _copy_split(synth_dir, "dev", stage_dir)
        if not dev_done and not _copy_split(real_dir, "dev", stage_dir):
            raise ValueError(f"missing dev split under {real_dir}")
        if not _copy_split(real_dir, "test", stage_dir):
            raise ValueError(f"missing test split under {real_dir}")
        origin_counts: dict[str, int] = {}
        for pair in train:
            origin_counts[pair.origin.value] = origin_counts.get(pair.origin.value, 0) + 1
        _write_manifest(
            stage_dir,
            args,
            stage=stage,
            train_pairs=len(train),
            train_origins=origin_counts,
            outputs=sorted(p.name for p in stage_dir.glob("*.gloss"))
            + sorted(p.name for p in stage_dir.glob("*.txt")),
        )
        _log(args.quiet, f"stage {stage}: {len(train)} train pairs -> {stage_dir}")
    return 0


def _cmd_bpe_learn(args: argparse.Namespace) -> int:
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    inputs = [Path(p) for p in args.infiles]

    def tokens(paths: list[Path]) -> Iterator[str]:
        for path in paths:
            with open(path, encoding="utf-8") as f:
                for line in f:
                    yield from line.split()

    outputs = []
    if args.separate:
        for path in inputs:
            model = bpe_learn(
                tokens([path]), args.merges, marker=args.marker,
                vocab_threshold=args.min_word_freq,
            )
            name = f"{path.name}.codes"
            save_merges(model, out_dir / name)
            outputs.append((name, len(model.merges)))
    else:
        model = bpe_learn(
            tokens(inputs), args.merges, marker=args.marker,
            vocab_threshold=args.min_word_freq,
        )
        save_merges(model, out_dir / args.name)
        outputs.append((args.name, len(model.merges)))
    _write_manifest(
        out_dir,
        args,
        outputs=[name for name, _ in outputs],
        learned_merges={name: count for name, count in outputs},
    )
    for name, count in outputs:
        _log(args.quiet, f"learned {count} merges -> {out_dir / name}")
    return 0


def _bpe_output_name(in_path: Path, decode: bool) -> str:
    parts = in_path.name.split(".")
    if decode:
        if "bpe" in parts[1:]:
            parts.remove("bpe")
        else:
            parts.insert(1, "debpe")
    else:
        parts.insert(max(1, len(parts) - 1), "bpe")
    return ".".join(parts)


def _cmd_bpe_apply(args: argparse.Namespace) -> int:
    model = load_merges(args.codes, marker=args.marker)
    in_path = Path(args.infile)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    name = args.name or _bpe_output_name(in_path, decode=False)
    count = 0
    with open(in_path, encoding="utf-8") as src, \
            open(out_dir / name, "w", encoding="utf-8", newline="\n") as dst:
        for line in src:
            dst.write(bpe_apply(model, line.rstrip("\n")) + "\n")
            count += 1
    _write_manifest(out_dir, args, lines=count, outputs=[name])
    _log(args.quiet, f"applied {len(model.merges)} merges to {count} lines -> {out_dir / name}")
    return 0


def _cmd_bpe_decode(args: argparse.Namespace) -> int:
    in_path = Path(args.infile)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    name = args.name or _bpe_output_name(in_path, decode=True)
    count = 0
    with open(in_path, encoding="utf-8") as src, \
            open(out_dir / name, "w", encoding="utf-8", newline="\n") as dst:
        for line in src:
            dst.write(bpe_decode(line.rstrip("\n"), marker=args.marker) + "\n")
            count += 1
    _write_manifest(out_dir, args, lines=count, outputs=[name])
    _log(args.quiet, f"decoded {count} lines -> {out_dir / name}")
    return 0


def _cmd_bleu(args: argparse.Namespace) -> int:
    hyps = read_lines(args.hyp)
    refs = read_lines(args.ref)
    if args.copy_baseline:
        report = copy_baseline(hyps, refs, smooth=args.smooth)
    else:
        report = corpus_bleu(hyps, refs, smooth=args.smooth)
    _print_report(args, report.to_dict())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="glossaug", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"glossaug {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    def add(name: str, func, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func, command=name)
        p.add_argument("--quiet", action="store_true", help="suppress progress messages")
        return p

    def add_augment(name, func, help):
        p = add(name, func, help)
        p.add_argument("--in", dest="infile", required=True, help="annotated corpus (CoNLL-U)")
        p.add_argument("--out", required=True, help="output directory")
        p.add_argument("--split", default="train", help="output split name (default train)")
        p.add_argument("--seed", type=int, default=0, help="global random seed (default 0)")
        p.add_argument("--drop-prob", type=float, default=0.2,
                       help="per-token deletion probability (default 0.2)")
        p.add_argument("--max-displacement", type=int, default=4,
                       help="permutation displacement bound (default 4)")
        p.add_argument("--kept-pos", default=",".join(sorted(DEFAULT_KEPT_POS)),
                       help="comma-separated UPOS tags to keep")
        p.add_argument("--casing", choices=("upper", "preserve"), default="upper")
        p.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
        return p

    add_augment("augment-general", _cmd_augment_general,
                "synthesize gloss/text pairs with the language-agnostic rules")
    p = add_augment("augment-specific", _cmd_augment_specific,
                    "synthesize gloss/text pairs with the German-DGS rules")
    p.add_argument("--negation-lemmas", default=",".join(sorted(DEFAULT_NEGATION_LEMMAS)),
                   help="comma-separated lemmas treated as negation")
    p.add_argument("--no-svo", action="store_true", help="skip verb-object reordering")

    p = add("similarity", _cmd_similarity, "lexical/syntactic similarity between two corpora")
    p.add_argument("--a", required=True, help="first corpus (plain text)")
    p.add_argument("--b", required=True, help="second corpus (plain text)")
    p.add_argument("--a-tag", help="language tag of the first corpus")
    p.add_argument("--b-tag", help="language tag of the second corpus")
    p.add_argument("--features", help="typological feature table (TSV, -- = missing)")
    p.add_argument("--no-casefold", dest="casefold", action="store_false",
                   help="compare types case-sensitively")
    p.add_argument("--out", help="also write similarity.json and scatter.tsv here")

    p = add("stats", _cmd_stats, "pair and vocabulary counts of one split")
    p.add_argument("--in", dest="indir", required=True, help="directory with <split>.{gloss,txt}")
    p.add_argument("--split", default="train", choices=("train", "dev", "test"))

    p = add("subsample", _cmd_subsample, "sample a fraction of a split, order-preserving")
    p.add_argument("--in", dest="indir", required=True)
    p.add_argument("--split", default="train", choices=("train", "dev", "test"))
    p.add_argument("--fraction", type=float, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)

    p = add("mix", _cmd_mix, "build curriculum stage datasets (pretrain/mixed/finetune)")
    p.add_argument("--real", required=True, help="directory with the real train/dev/test splits")
    p.add_argument("--synthetic", required=True, help="directory with the synthetic train split")
    p.add_argument("--stage", choices=STAGES + ("all",), default="all")
    p.add_argument("--fraction", type=float, default=1.0,
                   help=f"real-data fraction, one of {REAL_FRACTIONS}")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--synthetic-origin", choices=("general", "specific"), default="general")
    p.add_argument("--out", required=True)

    p = add("bpe-learn", _cmd_bpe_learn, "learn BPE merges from one or more corpora")
    p.add_argument("--in", dest="infiles", action="append", required=True,
                   help="training corpus; repeat for joint learning over several files")
    p.add_argument("--merges", type=int, required=True, help="number of merges to learn")
    p.add_argument("--out", required=True)
    p.add_argument("--name", default="bpe.codes", help="codes file name (joint mode)")
    p.add_argument("--separate", action="store_true",
                   help="learn one model per input instead of a joint one")
    p.add_argument("--marker", default="@@")
    p.add_argument("--min-word-freq", type=int, default=1)

    p = add("bpe-apply", _cmd_bpe_apply, "segment a corpus with learned merges")
    p.add_argument("--codes", required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--name", help="output file name (default: insert .bpe)")
    p.add_argument("--marker", default="@@")

    p = add("bpe-decode", _cmd_bpe_decode, "undo BPE segmentation")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--name", help="output file name (default: drop .bpe)")
    p.add_argument("--marker", default="@@")

    p = add("bleu", _cmd_bleu, "corpus BLEU of a hypothesis file against references")
    p.add_argument("--hyp", required=True)
    p.add_argument("--ref", required=True)
    p.add_argument("--smooth", action="store_true", help="add-one smoothing for orders 2..4")
    p.add_argument("--copy-baseline", action="store_true",
                   help="label the run as the copy-source baseline")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:  # usage error, --help, --version
        return exit_.code if isinstance(exit_.code, int) else USAGE_ERROR
    if not hasattr(args, "func"):
        parser.print_usage(sys.stderr)
        return USAGE_ERROR
    try:
        return args.func(args)
    except (ConlluParseError, ValueError, OSError) as err:
        print(f"glossaug {args.command}: error: {err}", file=sys.stderr)
        return DATA_ERROR


if __name__ == "__main__":
    sys.exit(main())
