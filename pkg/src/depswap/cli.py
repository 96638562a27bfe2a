"""Command-line entry point.

Subcommands: preprocess, transform, stats, minpairs, sample, score, serve.
Options may come from a JSON or TOML config file (--config); explicit flags
win over config values.
"""
from __future__ import annotations

import argparse
import json
import sys
from contextlib import nullcontext
from pathlib import Path

from .conllu import parse_conllu, write_conllu
from .corpus import (
    gen_minimal_pairs,
    read_records,
    sample_for_annotation,
    swap_histogram,
    transform_corpus,
)
from .policies import LANGUAGES, TIGHTNESS_LEVELS
from .preprocess import PreprocessConfig, PreprocessReport, preprocess_pipeline
from .swap import ALL_PAIRS, SwapRecord
from .validation import AnnotationRecord, reweight, score


def _load_config(path: str | None) -> dict:
    if not path:
        return {}
    text = Path(path).read_text(encoding="utf-8")
    if path.endswith(".toml"):
        try:
            import tomllib  # py311+
        except ModuleNotFoundError:
            import tomli as tomllib
        return tomllib.loads(text)
    return json.loads(text)


def _apply_config(args: argparse.Namespace, parser: argparse.ArgumentParser) -> None:
    config = _load_config(getattr(args, "config", None))
    for key, value in config.items():
        attr = key.replace("-", "_")
        if not hasattr(args, attr):
            parser.error(f"unknown config key {key!r}")
        # flags given on the command line keep priority
        if parser.get_default(attr) == getattr(args, attr):
            setattr(args, attr, value)


def _open_in(path: str):
    if path == "-":
        return nullcontext(sys.stdin)
    return open(path, encoding="utf-8")


def _open_out(path: str):
    if path == "-":
        return nullcontext(sys.stdout)
    return open(path, "w", encoding="utf-8")


def cmd_preprocess(args) -> int:
    config = PreprocessConfig.for_language(args.lang)
    if args.keep_case:
        config.lowercase = False
    if args.keep_punct:
        config.remove_punct = False
    if args.keep_brackets:
        config.remove_bracketed = False
    if args.keep_latin:
        config.drop_latin_sentences = False
    if args.no_lift:
        config.lift = False
    report = PreprocessReport()
    with _open_in(args.input) as src, _open_out(args.output) as dst:
        kept = (
            out
            for sent in parse_conllu(src)
            if (out := preprocess_pipeline(sent, config, report)) is not None
        )
        write_conllu(kept, dst)
    print(json.dumps(vars(report)), file=sys.stderr)
    return 0


def cmd_transform(args) -> int:
    pairs = ALL_PAIRS if args.pair == "all" else [args.pair]
    if len(pairs) > 1 and ("{pair}" not in args.output or "{pair}" not in (args.records or "{pair}")):
        print("--pair all needs '{pair}' in --output (and --records)", file=sys.stderr)
        return 2
    for pair in pairs:
        out_path = args.output.replace("{pair}", pair)
        rec_path = args.records.replace("{pair}", pair) if args.records else None
        with _open_in(args.input) as src, _open_out(out_path) as dst:
            rec_fh = open(rec_path, "w", encoding="utf-8") if rec_path else None
            try:
                report = transform_corpus(
                    src,
                    pair,
                    args.lang,
                    dst,
                    rec_fh,
                    tightness=args.object_tightness,
                    workers=args.workers,
                )
            finally:
                if rec_fh:
                    rec_fh.close()
        print(json.dumps(report.summary()), file=sys.stderr)
    return 0


def cmd_stats(args) -> int:
    n_sentences = args.sentences
    if args.corpus:
        with _open_in(args.corpus) as fh:
            n_sentences = sum(1 for _ in parse_conllu(fh))
    with _open_in(args.records) as fh:
        hist = swap_histogram(read_records(fh), n_sentences=n_sentences)
    with _open_out(args.output) as out:
        out.write(hist.to_tsv())
    return 0


def cmd_minpairs(args) -> int:
    with _open_in(args.input) as src, _open_out(args.output) as dst:
        count = 0
        for pair in gen_minimal_pairs(
            parse_conllu(src), args.pair, args.lang, tightness=args.object_tightness
        ):
            dst.write(pair.to_json() + "\n")
            count += 1
    print(f"minimal pairs written: {count}", file=sys.stderr)
    return 0


def cmd_sample(args) -> int:
    with _open_in(args.records) as fh:
        records = list(read_records(fh))
    with _open_in(args.input) as src:
        result = sample_for_annotation(
            parse_conllu(src), iter(records), args.pair, args.lang, args.seed
        )
    with _open_out(args.output) as dst:
        for task in result.tasks:
            dst.write(json.dumps(task, ensure_ascii=False) + "\n")
    if result.shortfall or result.zero_shortfall:
        print(
            f"warning: sample short by {result.shortfall} sentences"
            f" ({result.zero_shortfall} zero-swap)",
            file=sys.stderr,
        )
    return 0


def _silver_by_sentence(lines) -> dict[str, list[SwapRecord]]:
    silver: dict[str, list[SwapRecord]] = {}
    for sent_id, record in read_records(lines):
        silver.setdefault(sent_id, []).append(record)
    return silver


def cmd_score(args) -> int:
    with _open_in(args.records) as fh:
        silver = _silver_by_sentence(fh)
    known = None
    if args.tasks:
        known = set(silver)
        with _open_in(args.tasks) as fh:
            for line in fh:
                if line.strip():
                    task = json.loads(line)
                    known.add(task["sent_id"])
                    silver.setdefault(task["sent_id"], [])
    with _open_in(args.annotations) as fh:
        annotations = [AnnotationRecord.from_json(l) for l in fh if l.strip()]
    report = score(silver, annotations, pair_type=args.pair, known_sent_ids=known)
    if args.json:
        print(json.dumps(report.summary()))
    else:
        print(report.table())
    if args.zero_fraction is not None:
        rw = reweight(report, args.zero_fraction)
        if args.json:
            print(json.dumps(rw.summary()))
        else:
            print(rw.table())
    return 0


def cmd_serve(args) -> int:
    from .server import AnnotationServer

    server = AnnotationServer(
        tasks_path=args.tasks,
        state_path=args.state,
        host=args.host,
        port=args.port,
    )
    server.start()
    print(f"serving on http://{server.host}:{server.port}", flush=True)
    try:
        server.wait()
    except KeyboardInterrupt:
        server.stop()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="depswap",
        description="Counterfactual word-order variants of dependency treebanks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, pair=True):
        p.add_argument("--config", help="JSON or TOML config file")
        p.add_argument("--lang", choices=LANGUAGES, default="en")
        if pair:
            p.add_argument("--pair", choices=ALL_PAIRS + ("all",), default="vo")

    p = sub.add_parser("preprocess", help="clean a raw parsed corpus and lift copulas")
    common(p, pair=False)
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--keep-case", action="store_true")
    p.add_argument("--keep-punct", action="store_true")
    p.add_argument("--keep-brackets", action="store_true")
    p.add_argument("--keep-latin", action="store_true")
    p.add_argument("--no-lift", action="store_true")
    p.set_defaults(func=cmd_preprocess)

    p = sub.add_parser("transform", help="swap one correlation pair across a corpus")
    common(p)
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--records", help="swap-record JSONL output")
    p.add_argument("--object-tightness", choices=TIGHTNESS_LEVELS, default="loose")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("stats", help="swaps-per-sentence histogram from records")
    p.add_argument("--config", help="JSON or TOML config file")
    p.add_argument("--records", required=True)
    p.add_argument("--corpus", help="corpus file, for the zero-swap bucket")
    p.add_argument("--sentences", type=int, help="total sentence count, same purpose")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("minpairs", help="original/swapped minimal pairs")
    common(p)
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--object-tightness", choices=TIGHTNESS_LEVELS, default="loose")
    p.set_defaults(func=cmd_minpairs)

    p = sub.add_parser("sample", help="seeded annotation sample with silver spans")
    common(p)
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--records", required=True)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("score", help="precision/recall/Likert against gold annotations")
    p.add_argument("--config", help="JSON or TOML config file")
    p.add_argument("--pair", choices=ALL_PAIRS, default="vo")
    p.add_argument("--records", required=True)
    p.add_argument("--annotations", required=True)
    p.add_argument("--tasks", help="task file; enables unknown-sentence rejection")
    p.add_argument("--zero-fraction", type=float)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("serve", help="annotation backend for the browser UI")
    p.add_argument("--config", help="JSON or TOML config file")
    p.add_argument("--tasks", required=True)
    p.add_argument("--state", required=True)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8765)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _apply_config(args, parser)
    try:
        return args.func(args)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
