"""Streaming corpus transformation, swap statistics, minimal pairs, sampling.

Each run produces one word-order variant of a corpus: transformed CoNLL-U
plus one JSON line per swap record.  Sentences are independent, so the
transform can fan out over worker processes; per-worker tallies merge into
one report and output order follows input order.
"""
from __future__ import annotations

import json
import multiprocessing
import random
import time
from dataclasses import asdict, dataclass, field
from typing import Iterable, Iterator, TextIO

from .conllu import ParseReport, Sentence, parse_conllu, sentence_to_conllu
from .policies import get_policy
from .preprocess import PreprocessReport
from .swap import VO, Span, SwapRecord, applied_swap_count, swap_sentence

VO_SAMPLE_QUOTA = 120
DEFAULT_SAMPLE_QUOTA = 40
ZERO_SWAP_QUOTA = 20


@dataclass
class ProcessingReport:
    pair_type: str = ""
    language: str = ""
    sentences_in: int = 0
    sentences_out: int = 0
    tokens_out: int = 0
    records_applied: int = 0
    records_skipped: dict[str, int] = field(default_factory=dict)
    parse: ParseReport = field(default_factory=ParseReport)
    preprocess: PreprocessReport = field(default_factory=PreprocessReport)
    elapsed_seconds: float = 0.0

    @property
    def sentences_per_minute(self) -> float:
        if self.elapsed_seconds <= 0:
            return 0.0
        return self.sentences_out * 60.0 / self.elapsed_seconds

    def count_records(self, records: list[SwapRecord]) -> None:
        for record in records:
            if record.applied:
                self.records_applied += len(record.dep_spans)
            else:
                key = record.skip_reason or "unknown"
                self.records_skipped[key] = self.records_skipped.get(key, 0) + 1

    def summary(self) -> dict:
        return {
            "pair_type": self.pair_type,
            "language": self.language,
            "sentences_in": self.sentences_in,
            "sentences_out": self.sentences_out,
            "tokens_out": self.tokens_out,
            "records_applied": self.records_applied,
            "records_skipped": dict(self.records_skipped),
            "parse_errors": len(self.parse.errors),
            "multiword_dropped": self.parse.multiword_dropped,
            "empty_nodes_dropped": self.parse.empty_nodes_dropped,
            "elapsed_seconds": round(self.elapsed_seconds, 3),
            "sentences_per_minute": round(self.sentences_per_minute, 1),
        }


def record_to_json(sent_id: str, record: SwapRecord) -> str:
    return json.dumps(
        {
            "sent_id": sent_id,
            "pair_type": record.pair_type,
            "head": record.head_span.token_ids,
            "deps": [d.token_ids for d in record.dep_spans],
            "applied": record.applied,
            "skip_reason": record.skip_reason,
        },
        ensure_ascii=False,
    )


def record_from_json(line: str) -> tuple[str, SwapRecord]:
    data = json.loads(line)
    head = Span(list(data["head"]), data["head"][0] if data["head"] else 0)
    deps = [Span(list(d), d[0] if d else 0) for d in data["deps"]]
    record = SwapRecord(
        pair_type=data["pair_type"],
        head_span=head,
        dep_spans=deps,
        applied=data["applied"],
        skip_reason=data.get("skip_reason"),
    )
    return data["sent_id"], record


def read_records(lines: Iterable[str]) -> Iterator[tuple[str, SwapRecord]]:
    for line in lines:
        line = line.strip()
        if line:
            yield record_from_json(line)


def _ensure_sent_id(sentence: Sentence, index: int) -> str:
    sid = sentence.sent_id
    if not sid:
        sid = f"s{index}"
        sentence.meta["sent_id"] = sid
        sentence.comments.append(f"# sent_id = {sid}")
    return sid


def _transform_block(args) -> tuple[str, list[str], int, int, dict[str, int]]:
    """Worker body: one raw CoNLL-U block in, transformed block plus record
    lines and counters out.  Re-raises nothing; unparseable blocks vanish
    into the counters."""
    text, index, language, pair_type, tightness = args
    report = ParseReport()
    sents = list(parse_conllu(text.splitlines(), report))
    if not sents:
        return "", [], 0, 0, {"parse-error": 1}
    sent = sents[0]
    sid = _ensure_sent_id(sent, index)
    policy = get_policy(language, tightness)
    records = swap_sentence(sent, pair_type, policy)
    lines = [record_to_json(sid, r) for r in records]
    applied = applied_swap_count(records)
    skipped: dict[str, int] = {}
    for r in records:
        if not r.applied:
            skipped[r.skip_reason or "unknown"] = skipped.get(r.skip_reason or "unknown", 0) + 1
    return sentence_to_conllu(sent) + "\n", lines, len(sent), applied, skipped


def _blocks(stream: Iterable[str]) -> Iterator[str]:
    block: list[str] = []
    for raw in stream:
        if raw.strip() == "":
            if block:
                yield "\n".join(block) + "\n"
                block = []
        else:
            block.append(raw.rstrip("\n").rstrip("\r"))
    if block:
        yield "\n".join(block) + "\n"


def transform_corpus(
    stream: Iterable[str],
    pair_type: str,
    language: str,
    out_conllu: TextIO,
    out_records: TextIO | None = None,
    tightness: str = "loose",
    workers: int = 1,
) -> ProcessingReport:
    """Swap one pair type across a preprocessed CoNLL-U stream.

    Writes the transformed corpus and one JSON line per swap record; returns
    tallies including throughput.  `workers` > 1 distributes whole sentences
    over processes, preserving input order.
    """
    report = ProcessingReport(pair_type=pair_type, language=language)
    start = time.monotonic()
    jobs = (
        (block, i + 1, language, pair_type, tightness)
        for i, block in enumerate(_blocks(stream))
    )
    if workers > 1:
        with multiprocessing.Pool(workers) as pool:
            results = pool.imap(_transform_block, jobs, chunksize=64)
            _drain_transform(results, report, out_conllu, out_records)
    else:
        _drain_transform(map(_transform_block, jobs), report, out_conllu, out_records)
    report.elapsed_seconds = time.monotonic() - start
    return report


def _drain_transform(results, report, out_conllu, out_records) -> None:
    for conllu_text, record_lines, n_tokens, applied, skipped in results:
        report.sentences_in += 1
        if not conllu_text:
            continue
        report.sentences_out += 1
        report.tokens_out += n_tokens
        report.records_applied += applied
        for key, count in skipped.items():
            report.records_skipped[key] = report.records_skipped.get(key, 0) + count
        out_conllu.write(conllu_text)
        if out_records is not None:
            for line in record_lines:
                out_records.write(line + "\n")


@dataclass
class SwapHistogram:
    pair_type: str
    counts: dict[int, int] = field(default_factory=dict)
    total_swaps: int = 0
    identified: int = 0

    @property
    def sentences(self) -> int:
        return sum(self.counts.values())

    def to_tsv(self) -> str:
        lines = ["n_swaps\tn_sentences"]
        for k in sorted(self.counts):
            lines.append(f"{k}\t{self.counts[k]}")
        lines.append(f"# total_swaps\t{self.total_swaps}")
        lines.append(f"# identified_pairs\t{self.identified}")
        return "\n".join(lines) + "\n"


def swap_histogram(
    records: Iterable[tuple[str, SwapRecord]],
    n_sentences: int | None = None,
) -> SwapHistogram:
    """Applied swaps per sentence.  Sentences absent from the record stream
    had no candidates at all; pass `n_sentences` to fold them into the zero
    bucket (the stream alone cannot see them)."""
    histogram: SwapHistogram | None = None
    per_sentence: dict[str, int] = {}
    identified = 0
    for sent_id, record in records:
        if histogram is None:
            histogram = SwapHistogram(pair_type=record.pair_type)
        elif record.pair_type != histogram.pair_type:
            raise ValueError(
                f"mixed pair types in record stream: {histogram.pair_type} vs {record.pair_type}"
            )
        per_sentence.setdefault(sent_id, 0)
        identified += len(record.dep_spans)
        if record.applied:
            per_sentence[sent_id] += len(record.dep_spans)
    if histogram is None:
        histogram = SwapHistogram(pair_type="")
    for count in per_sentence.values():
        histogram.counts[count] = histogram.counts.get(count, 0) + 1
        histogram.total_swaps += count
    histogram.identified = identified
    if n_sentences is not None and n_sentences > histogram.sentences:
        missing = n_sentences - histogram.sentences
        histogram.counts[0] = histogram.counts.get(0, 0) + missing
    return histogram


@dataclass
class MinimalPair:
    sent_id: str
    pair_type: str
    original: str
    swapped: str
    n_swaps: int

    def to_json(self) -> str:
        return json.dumps(asdict(self), ensure_ascii=False)


def gen_minimal_pairs(
    sentences: Iterable[Sentence],
    pair_type: str,
    language: str,
    tightness: str = "loose",
) -> Iterator[MinimalPair]:
    """Original/swapped sentence pairs for every sentence the swap actually
    reorders.  Order-preserving swaps and swap-free sentences emit nothing,
    so original != swapped always holds."""
    policy = get_policy(language, tightness)
    for index, sent in enumerate(sentences, start=1):
        sid = _ensure_sent_id(sent, index)
        original = sent.forms()
        records = swap_sentence(sent, pair_type, policy)
        n_swaps = applied_swap_count(records)
        if n_swaps == 0:
            continue
        swapped = sent.forms()
        if swapped == original:
            continue
        yield MinimalPair(
            sent_id=sid,
            pair_type=pair_type,
            original=policy.separator.join(original),
            swapped=policy.separator.join(swapped),
            n_swaps=n_swaps,
        )


def sample_quota(pair_type: str) -> int:
    return VO_SAMPLE_QUOTA if pair_type == VO else DEFAULT_SAMPLE_QUOTA


@dataclass
class SampleResult:
    tasks: list[dict]
    shortfall: int = 0  # sentences short of the quota overall
    zero_shortfall: int = 0  # zero-swap sentences short of their 20


def sample_for_annotation(
    sentences: Iterable[Sentence],
    records: Iterable[tuple[str, SwapRecord]],
    pair_type: str,
    language: str,
    seed: int,
) -> SampleResult:
    """Seeded annotation sample: 120 sentences for verb/object, 40 for other
    pairs, always including 20 sentences with zero applied swaps when the
    corpus has them.  Identical seeds give identical samples."""
    applied_by_sent: dict[str, list[SwapRecord]] = {}
    for sent_id, record in records:
        if record.applied:
            applied_by_sent.setdefault(sent_id, []).append(record)

    all_sents: list[Sentence] = []
    for index, sent in enumerate(sentences, start=1):
        _ensure_sent_id(sent, index)
        all_sents.append(sent)

    with_swaps = [s for s in all_sents if applied_by_sent.get(s.sent_id)]
    zero_swaps = [s for s in all_sents if not applied_by_sent.get(s.sent_id)]

    quota = sample_quota(pair_type)
    zero_quota = min(ZERO_SWAP_QUOTA, quota)
    rng = random.Random(seed)

    take_zero = min(zero_quota, len(zero_swaps))
    take_swaps = min(quota - take_zero, len(with_swaps))
    chosen = rng.sample(zero_swaps, take_zero) + rng.sample(with_swaps, take_swaps)
    rng.shuffle(chosen)

    separator = " " if language == "en" else ""
    tasks = []
    for sent in chosen:
        tasks.append(
            {
                "sent_id": sent.sent_id,
                "pair_type": pair_type,
                "language": language,
                "tokens": [
                    {"id": t.id, "form": t.form, "upos": t.upos} for t in sent.tokens
                ],
                "text": sent.text(separator),
                "silver": [
                    {
                        "head": r.head_span.token_ids,
                        "deps": [d.token_ids for d in r.dep_spans],
                    }
                    for r in applied_by_sent.get(sent.sent_id, [])
                ],
            }
        )
    return SampleResult(
        tasks=tasks,
        shortfall=max(0, quota - len(chosen)),
        zero_shortfall=max(0, zero_quota - take_zero),
    )
