"""Score algorithm-identified (silver) swaps against human gold annotations.

A silver pair is correct only when its exact (head token set, dependent
token set) appears in the gold list for the same sentence; partial overlaps
count as wrong, with the Likert score carrying the soft signal.  Precision
is correct/silver, recall correct/gold, pooled over all annotated
sentences.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

from .swap import SwapRecord

Pair = tuple[frozenset[int], frozenset[int]]


@dataclass
class AnnotationRecord:
    sent_id: str
    annotator_id: str
    gold_pairs: list[tuple[list[int], list[int]]]
    likert: int
    comment: str = ""
    timestamp: float = 0.0

    def __post_init__(self) -> None:
        if self.likert not in (1, 2, 3, 4, 5):
            raise ValueError(f"likert must be 1..5, got {self.likert!r}")

    def pair_set(self) -> set[Pair]:
        return {(frozenset(h), frozenset(d)) for h, d in self.gold_pairs}

    def to_json(self) -> str:
        return json.dumps(
            {
                "sent_id": self.sent_id,
                "annotator": self.annotator_id,
                "gold_pairs": [
                    {"head": list(h), "dep": list(d)} for h, d in self.gold_pairs
                ],
                "likert": self.likert,
                "comment": self.comment,
                "timestamp": self.timestamp,
            },
            ensure_ascii=False,
        )

    @classmethod
    def from_json(cls, line: str) -> "AnnotationRecord":
        data = json.loads(line)
        return cls(
            sent_id=data["sent_id"],
            annotator_id=data.get("annotator", ""),
            gold_pairs=[
                (list(p["head"]), list(p["dep"])) for p in data.get("gold_pairs", [])
            ],
            likert=int(data["likert"]),
            comment=data.get("comment", ""),
            timestamp=float(data.get("timestamp", 0.0)),
        )


@dataclass
class SentenceTally:
    sent_id: str
    n_silver: int
    n_gold: int
    n_correct: int
    likert: int


@dataclass
class ValidationReport:
    pair_type: str
    precision: float | None
    recall: float | None
    mean_likert: float | None
    n_sentences: int
    n_silver: int
    n_gold: int
    n_correct: int
    weighting: str = "raw"
    zero_swap_fraction: float | None = None
    rejected_annotations: list[str] = field(default_factory=list)
    duplicate_annotations: list[str] = field(default_factory=list)
    per_sentence: list[SentenceTally] = field(default_factory=list)

    def summary(self) -> dict:
        return {
            "pair_type": self.pair_type,
            "weighting": self.weighting,
            "precision": None if self.precision is None else round(self.precision, 4),
            "recall": None if self.recall is None else round(self.recall, 4),
            "mean_likert": None
            if self.mean_likert is None
            else round(self.mean_likert, 3),
            "n_sentences": self.n_sentences,
            "n_silver": self.n_silver,
            "n_gold": self.n_gold,
            "n_correct": self.n_correct,
            "rejected_annotations": len(self.rejected_annotations),
            "duplicate_annotations": len(self.duplicate_annotations),
        }

    def table(self) -> str:
        def pct(x: float | None) -> str:
            return "-" if x is None else f"{100 * x:5.1f}"

        def val(x: float | None) -> str:
            return "-" if x is None else f"{x:.1f}"

        header = f"{'Pair':<10} {'Prec':>6} {'Rec':>6} {'Val':>5}"
        row = (
            f"{self.pair_type:<10} {pct(self.precision):>6} "
            f"{pct(self.recall):>6} {val(self.mean_likert):>5}"
        )
        return header + "\n" + row


def silver_pairs(records: Iterable[SwapRecord]) -> set[Pair]:
    pairs: set[Pair] = set()
    for record in records:
        if record.applied:
            pairs.update(record.pairs())
    return pairs


def dedupe_annotations(
    annotations: Iterable[AnnotationRecord],
) -> tuple[dict[str, AnnotationRecord], list[str]]:
    """One annotation per sentence: earliest timestamp wins, ties keep the
    first seen; later ones are reported as duplicates."""
    chosen: dict[str, AnnotationRecord] = {}
    duplicates: list[str] = []
    for ann in annotations:
        held = chosen.get(ann.sent_id)
        if held is None:
            chosen[ann.sent_id] = ann
        elif ann.timestamp < held.timestamp:
            duplicates.append(f"{held.sent_id}/{held.annotator_id}")
            chosen[ann.sent_id] = ann
        else:
            duplicates.append(f"{ann.sent_id}/{ann.annotator_id}")
    return chosen, duplicates


def score(
    silver: dict[str, list[SwapRecord]],
    annotations: Iterable[AnnotationRecord],
    pair_type: str = "",
    known_sent_ids: set[str] | None = None,
) -> ValidationReport:
    """Pool precision, recall, and mean Likert over the annotated sentences.

    `silver` maps sent_id to that sentence's swap records (zero-swap
    sentences may be absent or map to an empty list).  Annotations for
    unknown sentences are rejected and reported when `known_sent_ids` is
    given.  Input order never affects the result.
    """
    rejected: list[str] = []
    accepted: list[AnnotationRecord] = []
    for ann in annotations:
        if known_sent_ids is not None and ann.sent_id not in known_sent_ids:
            rejected.append(ann.sent_id)
        else:
            accepted.append(ann)
    accepted.sort(key=lambda a: (a.timestamp, a.sent_id))
    chosen, duplicates = dedupe_annotations(accepted)

    tallies: list[SentenceTally] = []
    for sent_id in sorted(chosen):
        ann = chosen[sent_id]
        silver_set = silver_pairs(silver.get(sent_id, []))
        gold_set = ann.pair_set()
        tallies.append(
            SentenceTally(
                sent_id=sent_id,
                n_silver=len(silver_set),
                n_gold=len(gold_set),
                n_correct=len(silver_set & gold_set),
                likert=ann.likert,
            )
        )

    n_silver = sum(t.n_silver for t in tallies)
    n_gold = sum(t.n_gold for t in tallies)
    n_correct = sum(t.n_correct for t in tallies)
    return ValidationReport(
        pair_type=pair_type,
        precision=None if n_silver == 0 else n_correct / n_silver,
        recall=None if n_gold == 0 else n_correct / n_gold,
        mean_likert=None
        if not tallies
        else sum(t.likert for t in tallies) / len(tallies),
        n_sentences=len(tallies),
        n_silver=n_silver,
        n_gold=n_gold,
        n_correct=n_correct,
        rejected_annotations=rejected,
        duplicate_annotations=duplicates,
        per_sentence=tallies,
    )


def reweight(report: ValidationReport, corpus_zero_swap_fraction: float) -> ValidationReport:
    """Rescale the balanced sample back to the corpus distribution.

    The annotation sample fixes the number of zero-silver sentences, so raw
    pooled scores over-represent them.  Each sentence is reweighted by
    stratum (zero-silver vs any-silver) to match the corpus fraction of
    zero-swap sentences; when the sample already matches the corpus, the
    result equals the raw report.
    """
    z = corpus_zero_swap_fraction
    if not 0.0 <= z <= 1.0:
        raise ValueError(f"zero-swap fraction must be in [0, 1], got {z}")
    tallies = report.per_sentence
    n = len(tallies)
    zero = [t for t in tallies if t.n_silver == 0]
    nonzero = [t for t in tallies if t.n_silver > 0]
    if n == 0 or not zero or not nonzero:
        weights = {t.sent_id: 1.0 for t in tallies}
    else:
        w_zero = z / (len(zero) / n)
        w_nonzero = (1.0 - z) / (len(nonzero) / n)
        weights = {
            t.sent_id: (w_zero if t.n_silver == 0 else w_nonzero) for t in tallies
        }

    def wsum(value) -> float:
        return sum(weights[t.sent_id] * value(t) for t in tallies)

    silver_w = wsum(lambda t: t.n_silver)
    gold_w = wsum(lambda t: t.n_gold)
    correct_w = wsum(lambda t: t.n_correct)
    likert_w = wsum(lambda t: t.likert)
    total_w = sum(weights.values())
    return ValidationReport(
        pair_type=report.pair_type,
        precision=None if silver_w == 0 else correct_w / silver_w,
        recall=None if gold_w == 0 else correct_w / gold_w,
        mean_likert=None if total_w == 0 else likert_w / total_w,
        n_sentences=report.n_sentences,
        n_silver=report.n_silver,
        n_gold=report.n_gold,
        n_correct=report.n_correct,
        weighting="reweighted",
        zero_swap_fraction=z,
        rejected_annotations=list(report.rejected_annotations),
        duplicate_annotations=list(report.duplicate_annotations),
        per_sentence=list(report.per_sentence),
    )
