"""CoNLL-U parsing, validation, and serialization.

Sentences are held as flat token lists in surface order.  Every token gets a
stable integer id at parse time; transforms downstream only permute the
surface order, so head references stay valid without renumbering.  Ids are
renumbered 1..n (in surface order) on serialization.

Format reference: https://universaldependencies.org/format.html
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

ROOT = 0

_N_COLUMNS = 10


class ConlluError(ValueError):
    """A sentence block that cannot be turned into a valid tree."""


@dataclass
class Token:
    """One word line.  `id` is the stable id, never reused within a sentence."""

    id: int
    form: str
    lemma: str = "_"
    upos: str = "_"
    xpos: str = "_"
    feats: str = "_"
    head: int = ROOT
    deprel: str = "_"
    deps: str = "_"  # enhanced graph, carried opaquely
    misc: str = "_"

    @property
    def base_deprel(self) -> str:
        """Relation without its subtype: nsubj:outer -> nsubj."""
        return self.deprel.split(":", 1)[0]


@dataclass
class Sentence:
    """A dependency tree with mutable surface order over stable token ids."""

    tokens: list[Token]
    meta: dict[str, str] = field(default_factory=dict)
    comments: list[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        self._rebuild_index()

    def _rebuild_index(self) -> None:
        self._by_id = {t.id: t for t in self.tokens}
        self._pos = {t.id: i for i, t in enumerate(self.tokens)}
        self._children: dict[int, list[int]] | None = None

    def __len__(self) -> int:
        return len(self.tokens)

    def __getitem__(self, tid: int) -> Token:
        return self._by_id[tid]

    @property
    def sent_id(self) -> str:
        return self.meta.get("sent_id", "")

    def position(self, tid: int) -> int:
        return self._pos[tid]

    def root(self) -> Token:
        for tok in self.tokens:
            if tok.head == ROOT:
                return tok
        raise ConlluError("sentence has no root")

    def children(self, tid: int) -> list[Token]:
        """Direct dependents of `tid`, in current surface order."""
        if self._children is None:
            cmap: dict[int, list[int]] = {}
            for tok in self.tokens:
                cmap.setdefault(tok.head, []).append(tok.id)
            self._children = cmap
        ids = self._children.get(tid, [])
        return sorted((self._by_id[i] for i in ids), key=lambda t: self._pos[t.id])

    def descendants(self, tid: int) -> list[int]:
        """Ids of the full subtree below `tid`, excluding `tid` itself."""
        out: list[int] = []
        stack = [c.id for c in self.children(tid)]
        while stack:
            cur = stack.pop()
            out.append(cur)
            stack.extend(c.id for c in self.children(cur))
        return out

    def subtree(self, tid: int) -> list[int]:
        """Ids of `tid` plus all descendants, sorted by surface position."""
        ids = self.descendants(tid)
        ids.append(tid)
        ids.sort(key=self.position)
        return ids

    def set_head(self, tid: int, head: int, deprel: str | None = None) -> None:
        tok = self._by_id[tid]
        tok.head = head
        if deprel is not None:
            tok.deprel = deprel
        self._children = None

    def set_order(self, ids: list[int]) -> None:
        """Replace the surface order.  `ids` must be a permutation of token ids."""
        if sorted(ids) != sorted(self._pos):
            raise ValueError("new order is not a permutation of token ids")
        self.tokens = [self._by_id[i] for i in ids]
        self._pos = {tid: i for i, tid in enumerate(ids)}

    def remove(self, ids: Iterable[int]) -> None:
        """Delete tokens, re-attaching orphaned children to the nearest
        surviving ancestor (or ROOT when every ancestor is deleted)."""
        dead = set(ids)
        if not dead:
            return
        heads = {t.id: t.head for t in self.tokens}
        for tok in self.tokens:
            if tok.id in dead:
                continue
            head = tok.head
            while head in dead:
                head = heads[head]
            tok.head = head
        self.tokens = [t for t in self.tokens if t.id not in dead]
        self._rebuild_index()

    def forms(self) -> list[str]:
        return [t.form for t in self.tokens]

    def text(self, separator: str = " ") -> str:
        return separator.join(t.form for t in self.tokens)

    def clone(self) -> "Sentence":
        toks = [Token(**vars(t)) for t in self.tokens]
        return Sentence(toks, dict(self.meta), list(self.comments))


@dataclass
class ParseReport:
    """Per-file tallies from parse_conllu."""

    sentences: int = 0
    skipped: int = 0
    multiword_dropped: int = 0
    empty_nodes_dropped: int = 0
    errors: list[str] = field(default_factory=list)

    def record_error(self, block_no: int, message: str) -> None:
        self.skipped += 1
        self.errors.append(f"sentence {block_no}: {message}")


def validate_tree(sentence: Sentence) -> list[str]:
    """Return violations of the tree invariants; [] means the sentence is valid.

    Each violation is a string with a stable kind prefix: "multiple-roots",
    "no-root", "dangling-head", "cycle", "empty-form".
    """
    violations: list[str] = []
    ids = {t.id for t in sentence.tokens}
    roots = [t.id for t in sentence.tokens if t.head == ROOT]
    if len(roots) > 1:
        violations.append(f"multiple-roots: tokens {roots}")
    if not roots and sentence.tokens:
        violations.append("no-root")
    for tok in sentence.tokens:
        if tok.head != ROOT and tok.head not in ids:
            violations.append(f"dangling-head: {tok.id} -> {tok.head}")
        if not tok.form:
            violations.append(f"empty-form: {tok.id}")
    # Cycle check: walk up from every node; a walk longer than n tokens loops.
    heads = {t.id: t.head for t in sentence.tokens}
    n = len(sentence.tokens)
    for tok in sentence.tokens:
        cur, steps = tok.id, 0
        while cur != ROOT and steps <= n:
            cur = heads.get(cur, ROOT)
            steps += 1
        if steps > n:
            violations.append(f"cycle: reachable from {tok.id}")
            break
    return violations


def _parse_block(lines: list[str], report: ParseReport) -> Sentence:
    meta: dict[str, str] = {}
    comments: list[str] = []
    tokens: list[Token] = []
    for line in lines:
        if line.startswith("#"):
            comments.append(line)
            body = line[1:].strip()
            if "=" in body:
                key, _, value = body.partition("=")
                meta[key.strip()] = value.strip()
            continue
        cols = line.split("\t")
        if len(cols) != _N_COLUMNS:
            raise ConlluError(f"expected {_N_COLUMNS} columns, got {len(cols)}")
        tid = cols[0]
        if "-" in tid:
            report.multiword_dropped += 1
            continue
        if "." in tid:
            report.empty_nodes_dropped += 1
            continue
        try:
            num = int(tid)
        except ValueError as exc:
            raise ConlluError(f"non-integer token id {tid!r}") from exc
        try:
            head = int(cols[6])
        except ValueError as exc:
            raise ConlluError(f"non-integer head {cols[6]!r} for token {tid}") from exc
        tokens.append(
            Token(
                id=num,
                form=cols[1],
                lemma=cols[2],
                upos=cols[3],
                xpos=cols[4],
                feats=cols[5],
                head=head,
                deprel=cols[7],
                deps=cols[8],
                misc=cols[9],
            )
        )
    sent = Sentence(tokens, meta, comments)
    violations = validate_tree(sent)
    if violations:
        raise ConlluError("; ".join(violations))
    return sent


def parse_conllu(stream: Iterable[str], report: ParseReport | None = None) -> Iterator[Sentence]:
    """Lazily parse CoNLL-U text into sentences.

    Malformed sentences are skipped and logged on `report`, never raised;
    multiword-token ranges and empty nodes are dropped with a count.
    """
    if report is None:
        report = ParseReport()
    block: list[str] = []
    block_no = 0

    def flush() -> Sentence | None:
        nonlocal block_no
        if not block:
            return None
        block_no += 1
        try:
            sent = _parse_block(block, report)
        except ConlluError as exc:
            report.record_error(block_no, str(exc))
            return None
        report.sentences += 1
        return sent

    for raw in stream:
        line = raw.rstrip("\n").rstrip("\r")
        if line.strip() == "":
            sent = flush()
            block = []
            if sent is not None:
                yield sent
        else:
            block.append(line)
    sent = flush()
    if sent is not None:
        yield sent


def parse_conllu_text(text: str, report: ParseReport | None = None) -> list[Sentence]:
    return list(parse_conllu(text.splitlines(), report))


def sentence_to_conllu(sentence: Sentence) -> str:
    """Render one sentence, renumbering ids 1..n in surface order."""
    remap = {tok.id: i + 1 for i, tok in enumerate(sentence.tokens)}
    lines = list(sentence.comments)
    for tok in sentence.tokens:
        head = ROOT if tok.head == ROOT else remap[tok.head]
        lines.append(
            "\t".join(
                (
                    str(remap[tok.id]),
                    tok.form,
                    tok.lemma,
                    tok.upos,
                    tok.xpos,
                    tok.feats,
                    str(head),
                    tok.deprel,
                    tok.deps,
                    tok.misc,
                )
            )
        )
    return "\n".join(lines) + "\n"


def serialize_conllu(sentences: Iterable[Sentence]) -> Iterator[str]:
    """Yield CoNLL-U text chunks, one sentence per chunk, blank-line separated."""
    for sent in sentences:
        yield sentence_to_conllu(sent) + "\n"


def write_conllu(sentences: Iterable[Sentence], fh) -> int:
    count = 0
    for chunk in serialize_conllu(sentences):
        fh.write(chunk)
        count += 1
    return count
