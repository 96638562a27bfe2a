"""Correlation-pair swapping engine.

A correlation pair <H, D> names a head category that patterns with the verb
(adposition, copula, auxiliary, noun) and a dependent category that patterns
with the object (NP, predicate, VP, genitive).  The engine walks each
sentence depth-first from the root with an explicit stack and visited set;
at every node it matches children against the policy's rules for the pair
type, builds contiguous spans, and reorders the surface sequence by
reflecting the matched spans to the other side of the node's anchor span,
preserving each span's distance rank (H D1 D2 becomes D2 D1 H).

Only the surface order mutates: token ids and head links are untouched, so
the tree stays valid across any number of swaps.  Whatever cannot be swapped
safely is returned as a skip record, never dropped silently.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence, TypeVar

from .conllu import Sentence, Token

VO = "vo"
ADP_NP = "adp-np"
COP_PRED = "cop-pred"
AUX_V = "aux-v"
NOUN_GEN = "noun-gen"
ALL_PAIRS = (VO, ADP_NP, COP_PRED, AUX_V, NOUN_GEN)

NON_CONTIGUOUS = "non-contiguous"
COORDINATION_AMBIGUOUS = "coordination-ambiguous"
POLICY_EXCLUDED = "policy-excluded"

T = TypeVar("T")


@dataclass
class Span:
    """Tokens contiguous in surface order at construction time.

    `head_id` is the internal governor: it is in `token_ids` and every other
    member of the span is its descendant.
    """

    token_ids: list[int]
    head_id: int


@dataclass
class SwapRecord:
    """One identified <H, D> instance: the silver unit for validation.

    `head_span` is the verb-patterner span, `dep_spans` the object-patterner
    spans in surface order.  `applied` is True exactly when `skip_reason`
    is None.
    """

    pair_type: str
    head_span: Span
    dep_spans: list[Span]
    applied: bool = True
    skip_reason: str | None = None

    def pairs(self) -> list[tuple[frozenset[int], frozenset[int]]]:
        """Explode into (head ids, dependent ids) pairs for scoring."""
        h = frozenset(self.head_span.token_ids)
        return [(h, frozenset(d.token_ids)) for d in self.dep_spans]


@dataclass(frozen=True)
class PairRules:
    """Identification and span hooks for one pair type in one language.

    `child_rels` nominates candidate arcs by base relation; `node_gate` and
    `child_gate` accept or reject them (a non-None gate result is the
    exclusion reason).  `anchor_ids` builds the span that stays anchored
    during reflection (the parse node's side); `moved_ids` builds the span
    that crosses over (the matched child's side).  `head_is_child` is True
    for pairs whose verb-patterner is the child of the arc (adposition,
    auxiliary).
    """

    pair: str
    child_rels: frozenset[str]
    head_is_child: bool
    node_gate: Callable[[Sentence, Token], bool]
    child_gate: Callable[[Sentence, Token, Token], str | None]
    anchor_ids: Callable[[Sentence, Token, list[Token]], list[int]]
    moved_ids: Callable[[Sentence, Token, Token], list[int]]


@dataclass(frozen=True)
class SwapPolicy:
    """A language's rule set for all pair types.  Hooks are pure; instances
    are immutable and safe to share across workers."""

    language: str
    separator: str
    rules: Mapping[str, PairRules]

    def rules_for(self, pair_type: str) -> PairRules | None:
        return self.rules.get(pair_type)


def reflect(blocks: Sequence[T], head_index: int) -> list[T]:
    """Reflect dependent blocks around the head block.

    Every non-head block flips to the other side of the head while its
    distance rank is preserved: [H, D1, D2] -> [D2, D1, H] and
    [D1, D2, H] -> [H, D2, D1].  Involution: reflect(reflect(x)) == x.
    """
    head = blocks[head_index]
    lefts = list(blocks[:head_index])
    rights = list(blocks[head_index + 1 :])
    return list(reversed(rights)) + [head] + list(reversed(lefts))


def subtree_ids(sentence: Sentence, token: Token) -> list[int]:
    return sentence.subtree(token.id)


def _contiguous(sentence: Sentence, ids: list[int]) -> bool:
    if not ids:
        return False
    positions = sorted(sentence.position(i) for i in ids)
    return positions[-1] - positions[0] == len(positions) - 1


def _accepted_children(
    sentence: Sentence, node: Token, rules: PairRules
) -> tuple[list[Token], list[tuple[Token, str]]]:
    """Split the node's candidate children into accepted and (child, reason)
    exclusions.  A candidate is any child whose base relation is in the
    pair's arc inventory."""
    accepted: list[Token] = []
    excluded: list[tuple[Token, str]] = []
    candidates = [
        c for c in sentence.children(node.id) if c.base_deprel in rules.child_rels
    ]
    if not candidates:
        return accepted, excluded
    node_ok = rules.node_gate(sentence, node)
    for child in candidates:
        if not node_ok:
            excluded.append((child, POLICY_EXCLUDED))
            continue
        reason = rules.child_gate(sentence, node, child)
        if reason is None:
            accepted.append(child)
        else:
            excluded.append((child, reason))
    return accepted, excluded


def _conj_chain_anchor(
    sentence: Sentence, node: Token, rules: PairRules, own_anchor: list[int]
) -> list[int]:
    """Coordination convention for a dependent hanging off a later conjunct.

    When the node is a conj and no earlier conjunct in its chain has accepted
    dependents of this pair type, the coordinated heads plus the conjunction
    act as one chunk: the anchor widens to the envelope from the first
    conjunct's anchor to the node's own.  This knowingly over-captures when
    the dependent belongs only to the last conjunct; the parse cannot tell
    the two cases apart.
    """
    if node.base_deprel != "conj":
        return own_anchor
    chain: list[Token] = []
    cur = node
    seen = {node.id}
    while cur.base_deprel == "conj" and cur.head in sentence._by_id:
        cur = sentence[cur.head]
        if cur.id in seen:
            break
        seen.add(cur.id)
        chain.append(cur)
    if not chain:
        return own_anchor
    for conjunct in chain:
        accepted, _ = _accepted_children(sentence, conjunct, rules)
        if accepted:
            return own_anchor  # each head swaps with its own dependents
    first = chain[-1]
    first_anchor = rules.anchor_ids(sentence, first, [])
    positions = [sentence.position(i) for i in first_anchor + own_anchor]
    lo, hi = min(positions), max(positions)
    return [t.id for t in sentence.tokens[lo : hi + 1]]


def _single_token_span(token: Token) -> Span:
    return Span([token.id], token.id)


def _make_record(
    rules: PairRules,
    anchor: Span,
    moved: Span,
    applied: bool,
    reason: str | None,
) -> SwapRecord:
    if rules.head_is_child:
        return SwapRecord(rules.pair, moved, [anchor], applied, reason)
    return SwapRecord(rules.pair, anchor, [moved], applied, reason)


def _grouped_record(
    rules: PairRules, anchor: Span, moved: list[Span]
) -> list[SwapRecord]:
    """Applied records for one node: grouped per verb-patterner head."""
    if rules.head_is_child:
        return [SwapRecord(rules.pair, m, [anchor]) for m in moved]
    return [SwapRecord(rules.pair, anchor, moved)]


def _swap_at_node(
    sentence: Sentence,
    node: Token,
    rules: PairRules,
    records: list[SwapRecord],
    apply: bool,
) -> None:
    accepted, excluded = _accepted_children(sentence, node, rules)
    for child, reason in excluded:
        records.append(
            _make_record(
                rules,
                _single_token_span(node),
                _single_token_span(child),
                applied=False,
                reason=reason,
            )
        )
    if not accepted:
        return

    anchor_ids = rules.anchor_ids(sentence, node, accepted)
    anchor_ids = _conj_chain_anchor(sentence, node, rules, anchor_ids)
    anchor_ok = _contiguous(sentence, anchor_ids)
    anchor_set = set(anchor_ids)
    anchor = Span(sorted(anchor_ids, key=sentence.position), node.id)

    moved_spans: list[Span] = []
    for child in accepted:
        ids = rules.moved_ids(sentence, node, child)
        span = Span(sorted(ids, key=sentence.position), child.id)
        if not anchor_ok or not _contiguous(sentence, ids):
            records.append(
                _make_record(rules, anchor, span, False, NON_CONTIGUOUS)
            )
        elif anchor_set & set(ids):
            records.append(
                _make_record(rules, anchor, span, False, COORDINATION_AMBIGUOUS)
            )
        else:
            moved_spans.append(span)
    if not moved_spans:
        return

    records.extend(_grouped_record(rules, anchor, moved_spans))
    if apply:
        _apply_reflection(sentence, anchor, moved_spans)


def _apply_reflection(
    sentence: Sentence, anchor: Span, moved_spans: list[Span]
) -> None:
    pos = sentence.position
    anchor_start = pos(anchor.token_ids[0])
    anchor_end = pos(anchor.token_ids[-1])
    lefts = [s for s in moved_spans if pos(s.token_ids[-1]) < anchor_start]
    rights = [s for s in moved_spans if pos(s.token_ids[0]) > anchor_end]
    lefts.sort(key=lambda s: pos(s.token_ids[-1]), reverse=True)  # nearest first
    rights.sort(key=lambda s: pos(s.token_ids[0]))  # nearest first

    moved_ids = {i for s in moved_spans for i in s.token_ids}
    kept = [t.id for t in sentence.tokens if t.id not in moved_ids]
    a = kept.index(anchor.token_ids[0])
    b = kept.index(anchor.token_ids[-1])

    before: list[int] = []
    for span in reversed(rights):  # farthest lands leftmost
        before.extend(span.token_ids)
    after: list[int] = []
    for span in lefts:  # nearest stays adjacent
        after.extend(span.token_ids)
    new_order = kept[:a] + before + kept[a : b + 1] + after + kept[b + 1 :]
    sentence.set_order(new_order)


def swap_sentence(
    sentence: Sentence,
    pair_type: str,
    policy: SwapPolicy,
    apply: bool = True,
) -> list[SwapRecord]:
    """Run the depth-first swapping pass for one pair type.

    Mutates the sentence's surface order in place when `apply` is True and
    returns every record, applied and skipped, in traversal order.  Surface
    positions are recomputed after each applied swap, so nested pairs see
    the already-transformed order.  Deterministic for identical inputs.
    """
    rules = policy.rules_for(pair_type)
    records: list[SwapRecord] = []
    if rules is None or not sentence.tokens:
        return records
    stack = [sentence.root().id]
    visited: set[int] = set()
    while stack:
        tid = stack.pop()
        if tid in visited:
            continue
        visited.add(tid)
        node = sentence[tid]
        _swap_at_node(sentence, node, rules, records, apply)
        children = sentence.children(tid)
        for child in reversed(children):
            if child.id not in visited:
                stack.append(child.id)
    return records


def identify_pairs(
    sentence: Sentence, pair_type: str, policy: SwapPolicy
) -> list[SwapRecord]:
    """Identification only: same traversal and records, no reordering."""
    return swap_sentence(sentence, pair_type, policy, apply=False)


def applied_swap_count(records: list[SwapRecord]) -> int:
    """Number of applied <H, D> pairs (grouped records count each dependent)."""
    return sum(len(r.dep_spans) for r in records if r.applied)
