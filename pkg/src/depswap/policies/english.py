"""English rules for the five correlation pairs.

Verb/object is construed broadly: at the default "loose" boundary a verb's
objects cover direct and indirect objects, oblique PPs, non-finite clausal
complements, the lifted copula's predicate, and expletives.  Narrower
boundaries prune that set down to bare direct objects; "very-loose" adds
finite clauses.
"""
from __future__ import annotations

from ..conllu import Sentence, Token
from ..preprocess import COP_LIFTED
from ..swap import ADP_NP, AUX_V, COP_PRED, NOUN_GEN, POLICY_EXCLUDED, VO, PairRules, SwapPolicy

NP_UPOS = frozenset({"NOUN", "PROPN", "NUM", "PRON"})

TIGHTNESS_LEVELS = ("very-tight", "tight", "medium", "loose", "very-loose")

# Arc inventory per tightness level; gates below restrict ccomp to
# non-finite clauses (no nsubj on the complement's verb) everywhere except
# very-loose, and obl to explicit obl:arg at medium.
_VO_RELS = {
    "very-tight": frozenset({"obj"}),
    "tight": frozenset({"obj", "iobj"}),
    "medium": frozenset({"obj", "iobj", "obl", "ccomp", "xcomp"}),
    "loose": frozenset({"obj", "iobj", "obl", "ccomp", "xcomp", COP_LIFTED, "expl"}),
    "very-loose": frozenset(
        {"obj", "iobj", "obl", "ccomp", "xcomp", COP_LIFTED, "expl", "advcl"}
    ),
}

# Pre-nominal relations that travel with a noun when its genitive swaps.
_NOUN_CLUSTER_RELS = frozenset({"nummod", "compound", "appos", "flat"})

_VP_EXCLUDED_RELS = frozenset({"nsubj", "csubj", "expl", "mark"})


def _has_lifted_cop(sentence: Sentence, node: Token) -> bool:
    return any(c.deprel == COP_LIFTED for c in sentence.children(node.id))


def _is_verbal(sentence: Sentence, node: Token) -> bool:
    return node.upos == "VERB" or _has_lifted_cop(sentence, node)


def _finite_ccomp(sentence: Sentence, child: Token) -> bool:
    return any(c.base_deprel == "nsubj" for c in sentence.children(child.id))


def _vo_child_gate(tightness: str):
    def gate(sentence: Sentence, node: Token, child: Token) -> str | None:
        rel = child.base_deprel
        if rel == "ccomp" and tightness != "very-loose" and _finite_ccomp(sentence, child):
            return POLICY_EXCLUDED
        if rel == "obl" and tightness == "medium" and child.deprel != "obl:arg":
            return POLICY_EXCLUDED
        return None

    return gate


def _verb_anchor(sentence: Sentence, node: Token, matched: list[Token]) -> list[int]:
    """The verb with its auxiliary cluster."""
    ids = [node.id]
    for child in sentence.children(node.id):
        if child.base_deprel == "aux":
            ids.extend(sentence.subtree(child.id))
    return ids


def _vp_anchor(sentence: Sentence, node: Token, matched: list[Token]) -> list[int]:
    """The verb phrase an auxiliary swaps with: the verb's subtree minus the
    clause-level material (subject, complementizer) and minus the matched
    auxiliaries themselves."""
    skip = {c.id for c in matched}
    ids = [node.id]
    for child in sentence.children(node.id):
        if child.id in skip or child.base_deprel in _VP_EXCLUDED_RELS:
            continue
        ids.extend(sentence.subtree(child.id))
    return ids


def _token_anchor(sentence: Sentence, node: Token, matched: list[Token]) -> list[int]:
    return [node.id]


def _noun_anchor(sentence: Sentence, node: Token, matched: list[Token]) -> list[int]:
    """The noun plus pre-nominal cluster children and anything between the
    noun and its genitive."""
    pos = sentence.position
    ids = [node.id]
    zones: list[tuple[int, int]] = []
    for m in matched:
        span = sentence.subtree(m.id)
        start, end = pos(span[0]), pos(span[-1])
        if start > pos(node.id):
            zones.append((pos(node.id), start))
        else:
            zones.append((end, pos(node.id)))
    matched_ids = {m.id for m in matched}
    for child in sentence.children(node.id):
        if child.id in matched_ids:
            continue
        span = sentence.subtree(child.id)
        start, end = pos(span[0]), pos(span[-1])
        if end < pos(node.id) and child.base_deprel in _NOUN_CLUSTER_RELS:
            ids.extend(span)
        elif any(lo < start and end < hi for lo, hi in zones):
            ids.extend(span)
    return ids


def _subtree(sentence: Sentence, node: Token, child: Token) -> list[int]:
    return sentence.subtree(child.id)


def _gen_child_gate(sentence: Sentence, node: Token, child: Token) -> str | None:
    """Genitives need an "of" between the noun and the dependent; possessive
    nmod (john's book) stays put."""
    lo = min(sentence.position(node.id), sentence.position(child.id))
    hi = max(sentence.position(node.id), sentence.position(child.id))
    for marker in sentence.children(child.id):
        if marker.base_deprel != "case" or marker.form.lower() != "of":
            continue
        if lo < sentence.position(marker.id) < hi:
            return None
    return POLICY_EXCLUDED


def _accept(sentence: Sentence, node: Token, child: Token) -> str | None:
    return None


def _always(sentence: Sentence, node: Token) -> bool:
    return True


def _np_gate(sentence: Sentence, node: Token) -> bool:
    return node.upos in NP_UPOS


def _gen_node_gate(sentence: Sentence, node: Token) -> bool:
    return node.upos in ("NOUN", "PROPN")


def english_policy(tightness: str = "loose") -> SwapPolicy:
    if tightness not in TIGHTNESS_LEVELS:
        raise ValueError(f"unknown tightness {tightness!r}; choose from {TIGHTNESS_LEVELS}")
    rules = {
        VO: PairRules(
            pair=VO,
            child_rels=_VO_RELS[tightness],
            head_is_child=False,
            node_gate=_is_verbal,
            child_gate=_vo_child_gate(tightness),
            anchor_ids=_verb_anchor,
            moved_ids=_subtree,
        ),
        ADP_NP: PairRules(
            pair=ADP_NP,
            child_rels=frozenset({"case"}),
            head_is_child=True,
            node_gate=_np_gate,
            child_gate=_accept,
            anchor_ids=_token_anchor,
            moved_ids=_subtree,
        ),
        COP_PRED: PairRules(
            pair=COP_PRED,
            child_rels=frozenset({COP_LIFTED}),
            head_is_child=False,
            node_gate=_always,
            child_gate=_accept,
            anchor_ids=_verb_anchor,
            moved_ids=_subtree,
        ),
        AUX_V: PairRules(
            pair=AUX_V,
            child_rels=frozenset({"aux"}),
            head_is_child=True,
            node_gate=_always,
            child_gate=_accept,
            anchor_ids=_vp_anchor,
            moved_ids=_subtree,
        ),
        NOUN_GEN: PairRules(
            pair=NOUN_GEN,
            child_rels=frozenset({"nmod"}),
            head_is_child=False,
            node_gate=_gen_node_gate,
            child_gate=_gen_child_gate,
            anchor_ids=_noun_anchor,
            moved_ids=_subtree,
        ),
    }
    return SwapPolicy(language="en", separator=" ", rules=rules)
