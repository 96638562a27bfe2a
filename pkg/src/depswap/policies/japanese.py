"""Japanese rules for the five correlation pairs.

Case particles, not position, mark grammatical roles, so verb/object
identification classifies every candidate argument first: ga-marked
subjects and wa-marked topics never swap, everything else counts as an
object.  Sa-hen nouns carrying arguments act as verbs, and words
nominalized by the SCONJ "no" act as nouns.  Auxiliaries swap with the bare
verb, not the verb phrase, since Japanese auxiliaries behave like affixes.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, fields
from pathlib import Path

from ..conllu import Sentence, Token
from ..preprocess import COP_LIFTED
from ..swap import ADP_NP, AUX_V, COP_PRED, NOUN_GEN, POLICY_EXCLUDED, VO, PairRules, SwapPolicy
from .english import NP_UPOS, _noun_anchor, _subtree, _token_anchor, _verb_anchor, _accept, _always

SUBJECT = "subject"
TOPIC = "topic"
OBJECT = "object"

_ARG_RELS = frozenset({"nsubj", "obj", "iobj", "obl", COP_LIFTED, "expl", "xcomp"})
# Arguments whose presence makes a bare sa-hen noun verbal; the unlifted cop
# is included for sentences the copula gate left untouched.
_SAHEN_RELS = _ARG_RELS | frozenset({"cop"})


@dataclass(frozen=True)
class JaLexicons:
    """Closed word lists the rules consult, romanized and native forms both."""

    copula_aux_lemmas: frozenset[str]
    copula_verb_lemmas: frozenset[str]
    genitive_particles: frozenset[str]
    topic_particles: frozenset[str]
    nominative_particles: frozenset[str]
    nominalizer_forms: frozenset[str]
    similative_heads: frozenset[str]  # the "yō" of "X-no yō na", never swapped
    similative_markers: frozenset[str]

    @classmethod
    def from_json(cls, path: str | Path) -> "JaLexicons":
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        kwargs = {
            f.name: frozenset(data.get(f.name, ())) for f in fields(cls)
        }
        return cls(**kwargs)


DEFAULT_LEXICONS = JaLexicons(
    copula_aux_lemmas=frozenset(
        {
            "dearu", "である",
            "denai", "でない",
            "dewanai", "ではない",
            "janai", "じゃない",
            "rashii", "らしい",
            "kamoshirenai", "かもしれない",
            "desu", "です",
        }
    ),
    copula_verb_lemmas=frozenset({"iru", "いる", "aru", "ある", "naru", "なる"}),
    genitive_particles=frozenset({"no", "の", "ga", "が", "tsu", "つ"}),
    topic_particles=frozenset({"wa", "は"}),
    nominative_particles=frozenset({"ga", "が"}),
    nominalizer_forms=frozenset({"no", "の"}),
    similative_heads=frozenset({"yō", "よう", "様"}),
    similative_markers=frozenset({"na", "な"}),
)


def case_particle_forms(sentence: Sentence, token: Token) -> set[str]:
    return {
        c.form for c in sentence.children(token.id) if c.base_deprel == "case"
    }


def argument_class(
    sentence: Sentence, token: Token, lexicons: JaLexicons = DEFAULT_LEXICONS
) -> str:
    """Classify a verb's argument: ga-marked nsubj is a subject, wa-marked
    words are topics, everything else an object.  Subjects and topics are
    exempt from verb/object swapping."""
    particles = case_particle_forms(sentence, token)
    if token.base_deprel == "nsubj" and particles & lexicons.nominative_particles:
        return SUBJECT
    if particles & lexicons.topic_particles:
        return TOPIC
    return OBJECT


def sahen_effective_upos(sentence: Sentence, token: Token) -> str:
    """A NOUN with argument dependents acts as a verb (sa-hen noun whose
    conjugation verb was omitted); anything else keeps its tag."""
    if token.upos != "NOUN":
        return token.upos
    for child in sentence.children(token.id):
        if child.base_deprel in _SAHEN_RELS:
            return "VERB"
    return "NOUN"


def nominalized_as_noun(
    sentence: Sentence, token: Token, lexicons: JaLexicons = DEFAULT_LEXICONS
) -> bool:
    """True when the word carries the nominalizer "no" (a SCONJ mark child),
    which turns any content word into a noun for pair identification."""
    return any(
        c.base_deprel == "mark"
        and c.upos == "SCONJ"
        and c.form in lexicons.nominalizer_forms
        for c in sentence.children(token.id)
    )


def japanese_policy(lexicons: JaLexicons = DEFAULT_LEXICONS) -> SwapPolicy:
    def vo_node_gate(sentence: Sentence, node: Token) -> bool:
        if node.upos == "VERB" or sahen_effective_upos(sentence, node) == "VERB":
            return True
        return any(c.deprel == COP_LIFTED for c in sentence.children(node.id))

    def vo_child_gate(sentence: Sentence, node: Token, child: Token) -> str | None:
        if argument_class(sentence, child, lexicons) != OBJECT:
            return POLICY_EXCLUDED
        return None

    def nounlike(sentence: Sentence, node: Token) -> bool:
        return node.upos in NP_UPOS or nominalized_as_noun(sentence, node, lexicons)

    def gen_child_gate(sentence: Sentence, node: Token, child: Token) -> str | None:
        if node.form in lexicons.similative_heads or node.lemma in lexicons.similative_heads:
            if any(
                c.form in lexicons.similative_markers
                for c in sentence.children(node.id)
            ):
                return POLICY_EXCLUDED
        if case_particle_forms(sentence, child) & lexicons.genitive_particles:
            return None
        return POLICY_EXCLUDED

    rules = {
        VO: PairRules(
            pair=VO,
            child_rels=_ARG_RELS,
            head_is_child=False,
            node_gate=vo_node_gate,
            child_gate=vo_child_gate,
            anchor_ids=_verb_anchor,
            moved_ids=_subtree,
        ),
        ADP_NP: PairRules(
            pair=ADP_NP,
            child_rels=frozenset({"case"}),
            head_is_child=True,
            node_gate=nounlike,
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
            anchor_ids=_token_anchor,
            moved_ids=_subtree,
        ),
        NOUN_GEN: PairRules(
            pair=NOUN_GEN,
            child_rels=frozenset({"nmod"}),
            head_is_child=False,
            node_gate=nounlike,
            child_gate=gen_child_gate,
            anchor_ids=_noun_anchor,
            moved_ids=_subtree,
        ),
    }
    return SwapPolicy(language="ja", separator="", rules=rules)
