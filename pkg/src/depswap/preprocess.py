"""Corpus preprocessing: punctuation and bracket removal, casing, copula lifting.

English defaults: lowercase everything and drop PUNCT tokens.  Japanese
defaults: drop PUNCT tokens, remove bracket pairs with their content (rubi
and parentheticals), and drop any sentence containing lower-case Latin.
Copula arcs are then reversed ("lifted") so the copula governs its predicate,
which is what the swap rules expect.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .conllu import ROOT, Sentence, validate_tree

ENGLISH = "en"
JAPANESE = "ja"

COP_LIFTED = "cop*"

# Deprels whose subtree moves to the lifted copula when it precedes the copula
# in surface order.  Post-copular material (the inner clause's own subject,
# complementizer, and auxiliaries) stays with the predicate so that the
# predicate span covers the whole clause.
TRANSFER_RELS = frozenset({"nsubj", "csubj", "expl", "mark", "aux"})

BRACKET_PAIRS = {
    "「": "」",
    "『": "』",
    "（": "）",
    "(": ")",
}
_CLOSERS = set(BRACKET_PAIRS.values())

_ASCII_LOWER = frozenset("abcdefghijklmnopqrstuvwxyz")


@dataclass
class PreprocessConfig:
    language: str
    lowercase: bool = False
    remove_punct: bool = True
    remove_bracketed: bool = False
    drop_latin_sentences: bool = False
    lift: bool = True

    @classmethod
    def for_language(cls, language: str) -> "PreprocessConfig":
        if language == ENGLISH:
            return cls(language=ENGLISH, lowercase=True, remove_punct=True)
        if language == JAPANESE:
            return cls(
                language=JAPANESE,
                remove_punct=True,
                remove_bracketed=True,
                drop_latin_sentences=True,
            )
        raise ValueError(f"unknown language {language!r}")


@dataclass
class PreprocessReport:
    kept: int = 0
    dropped_latin: int = 0
    dropped_invalid: int = 0
    punct_removed: int = 0
    bracketed_removed: int = 0
    unmatched_brackets: int = 0
    copulas_lifted: int = 0
    multiple_cop_warnings: int = 0

    def merge(self, other: "PreprocessReport") -> None:
        for name in vars(other):
            setattr(self, name, getattr(self, name) + getattr(other, name))


def _bracketed_ids(sentence: Sentence, report: PreprocessReport) -> set[int]:
    """Token ids inside matched bracket pairs, brackets included.

    Innermost-first matching via a stack; an unmatched bracket removes only
    itself and is counted as a warning.
    """
    dead: set[int] = set()
    stack: list[tuple[str, int]] = []  # (expected closer, opener position)
    positions = list(enumerate(sentence.tokens))
    for pos, tok in positions:
        if tok.form in BRACKET_PAIRS:
            stack.append((BRACKET_PAIRS[tok.form], pos))
        elif tok.form in _CLOSERS:
            if stack and stack[-1][0] == tok.form:
                _, start = stack.pop()
                dead.update(t.id for t in sentence.tokens[start : pos + 1])
            else:
                report.unmatched_brackets += 1
                dead.add(tok.id)
    for _, start in stack:
        report.unmatched_brackets += 1
        dead.add(sentence.tokens[start].id)
    return dead


def _has_lower_latin(sentence: Sentence) -> bool:
    return any(ch in _ASCII_LOWER for tok in sentence.tokens for ch in tok.form)


def preprocess_sentence(
    sentence: Sentence,
    config: PreprocessConfig,
    report: PreprocessReport | None = None,
) -> Sentence | None:
    """Clean one sentence in place; return None when it is dropped.

    Children of removed tokens re-attach to the nearest surviving ancestor.
    Idempotent: a second pass is a no-op.
    """
    if report is None:
        report = PreprocessReport()

    if config.remove_bracketed:
        dead = _bracketed_ids(sentence, report)
        if dead:
            report.bracketed_removed += len(dead)
            sentence.remove(dead)

    if config.drop_latin_sentences and _has_lower_latin(sentence):
        report.dropped_latin += 1
        return None

    if config.remove_punct:
        punct = [t.id for t in sentence.tokens if t.upos == "PUNCT"]
        if punct:
            report.punct_removed += len(punct)
            sentence.remove(punct)

    if config.lowercase:
        for tok in sentence.tokens:
            tok.form = tok.form.lower()

    if not sentence.tokens or validate_tree(sentence):
        report.dropped_invalid += 1
        return None
    report.kept += 1
    return sentence


def _subtree_before(sentence: Sentence, tid: int, limit_pos: int) -> bool:
    return all(sentence.position(i) < limit_pos for i in sentence.subtree(tid))


def lift_copula(
    sentence: Sentence,
    language: str = ENGLISH,
    report: PreprocessReport | None = None,
    lexicons=None,
) -> Sentence:
    """Reverse copula arcs so the copula governs its predicate via cop*.

    The copula inherits the predicate's governor and relation.  Subject-like
    material preceding the copula (TRANSFER_RELS, whole subtree before it)
    moves to the copula; everything after stays with the predicate, keeping
    the predicate span equal to the inner clause.

    English lifts every cop arc.  Japanese additionally treats the lexicon's
    copular auxiliaries and verbs (attached via aux) as copulas, and lifts
    only when the predicate has an nsubj dependent.  With several copula
    children on one predicate, only the first in surface order lifts.
    """
    if report is None:
        report = PreprocessReport()
    if language == JAPANESE and lexicons is None:
        from .policies.japanese import DEFAULT_LEXICONS

        lexicons = DEFAULT_LEXICONS

    lifted: set[int] = set()
    changed = True
    while changed:
        changed = False
        for pred in list(sentence.tokens):
            if pred.id in lifted:
                continue
            kids = sentence.children(pred.id)
            cops = [c for c in kids if _is_copula_arc(c, language, lexicons)]
            if not cops:
                continue
            if language == JAPANESE and not any(
                c.base_deprel == "nsubj" for c in kids
            ):
                continue
            if len(cops) > 1:
                report.multiple_cop_warnings += 1
            cop = cops[0]
            old_head, old_deprel = pred.head, pred.deprel
            sentence.set_head(cop.id, old_head, old_deprel)
            sentence.set_head(pred.id, cop.id, COP_LIFTED)
            cop_pos = sentence.position(cop.id)
            for child in kids:
                if child.id == cop.id:
                    continue
                if child.base_deprel in TRANSFER_RELS and _subtree_before(
                    sentence, child.id, cop_pos
                ):
                    sentence.set_head(child.id, cop.id)
            report.copulas_lifted += 1
            lifted.add(pred.id)
            changed = True
            break
    return sentence


def _is_copula_arc(token, language: str, lexicons) -> bool:
    if token.deprel == COP_LIFTED:
        return False
    if token.base_deprel == "cop":
        return True
    if language != JAPANESE or token.base_deprel != "aux":
        return False
    word = {token.lemma, token.form}
    if token.upos == "AUX" and word & lexicons.copula_aux_lemmas:
        return True
    if token.upos == "VERB" and word & lexicons.copula_verb_lemmas:
        return True
    return False


def preprocess_pipeline(
    sentence: Sentence,
    config: PreprocessConfig,
    report: PreprocessReport | None = None,
) -> Sentence | None:
    """Cleanup followed by copula lifting; the full preprocessing step."""
    cleaned = preprocess_sentence(sentence, config, report)
    if cleaned is None:
        return None
    if config.lift:
        lift_copula(cleaned, config.language, report)
    return cleaned
