"""Seeded random projective dependency trees for the property suite."""
from __future__ import annotations

import random

from depswap.conllu import Sentence, Token
from depswap.preprocess import lift_copula

EN_DEPRELS = [
    ("det", "DET", 4),
    ("amod", "ADJ", 3),
    ("nsubj", "NOUN", 4),
    ("obj", "NOUN", 4),
    ("obl", "NOUN", 4),
    ("iobj", "PRON", 1),
    ("case", "ADP", 4),
    ("aux", "AUX", 2),
    ("mark", "SCONJ", 1),
    ("nmod", "NOUN", 3),
    ("advmod", "ADV", 2),
    ("cc", "CCONJ", 1),
    ("conj", "VERB", 1),
    ("xcomp", "VERB", 1),
    ("ccomp", "VERB", 1),
    ("cop", "AUX", 1),
    ("expl", "PRON", 1),
]

JA_DEPRELS = [
    ("nsubj", "NOUN", 4),
    ("obj", "NOUN", 4),
    ("obl", "NOUN", 4),
    ("case", "ADP", 6),
    ("aux", "AUX", 2),
    ("nmod", "NOUN", 3),
    ("acl", "VERB", 1),
    ("mark", "SCONJ", 1),
    ("advmod", "ADV", 1),
    ("det", "DET", 1),
]

JA_PARTICLES = ["ga", "wa", "wo", "ni", "no", "kara", "made", "de"]


def _weighted(rng: random.Random, table):
    total = sum(w for _, _, w in table)
    pick = rng.uniform(0, total)
    for deprel, upos, w in table:
        pick -= w
        if pick <= 0:
            return deprel, upos
    return table[-1][0], table[-1][1]


def random_projective_heads(rng: random.Random, n: int) -> list[int]:
    """Head id (1-based; 0 = root) per position, projective by construction."""
    heads = [0] * n

    def split(lo: int, hi: int) -> list[tuple[int, int]]:
        chunks = []
        a = lo
        while a <= hi:
            b = rng.randint(a, hi)
            chunks.append((a, b))
            a = b + 1
        return chunks

    def build(lo: int, hi: int, governor: int) -> None:
        if lo > hi:
            return
        h = rng.randint(lo, hi)
        heads[h] = governor
        for a, b in split(lo, h - 1):
            build(a, b, h + 1)
        for a, b in split(h + 1, hi):
            build(a, b, h + 1)

    build(0, n - 1, 0)
    return heads


def random_sentence(rng: random.Random, language: str, max_len: int = 14) -> Sentence:
    n = rng.randint(2, max_len)
    heads = random_projective_heads(rng, n)
    table = EN_DEPRELS if language == "en" else JA_DEPRELS
    tokens = []
    for pos in range(n):
        tid = pos + 1
        if heads[pos] == 0:
            deprel, upos = "root", "VERB"
        else:
            deprel, upos = _weighted(rng, table)
        if language == "ja" and deprel == "case":
            form = rng.choice(JA_PARTICLES)
        elif language == "ja" and deprel == "aux" and rng.random() < 0.3:
            form = "dearu"
        else:
            form = f"w{tid}"
        tokens.append(
            Token(id=tid, form=form, lemma=form, upos=upos, head=heads[pos], deprel=deprel)
        )
    sent = Sentence(tokens, {"sent_id": f"gen-{rng.random():.12f}"})
    lift_copula(sent, language)
    return sent
