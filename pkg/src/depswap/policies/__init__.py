"""Per-language identification and span rules for the swap engine."""
from __future__ import annotations

from functools import lru_cache

from ..swap import SwapPolicy
from .english import TIGHTNESS_LEVELS, english_policy
from .japanese import DEFAULT_LEXICONS, JaLexicons, japanese_policy

LANGUAGES = ("en", "ja")


@lru_cache(maxsize=None)
def get_policy(
    language: str,
    tightness: str = "loose",
    lexicons: JaLexicons | None = None,
) -> SwapPolicy:
    if language == "en":
        return english_policy(tightness)
    if language == "ja":
        return japanese_policy(lexicons or DEFAULT_LEXICONS)
    raise ValueError(f"unknown language {language!r}")


__all__ = [
    "DEFAULT_LEXICONS",
    "JaLexicons",
    "LANGUAGES",
    "TIGHTNESS_LEVELS",
    "english_policy",
    "get_policy",
    "japanese_policy",
]
