from __future__ import annotations

from depswap.conllu import parse_conllu_text, validate_tree
from depswap.preprocess import (
    COP_LIFTED,
    PreprocessConfig,
    PreprocessReport,
    lift_copula,
    preprocess_pipeline,
    preprocess_sentence,
)
from tests.conftest import EN_FIXTURE, JA_FIXTURE


def test_english_defaults_lowercase_and_strip_punct(en_sentence):
    assert en_sentence.forms() == [
        "the", "fact", "is", "that", "the", "season", "of",
        "strawberries", "is", "running", "from", "july", "to", "august",
    ]
    assert all(t.upos != "PUNCT" for t in en_sentence.tokens)


def test_lift_makes_copula_the_root(en_sentence):
    root = en_sentence.root()
    assert root.form == "is" and root.id == 3
    running = en_sentence[10]
    assert running.head == 3 and running.deprel == COP_LIFTED
    # Outer subject moved to the copula; inner clause material stayed put.
    assert en_sentence[2].head == 3
    assert en_sentence[4].head == 10  # that
    assert en_sentence[6].head == 10  # season
    assert en_sentence[9].head == 10  # inner aux
    assert validate_tree(en_sentence) == []


def test_lift_preserves_order_and_tokens(en_sentence):
    # Only head/deprel change during lifting; check against a fresh parse.
    (raw,) = parse_conllu_text(EN_FIXTURE)
    config = PreprocessConfig.for_language("en")
    preprocess_sentence(raw, config)
    before = raw.forms()
    lift_copula(raw, "en")
    assert raw.forms() == before


def test_japanese_lift_uses_lexicon_and_nsubj_gate(ja_sentence):
    root = ja_sentence.root()
    assert root.form == "dearu"
    assert ja_sentence[13].deprel == COP_LIFTED
    assert ja_sentence[11].head == 14  # koto re-attached to the copula


def test_japanese_lift_skipped_without_nsubj():
    text = (
        "1\tjijitsu\tjijitsu\tNOUN\t_\t_\t0\troot\t_\t_\n"
        "2\tdearu\tdearu\tAUX\t_\t_\t1\taux\t_\t_\n\n"
    )
    (sent,) = parse_conllu_text(text)
    lift_copula(sent, "ja")
    assert sent.root().form == "jijitsu"
    assert sent[2].deprel == "aux"


def test_simple_japanese_copula_example():
    text = (
        "1\tKore\tkore\tPRON\t_\t_\t3\tnsubj\t_\t_\n"
        "2\twa\twa\tADP\t_\t_\t1\tcase\t_\t_\n"
        "3\tjijitsu\tjijitsu\tNOUN\t_\t_\t0\troot\t_\t_\n"
        "4\tdearu\tdearu\tAUX\t_\t_\t3\taux\t_\t_\n\n"
    )
    (sent,) = parse_conllu_text(text)
    lift_copula(sent, "ja")
    assert sent.root().form == "dearu"
    assert sent[3].deprel == COP_LIFTED
    assert sent[1].head == 4


def test_latin_sentences_dropped_for_japanese():
    text = (
        "1\tabc\tabc\tNOUN\t_\t_\t0\troot\t_\t_\n\n"
        "1\t東京\t東京\tPROPN\t_\t_\t0\troot\t_\t_\n\n"
    )
    config = PreprocessConfig.for_language("ja")
    report = PreprocessReport()
    kept = [
        s
        for s in (
            preprocess_pipeline(sent, config, report)
            for sent in parse_conllu_text(text)
        )
        if s is not None
    ]
    assert len(kept) == 1
    assert kept[0].forms() == ["東京"]
    assert report.dropped_latin == 1


def test_bracket_contents_removed():
    text = (
        "1\t東京\t東京\tPROPN\t_\t_\t0\troot\t_\t_\n"
        "2\t（\t（\tPUNCT\t_\t_\t3\tpunct\t_\t_\n"
        "3\tとうきょう\tとうきょう\tNOUN\t_\t_\t1\tappos\t_\t_\n"
        "4\t）\t）\tPUNCT\t_\t_\t3\tpunct\t_\t_\n"
        "5\tは\tは\tADP\t_\t_\t1\tcase\t_\t_\n\n"
    )
    (sent,) = parse_conllu_text(text)
    config = PreprocessConfig.for_language("ja")
    report = PreprocessReport()
    out = preprocess_sentence(sent, config, report)
    assert out is not None
    assert out.forms() == ["東京", "は"]
    assert report.bracketed_removed == 3


def test_unmatched_bracket_removes_only_itself():
    text = (
        "1\t（\t（\tPUNCT\t_\t_\t2\tpunct\t_\t_\n"
        "2\t東京\t東京\tPROPN\t_\t_\t0\troot\t_\t_\n\n"
    )
    (sent,) = parse_conllu_text(text)
    config = PreprocessConfig.for_language("ja")
    report = PreprocessReport()
    out = preprocess_sentence(sent, config, report)
    assert out.forms() == ["東京"]
    assert report.unmatched_brackets == 1


def test_preprocess_is_idempotent(en_sentence):
    config = PreprocessConfig.for_language("en")
    snapshot = en_sentence.forms()
    again = preprocess_sentence(en_sentence, config)
    assert again is not None and again.forms() == snapshot


def test_identity_when_nothing_applies():
    text = "1\t東京\t東京\tPROPN\t_\t_\t0\troot\t_\t_\n\n"
    (sent,) = parse_conllu_text(text)
    config = PreprocessConfig.for_language("ja")
    out = preprocess_sentence(sent, config)
    assert out.forms() == ["東京"]


def test_no_cop_arc_is_a_no_op():
    text = (
        "1\tcats\tcat\tNOUN\t_\t_\t2\tnsubj\t_\t_\n"
        "2\tsleep\tsleep\tVERB\t_\t_\t0\troot\t_\t_\n\n"
    )
    (sent,) = parse_conllu_text(text)
    heads = [t.head for t in sent.tokens]
    lift_copula(sent, "en")
    assert [t.head for t in sent.tokens] == heads


def test_no_liftable_cop_arc_remains_after_lift(en_sentence):
    for tok in en_sentence.tokens:
        assert tok.base_deprel != "cop" or tok.deprel == COP_LIFTED


def test_multiple_cop_children_lift_first_only():
    text = (
        "1\tit\tit\tPRON\t_\t_\t4\tnsubj\t_\t_\n"
        "2\tis\tbe\tAUX\t_\t_\t4\tcop\t_\t_\n"
        "3\twas\tbe\tAUX\t_\t_\t4\tcop\t_\t_\n"
        "4\tfine\tfine\tADJ\t_\t_\t0\troot\t_\t_\n\n"
    )
    (sent,) = parse_conllu_text(text)
    report = PreprocessReport()
    lift_copula(sent, "en", report)
    assert sent.root().id == 2
    assert sent[3].deprel == "cop"  # second copula left in place
    assert report.multiple_cop_warnings == 1
    assert validate_tree(sent) == []


def test_japanese_fixture_forms_unchanged_by_lift(ja_sentence):
    assert ja_sentence.forms() == [
        "Ichigo", "no", "kisetsu", "ga", "shichigatsu", "kara",
        "hachigatsu", "made", "tsudui", "teiru", "koto", "wa",
        "jijitsu", "dearu",
    ]
