from __future__ import annotations

from depswap.policies import get_policy
from depswap.swap import VO, swap_sentence

EN = get_policy("en")

EXPECTED = {
    "coord-1": "we students and teachers are",
    "coord-2": "we cats like and dogs love",
    "coord-3": "we in the park sing and dance",
    "coord-4": "we tag dance and play",
}


def test_coordination_conventions(coord_sentences):
    results = {}
    for sent in coord_sentences:
        swap_sentence(sent, VO, EN)
        results[sent.sent_id] = sent.text()
    assert results == EXPECTED


def test_shared_head_merges_dependents_with_conjunction(coord_sentences):
    sent = next(s for s in coord_sentences if s.sent_id == "coord-1")
    records = swap_sentence(sent, VO, EN)
    (record,) = [r for r in records if r.applied]
    # students + conjunction + teachers move as one chunk
    dep_forms = [sent[i].form for i in record.dep_spans[0].token_ids]
    assert dep_forms == ["students", "and", "teachers"]


def test_coordinated_heads_swap_independently(coord_sentences):
    sent = next(s for s in coord_sentences if s.sent_id == "coord-2")
    records = [r for r in swap_sentence(sent, VO, EN) if r.applied]
    assert len(records) == 2
    heads = {sent[r.head_span.head_id].form for r in records}
    assert heads == {"like", "love"}


def test_trailing_dependent_takes_head_chunk(coord_sentences):
    sent = next(s for s in coord_sentences if s.sent_id == "coord-3")
    records = [r for r in swap_sentence(sent, VO, EN) if r.applied]
    (record,) = records
    head_forms = [sent[i].form for i in record.head_span.token_ids]
    assert head_forms == ["sing", "and", "dance"]
