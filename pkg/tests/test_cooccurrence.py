import dataclasses

import numpy as np
import pytest

from implicanet import (
    CoOccurrenceStudy,
    PairContingency,
    ParseError,
    ValidationError,
    from_usage_records,
    parse_pair_tables,
    parse_usage_records,
    study_marginals,
    study_to_csv,
    validate_study,
)

REFERENCE_MARGINALS = {
    "The number": 130,
    "The Sign": 185,
    "The letters": 193,
    "The numbers": 149,
    "The Characters": 108,
    "Substantive": 116,
}


def test_pair_margins():
    p = PairContingency("a", "b", 100, 30, 85, 553)
    assert p.n_total == 768
    assert (p.n_a, p.n_b, p.n_not_a, p.n_not_b) == (130, 185, 638, 583)
    s = p.swapped()
    assert (s.a, s.b, s.n10, s.n01) == ("b", "a", 85, 30)
    assert s.swapped() == p


def test_pair_rejects_self_and_negative():
    with pytest.raises(ValidationError):
        PairContingency("a", "a", 1, 1, 1, 1)
    with pytest.raises(ValidationError):
        PairContingency("a", "b", -1, 1, 1, 1)


def test_from_usage_records_hand_counted():
    study = from_usage_records(
        [("u1", {"a", "b"}), ("u2", {"a"}), ("u3", set())], ["a", "b"]
    )
    p = study.pair("a", "b")
    assert (p.n11, p.n10, p.n01, p.n00) == (1, 1, 0, 1)
    assert study.n_total == 3


def test_from_usage_records_empty_rejected():
    with pytest.raises(ValidationError, match="at least one"):
        from_usage_records([], ["a", "b"])


def test_from_usage_records_unknown_attribute_names_informant():
    with pytest.raises(ValidationError, match=r"'u7'.*'zzz'"):
        from_usage_records([("u7", {"zzz"})], ["a", "b"])


def test_from_usage_records_duplicate_informant():
    with pytest.raises(ValidationError, match="'u1'"):
        from_usage_records([("u1", {"a"}), ("u1", {"b"})], ["a", "b"])


def test_parse_reference_pairs(reference_study):
    assert reference_study.n_total == 768
    assert len(reference_study.attributes) == 6
    assert len(reference_study.pairs) == 15
    p = reference_study.pair("The number", "The Sign")
    assert (p.n11, p.n10, p.n01, p.n00) == (100, 30, 85, 553)


def test_pair_lookup_swaps_orientation(reference_study):
    p = reference_study.pair("The Sign", "The number")
    assert (p.n11, p.n10, p.n01, p.n00) == (100, 85, 30, 553)


def test_parse_single_pair():
    study = parse_pair_tables("a,b,10,10,10,10\n")
    assert study.n_total == 40
    assert study.attributes == ("a", "b")


def test_parse_inconsistent_totals():
    with pytest.raises(ParseError, match="inconsistent n_total"):
        parse_pair_tables("a,b,10,10,10,10\na,c,10,10,10,11\nb,c,10,10,10,10\n")


def test_parse_negative_count():
    with pytest.raises(ParseError, match="negative"):
        parse_pair_tables("a,b,10,-1,10,10\n")


def test_parse_duplicate_pair():
    with pytest.raises(ParseError, match="duplicate pair"):
        parse_pair_tables("a,b,1,1,1,1\nb,a,1,1,1,1\n")


def test_parse_missing_pair():
    with pytest.raises(ParseError, match=r"missing pair \(a, c\)"):
        parse_pair_tables("a,b,1,1,1,1\nb,c,1,1,1,1\n")


def test_validate_reference_study(reference_study):
    assert validate_study(reference_study) == []
    assert study_marginals(reference_study) == REFERENCE_MARGINALS


def test_validate_detects_cell_perturbation(reference_study):
    pairs = list(reference_study.pairs)
    target = next(i for i, p in enumerate(pairs) if (p.a, p.b) == ("The Sign", "The letters"))
    pairs[target] = dataclasses.replace(pairs[target], n11=151)
    damaged = CoOccurrenceStudy(reference_study.attributes, reference_study.n_total, tuple(pairs))
    findings = validate_study(damaged)
    assert findings, "perturbation must be detected"
    assert any("'The Sign'" in f.message and "marginal" in f.message for f in findings)


def test_validate_reports_missing_coverage():
    study = CoOccurrenceStudy(
        ("a", "b", "c"), 4, (PairContingency("a", "b", 1, 1, 1, 1), PairContingency("b", "c", 1, 1, 1, 1))
    )
    findings = validate_study(study)
    assert any("missing pair (a, c)" in f.message for f in findings)


def test_study_rejects_duplicate_pair_blocks():
    with pytest.raises(ValidationError, match="duplicate pair"):
        CoOccurrenceStudy(
            ("a", "b"), 4,
            (PairContingency("a", "b", 1, 1, 1, 1), PairContingency("b", "a", 1, 1, 1, 1)),
        )


def test_study_rejects_empty_population():
    with pytest.raises(ValidationError, match="informant"):
        CoOccurrenceStudy(("a", "b"), 0, ())


def test_csv_round_trip(reference_study):
    text = study_to_csv(reference_study)
    again = parse_pair_tables(text)
    assert again == reference_study
    assert study_to_csv(again) == text


def test_usage_records_jsonl_round_trip():
    text = '{"informant": "u1", "terms": ["a", "b"]}\n{"informant": "u2", "terms": []}\n'
    records = parse_usage_records(text)
    assert records == [("u1", frozenset({"a", "b"})), ("u2", frozenset())]
    with pytest.raises(ParseError, match="line 1"):
        parse_usage_records("not json\n")


def _random_records(rng, n_informants, attrs):
    records = []
    for i in range(n_informants):
        terms = [a for a in attrs if rng.random() < 0.3]
        records.append((f"u{i}", frozenset(terms)))
    return records


def test_random_usage_records_always_validate():
    rng = np.random.default_rng(99)
    attrs = [f"t{k}" for k in range(10)]
    for n in (1, 3, 17, 120, 1000):
        study = from_usage_records(_random_records(rng, n, attrs), attrs)
        assert validate_study(study) == []
        assert study.n_total == n


def test_marginals_agree_across_pairs(reference_study):
    for attr in reference_study.attributes:
        values = set()
        for p in reference_study.pairs:
            if p.a == attr:
                values.add(p.n_a)
            elif p.b == attr:
                values.add(p.n_b)
        assert values == {REFERENCE_MARGINALS[attr]}


def test_reference_witness_records_match_marginals(reference_study):
    # constructive consistency witness: 768 synthetic informants engineered so
    # every attribute's usage count equals the reference marginal
    from implicanet.datasets import REFERENCE_ATTRIBUTES

    attrs = list(REFERENCE_ATTRIBUTES)
    records = [
        (f"u{i}", frozenset(a for a in attrs if i < REFERENCE_MARGINALS[a]))
        for i in range(reference_study.n_total)
    ]
    study = from_usage_records(records, attrs)
    assert study.n_total == reference_study.n_total
    assert study_marginals(study) == REFERENCE_MARGINALS
    assert validate_study(study) == []
