import pytest

from endecascan.lexicon import (Lexicon, LexiconParseError,
                                LexiconValidationError, MetricTuple,
                                Propensity, UnknownWord, WordAnalysis,
                                build_lexicon, parse_lexicon,
                                serialize_lexicon)

SELVA_LINE = "selva\t1\t0\t1\tsel|va\t-1"


def test_propensity_bounds():
    assert Propensity.prob(0.3).value == 0.3
    assert Propensity.apostrophe().is_apostrophe
    assert not Propensity.prob(1.0).is_apostrophe
    with pytest.raises(LexiconValidationError):
        Propensity.prob(1.5)
    with pytest.raises(LexiconValidationError):
        Propensity(-0.1)


def test_metric_tuple_invariants():
    MetricTuple(Propensity.prob(0), 2, -1, Propensity.prob(1))
    with pytest.raises(LexiconValidationError):
        MetricTuple(Propensity.prob(0), 2, -2, Propensity.prob(1))
    with pytest.raises(LexiconValidationError):
        MetricTuple(Propensity.prob(0), 0, 0, Propensity.prob(1))


def test_word_analysis_validation():
    good = WordAnalysis(("sel", "va"), (-1,), Propensity.prob(0), Propensity.prob(1))
    assert good.form == "selva"
    assert good.tuple == MetricTuple(Propensity.prob(0), 2, -1, Propensity.prob(1))
    with pytest.raises(LexiconValidationError):
        WordAnalysis(("sel", "va"), (1,), Propensity.prob(0), Propensity.prob(1))
    with pytest.raises(LexiconValidationError):
        WordAnalysis(("sel", "va"), (-1, -1), Propensity.prob(0), Propensity.prob(1))
    with pytest.raises(LexiconValidationError):
        WordAnalysis((), (0,), Propensity.prob(0), Propensity.prob(1))
    with pytest.raises(LexiconValidationError):
        WordAnalysis(("va",), (0,), Propensity.prob(0), Propensity.prob(1), weight=0.0)


def test_parse_single_entry():
    lex = parse_lexicon(SELVA_LINE)
    (analysis,) = lex.lookup("selva")
    assert analysis.tuple == MetricTuple(Propensity.prob(0), 2, -1, Propensity.prob(1))
    assert analysis.syllables == ("sel", "va")
    assert analysis.weight == 1.0


def test_parse_two_weighted_analyses():
    text = ("creature\t0.9\t0\t1\tcre|a|tu|re\t-1\n"
            "creature\t0.1\t0\t1\tcrea|tu|re\t-1\n")
    lex = parse_lexicon(text)
    first, second = lex.lookup("creature")
    assert first.weight == 0.9 and first.n == 4
    assert second.weight == 0.1 and second.n == 3


def test_parse_empty_input():
    lex = parse_lexicon("")
    assert lex.entries == {}
    with pytest.raises(UnknownWord):
        lex.lookup("anything")


def test_parse_errors_carry_line_numbers():
    with pytest.raises(LexiconParseError, match="line 2"):
        parse_lexicon("# comment\nselva\t1\t0\t1\n")
    with pytest.raises(LexiconParseError, match="line 1"):
        parse_lexicon("selva\t1\t0\t1\tsel|va\t-9\n")
    with pytest.raises(LexiconParseError, match="propensity"):
        parse_lexicon("selva\t1\t2\t1\tsel|va\t-1\n")


def test_parse_rejects_unnormalized_keys():
    with pytest.raises(LexiconParseError, match="case-folded"):
        parse_lexicon("Selva\t1\t0\t1\tsel|va\t-1\n")


def test_parse_weight_sum_must_be_one():
    text = ("x\t0.5\t0\t1\tx\t0\n"
            "x\t0.3\t0\t1\tx\t0\n")
    with pytest.raises(LexiconValidationError, match="sum"):
        parse_lexicon(text)


def test_serialize_round_trip_with_apostrophe_sentinel():
    text = ("@stress-ineligible\te\til\n"
            "vid’\t1\t0\tA\tvi|d’\t-1\n"
            "e\t1\t0.9\t0.2\te\t0\n")
    lex = parse_lexicon(text)
    again = parse_lexicon(serialize_lexicon(lex))
    assert again == lex
    assert "A" in serialize_lexicon(lex)


def test_serialize_empty_lexicon_headers_only():
    out = serialize_lexicon(Lexicon({}))
    assert all(line.startswith("#") for line in out.splitlines() if line)
    assert parse_lexicon(out) == Lexicon({})


def test_lookup_known_words(seed_lexicon):
    (selva,) = seed_lexicon.lookup("selva")
    assert selva.n == 2
    beatrice = seed_lexicon.lookup("beatrice")
    assert len(beatrice) == 2
    with pytest.raises(UnknownWord) as err:
        seed_lexicon.lookup("xyzzy")
    assert err.value.key == "xyzzy"


def test_with_override_replaces_without_mutating():
    lex = parse_lexicon("e\t1\t0.9\t0.2\te\t0\n")
    new = lex.with_override("e", [WordAnalysis(
        ("e",), (0,), Propensity.prob(0.5), Propensity.prob(0.5))])
    assert new.lookup("e")[0].p_l == Propensity.prob(0.5)
    assert lex.lookup("e")[0].p_l == Propensity.prob(0.9)


def test_with_override_validates_weights():
    lex = parse_lexicon(SELVA_LINE)
    with pytest.raises(LexiconValidationError):
        lex.with_override("selva", [WordAnalysis(
            ("sel", "va"), (-1,), Propensity.prob(0), Propensity.prob(1), 0.5)])


def test_stress_ineligible_set(seed_lexicon):
    assert not seed_lexicon.is_stress_eligible("che")
    assert not seed_lexicon.is_stress_eligible("’l")
    assert seed_lexicon.is_stress_eligible("selva")


def test_build_lexicon_checks_every_key():
    with pytest.raises(LexiconValidationError):
        build_lexicon({"a": []})
