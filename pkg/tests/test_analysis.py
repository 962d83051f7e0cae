import pytest

from endecascan.analysis import (AccentPattern, AnalysisError, Outcome, Side,
                                 accent_pattern, classify_word, histogram_tsv,
                                 metric_units, occurrences_tsv,
                                 pattern_histogram)
from endecascan.corpus import parse_corpus, scan_document
from endecascan.scander import ScanConfig, scan_verse
from endecascan.tokenizer import normalize_line, tokenize

PORTO_FIXTURE = """Inferno: Canto XXII

sì che, stracciando, ne portò un lacerto.

Inferno: Canto XXVII

A Minòs mi portò; e quelli attorse
"""


@pytest.fixture(scope="module")
def porto_report(seed_lexicon):
    return scan_document(parse_corpus(PORTO_FIXTURE), seed_lexicon, ScanConfig())


def test_classify_word_synalephe_and_dialephe(porto_report):
    occurrences = classify_word("portò", porto_report)
    right = {(o.location[0], o.location[1]): o.outcome
             for o in occurrences if o.side is Side.RIGHT}
    assert right[("Inferno", 22)] is Outcome.SYNALEPHE
    assert right[("Inferno", 27)] is Outcome.DIALEPHE
    lefts = [o for o in occurrences if o.side is Side.LEFT]
    assert all(o.outcome is Outcome.DIALEPHE for o in lefts)


def test_classify_word_never_synalephe(seed_lexicon, canto_document):
    report = scan_document(canto_document, seed_lexicon, ScanConfig())
    occurrences = classify_word("tra", report)
    assert occurrences
    assert all(o.outcome is Outcome.DIALEPHE for o in occurrences)


def test_classify_absent_word(porto_report):
    assert classify_word("assente", porto_report) == []


def scan(text, lex):
    return scan_verse(tokenize(normalize_line(text)), lex, ScanConfig())


def test_accent_pattern_line_one(seed_lexicon):
    scansion = scan("Nel mezzo del cammin di nostra vita", seed_lexicon)
    pattern = accent_pattern(scansion, seed_lexicon)
    assert pattern.rendered == "-+---+-+-+-"


def test_accent_pattern_requires_chosen_state(seed_lexicon):
    failed = scan("selva oscura", seed_lexicon)
    with pytest.raises(AnalysisError):
        accent_pattern(failed, seed_lexicon)


def test_accent_pattern_includes_tenth(seed_lexicon, canto_document):
    report = scan_document(canto_document, seed_lexicon, ScanConfig())
    for record in report.records:
        pattern = accent_pattern(record.scansion, seed_lexicon)
        assert pattern.positions[9], record.location
        assert len(pattern.positions) == record.scansion.chosen.count


def test_accent_pattern_one_word_verse(seed_lexicon):
    tokens = tokenize(normalize_line("Amore"))
    scansion = scan_verse(tokens, seed_lexicon, ScanConfig(require_a10=False))
    assert accent_pattern(scansion, seed_lexicon).rendered == "-+-"


def test_accent_pattern_secondary_flag(seed_lexicon):
    scansion = scan("con tre gole caninamente latra", seed_lexicon)
    without = accent_pattern(scansion, seed_lexicon)
    with_secondary = accent_pattern(scansion, seed_lexicon, include_secondary=True)
    assert not without.positions[5]
    assert with_secondary.positions[5]


def test_metric_units_paper_pair():
    assert metric_units(AccentPattern(tuple(
        c == "+" for c in "-+---+-+-+-"))) == "1/4/2/2/2/"


def test_metric_units_degenerate_patterns():
    assert metric_units(AccentPattern((True, True, True))) == "1/1/1/"
    # unstressed prefix counts as its own unit; the last unit runs to
    # the end of the verse, so units always sum to the verse length
    assert metric_units(AccentPattern((False,) * 4 + (True,))) == "4/1/"
    with pytest.raises(AnalysisError):
        metric_units(AccentPattern((False, False)))


def test_pattern_histogram_totals(seed_lexicon, canto_document):
    report = scan_document(canto_document, seed_lexicon, ScanConfig())
    histogram = pattern_histogram(report, seed_lexicon)
    assert sum(histogram.values()) == 136
    counts = list(histogram.values())
    assert counts == sorted(counts, reverse=True)


def test_pattern_histogram_empty(seed_lexicon):
    report = scan_document(parse_corpus("Inferno: Canto I\n"), seed_lexicon,
                           ScanConfig())
    assert pattern_histogram(report, seed_lexicon) == {}


def test_pattern_histogram_counts_duplicates(seed_lexicon):
    text = ("Inferno: Canto I\n\n"
            "Nel mezzo del cammin di nostra vita\n"
            "Nel mezzo del cammin di nostra vita\n")
    report = scan_document(parse_corpus(text), seed_lexicon, ScanConfig())
    assert pattern_histogram(report, seed_lexicon) == {"-+---+-+-+-": 2}


def test_tsv_serializers(porto_report, seed_lexicon):
    occurrences = classify_word("portò", porto_report)
    tsv = occurrences_tsv(occurrences)
    assert tsv.startswith("cantica\tcanto\tline\tword\tside\toutcome\tneighbor")
    assert "synalephe" in tsv and "dialephe" in tsv
    histogram = pattern_histogram(porto_report, seed_lexicon)
    assert histogram_tsv(histogram).startswith("pattern\tcount\n")
