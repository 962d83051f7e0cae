import pathlib

from endecascan.cli import main

DATA = pathlib.Path(__file__).parent / "data"
SEED = str(pathlib.Path(__file__).parents[1] / "src" / "endecascan" / "data"
           / "seed.lex")
VERSE = "esta selva selvaggia e aspra e forte"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_scan_prints_rendering_and_likelihood(capsys):
    code, out, err = run(capsys, "scan", "--lexicon", SEED, VERSE)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "|e|sta |sel|va |sel|vag|gia e |a|spra e |for|te"
    assert lines[1] == "likelihood: 0.648"
    assert "a6" in lines[2] and "a10" in lines[2]


def test_scan_uses_bundled_lexicon_by_default(capsys, monkeypatch):
    monkeypatch.delenv("ENDECASCAN_LEXICON", raising=False)
    code, out, _ = run(capsys, "scan", VERSE)
    assert code == 0
    assert out.splitlines()[1] == "likelihood: 0.648"


def test_scan_lexicon_from_environment(capsys, monkeypatch, tmp_path):
    bad = tmp_path / "tiny.lex"
    bad.write_text("selva\t1\t0\t1\tsel|va\t-1\n", "utf-8")
    monkeypatch.setenv("ENDECASCAN_LEXICON", str(bad))
    code, out, err = run(capsys, "scan", VERSE)
    assert code == 1
    assert "esta" in err


def test_scan_is_deterministic(capsys):
    first = run(capsys, "scan", "--lexicon", SEED, VERSE)
    second = run(capsys, "scan", "--lexicon", SEED, VERSE)
    assert first == second


def test_scan_verbose_dumps_all_final_states(capsys):
    code, out, _ = run(capsys, "scan", "--lexicon", SEED, "--verbose", VERSE)
    assert code == 0
    states = [l for l in out.splitlines() if l.startswith("  (")]
    assert len(states) == 8
    assert any("0.648" in s for s in states)
    assert any(", 13, " in s for s in states)


def test_scan_unknown_word_exit_code(capsys):
    code, _, err = run(capsys, "scan", "--lexicon", SEED, "selva xyzzy oscura")
    assert code == 1
    assert "xyzzy" in err


def test_missing_file_is_fatal(capsys):
    code, _, err = run(capsys, "scan", "--lexicon", "/no/such/file.lex", VERSE)
    assert code == 2
    assert err


def test_unknown_flag_is_fatal(capsys):
    assert main(["scan", "--frobnicate", VERSE]) == 2


def test_corpus_subcommand(capsys, tmp_path):
    code, out, err = run(capsys, "corpus", "--lexicon", SEED,
                         "--in", str(DATA / "inferno_i.txt"),
                         "--out", str(tmp_path))
    assert code == 0
    assert "scanned 136 verses: 136 ok, 0 anomalies, 0 failures" in out
    assert sorted(p.name for p in tmp_path.iterdir()) == [
        "inferno_i.anomalies.txt", "inferno_i.report.tsv", "inferno_i.syl.txt"]


def test_lex_check(capsys, tmp_path):
    code, out, _ = run(capsys, "lex", "check", SEED)
    assert code == 0
    assert out.startswith("ok:")
    bad = tmp_path / "bad.lex"
    bad.write_text("x\t0.5\t0\t1\tx\t0\n", "utf-8")
    code, _, err = run(capsys, "lex", "check", str(bad))
    assert code == 1


def test_lex_build_drafts_entries(capsys, tmp_path):
    words = tmp_path / "words.txt"
    words.write_text("selva\noscura\navea\n", "utf-8")
    code, out, _ = run(capsys, "lex", "build", "--words", str(words))
    assert code == 0
    assert "selva\t1.0\t0.0\t1.0\tsel|va\t-1" in out
    assert out.count("avea") == 1
    code, out, _ = run(capsys, "lex", "build", "--words", str(words),
                       "--all-variants")
    assert out.count("avea") == 2


def test_lex_build_with_custom_rules(capsys, tmp_path):
    words = tmp_path / "words.txt"
    words.write_text("qua\n", "utf-8")
    rules = tmp_path / "rules.cfg"
    rules.write_text("never-synalephe\tbe\nprobabilistic\tqua\t0.5\t0.25\n", "utf-8")
    code, out, _ = run(capsys, "lex", "build", "--words", str(words),
                       "--rules", str(rules))
    assert code == 0
    assert "qua\t1.0\t0.5\t0.25\tqua\t0" in out


def test_corpus_with_explicit_amendments(capsys, tmp_path):
    src = tmp_path / "canto.txt"
    src.write_text("Inferno: Canto XX\n\nNel mezzo del cammin di nostra vita\n",
                   "utf-8")
    amendments = tmp_path / "fix.tsv"
    amendments.write_text("Inferno\tXX\t1\tcammin\tcammino\t\n", "utf-8")
    code, out, _ = run(capsys, "corpus", "--lexicon", SEED, "--in", str(src),
                       "--out", str(tmp_path / "out"),
                       "--amendments", str(amendments))
    assert code == 1  # the amended "cammino" breaks the metre: verse fails
    assert "1 failures" in out
    # a mismatching explicit amendment is fatal
    amendments.write_text("Inferno\tXX\t1\tnon presente\tx\t\n", "utf-8")
    code, _, err = run(capsys, "corpus", "--lexicon", SEED, "--in", str(src),
                       "--out", str(tmp_path / "out2"),
                       "--amendments", str(amendments))
    assert code == 2
    assert "amendment" in err


def test_query_subcommand(capsys):
    code, out, _ = run(capsys, "query", "--lexicon", SEED, "--word", "tra",
                       "--in", str(DATA / "inferno_i.txt"))
    assert code == 0
    assert "dialephe" in out


def test_stats_subcommand(capsys):
    code, out, _ = run(capsys, "stats", "--lexicon", SEED,
                       "--in", str(DATA / "inferno_i.txt"))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "pattern\tcount"
    assert sum(int(l.split("\t")[1]) for l in lines[1:]) == 136
