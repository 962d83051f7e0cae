"""Command-line frontend.

    endecascan scan [--lexicon FILE] [--verbose] "verse text"
    endecascan corpus --in FILE --out DIR [--lexicon FILE] [--amendments FILE]
    endecascan lex build --words FILE [--rules FILE] [--all-variants]
    endecascan lex check FILE
    endecascan query --word W --in FILE [--lexicon FILE]
    endecascan stats --in FILE [--lexicon FILE]

Exit codes: 0 success, 1 per-verse failures present, 2 fatal input errors.
The ENDECASCAN_LEXICON environment variable overrides the bundled
default dictionary.
"""

from __future__ import annotations

import argparse
import os
import sys
from importlib import resources
from pathlib import Path

from . import analysis, corpus, seedlex, wordrules
from .lexicon import Lexicon, LexiconError, parse_lexicon, serialize_lexicon
from .scander import ScanConfig, ScanStatus, scan_verse
from .tokenizer import normalize_line, tokenize

EXIT_OK = 0
EXIT_VERSE_FAILURES = 1
EXIT_FATAL = 2


def _fail(message: str) -> int:
    print(f"endecascan: {message}", file=sys.stderr)
    return EXIT_FATAL


def load_default_lexicon() -> Lexicon:
    env = os.environ.get("ENDECASCAN_LEXICON")
    if env:
        return parse_lexicon(Path(env).read_text("utf-8"))
    text = resources.files("endecascan").joinpath("data", "seed.lex").read_text("utf-8")
    return parse_lexicon(text)


def _load_lexicon(path: str | None) -> Lexicon:
    if path is None:
        return load_default_lexicon()
    return parse_lexicon(Path(path).read_text("utf-8"))


def _cmd_scan(args) -> int:
    try:
        lex = _load_lexicon(args.lexicon)
    except (OSError, LexiconError) as exc:
        return _fail(str(exc))
    tokens = tokenize(normalize_line(args.verse))
    result = scan_verse(tokens, lex, ScanConfig())
    if result.status is ScanStatus.FAIL_UNKNOWN_WORD:
        print(f"endecascan: unknown word {result.unknown_key!r}", file=sys.stderr)
        return EXIT_VERSE_FAILURES
    if result.chosen is None:
        print("endecascan: no admissible scansion", file=sys.stderr)
        if result.best_rejected is not None:
            print(f"  best rejected: {result.best_rejected.text}", file=sys.stderr)
        return EXIT_VERSE_FAILURES
    chosen = result.chosen
    print(chosen.text)
    if args.verbose:
        print(f"likelihood: {chosen.likelihood!r}")
    else:
        print(f"likelihood: {chosen.likelihood:.3f}")
    flags = [f for f, on in (("a4", chosen.a4), ("a6", chosen.a6),
                             ("a10", chosen.a10)) if on]
    print(f"syllables: {chosen.count}  accents: {' '.join(flags)}  "
          f"status: {result.status.value}")
    if args.verbose:
        print("final states:")
        ordered = sorted(result.final_states, key=lambda s: -s.likelihood)
        for state in ordered:
            p_r = str(state.pending_p_r)
            print(f"  ({state.text}, {state.likelihood!r}, {state.count}, {p_r})")
    return EXIT_OK


def _cmd_corpus(args) -> int:
    try:
        lex = _load_lexicon(args.lexicon)
        text = Path(args.infile).read_text("utf-8")
        doc = corpus.parse_corpus(text)
        if args.amendments:
            amendments = corpus.parse_amendments(Path(args.amendments).read_text("utf-8"))
        else:
            amendments = corpus.parse_amendments(
                resources.files("endecascan").joinpath("data", "amendments.tsv")
                .read_text("utf-8"))
        try:
            doc = corpus.apply_amendments(doc, amendments)
        except corpus.AmendmentMismatch as exc:
            if args.amendments:
                return _fail(str(exc))
            # bundled amendments target the full Comedy; partial corpora
            # simply do not contain those verses
            applicable = [a for a in amendments
                          if any(loc == (a.cantica, a.canto, a.line)
                                 for loc, _ in doc.iter_verses())]
            doc = corpus.apply_amendments(doc, applicable)
        report = corpus.scan_document(doc, lex, ScanConfig())
        paths = corpus.write_outputs(report, args.out, Path(args.infile).stem)
    except (OSError, LexiconError, corpus.CorpusFormatError,
            corpus.AmendmentMismatch) as exc:
        return _fail(str(exc))
    n = len(report.records)
    print(f"scanned {n} verses: {len(report.ok)} ok, "
          f"{len(report.anomalies)} anomalies, {len(report.failures)} failures")
    for kind, path in paths.items():
        print(f"  {kind}: {path}")
    if report.unknown_words:
        words = ", ".join(sorted(report.unknown_words))
        print(f"unknown words: {words}", file=sys.stderr)
    return EXIT_VERSE_FAILURES if report.failures else EXIT_OK


def _cmd_lex_build(args) -> int:
    try:
        cfg = (wordrules.load_rule_config(Path(args.rules).read_text("utf-8"))
               if args.rules else wordrules.default_config())
        words = [w for w in Path(args.words).read_text("utf-8").split()
                 if not w.startswith("#")]
        lex = seedlex.build_draft_lexicon(words, cfg, all_variants=args.all_variants)
    except (OSError, LexiconError, wordrules.WordRuleError) as exc:
        return _fail(str(exc))
    sys.stdout.write(serialize_lexicon(lex))
    return EXIT_OK


def _cmd_lex_check(args) -> int:
    try:
        lex = parse_lexicon(Path(args.file).read_text("utf-8"))
    except OSError as exc:
        return _fail(str(exc))
    except LexiconError as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return EXIT_VERSE_FAILURES
    n = sum(len(v) for v in lex.entries.values())
    print(f"ok: {len(lex.entries)} keys, {n} analyses")
    return EXIT_OK


def _scan_report(args):
    lex = _load_lexicon(args.lexicon)
    doc = corpus.parse_corpus(Path(args.infile).read_text("utf-8"))
    return corpus.scan_document(doc, lex, ScanConfig()), lex


def _cmd_query(args) -> int:
    try:
        report, _ = _scan_report(args)
    except (OSError, LexiconError, corpus.CorpusFormatError) as exc:
        return _fail(str(exc))
    occurrences = analysis.classify_word(args.word.lower(), report)
    sys.stdout.write(analysis.occurrences_tsv(occurrences))
    return EXIT_OK


def _cmd_stats(args) -> int:
    try:
        report, lex = _scan_report(args)
    except (OSError, LexiconError, corpus.CorpusFormatError) as exc:
        return _fail(str(exc))
    histogram = analysis.pattern_histogram(report, lex,
                                           include_secondary=args.secondary)
    sys.stdout.write(analysis.histogram_tsv(histogram))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="endecascan",
                                     description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("scan", help="scan one verse")
    p.add_argument("verse")
    p.add_argument("--lexicon")
    p.add_argument("--verbose", action="store_true",
                   help="dump every final state with full precision")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("corpus", help="scan a corpus file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--lexicon")
    p.add_argument("--amendments")
    p.set_defaults(func=_cmd_corpus)

    p = sub.add_parser("lex", help="lexicon tools")
    lex_sub = p.add_subparsers(dest="lex_command", required=True)
    b = lex_sub.add_parser("build", help="draft entries from rules")
    b.add_argument("--words", required=True)
    b.add_argument("--rules")
    b.add_argument("--all-variants", action="store_true",
                   help="include opt-in nondeterministic variants")
    b.set_defaults(func=_cmd_lex_build)
    c = lex_sub.add_parser("check", help="validate a lexicon file")
    c.add_argument("file")
    c.set_defaults(func=_cmd_lex_check)

    p = sub.add_parser("query", help="synalephe/dialephe occurrences of a word")
    p.add_argument("--word", required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--lexicon")
    p.set_defaults(func=_cmd_query)

    p = sub.add_parser("stats", help="accent-pattern histogram")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--lexicon")
    p.add_argument("--secondary", action="store_true")
    p.set_defaults(func=_cmd_stats)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_FATAL if exc.code not in (0, None) else 0
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
