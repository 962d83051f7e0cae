"""Probabilistic syllabification and scansion of Italian hendecasyllables."""

from .lexicon import (Lexicon, MetricTuple, Propensity, UnknownWord,
                      WordAnalysis, parse_lexicon, serialize_lexicon)
from .scander import (ScanConfig, ScanState, ScanStatus, VerseScansion,
                      meld_probability, scan_verse)
from .tokenizer import Token, TokenKind, lex_key, normalize_line, tokenize

__all__ = [
    "Lexicon", "MetricTuple", "Propensity", "UnknownWord", "WordAnalysis",
    "parse_lexicon", "serialize_lexicon",
    "ScanConfig", "ScanState", "ScanStatus", "VerseScansion",
    "meld_probability", "scan_verse",
    "Token", "TokenKind", "lex_key", "normalize_line", "tokenize",
]

__version__ = "0.1.0"
