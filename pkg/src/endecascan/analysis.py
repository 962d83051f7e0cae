"""Research queries over scan reports.

Two families of questions: where a given word melds or refuses to meld
with its neighbours, and which accent patterns (periodic functions) the
chosen scansions realize.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum

from .corpus import ScanReport
from .lexicon import Lexicon
from .scander import VerseScansion
from .tokenizer import word_tokens


class Side(Enum):
    LEFT = "left"
    RIGHT = "right"


class Outcome(Enum):
    SYNALEPHE = "synalephe"
    DIALEPHE = "dialephe"


@dataclass(frozen=True)
class Occurrence:
    location: tuple[str, int, int]
    key: str
    side: Side
    outcome: Outcome
    neighbor: str


@dataclass(frozen=True)
class AccentPattern:
    positions: tuple[bool, ...]

    @property
    def rendered(self) -> str:
        return "".join("+" if p else "-" for p in self.positions)


class AnalysisError(Exception):
    pass


def classify_word(key: str, report: ScanReport) -> list[Occurrence]:
    """Every junction adjacent to key in every chosen state, classified."""
    out: list[Occurrence] = []
    for record in report.records:
        chosen = record.scansion.chosen
        if chosen is None:
            continue
        words = word_tokens(list(record.tokens))
        for i, token in enumerate(words):
            if token.key != key:
                continue
            if i > 0:
                outcome = Outcome.SYNALEPHE if chosen.melds[i] else Outcome.DIALEPHE
                out.append(Occurrence(record.location, key, Side.LEFT,
                                      outcome, words[i - 1].key))
            if i + 1 < len(words):
                outcome = (Outcome.SYNALEPHE if chosen.melds[i + 1]
                           else Outcome.DIALEPHE)
                out.append(Occurrence(record.location, key, Side.RIGHT,
                                      outcome, words[i + 1].key))
    return out


def accent_pattern(scansion: VerseScansion, lex: Lexicon,
                   include_secondary: bool = False) -> AccentPattern:
    """Stress profile of the chosen state over its syllable positions.

    Primary accents of stress-eligible words are marked; the accent
    satisfying the tenth-syllable constraint is always marked even when
    it comes from a word outside the eligible set.
    """
    chosen = scansion.chosen
    if chosen is None:
        raise AnalysisError("no chosen state to profile")
    stressed = set()
    for mark in chosen.accents:
        if not 1 <= mark.position <= chosen.count or not mark.eligible:
            continue
        if mark.primary or include_secondary:
            stressed.add(mark.position)
    return AccentPattern(tuple(i in stressed for i in range(1, chosen.count + 1)))


def metric_units(pattern: AccentPattern) -> str:
    """Encode a stress profile as slash-separated unit lengths.

    The verse is partitioned into an optional unstressed prefix plus one
    run per stress (each run starts at its stress and extends to just
    before the next); unit lengths therefore sum to the verse length.
    """
    stresses = [i for i, p in enumerate(pattern.positions) if p]
    if not stresses:
        raise AnalysisError("pattern has no stress")
    length = len(pattern.positions)
    units = []
    if stresses[0] > 0:
        units.append(stresses[0])
    for a, b in zip(stresses, stresses[1:]):
        units.append(b - a)
    units.append(length - stresses[-1])
    return "".join(f"{u}/" for u in units)


def pattern_histogram(report: ScanReport, lex: Lexicon,
                      include_secondary: bool = False) -> dict[str, int]:
    """Histogram of rendered accent patterns over the chosen states."""
    counts: Counter = Counter()
    for record in report.records:
        if record.scansion.chosen is None:
            continue
        counts[accent_pattern(record.scansion, lex, include_secondary).rendered] += 1
    ordered = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return dict(ordered)


def occurrences_tsv(occurrences: list[Occurrence]) -> str:
    rows = ["cantica\tcanto\tline\tword\tside\toutcome\tneighbor"]
    for o in occurrences:
        c, n, l = o.location
        rows.append(f"{c}\t{n}\t{l}\t{o.key}\t{o.side.value}\t"
                    f"{o.outcome.value}\t{o.neighbor}")
    return "\n".join(rows) + "\n"


def histogram_tsv(histogram: dict[str, int]) -> str:
    rows = ["pattern\tcount"]
    rows.extend(f"{p}\t{c}" for p, c in histogram.items())
    return "\n".join(rows) + "\n"
