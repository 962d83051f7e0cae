"""Metric word descriptions and the dictionary file format.

Every word form maps to one or more analyses; an analysis records the
syllable split, the accent offsets (negative, counted from the right
end of the word), the synalephe propensities of both extremities, and a
prior weight.  Multiple analyses of the same key model nondeterministic
syllabification (diphthong vs. hiatus readings) and their weights must
sum to one.

File format: UTF-8 lines, ``#`` comments, and data lines of six
TAB-separated fields::

    key  weight  p_l  p_r  syllabification  accents

where propensities are decimals in [0, 1] or the literal ``A``
(apostrophe sentinel), the syllabification joins syllables with ``|``
and accents is a comma-separated offset list, primary first.  A line
``@stress-ineligible`` followed by TAB-separated keys declares the
monosyllables that never count as metrical accents.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

WEIGHT_TOLERANCE = 1e-9
APOSTROPHE_VALUE = 2.0


class LexiconError(Exception):
    pass


class LexiconParseError(LexiconError):
    def __init__(self, message: str, line_no: int):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class LexiconValidationError(LexiconError):
    pass


class UnknownWord(LexiconError):
    def __init__(self, key: str):
        super().__init__(f"word not in lexicon: {key!r}")
        self.key = key


@dataclass(frozen=True)
class Propensity:
    """Synalephe propensity of one word extremity.

    value is a probability in [0, 1]; the sentinel value 2 marks an
    apostrophe, which melds with any partner that admits a synalephe
    at all.
    """

    value: float

    def __post_init__(self):
        v = self.value
        if not (0.0 <= v <= 1.0 or v == APOSTROPHE_VALUE):
            raise LexiconValidationError(f"propensity out of range: {v!r}")

    @property
    def is_apostrophe(self) -> bool:
        return self.value == APOSTROPHE_VALUE

    @classmethod
    def prob(cls, x: float) -> "Propensity":
        if not 0.0 <= x <= 1.0:
            raise LexiconValidationError(f"probability out of range: {x!r}")
        return cls(float(x))

    @classmethod
    def apostrophe(cls) -> "Propensity":
        return cls(APOSTROPHE_VALUE)

    def __str__(self) -> str:
        return "A" if self.is_apostrophe else repr(self.value)


PROB_ZERO = Propensity(0.0)
PROB_ONE = Propensity(1.0)


@dataclass(frozen=True)
class MetricTuple:
    """The per-word metric record: propensities, size, accent offset."""

    p_l: Propensity
    n: int
    a: int
    p_r: Propensity

    def __post_init__(self):
        if self.n < 1:
            raise LexiconValidationError(f"syllable count must be positive: {self.n}")
        if not -(self.n - 1) <= self.a <= 0:
            raise LexiconValidationError(
                f"accent offset {self.a} outside [{-(self.n - 1)}, 0]")


@dataclass(frozen=True)
class WordAnalysis:
    """One syllabification variant of a word form."""

    syllables: tuple[str, ...]
    accents: tuple[int, ...]  # offsets from the right end, primary first
    p_l: Propensity
    p_r: Propensity
    weight: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "syllables", tuple(self.syllables))
        object.__setattr__(self, "accents", tuple(self.accents))
        if not self.syllables or any(not s for s in self.syllables):
            raise LexiconValidationError("syllables must be nonempty")
        if not self.accents:
            raise LexiconValidationError("at least the primary accent is required")
        n = len(self.syllables)
        for o in self.accents:
            if not -(n - 1) <= o <= 0:
                raise LexiconValidationError(
                    f"accent offset {o} outside [{-(n - 1)}, 0] for {self.form!r}")
        if len(set(self.accents)) != len(self.accents):
            raise LexiconValidationError(f"duplicate accent offsets for {self.form!r}")
        if not 0.0 < self.weight <= 1.0:
            raise LexiconValidationError(f"weight must be in (0, 1]: {self.weight!r}")

    @property
    def form(self) -> str:
        return "".join(self.syllables)

    @property
    def n(self) -> int:
        return len(self.syllables)

    @property
    def tuple(self) -> MetricTuple:
        return MetricTuple(self.p_l, self.n, self.accents[0], self.p_r)


def _check_weights(key: str, analyses: Iterable[WordAnalysis]) -> tuple[WordAnalysis, ...]:
    analyses = tuple(analyses)
    if not analyses:
        raise LexiconValidationError(f"no analyses for {key!r}")
    total = sum(a.weight for a in analyses)
    if abs(total - 1.0) > WEIGHT_TOLERANCE:
        raise LexiconValidationError(f"weights for {key!r} sum to {total!r}, not 1")
    return analyses


@dataclass(frozen=True)
class Lexicon:
    """Immutable map from normalized word key to its analyses."""

    entries: Mapping[str, tuple[WordAnalysis, ...]]
    stress_ineligible: frozenset[str] = field(default_factory=frozenset)

    def lookup(self, key: str) -> tuple[WordAnalysis, ...]:
        try:
            return self.entries[key]
        except KeyError:
            raise UnknownWord(key) from None

    def __contains__(self, key: str) -> bool:
        return key in self.entries

    def is_stress_eligible(self, key: str) -> bool:
        return key not in self.stress_ineligible

    def with_override(self, key: str, analyses: Iterable[WordAnalysis]) -> "Lexicon":
        """A lexicon identical except for key; self is left untouched."""
        new = dict(self.entries)
        new[key] = _check_weights(key, analyses)
        return Lexicon(new, self.stress_ineligible)


def build_lexicon(entries: Mapping[str, Iterable[WordAnalysis]],
                  stress_ineligible: Iterable[str] = ()) -> Lexicon:
    checked = {k: _check_weights(k, v) for k, v in entries.items()}
    return Lexicon(checked, frozenset(stress_ineligible))


def _parse_propensity(text: str, line_no: int) -> Propensity:
    if text == "A":
        return Propensity.apostrophe()
    try:
        value = float(text)
    except ValueError:
        raise LexiconParseError(f"bad propensity {text!r}", line_no) from None
    if not 0.0 <= value <= 1.0:
        raise LexiconParseError(f"propensity {text!r} outside [0, 1]", line_no)
    return Propensity(value)


def parse_lexicon(text: str) -> Lexicon:
    """Parse the TAB-separated dictionary format described above."""
    entries: dict[str, list[WordAnalysis]] = {}
    ineligible: list[str] = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if stripped.startswith("@stress-ineligible"):
            ineligible.extend(stripped.split("\t")[1:])
            continue
        fields = line.rstrip("\n").split("\t")
        if len(fields) != 6:
            raise LexiconParseError(f"expected 6 fields, got {len(fields)}", line_no)
        key, weight_s, p_l_s, p_r_s, sylls_s, accents_s = fields
        if not key:
            raise LexiconParseError("empty key", line_no)
        if key != key.lower():
            raise LexiconParseError(f"key {key!r} is not case-folded", line_no)
        try:
            weight = 1.0 if weight_s in ("", "-") else float(weight_s)
        except ValueError:
            raise LexiconParseError(f"bad weight {weight_s!r}", line_no) from None
        p_l = _parse_propensity(p_l_s, line_no)
        p_r = _parse_propensity(p_r_s, line_no)
        syllables = tuple(sylls_s.split("|"))
        try:
            accents = tuple(int(a) for a in accents_s.split(","))
        except ValueError:
            raise LexiconParseError(f"bad accent list {accents_s!r}", line_no) from None
        try:
            analysis = WordAnalysis(syllables, accents, p_l, p_r, weight)
        except LexiconValidationError as exc:
            raise LexiconParseError(str(exc), line_no) from None
        entries.setdefault(key, []).append(analysis)
    try:
        return build_lexicon(entries, ineligible)
    except LexiconValidationError as exc:
        raise LexiconValidationError(f"invalid lexicon: {exc}") from None


def serialize_lexicon(lex: Lexicon) -> str:
    """Inverse of parse_lexicon; parse(serialize(lex)) == lex."""
    lines = ["# endecascan lexicon", "# key\tweight\tp_l\tp_r\tsyllabification\taccents"]
    if lex.stress_ineligible:
        lines.append("@stress-ineligible\t" + "\t".join(sorted(lex.stress_ineligible)))
    for key in lex.entries:
        for a in lex.entries[key]:
            lines.append("\t".join([
                key,
                repr(a.weight),
                str(a.p_l),
                str(a.p_r),
                "|".join(a.syllables),
                ",".join(str(o) for o in a.accents),
            ]))
    return "\n".join(lines) + "\n"
