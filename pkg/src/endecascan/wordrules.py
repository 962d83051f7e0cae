"""Default rules for building word analyses from raw forms.

These rules bootstrap dictionary entries: standard splitting into
syllables, accent placement, and synalephe-propensity initialization.
They are deliberately rule-of-thumb; exotic forms (Latin, Provençal,
proparoxytones) are corrected by hand in the shipped dictionary, which
always wins over rule output.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterable, Mapping

from .lexicon import (PROB_ONE, PROB_ZERO, LexiconValidationError, Propensity,
                      WordAnalysis)
from .tokenizer import APOSTROPHE

STRONG_VOWELS = set("aeoàèéòóâêô")
WEAK_VOWELS = set("iuìíîùúû")
DIERESIS_VOWELS = set("äëïöü")
ACCENTED_VOWELS = set("àèéìíòóùú")
VOWELS = STRONG_VOWELS | WEAK_VOWELS | DIERESIS_VOWELS

MUTES = set("bcdfgpt")
LIQUIDS = set("lr")
DIGRAPH_ONSETS = {"ch", "gh", "gn", "gl", "sc", "qu"}

# monosyllables that never take part in a synalephe on the right
NEVER_SYNALEPHE = frozenset(
    "be me fa fo mo po pro qua re sto te tu tra tre".split())

# monosyllables with a calibrated probabilistic treatment, (p_l, p_r)
PROBABILISTIC_MONOSYLLABLES: Mapping[str, tuple[float, float]] = {
    "a": (0.9, 0.2),
    "ad": (0.9, 0.2),
    "che": (0.0, 0.2),
    "chi": (0.0, 0.2),
    "da": (0.0, 0.1),
    "e": (0.9, 0.2),
    "fra": (0.0, 0.1),
    "fu": (0.0, 0.1),
    "io": (0.9, 0.0),
    "ho": (0.9, 0.1),
    "ha": (0.9, 0.1),
    "ma": (0.0, 0.1),
    "o": (0.9, 0.2),
    "qui": (0.0, 0.2),
    "se": (0.0, 0.2),
    "su": (0.0, 0.2),
    "va": (0.0, 0.1),
    # the copula melds leftward readily; a stressed monosyllable after a
    # vowel normally takes the dialephe instead
    "è": (0.1, 0.5),
}


class WordRuleError(Exception):
    pass


def _load_wordlist(name: str) -> frozenset[str]:
    text = resources.files("endecascan").joinpath("data", name).read_text("utf-8")
    words = set()
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.add(line.lower())
    return frozenset(words)


@dataclass(frozen=True)
class RuleConfig:
    """Tunable data behind the default analysis rules."""

    never_synalephe_monosyllables: frozenset[str] = NEVER_SYNALEPHE
    probabilistic_monosyllables: Mapping[str, tuple[float, float]] = field(
        default_factory=lambda: dict(PROBABILISTIC_MONOSYLLABLES))
    accented_final_default_p_r: float = 0.1
    diphthong_boundary_p: float = 0.0
    hiatus_exception_words: frozenset[str] = frozenset()
    dieresis_characters: frozenset[str] = frozenset(DIERESIS_VOWELS)

    def __post_init__(self):
        overlap = self.never_synalephe_monosyllables & set(
            self.probabilistic_monosyllables)
        if overlap:
            raise LexiconValidationError(
                f"monosyllable sets overlap: {sorted(overlap)}")
        for p in (self.accented_final_default_p_r, self.diphthong_boundary_p):
            if not 0.0 <= p <= 1.0:
                raise LexiconValidationError(f"probability out of range: {p}")


def default_config() -> RuleConfig:
    return RuleConfig(hiatus_exception_words=_load_wordlist("hiatus_words.txt"))


def load_rule_config(text: str) -> RuleConfig:
    """Read a config file: TAB-separated `setting<TAB>value...` lines."""
    never = set(NEVER_SYNALEPHE)
    prob = dict(PROBABILISTIC_MONOSYLLABLES)
    hiatus: set[str] = set()
    accented_p_r = 0.1
    diphthong_p = 0.0
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        key, args = fields[0], fields[1:]
        if key == "never-synalephe":
            never = set(a.lower() for a in args)
        elif key == "probabilistic":
            if len(args) != 3:
                raise WordRuleError(f"line {line_no}: expected word, p_l, p_r")
            prob[args[0].lower()] = (float(args[1]), float(args[2]))
        elif key == "hiatus":
            hiatus.update(a.lower() for a in args)
        elif key == "accented-final-p-r":
            accented_p_r = float(args[0])
        elif key == "diphthong-p":
            diphthong_p = float(args[0])
        else:
            raise WordRuleError(f"line {line_no}: unknown setting {key!r}")
    return RuleConfig(
        never_synalephe_monosyllables=frozenset(never),
        probabilistic_monosyllables=prob,
        accented_final_default_p_r=accented_p_r,
        diphthong_boundary_p=diphthong_p,
        hiatus_exception_words=frozenset(hiatus),
    )


def _is_vowel(ch: str) -> bool:
    return ch.lower() in VOWELS


def _nuclei(form: str, hiatus_word: bool) -> list[tuple[int, int]]:
    """Locate syllable nuclei as (start, end) index ranges.

    A nucleus is a maximal run of vowels read as one sound, with the
    apostrophe standing in for an elided vowel.  Runs are broken at
    strong-strong contacts, around dieresis marks, before intervocalic
    glides, and (for words in the hiatus list) at rising weak-strong
    contacts as well.
    """
    low = form.lower()
    n = len(low)
    nuclei: list[tuple[int, int]] = []
    i = 0
    while i < n:
        ch = low[i]
        if ch == APOSTROPHE:
            if nuclei and nuclei[-1][1] == i and _is_vowel(low[i - 1]):
                nuclei[-1] = (nuclei[-1][0], i + 1)  # de', vuo', i'
            else:
                nuclei.append((i, i + 1))  # d', 'l: elided vowel
            i += 1
            continue
        if not _is_vowel(ch):
            i += 1
            continue
        # spelling-only glide after palatal c/g/sc/gl (or u after q/g)
        prev = low[i - 1] if i else ""
        prev2 = low[i - 2] if i > 1 else ""
        nxt = low[i + 1] if i + 1 < n else ""
        if nxt and _is_vowel(nxt):
            marker = ((prev in ("c", "g") and prev2 != "s")
                      or prev2 + prev in ("sc", "gl"))
            # hiatus-list words read the glide as a full vowel (coscienza,
            # region) except after a doubled consonant (viaggio)
            if hiatus_word and prev2 != prev:
                marker = False
            if ch == "i" and marker:
                i += 1
                continue
            if ch == "u" and prev in ("q", "g"):
                i += 1
                continue
        # collect a vowel run and split it into nuclei
        start = i
        while i < n and _is_vowel(low[i]):
            i += 1
        run = low[start:i]
        for s, e in _split_run(run, hiatus_word):
            nuclei.append((start + s, start + e))
        # a trailing apostrophe joins the final nucleus (cu', vuo')
        if i < n and low[i] == APOSTROPHE:
            nuclei[-1] = (nuclei[-1][0], i + 1)
            i += 1
    return nuclei


def _split_run(run: str, hiatus_word: bool) -> list[tuple[int, int]]:
    bounds = []
    start = 0
    for j in range(1, len(run)):
        a, b = run[j - 1], run[j]
        split = False
        if a in DIERESIS_VOWELS or b in DIERESIS_VOWELS:
            split = True
        elif a in STRONG_VOWELS and b in STRONG_VOWELS:
            split = True
        elif a == b:
            split = True
        elif b in WEAK_VOWELS and j + 1 < len(run) and _is_vowel(run[j + 1]):
            split = True  # intervocalic glide starts the next nucleus
        elif hiatus_word and a in WEAK_VOWELS and b in STRONG_VOWELS:
            split = True
        elif hiatus_word and a in STRONG_VOWELS and b in WEAK_VOWELS:
            split = True
        elif j - start >= 2 and b not in WEAK_VOWELS:
            split = True  # only a closing glide may extend a nucleus to three
        elif j - start >= 3:
            split = True
        if split:
            bounds.append((start, j))
            start = j
    bounds.append((start, len(run)))
    return bounds


def _legal_onset(cluster: str) -> bool:
    c = cluster.lower()
    # a trailing i/u here is a palatal/velar spelling glide (cia, gui, ...)
    if len(c) >= 2 and ((c[-1] == "i" and (c[-2] in "cg" or c[-3:-1] in ("sc", "gl")))
                        or (c[-1] == "u" and c[-2] in "qg")):
        c = c[:-1]
    if len(c) <= 1:
        return True
    if c in DIGRAPH_ONSETS:
        return True
    if len(c) == 2:
        if c[0] in MUTES and c[1] in LIQUIDS:
            return True
        return c[0] == "s" and c[1] != "s"  # s + consonant attaches rightward
    # s- prefixes whatever legal onset follows (o|scu|ra, no|stra)
    if c[0] == "s" and len(c) <= 4:
        return _legal_onset(c[1:])
    return False


def split_syllables(form: str, cfg: RuleConfig | None = None) -> list[str]:
    """Split a word form into syllables.

    Onsets are maximized within the bounds of Italian phonotactics;
    apostrophes count as elided vowels and never split away from their
    consonants; a dieresis always opens a hiatus.
    """
    if not form:
        raise WordRuleError("empty word form")
    cfg = cfg or RuleConfig()
    hiatus_word = form.lower() in cfg.hiatus_exception_words
    nuclei = _nuclei(form, hiatus_word)
    if not nuclei:
        warnings.warn(f"no vowel in {form!r}, treating as one syllable",
                      stacklevel=2)
        return [form]
    boundaries = [0]
    for k in range(len(nuclei) - 1):
        gap_start = nuclei[k][1]
        gap_end = nuclei[k + 1][0]
        # longest legal onset wins; the rest stays in the coda
        cut = gap_end
        for candidate in range(gap_start, gap_end):
            if _legal_onset(form[candidate:gap_end].lower()):
                cut = candidate
                break
        boundaries.append(cut)
    boundaries.append(len(form))
    out = [form[boundaries[k]:boundaries[k + 1]] for k in range(len(boundaries) - 1)]
    return [s for s in out if s]


def locate_accent(form: str, syllables: list[str] | tuple[str, ...]) -> list[int]:
    """Primary accent offset, plus the -mente secondary when it applies.

    The primary defaults to the penultimate syllable; a written accent
    or a final consonant (truncated form) moves it; dieresis marks are
    not accents.  Adverbs in -mente get a secondary stress on their stem.
    """
    sylls = list(syllables)
    n = len(sylls)
    primary = None
    for idx, syl in enumerate(sylls):
        if any(ch in ACCENTED_VOWELS for ch in syl.lower()):
            primary = idx - (n - 1)
    if primary is None:
        last = form.lower().rstrip(APOSTROPHE)
        final_nucleus = _nucleus_of(sylls[-1]).rstrip(APOSTROPHE)
        if n == 1:
            primary = 0
        elif sylls[-1].endswith(APOSTROPHE) and not _is_vowel(sylls[-1][0]):
            primary = -1  # tan|t', on|d': stress stays left of the elision
        elif last and not _is_vowel(last[-1]):
            primary = 0  # truncated form, stress on the final syllable
        elif len(final_nucleus) >= 2 and final_nucleus[-1] in "iu":
            primary = 0  # falling final diphthong: trovai, altrui
        else:
            primary = -1
    accents = [primary]
    if form.lower().endswith("mente") and n >= 4:
        stem_sylls = sylls[:-2]
        stem = form[: len(form) - 5]
        if stem and _is_vowel(stem[-1]):
            stem_offset = locate_accent(stem, stem_sylls)[0]
        else:
            stem_offset = -1  # elided stem (mirabil-) keeps its penult stress
        secondary = stem_offset - 2
        if -(n - 1) <= secondary <= 0 and secondary != primary:
            accents.append(secondary)
    return accents


def _nucleus_of(syllable: str) -> str:
    # reuse the nucleus scan so spelling glides are skipped
    spans = _nuclei(syllable, hiatus_word=False)
    if not spans:
        return ""
    s, e = spans[-1]
    return syllable.lower()[s:e]


def _first_nucleus(syllable: str) -> str:
    spans = _nuclei(syllable, hiatus_word=False)
    return syllable.lower()[spans[0][0]:spans[0][1]] if spans else ""


def init_propensities(form: str, syllables: list[str] | tuple[str, ...],
                      cfg: RuleConfig | None = None) -> tuple[Propensity, Propensity]:
    """Initial left/right synalephe propensities for a word form.

    Decision cascade per side, first match wins: apostrophe sentinel,
    never-synalephe monosyllables, calibrated monosyllables, accented
    final vowel, final/initial diphthong, plain vowel/consonant contact.
    """
    cfg = cfg or RuleConfig()
    if not syllables:
        raise WordRuleError("empty syllable list")
    low = form.lower()
    accents = locate_accent(form, syllables)

    p_l: Propensity | None = None
    p_r: Propensity | None = None

    if low.startswith(APOSTROPHE):
        p_l = Propensity.apostrophe()
    if low.endswith(APOSTROPHE):
        p_r = Propensity.apostrophe()

    if len(syllables) == 1 and low in cfg.never_synalephe_monosyllables:
        if p_r is None:
            p_r = PROB_ZERO
    if len(syllables) == 1 and low in cfg.probabilistic_monosyllables:
        pl, pr = cfg.probabilistic_monosyllables[low]
        if p_l is None:
            p_l = Propensity.prob(pl)
        if p_r is None:
            p_r = Propensity.prob(pr)

    if p_r is None and low[-1] in ACCENTED_VOWELS:
        p_r = Propensity.prob(cfg.accented_final_default_p_r)
    if p_r is None:
        nucleus = _nucleus_of(syllables[-1]).rstrip(APOSTROPHE)
        # a final diphthong carrying the stress refuses the synalephe; a
        # hiatus-list word read contracted keeps its stress in the cluster
        if len(nucleus) >= 2 and (accents[0] == 0
                                  or low in cfg.hiatus_exception_words):
            p_r = Propensity.prob(cfg.diphthong_boundary_p)
    if p_l is None:
        first = _first_nucleus(syllables[0]).rstrip(APOSTROPHE)
        if len(first) >= 2 and first[0] == "i":
            p_l = Propensity.prob(cfg.diphthong_boundary_p)

    if p_l is None:
        first = low[0] if low[0] != "h" or len(low) == 1 else low[1]
        p_l = PROB_ONE if _is_vowel(first) else PROB_ZERO
    if p_r is None:
        last = low.rstrip(APOSTROPHE)[-1] if low.rstrip(APOSTROPHE) else low[-1]
        p_r = PROB_ONE if _is_vowel(last) else PROB_ZERO
    return p_l, p_r


def build_analyses(form: str, cfg: RuleConfig | None = None,
                   nondet: Mapping[str, Iterable[WordAnalysis]] | None = None,
                   ) -> list[WordAnalysis]:
    """Compose the three rules into dictionary entries for a form.

    Forms listed in the nondeterministic table take their entries from
    it verbatim; everything else gets a single weight-1 analysis.
    """
    cfg = cfg or RuleConfig()
    if nondet and form.lower() in nondet:
        return list(nondet[form.lower()])
    syllables = split_syllables(form, cfg)
    accents = locate_accent(form, syllables)
    p_l, p_r = init_propensities(form, syllables, cfg)
    lowered = tuple(s.lower() for s in syllables)
    return [WordAnalysis(lowered, tuple(accents), p_l, p_r, 1.0)]
