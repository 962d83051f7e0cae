"""Verse scansion by weighted state expansion.

A verse is consumed word by word.  Each partial reading is a state
carrying the rendered syllabification so far, its likelihood, the
syllable count, and the right-hand synalephe propensity of the last
word.  When the melding probability between two adjacent words is not
categorical the state forks: one branch melds the boundary syllables
(weighted by the meld probability), the other keeps them apart.

Metric constraints prune the candidate space: a stress on the tenth
syllable is mandatory, a stress on the fourth or sixth is preferred,
and words trailing the tenth-syllable stress may not push the total
beyond eleven syllables unless that stress sits in the verse-final
word.  Among admissible readings the most likely one wins.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum

from .lexicon import PROB_ZERO, Lexicon, Propensity, UnknownWord, WordAnalysis
from .tokenizer import Token, word_tokens

TENTH = 10


@dataclass(frozen=True)
class ScanConfig:
    require_a10: bool = True
    prefer_a4_or_a6: bool = True
    max_total_syllables: int = 11
    likelihood_floor: float = 1e-9
    tie_epsilon: float = 1e-12
    # disabled only by exhaustive-enumeration checks; admissibility is
    # still enforced at finalize time
    incremental_pruning: bool = True

    def __post_init__(self):
        if self.max_total_syllables < 1:
            raise ValueError("max_total_syllables must be >= 1")
        if self.likelihood_floor < 0 or self.tie_epsilon <= 0:
            raise ValueError("floors must be positive")


@dataclass(frozen=True)
class AccentMark:
    """One accent landing inside a scanned verse."""

    position: int
    primary: bool
    eligible: bool
    word_index: int


@dataclass(frozen=True)
class ScanState:
    """One partial (or final) reading of a verse."""

    text: str = ""
    likelihood: float = 1.0
    count: int = 0
    pending_p_r: Propensity = PROB_ZERO
    a4: bool = False
    a6: bool = False
    a10: bool = False
    accent10_word_index: int | None = None
    words_after_accent10: int = 0
    melds: tuple[bool, ...] = ()  # per word: melded with the previous one
    accents: tuple[AccentMark, ...] = ()
    order: int = 0  # construction order, the deterministic tie-breaker

    @property
    def syllables(self) -> list[str]:
        # everything after the first bar; a leading chunk is punctuation
        return self.text.split("|")[1:]


class ScanStatus(Enum):
    OK = "ok"
    WARN_NO_CAESURA = "warn-no-caesura"
    FAIL_NO_ACCENT10 = "fail-no-accent10"
    FAIL_UNKNOWN_WORD = "fail-unknown-word"

    @property
    def is_admissible(self) -> bool:
        return self in (ScanStatus.OK, ScanStatus.WARN_NO_CAESURA)


@dataclass(frozen=True)
class VerseScansion:
    """Outcome of scanning one verse."""

    chosen: ScanState | None
    admissible: tuple[ScanState, ...]
    status: ScanStatus
    final_states: tuple[ScanState, ...] = ()
    unknown_key: str | None = None
    best_rejected: ScanState | None = None


def meld_probability(p_r: Propensity, p_l: Propensity) -> float:
    """Probability that two adjacent word boundaries meld.

    An apostrophe forces the synalephe against any partner that admits
    one at all; a flat zero on the other side (consonant contact) still
    blocks it.  Otherwise the probability is the plain product.
    """
    if p_r.is_apostrophe or p_l.is_apostrophe:
        if p_r.is_apostrophe and p_l.is_apostrophe:
            return 1.0
        other = p_l if p_r.is_apostrophe else p_r
        return 0.0 if other.value == 0.0 else 1.0
    return p_r.value * p_l.value


def split_surface(surface: str, analysis: WordAnalysis) -> list[str]:
    """Slice the surface form with the analysis' syllable lengths."""
    lengths = [len(s) for s in analysis.syllables]
    if sum(lengths) != len(surface):
        raise ValueError(
            f"analysis {'|'.join(analysis.syllables)!r} does not cover "
            f"surface {surface!r}")
    out = []
    pos = 0
    for length in lengths:
        out.append(surface[pos:pos + length])
        pos += length
    return out


def _append_word(state: ScanState, token: Token, prev_trail: str,
                 sylls: list[str], melded: bool) -> str:
    lead = token.lead
    head = sylls[0]
    rest = "".join("|" + s for s in sylls[1:])
    if melded:
        return state.text + prev_trail + lead + " " + head + rest
    if state.text or prev_trail or lead:
        return state.text + prev_trail + lead + " |" + head + rest
    return "|" + head + rest


def advance(states: list[ScanState], token: Token,
            analyses: tuple[WordAnalysis, ...], token_index: int,
            stress_eligible: bool, cfg: ScanConfig,
            prev_trail: str = "") -> list[ScanState]:
    """Extend every state with every analysis of the next word.

    Non-categorical meld probabilities fork each state into a melded
    branch (weight m) and a separate branch (weight 1 - m); likelihood
    mass is conserved.  Accent bookkeeping and incremental pruning
    happen here.
    """
    successors: list[ScanState] = []
    order = 0
    for state in states:
        for analysis in analyses:
            m = meld_probability(state.pending_p_r, analysis.p_l)
            branches: list[tuple[bool, float]] = []
            if m >= 1.0:
                branches.append((True, 1.0))
            elif m <= 0.0:
                branches.append((False, 1.0))
            else:
                branches.append((True, m))
                branches.append((False, 1.0 - m))
            sylls = split_surface(token.word, analysis)
            for melded, branch_p in branches:
                likelihood = state.likelihood * analysis.weight * branch_p
                count = state.count + analysis.n - (1 if melded else 0)
                a4, a6, a10 = state.a4, state.a6, state.a10
                accent10_word = state.accent10_word_index
                trailing = state.words_after_accent10
                marks = list(state.accents)
                if state.a10:
                    trailing += 1
                for o in analysis.accents:
                    position = count + o
                    primary = o == analysis.accents[0]
                    marks.append(AccentMark(position, primary,
                                            stress_eligible, token_index))
                    if not stress_eligible:
                        continue  # not accepted as a legal accent anywhere
                    if position == 4:
                        a4 = True
                    if position == 6:
                        a6 = True
                    if position == TENTH and primary and not a10:
                        a10 = True
                        accent10_word = token_index
                if cfg.incremental_pruning:
                    if likelihood < cfg.likelihood_floor:
                        continue
                    # trailing-word rule: once the tenth-syllable stress is
                    # placed, further words may not exceed the total budget
                    if (a10 and accent10_word != token_index
                            and count > cfg.max_total_syllables):
                        continue
                text = _append_word(state, token, prev_trail, sylls, melded)
                successors.append(ScanState(
                    text=text, likelihood=likelihood, count=count,
                    pending_p_r=analysis.p_r, a4=a4, a6=a6, a10=a10,
                    accent10_word_index=accent10_word,
                    words_after_accent10=trailing,
                    melds=state.melds + (melded,),
                    accents=tuple(marks), order=order))
                order += 1
    return successors


def _admissible(state: ScanState, cfg: ScanConfig, last_word_index: int) -> bool:
    if cfg.require_a10 and not state.a10:
        return False
    if state.a10 and state.accent10_word_index == last_word_index:
        return True  # versi sdruccioli: any count when the stress is final
    return state.count <= cfg.max_total_syllables


def finalize(states: list[ScanState], cfg: ScanConfig,
             last_word_index: int) -> VerseScansion:
    """Filter final states by the metric constraints and pick a winner."""
    final = tuple(states)
    admissible = [s for s in states if _admissible(s, cfg, last_word_index)]
    if not admissible:
        best = max(states, key=lambda s: s.likelihood, default=None)
        return VerseScansion(None, (), ScanStatus.FAIL_NO_ACCENT10, final,
                             best_rejected=best)
    status = ScanStatus.WARN_NO_CAESURA
    if cfg.prefer_a4_or_a6 and any(s.a4 or s.a6 for s in admissible):
        admissible = [s for s in admissible if s.a4 or s.a6]
        status = ScanStatus.OK
    elif not cfg.prefer_a4_or_a6:
        status = ScanStatus.OK
    ranked = _rank(admissible, cfg.tie_epsilon)
    return VerseScansion(ranked[0], tuple(ranked), status, final)


def _rank(states: list[ScanState], eps: float) -> list[ScanState]:
    by_likelihood = sorted(states, key=lambda s: -s.likelihood)
    ranked: list[ScanState] = []
    i = 0
    while i < len(by_likelihood):
        j = i
        while (j + 1 < len(by_likelihood)
               and by_likelihood[i].likelihood - by_likelihood[j + 1].likelihood <= eps):
            j += 1
        group = sorted(by_likelihood[i:j + 1], key=lambda s: (s.count, s.order))
        ranked.extend(group)
        i = j + 1
    return ranked


def scan_verse(tokens: list[Token], lex: Lexicon,
               cfg: ScanConfig | None = None) -> VerseScansion:
    """Scan one tokenized verse against a lexicon."""
    cfg = cfg or ScanConfig()
    words = word_tokens(tokens)
    if not words:
        return VerseScansion(None, (), ScanStatus.FAIL_NO_ACCENT10, ())
    states = [ScanState()]
    prev_trail = ""
    for index, token in enumerate(words):
        try:
            analyses = lex.lookup(token.key)
        except UnknownWord:
            return VerseScansion(None, (), ScanStatus.FAIL_UNKNOWN_WORD, (),
                                 unknown_key=token.key)
        states = advance(states, token, analyses, index,
                         lex.is_stress_eligible(token.key), cfg, prev_trail)
        prev_trail = token.trail
        if not states:
            return VerseScansion(None, (), ScanStatus.FAIL_NO_ACCENT10, ())
    states = [replace(s, text=s.text + prev_trail) for s in states]
    return finalize(states, cfg, len(words) - 1)
