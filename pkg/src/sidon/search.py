"""One-step-lookahead search for Sidon sequences with large reciprocal sums.

Each step scores the K smallest admissible extensions by rolling the
sequence out greedily to a shared horizon and taking the partial
reciprocal sum (lower endpoint) of the rollout; the best-scoring
candidate is committed and the process repeats.  The score is a
comparison heuristic between candidates sharing a horizon, not a
rigorous ordering of the true reciprocal sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import fast
from .bounds import partial_sum
from .engine import SidonPrefix, SidonViolation, rebuild

__all__ = [
    "SearchConfig",
    "CandidateScore",
    "StepRecord",
    "SearchResult",
    "enumerate_candidates",
    "rollout_score",
    "search_step",
    "run_search",
]

TERM_COUNT = "term_count"
VALUE_CAP = "value_cap"


@dataclass(frozen=True)
class SearchConfig:
    """Knobs of the lookahead procedure.

    ``horizon`` is a total term count in term_count mode, or a value
    ceiling in value_cap mode (rollouts stop before the first term that
    would exceed it).
    """

    num_candidates: int = 20
    horizon_mode: str = VALUE_CAP
    horizon: int = 64000
    steps: int = 0

    def __post_init__(self):
        if self.num_candidates < 1:
            raise ValueError("num_candidates must be >= 1")
        if self.horizon_mode not in (TERM_COUNT, VALUE_CAP):
            raise ValueError(f"unknown horizon_mode {self.horizon_mode!r}")
        if self.horizon < 1:
            raise ValueError("horizon must be positive")
        if self.steps < 0:
            raise ValueError("steps must be >= 0")


@dataclass(frozen=True)
class CandidateScore:
    candidate: int
    score: float  # partial-sum lower endpoint of the rollout
    rollout_length: int


@dataclass(frozen=True)
class StepRecord:
    step: int  # 1-based
    position: int  # position the chosen term occupies
    scores: tuple[CandidateScore, ...]
    chosen: int


@dataclass(frozen=True)
class SearchResult:
    terms: list[int]
    records: list[StepRecord]


def enumerate_candidates(prefix: SidonPrefix, k: int) -> list[int]:
    """The k smallest admissible values above the last term, ascending."""
    out = []
    x = prefix.last + 1
    while len(out) < k:
        if prefix.is_admissible(x):
            out.append(x)
        x += 1
    return out


def _check_horizon(prefix: SidonPrefix, config: SearchConfig) -> None:
    if config.horizon_mode == TERM_COUNT:
        if config.horizon <= len(prefix):
            raise ValueError(
                f"term-count horizon {config.horizon} does not exceed the "
                f"prefix length {len(prefix)}")
    elif config.horizon <= prefix.last:
        raise ValueError(
            f"value-cap horizon {config.horizon} does not exceed the "
            f"last term {prefix.last}")


def rollout_score(prefix: SidonPrefix, candidate: int, config: SearchConfig) -> CandidateScore:
    """Score a candidate by greedy continuation to the configured horizon.

    The rollout works on a private copy; the caller's prefix is untouched.
    """
    if not prefix.is_admissible(candidate):
        i, j, k = prefix.conflict_triple(candidate)
        raise SidonViolation(
            f"candidate {candidate} is inadmissible (a_{i} + a_{j} = a_{k} + {candidate})",
            kind="inadmissible", indices=(i, j, k))
    seed = list(prefix.terms) + [candidate]
    if config.horizon_mode == TERM_COUNT:
        rolled, _, _, _ = fast.extend(seed, n_target=max(config.horizon, len(seed)))
    else:
        # value_cap never truncates the candidate itself
        rolled, _, _, _ = fast.extend(seed, value_cap=max(config.horizon, candidate))
    score = partial_sum(list(rolled)).lower
    return CandidateScore(candidate, score, len(rolled))


def search_step(prefix: SidonPrefix, config: SearchConfig) -> tuple[int, list[CandidateScore]]:
    """Pick the best-scoring of the K smallest admissible extensions.

    Ties break toward the smallest candidate (candidates are scanned in
    ascending order and replacement requires a strictly larger score), so
    the result is deterministic and independent of scoring order.
    """
    scores = [
        rollout_score(prefix, c, config)
        for c in enumerate_candidates(prefix, config.num_candidates)
    ]
    best = scores[0]
    for cs in scores[1:]:
        if cs.score > best.score:
            best = cs
    return best.candidate, scores


def run_search(seed: Sequence[int], config: SearchConfig) -> SearchResult:
    """Iterate search_step ``config.steps`` times from a verified seed."""
    prefix = rebuild(seed)
    _check_horizon(prefix, config)
    records = []
    for step in range(1, config.steps + 1):
        chosen, scores = search_step(prefix, config)
        prefix.append(chosen)
        records.append(StepRecord(step, len(prefix), tuple(scores), chosen))
    return SearchResult(prefix.terms, records)
