"""Sidon (B2) sequences: generation, rigorous reciprocal-sum bounds, search."""

from .bounds import (
    ReciprocalSumInterval,
    TailSplit,
    bound_interval,
    levine_bound,
    partial_sum,
    quad_tail,
    switch_index,
    tail_upper,
)
from .engine import (
    RECIPES,
    DifferenceSet,
    SequenceRecipe,
    SidonPrefix,
    SidonViolation,
    Verdict,
    generate,
    rebuild,
    verify_sidon,
)
from .search import (
    CandidateScore,
    SearchConfig,
    SearchResult,
    StepRecord,
    enumerate_candidates,
    rollout_score,
    run_search,
    search_step,
)

__version__ = "0.1.0"
