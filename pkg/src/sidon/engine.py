"""Sidon (B2) prefixes: admissibility, greedy extension, and verification.

A Sidon sequence is a strictly increasing sequence of positive integers
whose pairwise sums a_i + a_j (i <= j) are all distinct, or equivalently
whose positive pairwise differences are all distinct.  The difference
view drives generation (one membership probe per existing term); the sum
view is kept as an independent brute-force oracle in :func:`verify_sidon`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np

__all__ = [
    "SidonViolation",
    "Verdict",
    "DifferenceSet",
    "SidonPrefix",
    "SequenceRecipe",
    "RECIPES",
    "verify_sidon",
    "rebuild",
    "generate",
]


class SidonViolation(ValueError):
    """A candidate or term list breaks the Sidon property.

    ``indices`` holds 1-based positions.  For an inadmissible candidate x
    the triple (i, j, k) satisfies a_i + a_j = a_k + x; for a list-level
    collision the quadruple (i, j, k, l) satisfies a_i + a_j = a_k + a_l.
    """

    def __init__(self, message: str, kind: str, indices: tuple = (), position: int | None = None):
        super().__init__(message)
        self.kind = kind
        self.indices = indices
        self.position = position


@dataclass(frozen=True)
class Verdict:
    """Outcome of the brute-force Sidon check."""

    ok: bool
    kind: Optional[str] = None  # "not_increasing" | "nonpositive" | "sum_collision"
    indices: tuple = ()  # 1-based positions involved in the violation
    value: Optional[int] = None  # colliding sum, or the offending term

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "OK"
        if self.kind == "not_increasing":
            return f"terms not strictly increasing at position {self.indices[0]}"
        if self.kind == "nonpositive":
            return f"non-positive term at position {self.indices[0]}"
        i, j, k, l = self.indices
        return (
            f"sum collision: a_{i} + a_{j} = a_{k} + a_{l} = {self.value}"
        )


class DifferenceSet:
    """Exact set of the positive pairwise differences of a prefix."""

    __slots__ = ("_set",)

    def __init__(self, diffs: Iterable[int] = ()):
        self._set = set(diffs)

    def __contains__(self, d: int) -> bool:
        return d in self._set

    def __len__(self) -> int:
        return len(self._set)

    def add_term_diffs(self, terms: Sequence[int], x: int) -> None:
        """Record the differences x - a_i created by appending x."""
        self._set.update(x - a for a in terms)

    def copy(self) -> "DifferenceSet":
        out = DifferenceSet()
        out._set = set(self._set)
        return out

    @classmethod
    def from_terms(cls, terms: Sequence[int]) -> "DifferenceSet":
        ds = cls()
        for j in range(1, len(terms)):
            ds._set.update(terms[j] - terms[i] for i in range(j))
        return ds


class SidonPrefix:
    """Strictly increasing Sidon terms plus their difference set.

    Appends validate admissibility; from the caller's view a prefix only
    ever grows, and :meth:`clone` yields fully independent state for
    search rollouts.
    """

    __slots__ = ("terms", "diffs")

    def __init__(self, terms: Sequence[int] = (), diffs: DifferenceSet | None = None):
        self.terms: list[int] = list(terms)
        if diffs is None:
            diffs = DifferenceSet.from_terms(self.terms)
        self.diffs = diffs

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def last(self) -> int:
        return self.terms[-1]

    def clone(self) -> "SidonPrefix":
        return SidonPrefix(list(self.terms), self.diffs.copy())

    def is_admissible(self, x: int) -> bool:
        """True iff appending x keeps the prefix Sidon.

        Requires x greater than the last term.  It then suffices that no
        x - a_i is an existing difference: the remaining collision shape
        2x = a_i + a_j is impossible for x above every term (it would
        equate a positive and a negative difference), which the sum-view
        oracle confirms differentially in the test suite.
        """
        if self.terms and x <= self.last:
            raise SidonViolation(
                f"candidate {x} is not greater than the last term {self.last}",
                kind="not_increasing",
            )
        if x < 1:
            raise SidonViolation(f"candidate {x} is not positive", kind="nonpositive")
        diffs = self.diffs
        # Larger terms give smaller differences, which are denser; probe
        # them first so rejections exit early.
        for a in reversed(self.terms):
            if x - a in diffs:
                return False
        return True

    def conflict_triple(self, x: int) -> tuple[int, int, int]:
        """1-based (i, j, k) with a_i + a_j = a_k + x, for error reports."""
        t = self.terms
        index = {a: p for p, a in enumerate(t)}
        for c in range(len(t) - 1, -1, -1):
            d = x - t[c]
            if d in self.diffs:
                # find the pair realizing the difference d = t[b] - small;
                # then t[b] + t[c] = small + x
                for b in range(len(t)):
                    small = t[b] - d
                    if small in index:
                        i, j = sorted((b, c))
                        return (i + 1, j + 1, index[small] + 1)
        raise ValueError(f"{x} is admissible; no conflict to report")

    def append(self, x: int) -> "SidonPrefix":
        if not self.is_admissible(x):
            i, j, k = self.conflict_triple(x)
            t = self.terms
            raise SidonViolation(
                f"{x} collides: a_{i} + a_{j} = {t[i-1]} + {t[j-1]} = "
                f"{t[k-1]} + {x} = a_{k} + {x}",
                kind="inadmissible",
                indices=(i, j, k),
                position=len(t) + 1,
            )
        self.diffs.add_term_diffs(self.terms, x)
        self.terms.append(x)
        return self

    def next_greedy(self) -> int:
        """Smallest admissible value above the last term (exhaustive scan)."""
        if not self.terms:
            raise ValueError("prefix is empty")
        x = self.last + 1
        while not self.is_admissible(x):
            x += 1
        return x


@dataclass(frozen=True)
class SequenceRecipe:
    """Pinned positions over a greedy fill; positions are 1-based."""

    pins: Mapping[int, int]
    name: Optional[str] = None

    def __post_init__(self):
        if 1 not in self.pins:
            raise ValueError("a recipe must pin position 1")
        for pos, val in self.pins.items():
            if pos < 1 or val < 1:
                raise ValueError(f"invalid pin {pos} -> {val}")


RECIPES: dict[str, SequenceRecipe] = {
    "mian-chowla": SequenceRecipe({1: 1}, name="mian-chowla"),
    "zhang": SequenceRecipe({1: 1, 15: 229}, name="zhang"),
    "h": SequenceRecipe({1: 1, 15: 229, 27: 962}, name="h"),
}


def verify_sidon(terms: Sequence[int]) -> Verdict:
    """Brute-force check that all pairwise sums a_i + a_j (i <= j) are distinct.

    Independent of the difference-set machinery; this is the oracle the
    rest of the package is tested against.  O(n^2) time and memory.
    """
    n = len(terms)
    for p in range(n):
        if terms[p] < 1:
            return Verdict(False, "nonpositive", (p + 1,), terms[p])
        if p and terms[p] <= terms[p - 1]:
            return Verdict(False, "not_increasing", (p + 1,), terms[p])
    if n < 2:
        return Verdict(True)

    t = np.asarray(terms, dtype=np.int64)
    iu, ju = np.triu_indices(n)
    sums = t[iu] + t[ju]
    order = np.argsort(sums, kind="stable")
    s_sorted = sums[order]
    dup = np.nonzero(s_sorted[1:] == s_sorted[:-1])[0]
    if dup.size == 0:
        return Verdict(True)
    first = dup[0]
    p1, p2 = order[first], order[first + 1]
    i, j = int(iu[p1]) + 1, int(ju[p1]) + 1
    k, l = int(iu[p2]) + 1, int(ju[p2]) + 1
    return Verdict(False, "sum_collision", (i, j, k, l), int(s_sorted[first]))


def rebuild(terms: Sequence[int]) -> SidonPrefix:
    """Reconstruct a prefix (with its difference set) from stored terms."""
    verdict = verify_sidon(terms)
    if not verdict:
        raise SidonViolation(verdict.describe(), kind=verdict.kind or "invalid",
                             indices=verdict.indices)
    return SidonPrefix(terms)


def generate(recipe: SequenceRecipe, n: int, seed: Sequence[int] | None = None,
             stats: dict | None = None) -> list[int]:
    """First n terms of the recipe: pinned values where given, greedy elsewhere.

    ``seed`` resumes from an already generated prefix; pins at positions the
    seed covers must match it.  Deterministic for fixed inputs.  When a
    dict is passed as ``stats`` it receives engine counters
    (candidates_scanned, diff_count).
    """
    from . import fast  # deferred: numba compilation is heavy

    if n < 1:
        raise ValueError("n must be >= 1")
    if stats is not None:
        stats.update(candidates_scanned=0, diff_count=n * (n - 1) // 2)
    seed = list(seed) if seed else []
    if len(seed) >= n:
        return seed[:n]
    for pos, val in recipe.pins.items():
        if pos <= len(seed) and seed[pos - 1] != val:
            raise SidonViolation(
                f"seed term {seed[pos-1]} at position {pos} contradicts pin {val}",
                kind="pin_mismatch", position=pos)
    pins = {p: v for p, v in recipe.pins.items() if p > len(seed)}
    if not seed:
        first = pins.pop(1)
        seed = [first]
        if n == 1:
            return seed
    terms, status, fail_pos, scanned = fast.extend(seed, pins, n_target=n)
    if stats is not None:
        stats["candidates_scanned"] = scanned
    if status == fast.OK:
        return [int(t) for t in terms]
    # Replay the failing pin through the slow path for a precise report.
    prefix = SidonPrefix(list(terms))
    bad = pins[fail_pos]
    if status == fast.PIN_NOT_INCREASING:
        raise SidonViolation(
            f"pin {bad} at position {fail_pos} is not greater than "
            f"the previous term {prefix.last}",
            kind="not_increasing", position=fail_pos)
    i, j, k = prefix.conflict_triple(bad)
    t = prefix.terms
    raise SidonViolation(
        f"pin {bad} at position {fail_pos} collides: "
        f"a_{i} + a_{j} = {t[i-1]} + {t[j-1]} = {t[k-1]} + {bad} = a_{k} + {bad}",
        kind="inadmissible", indices=(i, j, k), position=fail_pos)
