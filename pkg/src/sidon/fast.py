"""Compiled greedy-extension kernel.

Generating tens of thousands of terms means scanning every integer up to
~1.3e11 as a candidate, so the hot loop is numba-compiled.  Differences
are held in a hybrid store:

  * a packed bitset for differences below ``BITSET_CAP`` (small
    differences are nearly saturated, so the descending-term probe order
    almost always resolves a candidate in O(1) bitset hits);
  * a sorted int64 array plus a small sorted pending buffer for the
    large differences, queried by binary search and compacted by in-place
    backward merges; a coarse presence bitset (one bit per 2**_COARSE_SHIFT
    consecutive difference values) screens those binary searches, so a
    probe into the multi-gigabyte sorted store usually costs one memory
    access instead of a full search.

At 25 000 terms this stays near 2.5 GB where a flat bitset over the full
difference range would need 16 GB.
"""

from __future__ import annotations

from typing import Mapping, Sequence

import numpy as np
from numba import njit

__all__ = ["extend", "OK", "PIN_NOT_INCREASING", "PIN_INADMISSIBLE", "BITSET_CAP"]

OK = 0
PIN_NOT_INCREASING = 1
PIN_INADMISSIBLE = 2

BITSET_CAP = 1 << 33  # differences below this live in the packed bitset
_PEND_MAX = 1 << 20
# Word-sieve depth: sieving against the most recent terms rejects ~99% of
# candidates via sequential word reads; beyond this depth the bitset is
# too sparse for OR-ing to pay and survivors probe term by term.
_WINDOW_DEPTH = 320
_COARSE_SHIFT = 5  # granularity of the presence filter over large differences


@njit(cache=True, inline="always")
def _bit_get(bits, d):
    return (bits[d >> 6] >> np.uint64(d & 63)) & np.uint64(1)


@njit(cache=True, inline="always")
def _bit_set(bits, d):
    bits[d >> 6] |= np.uint64(1) << np.uint64(d & 63)


@njit(cache=True)
def _sorted_contains(arr, n, v):
    lo, hi = 0, n
    while lo < hi:
        mid = (lo + hi) >> 1
        if arr[mid] < v:
            lo = mid + 1
        else:
            hi = mid
    return lo < n and arr[lo] == v


@njit(cache=True)
def _merge_backward(dst, m, src, p):
    """Merge sorted src[:p] into sorted dst[:m] in place; dst holds m+p after."""
    w = m + p - 1
    i = m - 1
    j = p - 1
    while j >= 0:
        if i >= 0 and dst[i] > src[j]:
            dst[w] = dst[i]
            i -= 1
        else:
            dst[w] = src[j]
            j -= 1
        w -= 1
    return m + p


@njit(cache=True)
def _extend_kernel(seed, pins_pos, pins_val, n_target, value_cap, bitset_cap,
                   window_depth):
    """Greedy-with-pins extension.

    Returns (terms, n_final, status, fail_pos).  In value-cap mode the
    run stops before the first greedy term that would exceed value_cap.
    """
    terms = np.empty(n_target, dtype=np.int64)
    n = seed.shape[0]
    terms[:n] = seed

    last = terms[n - 1]
    cover_target = min(last, bitset_cap - 1)
    words0 = 1024
    while (words0 << 6) <= cover_target:
        words0 <<= 1
    bits = np.zeros(words0, dtype=np.uint64)
    bits_range = words0 << 6  # probes at or beyond this are vacuously absent

    # Allocate hi for the worst case up front (pages commit lazily); this
    # avoids reallocation copies of a multi-gigabyte array mid-run.
    hi = np.empty(n_target * (n_target - 1) // 2 + 64, dtype=np.int64)
    m = 0
    pend = np.empty(_PEND_MAX + n_target, dtype=np.int64)
    p = 0
    new_hi = np.empty(n_target, dtype=np.int64)
    fb = np.empty(8, dtype=np.uint64)  # forbidden-candidate tile (512 bits)
    coarse = np.zeros(1 << 16, dtype=np.uint64)
    coarse_range = coarse.shape[0] << 6

    # Seed the stores with the existing pairwise differences.
    for j in range(n):
        cnt = 0
        x = terms[j]
        for i in range(j - 1, -1, -1):
            d = x - terms[i]
            if d < bitset_cap:
                _bit_set(bits, d)
            else:
                ci = d >> _COARSE_SHIFT
                if ci >= coarse_range:
                    cw = coarse.shape[0]
                    while (cw << 6) <= ci:
                        cw <<= 1
                    grown_coarse = np.zeros(cw, dtype=np.uint64)
                    grown_coarse[: coarse.shape[0]] = coarse
                    coarse = grown_coarse
                    coarse_range = cw << 6
                _bit_set(coarse, ci)
                new_hi[cnt] = d
                cnt += 1
        if cnt > 0:
            if p + cnt > _PEND_MAX:
                if m + p > hi.shape[0]:
                    cap = hi.shape[0]
                    while cap < m + p:
                        cap <<= 1
                    grown = np.empty(cap, dtype=np.int64)
                    grown[:m] = hi[:m]
                    hi = grown
                m = _merge_backward(hi, m, pend, p)
                p = 0
            p = _merge_backward(pend, p, new_hi, cnt)

    pin_idx = 0
    while pin_idx < pins_pos.shape[0] and pins_pos[pin_idx] <= n:
        pin_idx += 1

    status = OK
    fail_pos = -1
    scanned = 0

    while n < n_target:
        pos = n + 1
        pinned = pin_idx < pins_pos.shape[0] and pins_pos[pin_idx] == pos
        if pinned:
            x = pins_val[pin_idx]
            if x <= last:
                status = PIN_NOT_INCREASING
                fail_pos = pos
                break
            scanned += 1
            ok = True
            for i in range(n - 1, -1, -1):
                d = x - terms[i]
                if d < bitset_cap:
                    if d < bits_range and _bit_get(bits, d):
                        ok = False
                        break
                else:
                    ci = d >> _COARSE_SHIFT
                    if ci < coarse_range and _bit_get(coarse, ci):
                        if _sorted_contains(hi, m, d) or _sorted_contains(pend, p, d):
                            ok = False
                            break
            if not ok:
                status = PIN_INADMISSIBLE
                fail_pos = pos
                break
            pin_idx += 1
        else:
            # Tiled word sieve: for one term, the differences of 512
            # consecutive candidates occupy 8 contiguous bitset words
            # (9 reads when misaligned), fetched sequentially in one pass.
            # OR-ing these tiles over the most recent terms (densest,
            # smallest differences) marks every candidate in the tile that
            # collides on a recent difference; survivors are finished per
            # candidate against the full store.
            full = np.uint64(0xFFFFFFFFFFFFFFFF)
            base = last + 1
            x = np.int64(-1)
            nw = bits.shape[0]
            while x < 0:
                if value_cap > 0 and base > value_cap:
                    scanned += base - last - 1
                    return terms, n, status, fail_pos, scanned
                for w in range(8):
                    fb[w] = np.uint64(0)
                i = n - 1
                i_min = n - window_depth if n >= window_depth else 0
                while i >= i_min:
                    off = base - terms[i]
                    if off + 511 >= bitset_cap:
                        break  # tile reaches the high store
                    i0 = off >> 6
                    r = np.uint64(off & 63)
                    if r == np.uint64(0):
                        if i0 + 8 <= nw:
                            for w in range(8):
                                fb[w] |= bits[i0 + w]
                        else:
                            for w in range(8):
                                if i0 + w < nw:
                                    fb[w] |= bits[i0 + w]
                    else:
                        rl = np.uint64(64) - r
                        if i0 + 9 <= nw:
                            prev_w = bits[i0]
                            for w in range(8):
                                cur_w = bits[i0 + 1 + w]
                                fb[w] |= (prev_w >> r) | (cur_w << rl)
                                prev_w = cur_w
                        else:
                            prev_w = bits[i0] if i0 < nw else np.uint64(0)
                            for w in range(8):
                                if i0 + 1 + w < nw:
                                    cur_w = bits[i0 + 1 + w]
                                else:
                                    cur_w = np.uint64(0)
                                fb[w] |= (prev_w >> r) | (cur_w << rl)
                                prev_w = cur_w
                    sat = fb[0]
                    for w in range(1, 8):
                        sat &= fb[w]
                    if sat == full:
                        break
                    i -= 1
                i_stop = i
                for w in range(8):
                    forbid = fb[w]
                    if forbid == full:
                        continue
                    allowed = ~forbid
                    while allowed != np.uint64(0):
                        b = 0
                        while (allowed >> np.uint64(b)) & np.uint64(1) == np.uint64(0):
                            b += 1
                        cand = base + (w << 6) + b
                        if value_cap > 0 and cand > value_cap:
                            scanned += cand - last - 1
                            return terms, n, status, fail_pos, scanned
                        ok = True
                        for ii in range(i_stop, -1, -1):
                            d = cand - terms[ii]
                            if d < bitset_cap:
                                if d < bits_range and _bit_get(bits, d):
                                    ok = False
                                    break
                            else:
                                ci = d >> _COARSE_SHIFT
                                if ci < coarse_range and _bit_get(coarse, ci):
                                    if _sorted_contains(hi, m, d) or _sorted_contains(
                                            pend, p, d):
                                        ok = False
                                        break
                        if ok:
                            x = cand
                            break
                        allowed &= allowed - np.uint64(1)
                    if x >= 0:
                        break
                base += 512
            scanned += x - last

        # Append x: record the new differences x - a_i (ascending for
        # descending i, so new_hi comes out sorted).
        max_d = x - terms[0]
        if max_d < bitset_cap:
            need_words = (max_d >> 6) + 1
            if need_words > bits.shape[0]:
                wcap = bits.shape[0]
                while wcap < need_words:
                    wcap <<= 1
                grown_bits = np.zeros(wcap, dtype=np.uint64)
                grown_bits[: bits.shape[0]] = bits
                bits = grown_bits
                bits_range = wcap << 6
        cnt = 0
        for i in range(n - 1, -1, -1):
            d = x - terms[i]
            if d < bitset_cap:
                _bit_set(bits, d)
            else:
                ci = d >> _COARSE_SHIFT
                if ci >= coarse_range:
                    cw = coarse.shape[0]
                    while (cw << 6) <= ci:
                        cw <<= 1
                    grown_coarse = np.zeros(cw, dtype=np.uint64)
                    grown_coarse[: coarse.shape[0]] = coarse
                    coarse = grown_coarse
                    coarse_range = cw << 6
                _bit_set(coarse, ci)
                new_hi[cnt] = d
                cnt += 1
        if cnt > 0:
            if p + cnt > _PEND_MAX:
                if m + p > hi.shape[0]:
                    cap = hi.shape[0]
                    while cap < m + p:
                        cap <<= 1
                    grown = np.empty(cap, dtype=np.int64)
                    grown[:m] = hi[:m]
                    hi = grown
                m = _merge_backward(hi, m, pend, p)
                p = 0
            p = _merge_backward(pend, p, new_hi, cnt)
        terms[n] = x
        n += 1
        last = x

    return terms, n, status, fail_pos, scanned


def _max_terms_for_cap(value_cap: int) -> int:
    # a_n > n(n-1)/2, so terms <= value_cap number fewer than this
    return int((2 * value_cap) ** 0.5) + 2


def extend(
    seed: Sequence[int],
    pins: Mapping[int, int] | None = None,
    n_target: int | None = None,
    value_cap: int | None = None,
    bitset_cap: int = BITSET_CAP,
    _window_depth: int = _WINDOW_DEPTH,
):
    """Extend a Sidon prefix greedily, honoring pinned positions.

    Exactly one of ``n_target`` (stop at that many terms) or ``value_cap``
    (stop before the first greedy term exceeding the cap) sets the horizon.
    Returns (terms ndarray, status, fail_pos, candidates_scanned).
    """
    if (n_target is None) == (value_cap is None):
        raise ValueError("specify exactly one of n_target or value_cap")
    seed_arr = np.asarray(list(seed), dtype=np.int64)
    if seed_arr.size == 0:
        raise ValueError("seed must be nonempty")
    pins = dict(pins or {})
    if value_cap is not None:
        if pins:
            raise ValueError("pins are not supported in value-cap mode")
        n_target = max(len(seed_arr), _max_terms_for_cap(value_cap))
        cap = value_cap
    else:
        cap = 0
    positions = np.asarray(sorted(pins), dtype=np.int64)
    values = np.asarray([pins[int(p)] for p in positions], dtype=np.int64)
    terms, n, status, fail_pos, scanned = _extend_kernel(
        seed_arr, positions, values, n_target, cap, bitset_cap, _window_depth
    )
    return terms[:n], status, fail_pos, scanned
