import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sidon import (
    RECIPES,
    ReciprocalSumInterval,
    bound_interval,
    generate,
    levine_bound,
    partial_sum,
    quad_tail,
    switch_index,
    tail_upper,
)
from sidon.bounds import format_lower, format_upper


class TestPartialSum:
    def test_exact_dyadic(self):
        iv = partial_sum([1, 2, 4])
        assert iv.lower <= 1.75 <= iv.upper
        assert iv.width <= 1e-12

    def test_single_term(self):
        iv = partial_sum([1])
        assert iv.lower <= 1.0 <= iv.upper

    def test_width_budget_large(self):
        terms = generate(RECIPES["mian-chowla"], 2000)
        assert partial_sum(terms).width <= 1e-12

    def test_rejects_bad_terms(self):
        for bad in ([], [0, 1], [2, 2], [3, 1]):
            with pytest.raises(ValueError):
                partial_sum(bad)

    def test_order_robustness(self):
        terms = generate(RECIPES["zhang"], 500)
        fwd = partial_sum(terms)
        rev = math.fsum(1.0 / t for t in reversed(terms))
        assert fwd.lower <= rev <= fwd.upper

    @given(st.lists(st.integers(1, 10 ** 6), min_size=1, max_size=40, unique=True))
    @settings(max_examples=80, deadline=None)
    def test_brackets_fraction_sum(self, values):
        from fractions import Fraction

        terms = sorted(values)
        exact = sum(Fraction(1, t) for t in terms)
        iv = partial_sum(terms)
        assert Fraction(iv.lower) <= exact <= Fraction(iv.upper)


class TestSwitchIndex:
    @pytest.mark.parametrize("k,a_k,expected", [
        # hand-enumerated with the strict inequality n(n-1)/2 > a_k + n - k
        (1, 1, 4),
        (1, 2, 4),
        (2, 3, 4),
        (3, 7, 5),
    ])
    def test_hand_cases(self, k, a_k, expected):
        assert switch_index(k, a_k) == expected

    def test_exact_threshold(self):
        # brute-force agreement over a range of magnitudes
        for a_k in (10, 97, 1024, 10 ** 6 + 7, 10 ** 10 + 3):
            k = 2
            n = switch_index(k, a_k)
            assert n * (n - 1) // 2 > a_k + n - k
            assert not ((n - 1) * (n - 2) // 2 > a_k + n - 1 - k) or n - 1 == k

    def test_requires_sidon_floor(self):
        with pytest.raises(ValueError):
            switch_index(10, 45)  # 45 = 10*9/2 violates a_k > k(k-1)/2


class TestTailUpper:
    def test_quad_tail_telescopes(self):
        # sum_{n>=N} 2/(n(n-1)) == 2/(N-1), checked by direct summation
        # to a cutoff plus the exact remainder 2/(cutoff).
        for n_start in (10, 1000, 510097):
            cutoff = n_start + 200000
            direct = math.fsum(2.0 / (n * (n - 1)) for n in range(n_start, cutoff + 1))
            remainder = 2.0 / cutoff
            assert quad_tail(n_start) == pytest.approx(direct + remainder, abs=1e-12)

    def test_tail_monotone_along_sequence(self):
        # tail_upper(k+1) + 1/a_{k+1} <= tail_upper(k) (up to rounding slack)
        terms = generate(RECIPES["mian-chowla"], 400)
        for k in range(50, 400, 50):
            t_k = tail_upper(k, terms[k - 1])
            t_k1 = tail_upper(k + 1, terms[k])
            assert t_k1 + 1.0 / terms[k] <= t_k + 1e-12

    def test_tail_dominates_true_continuation(self):
        # the bound must cover the actual reciprocal sum of the next terms
        terms = generate(RECIPES["zhang"], 1000)
        k = 100
        actual_rest = math.fsum(1.0 / t for t in terms[k:])
        assert actual_rest < tail_upper(k, terms[k - 1])


class TestBoundInterval:
    def test_contains_published_interval_at_desk_scale(self):
        published = {
            "mian-chowla": (2.15845268, 2.15846062),
            "zhang": (2.16007769, 2.16008532),
            "h": (2.16027651, 2.16028417),
        }
        for name, (lo, up) in published.items():
            iv = bound_interval(generate(RECIPES[name], 1000))
            assert iv.lower < lo and up < iv.upper

    def test_nesting(self):
        terms = generate(RECIPES["h"], 2000)
        outer = bound_interval(terms[:200])
        inner = bound_interval(terms)
        assert outer.contains(inner)

    def test_degenerate_rejected(self):
        with pytest.raises(ValueError):
            ReciprocalSumInterval(2.0, 2.0, 1)


class TestLevine:
    def test_closed_form_value(self):
        lb = levine_bound()
        assert 2.37365 < lb.closed_form < 2.37366

    def test_series_brackets_closed_form(self):
        lb = levine_bound()
        assert lb.series_lower < lb.closed_form < lb.series_upper
        assert lb.series_upper - lb.series_lower < 1e-9

    def test_first_series_term_is_one(self):
        assert 1.0 / (1 + 0 * 1 // 2) == 1.0

    def test_agreement(self):
        lb = levine_bound()
        assert abs(lb.series_value - lb.closed_form) < 1e-9


class TestFormatting:
    def test_directed_rounding(self):
        assert format_lower(2.158452689, 8) == "2.15845268"
        assert format_upper(2.158460611, 8) == "2.15846062"

    def test_roundtrip_brackets_value(self):
        x = 2.16027651234
        assert float(format_lower(x)) <= x <= float(format_upper(x))

    def test_exact_value_unchanged(self):
        assert format_lower(1.75, 8) == "1.75000000"
        assert format_upper(1.75, 8) == "1.75000000"
