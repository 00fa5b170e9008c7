"""Tiny independent oracles used to freeze expected values.

Deliberately naive: everything here is O(n^2) or worse and shares no
code with the package internals.
"""


def sums_distinct(terms) -> bool:
    sums = [terms[i] + terms[j]
            for i in range(len(terms)) for j in range(i, len(terms))]
    return len(sums) == len(set(sums))


def brute_admissible(terms, x) -> bool:
    return sums_distinct(list(terms) + [x])


def brute_greedy(n):
    terms = [1]
    while len(terms) < n:
        x = terms[-1] + 1
        while not brute_admissible(terms, x):
            x += 1
        terms.append(x)
    return terms


def brute_diffs(terms):
    return {terms[j] - terms[i]
            for j in range(len(terms)) for i in range(j)}
