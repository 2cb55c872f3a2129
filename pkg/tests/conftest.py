import itertools
from collections import Counter

import pytest


def cycle_lengths(perm):
    """Cycle lengths of a permutation given as a tuple image list."""
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length, i = 0, start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        lengths.append(length)
    return lengths


def permutation_histograms(n):
    """(cycle-count histogram, cycle-type histogram) over all of S_n."""
    counts, types = Counter(), Counter()
    for perm in itertools.permutations(range(n)):
        lengths = cycle_lengths(perm)
        counts[len(lengths)] += 1
        types[tuple(sorted(lengths, reverse=True))] += 1
    return counts, types


@pytest.fixture(scope="session")
def histograms():
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = permutation_histograms(n)
        return cache[n]

    return get


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
