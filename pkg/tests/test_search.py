import math

import pytest

from sepath.circulant import PathFamily
from sepath.search import (
    BUDGET_EXCEEDED,
    FOUND,
    BudgetExceeded,
    SearchBudget,
    all_paths_up_to_reversal,
    exact_lower_bound,
    exact_min_sps,
    search_generator,
)

from . import oracles


@pytest.mark.parametrize("n", range(3, 19))
def test_generator_search_finds(n):
    res = search_generator(n)
    assert res.outcome == FOUND
    assert res.path[0] == 1
    assert oracles.is_generator(n, res.path)
    assert oracles.weakly_separating(n, [oracles.rotate(n, res.path, i) for i in range(n)])


def test_generator_search_first_step_clockwise():
    res = search_generator(11)
    assert 1 <= res.path[1] - 1 <= 11 // 2


def test_generator_search_budget():
    res = search_generator(7, SearchBudget(max_nodes=1))
    assert res.outcome == BUDGET_EXCEEDED
    assert res.path is None


def test_generator_search_deterministic():
    a = search_generator(14)
    b = search_generator(14)
    assert a.path == b.path and a.nodes == b.nodes


def test_generator_search_rejects_small():
    with pytest.raises(ValueError):
        search_generator(2)


def test_path_enumeration_counts():
    # ordered paths on k vertices: n!/(n-k)!, halved for reversal
    for n in range(2, 6):
        want = sum(math.perm(n, k) // 2 for k in range(2, n + 1))
        assert len(all_paths_up_to_reversal(n)) == want


@pytest.mark.parametrize("n,k", [(2, 0), (3, 2), (4, 3), (5, 4)])
def test_exact_minima(n, k):
    size, fam = exact_min_sps(n)
    assert size == k == len(fam)
    assert size >= exact_lower_bound(n)
    if n >= 3:
        assert size >= n - 1
        assert oracles.weakly_separating(n, fam.paths)


def test_exact_certifies_no_smaller():
    # independently: no family of n - 2 paths separates K_4
    import itertools
    paths = all_paths_up_to_reversal(4)
    for combo in itertools.combinations(paths, 2):
        assert not oracles.weakly_separating(4, combo)


def test_exact_rejects_large_and_budget():
    with pytest.raises(ValueError):
        exact_min_sps(6)
    with pytest.raises(BudgetExceeded):
        exact_min_sps(5, SearchBudget(max_nodes=10))


def test_exact_witness_is_family():
    _, fam = exact_min_sps(4)
    assert isinstance(fam, PathFamily)
