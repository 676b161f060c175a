import math

import pytest
import sympy

from sepath.circulant import edge_type, path_edges
from sepath.constructions.best import (
    NotApplicable,
    build_trivial,
    construct,
    construct_best,
    upper_bound,
)
from sepath.constructions.catalog import CATALOG, catalog_generator
from sepath.constructions.fixing import fixing_paths
from sepath.constructions.primes import (
    is_prime,
    multiplicative_order,
    partial_sums,
    prime_generator,
    prime_plus_one,
    smallest_primitive_root,
    unique_one_type_edge,
)
from sepath.verify import check_generator, verify_weak

from . import oracles

PRIMES = [p for p in range(3, 200) if sympy.isprime(p)]


def test_catalog_verbatim():
    assert catalog_generator(5) == (1, 3, 2, 5)
    assert catalog_generator(11) == (1, 3, 5, 10, 4, 11, 7, 8, 9, 6)
    assert catalog_generator(20) == (1, 5, 10, 15, 18, 8, 17, 6, 20, 14, 7, 19, 2, 4, 16, 9, 13, 12, 11)
    with pytest.raises(ValueError):
        catalog_generator(21)
    with pytest.raises(ValueError):
        catalog_generator(1)


@pytest.mark.parametrize("n", sorted(CATALOG))
def test_catalog_rotations_separate(n):
    p = CATALOG[n]
    assert oracles.is_generator(n, p)
    assert oracles.weakly_separating(n, [oracles.rotate(n, p, i) for i in range(n)])


def test_is_prime_matches_sympy():
    assert [k for k in range(300) if is_prime(k)] == [k for k in range(300) if sympy.isprime(k)]


@pytest.mark.parametrize("p", PRIMES)
def test_primitive_root_oracle(p):
    g = smallest_primitive_root(p)
    assert g == oracles.primitive_root(p)
    assert multiplicative_order(g, p) == p - 1


def test_primitive_root_examples():
    assert smallest_primitive_root(3) == 2
    assert smallest_primitive_root(5) == 2
    assert smallest_primitive_root(7) == 3
    with pytest.raises(ValueError):
        smallest_primitive_root(9)
    with pytest.raises(ValueError):
        smallest_primitive_root(2)


def test_prime_generator_examples():
    assert prime_generator(7) == (7, 3, 5, 4, 1, 6)
    assert prime_generator(5) == (5, 2, 1, 4)
    assert prime_generator(3) == (3, 2)
    assert partial_sums(7, 3) == [0, 3, 5, 4, 1, 6]
    with pytest.raises(ValueError):
        prime_generator(15)


@pytest.mark.parametrize("p", PRIMES)
def test_prime_generator_structure(p):
    path = prime_generator(p)
    assert len(path) == p - 1
    types = [edge_type(p, a, b) for a, b in zip(path, path[1:])]
    counts = {x: types.count(x) for x in set(types)}
    assert counts[1] == 1
    assert types.index(1) == (p - 1) // 2 - 1  # the kth edge, k = (p-1)/2
    assert all(c == 2 for x, c in counts.items() if x != 1)
    assert oracles.is_generator(p, path)
    k = (p - 1) // 2
    assert unique_one_type_edge(p) == tuple(sorted(path[k - 1:k + 1]))


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_prime_plus_one_oracle(p):
    fam = prime_plus_one(p)
    assert fam.n == p + 1 and len(fam) == p + 1
    assert oracles.weakly_separating(p + 1, fam.paths)


def test_prime_plus_one_p5_last_path():
    fam = prime_plus_one(5)
    # the 1-type cycle minus h = (2, 1)
    last = fam.paths[-1]
    assert len(last) == 5
    assert {frozenset(e) for e in path_edges(last)} == {frozenset(e) for e in
                                                      [(2, 3), (3, 4), (4, 5), (5, 1)]}


def test_fixing_examples():
    assert fixing_paths(6, 2) == ((1, 3, 5, 6, 2, 4), (1, 5, 6, 4))
    assert fixing_paths(5, 1) == ((1, 2, 3, 4, 5), (1, 5))
    q, q2 = fixing_paths(6, 3)
    assert q == q2
    with pytest.raises(ValueError):
        fixing_paths(6, 4)


@pytest.mark.parametrize("n", range(3, 61))
def test_fixing_coverage(n):
    for x in range(1, n // 2 + 1):
        q, q2 = fixing_paths(n, x)
        assert oracles.is_path(n, q) and oracles.is_path(n, q2)
        edges = oracles.edges_of(q) + oracles.edges_of(q2)
        assert {oracles.etype(n, *tuple(e)) for e in edges} <= {1, x}
        want = {e for e in oracles.all_edges(n) if oracles.etype(n, *tuple(e)) == x}
        assert want <= set(edges)


@pytest.mark.parametrize("n,method", [(13, "catalog"), (29, "prime"), (30, "prime_plus_one")])
def test_construct_best_examples(n, method):
    fam, prov = construct_best(n)
    assert prov.method == method
    assert len(fam) == prov.size == n


def test_construct_best_gap_uses_main():
    fam, prov = construct_best(21)
    assert prov.method.startswith("main_theorem_case_")
    assert verify_weak(fam).separating
    assert prov.size == len(fam)


def test_construct_inapplicable():
    with pytest.raises(NotApplicable):
        construct(9, "prime")
    with pytest.raises(NotApplicable):
        construct(21, "catalog")
    with pytest.raises(ValueError):
        construct(9, "nope")


def test_trivial_family():
    fam, prov = build_trivial(6)
    assert len(fam) == prov.size == 14
    assert verify_weak(fam).separating
    assert prov.bound_claimed == 14


def test_search_method():
    fam, prov = construct(9, "search")
    assert prov.method == "search" and len(fam) == 9
    assert check_generator(9, fam.paths[0]).is_generator


def test_upper_bound_column():
    assert upper_bound(13) == 13
    assert upper_bound(45) == math.ceil((21 * 45 + 16 * math.log2(45) + 232) / 16)
    assert upper_bound(21) == 209
