import random

import pytest

from sepath.circulant import PathFamily
from sepath.constructions.catalog import CATALOG
from sepath.verify import (
    FSplit,
    check_f_separator,
    check_generator,
    crossing_number,
    equally_spaced_types,
    lb_diagnostics,
    naive_unseparated,
    signatures,
    verify,
    verify_strong,
    verify_weak,
)

from . import oracles


def test_signatures_bits():
    fam = PathFamily(4, ((1, 2, 3), (2, 3, 4)))
    sig = signatures(fam)
    assert sig[(1, 2)] == 0b01
    assert sig[(2, 3)] == 0b11
    assert sig[(3, 4)] == 0b10
    assert sig[(1, 4)] == 0


def test_single_path_not_separating():
    rep = verify_weak(PathFamily(4, ((1, 2, 3, 4),)))
    assert not rep.separating
    assert rep.unseparated_pairs
    assert rep.unseparated_count == oracles.unseparated_pairs(4, [(1, 2, 3, 4)])


def test_uncovered_listed():
    rep = verify_weak(PathFamily(4, ((1, 2),)))
    assert rep.uncovered_count == 5
    assert (3, 4) in rep.uncovered_edges


def test_k3_two_paths():
    fam = PathFamily(3, ((1, 2, 3), (2, 3, 1)))
    assert verify_weak(fam).separating
    assert not verify_strong(fam).separating


def test_witness_cap_keeps_exact_count():
    fam = PathFamily(12, ((1, 2),))
    rep = verify_weak(fam, cap=5)
    assert len(rep.unseparated_pairs) == 5
    assert rep.unseparated_count == 65 * 64 // 2


def test_naive_agrees_on_small_random():
    rng = random.Random(3)
    for _ in range(30):
        n = rng.randint(3, 7)
        paths = []
        for _ in range(rng.randint(1, 6)):
            k = rng.randint(2, n)
            paths.append(tuple(rng.sample(range(1, n + 1), k)))
        fam = PathFamily(n, tuple(paths))
        a = verify_weak(fam)
        b = verify_weak(fam, naive=True)
        assert a.separating == b.separating
        assert a.unseparated_count == b.unseparated_count == len(naive_unseparated(fam))


def test_strong_matches_oracle():
    rng = random.Random(5)
    for _ in range(25):
        n = rng.randint(3, 6)
        paths = [tuple(rng.sample(range(1, n + 1), rng.randint(2, n))) for _ in range(rng.randint(2, 9))]
        fam = PathFamily(n, tuple(paths))
        assert verify_strong(fam).separating == oracles.strongly_separating(n, paths)


def test_strong_cap():
    fam = PathFamily(101, ((1, 2),))
    with pytest.raises(ValueError):
        verify_strong(fam)
    with pytest.raises(ValueError):
        verify(fam, "bogus")


@pytest.mark.parametrize("n", [12, 15])
def test_strong_generators(n):
    fam = PathFamily.from_rotations(n, CATALOG[n])
    assert verify_strong(fam).separating
    assert oracles.strongly_separating(n, fam.paths)


def test_generator_check_catalog_and_oracle():
    for n, p in CATALOG.items():
        assert check_generator(n, p).is_generator
        assert oracles.is_generator(n, p)


def test_generator_check_failures():
    # type 1 three times
    rep = check_generator(7, (1, 2, 3, 4))
    assert not rep.gp2 and rep.excess_types == [1]
    # missing types
    rep = check_generator(9, (1, 2))
    assert not rep.gp1 and rep.missing_types == [2, 3, 4]
    # 1-type edges at starts 1, 4 and 2-type edges at starts 2, 5: both offset 3
    rep = check_generator(7, (1, 2, 4, 5, 7))
    assert rep.gp2 and not rep.gp3
    assert rep.distance_clashes == [(1, 2, 3)]
    assert not oracles.is_generator(7, (1, 2, 4, 5, 7))


def test_even_antipodal_rule():
    # two 1-type edges at offset n/2 = 3 in K_6
    rep = check_generator(6, (1, 2, 5, 4))
    assert rep.antipodal_pairs


def test_f_separator_check():
    p = CATALOG[11]
    # type 3 is the lone single edge of P(11)
    assert check_f_separator(11, p, FSplit.from_F(11, {1, 2, 4, 5})).ok
    rep = check_f_separator(11, p, FSplit.from_F(11, {2, 3, 4, 5}))
    assert not rep.doubled and rep.wrong_count_types == [(3, 1)]
    bad = check_f_separator(11, (1, 2, 3), FSplit.from_F(11, {1}))
    assert not bad.cover
    with pytest.raises(ValueError):
        FSplit(frozenset({1}), frozenset({1, 2})).validate(5)


def test_equally_spaced():
    # 1-type edges starting at 1 and 4 on K_6 are n/2 apart
    assert 1 in equally_spaced_types(6, (1, 2, 5, 4))
    assert equally_spaced_types(11, CATALOG[11]) == set()
    # three 2-type edges at starts 1, 4, 7 on K_9
    assert 2 in equally_spaced_types(9, [(1, 3), (4, 6), (7, 9)])


def test_crossing_number():
    assert crossing_number(35, 1, 34) == 0
    assert crossing_number(35, 5, 33) == 3
    assert crossing_number(35, 1, 3) == 4
    with pytest.raises(ValueError):
        crossing_number(8, 1, 2)


def test_lb_diagnostics():
    fam = PathFamily.from_rotations(5, CATALOG[5])
    d = lb_diagnostics(fam)
    assert d.uncovered == 0
    assert sum(d.multiplicity_histogram.values()) == 10
    assert d.to_dict()["family_size"] == 5
