"""Property-based checks of invariants that should hold for any input."""

from hypothesis import given, settings
from hypothesis import strategies as st

from sepath.circulant import (
    PathFamily,
    decompose_linear_forest,
    edge_index,
    edge_type,
    index_edge,
    num_edges,
    rotate,
)
from sepath.constructions.fixing import fixing_paths
from sepath.io import FamilyFile
from sepath.verify import check_generator, signature_list, verify_strong, verify_weak

from . import oracles


@st.composite
def paths(draw, n):
    k = draw(st.integers(2, n))
    return tuple(draw(st.permutations(range(1, n + 1)))[:k])


@st.composite
def families(draw, max_n=9, max_paths=7):
    n = draw(st.integers(3, max_n))
    ps = draw(st.lists(paths(n), min_size=1, max_size=max_paths))
    return PathFamily(n, tuple(ps))


@given(st.integers(2, 60).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n), st.integers(1, n))))
def test_edge_type_range_and_symmetry(args):
    n, u, v = args
    if u == v:
        return
    x = edge_type(n, u, v)
    assert 1 <= x <= n // 2
    assert x == edge_type(n, v, u) == oracles.etype(n, u, v)


@given(st.integers(2, 40).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, num_edges(n) - 1))))
def test_edge_index_bijection(args):
    n, i = args
    assert edge_index(n, *index_edge(n, i)) == i


@given(families(), st.integers(0, 30))
def test_rotation_invariance(fam, i):
    # rotating every path permutes edges but keeps the multiset of signatures
    rot = fam.rotated(i)
    assert sorted(signature_list(fam)) == sorted(signature_list(rot))
    assert verify_weak(fam).separating == verify_weak(rot).separating


@given(families())
def test_generator_check_rotation_invariant(fam):
    p = fam.paths[0]
    base = check_generator(fam.n, p).is_generator
    assert base == oracles.is_generator(fam.n, p)
    assert check_generator(fam.n, rotate(fam.n, p, 3)).is_generator == base


@settings(max_examples=60)
@given(families(max_n=8))
def test_weak_matches_oracle(fam):
    rep = verify_weak(fam)
    assert rep.unseparated_count == oracles.unseparated_pairs(fam.n, fam.paths)
    assert rep.separating == (rep.unseparated_count == 0)


@settings(max_examples=40)
@given(families(max_n=6, max_paths=9))
def test_strong_matches_oracle(fam):
    assert verify_strong(fam).separating == oracles.strongly_separating(fam.n, fam.paths)


@given(families())
def test_strong_implies_weak(fam):
    if verify_strong(fam).separating:
        assert verify_weak(fam).separating


@given(families(), st.data())
def test_adding_paths_keeps_separation(fam, data):
    extra = data.draw(paths(fam.n))
    if verify_weak(fam).separating:
        assert verify_weak(PathFamily(fam.n, fam.paths + (extra,))).separating


@given(families())
def test_family_file_roundtrip(fam):
    text = FamilyFile(fam, {"method": "search", "size": len(fam)}).dumps()
    assert FamilyFile.loads(text).dumps() == text


@given(st.integers(3, 40).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n // 2))))
def test_fixing_paths_cover(args):
    n, x = args
    q, q2 = fixing_paths(n, x)
    edges = set(oracles.edges_of(q)) | set(oracles.edges_of(q2))
    assert all(oracles.etype(n, *tuple(e)) in (1, x) for e in edges)
    assert sum(1 for e in edges if oracles.etype(n, *tuple(e)) == x) == (n if 2 * x != n else n // 2)


@given(families())
def test_decompose_paths_of_a_path(fam):
    p = fam.paths[0]
    out = decompose_linear_forest(list(zip(p, p[1:])))
    assert len(out) == 1
    assert set(out[0]) == set(p)
