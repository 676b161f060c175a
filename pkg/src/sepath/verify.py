"""Certification of path families and single paths.

Each edge of K_n gets a signature: an int whose bit ``i`` is set iff the edge
lies on path ``i`` of the family.  A family is weakly separating iff the
signatures are pairwise distinct, and strongly separating iff they are
pairwise incomparable under inclusion.
"""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .circulant import (
    Edge,
    EdgeSet,
    PathFamily,
    TypedEdge,
    all_edges,
    cd_edges,
    edge_index,
    edge_type,
    index_edge,
    num_edges,
    path_edges,
    typed,
)

WITNESS_CAP = 32
STRONG_MAX_N = 100


def signature_list(family: PathFamily) -> list[int]:
    """Signatures indexed by canonical edge index."""
    n = family.n
    sigs = [0] * num_edges(n)
    for i, path in enumerate(family.paths):
        bit = 1 << i
        for u, v in path_edges(path):
            sigs[edge_index(n, u, v)] |= bit
    return sigs


def signatures(family: PathFamily) -> dict[Edge, int]:
    """Map every edge of K_n (covered or not) to its signature."""
    return dict(zip(all_edges(family.n), signature_list(family)))


def signature_bits(sig: int) -> list[int]:
    return [i for i in range(sig.bit_length()) if sig >> i & 1]


@dataclass
class SeparationReport:
    n: int
    mode: str
    family_size: int
    separating: bool
    unseparated_pairs: list[tuple[Edge, Edge]] = field(default_factory=list)
    unseparated_count: int = 0
    uncovered_edges: list[Edge] = field(default_factory=list)
    uncovered_count: int = 0

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "mode": self.mode,
            "family_size": self.family_size,
            "separating": self.separating,
            "unseparated_count": self.unseparated_count,
            "unseparated_pairs": [[list(a), list(b)] for a, b in self.unseparated_pairs],
            "uncovered_count": self.uncovered_count,
            "uncovered_edges": [list(e) for e in self.uncovered_edges],
        }


def _uncovered(n: int, sigs: list[int], cap: int) -> tuple[list[Edge], int]:
    idx = [i for i, s in enumerate(sigs) if s == 0]
    return [index_edge(n, i) for i in idx[:cap]], len(idx)


def naive_unseparated(family: PathFamily) -> list[tuple[Edge, Edge]]:
    """Pairwise oracle: every pair of edges no path tells apart."""
    edge_sets = [set(path_edges(p)) for p in family.paths]
    edges = list(all_edges(family.n))
    bad = []
    for e, f in itertools.combinations(edges, 2):
        if not any((e in s) != (f in s) for s in edge_sets):
            bad.append((e, f))
    return bad


def verify_weak(family: PathFamily, *, naive: bool = False,
                cap: int = WITNESS_CAP) -> SeparationReport:
    n = family.n
    sigs = signature_list(family)
    if naive:
        bad = naive_unseparated(family)
        pairs, count = bad[:cap], len(bad)
    else:
        groups: dict[int, list[int]] = defaultdict(list)
        for i, s in enumerate(sigs):
            groups[s].append(i)
        count = 0
        pairs = []
        for members in groups.values():
            k = len(members)
            if k < 2:
                continue
            count += k * (k - 1) // 2
            for a, b in itertools.combinations(members, 2):
                if len(pairs) >= cap:
                    break
                pairs.append((index_edge(n, a), index_edge(n, b)))
        pairs.sort()
    uncovered, ucount = _uncovered(n, sigs, cap)
    return SeparationReport(n, "weak", len(family), count == 0, pairs, count,
                            uncovered, ucount)


def _comparable_matrix(sigs: list[int], k: int) -> np.ndarray:
    """Boolean m x m matrix, entry (i, j) set iff sig_i is a subset of sig_j."""
    m = len(sigs)
    bits = np.zeros((m, max(k, 1)), dtype=np.float32)
    for i, s in enumerate(sigs):
        for b in signature_bits(s):
            bits[i, b] = 1.0
    outside = 1.0 - bits
    if k == 0:
        outside[:] = 0.0
    return (bits @ outside.T) == 0


def verify_strong(family: PathFamily, *, cap: int = WITNESS_CAP,
                  force: bool = False) -> SeparationReport:
    """Check pairwise inclusion-incomparability of signatures.

    Cost is quadratic in the number of edges, so n above ``STRONG_MAX_N``
    needs ``force=True``.
    """
    n = family.n
    if n > STRONG_MAX_N and not force:
        raise ValueError(f"strong verification capped at n <= {STRONG_MAX_N}; pass force=True")
    sigs = signature_list(family)
    sub = _comparable_matrix(sigs, len(family))
    either = np.triu(sub | sub.T, k=1)
    count = int(either.sum())
    rows, cols = np.nonzero(either)
    pairs = [(index_edge(n, int(a)), index_edge(n, int(b)))
             for a, b in zip(rows[:cap], cols[:cap])]
    uncovered, ucount = _uncovered(n, sigs, cap)
    return SeparationReport(n, "strong", len(family), count == 0, pairs, count,
                            uncovered, ucount)


def verify(family: PathFamily, mode: str = "weak") -> SeparationReport:
    if mode == "weak":
        return verify_weak(family)
    if mode == "strong":
        return verify_strong(family)
    raise ValueError(f"unknown mode {mode!r}")


# -- per-path conditions ----------------------------------------------------

def typed_edges(n: int, edges: Iterable[Edge]) -> dict[int, list[TypedEdge]]:
    """Group edges by type, each list sorted by starting vertex."""
    out: dict[int, list[TypedEdge]] = defaultdict(list)
    for u, v in edges:
        t = typed(n, u, v)
        out[t.etype].append(t)
    for lst in out.values():
        lst.sort()
    return dict(out)


def _edges_of(obj: Sequence[int] | EdgeSet | Iterable[Edge]) -> list[Edge]:
    if isinstance(obj, EdgeSet):
        return obj.edges()
    items = list(obj)
    if items and isinstance(items[0], int):
        return path_edges(items)
    return [tuple(e) for e in items]


def _gp3(n: int, by_type: dict[int, list[TypedEdge]], types: Iterable[int]):
    """Distance clashes between pairs of different types, and antipodal pairs."""
    owner: dict[int, int] = {}
    clashes = []
    antipodal = []
    for x in sorted(types):
        es = by_type.get(x, [])
        if len(es) < 2:
            continue
        dists = {cd_edges(n, a, b) for a, b in itertools.combinations(es, 2)}
        for a, b in itertools.combinations(es, 2):
            if n % 2 == 0 and 2 * cd_edges(n, a, b) == n:
                antipodal.append((x, a.start, b.start))
        for d in sorted(dists):
            if d in owner and owner[d] != x:
                clashes.append((owner[d], x, d))
            else:
                owner.setdefault(d, x)
    return clashes, antipodal


@dataclass
class GeneratorReport:
    n: int
    parity: str
    gp1: bool
    gp2: bool
    gp3: bool
    missing_types: list[int]
    single_types: list[int]
    excess_types: list[int]
    distance_clashes: list[tuple[int, int, int]]
    antipodal_pairs: list[tuple[int, int, int]]

    @property
    def is_generator(self) -> bool:
        return self.gp1 and self.gp2 and self.gp3


def check_generator(n: int, path: Sequence[int]) -> GeneratorReport:
    """Evaluate the three generator-path conditions for ``path`` on K_n."""
    by_type = typed_edges(n, path_edges(path))
    counts = {x: len(v) for x, v in by_type.items()}
    top = n // 2
    even = n % 2 == 0
    missing = [x for x in range(1, top + 1) if x not in counts]
    once_range = range(1, top) if even else range(1, top + 1)
    singles = [x for x in once_range if counts.get(x) == 1]
    excess = sorted(x for x, c in counts.items() if c > 2)
    clashes, antipodal = _gp3(n, by_type, counts)
    return GeneratorReport(
        n=n,
        parity="even" if even else "odd",
        gp1=not missing,
        gp2=len(singles) <= 1 and not excess,
        gp3=not clashes and not antipodal,
        missing_types=missing,
        single_types=singles,
        excess_types=excess,
        distance_clashes=clashes,
        antipodal_pairs=antipodal,
    )


@dataclass(frozen=True)
class FSplit:
    F: frozenset[int]
    D: frozenset[int]

    @classmethod
    def from_F(cls, n: int, F: Iterable[int]) -> "FSplit":
        F = frozenset(F)
        return cls(F, frozenset(range(1, n // 2 + 1)) - F)

    def validate(self, n: int) -> None:
        universe = set(range(1, n // 2 + 1))
        if self.F & self.D or (self.F | self.D) != universe:
            raise ValueError("F and D must partition the edge types of K_n")


@dataclass
class FSeparatorReport:
    cover: bool
    doubled: bool
    gp3: bool
    missing_types: list[int]
    wrong_count_types: list[tuple[int, int]]
    distance_clashes: list[tuple[int, int, int]]
    antipodal_pairs: list[tuple[int, int, int]]

    @property
    def ok(self) -> bool:
        return self.cover and self.doubled and self.gp3


def check_f_separator(n: int, edges, split: FSplit) -> FSeparatorReport:
    """Check an edge set (or a path) against an (F, D) split of the types."""
    split.validate(n)
    by_type = typed_edges(n, _edges_of(edges))
    missing = [x for x in range(1, n // 2 + 1) if x not in by_type]
    wrong = [(x, len(by_type.get(x, []))) for x in sorted(split.F)
             if len(by_type.get(x, [])) != 2]
    clashes, antipodal = _gp3(n, by_type, split.F)
    return FSeparatorReport(not missing, not wrong, not clashes and not antipodal,
                            missing, wrong, clashes, antipodal)


def equally_spaced_types(n: int, edges) -> set[int]:
    """Types whose m >= 2 edges sit at consecutive clockwise gaps of n/m.

    Type n/2 edges are placed at their smaller endpoint.
    """
    out = set()
    for x, es in typed_edges(n, _edges_of(edges)).items():
        m = len(es)
        if m < 2 or n % m:
            continue
        starts = sorted(e.start for e in es)
        gaps = [b - a for a, b in zip(starts, starts[1:])] + [starts[0] + n - starts[-1]]
        if all(g == n // m for g in gaps):
            out.add(x)
    return out


def crossing_number(n: int, u: int, v: int) -> int:
    """Type of the vertex-n edge in the rotated matching through ``{u, v}``.

    The rotation of the matching ``{(-i, i)}`` that contains ``{u, v}`` is
    fixed by ``u + v (mod n)``; its edge at vertex n is ``{n, u + v}``.
    """
    if n % 2 == 0:
        raise ValueError(f"crossing numbers need odd n, got {n}")
    edge_type(n, u, v)
    s = (u + v) % n
    return 0 if s == 0 else min(s, n - s)


@dataclass
class LowerBoundDiagnostics:
    n: int
    family_size: int
    uncovered: int
    in_every_path: int
    unique_per_path: list[int]
    multiplicity_histogram: dict[int, int]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "family_size": self.family_size,
            "uncovered": self.uncovered,
            "in_every_path": self.in_every_path,
            "unique_per_path": self.unique_per_path,
            "multiplicity_histogram": {str(k): v for k, v in
                                       sorted(self.multiplicity_histogram.items())},
        }


def lb_diagnostics(family: PathFamily) -> LowerBoundDiagnostics:
    sigs = signature_list(family)
    k = len(family)
    mult = [bin(s).count("1") for s in sigs]
    unique = [0] * k
    for s, c in zip(sigs, mult):
        if c == 1:
            unique[s.bit_length() - 1] += 1
    return LowerBoundDiagnostics(
        n=family.n,
        family_size=k,
        uncovered=mult.count(0),
        in_every_path=mult.count(k) if k else 0,
        unique_per_path=unique,
        multiplicity_histogram=dict(Counter(mult)),
    )
