"""F-separator paths for odd n with (n-1)/2 not a multiple of 3.

Work happens in signed labels (0, ±1, …, ±(n-1)/2).  A linear forest
L = M0 ∪ R ∪ B is built first: M0 is the maximal matching {(-i, i)}, R holds
one edge of each of the largest types, and B one edge of each type in a band
around n/8.  Short connector edges then join L into a single path P whose
doubled types (from R ∪ B) keep pairwise distinct rotation offsets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from ..circulant import (
    Edge,
    PathFamily,
    PathSeq,
    SignedLabeling,
    cd_edges,
    decompose_linear_forest,
    edge_type,
    path_edges,
    rotations,
)
from ..verify import (
    FSplit,
    check_f_separator,
    crossing_number,
    equally_spaced_types,
    typed_edges,
)
from .fixing import fixing_paths

MIN_FOREST_N = 13
MIN_CONNECT_N = 45


class ConstructionError(RuntimeError):
    """A construction step broke an invariant the construction relies on."""

    def __init__(self, message: str, trace: object = None):
        super().__init__(message)
        self.trace = trace


def forest_applicable(n: int) -> bool:
    return n >= MIN_FOREST_N and n % 2 == 1 and ((n - 1) // 2) % 3 != 0


@dataclass
class ForestTrace:
    """Every edge set of the construction, in signed labels."""

    n: int
    x_b: int
    r: int
    t: int
    M0: list[Edge]
    R1: list[Edge]
    R2: list[Edge]
    B: list[Edge]
    C_B: list[Edge] = field(default_factory=list)
    C_0: list[Edge] = field(default_factory=list)
    C_levels: list[list[Edge]] = field(default_factory=list)
    special: list[Edge] = field(default_factory=list)
    zero_three: list[Edge] = field(default_factory=list)
    e_v: list[Edge] = field(default_factory=list)
    E_M: list[Edge] = field(default_factory=list)
    C_A: list[Edge] = field(default_factory=list)
    fallback: list[Edge] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)

    @property
    def L(self) -> list[Edge]:
        return self.M0 + self.R1 + self.R2 + self.B

    @property
    def connectors(self) -> list[Edge]:
        out = self.C_B + self.C_0
        for level in self.C_levels:
            out += level
        return out + self.special + self.zero_three + self.e_v + self.E_M + self.C_A + self.fallback

    def all_edges(self) -> list[Edge]:
        return self.L + self.connectors

    def to_json(self) -> dict:
        """Trace with standard labels, for the family file."""
        lab = SignedLabeling(self.n)

        def std(es):
            return [list(lab.edge(a, b)) for a, b in es]

        return {
            "x_b": self.x_b,
            "r": self.r,
            "t": self.t,
            "M0": std(self.M0),
            "R1": std(self.R1),
            "R2": std(self.R2),
            "B": std(self.B),
            "C_B": std(self.C_B),
            "C_0": std(self.C_0),
            "C_levels": [std(c) for c in self.C_levels],
            "special_5_7": std(self.special),
            "edge_0_3": std(self.zero_three),
            "e_v": std(self.e_v),
            "E_M": std(self.E_M),
            "C_A": std(self.C_A),
            "fallback": std(self.fallback),
            "skipped": list(self.skipped),
        }


def x_b_for(n: int) -> int:
    """Largest x = 2i + 3 with i even (so x = 3 mod 4) and x <= (n-1)/4."""
    x = (n - 1) // 4
    while x % 4 != 3:
        x -= 1
    return x


def build_linear_forest(n: int) -> ForestTrace:
    if not forest_applicable(n):
        raise ValueError(
            f"n={n}: need n odd, n >= {MIN_FOREST_N}, (n-1)/2 not a multiple of 3")
    h = (n - 1) // 2
    r = (n - 7) // 4 if h % 2 else (n - 9) // 4
    x_b = x_b_for(n)
    i_b = (x_b - 3) // 2
    t = (x_b + 1) // 2
    M0 = [(-i, i) for i in range(1, h + 1)]
    R1 = [(1, -(n - 3) // 2), (-1, -h)]
    R2 = [(-3 - 2 * k, h - k) for k in range(r)]
    B = [(-i_b + 2 * k, (x_b + 3) // 2 + k) for k in range(t)]
    trace = ForestTrace(n, x_b, r, t, M0, R1, R2, B)
    lab = SignedLabeling(n)
    decompose_linear_forest([lab.edge(a, b) for a, b in trace.L])
    return trace


class _Joiner:
    """Union-find over a growing linear forest, in signed labels."""

    def __init__(self, n: int, edges: list[Edge]):
        self.n = n
        self.lab = SignedLabeling(n)
        h = (n - 1) // 2
        self.parent = {v: v for v in range(-h, h + 1)}
        self.degree = {v: 0 for v in range(-h, h + 1)}
        self.components = n
        for a, b in edges:
            if not self.add(a, b):
                raise ConstructionError(f"edge ({a}, {b}) breaks the linear forest")

    def find(self, v: int) -> int:
        while self.parent[v] != v:
            self.parent[v] = self.parent[self.parent[v]]
            v = self.parent[v]
        return v

    def can_add(self, a: int, b: int) -> bool:
        return (a != b and self.degree[a] < 2 and self.degree[b] < 2
                and self.find(a) != self.find(b))

    def add(self, a: int, b: int) -> bool:
        if not self.can_add(a, b):
            return False
        self.parent[self.find(a)] = self.find(b)
        self.degree[a] += 1
        self.degree[b] += 1
        self.components -= 1
        return True

    def is_end(self, v: int) -> bool:
        return self.degree[v] == 1

    def etype(self, a: int, b: int) -> int:
        return edge_type(self.n, self.lab.to_standard(a), self.lab.to_standard(b))


def _walk(adj: dict[int, list[int]], v: int) -> list[int]:
    walk = [v]
    prev = None
    while True:
        nxt = [w for w in adj.get(walk[-1], []) if w != prev]
        if not nxt:
            return walk
        prev = walk[-1]
        walk.append(nxt[0])


def _join_t_minus(trace: ForestTrace, j: _Joiner) -> None:
    x_b = trace.x_b
    a1 = -x_b - 1
    a2 = -(x_b - 3) // 2 - 2
    ends = {v for v in range(a1, a2 + 1) if v % 2 == 0 and j.is_end(v)}
    k = 0
    while True:
        for a, b in ((a2 - 4 * k, a2 - 4 * k - 2), (a1 + 2 + 4 * k, a1 + 4 + 4 * k)):
            if not (a in ends and b in ends and j.add(a, b)):
                return
            trace.C_B.append((a, b))
        k += 1


def _join_t_plus(trace: ForestTrace, j: _Joiner, adj: dict[int, list[int]]) -> None:
    n, x_b = trace.n, trace.x_b
    h = (n - 1) // 2
    top = (x_b - 1) // 2
    u_minus = range(-h, -h + trace.r)

    v = 9
    while v + 2 <= top:
        if j.add(v, v + 2):
            trace.C_0.append((v, v + 2))
        else:
            trace.skipped.append(f"C_0 ({v},{v + 2})")
        v += 4

    levels: dict[int, list[tuple[int, int]]] = {}
    for v in range(7, top + 1, 2):
        walk = _walk(adj, v)
        end = walk[-1]
        if end not in u_minus:
            trace.skipped.append(f"T+ path from {v} ends at {end}, outside U-")
            continue
        levels.setdefault(len(walk) - 1, []).append((v, end))
    for length in sorted(levels):
        us = [u for _, u in sorted(levels[length])]
        level = []
        for a, b in zip(us[0::2], us[1::2]):
            if j.add(a, b):
                level.append((a, b))
            else:
                trace.skipped.append(f"C level {length} ({a},{b})")
        trace.C_levels.append(level)

    if j.add(5, 7):
        trace.special.append((5, 7))
    else:
        trace.skipped.append("special (5,7)")


def _region_ends(trace: ForestTrace, j: _Joiner) -> list[int]:
    h = (trace.n - 1) // 2
    # U- and M-, plus the far end of the T- chain
    region = range(-h, -trace.x_b)
    return [v for v in region if j.is_end(v)]


def _greedy_region(trace: ForestTrace, j: _Joiner, reverse: bool) -> None:
    limit = (trace.n - 1) // 4
    while j.components > 1:
        ends = _region_ends(trace, j)
        if reverse:
            ends.reverse()
        progress = False
        for idx, s in enumerate(ends):
            if not j.is_end(s):
                continue
            for t_ in ends[idx + 1:]:
                if not j.is_end(t_):
                    continue
                x = j.etype(s, t_)
                if x % 2 == 0 and x <= limit and j.add(s, t_):
                    trace.C_A.append((s, t_))
                    progress = True
                    break
        if not progress:
            return


def _fallback(trace: ForestTrace, j: _Joiner) -> None:
    """Join whatever is left with the shortest available edges."""
    h = (trace.n - 1) // 2
    while j.components > 1:
        ends = [v for v in range(-h, h + 1) if j.degree[v] < 2]
        best = None
        for i, a in enumerate(ends):
            for b in ends[i + 1:]:
                if j.can_add(a, b):
                    key = (j.etype(a, b), a, b)
                    if best is None or key < best:
                        best = key
        if best is None:
            raise ConstructionError("forest cannot be joined into a path", trace)
        j.add(best[1], best[2])
        trace.fallback.append((best[1], best[2]))


def _connect(base: ForestTrace, reverse: bool) -> ForestTrace:
    trace = ForestTrace(base.n, base.x_b, base.r, base.t,
                        list(base.M0), list(base.R1), list(base.R2), list(base.B))
    n, x_b = trace.n, trace.x_b
    h = (n - 1) // 2
    j = _Joiner(n, trace.L)
    adj: dict[int, list[int]] = {}
    for a, b in trace.L:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)

    _join_t_minus(trace, j)
    _join_t_plus(trace, j, adj)

    if j.add(0, 3):
        trace.zero_three.append((0, 3))
    else:
        trace.skipped.append("edge (0,3)")

    v = -(3 * x_b + 7) // 4
    if j.is_end(v):
        u_ends = [u for u in range(-h, -h + trace.r) if u % 2 == 0 and j.is_end(u)]
        for u in sorted(u_ends, reverse=True):
            if j.add(v, u):
                trace.e_v.append((v, u))
                break
        else:
            trace.skipped.append(f"e_v at {v}")

    m_plus = [m for m in range(x_b + 2, h - trace.r + 1)]
    for a, b in zip(m_plus[0::2], m_plus[1::2]):
        if j.add(a, b):
            trace.E_M.append((a, b))
        else:
            trace.skipped.append(f"E_M ({a},{b})")

    _greedy_region(trace, j, reverse)
    _fallback(trace, j)
    return trace


@dataclass
class FSeparatorResult:
    n: int
    path: PathSeq
    split: FSplit
    trace: ForestTrace

    @property
    def fix_types(self) -> list[int]:
        """D ∪ {1}, the types that get fixing paths."""
        return sorted(self.split.D | {1})


def d_bound(n: int) -> float:
    """Real-valued cap on |D ∪ {1}|: (5n + 16 log2 n + 167) / 32."""
    return (5 * n + 16 * math.log2(n) + 167) / 32


def compute_split(n: int, path: PathSeq) -> FSplit:
    """F = doubled types, dropping the larger type of any clashing pair of offsets."""
    by_type = typed_edges(n, path_edges(path))
    used: set[int] = set()
    F = set()
    for x in sorted(by_type):
        es = by_type[x]
        if len(es) != 2:
            continue
        d = cd_edges(n, es[0], es[1])
        if n % 2 == 0 and 2 * d == n:
            continue
        if d in used:
            continue
        used.add(d)
        F.add(x)
    return FSplit.from_F(n, F)


def connect_forest(trace: ForestTrace) -> FSeparatorResult:
    """Join the forest into one F-separator path with no equally spaced types.

    Below ``MIN_CONNECT_N`` the joining steps are attempted as well, but
    callers must rely on the final checks rather than on the construction.
    """
    n = trace.n
    lab = SignedLabeling(n)
    last = None
    for reverse in (False, True):
        full = _connect(trace, reverse)
        edges = [lab.edge(a, b) for a, b in full.all_edges()]
        paths = decompose_linear_forest(edges)
        if len(paths) != 1 or len(paths[0]) != n:
            raise ConstructionError(f"n={n}: connectors did not give a Hamilton path", full)
        path = paths[0]
        if equally_spaced_types(n, path):
            last = full
            continue
        split = compute_split(n, path)
        report = check_f_separator(n, path, split)
        if not report.ok:
            raise ConstructionError(f"n={n}: F-separator check failed: {report}", full)
        return FSeparatorResult(n, path, split, full)
    raise ConstructionError(f"n={n}: equally spaced types in both join orders", last)


def f_separator_path(n: int) -> FSeparatorResult:
    return connect_forest(build_linear_forest(n))


def rotations_plus_fixings(result: FSeparatorResult) -> PathFamily:
    """All n rotations of P followed by Q_x, Q_x' for x in D ∪ {1}."""
    n = result.n
    if n % 2 == 0:
        raise ValueError("rotations plus fixings needs odd n")
    if equally_spaced_types(n, result.path):
        raise ValueError("path has equally spaced edge types")
    paths = list(rotations(n, result.path))
    for x in result.fix_types:
        paths.extend(fixing_paths(n, x))
    return PathFamily(n, tuple(paths))


def crossing_numbers(trace: ForestTrace, edges: list[Edge]) -> list[int]:
    lab = SignedLabeling(trace.n)
    return [crossing_number(trace.n, *lab.edge(a, b)) for a, b in edges]


def d_bound_ok(n: int, size: int) -> bool:
    """``size <= ceil(bound)`` with the bound evaluated as a real number."""
    return size <= math.ceil(d_bound(n))


def segments(n: int, x_b: int, r: int) -> dict[str, range]:
    """The seven arcs of the signed circle used to locate forest endpoints."""
    h = (n - 1) // 2
    return {
        "0": range(0, 1),
        "U+": range(h - r + 1, h + 1),
        "M+": range(x_b + 2, h - r + 1),
        "T+": range(1, x_b + 2),
        "U-": range(-h, -h + r),
        "M-": range(-h + r, -x_b - 1),
        "T-": range(-x_b - 1, 0),
    }


def endpoint_census(trace: ForestTrace) -> dict[str, list[int]]:
    """Vertices of degree < 2 in the forest L, grouped by segment."""
    deg: dict[int, int] = {}
    for a, b in trace.L:
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
    return {name: [v for v in seg if deg.get(v, 0) < 2]
            for name, seg in segments(trace.n, trace.x_b, trace.r).items()}
