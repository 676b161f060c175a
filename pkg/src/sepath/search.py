"""Exhaustive searches used as ground truth on small instances."""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass

from .circulant import PathFamily, PathSeq, edge_index, num_edges, path_edges, vertex_distance
from .verify import check_generator, verify_weak

FOUND = "found"
EXHAUSTED = "exhausted"
BUDGET_EXCEEDED = "budget_exceeded"

MAX_EXACT_N = 5


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int | None = None
    wall_time_limit: float | None = None  # seconds


@dataclass
class SearchResult:
    outcome: str
    path: PathSeq | None
    nodes: int
    elapsed: float


class BudgetExceeded(RuntimeError):
    pass


class _Clock:
    def __init__(self, budget: SearchBudget):
        self.budget = budget
        self.nodes = 0
        self.t0 = time.monotonic()

    def tick(self) -> None:
        self.nodes += 1
        b = self.budget
        if b.max_nodes is not None and self.nodes > b.max_nodes:
            raise BudgetExceeded
        if b.wall_time_limit is not None and self.nodes % 512 == 0:
            if time.monotonic() - self.t0 > b.wall_time_limit:
                raise BudgetExceeded

    @property
    def elapsed(self) -> float:
        return time.monotonic() - self.t0


class _GeneratorSearch:
    """Depth-first extension of a path from vertex 1, one edge at a time.

    Cuts a branch when a type occurs three times, when two doubled types
    share an offset (or, for even n, a doubled type sits at offset n/2), or
    when the remaining edge budget cannot supply the missing types.
    """

    def __init__(self, n: int, clock: _Clock):
        self.n = n
        self.top = n // 2
        self.even = n % 2 == 0
        self.clock = clock
        self.count = [0] * (self.top + 1)
        self.first_start: list[tuple[int, ...] | None] = [None] * (self.top + 1)
        self.claimed: dict[int, int] = {}
        self.used = [False] * (n + 1)
        self.path: list[int] = []

    def _starts(self, a: int, b: int, x: int) -> tuple[int, ...]:
        n = self.n
        if 2 * x == n:
            return (a, b)
        return (a,) if (a - 1 + x) % n + 1 == b else (b,)

    def _needed(self) -> int:
        once_top = self.top - 1 if self.even else self.top
        zeros = ones = 0
        for x in range(1, once_top + 1):
            c = self.count[x]
            if c == 0:
                zeros += 1
            elif c == 1:
                ones += 1
        need = 2 * zeros + ones
        if zeros + ones:
            need -= 1
        if self.even and self.count[self.top] == 0:
            need += 1
        return need

    def _is_generator(self) -> bool:
        if any(self.count[x] == 0 for x in range(1, self.top + 1)):
            return False
        once_top = self.top - 1 if self.even else self.top
        return sum(1 for x in range(1, once_top + 1) if self.count[x] == 1) <= 1

    _CUT = object()

    def _push(self, v: int):
        """Append ``v``; return the offset it claims, or ``_CUT`` to prune.

        A cut leaves the state unchanged.
        """
        n = self.n
        a = self.path[-1]
        d = abs(a - v)
        x = min(d, n - d)
        if self.count[x] == 2:
            return self._CUT
        starts = self._starts(a, v, x)
        offset = None
        if self.count[x] == 1:
            offset = min(vertex_distance(n, s, t) for s in self.first_start[x] for t in starts)
            if self.even and 2 * offset == n:
                return self._CUT
            if offset in self.claimed:
                return self._CUT
        self.count[x] += 1
        if offset is None:
            self.first_start[x] = starts
        else:
            self.claimed[offset] = x
        self.used[v] = True
        self.path.append(v)
        if self._needed() > (n - 1) - (len(self.path) - 1):
            self._pop(offset)
            return self._CUT
        return offset

    def _pop(self, offset: int | None) -> None:
        n = self.n
        v = self.path.pop()
        a = self.path[-1]
        d = abs(a - v)
        x = min(d, n - d)
        self.count[x] -= 1
        if offset is None:
            self.first_start[x] = None
        else:
            del self.claimed[offset]
        self.used[v] = False

    def _dfs(self) -> bool:
        self.clock.tick()
        if len(self.path) >= 2 and self._is_generator():
            return True
        for v in range(1, self.n + 1):
            if self.used[v]:
                continue
            offset = self._push(v)
            if offset is self._CUT:
                continue
            if self._dfs():
                return True
            self._pop(offset)
        return False

    def run(self) -> PathSeq | None:
        self.clock.tick()
        self.path = [1]
        self.used[1] = True
        # rotate so the path starts at 1, reflect so the first step is clockwise
        for x in range(1, self.top + 1):
            offset = self._push(1 + x)
            if offset is self._CUT:
                continue
            if self._dfs():
                return tuple(self.path)
            self._pop(offset)
        return None


def search_generator(n: int, budget: SearchBudget = SearchBudget()) -> SearchResult:
    """Deterministic search for a generator path of K_n."""
    if n < 3:
        raise ValueError(f"generator search needs n >= 3, got {n}")
    clock = _Clock(budget)
    search = _GeneratorSearch(n, clock)
    try:
        path = search.run()
    except BudgetExceeded:
        return SearchResult(BUDGET_EXCEEDED, None, clock.nodes, clock.elapsed)
    if path is None:
        return SearchResult(EXHAUSTED, None, clock.nodes, clock.elapsed)
    assert check_generator(n, path).is_generator
    return SearchResult(FOUND, path, clock.nodes, clock.elapsed)


def all_paths_up_to_reversal(n: int) -> list[PathSeq]:
    """Every path of K_n with at least one edge, oriented so ``p[0] < p[-1]``."""
    out = []
    for k in range(2, n + 1):
        for p in itertools.permutations(range(1, n + 1), k):
            if p[0] < p[-1]:
                out.append(p)
    return out


def exact_lower_bound(n: int) -> int:
    m = num_edges(n)
    return math.ceil(math.log2(m)) if m > 1 else 0


def exact_min_sps(n: int, budget: SearchBudget = SearchBudget(),
                  start_k: int = 0) -> tuple[int, PathFamily]:
    """Smallest separating path system of K_n, certified by exhaustion.

    Iterative deepening on the family size k from ``start_k``.  A partial
    choice of j paths splits the edges into classes of equal partial
    signature; a class larger than 2^(k-j) cannot be split by the remaining
    paths, so the branch is cut.
    """
    if not 2 <= n <= MAX_EXACT_N:
        raise ValueError(f"exact search covers 2 <= n <= {MAX_EXACT_N}, got {n}")
    m = num_edges(n)
    paths = all_paths_up_to_reversal(n)
    masks = []
    for p in paths:
        mask = 0
        for u, v in path_edges(p):
            mask |= 1 << edge_index(n, u, v)
        masks.append(mask)
    clock = _Clock(budget)

    def extend(chosen: list[int], classes: list[int], k: int) -> list[int] | None:
        clock.tick()
        left = k - len(chosen)
        cap = 1 << left
        if any(c.bit_count() > cap for c in classes):
            return None
        if left == 0:
            return list(chosen)
        start = chosen[-1] + 1 if chosen else 0
        for i in range(start, len(masks)):
            p = masks[i]
            refined = []
            for c in classes:
                inside, outside = c & p, c & ~p
                if inside:
                    refined.append(inside)
                if outside:
                    refined.append(outside)
            chosen.append(i)
            found = extend(chosen, refined, k)
            chosen.pop()
            if found is not None:
                return found
        return None

    everything = (1 << m) - 1
    k = start_k
    while True:
        try:
            found = extend([], [everything], k)
        except BudgetExceeded:
            raise BudgetExceeded(f"budget exceeded at k={k} after {clock.nodes} nodes") from None
        if found is not None:
            family = PathFamily(n, tuple(paths[i] for i in found))
            assert verify_weak(family).separating
            return k, family
        k += 1
