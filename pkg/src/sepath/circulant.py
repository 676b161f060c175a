"""Circulant model of K_n.

Vertices carry standard labels ``1..n`` arranged clockwise on a regular
polygon.  An edge ``{u, v}`` has *type* ``min(|u - v|, n - |u - v|)``; its
*starting vertex* is the endpoint ``s`` with ``s + type == other (mod n)``.
Paths are plain tuples of distinct labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]
PathSeq = tuple[int, ...]


class PathError(ValueError):
    """A vertex sequence is not a path of K_n."""


def check_order(n: int) -> int:
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"order must be an integer >= 2, got {n!r}")
    return n


def max_type(n: int) -> int:
    return n // 2


def _check_label(n: int, v: int) -> None:
    if not 1 <= v <= n:
        raise ValueError(f"vertex {v} out of range 1..{n}")


def norm(n: int, v: int) -> int:
    """Reduce any integer to a standard label in ``1..n``."""
    r = v % n
    return n if r == 0 else r


def edge_type(n: int, u: int, v: int) -> int:
    _check_label(n, u)
    _check_label(n, v)
    if u == v:
        raise ValueError(f"loop at vertex {u} has no type")
    d = abs(u - v)
    return min(d, n - d)


def vertex_distance(n: int, u: int, v: int) -> int:
    """Clockwise distance ``cd`` between two vertices."""
    d = abs(u - v) % n
    return min(d, n - d)


def canon(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def edge_index(n: int, u: int, v: int) -> int:
    """Lexicographic index of ``{u, v}`` among sorted pairs, in ``[0, n(n-1)/2)``."""
    if u == v:
        raise ValueError("loop has no index")
    u, v = canon(u, v)
    return (u - 1) * n - (u - 1) * u // 2 + (v - u - 1)


def index_edge(n: int, idx: int) -> Edge:
    """Inverse of :func:`edge_index`."""
    u = 1
    while idx >= n - u:
        idx -= n - u
        u += 1
    return (u, u + 1 + idx)


def num_edges(n: int) -> int:
    return n * (n - 1) // 2


def all_edges(n: int) -> Iterator[Edge]:
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            yield (u, v)


@dataclass(frozen=True, order=True)
class TypedEdge:
    """An edge given by its starting vertex and type."""

    start: int
    etype: int

    def endpoints(self, n: int) -> Edge:
        return canon(self.start, norm(n, self.start + self.etype))

    def starts(self, n: int) -> tuple[int, ...]:
        """All admissible starting vertices (two only for type n/2)."""
        if 2 * self.etype == n:
            return tuple(sorted({self.start, norm(n, self.start + self.etype)}))
        return (self.start,)


def typed(n: int, u: int, v: int) -> TypedEdge:
    """The :class:`TypedEdge` for ``{u, v}``; type n/2 gets the smaller label."""
    x = edge_type(n, u, v)
    if 2 * x == n:
        return TypedEdge(min(u, v), x)
    if norm(n, u + x) == v:
        return TypedEdge(u, x)
    return TypedEdge(v, x)


def cd_edges(n: int, e: TypedEdge, f: TypedEdge) -> int:
    """Clockwise distance between the starting vertices of two edges."""
    return min(vertex_distance(n, a, b) for a in e.starts(n) for b in f.starts(n))


def path_edges(path: Sequence[int]) -> list[Edge]:
    return [canon(a, b) for a, b in zip(path, path[1:])]


def check_path(n: int, path: Sequence[int]) -> PathSeq:
    """Validate a vertex sequence as a path of K_n and return it as a tuple."""
    p = tuple(path)
    if len(p) < 2:
        raise PathError(f"path needs at least two vertices, got {list(p)}")
    for v in p:
        if not isinstance(v, int) or not 1 <= v <= n:
            raise PathError(f"vertex {v!r} out of range 1..{n}")
    if len(set(p)) != len(p):
        raise PathError(f"repeated vertex in {list(p)}")
    return p


def rotate(n: int, path: Sequence[int], i: int) -> PathSeq:
    return tuple(norm(n, v + i) for v in path)


def rotations(n: int, path: Sequence[int]) -> list[PathSeq]:
    return [rotate(n, path, i) for i in range(n)]


@dataclass(frozen=True)
class PathFamily:
    """An ordered family of paths on one K_n."""

    n: int
    paths: tuple[PathSeq, ...]

    def __post_init__(self) -> None:
        check_order(self.n)
        object.__setattr__(
            self, "paths", tuple(check_path(self.n, p) for p in self.paths)
        )

    def __len__(self) -> int:
        return len(self.paths)

    def __iter__(self) -> Iterator[PathSeq]:
        return iter(self.paths)

    def rotated(self, i: int) -> "PathFamily":
        return PathFamily(self.n, tuple(rotate(self.n, p, i) for p in self.paths))

    @classmethod
    def from_rotations(cls, n: int, path: Sequence[int]) -> "PathFamily":
        return cls(n, tuple(rotations(n, path)))


class SignedLabeling:
    """Signed labels ``0, ±1, …, ±(n-1)/2`` for odd n.

    Signed 0 is standard label n, so standard ``1..(n-1)/2`` keep their value
    and standard ``n - i`` is signed ``-i``.
    """

    def __init__(self, n: int):
        check_order(n)
        if n % 2 == 0:
            raise ValueError(f"signed labeling needs odd n, got {n}")
        self.n = n
        self.half = (n - 1) // 2

    def to_standard(self, s: int) -> int:
        if not -self.half <= s <= self.half:
            raise ValueError(f"signed label {s} out of range ±{self.half}")
        return norm(self.n, s)

    def to_signed(self, v: int) -> int:
        _check_label(self.n, v)
        r = v % self.n
        return r if r <= self.half else r - self.n

    def wrap(self, s: int) -> int:
        """Reduce any integer to the signed range."""
        return self.to_signed(norm(self.n, s))

    def edge(self, a: int, b: int) -> Edge:
        """Standard canonical edge from two signed labels."""
        return canon(self.to_standard(a), self.to_standard(b))

    def signed_edge(self, e: Edge) -> Edge:
        return (self.to_signed(e[0]), self.to_signed(e[1]))


@dataclass(frozen=True)
class EdgeSet:
    """A set of edges of K_n stored by canonical index."""

    n: int
    indices: frozenset[int]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "EdgeSet":
        return cls(n, frozenset(edge_index(n, u, v) for u, v in edges))

    @classmethod
    def from_path(cls, n: int, path: Sequence[int]) -> "EdgeSet":
        return cls.from_edges(n, path_edges(path))

    def edges(self) -> list[Edge]:
        return [index_edge(self.n, i) for i in sorted(self.indices)]

    def __contains__(self, e: object) -> bool:
        if not isinstance(e, tuple) or len(e) != 2:
            return False
        return edge_index(self.n, *e) in self.indices

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges())

    def __or__(self, other: "EdgeSet") -> "EdgeSet":
        if other.n != self.n:
            raise ValueError("edge sets live on different K_n")
        return EdgeSet(self.n, self.indices | other.indices)


class LinearForestError(ValueError):
    """Raised when an edge set is not a linear forest."""

    def __init__(self, message: str, *, vertex: int | None = None,
                 cycle: list[int] | None = None):
        super().__init__(message)
        self.vertex = vertex
        self.cycle = cycle


def decompose_linear_forest(edges: EdgeSet | Iterable[Edge]) -> list[PathSeq]:
    """Split a linear forest into its maximal paths.

    Paths are oriented from their smaller endpoint and listed by that
    endpoint.  Raises :class:`LinearForestError` carrying a degree-3 vertex
    or a cycle as witness.
    """
    if isinstance(edges, EdgeSet):
        edge_list = edges.edges()
    else:
        edge_list = sorted({canon(*e) for e in edges})
    adj: dict[int, list[int]] = {}
    for u, v in edge_list:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    for v in sorted(adj):
        if len(adj[v]) > 2:
            raise LinearForestError(f"vertex {v} has degree {len(adj[v])}", vertex=v)

    seen: set[int] = set()
    paths: list[PathSeq] = []
    for v in sorted(adj):
        if v in seen or len(adj[v]) != 1:
            continue
        walk = [v]
        seen.add(v)
        prev, cur = None, v
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            walk.append(cur)
            seen.add(cur)
        paths.append(tuple(walk))
    rest = sorted(set(adj) - seen)
    if rest:
        # every remaining vertex has degree 2: a cycle
        start = rest[0]
        cycle = [start]
        prev, cur = None, start
        while True:
            nxt = [w for w in adj[cur] if w != prev][0]
            if nxt == start:
                break
            cycle.append(nxt)
            prev, cur = cur, nxt
        raise LinearForestError(f"cycle through {cycle}", cycle=cycle)
    return paths
