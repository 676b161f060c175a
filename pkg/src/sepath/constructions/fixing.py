"""Fixing paths: two paths using only types {1, x} that cover every x-type edge."""

from __future__ import annotations

from math import gcd

from ..circulant import PathSeq, norm


def fixing_paths(n: int, x: int) -> tuple[PathSeq, PathSeq]:
    """Return ``(Q_x, Q_x')``.

    The x-type edges form f = gcd(n, x) cycles of length a = n/f.  Q_x walks
    each cycle from v_i for a - 1 steps to v_i' = v_i - x, then hops by a
    1-type edge to v_{i+1} = v_i' + 1.  Q_x' strings the skipped edges
    (v_i, v_i') together with the same hops.  For a = 2 (x = n/2) the walk
    and the skipped edges coincide, so both paths are equal.
    """
    if not 1 <= x <= n // 2:
        raise ValueError(f"edge type {x} out of range 1..{n // 2}")
    f = gcd(n, x)
    a = n // f
    q: list[int] = []
    q2: list[int] = []
    v = 1
    for _ in range(f):
        q.extend(norm(n, v + j * x) for j in range(a))
        back = norm(n, v - x)
        q2.extend((v, back))
        v = norm(n, back + 1)
    return tuple(q), tuple(q2)
