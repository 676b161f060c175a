"""Primitive-root generator paths for primes p, and the p + 1 extension."""

from __future__ import annotations

from ..circulant import PathFamily, PathSeq, canon, norm, rotate


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _require_odd_prime(p: int) -> None:
    if not isinstance(p, int) or p < 3 or not is_prime(p):
        raise ValueError(f"{p!r} is not an odd prime")


def multiplicative_order(g: int, p: int) -> int:
    k, x = 1, g % p
    while x != 1:
        x = x * g % p
        k += 1
    return k


def smallest_primitive_root(p: int) -> int:
    _require_odd_prime(p)
    for g in range(2, p):
        if multiplicative_order(g, p) == p - 1:
            return g
    raise AssertionError("unreachable: every prime has a primitive root")


def partial_sums(p: int, g: int) -> list[int]:
    """``0, g, g + g^2, …`` (p - 1 terms) reduced mod p."""
    sums = [0]
    power = 1
    for _ in range(p - 2):
        power = power * g % p
        sums.append((sums[-1] + power) % p)
    return sums


def prime_generator(p: int) -> PathSeq:
    """Path on K_p whose i-th edge has length g^i, starting at vertex p."""
    _require_odd_prime(p)
    g = smallest_primitive_root(p)
    return tuple(norm(p, s) for s in partial_sums(p, g))


def unique_one_type_edge(p: int) -> tuple[int, int]:
    """The k-th edge (k = (p-1)/2) of :func:`prime_generator`, the lone 1-type edge."""
    path = prime_generator(p)
    k = (p - 1) // 2
    return canon(path[k - 1], path[k])


def prime_plus_one(p: int) -> PathFamily:
    """Separating family of p + 1 paths on K_{p+1}.

    Rotation i of the prime generator (which starts at vertex i) gets a
    pendant edge to the new vertex p + 1 for 1 <= i <= p - 1; the last path
    is the 1-type cycle on 1..p with the generator's 1-type edge removed.
    """
    _require_odd_prime(p)
    base = prime_generator(p)
    paths = [base]
    for i in range(1, p):
        rot = rotate(p, base, i)
        assert rot[0] == i
        paths.append((p + 1,) + rot)
    a, b = unique_one_type_edge(p)
    # h = {a, b} with b = a + 1, or {1, p}
    lo = p if (a, b) == (1, p) else a
    start = norm(p, lo + 1)
    paths.append(tuple(norm(p, start + j) for j in range(p)))
    return PathFamily(p + 1, tuple(paths))
