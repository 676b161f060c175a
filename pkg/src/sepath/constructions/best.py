"""Pick the smallest verified family for a given n."""

from __future__ import annotations

import math

from ..circulant import PathFamily, all_edges, check_order, num_edges
from ..search import FOUND, SearchBudget, search_generator
from ..verify import verify_weak
from .catalog import CATALOG, catalog_generator
from .forest import ConstructionError
from .primes import is_prime, prime_generator, prime_plus_one
from .theorem import (
    MIN_THEOREM_N,
    ConstructionProvenance,
    build_theorem_family,
    theorem_bound,
)

METHODS = ("catalog", "prime", "prime_plus_one", "main", "search", "trivial_edges")
DEFAULT_SEARCH_SECONDS = 10.0


class NotApplicable(ValueError):
    """The requested method has no construction for this n."""


def _generator_family(n, path, method):
    family = PathFamily.from_rotations(n, path)
    return family, ConstructionProvenance(method, len(family), n)


def build_catalog(n: int):
    if n not in CATALOG:
        raise NotApplicable(f"catalog covers 2..20, not n={n}")
    return _generator_family(n, catalog_generator(n), "catalog")


def build_prime(n: int):
    if n < 3 or not is_prime(n):
        raise NotApplicable(f"n={n} is not an odd prime")
    return _generator_family(n, prime_generator(n), "prime")


def build_prime_plus_one(n: int):
    if n < 4 or not is_prime(n - 1):
        raise NotApplicable(f"n-1={n - 1} is not an odd prime")
    family = prime_plus_one(n - 1)
    return family, ConstructionProvenance("prime_plus_one", len(family), n)


def build_main(n: int):
    try:
        built = build_theorem_family(n)
    except ValueError as exc:
        raise NotApplicable(str(exc)) from None
    return built.family, built.provenance


def build_search(n: int, budget: SearchBudget | None = None):
    if n < 3:
        raise NotApplicable("generator search needs n >= 3")
    budget = budget or SearchBudget(wall_time_limit=DEFAULT_SEARCH_SECONDS)
    result = search_generator(n, budget)
    if result.outcome != FOUND:
        raise ConstructionError(f"n={n}: generator search {result.outcome} after {result.nodes} nodes")
    family = PathFamily.from_rotations(n, result.path)
    prov = ConstructionProvenance("search", len(family), n,
                                  {"nodes": result.nodes, "generator": list(result.path)})
    return family, prov


def build_trivial(n: int):
    # every edge but the last on its own; the last one is the uncovered edge
    edges = list(all_edges(n))[:-1]
    family = PathFamily(n, tuple(edges))
    return family, ConstructionProvenance("trivial_edges", len(family), num_edges(n) - 1)


BUILDERS = {
    "catalog": build_catalog,
    "prime": build_prime,
    "prime_plus_one": build_prime_plus_one,
    "main": build_main,
    "search": build_search,
    "trivial_edges": build_trivial,
}


def construct(n: int, method: str, budget: SearchBudget | None = None):
    """Build with one named method and verify the result."""
    check_order(n)
    if method not in BUILDERS:
        raise ValueError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")
    if method == "search":
        family, prov = build_search(n, budget)
    else:
        family, prov = BUILDERS[method](n)
    if not verify_weak(family).separating:
        raise ConstructionError(f"n={n}: {prov.method} family failed verification")
    if prov.size != len(family):
        raise ConstructionError(f"n={n}: provenance size {prov.size} != {len(family)}")
    return family, prov


def construct_best(n: int, budget: SearchBudget | None = None):
    """Smallest verified family among the applicable constructions.

    Generator-based methods give n paths and are tried first, in the order
    catalog, prime, prime_plus_one.  Otherwise the main pipeline is tried
    (verified, so it may also succeed below its proven range), then the
    generator search under a time budget, then single edges.
    """
    check_order(n)
    found = []
    for method in ("catalog", "prime", "prime_plus_one"):
        try:
            found.append(construct(n, method))
        except NotApplicable:
            continue
    if not found:
        for method in ("main", "search"):
            try:
                found.append(construct(n, method, budget))
                break
            except (NotApplicable, ConstructionError):
                continue
    if not found:
        found.append(construct(n, "trivial_edges"))
    # stable: earlier methods win ties
    return min(found, key=lambda fp: len(fp[0]))


def upper_bound(n: int) -> int:
    """Best size our constructions guarantee for n, as a reference column."""
    if n in CATALOG or (n >= 3 and is_prime(n)) or (n >= 4 and is_prime(n - 1)):
        return n
    if n >= MIN_THEOREM_N:
        return math.ceil(theorem_bound(n))
    return num_edges(n) - 1


def lower_bound(n: int) -> int:
    return n - 1
