"""Separating families for every n >= 44 from the odd-n F-separator path.

Case 1 (n odd, (n-1)/2 not a multiple of 3) uses the rotations plus fixing
paths directly.  The other cases build on K_m for m = n-1, n-2 or n-3 and
attach the removed vertices to every rotation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from ..circulant import PathFamily, PathSeq, cd_edges, path_edges, typed
from ..verify import typed_edges, verify_weak
from .fixing import fixing_paths
from .forest import ConstructionError, FSeparatorResult, f_separator_path, forest_applicable

MIN_THEOREM_N = 44


def theorem_bound(n: int) -> float:
    """(21n + 16 log2 n + 232) / 16."""
    return (21 * n + 16 * math.log2(n) + 232) / 16


@dataclass
class ConstructionProvenance:
    method: str
    size: int
    bound_claimed: int | None = None
    trace: dict | None = field(default=None, repr=False)

    def to_json(self) -> dict:
        out = {"method": self.method, "size": self.size, "bound_claimed": self.bound_claimed}
        if self.trace is not None:
            out["trace"] = self.trace
        return out


def theorem_case(n: int) -> int:
    if n % 2 == 1:
        return 1 if ((n - 1) // 2) % 3 else 3
    return 2 if ((n - 2) // 2) % 3 else 4


def _base_order(n: int, case: int) -> int:
    return {1: n, 2: n - 1, 3: n - 2, 4: n - 3}[case]


def _doubled_edges(m: int, path: PathSeq) -> list[tuple[int, int, int]]:
    """(start, type, position) of edges whose type occurs at least twice."""
    by_type = typed_edges(m, path_edges(path))
    out = []
    for pos, (a, b) in enumerate(zip(path, path[1:])):
        t = typed(m, a, b)
        if len(by_type[t.etype]) >= 2:
            out.append((t.start, t.etype, pos))
    return sorted(out)


def _offset_partners(m: int, path: PathSeq, F: frozenset[int], offset: int) -> set[int]:
    """Types in F whose two edges sit at clockwise distance ``offset``."""
    by_type = typed_edges(m, path_edges(path))
    return {x for x in F if len(by_type.get(x, [])) == 2
            and cd_edges(m, by_type[x][0], by_type[x][1]) == offset}


def _reroute(path: PathSeq, pos: int, hub: int) -> PathSeq:
    return path[:pos + 1] + (hub,) + path[pos + 1:]


@dataclass
class TheoremFamily:
    family: PathFamily
    provenance: ConstructionProvenance
    case: int
    base: FSeparatorResult
    fix_types: list[int]
    rerouted: list[tuple[int, int]] = field(default_factory=list)


def _assemble(n: int, m: int, base: FSeparatorResult) -> TheoremFamily:
    case = theorem_case(n)
    P = base.path
    fix = set(base.split.D) | {1}
    rerouted: list[tuple[int, int]] = []
    hubs = list(range(m + 1, n + 1))

    if case in (1, 2):
        template = P
        pendant = hubs[0] if case == 2 else None
    else:
        need = 1 if case == 3 else 2
        chosen: list[tuple[int, int, int]] = []
        for start, x, pos in _doubled_edges(m, P):
            if all(x != c[1] for c in chosen):
                chosen.append((start, x, pos))
            if len(chosen) == need:
                break
        if len(chosen) < need:
            raise ConstructionError(f"n={n}: no edge to reroute")
        template = P
        # insert from the back so earlier positions stay valid
        for (start, x, pos), hub in sorted(zip(chosen, hubs), key=lambda c: -c[0][2]):
            template = _reroute(template, pos, hub)
        for (start, x, pos), hub in zip(chosen, hubs):
            rerouted.append((x, hub))
            fix.add(x)
            fix |= _offset_partners(m, P, base.split.F, x)
        pendant = hubs[need]

    paths: list[PathSeq] = []
    for i in range(m):
        rot = tuple(v if v > m else ((v - 1 + i) % m) + 1 for v in template)
        if pendant is not None:
            rot = (pendant,) + rot
        paths.append(rot)

    fix_types = sorted(fix)
    q_paths: list[PathSeq] = []
    for x in fix_types:
        q, q2 = fixing_paths(m, x)
        q_paths.extend([q, q2])
    if case == 4:
        # the three hub-to-hub edges would all be uncovered; hang two of them
        # off the fixing paths of the rerouted types
        for x, hub in rerouted:
            k = 2 * fix_types.index(x)
            q_paths[k] = q_paths[k] + (hub, hubs[2])
    paths.extend(q_paths)

    family = PathFamily(n, tuple(paths))
    trace = {
        "case": case,
        "base_order": m,
        "base_path": list(P),
        "F": sorted(base.split.F),
        "D": sorted(base.split.D),
        "fix_types": sorted(fix),
        "rerouted": [[x, hub] for x, hub in rerouted],
        "forest": base.trace.to_json(),
    }
    prov = ConstructionProvenance(
        method=f"main_theorem_case_{case}",
        size=len(family),
        bound_claimed=math.ceil(theorem_bound(n)) if n >= MIN_THEOREM_N else None,
        trace=trace,
    )
    return TheoremFamily(family, prov, case, base, fix_types, rerouted)


def build_theorem_family(n: int) -> TheoremFamily:
    """Run the case construction for any n whose base order admits the forest."""
    case = theorem_case(n)
    m = _base_order(n, case)
    if not forest_applicable(m):
        raise ValueError(f"n={n}: base order {m} does not admit the forest construction")
    return _assemble(n, m, f_separator_path(m))


def theorem_family(n: int) -> tuple[PathFamily, ConstructionProvenance]:
    if n < MIN_THEOREM_N:
        raise ValueError(f"theorem construction needs n >= {MIN_THEOREM_N}, got {n}")
    built = build_theorem_family(n)
    if not verify_weak(built.family).separating:
        raise ConstructionError(f"n={n}: case {built.case} family is not separating")
    return built.family, built.provenance
