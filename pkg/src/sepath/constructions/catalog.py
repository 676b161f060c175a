"""Hand-found generator paths for small n."""

from __future__ import annotations

from ..circulant import PathSeq

CATALOG: dict[int, PathSeq] = {
    2: (1, 2),
    3: (1, 2, 3),
    4: (1, 2, 4),
    5: (1, 3, 2, 5),
    6: (1, 5, 4, 3, 6),
    7: (1, 2, 3, 5, 7, 4),
    8: (1, 3, 5, 2, 6, 7, 8),
    9: (1, 5, 9, 3, 4, 6, 8, 2),
    10: (1, 4, 7, 6, 5, 9, 3, 8, 10),
    11: (1, 3, 5, 10, 4, 11, 7, 8, 9, 6),
    12: (1, 2, 11, 9, 10, 3, 7, 4, 8, 6, 12, 5),
    13: (1, 3, 4, 13, 11, 6, 10, 7, 12, 5, 8, 9),
    14: (1, 3, 6, 9, 10, 11, 2, 7, 13, 5, 12, 8, 4),
    15: (1, 14, 15, 5, 10, 3, 12, 6, 9, 13, 2, 4, 11, 8, 7),
    16: (1, 11, 13, 15, 14, 3, 8, 12, 16, 9, 2, 10, 7, 4, 5),
    17: (1, 3, 5, 16, 10, 11, 12, 9, 6, 15, 7, 14, 4, 17, 13, 8),
    18: (1, 15, 10, 5, 13, 3, 12, 9, 6, 7, 8, 2, 14, 16, 18, 11, 4),
    19: (1, 3, 5, 18, 12, 11, 10, 13, 16, 7, 17, 6, 14, 9, 4, 19, 15, 8),
    20: (1, 5, 10, 15, 18, 8, 17, 6, 20, 14, 7, 19, 2, 4, 16, 9, 13, 12, 11),
}


def catalog_generator(n: int) -> PathSeq:
    """Generator path for ``2 <= n <= 20``.

    n = 2, 3, 4 are the trivial ones; the rest are the published list.
    """
    try:
        return CATALOG[n]
    except KeyError:
        raise ValueError(f"no catalog generator for n={n}; catalog covers 2..20") from None
