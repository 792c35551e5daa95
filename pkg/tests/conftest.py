from __future__ import annotations

import pytest

from chaindet import census
from chaindet.rings import ChainRing, galois_ring, truncated_poly_ring, zmod


def small_rings() -> list[ChainRing]:
    """One ring per structural situation worth probing, all tiny."""
    return [
        zmod(2),
        zmod(4),
        zmod(8),
        zmod(9),
        truncated_poly_ring(2, 2),
        truncated_poly_ring(2, 3),
        truncated_poly_ring(3, 2),
        truncated_poly_ring(4, 1),
        truncated_poly_ring(4, 2),
        galois_ring(4, 2),
        galois_ring(9, 2),
    ]


def acceptance_rings() -> list[ChainRing]:
    rings = [zmod(p**e) for p in (2, 3, 5) for e in (1, 2, 3)]
    rings += [truncated_poly_ring(q, e) for q in (2, 3, 4, 5) for e in (1, 2)]
    rings += [galois_ring(4, 2), galois_ring(9, 2)]
    return rings


def acceptance_cells(limit: int = 10**6) -> list[tuple[ChainRing, int]]:
    return [
        (ring, n)
        for ring in acceptance_rings()
        for n in range(1, 5)
        if ring.size**n <= limit
    ]


@pytest.fixture(scope="session")
def get_tally():
    """Memoized census access; acceptance criteria share the same tallies."""
    cache: dict[tuple, census.DetTally] = {}

    def _get(ring: ChainRing, n: int, shape: str) -> census.DetTally:
        key = (ring.cache_key, n, shape)
        if key not in cache:
            cache[key] = census.tally_determinants(ring, n, shape)
        return cache[key]

    return _get
