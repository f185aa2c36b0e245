"""Enumeration and ranking of fixed-magnetization bitmask bases.

A configuration is a bitmask where bit s set means spin up at site s.  The
sector with 2*Sz = twoSz holds every mask of popcount N/2 + Sz, enumerated in
ascending numeric order.  Lookup uses the combinatorial number system: the
ordinal of a mask with set bits p_1 < p_2 < ... < p_k is sum_j C(p_j, j).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

import numpy as np

__all__ = ["SectorBasis", "build_sector", "index_of"]

N_MAX = 32


def _binomial_table(n: int, k: int) -> np.ndarray:
    """Table C[p, j] = binomial(p, j) for 0 <= p <= n, 0 <= j <= k."""
    tab = np.zeros((n + 1, k + 1), dtype=np.int64)
    for p in range(n + 1):
        for j in range(min(p, k) + 1):
            tab[p, j] = comb(p, j)
    return tab


def _enumerate_masks(n: int, k: int, tab: np.ndarray) -> np.ndarray:
    """All n-bit masks of popcount k, ascending, by combinatorial unranking."""
    dim = comb(n, k)
    masks = np.zeros(dim, dtype=np.int64)
    rem = np.arange(dim, dtype=np.int64)
    left = np.full(dim, k, dtype=np.int64)  # bits still to place per mask
    for pos in range(n - 1, -1, -1):
        c = tab[pos, np.minimum(left, k)]
        take = (left > 0) & (rem >= c)
        masks[take] |= np.int64(1) << pos
        rem[take] -= c[take]
        left[take] -= 1
    return masks


@dataclass(frozen=True)
class SectorBasis:
    """Complete ascending basis of one fixed-Sz sector.

    states[k] is the k-th configuration mask; rank_many inverts the
    enumeration in O(N) vectorized passes.  Immutable after construction.
    """

    N: int
    twoSz: int
    states: np.ndarray
    _tab: np.ndarray = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.states)

    @property
    def n_up(self) -> int:
        return (self.N + self.twoSz) // 2

    def rank_many(self, configs) -> np.ndarray:
        """Ordinals of an array of in-sector masks.

        Every input must carry the sector popcount; anything else means a
        computation escaped the sector and is reported as an error.
        """
        configs = np.asarray(configs, dtype=np.int64)
        if np.any(np.bitwise_count(configs.astype(np.uint64)) != self.n_up):
            raise ValueError("configuration not in sector: wrong spin-up count")
        rank = np.zeros(configs.shape, dtype=np.int64)
        seen = np.zeros(configs.shape, dtype=np.int64)
        for pos in range(self.N):
            isset = (configs >> pos) & 1 == 1
            seen[isset] += 1
            rank[isset] += self._tab[pos, seen[isset]]
        return rank

    def index(self, config: int) -> int:
        """Ordinal of a single configuration mask."""
        config = int(config)
        if config < 0 or config >> self.N:
            raise ValueError(f"mask {config:#x} uses bits outside 0..{self.N - 1}")
        if config.bit_count() != self.n_up:
            raise ValueError(
                f"mask {config:#x} has {config.bit_count()} up spins, "
                f"sector needs {self.n_up}"
            )
        return int(self.rank_many(np.asarray([config]))[0])


def build_sector(N: int, twoSz: int) -> SectorBasis:
    """Enumerate the full sector of N sites with total 2*Sz = twoSz."""
    if N <= 0 or N % 2:
        raise ValueError(f"N must be a positive even site count, got {N}")
    if N > N_MAX:
        raise ValueError(f"N = {N} exceeds the {N_MAX}-site capacity")
    if abs(twoSz) > N or (N + twoSz) % 2:
        raise ValueError(f"no sector with twoSz = {twoSz} on {N} sites")
    n_up = (N + twoSz) // 2
    tab = _binomial_table(N, max(n_up, 1))
    states = _enumerate_masks(N, n_up, tab)
    return SectorBasis(N=N, twoSz=twoSz, states=states, _tab=tab)


def index_of(basis: SectorBasis, config: int) -> int:
    """Ordinal of config in the basis; raises if config is not in the sector."""
    return basis.index(config)
