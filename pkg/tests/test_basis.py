from math import comb

import numpy as np
import pytest

from ringladder import build_sector, index_of


def test_small_sector_dimensions():
    assert build_sector(4, 0).dim == 6
    assert build_sector(4, 4).dim == 1
    assert build_sector(4, -4).dim == 1
    assert build_sector(6, 2).dim == comb(6, 4)


def test_large_sector_dimension():
    basis = build_sector(24, 0)
    assert basis.dim == 2_704_156


def test_dimensions_match_binomial():
    for N in (2, 4, 6, 8, 10, 12):
        for twoSz in range(-N, N + 1, 2):
            assert build_sector(N, twoSz).dim == comb(N, (N + twoSz) // 2)
    # capacity edge, small sectors only
    assert build_sector(28, 24).dim == comb(28, 26)
    assert build_sector(28, -24).dim == comb(28, 2)


def test_enumeration_ascending_same_popcount():
    basis = build_sector(10, 2)
    states = basis.states
    assert np.all(states[1:] > states[:-1])
    assert np.all(np.bitwise_count(states.astype(np.uint64)) == basis.n_up)


def test_all_up_sector():
    basis = build_sector(4, 4)
    assert basis.states[0] == 0b1111


def test_extreme_ordinals():
    basis = build_sector(8, 0)
    assert basis.index(int(basis.states[0])) == 0
    assert basis.index(int(basis.states[-1])) == basis.dim - 1


def test_roundtrip_random_n20():
    basis = build_sector(20, 0)
    rng = np.random.default_rng(42)
    ks = rng.integers(0, basis.dim, size=1000)
    got = basis.rank_many(basis.states[ks])
    assert np.array_equal(got, ks)
    # scalar path too
    for k in ks[:20]:
        assert index_of(basis, int(basis.states[k])) == k


def test_wrong_popcount_rejected():
    basis = build_sector(6, 0)
    with pytest.raises(ValueError):
        index_of(basis, 0b1)
    with pytest.raises(ValueError):
        basis.rank_many(np.array([0b111100, 0b1111]))  # second has popcount 4


def test_out_of_range_bits_rejected():
    basis = build_sector(4, 0)
    with pytest.raises(ValueError):
        basis.index(0b110000)  # popcount 2 but bits above site 3


def test_invalid_sector_requests():
    with pytest.raises(ValueError):
        build_sector(34, 0)
    with pytest.raises(ValueError):
        build_sector(4, 6)
    with pytest.raises(ValueError):
        build_sector(4, 1)  # parity mismatch
    with pytest.raises(ValueError):
        build_sector(5, 1)
    with pytest.raises(ValueError):
        build_sector(0, 0)
