"""Matrix-free action of the ladder Hamiltonian on fixed-Sz state vectors.

The Hamiltonian is

    H = Jr * sum_i S1i.S2i + Jl * sum_bonds S.S + K * sum_i (P_i + Pinv_i)

where P_i cyclically rotates the four spins of plaquette i clockwise.  The
production path applies the ring term as a pair of basis permutations; the
spin-operator decomposition of P + Pinv is kept alongside as an independent
cross-check route and is not used in solves.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .basis import SectorBasis, build_sector
from .lattice import Couplings, LadderSpec, Plaquette, enumerate_terms

__all__ = [
    "StateVector",
    "LadderTables",
    "HamiltonianAction",
    "apply_ring_permutation",
    "apply_hamiltonian",
    "apply_ring_decomposed",
    "apply_T",
]


@dataclass
class StateVector:
    """Real amplitudes over one sector basis."""

    basis: SectorBasis
    amps: np.ndarray

    def __post_init__(self):
        self.amps = np.asarray(self.amps, dtype=np.float64)
        if self.amps.shape != (self.basis.dim,):
            raise ValueError(
                f"amplitude count {self.amps.shape} does not match "
                f"sector dimension {self.basis.dim}"
            )

    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    def dot(self, other: "StateVector") -> float:
        return float(self.amps @ other.amps)


def apply_ring_permutation(plaquette: Plaquette, config, inverse: bool = False):
    """Rotate the four spins of one plaquette in a configuration mask.

    Forward rotation moves the value on a to b, b to c, c to d and d to a,
    so position a receives the old d value.  Works elementwise on integer
    arrays as well as on single masks.
    """
    a, b, c, d = plaquette.a, plaquette.b, plaquette.c, plaquette.d
    va = (config >> a) & 1
    vb = (config >> b) & 1
    vc = (config >> c) & 1
    vd = (config >> d) & 1
    cleared = config & ~((1 << a) | (1 << b) | (1 << c) | (1 << d))
    if inverse:
        return cleared | (vb << a) | (vc << b) | (vd << c) | (va << d)
    return cleared | (vd << a) | (va << b) | (vb << c) | (vc << d)


def _bond_tables(states: np.ndarray, basis: SectorBasis, i: int, j: int):
    """Diagonal and flip-flop index tables for one S_i . S_j bond.

    Returns (diag, sel, tgt): diag holds the +-1/4 SzSz weights, and the
    flip-flop part sends amplitude at sel to tgt with weight 1/2.
    """
    bi = (states >> i) & 1
    bj = (states >> j) & 1
    anti = bi != bj
    diag = np.where(anti, -0.25, 0.25)
    sel = np.nonzero(anti)[0].astype(np.int64)
    flipped = states[sel] ^ ((np.int64(1) << i) | (np.int64(1) << j))
    tgt = basis.rank_many(flipped)
    # rank_many already rejects sector escapes; cross-check the map itself
    assert np.array_equal(states[tgt], flipped)
    return diag, sel, tgt


def _perm_table(states: np.ndarray, basis: SectorBasis, plaq: Plaquette):
    """Index map fwd with states[fwd[k]] = forward-rotated states[k]."""
    rotated = apply_ring_permutation(plaq, states)
    fwd = basis.rank_many(rotated)
    assert np.array_equal(states[fwd], rotated)
    return fwd


class LadderTables:
    """Coupling-independent scatter tables for one (geometry, sector) pair.

    Building costs O(N * dim) per term; share one instance across all theta
    values of a sweep.  Read-only after construction, safe to use from
    concurrent solves.
    """

    def __init__(self, spec: LadderSpec, basis: SectorBasis):
        if basis.N != spec.N:
            raise ValueError(f"basis is for {basis.N} sites, ladder has {spec.N}")
        self.spec = spec
        self.basis = basis
        rung_bonds, leg_bonds, plaquettes = enumerate_terms(spec)
        states = basis.states
        self.diag_rung = np.zeros(basis.dim)
        self.rung_flips = []
        for i, j in rung_bonds:
            diag, sel, tgt = _bond_tables(states, basis, i, j)
            self.diag_rung += diag
            self.rung_flips.append((sel, tgt))
        self.diag_leg = np.zeros(basis.dim)
        self.leg_flips = []
        for i, j in leg_bonds:
            diag, sel, tgt = _bond_tables(states, basis, i, j)
            self.diag_leg += diag
            self.leg_flips.append((sel, tgt))
        self.perms = [_perm_table(states, basis, p) for p in plaquettes]


class HamiltonianAction:
    """H bound to concrete couplings, exposing matvec on raw amplitude arrays."""

    def __init__(
        self,
        spec: LadderSpec,
        couplings: Couplings,
        basis: SectorBasis,
        tables: LadderTables | None = None,
    ):
        if tables is None:
            tables = LadderTables(spec, basis)
        if tables.spec != spec or tables.basis is not basis:
            raise ValueError("tables were built for a different geometry or sector")
        self.spec = spec
        self.couplings = couplings
        self.basis = basis
        self.tables = tables
        self.diag = couplings.Jr * tables.diag_rung + couplings.Jl * tables.diag_leg

    @property
    def dim(self) -> int:
        return self.basis.dim

    def matvec(self, v: np.ndarray) -> np.ndarray:
        v = np.asarray(v, dtype=np.float64)
        t = self.tables
        Jr, Jl, K = self.couplings.Jr, self.couplings.Jl, self.couplings.K
        out = self.diag * v
        for sel, tgt in t.rung_flips:
            out[tgt] += (0.5 * Jr) * v[sel]
        for sel, tgt in t.leg_flips:
            out[tgt] += (0.5 * Jl) * v[sel]
        if K != 0.0:
            for fwd in t.perms:
                out[fwd] += K * v  # forward rotation
                out += K * v[fwd]  # inverse rotation, same table transposed
        return out


def apply_hamiltonian(
    spec: LadderSpec,
    couplings: Couplings,
    basis: SectorBasis,
    v: StateVector,
) -> StateVector:
    """H applied to one state vector.  Builds tables on the fly; for repeated
    application at many couplings construct HamiltonianAction with shared
    LadderTables instead."""
    if v.basis is not basis:
        raise ValueError("state vector lives on a different basis object")
    action = HamiltonianAction(spec, couplings, basis)
    return StateVector(basis, action.matvec(v.amps))


def _pair_action(basis: SectorBasis, i: int, j: int, v: np.ndarray) -> np.ndarray:
    """(S_i . S_j) applied to raw amplitudes, recomputing tables each call."""
    states = basis.states
    diag, sel, tgt = _bond_tables(states, basis, i, j)
    out = diag * v
    out[tgt] += 0.5 * v[sel]
    return out


def apply_ring_decomposed(plaquettes, basis: SectorBasis, v: StateVector) -> StateVector:
    """sum over plaquettes of (P + Pinv) via the spin-operator decomposition.

    Per plaquette (a, b, c, d):

        P + Pinv = 1/4 + sum of S.S over the four edges and both diagonals
                   + 4 [ (Sa.Sb)(Sc.Sd) + (Sa.Sd)(Sb.Sc) - (Sa.Sc)(Sb.Sd) ]

    Slow reference route for cross-checking the permutation path only.
    """
    if v.basis is not basis:
        raise ValueError("state vector lives on a different basis object")
    w = v.amps
    out = np.zeros_like(w)
    for p in plaquettes:
        a, b, c, d = p.sites
        out += 0.25 * w
        for i, j in ((a, b), (b, c), (c, d), (d, a), (a, c), (b, d)):
            out += _pair_action(basis, i, j, w)
        for (i, j), (k, l) in (((a, b), (c, d)), ((a, d), (b, c))):
            out += 4.0 * _pair_action(basis, i, j, _pair_action(basis, k, l, w))
        out -= 4.0 * _pair_action(basis, a, c, _pair_action(basis, b, d, w))
    return StateVector(basis, out)


def apply_T(basis: SectorBasis, v: StateVector) -> StateVector:
    """(sum_i S1i . S2i) applied to v; the rung sum read off from basis.N."""
    if v.basis is not basis:
        raise ValueError("state vector lives on a different basis object")
    out = np.zeros_like(v.amps)
    for rung in range(basis.N // 2):
        out += _pair_action(basis, 2 * rung, 2 * rung + 1, v.amps)
    return StateVector(basis, out)
