"""Reduced density matrices, entropies, concurrence and rung observables.

Block basis convention: the first listed site is the most significant qubit,
spin up is 1, so a two-site block is ordered {|dd>, |du>, |ud>, |uu>} and the
rung coherence z sits at entry (2, 1) = <ud| rho |du>.  All entropies are in
bits.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg
import scipy.sparse

from .basis import SectorBasis
from .hamiltonian import StateVector, _pair_action

__all__ = [
    "DensityMatrix",
    "RungRdmParams",
    "reduced_density_matrix",
    "von_neumann_entropy",
    "concurrence",
    "rung_rdm_params",
    "rung_entropy_from_z",
    "rung_correlator",
    "expectation_T",
]

RDM_MAX_SITES = 14

# entropy eigenvalues below this are treated as exact zeros
EIG_FLOOR = 1e-14

Z_MIN, Z_MAX = -0.5, 1.0 / 6.0


@dataclass
class DensityMatrix:
    """Reduced density matrix of an ordered site block.

    rho is real 2^l x 2^l, block-diagonal in the block up-count because the
    global state has fixed Sz.
    """

    sites: tuple[int, ...]
    rho: np.ndarray

    @property
    def n_sites(self) -> int:
        return len(self.sites)

    def sz_sectors(self) -> list[np.ndarray]:
        """Index groups of equal block up-count, in ascending count order."""
        idx = np.arange(2 ** self.n_sites, dtype=np.uint64)
        pop = np.bitwise_count(idx)
        return [np.nonzero(pop == u)[0] for u in range(self.n_sites + 1)]

    def eigenvalues(self) -> np.ndarray:
        """Full spectrum, computed sector by sector, descending."""
        lam = np.concatenate(
            [scipy.linalg.eigvalsh(self.rho[np.ix_(g, g)]) for g in self.sz_sectors()]
        )
        return np.sort(lam)[::-1]


@dataclass(frozen=True)
class RungRdmParams:
    """Populations and coherence of the U(1)-structured two-site rung RDM."""

    uPlus: float
    uMinus: float
    w1: float
    w2: float
    z: float


def reduced_density_matrix(state: StateVector, sites) -> DensityMatrix:
    """Trace out everything but the given sites of a pure sector state.

    Amplitudes are bucketed by (block pattern, environment pattern); only
    equal-environment pairs survive the trace, so the work is O(dim) plus a
    sparse rank-revealing product instead of a 4^l full trace.
    """
    sites = tuple(int(s) for s in sites)
    N = state.basis.N
    l = len(sites)
    if len(set(sites)) != l:
        raise ValueError("block sites must be distinct")
    if any(s < 0 or s >= N for s in sites):
        raise ValueError(f"block sites must lie in 0..{N - 1}")
    if not 1 <= l <= N - 1:
        raise ValueError(f"block size must be in 1..{N - 1}, got {l}")
    if l > RDM_MAX_SITES:
        raise ValueError(f"block size capped at {RDM_MAX_SITES} sites, got {l}")

    masks = state.basis.states
    block = np.zeros(state.basis.dim, dtype=np.int64)
    for t, s in enumerate(sites):
        block |= ((masks >> s) & 1) << (l - 1 - t)  # sites[0] most significant
    env = np.zeros(state.basis.dim, dtype=np.int64)
    pos = 0
    for s in range(N):
        if s not in sites:
            env |= ((masks >> s) & 1) << pos
            pos += 1

    env_codes, env_col = np.unique(env, return_inverse=True)
    A = scipy.sparse.coo_matrix(
        (state.amps, (block, env_col)), shape=(2**l, len(env_codes))
    ).tocsr()
    rho = (A @ A.T).toarray()
    return DensityMatrix(sites=sites, rho=rho)


def _spectrum(rho) -> np.ndarray:
    if isinstance(rho, DensityMatrix):
        return rho.eigenvalues()
    return scipy.linalg.eigvalsh(np.asarray(rho, dtype=np.float64))


def von_neumann_entropy(rho) -> float:
    """-sum lam log2 lam over the spectrum, with 0 log 0 = 0.

    Accepts a DensityMatrix or a plain Hermitian matrix.
    """
    lam = _spectrum(rho)
    lam = lam[lam > EIG_FLOOR]
    return float(-np.sum(lam * np.log2(lam)))


_SYSY = np.array(
    [
        [0.0, 0.0, 0.0, -1.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0],
    ]
)


def concurrence(rho) -> float:
    """Wootters concurrence of a two-site density matrix.

    C = max(l1 - l2 - l3 - l4, 0) with l_i the descending square roots of
    the eigenvalues of rho (sy x sy) rho* (sy x sy).
    """
    if isinstance(rho, DensityMatrix):
        rho = rho.rho
    rho = np.asarray(rho, dtype=np.float64)
    if rho.shape != (4, 4):
        raise ValueError(f"concurrence needs a 4x4 matrix, got shape {rho.shape}")
    if np.max(np.abs(rho - rho.T)) > 1e-10:
        raise ValueError("two-site density matrix is not symmetric")
    # For real symmetric rho the square roots of the eigenvalues of
    # rho (sy x sy) rho (sy x sy) are |eig(sqrt(rho) (sy x sy) sqrt(rho))|,
    # a Hermitian problem.  The asymmetric-product route loses ~sqrt(eps)
    # on the zero eigenvalues of pure states; this one does not.
    w, U = np.linalg.eigh(rho)
    if w[0] < -1e-12:
        raise ValueError(f"density matrix has eigenvalue {w[0]:.3e} < -1e-12")
    root = (U * np.sqrt(np.clip(w, 0.0, None))) @ U.T
    lam = np.sort(np.abs(np.linalg.eigvalsh(root @ _SYSY @ root)))[::-1]
    return float(max(lam[0] - lam[1] - lam[2] - lam[3], 0.0))


def rung_rdm_params(rho) -> RungRdmParams:
    """Extract (u+, u-, w1, w2, z) from a U(1)-structured two-site RDM.

    The only entries allowed are the four populations and the single
    <ud|rho|du> coherence; anything else signals a state that does not
    conserve Sz and is rejected.
    """
    if isinstance(rho, DensityMatrix):
        rho = rho.rho
    rho = np.asarray(rho, dtype=np.float64)
    if rho.shape != (4, 4):
        raise ValueError(f"rung RDM must be 4x4, got shape {rho.shape}")
    allowed = {(0, 0), (1, 1), (2, 2), (3, 3), (1, 2), (2, 1)}
    stray = max(
        abs(rho[r, c]) for r in range(4) for c in range(4) if (r, c) not in allowed
    )
    if stray > 1e-10:
        raise ValueError(
            f"off-pattern entry of magnitude {stray:.3e}: not a fixed-Sz rung RDM"
        )
    if abs(rho[1, 2] - rho[2, 1]) > 1e-10:
        raise ValueError("coherence entries are not symmetric")
    return RungRdmParams(
        uPlus=float(rho[0, 0]),
        w1=float(rho[1, 1]),
        w2=float(rho[2, 2]),
        uMinus=float(rho[3, 3]),
        z=float(rho[2, 1]),
    )


def rung_entropy_from_z(z: float) -> float:
    """Rung entropy of the SU(2)-symmetric RDM parameterized by z alone.

    With u = (1 + 2z)/4 the spectrum is {u, u, u, (1 - 6z)/4}; valid for
    -1/2 <= z <= 1/6 where all four eigenvalues are nonnegative.
    """
    if not Z_MIN - 1e-12 <= z <= Z_MAX + 1e-12:
        raise ValueError(f"z = {z} outside the physical range [-1/2, 1/6]")
    u = (1.0 + 2.0 * z) / 4.0
    rest = (1.0 - 6.0 * z) / 4.0
    ent = 0.0
    if u > EIG_FLOOR:
        ent -= 3.0 * u * np.log2(u)
    if rest > EIG_FLOOR:
        ent -= rest * np.log2(rest)
    return float(ent)


def rung_correlator(state: StateVector, rung: int) -> float:
    """<S1i . S2i> on rung i (1-based)."""
    L = state.basis.N // 2
    if not 1 <= rung <= L:
        raise ValueError(f"rung must be in 1..{L}, got {rung}")
    lo = 2 * (rung - 1)
    return float(state.amps @ _pair_action(state.basis, lo, lo + 1, state.amps))


def expectation_T(state: StateVector) -> float:
    """<sum_i S1i . S2i>, the total rung correlator."""
    return sum(rung_correlator(state, r) for r in range(1, state.basis.N // 2 + 1))
