"""Lowest eigenpairs of the matrix-free Hamiltonian.

Krylov iteration (implicitly restarted Lanczos) on a LinearOperator wrapper,
with a deterministic seeded start vector, explicit residual verification and
a dense brute-force oracle for small sectors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg
import scipy.sparse.linalg

__all__ = ["EigenResult", "EigensolverError", "lowest_eigenpairs", "dense_oracle"]

DENSE_ORACLE_MAX_DIM = 4096

# gap below this relative threshold flags the ground state as degenerate
DEGENERACY_RTOL = 1e-8


class EigensolverError(RuntimeError):
    """Raised when the iteration fails to meet the residual contract."""


@dataclass
class EigenResult:
    """k lowest eigenpairs: ascending energies, column eigenvectors,
    verified residual norms and a ground-state degeneracy flag."""

    energies: np.ndarray
    vectors: np.ndarray  # shape (dim, k), unit columns
    residuals: np.ndarray
    degenerate: bool


def _as_matvec(applyH):
    if callable(applyH):
        return applyH
    return applyH.matvec


def _canonical_sign(vectors: np.ndarray) -> np.ndarray:
    # fix each column's overall sign so runs are bitwise comparable
    for col in range(vectors.shape[1]):
        lead = np.argmax(np.abs(vectors[:, col]))
        if vectors[lead, col] < 0:
            vectors[:, col] = -vectors[:, col]
    return vectors


def _materialize(mv, dim: int) -> np.ndarray:
    H = np.empty((dim, dim))
    e = np.zeros(dim)
    for j in range(dim):
        e[j] = 1.0
        H[:, j] = mv(e)
        e[j] = 0.0
    return H


def lowest_eigenpairs(
    applyH,
    dim: int,
    k: int = 2,
    seed: int = 0,
    tol: float = 1e-12,
) -> EigenResult:
    """k lowest eigenpairs of a symmetric operator given by its action.

    applyH is a callable v -> H v on length-dim arrays (or an object with a
    matvec method).  Deterministic for a fixed seed.  Each returned pair
    satisfies ||H v - E v|| <= tol * max(1, |E|); failure to converge raises
    EigensolverError carrying the best residual reached.
    """
    if not 1 <= k <= dim:
        raise ValueError(f"need 1 <= k <= dim, got k={k}, dim={dim}")
    mv = _as_matvec(applyH)

    if dim <= max(16, 4 * k + 4):
        # tiny sector: dense solve is cheaper and has no iteration to tune
        H = _materialize(mv, dim)
        energies, vectors = scipy.linalg.eigh(H)
        energies, vectors = energies[:k].copy(), vectors[:, :k].copy()
    else:
        rng = np.random.default_rng(seed)
        v0 = rng.uniform(-1.0, 1.0, dim)
        v0 /= np.linalg.norm(v0)
        op = scipy.sparse.linalg.LinearOperator(
            (dim, dim), matvec=mv, dtype=np.float64
        )
        ncv = min(dim, max(40, 4 * k + 2))
        try:
            energies, vectors = scipy.sparse.linalg.eigsh(
                op, k=k, which="SA", v0=v0, ncv=ncv, tol=0
            )
        except scipy.sparse.linalg.ArpackNoConvergence as exc:
            got = len(exc.eigenvalues)
            best = np.inf
            if got:
                r = [
                    np.linalg.norm(mv(exc.eigenvectors[:, c]) - exc.eigenvalues[c] * exc.eigenvectors[:, c])
                    for c in range(got)
                ]
                best = float(min(r))
            raise EigensolverError(
                f"Lanczos did not converge: {got}/{k} pairs, best residual {best:.3e}"
            ) from exc
        order = np.argsort(energies)
        energies, vectors = energies[order], vectors[:, order]

    vectors = _canonical_sign(np.ascontiguousarray(vectors))
    residuals = np.array(
        [
            np.linalg.norm(mv(vectors[:, c]) - energies[c] * vectors[:, c])
            for c in range(k)
        ]
    )
    bound = tol * np.maximum(1.0, np.abs(energies))
    if np.any(residuals > bound):
        worst = int(np.argmax(residuals - bound))
        raise EigensolverError(
            f"residual contract violated: pair {worst} has "
            f"||Hv - Ev|| = {residuals[worst]:.3e} > {bound[worst]:.3e}"
        )
    degenerate = False
    if k >= 2:
        degenerate = (energies[1] - energies[0]) < DEGENERACY_RTOL * max(
            1.0, abs(energies[0])
        )
    return EigenResult(
        energies=energies, vectors=vectors, residuals=residuals, degenerate=bool(degenerate)
    )


def dense_oracle(applyH, dim: int) -> np.ndarray:
    """Full spectrum by materializing the operator column by column.

    Brute-force cross-check for small sectors; refuses dim > 4096.
    """
    if dim > DENSE_ORACLE_MAX_DIM:
        raise ValueError(f"dense oracle capped at dim {DENSE_ORACLE_MAX_DIM}, got {dim}")
    H = _materialize(_as_matvec(applyH), dim)
    asym = np.max(np.abs(H - H.T))
    if asym > 1e-10 * max(1.0, np.max(np.abs(H))):
        raise ValueError(f"operator is not symmetric (max asymmetry {asym:.3e})")
    return scipy.linalg.eigvalsh(H)
