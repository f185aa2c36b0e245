"""Parameter sweeps over theta: observables per grid point, CSV emission,
zero crossings and extrema of observable series.

A sweep solves for the lowest Sz-sector state at every grid point, then
extracts pair concurrences (anchored at rung 1), the two-site rung entropy
and its central-difference theta derivative, block entropies for requested
block geometries, and the total rung correlator.
"""

from __future__ import annotations

import csv
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .basis import build_sector
from .eigensolver import lowest_eigenpairs
from .entanglement import (
    concurrence,
    expectation_T,
    reduced_density_matrix,
    von_neumann_entropy,
)
from .hamiltonian import HamiltonianAction, LadderTables, StateVector
from .lattice import LadderSpec, couplings_from_theta

__all__ = [
    "BlockSpec",
    "SweepConfig",
    "SweepRecord",
    "block_sites",
    "theta_grid",
    "run_sweep",
    "write_csv",
    "find_zero_crossing",
    "find_extrema",
]

FAMILIES = ("A", "B", "C", "D")

# the lowest sector state is known to be a unique ground state only for
# theta/pi strictly inside this window; outside it a sweep must opt in
UNIQUE_WINDOW = (-0.40, 0.95)


@dataclass(frozen=True)
class BlockSpec:
    """One requested block geometry: family A single, B stripe, C zigzag,
    D one-leg, with l sites."""

    family: str
    l: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"family must be one of {FAMILIES}, got {self.family!r}")
        if self.l < 1:
            raise ValueError(f"block size must be positive, got {self.l}")

    @property
    def label(self) -> str:
        return f"{self.family}{self.l}"


def block_sites(family: str, l: int, spec: LadderSpec) -> list[int]:
    """Site list of one block geometry on the given ladder.

    A: both legs of rungs 1..l/2 (contiguous square block).
    B: both legs of rungs 1, 3, 5, ..., l-1 (stripe of every other rung).
    C: staircase, leg 1 on odd rungs and leg 2 on even rungs, rungs 1..l.
    D: leg 1 of rungs 1..l.
    """
    L, N = spec.L, spec.N
    if family == "A":
        if l % 2 or not 2 <= l <= N // 2:
            raise ValueError(f"family A needs even l in 2..{N // 2}, got {l}")
        sites = []
        for r in range(1, l // 2 + 1):
            sites += [spec.site(1, r), spec.site(2, r)]
        return sites
    if family == "B":
        if l % 2 or l // 2 > math.ceil(L / 2):
            raise ValueError(
                f"family B needs even l with l/2 <= {math.ceil(L / 2)}, got {l}"
            )
        sites = []
        for r in range(1, l, 2):
            sites += [spec.site(1, r), spec.site(2, r)]
        return sites
    if family == "C":
        if not 1 <= l <= L:
            raise ValueError(f"family C needs l in 1..{L}, got {l}")
        return [spec.site(1 if r % 2 else 2, r) for r in range(1, l + 1)]
    if family == "D":
        if not 1 <= l <= L:
            raise ValueError(f"family D needs l in 1..{L}, got {l}")
        return [spec.site(1, r) for r in range(1, l + 1)]
    raise ValueError(f"unknown family {family!r}")


@dataclass(frozen=True)
class SweepConfig:
    """Grid and measurement plan for run_sweep."""

    L: int
    thetas_over_pi: tuple[float, ...]
    bc: str = "periodic"
    blocks: tuple[BlockSpec, ...] = ()
    pairs: tuple[str, ...] = ("rung", "leg", "diag")
    twoSz: int = 0
    seed: int = 0
    tol: float = 1e-12
    out: str | None = None
    workers: int = 1
    allow_degenerate: bool = False

    def __post_init__(self):
        object.__setattr__(self, "thetas_over_pi", tuple(float(t) for t in self.thetas_over_pi))
        object.__setattr__(self, "blocks", tuple(self.blocks))
        object.__setattr__(self, "pairs", tuple(self.pairs))
        for p in self.pairs:
            if p not in ("rung", "leg", "diag"):
                raise ValueError(f"unknown pair kind {p!r}")


@dataclass
class SweepRecord:
    """Observables at one grid point.  dEr_dtheta (with theta in radians) is
    filled by central difference on interior points only."""

    thetaOverPi: float
    E0: float
    gap: float
    C_rung: float | None
    C_leg: float | None
    C_diag: float | None
    E_rung2site: float
    dEr_dtheta: float | None
    Ev: dict[str, float]
    T_expect: float
    degenerate: bool


def theta_grid(start: float, stop: float, step: float) -> tuple[float, ...]:
    """Inclusive uniform grid in units of pi, robust to float stepping."""
    n = int(round((stop - start) / step))
    if n < 0 or abs(start + n * step - stop) > 1e-9:
        raise ValueError(f"grid ({start}, {stop}, {step}) misses its endpoint")
    return tuple(start + i * step for i in range(n + 1))


def _measure(spec, basis, tables, cfg: SweepConfig, t_over_pi: float) -> SweepRecord:
    couplings = couplings_from_theta(t_over_pi * math.pi)
    action = HamiltonianAction(spec, couplings, basis, tables)
    k = min(2, basis.dim)
    res = lowest_eigenpairs(action.matvec, basis.dim, k=k, seed=cfg.seed, tol=cfg.tol)
    psi = StateVector(basis, res.vectors[:, 0])

    s = spec.site
    pair_sites = {
        "rung": (s(1, 1), s(2, 1)),
        "leg": (s(1, 1), s(1, 2)),
        "diag": (s(1, 1), s(2, 2)),
    }
    conc: dict[str, float | None] = {"rung": None, "leg": None, "diag": None}
    for name in cfg.pairs:
        conc[name] = concurrence(reduced_density_matrix(psi, pair_sites[name]))

    rho_rung = reduced_density_matrix(psi, pair_sites["rung"])
    ev = {
        b.label: von_neumann_entropy(
            reduced_density_matrix(psi, block_sites(b.family, b.l, spec))
        )
        for b in cfg.blocks
    }
    return SweepRecord(
        thetaOverPi=t_over_pi,
        E0=float(res.energies[0]),
        gap=float(res.energies[1] - res.energies[0]) if k >= 2 else float("nan"),
        C_rung=conc["rung"],
        C_leg=conc["leg"],
        C_diag=conc["diag"],
        E_rung2site=von_neumann_entropy(rho_rung),
        dEr_dtheta=None,
        Ev=ev,
        T_expect=expectation_T(psi),
        degenerate=res.degenerate,
    )


_WORKER_CACHE: dict = {}


def _solve_point(args) -> SweepRecord:
    cfg, t_over_pi = args
    key = (cfg.L, cfg.bc, cfg.twoSz)
    if key not in _WORKER_CACHE:
        spec = LadderSpec(L=cfg.L, bc=cfg.bc)
        basis = build_sector(spec.N, cfg.twoSz)
        _WORKER_CACHE[key] = (spec, basis, LadderTables(spec, basis))
    spec, basis, tables = _WORKER_CACHE[key]
    return _measure(spec, basis, tables, cfg, t_over_pi)


def run_sweep(config: SweepConfig) -> list[SweepRecord]:
    """Solve every grid point, fill derivatives, optionally write CSV.

    Grid points must stay strictly inside the uniqueness window unless
    allow_degenerate is set; an eigensolver failure anywhere aborts the whole
    sweep with the offending theta in the error message.
    """
    lo, hi = UNIQUE_WINDOW
    if not config.allow_degenerate:
        for t in config.thetas_over_pi:
            if not lo + 1e-12 < t < hi - 1e-12:
                raise ValueError(
                    f"theta = {t}*pi is outside the open uniqueness window "
                    f"({lo}*pi, {hi}*pi); set allow_degenerate to sweep there"
                )

    jobs = [(config, t) for t in config.thetas_over_pi]
    if config.workers > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            records = list(pool.map(_solve_point, jobs))
    else:
        spec = LadderSpec(L=config.L, bc=config.bc)
        basis = build_sector(spec.N, config.twoSz)
        tables = LadderTables(spec, basis)
        records = []
        for _, t in jobs:
            try:
                records.append(_measure(spec, basis, tables, config, t))
            except Exception as exc:
                raise RuntimeError(f"sweep failed at theta = {t}*pi: {exc}") from exc

    for i in range(1, len(records) - 1):
        dtheta = (records[i + 1].thetaOverPi - records[i - 1].thetaOverPi) * math.pi
        records[i].dEr_dtheta = (
            records[i + 1].E_rung2site - records[i - 1].E_rung2site
        ) / dtheta

    if config.out is not None:
        write_csv(records, config.blocks, config.out)
    return records


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "1" if x else "0"
    return format(x, ".12g")


def csv_header(blocks) -> list[str]:
    head = [
        "thetaOverPi", "E0", "gap", "C_rung", "C_leg", "C_diag",
        "E_rung2site", "dEr_dtheta",
    ]
    head += [f"Ev_{b.label}" for b in blocks]
    head += ["T_expect", "degenerate"]
    return head


def record_row(rec: SweepRecord, blocks) -> list[str]:
    row = [
        _fmt(rec.thetaOverPi), _fmt(rec.E0), _fmt(rec.gap),
        _fmt(rec.C_rung), _fmt(rec.C_leg), _fmt(rec.C_diag),
        _fmt(rec.E_rung2site), _fmt(rec.dEr_dtheta),
    ]
    row += [_fmt(rec.Ev[b.label]) for b in blocks]
    row += [_fmt(rec.T_expect), _fmt(rec.degenerate)]
    return row


def write_csv(records, blocks, path_or_file) -> None:
    """One row per grid point, floats at 12 significant digits."""
    if hasattr(path_or_file, "write"):
        w = csv.writer(path_or_file, lineterminator="\n")
        w.writerow(csv_header(blocks))
        for rec in records:
            w.writerow(record_row(rec, blocks))
        return
    with open(path_or_file, "w", newline="") as fh:
        write_csv(records, blocks, fh)


def find_zero_crossing(series) -> list[float]:
    """Zero crossings of a sampled series by linear interpolation.

    series is an iterable of (theta, value); exact zeros report the sample
    point itself.  Empty list when the sign never changes.
    """
    pts = [(float(t), float(y)) for t, y in series]
    out: list[float] = []
    for (t0, y0), (t1, y1) in zip(pts, pts[1:]):
        if y0 == 0.0:
            out.append(t0)
        elif y0 * y1 < 0.0:
            out.append(t0 - y0 * (t1 - t0) / (y1 - y0))
    if pts and pts[-1][1] == 0.0:
        out.append(pts[-1][0])
    return out


def find_extrema(series) -> list[tuple[float, float, str]]:
    """Interior local extrema of a sampled series.

    Equal-value runs are treated as one plateau and reported at their
    midpoint.  Returns (theta, value, kind) with kind 'max' or 'min';
    endpoints never qualify.
    """
    pts = [(float(t), float(y)) for t, y in series]
    runs: list[list[float]] = []  # [t_first, t_last, y]
    for t, y in pts:
        if runs and runs[-1][2] == y:
            runs[-1][1] = t
        else:
            runs.append([t, t, y])
    out = []
    for prev, cur, nxt in zip(runs, runs[1:], runs[2:]):
        if cur[2] > prev[2] and cur[2] > nxt[2]:
            kind = "max"
        elif cur[2] < prev[2] and cur[2] < nxt[2]:
            kind = "min"
        else:
            continue
        out.append(((cur[0] + cur[1]) / 2.0, cur[2], kind))
    return out
