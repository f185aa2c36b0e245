import csv
import io
import math

import numpy as np
import pytest

from ringladder import (
    BlockSpec,
    LadderSpec,
    SweepConfig,
    block_sites,
    enumerate_terms,
    find_extrema,
    find_zero_crossing,
    run_sweep,
    theta_grid,
    write_csv,
)


def crossing_bonds(spec, sites):
    rung, leg, _ = enumerate_terms(spec)
    inside = set(sites)
    nr = sum((a in inside) != (b in inside) for a, b in rung)
    nl = sum((a in inside) != (b in inside) for a, b in leg)
    return nr, nl


def test_block_family_a():
    spec = LadderSpec(L=6)
    sites = block_sites("A", 4, spec)
    assert sites == [0, 1, 2, 3]
    nr, nl = crossing_bonds(spec, sites)
    assert (nr, nl) == (0, 4)
    # boundary stays at 4 leg bonds for any size
    for l in (2, 4, 6):
        _, nl = crossing_bonds(spec, block_sites("A", l, spec))
        assert nl == 4


def test_block_family_b():
    spec = LadderSpec(L=6)
    sites = block_sites("B", 4, spec)
    assert sites == [spec.site(1, 1), spec.site(2, 1), spec.site(1, 3), spec.site(2, 3)]
    nr, nl = crossing_bonds(spec, sites)
    assert nr == 0 and nl == 2 * 4  # every stripe rung exposes both leg sides


def test_block_family_c():
    spec = LadderSpec(L=6)
    assert block_sites("C", 2, spec) == [spec.site(1, 1), spec.site(2, 2)]
    assert block_sites("C", 5, spec) == [
        spec.site(1, 1), spec.site(2, 2), spec.site(1, 3),
        spec.site(2, 4), spec.site(1, 5),
    ]


def test_block_family_d():
    spec = LadderSpec(L=6)
    sites = block_sites("D", 3, spec)
    assert sites == [spec.site(1, r) for r in (1, 2, 3)]
    nr, nl = crossing_bonds(spec, sites)
    assert (nr, nl) == (3, 2)


def test_block_validation():
    spec = LadderSpec(L=6)
    with pytest.raises(ValueError):
        block_sites("A", 3, spec)  # odd
    with pytest.raises(ValueError):
        block_sites("A", 8, spec)  # above N/2
    with pytest.raises(ValueError):
        block_sites("B", 8, spec)  # l/2 above ceil(L/2)
    with pytest.raises(ValueError):
        block_sites("C", 7, spec)
    with pytest.raises(ValueError):
        block_sites("D", 0, spec)
    with pytest.raises(ValueError):
        block_sites("E", 2, spec)
    with pytest.raises(ValueError):
        BlockSpec(family="Q", l=2)


def test_theta_grid():
    grid = theta_grid(0.10, 0.20, 0.02)
    assert np.allclose(grid, [0.10, 0.12, 0.14, 0.16, 0.18, 0.20])
    assert len(theta_grid(0.0, 0.0, 0.01)) == 1
    with pytest.raises(ValueError):
        theta_grid(0.0, 0.05, 0.02)


def run_small_sweep(**kw):
    # even L: odd periodic rings carry a momentum doublet even inside the
    # uniqueness window, which would trip the degeneracy assertions below
    cfg = SweepConfig(
        L=4,
        thetas_over_pi=theta_grid(0.10, 0.18, 0.02),
        blocks=(BlockSpec("A", 2), BlockSpec("D", 2)),
        seed=0,
        **kw,
    )
    return cfg, run_sweep(cfg)


def test_sweep_records_and_derivative():
    cfg, recs = run_small_sweep()
    assert len(recs) == 5
    assert recs[0].dEr_dtheta is None and recs[-1].dEr_dtheta is None
    for i in (1, 2, 3):
        num = (recs[i + 1].E_rung2site - recs[i - 1].E_rung2site) / (0.04 * math.pi)
        assert recs[i].dEr_dtheta == pytest.approx(num, rel=1e-12)
    for r in recs:
        assert r.degenerate is False
        assert set(r.Ev) == {"A2", "D2"}
        assert r.C_rung is not None and 0.0 <= r.C_rung <= 1.0
        assert math.isfinite(r.T_expect)


def test_sweep_pair_selection():
    cfg = SweepConfig(
        L=3, thetas_over_pi=(0.1,), pairs=("rung",), seed=0
    )
    rec = run_sweep(cfg)[0]
    assert rec.C_rung is not None
    assert rec.C_leg is None and rec.C_diag is None


def test_sweep_window_gate():
    with pytest.raises(ValueError):
        run_sweep(SweepConfig(L=3, thetas_over_pi=(0.96,)))
    with pytest.raises(ValueError):
        run_sweep(SweepConfig(L=3, thetas_over_pi=(-0.40,)))
    # opting in clears the gate
    recs = run_sweep(
        SweepConfig(L=3, thetas_over_pi=(1.0,), allow_degenerate=True)
    )
    assert len(recs) == 1


def test_theta_pi_concurrences_all_equal():
    cfg = SweepConfig(L=4, thetas_over_pi=(1.0,), allow_degenerate=True, seed=0)
    rec = run_sweep(cfg)[0]
    expect = 1.0 / 7.0
    assert rec.C_rung == pytest.approx(expect, abs=1e-8)
    assert rec.C_leg == pytest.approx(expect, abs=1e-8)
    assert rec.C_diag == pytest.approx(expect, abs=1e-8)


def test_rung_concurrence_dominates_at_theta_zero():
    cfg = SweepConfig(L=6, thetas_over_pi=(0.0,), seed=0)
    rec = run_sweep(cfg)[0]
    assert rec.C_rung > rec.C_leg
    assert rec.C_rung > rec.C_diag


def test_csv_round_trip_and_format():
    cfg, recs = run_small_sweep()
    buf = io.StringIO()
    write_csv(recs, cfg.blocks, buf)
    rows = list(csv.reader(io.StringIO(buf.getvalue())))
    assert rows[0] == [
        "thetaOverPi", "E0", "gap", "C_rung", "C_leg", "C_diag",
        "E_rung2site", "dEr_dtheta", "Ev_A2", "Ev_D2", "T_expect", "degenerate",
    ]
    assert len(rows) == 1 + len(recs)
    assert rows[1][7] == ""  # no derivative at the first grid point
    assert float(rows[2][7]) == pytest.approx(recs[1].dEr_dtheta, rel=1e-11)
    # 12 significant digits on float fields
    assert rows[1][1] == format(recs[0].E0, ".12g")
    assert rows[1][11] == "0"


def test_sweep_deterministic():
    _, a = run_small_sweep()
    _, b = run_small_sweep()
    for ra, rb in zip(a, b):
        assert ra == rb


def test_sweep_parallel_matches_sequential(tmp_path):
    cfg = SweepConfig(L=3, thetas_over_pi=(0.10, 0.12, 0.14), seed=0)
    seq = run_sweep(cfg)
    par = run_sweep(
        SweepConfig(L=3, thetas_over_pi=(0.10, 0.12, 0.14), seed=0, workers=2)
    )
    for ra, rb in zip(seq, par):
        assert ra.E0 == rb.E0
        assert ra.E_rung2site == rb.E_rung2site


def test_zero_crossing_basic():
    assert find_zero_crossing([(0.0, -1.0), (1.0, 1.0)]) == [0.5]
    assert find_zero_crossing([(0.0, 1.0), (1.0, 2.0)]) == []
    assert find_zero_crossing([(0.0, -1.0), (0.5, 0.0), (1.0, 1.0)]) == [0.5]
    got = find_zero_crossing([(0.0, -1.0), (1.0, 1.0), (2.0, -1.0)])
    assert got == [0.5, 1.5]


def test_extrema_basic():
    series = [(0.0, 0.0), (1.0, 2.0), (2.0, 0.0), (3.0, -2.0), (4.0, 0.0)]
    got = find_extrema(series)
    assert got == [(1.0, 2.0, "max"), (3.0, -2.0, "min")]


def test_extrema_plateau_midpoint():
    series = [(0.0, 0.0), (1.0, 1.0), (2.0, 1.0), (3.0, 1.0), (4.0, 0.0)]
    assert find_extrema(series) == [(2.0, 1.0, "max")]


def test_extrema_endpoints_excluded():
    assert find_extrema([(0.0, 2.0), (1.0, 1.0), (2.0, 0.0)]) == []
