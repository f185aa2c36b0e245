"""Command line front end.

Subcommands:
  gs         solve a single theta point and print its observables
  sweep      run a theta grid and emit CSV (stdout or --out)
  fm-oracle  closed-form block entropies of the uniform Sz = 0 state
  blocks     print the site sets of requested block geometries

Flags may also be given in a flat key = value config file via --config;
explicit flags override file values.
"""

from __future__ import annotations

import argparse
import sys

from .ferromagnet import fm_entropy, fm_entropy_asymptotic, fm_pair_concurrence
from .lattice import LadderSpec
from .sweep import (
    BlockSpec,
    SweepConfig,
    block_sites,
    csv_header,
    record_row,
    run_sweep,
    theta_grid,
    write_csv,
)

__all__ = ["main"]


def parse_blocks(text: str) -> tuple[BlockSpec, ...]:
    """Parse 'A:4,B:8' (a 'fam' prefix on the family letter is accepted)."""
    specs = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        fam, sep, size = part.partition(":")
        if not sep:
            raise argparse.ArgumentTypeError(f"block {part!r} is not FAMILY:SIZE")
        fam = fam.strip()
        if fam.lower().startswith("fam"):
            fam = fam[3:]
        try:
            specs.append(BlockSpec(family=fam.upper(), l=int(size)))
        except ValueError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from exc
    if not specs:
        raise argparse.ArgumentTypeError("empty block list")
    return tuple(specs)


def parse_pairs(text: str) -> tuple[str, ...]:
    pairs = tuple(p.strip() for p in text.split(",") if p.strip())
    for p in pairs:
        if p not in ("rung", "leg", "diag"):
            raise argparse.ArgumentTypeError(f"unknown pair kind {p!r}")
    return pairs


_CONFIG_PARSERS = {
    "rungs": int,
    "bc": str,
    "theta": float,
    "theta_min": float,
    "theta_max": float,
    "theta_step": float,
    "blocks": parse_blocks,
    "pairs": parse_pairs,
    "sector": int,
    "seed": int,
    "tol": float,
    "out": str,
    "workers": int,
    "allow_degenerate": lambda s: s.lower() in ("1", "true", "yes", "on"),
}


def read_config_file(path: str) -> dict:
    """Flat key = value file; keys mirror the long flags, '#' starts a comment."""
    values = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, val = line.partition("=")
            key = key.strip().replace("-", "_")
            if not sep or not key:
                raise ValueError(f"{path}:{lineno}: expected key = value, got {raw!r}")
            if key not in _CONFIG_PARSERS:
                raise ValueError(f"{path}:{lineno}: unknown option {key!r}")
            values[key] = _CONFIG_PARSERS[key](val.strip())
    return values


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", metavar="PATH", help="flat key = value option file")
    p.add_argument("--rungs", type=int, default=4, metavar="L", help="rung count")
    p.add_argument("--bc", choices=("periodic", "open"), default="periodic")
    p.add_argument("--sector", type=int, default=0, metavar="TWOSZ",
                   help="2*Sz of the sector to solve in")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-12,
                   help="eigensolver residual tolerance")
    p.add_argument("--out", metavar="PATH", help="CSV output path")
    p.add_argument("--workers", type=int, default=1,
                   help="parallel solves across grid points")
    p.add_argument("--allow-degenerate", action="store_true",
                   help="permit theta outside the unique-ground-state window")
    p.add_argument("--blocks", type=parse_blocks, default=(),
                   metavar="FAM:L,...", help="block geometries, e.g. A:4,D:6")
    p.add_argument("--pairs", type=parse_pairs, default=("rung", "leg", "diag"),
                   metavar="KINDS", help="which pair concurrences to compute")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringladder",
        description="Ladder ground states, entanglement sweeps and closed-form "
                    "checks for the ring-exchange model.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gs = sub.add_parser("gs", help="single ground-state point")
    _add_common(gs)
    gs.add_argument("--theta", type=float, required=False, default=0.0,
                    metavar="T", help="theta in units of pi")

    sw = sub.add_parser("sweep", help="theta grid sweep, CSV output")
    _add_common(sw)
    sw.add_argument("--theta-min", type=float, default=-0.395, metavar="T")
    sw.add_argument("--theta-max", type=float, default=0.945, metavar="T")
    sw.add_argument("--theta-step", type=float, default=0.005, metavar="T")

    fm = sub.add_parser("fm-oracle", help="closed-form uniform-state entropies")
    _add_common(fm)

    bl = sub.add_parser("blocks", help="print block geometry site sets")
    _add_common(bl)

    # subparsers parse into a fresh namespace, so config-file defaults must
    # be installed on each of them, not on the top-level parser
    parser.rl_subparsers = (gs, sw, fm, bl)
    return parser


def _apply_config(parser: argparse.ArgumentParser, argv: list[str]) -> None:
    probe = argparse.ArgumentParser(add_help=False)
    probe.add_argument("--config")
    known, _ = probe.parse_known_args(argv)
    if known.config:
        values = read_config_file(known.config)
        for sp in parser.rl_subparsers:
            sp.set_defaults(**values)


def _cfg_from_args(args, thetas) -> SweepConfig:
    return SweepConfig(
        L=args.rungs,
        thetas_over_pi=thetas,
        bc=args.bc,
        blocks=args.blocks,
        pairs=args.pairs,
        twoSz=args.sector,
        seed=args.seed,
        tol=args.tol,
        out=args.out,
        workers=args.workers,
        allow_degenerate=args.allow_degenerate,
    )


def cmd_gs(args) -> int:
    cfg = _cfg_from_args(args, (args.theta,))
    records = run_sweep(cfg)
    rec = records[0]
    for name, value in zip(csv_header(cfg.blocks), record_row(rec, cfg.blocks)):
        print(f"{name} = {value if value != '' else 'n/a'}")
    return 0


def cmd_sweep(args) -> int:
    thetas = theta_grid(args.theta_min, args.theta_max, args.theta_step)
    cfg = _cfg_from_args(args, thetas)
    records = run_sweep(cfg)
    if cfg.out is None:
        write_csv(records, cfg.blocks, sys.stdout)
    return 0


def cmd_fm_oracle(args) -> int:
    N = 2 * args.rungs
    sizes = sorted({b.l for b in args.blocks}) or list(range(1, N // 2 + 1))
    lines = [f"N = {N}", f"fm_pair_concurrence = {fm_pair_concurrence(N):.12g}",
             "l,fm_entropy,fm_entropy_asymptotic"]
    for l in sizes:
        lines.append(
            f"{l},{fm_entropy(N, l):.12g},{fm_entropy_asymptotic(N, l):.12g}"
        )
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_blocks(args) -> int:
    spec = LadderSpec(L=args.rungs, bc=args.bc)
    if not args.blocks:
        raise SystemExit("blocks: nothing to print, pass --blocks FAM:L,...")
    for b in args.blocks:
        sites = block_sites(b.family, b.l, spec)
        pretty = ", ".join(f"(leg {s % 2 + 1}, rung {s // 2 + 1})" for s in sites)
        print(f"{b.family}:{b.l} sites {sites}  [{pretty}]")
    return 0


_COMMANDS = {
    "gs": cmd_gs,
    "sweep": cmd_sweep,
    "fm-oracle": cmd_fm_oracle,
    "blocks": cmd_blocks,
}


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    _apply_config(parser, argv)
    args = parser.parse_args(argv)
    return _COMMANDS[args.command](args)
