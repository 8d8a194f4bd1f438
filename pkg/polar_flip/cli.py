"""Command-line interface: ``polar-flip <command> [options]``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Any, Dict, Optional, Sequence

from . import __version__
from .config import SweepConfig, load_sweep_config
from .construction import save_frozen_set
from .exceptions import PolarFlipError
from .latency import latency_report, memory_estimate
from .results_io import compare_runs, emit_csv, rows_to_csv
from .simulation import SweepRunner, resolve_code

__all__ = ["build_parser", "main"]

logger = logging.getLogger(__name__)

# (flag, config key, help)
_VALUE_FLAGS = [
    ("--variant", "variant", "sc, scf, fast-ssc or fast-ssc-flip"),
    ("--n", "n_bits", "code length N"),
    ("--k", "k_info", "information bits k (CRC included unless --crc-outside-k)"),
    ("--design-ebn0", "design_ebn0", "design Eb/N0 (dB) of the constructed code"),
    ("--construction", "construction", "ga or bhattacharyya"),
    ("--frozen-file", "frozen_file", "read the frozen set from this file instead of constructing it"),
    ("--crc-width", "crc_width", "CRC length in bits (0 disables the CRC)"),
    ("--crc-poly", "crc_poly", "CRC generator polynomial without the leading term, e.g. 0x1021"),
    ("--crc-init", "crc_init", "CRC register initial value"),
    ("--crc-xor-out", "crc_xor_out", "value XORed onto the final CRC"),
    ("--tmax", "t_max", "maximum number of decoding trials"),
    ("--scale", "s_factor", "SPC decision-LLR scaling factor s"),
    ("--max-rate0", "max_rate0", "largest Rate0 node (none = unbounded)"),
    ("--max-rate1", "max_rate1", "largest Rate1 node (none = unbounded)"),
    ("--max-rep", "max_rep", "largest repetition node"),
    ("--max-birep", "max_birep", "largest birepetition node"),
    ("--max-spc", "max_spc", "largest SPC node"),
    ("--ebn0", "ebn0", "comma-separated Eb/N0 grid in dB"),
    ("--min-errors", "min_errors", "frame errors per point before stopping"),
    ("--max-frames", "max_frames", "frames per point before stopping"),
    ("--seed", "seed", "simulation seed"),
    ("--workers", "workers", "worker processes"),
    ("--block-frames", "block_frames", "frames per work unit"),
    ("--p-lanes", "p_lanes", "LLRs processed per clock cycle (P)"),
    ("--q-lambda", "q_lambda", "bits per stored decision LLR"),
    ("--calibration", "calibration", "multiplier applied to the fast-SSC cycle model"),
]

# (flag, config key, value stored, help)
_SWITCH_FLAGS = [
    ("--no-spc", "enable_spc", False, "decompose SPC nodes further"),
    ("--no-birep", "enable_birep", False, "decompose birepetition nodes further"),
    ("--crc-reflect", "crc_reflect", True, "bit-reverse the final CRC register"),
    ("--crc-outside-k", "crc_in_k", False, "add the CRC on top of k instead of inside it"),
]


def _add_config_arguments(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("configuration (overrides --config)")
    group.add_argument("--config", help="key=value configuration file")
    for flag, key, help_text in _VALUE_FLAGS:
        group.add_argument(flag, dest=key, default=None, help=help_text)
    for flag, key, value, help_text in _SWITCH_FLAGS:
        group.add_argument(flag, dest=key, action="store_const", const=value, default=None, help=help_text)


def config_from_args(args: argparse.Namespace) -> SweepConfig:
    """Configuration file values overridden by every flag given on the command line."""
    base = load_sweep_config(args.config) if args.config else SweepConfig()
    keys = [key for _, key, _ in _VALUE_FLAGS] + [key for _, key, _, _ in _SWITCH_FLAGS]
    overrides: Dict[str, Any] = {key: getattr(args, key) for key in keys if getattr(args, key) is not None}
    return SweepConfig.from_mapping(overrides, base=base)


def _cmd_sweep(args: argparse.Namespace) -> int:
    config = config_from_args(args)
    progress = not args.quiet and logging.getLogger().getEffectiveLevel() <= logging.INFO
    rows = SweepRunner(config).run(progress=progress)
    if args.out:
        emit_csv(rows, args.out)
        logger.info("Wrote %d rows to %s", len(rows), args.out)
    else:
        sys.stdout.write(rows_to_csv(rows))
    return 0


def _cmd_tree_dump(args: argparse.Namespace) -> int:
    config = config_from_args(args)
    runner = SweepRunner(config)
    print(runner.tree.dump())
    counts = ", ".join(f"{kind}={count}" for kind, count in runner.tree.kind_counts().items() if count)
    print(f"# nodes: {counts}")
    return 0


def _cmd_latency(args: argparse.Namespace) -> int:
    config = config_from_args(args)
    runner = SweepRunner(config)
    hw = config.hw_params()
    report = latency_report(config.variant, runner.code, hw, args.avg_trials, tree=runner.tree)
    memory = memory_estimate(runner.code, hw) if config.variant.is_flip and hw.t_max >= 2 else None
    if args.json:
        payload = dict(report.to_dict(), variant=config.variant.value, first_info_index=runner.code.first_info_index)
        if memory is not None:
            payload.update(lambda_bits=memory.lambda_bits, index_bits=memory.index_bits)
        print(json.dumps(payload, indent=2))
        return 0
    print(f"variant:       {config.variant.value}")
    print(f"first info b:  {runner.code.first_info_index}")
    print(f"per trial:     {report.per_trial_cc:g} CC")
    print(f"worst case:    {report.worst_case_cc:g} CC (T_max={hw.t_max if config.variant.is_flip else 1})")
    print(f"average:       {report.avg_cc:g} CC (avg trials {args.avg_trials:g})")
    if memory is not None:
        print(f"flip memory:   {memory.lambda_bits} lambda bits + {memory.index_bits} index bits")
    return 0


def _cmd_compare(args: argparse.Namespace) -> int:
    report = compare_runs(args.baseline, args.candidate, target_fer=args.target_fer)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
        return 0
    print(
        f"FER {report.target_fer:g}: baseline {report.baseline_ebn0_db:.3f} dB, "
        f"candidate {report.candidate_ebn0_db:.3f} dB, gap {report.gap_db:+.3f} dB"
    )
    return 0


def _cmd_construct(args: argparse.Namespace) -> int:
    config = config_from_args(args)
    code = resolve_code(config)
    path = save_frozen_set(code, args.out)
    logger.info("Wrote (%d, %d) frozen set to %s (b=%d)", code.n_bits, code.k_info, path, code.first_info_index)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polar-flip", description="Polar-code flip decoders and FER sweeps")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", default="INFO", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    commands = parser.add_subparsers(dest="command", required=True)

    sweep = commands.add_parser("sweep", help="run a Monte-Carlo FER sweep and emit CSV")
    _add_config_arguments(sweep)
    sweep.add_argument("--out", help="CSV output path (default: stdout)")
    sweep.add_argument("--quiet", action="store_true", help="hide progress bars")
    sweep.set_defaults(handler=_cmd_sweep)

    tree = commands.add_parser("tree-dump", help="print the pruned decoder tree")
    _add_config_arguments(tree)
    tree.set_defaults(handler=_cmd_tree_dump)

    latency = commands.add_parser("latency", help="print the clock-cycle and memory models")
    _add_config_arguments(latency)
    latency.add_argument("--avg-trials", type=float, default=1.0, help="average trials per frame")
    latency.add_argument("--json", action="store_true", help="print the report as JSON")
    latency.set_defaults(handler=_cmd_latency)

    compare = commands.add_parser("compare", help="Eb/N0 gap between two sweep CSV files")
    compare.add_argument("baseline")
    compare.add_argument("candidate")
    compare.add_argument("--target-fer", type=float, default=1e-3)
    compare.add_argument("--json", action="store_true", help="print the report as JSON")
    compare.set_defaults(handler=_cmd_compare)

    construct = commands.add_parser("construct", help="construct a code and write its frozen-set file")
    _add_config_arguments(construct)
    construct.add_argument("--out", required=True, help="frozen-set file to write")
    construct.set_defaults(handler=_cmd_construct)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=args.log_level, format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    try:
        return args.handler(args)
    except PolarFlipError as exc:
        logger.error("%s", exc.message)
        return 2
