"""Clock-cycle and memory models of SC-based flip decoders.

Fast-SSC schedule costs, with P LLRs processed per cycle:

============================  =========================
operation on a width-w node   cycles
============================  =========================
f (left-child LLRs)           ceil(w/2 / P); skipped when the left child is Rate0
g (right-child LLRs)          ceil(w/2 / P)
combine                       ceil(w / P); 0 when either child is Rate0
Rate0 leaf                    0
Rate1, Rep, Birep leaf        ceil(w / P)
SPC leaf                      ceil(w / P) + 1
============================  =========================

The total is multiplied by ``HwParams.calibration``. The unit costs overcount
the reference hardware, which overlaps f, g and partial-sum updates; use
``config.REFERENCE_CALIBRATION`` to reproduce its per-trial cycle counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Dict, Optional

from .config import DecoderVariant, HwParams, NodeKind, TreeConstraints
from .decoder_tree import DecoderTree, TreeNode, build_decoder_tree
from .exceptions import ConfigurationError
from .models.code import PolarCode, is_power_of_two

__all__ = [
    "LatencyReport",
    "MemoryEstimate",
    "sc_latency_semiparallel",
    "scf_worst_case",
    "fast_ssc_latency",
    "memory_estimate",
    "average_execution",
    "per_trial_latency",
    "latency_report",
]

# Processing-element count of the baseline semi-parallel SC decoder.
_SC_LANES = 64


@dataclass(frozen=True)
class LatencyReport:
    per_trial_cc: float
    worst_case_cc: float
    avg_cc: float

    def to_dict(self) -> Dict[str, Any]:
        return {"per_trial_cc": self.per_trial_cc, "worst_case_cc": self.worst_case_cc, "avg_cc": self.avg_cc}


@dataclass(frozen=True)
class MemoryEstimate:
    """Storage for the T_max - 1 flip candidates of a trial."""

    lambda_bits: int
    index_bits: int

    @property
    def total_bits(self) -> int:
        return self.lambda_bits + self.index_bits


def sc_latency_semiparallel(n_bits: int, b_first_info: int) -> float:
    """Cycles of the improved semi-parallel SC decoder.

    ``b_first_info`` is the index of the first information bit; the leading
    frozen bits are skipped.
    """
    if n_bits < 2 or not is_power_of_two(n_bits):
        raise ConfigurationError(f"n_bits must be a power of two >= 2, got {n_bits}")
    if not 0 <= b_first_info < n_bits:
        raise ConfigurationError(f"b must lie in [0, {n_bits}), got {b_first_info}")
    stages = n_bits.bit_length() - 1
    saved = sum((b_first_info >> i) * -(-(1 << i) // _SC_LANES) for i in range(stages + 1))
    return 2.0 * n_bits + (n_bits / _SC_LANES) * math.log2(n_bits / 256) - saved


def scf_worst_case(t_max: int, per_trial_cc: float) -> float:
    if t_max < 1:
        raise ConfigurationError(f"t_max must be >= 1, got {t_max}")
    return t_max * per_trial_cc


def average_execution(avg_trials: float, per_trial_cc: float) -> float:
    if avg_trials < 1.0:
        raise ConfigurationError(f"avg_trials must be >= 1, got {avg_trials}")
    return avg_trials * per_trial_cc


def _chunks(width: int, lanes: int) -> int:
    return -(-width // lanes)


def _node_cycles(node: TreeNode, lanes: int) -> int:
    kind = node.kind
    if kind is NodeKind.RATE0:
        return 0
    if kind is NodeKind.SPC:
        return _chunks(node.width, lanes) + 1
    if kind is not NodeKind.BRANCH:
        return _chunks(node.width, lanes)

    half = node.width // 2
    left, right = node.left, node.right
    cycles = _node_cycles(left, lanes) + _chunks(half, lanes) + _node_cycles(right, lanes)
    if left.kind is not NodeKind.RATE0:
        cycles += _chunks(half, lanes)
    if left.kind is not NodeKind.RATE0 and right.kind is not NodeKind.RATE0:
        cycles += _chunks(node.width, lanes)
    return cycles


def fast_ssc_latency(tree: DecoderTree, hw: HwParams) -> float:
    """Cycles of one fast-SSC pass over ``tree``."""
    return _node_cycles(tree.root, hw.p_lanes) * hw.calibration


def memory_estimate(code: PolarCode, hw: HwParams) -> MemoryEstimate:
    """Bits needed to keep the sorted flip candidates."""
    if hw.t_max < 2:
        raise ConfigurationError(f"Memory estimate needs t_max >= 2, got {hw.t_max}")
    entries = hw.t_max - 1
    index_width = (code.k_info - 1).bit_length() if code.k_info > 1 else 0
    return MemoryEstimate(lambda_bits=hw.q_lambda * entries, index_bits=entries * index_width)


def per_trial_latency(
    variant: DecoderVariant,
    code: PolarCode,
    hw: HwParams,
    tree: Optional[DecoderTree] = None,
    constraints: Optional[TreeConstraints] = None,
) -> float:
    """Cycles of one decoding pass of ``variant``."""
    if not variant.is_fast:
        return sc_latency_semiparallel(code.n_bits, min(code.first_info_index, code.n_bits - 1))
    if tree is None:
        tree = build_decoder_tree(code, constraints)
    return fast_ssc_latency(tree, hw)


def latency_report(
    variant: DecoderVariant,
    code: PolarCode,
    hw: HwParams,
    avg_trials: float = 1.0,
    tree: Optional[DecoderTree] = None,
    constraints: Optional[TreeConstraints] = None,
) -> LatencyReport:
    """Per-trial, worst-case and average cycles; non-flip variants run one trial."""
    per_trial = per_trial_latency(variant, code, hw, tree, constraints)
    trials = hw.t_max if variant.is_flip else 1
    return LatencyReport(
        per_trial_cc=per_trial,
        worst_case_cc=scf_worst_case(trials, per_trial),
        avg_cc=average_execution(avg_trials, per_trial),
    )
