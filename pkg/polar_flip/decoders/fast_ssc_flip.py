"""Fast-SSC-flip decoding: fast-SSC trials driven by node decision LLRs."""

from __future__ import annotations

from typing import Optional

import numpy as np

from ..config import CrcSpec, DecoderVariant, TreeConstraints
from ..decoder_tree import DecoderTree, build_decoder_tree
from ..models.code import PolarCode
from ..models.decision import DecisionList, FlipTarget
from ..models.results import DecodeResult
from .base import BaseDecoder
from .fast_ssc import fast_ssc_decode

__all__ = ["FastSSCFlipDecoder", "fast_ssc_flip_decode"]


class FastSSCFlipDecoder(BaseDecoder):
    """Fast-SSC decoder with SC-Flip style retrials.

    Trial 1 collects the T_max - 1 smallest decision LLRs; trial t >= 2
    re-decodes with the (t - 1)-th of them flipped. When every trial fails
    the CRC the first-trial estimate is returned with ``crc_ok`` False.
    """

    variant = DecoderVariant.FAST_SSC_FLIP

    def __init__(
        self,
        code: PolarCode,
        crc: Optional[CrcSpec] = None,
        t_max: int = 8,
        s_factor: float = 0.5,
        constraints: Optional[TreeConstraints] = None,
        tree: Optional[DecoderTree] = None,
    ):
        super().__init__(code, crc, t_max)
        self.tree = tree if tree is not None else build_decoder_tree(code, constraints)
        self.s_factor = s_factor
        self.last_decisions: Optional[DecisionList] = None

    def decode(self, alpha: np.ndarray) -> DecodeResult:
        alpha = self._check_llrs(alpha)
        capacity = self.t_max - 1 if self.can_flip else 0
        first, decisions = fast_ssc_decode(self.tree, alpha, s_factor=self.s_factor, list_capacity=capacity)
        self.last_decisions = decisions
        first = self._result(first.u_hat)
        if first.crc_ok or not self.can_flip:
            return first

        trials = 1
        for entry in decisions:
            trials += 1
            trial, _ = fast_ssc_decode(self.tree, alpha, flip=FlipTarget(entry), s_factor=self.s_factor)
            result = self._result(trial.u_hat, trials_used=trials)
            if result.crc_ok:
                return result
        return self._result(first.u_hat, trials_used=trials, crc_ok=False)


def fast_ssc_flip_decode(
    tree: DecoderTree,
    alpha: np.ndarray,
    t_max: int,
    s_factor: float,
    crc_spec: Optional[CrcSpec],
) -> DecodeResult:
    """Decode one frame with fast-SSC-flip over ``tree``."""
    return FastSSCFlipDecoder(tree.code, crc_spec, t_max, s_factor, tree=tree).decode(alpha)
