"""SC-Flip decoding: CRC-triggered SC retrials with one flipped decision each."""

from __future__ import annotations

from typing import Optional

import numpy as np

from ..config import CrcSpec, DecoderVariant
from ..models.code import PolarCode
from ..models.results import DecodeResult
from .base import BaseDecoder
from .kernels import sc_pass

__all__ = ["SCFlipDecoder", "scf_decode", "flip_candidates"]


def flip_candidates(code: PolarCode, leaf_llr: np.ndarray, count: int) -> np.ndarray:
    """The ``count`` least reliable information positions of a first trial.

    Positions are ranked by |leaf LLR|; equal magnitudes keep ascending
    position order.
    """
    positions = code.info_positions
    order = np.argsort(np.abs(leaf_llr[positions]), kind="stable")
    return positions[order[: max(count, 0)]]


class SCFlipDecoder(BaseDecoder):
    """SC-Flip decoder with up to ``t_max`` trials.

    When every trial fails the CRC the first-trial estimate is returned with
    ``crc_ok`` False.
    """

    variant = DecoderVariant.SCF

    def __init__(self, code: PolarCode, crc: Optional[CrcSpec] = None, t_max: int = 8):
        super().__init__(code, crc, t_max)
        self._frozen = np.ascontiguousarray(code.frozen_mask, dtype=np.uint8)

    def decode(self, alpha: np.ndarray) -> DecodeResult:
        alpha = self._check_llrs(alpha)
        u_hat, leaf_llr = sc_pass(alpha, self._frozen)
        first = self._result(u_hat)
        if first.crc_ok or not self.can_flip:
            return first

        trials = 1
        for position in flip_candidates(self.code, leaf_llr, self.t_max - 1):
            trials += 1
            u_hat, _ = sc_pass(alpha, self._frozen, int(position))
            result = self._result(u_hat, trials_used=trials)
            if result.crc_ok:
                return result
        return self._result(first.u_hat, trials_used=trials, crc_ok=False)


def scf_decode(code: PolarCode, alpha: np.ndarray, t_max: int, crc_spec: Optional[CrcSpec]) -> DecodeResult:
    """Decode one frame with SC-Flip."""
    return SCFlipDecoder(code, crc_spec, t_max).decode(alpha)
