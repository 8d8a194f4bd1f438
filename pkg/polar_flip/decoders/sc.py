"""Successive-cancellation decoding."""

from __future__ import annotations

from typing import Optional

import numpy as np

from ..config import CrcSpec, DecoderVariant
from ..models.code import PolarCode
from ..models.results import DecodeResult
from .base import BaseDecoder
from .kernels import sc_pass

__all__ = ["SCDecoder", "sc_decode"]


class SCDecoder(BaseDecoder):
    """Plain SC decoder; the CRC, when given, is only checked."""

    variant = DecoderVariant.SC

    def __init__(self, code: PolarCode, crc: Optional[CrcSpec] = None):
        super().__init__(code, crc, t_max=1)
        self._frozen = np.ascontiguousarray(code.frozen_mask, dtype=np.uint8)

    def decode(self, alpha: np.ndarray) -> DecodeResult:
        u_hat, _ = sc_pass(self._check_llrs(alpha), self._frozen)
        return self._result(u_hat)


def sc_decode(code: PolarCode, alpha: np.ndarray) -> DecodeResult:
    """Decode one frame of channel LLRs with SC (no CRC check)."""
    return SCDecoder(code).decode(alpha)
