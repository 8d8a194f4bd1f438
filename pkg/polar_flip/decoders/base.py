"""Shared plumbing for the decoder classes."""

from __future__ import annotations

from typing import ClassVar, Optional

import numpy as np

from ..config import CrcSpec, DecoderVariant
from ..crc import crc_check
from ..exceptions import DecoderError
from ..models.code import PolarCode
from ..models.results import DecodeResult

__all__ = ["BaseDecoder"]


class BaseDecoder:
    """Base decoder class.

    An instance is bound to one code and is not thread-safe; simulation
    workers each build their own.
    """

    variant: ClassVar[DecoderVariant]

    def __init__(self, code: PolarCode, crc: Optional[CrcSpec] = None, t_max: int = 1):
        if t_max < 1:
            raise DecoderError(f"t_max must be >= 1, got {t_max}", {"t_max": t_max})
        # Without a CRC spec the CRC bits are decoded like payload bits and never checked.
        if crc is not None and crc.width != code.crc_bits:
            raise DecoderError(
                f"CRC width {crc.width} does not match the code's {code.crc_bits} CRC bits",
                {"crc_width": crc.width, "crc_bits": code.crc_bits},
            )
        self.code = code
        self.crc = crc
        self.t_max = t_max

    @property
    def can_flip(self) -> bool:
        return self.crc is not None and self.t_max > 1

    def decode(self, alpha: np.ndarray) -> DecodeResult:
        raise NotImplementedError

    def payload(self, result: DecodeResult) -> np.ndarray:
        """Decoded payload (information bits without the CRC)."""
        return result.info_hat[: self.code.k_payload]

    def _check_llrs(self, alpha: np.ndarray) -> np.ndarray:
        """Return ``alpha`` as a contiguous float64 block of length N."""
        block = np.ascontiguousarray(alpha, dtype=np.float64)
        if block.shape != (self.code.n_bits,):
            raise DecoderError(
                f"Expected {self.code.n_bits} channel LLRs, got shape {block.shape}",
                {"expected": self.code.n_bits, "shape": block.shape},
            )
        return block

    def _crc_passes(self, info_hat: np.ndarray) -> bool:
        if self.crc is None:
            return True
        return crc_check(info_hat, self.crc)

    def _result(self, u_hat: np.ndarray, trials_used: int = 1, crc_ok: Optional[bool] = None) -> DecodeResult:
        info_hat = u_hat[self.code.info_positions]
        if crc_ok is None:
            crc_ok = self._crc_passes(info_hat)
        return DecodeResult(u_hat=u_hat, info_hat=info_hat, trials_used=trials_used, crc_ok=crc_ok)
