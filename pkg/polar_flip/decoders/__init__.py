"""Decoder implementations and a factory keyed by decoder variant."""

from __future__ import annotations

from typing import Optional

from ..config import CrcSpec, DecoderVariant, TreeConstraints
from ..decoder_tree import DecoderTree
from ..models.code import PolarCode
from .base import BaseDecoder
from .fast_ssc import FastSSCDecoder, fast_ssc_decode
from .fast_ssc_flip import FastSSCFlipDecoder, fast_ssc_flip_decode
from .kernels import combine, f_minsum, g_llr, hard_decision, sc_pass
from .nodes import (
    NodeDecision,
    decode_birep,
    decode_rate0,
    decode_rate1,
    decode_rep,
    decode_spc,
)
from .sc import SCDecoder, sc_decode
from .scf import SCFlipDecoder, scf_decode

__all__ = [
    "BaseDecoder",
    "SCDecoder",
    "SCFlipDecoder",
    "FastSSCDecoder",
    "FastSSCFlipDecoder",
    "create_decoder",
    "sc_decode",
    "scf_decode",
    "fast_ssc_decode",
    "fast_ssc_flip_decode",
    "f_minsum",
    "g_llr",
    "combine",
    "hard_decision",
    "sc_pass",
    "NodeDecision",
    "decode_rate0",
    "decode_rate1",
    "decode_rep",
    "decode_birep",
    "decode_spc",
]


def create_decoder(
    variant: DecoderVariant,
    code: PolarCode,
    crc: Optional[CrcSpec] = None,
    t_max: int = 8,
    s_factor: float = 0.5,
    constraints: Optional[TreeConstraints] = None,
    tree: Optional[DecoderTree] = None,
) -> BaseDecoder:
    """Build the decoder for ``variant``; non-flip variants ignore ``t_max``.

    ``tree`` reuses an already built decoder tree for the fast variants.
    """
    if variant is DecoderVariant.SC:
        return SCDecoder(code, crc)
    if variant is DecoderVariant.SCF:
        return SCFlipDecoder(code, crc, t_max)
    if variant is DecoderVariant.FAST_SSC:
        return FastSSCDecoder(code, crc, constraints, s_factor, tree=tree)
    return FastSSCFlipDecoder(code, crc, t_max, s_factor, constraints, tree=tree)
