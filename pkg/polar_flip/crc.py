"""Bitwise CRC attach/check over information payloads."""

from __future__ import annotations

import numpy as np
from numba import njit

from .config import CrcSpec
from .encoding import BitsLike, as_bits
from .exceptions import EncodingError

__all__ = ["crc_remainder", "crc_bits", "crc_attach", "crc_check"]


@njit(cache=True)
def _crc_register(bits, width, polynomial, init):
    mask = (1 << width) - 1
    reg = init
    for i in range(bits.shape[0]):
        top = ((reg >> (width - 1)) & 1) ^ bits[i]
        reg = (reg << 1) & mask
        if top:
            reg ^= polynomial
    return reg


def _reflect(value: int, width: int) -> int:
    out = 0
    for _ in range(width):
        out = (out << 1) | (value & 1)
        value >>= 1
    return out


def crc_remainder(payload: BitsLike, spec: CrcSpec) -> int:
    """CRC of ``payload`` (MSB-first bit stream) as an integer."""
    reg = int(_crc_register(as_bits(payload), spec.width, spec.polynomial, spec.init))
    if spec.reflect:
        reg = _reflect(reg, spec.width)
    return reg ^ spec.xor_out


def crc_bits(payload: BitsLike, spec: CrcSpec) -> np.ndarray:
    """CRC of ``payload`` as ``spec.width`` bits, most significant first."""
    value = crc_remainder(payload, spec)
    shifts = np.arange(spec.width - 1, -1, -1)
    return ((value >> shifts) & 1).astype(np.uint8)


def crc_attach(payload: BitsLike, spec: CrcSpec) -> np.ndarray:
    """Append the CRC of ``payload`` to it."""
    bits = as_bits(payload)
    return np.concatenate((bits, crc_bits(bits, spec)))


def crc_check(block: BitsLike, spec: CrcSpec) -> bool:
    """True iff the trailing ``spec.width`` bits are the CRC of the prefix."""
    bits = as_bits(block)
    if bits.size < spec.width:
        raise EncodingError(
            f"Block of {bits.size} bits is shorter than the {spec.width}-bit CRC",
            {"length": bits.size, "width": spec.width},
        )
    split = bits.size - spec.width
    return bool(np.array_equal(crc_bits(bits[:split], spec), bits[split:]))
