"""Polar transform and non-systematic encoding."""

from __future__ import annotations

from typing import Sequence, Union

import numpy as np
from numba import njit

from .exceptions import EncodingError
from .models.code import PolarCode, is_power_of_two

__all__ = ["as_bits", "polar_transform", "encode"]

BitsLike = Union[np.ndarray, Sequence[int]]


def as_bits(bits: BitsLike) -> np.ndarray:
    """Return ``bits`` as a contiguous uint8 array of 0/1 values."""
    array = np.ascontiguousarray(bits, dtype=np.uint8)
    if array.ndim != 1:
        raise EncodingError(f"Expected a 1-D bit vector, got shape {array.shape}")
    if array.size and array.max() > 1:
        raise EncodingError("Bit vectors may only contain 0 and 1")
    return array


@njit(cache=True)
def _butterfly(bits):
    x = bits.copy()
    n = x.shape[0]
    half = 1
    while half < n:
        for start in range(0, n, 2 * half):
            for j in range(start, start + half):
                x[j] ^= x[j + half]
        half *= 2
    return x


def polar_transform(v: BitsLike) -> np.ndarray:
    """Compute v·F^{⊗n} over GF(2) in O(N log N); the map is its own inverse."""
    bits = as_bits(v)
    if not is_power_of_two(bits.size):
        raise EncodingError(
            f"Transform length must be a power of two, got {bits.size}", {"length": bits.size}
        )
    if bits.size == 1:
        return bits.copy()
    return _butterfly(bits)


def encode(code: PolarCode, info: BitsLike) -> np.ndarray:
    """Scatter ``info`` into the unfrozen positions and transform."""
    block = as_bits(info)
    if block.size != code.k_info:
        raise EncodingError(
            f"Expected {code.k_info} information bits, got {block.size}",
            {"expected": code.k_info, "got": block.size},
        )
    u = np.zeros(code.n_bits, dtype=np.uint8)
    u[code.info_positions] = block
    return _butterfly(u)
