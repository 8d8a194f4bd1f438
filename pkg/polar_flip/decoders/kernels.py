"""Min-sum SC update rules and the iterative SC decoding pass.

The elementwise numpy kernels and the compiled pass evaluate exactly the same
floating-point expressions, so decoders built from either agree bit for bit.
"""

from __future__ import annotations

from typing import Tuple, Union

import numpy as np
from numba import njit

from ..encoding import BitsLike, as_bits
from ..exceptions import DecoderError

__all__ = [
    "f_minsum",
    "g_llr",
    "combine",
    "hard_decision",
    "sc_pass",
]

LlrLike = Union[float, np.ndarray]


def f_minsum(a: LlrLike, b: LlrLike) -> LlrLike:
    """sign(a)·sign(b)·min(|a|, |b|), zero counted as positive."""
    magnitude = np.minimum(np.abs(a), np.abs(b))
    result = np.where(np.logical_xor(np.less(a, 0), np.less(b, 0)), -magnitude, magnitude)
    return float(result) if result.ndim == 0 else result


def g_llr(a: LlrLike, b: LlrLike, beta: Union[int, np.ndarray]) -> LlrLike:
    """b + a when beta is 0, b - a when beta is 1."""
    result = np.where(np.equal(beta, 0), np.add(b, a), np.subtract(b, a))
    return float(result) if result.ndim == 0 else result


def combine(beta_l: BitsLike, beta_r: BitsLike) -> np.ndarray:
    """Partial-sum update: (beta_l xor beta_r) followed by beta_r."""
    left = as_bits(beta_l)
    right = as_bits(beta_r)
    if left.size != right.size:
        raise DecoderError(
            f"Cannot combine halves of different lengths ({left.size} vs {right.size})",
            {"left": left.size, "right": right.size},
        )
    return np.concatenate((left ^ right, right))


def hard_decision(alpha: np.ndarray) -> np.ndarray:
    """Bit 0 for non-negative LLRs, 1 otherwise."""
    return (np.asarray(alpha) < 0).astype(np.uint8)


@njit(cache=True)
def _sc_pass(alpha, frozen, flip_index):
    n_bits = alpha.shape[0]
    n = 0
    while (1 << n) < n_bits:
        n += 1
    # Row d holds the LLRs (bits) of every depth-d node side by side.
    llr = np.zeros((n + 1, n_bits))
    bits = np.zeros((n + 1, n_bits), dtype=np.uint8)
    leaf_llr = np.zeros(n_bits)
    llr[0, :] = alpha

    for i in range(n_bits):
        start = 0
        if i > 0:
            tz = 0
            while ((i >> tz) & 1) == 0:
                tz += 1
            depth = n - tz - 1
            width = n_bits >> depth
            half = width >> 1
            base = (i >> (tz + 1)) * width
            for t in range(half):
                a = llr[depth, base + t]
                b = llr[depth, base + half + t]
                if bits[depth + 1, base + t] == 0:
                    llr[depth + 1, base + half + t] = b + a
                else:
                    llr[depth + 1, base + half + t] = b - a
            start = depth + 1

        for depth in range(start, n):
            width = n_bits >> depth
            half = width >> 1
            base = (i >> (n - depth)) * width
            for t in range(half):
                a = llr[depth, base + t]
                b = llr[depth, base + half + t]
                m = min(abs(a), abs(b))
                if (a < 0) != (b < 0):
                    llr[depth + 1, base + t] = -m
                else:
                    llr[depth + 1, base + t] = m

        value = llr[n, i]
        leaf_llr[i] = value
        u = 0
        if frozen[i] == 0 and value < 0:
            u = 1
        if i == flip_index:
            u ^= 1
        bits[n, i] = u

        node = i
        depth = n
        while depth > 0 and (node & 1) == 1:
            width = n_bits >> depth
            parent_base = (node >> 1) * 2 * width
            for t in range(width):
                bits[depth - 1, parent_base + t] = bits[depth, parent_base + t] ^ bits[depth, parent_base + width + t]
                bits[depth - 1, parent_base + width + t] = bits[depth, parent_base + width + t]
            node >>= 1
            depth -= 1

    return bits[n].copy(), leaf_llr


def sc_pass(alpha: np.ndarray, frozen: np.ndarray, flip_index: int = -1) -> Tuple[np.ndarray, np.ndarray]:
    """One SC decoding pass.

    Args:
        alpha: Channel LLRs (float64, length N)
        frozen: Frozen mask as uint8 (1 = frozen)
        flip_index: u-domain position whose hard decision is inverted (-1 for none)

    Returns:
        Tuple of (u-domain estimate, LLR seen at every leaf)
    """
    return _sc_pass(alpha, frozen, flip_index)
