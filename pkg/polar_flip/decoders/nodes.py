"""Constituent-code decoders with decision LLRs and node-local flips.

Every decoder maps the node's input LLRs to its codeword-domain estimate
``beta`` and the decision LLRs ``lambdas`` of the node's information bits;
``local_d[j]`` names the information bit ``lambdas[j]`` belongs to.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..exceptions import DecoderError
from .kernels import hard_decision

__all__ = [
    "NodeDecision",
    "fold_sum",
    "decode_rate0",
    "decode_rate1",
    "decode_rep",
    "decode_birep",
    "decode_spc",
]


@dataclass
class NodeDecision:
    beta: np.ndarray
    lambdas: np.ndarray
    local_d: np.ndarray

    @property
    def parity(self) -> int:
        return int(np.bitwise_xor.reduce(self.beta)) if self.beta.size else 0


def _decision(beta: np.ndarray, lambdas: np.ndarray, local_d: Optional[np.ndarray] = None) -> NodeDecision:
    if local_d is None:
        local_d = np.arange(lambdas.size, dtype=np.int64)
    return NodeDecision(beta=beta, lambdas=lambdas, local_d=local_d)


def fold_sum(alpha: np.ndarray, length: int) -> np.ndarray:
    """Pairwise sums of ``alpha`` down to ``length`` entries.

    Entry t sums every alpha[i] with i = t (mod length), added in the order
    the SC g-update adds them when all left estimates are 0.
    """
    s = np.asarray(alpha, dtype=np.float64)
    while s.size > length:
        half = s.size // 2
        s = s[half:] + s[:half]
    return s


def _check_flip(flip: int, limit: int, kind: str) -> None:
    if not 0 <= flip < limit:
        raise DecoderError(f"Flip index {flip} is outside the {kind} node (0..{limit - 1})", {"flip": flip})


def decode_rate0(alpha: np.ndarray) -> NodeDecision:
    """All-frozen node: the estimate is all-zero and carries no decisions."""
    return _decision(np.zeros(len(alpha), dtype=np.uint8), np.zeros(0))


def decode_rate1(alpha: np.ndarray, flip: Optional[int] = None) -> NodeDecision:
    """Hard decision on every input; lambda_d = |alpha_d|."""
    alpha = np.asarray(alpha, dtype=np.float64)
    beta = hard_decision(alpha)
    if flip is not None:
        _check_flip(flip, alpha.size, "rate-1")
        beta[flip] ^= 1
    return _decision(beta, np.abs(alpha))


def decode_rep(alpha: np.ndarray, flip: Optional[int] = None) -> NodeDecision:
    """Repetition node: one decision on the sum of all inputs."""
    total = fold_sum(alpha, 1)[0]
    bit = 1 if total < 0 else 0
    if flip is not None:
        _check_flip(flip, 1, "repetition")
        bit ^= 1
    beta = np.full(len(alpha), bit, dtype=np.uint8)
    return _decision(beta, np.array([abs(total)]))


def decode_birep(alpha: np.ndarray, flip: Optional[int] = None) -> NodeDecision:
    """Two interleaved repetition codes; d = 0 is the even half, d = 1 the odd half."""
    if len(alpha) < 4:
        raise DecoderError(f"Birepetition nodes need at least 4 inputs, got {len(alpha)}")
    sums = fold_sum(alpha, 2)
    halves = hard_decision(sums)
    if flip is not None:
        _check_flip(flip, 2, "birepetition")
        halves[flip] ^= 1
    beta = np.tile(halves, len(alpha) // 2)
    return _decision(beta, np.abs(sums))


def decode_spc(
    alpha: np.ndarray,
    s_factor: float = 0.5,
    flip: Optional[int] = None,
    t_cap: Optional[int] = None,
) -> NodeDecision:
    """
    Single-parity-check node (only position 0 frozen).

    Args:
        alpha: Node input LLRs
        s_factor: Weight of the least-reliable magnitude in the decision LLRs
        flip: Node position 1..N_v-1 to flip; the least reliable position is
            flipped along with it to keep even parity
        t_cap: Surface only this many of the smallest decision LLRs

    Returns:
        NodeDecision whose beta always has even parity
    """
    alpha = np.asarray(alpha, dtype=np.float64)
    if alpha.size < 2:
        raise DecoderError(f"SPC nodes need at least 2 inputs, got {alpha.size}")
    magnitudes = np.abs(alpha)
    beta = hard_decision(alpha)
    parity = int(np.bitwise_xor.reduce(beta))
    order = np.argsort(magnitudes, kind="stable")
    i_min1, i_min2 = int(order[0]), int(order[1])
    if parity:
        beta[i_min1] ^= 1

    if flip is not None:
        if flip == 0:
            raise DecoderError("Position 0 of an SPC node is frozen and cannot be flipped", {"flip": flip})
        _check_flip(flip, alpha.size, "SPC")
        if flip == i_min1:
            beta[[i_min1, i_min2]] ^= 1
        else:
            beta[[flip, i_min1]] ^= 1

    correction = s_factor * magnitudes[i_min1]
    lambdas = magnitudes[1:] + (-correction if parity else correction)
    if t_cap is not None and t_cap < lambdas.size:
        keep = np.argsort(lambdas, kind="stable")[: max(t_cap, 0)]
        return _decision(beta, lambdas[keep], keep.astype(np.int64))
    return _decision(beta, lambdas)
