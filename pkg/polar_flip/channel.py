"""BPSK/AWGN channel model and reproducible per-frame random streams.

Random streams come from numpy's counter-based ``Philox`` bit generator keyed
by ``SeedSequence(seed, spawn_key=(point, frame))``; Gaussian noise is drawn
with ``Generator.standard_normal`` (numpy's ziggurat sampler). A frame's
stream therefore depends only on the seed, the grid point and the frame
number, never on which worker processes it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .encoding import BitsLike, as_bits
from .exceptions import ConfigurationError

__all__ = [
    "ChannelParams",
    "frame_rng",
    "modulate_bpsk",
    "transmit_awgn",
    "llr_from_channel",
]


@dataclass(frozen=True)
class ChannelParams:
    """Eb/N0 operating point; ``rate`` is the payload rate k_payload / N."""

    ebn0_db: float
    rate: float
    seed: int = 0

    def __post_init__(self):
        if not 0.0 < self.rate <= 1.0:
            raise ConfigurationError(f"Code rate must lie in (0, 1], got {self.rate}", {"rate": self.rate})

    @property
    def sigma(self) -> float:
        return math.sqrt(1.0 / (2.0 * self.rate * 10.0 ** (self.ebn0_db / 10.0)))


def frame_rng(seed: int, frame_index: int, point_index: int = 0) -> np.random.Generator:
    """Independent stream for one frame of one grid point."""
    sequence = np.random.SeedSequence(entropy=seed, spawn_key=(point_index, frame_index))
    return np.random.Generator(np.random.Philox(sequence))


def modulate_bpsk(x: BitsLike) -> np.ndarray:
    """Map bit 0 to +1.0 and bit 1 to -1.0."""
    return 1.0 - 2.0 * as_bits(x).astype(np.float64)


def transmit_awgn(
    symbols: np.ndarray,
    params: ChannelParams,
    rng: np.random.Generator,
    sigma: Optional[float] = None,
) -> np.ndarray:
    """Add white Gaussian noise of standard deviation ``params.sigma``.

    ``sigma`` overrides the value derived from ``params`` (0 gives the
    noiseless channel).
    """
    sigma = params.sigma if sigma is None else sigma
    symbols = np.asarray(symbols, dtype=np.float64)
    return symbols + sigma * rng.standard_normal(symbols.shape[0])


def llr_from_channel(y: np.ndarray, sigma: float) -> np.ndarray:
    """Channel LLRs 2y/sigma^2; positive values favour bit 0."""
    if sigma <= 0:
        raise ConfigurationError(f"sigma must be positive, got {sigma}", {"sigma": sigma})
    return 2.0 * np.asarray(y, dtype=np.float64) / (sigma * sigma)
