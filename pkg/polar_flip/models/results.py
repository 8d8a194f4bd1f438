"""Result records produced by the decoders and the sweep driver."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, Optional

import numpy as np

__all__ = ["DecodeResult", "TrialRecord", "SweepRow", "GapReport", "CSV_HEADER"]

CSV_HEADER = (
    "EbN0dB",
    "frames",
    "frameErrors",
    "bitErrors",
    "FER",
    "BER",
    "avgTrials",
    "perTrialCC",
    "avgCC",
    "wcCC",
)


@dataclass
class DecodeResult:
    """Outcome of decoding one frame.

    ``u_hat`` holds the u-domain estimate (frozen positions 0), ``info_hat``
    the unfrozen positions in ascending order (payload followed by CRC).
    """

    u_hat: np.ndarray
    info_hat: np.ndarray
    trials_used: int = 1
    crc_ok: bool = True


@dataclass(frozen=True)
class TrialRecord:
    """Per-frame simulation outcome."""

    frame_index: int
    trials_used: int
    bit_errors: int

    @property
    def frame_error(self) -> bool:
        return self.bit_errors > 0


@dataclass(frozen=True)
class SweepRow:
    """Aggregated statistics of one Eb/N0 point."""

    ebn0_db: float
    frames: int
    frame_errors: int
    bit_errors: int
    fer: float
    ber: float
    avg_trials: float
    per_trial_cc: float
    avg_cc: float
    wc_cc: float

    def to_dict(self) -> Dict[str, Any]:
        return dict(
            zip(
                CSV_HEADER,
                (
                    self.ebn0_db,
                    self.frames,
                    self.frame_errors,
                    self.bit_errors,
                    self.fer,
                    self.ber,
                    self.avg_trials,
                    self.per_trial_cc,
                    self.avg_cc,
                    self.wc_cc,
                ),
            )
        )

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> SweepRow:
        return cls(
            ebn0_db=float(data["EbN0dB"]),
            frames=int(data["frames"]),
            frame_errors=int(data["frameErrors"]),
            bit_errors=int(data["bitErrors"]),
            fer=float(data["FER"]),
            ber=float(data["BER"]),
            avg_trials=float(data["avgTrials"]),
            per_trial_cc=float(data["perTrialCC"]),
            avg_cc=float(data["avgCC"]),
            wc_cc=float(data["wcCC"]),
        )


@dataclass(frozen=True)
class GapReport:
    """Eb/N0 distance between two FER curves at a target FER."""

    target_fer: float
    baseline_ebn0_db: float
    candidate_ebn0_db: float
    baseline_label: Optional[str] = None
    candidate_label: Optional[str] = None

    @property
    def gap_db(self) -> float:
        return self.candidate_ebn0_db - self.baseline_ebn0_db

    def to_dict(self) -> Dict[str, Any]:
        return {
            "target_fer": self.target_fer,
            "baseline_ebn0_db": self.baseline_ebn0_db,
            "candidate_ebn0_db": self.candidate_ebn0_db,
            "gap_db": self.gap_db,
            "baseline": self.baseline_label,
            "candidate": self.candidate_label,
        }
