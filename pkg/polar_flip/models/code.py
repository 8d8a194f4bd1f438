"""Static polar-code definition."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, FrozenSet, Iterable

import numpy as np

from ..exceptions import CodeDefinitionError

__all__ = ["PolarCode", "is_power_of_two"]


def is_power_of_two(value: int) -> bool:
    return value >= 1 and (value & (value - 1)) == 0


@dataclass(frozen=True)
class PolarCode:
    """An (N, k) polar code with its frozen u-domain positions.

    ``k_info`` counts every unfrozen position, CRC bits included; the CRC
    occupies the last ``crc_bits`` of them in ascending index order.
    """

    n_bits: int
    k_info: int
    frozen: FrozenSet[int] = field(default_factory=frozenset)
    crc_bits: int = 0

    def __post_init__(self):
        object.__setattr__(self, "frozen", frozenset(int(i) for i in self.frozen))
        if self.n_bits < 2 or not is_power_of_two(self.n_bits):
            raise CodeDefinitionError(
                f"Code length must be a power of two >= 2, got {self.n_bits}",
                {"n_bits": self.n_bits},
            )
        if not 0 <= self.k_info <= self.n_bits:
            raise CodeDefinitionError(
                f"k_info must lie in [0, {self.n_bits}], got {self.k_info}",
                {"k_info": self.k_info},
            )
        if any(i < 0 or i >= self.n_bits for i in self.frozen):
            bad = sorted(i for i in self.frozen if i < 0 or i >= self.n_bits)
            raise CodeDefinitionError(
                f"Frozen indices out of range [0, {self.n_bits}): {bad}", {"indices": bad}
            )
        if len(self.frozen) != self.n_bits - self.k_info:
            raise CodeDefinitionError(
                f"Expected {self.n_bits - self.k_info} frozen indices, got {len(self.frozen)}",
                {"n_bits": self.n_bits, "k_info": self.k_info, "frozen": len(self.frozen)},
            )
        if self.crc_bits < 0 or (self.crc_bits > 0 and self.k_info <= self.crc_bits):
            raise CodeDefinitionError(
                f"k_info ({self.k_info}) must exceed crc_bits ({self.crc_bits})",
                {"k_info": self.k_info, "crc_bits": self.crc_bits},
            )

    @classmethod
    def from_frozen(cls, n_bits: int, frozen: Iterable[int], crc_bits: int = 0) -> PolarCode:
        frozen_set = frozenset(int(i) for i in frozen)
        return cls(n_bits=n_bits, k_info=n_bits - len(frozen_set), frozen=frozen_set, crc_bits=crc_bits)

    @property
    def n_stages(self) -> int:
        return self.n_bits.bit_length() - 1

    @property
    def k_payload(self) -> int:
        return self.k_info - self.crc_bits

    @property
    def rate(self) -> float:
        return self.k_info / self.n_bits

    @property
    def payload_rate(self) -> float:
        return self.k_payload / self.n_bits

    @cached_property
    def frozen_mask(self) -> np.ndarray:
        mask = np.zeros(self.n_bits, dtype=np.bool_)
        mask[sorted(self.frozen)] = True
        mask.setflags(write=False)
        return mask

    @cached_property
    def info_positions(self) -> np.ndarray:
        positions = np.flatnonzero(~self.frozen_mask).astype(np.int64)
        positions.setflags(write=False)
        return positions

    @property
    def first_info_index(self) -> int:
        """Location b of the first information bit (N when there is none)."""
        return int(self.info_positions[0]) if self.k_info else self.n_bits

    def to_dict(self) -> Dict[str, Any]:
        return {
            "N": self.n_bits,
            "k": self.k_info,
            "crc": self.crc_bits,
            "frozen": sorted(self.frozen),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> PolarCode:
        return cls(
            n_bits=int(data["N"]),
            k_info=int(data["k"]),
            frozen=frozenset(data.get("frozen", ())),
            crc_bits=int(data.get("crc", 0)),
        )
