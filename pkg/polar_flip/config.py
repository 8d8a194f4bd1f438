"""Configuration primitives for the polar-flip codec and simulator."""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Callable, Dict, FrozenSet, List, Mapping, Optional, Union

from .exceptions import ConfigurationError

__all__ = [
    "DecoderVariant",
    "ConstructionMethod",
    "NodeKind",
    "CrcSpec",
    "TreeConstraints",
    "HwParams",
    "REFERENCE_CALIBRATION",
    "SweepConfig",
    "load_sweep_config",
]


class DecoderVariant(Enum):
    """Decoding algorithms supported by the simulator."""

    SC = "sc"
    SCF = "scf"
    FAST_SSC = "fast-ssc"
    FAST_SSC_FLIP = "fast-ssc-flip"

    @property
    def is_fast(self) -> bool:
        return self in (DecoderVariant.FAST_SSC, DecoderVariant.FAST_SSC_FLIP)

    @property
    def is_flip(self) -> bool:
        return self in (DecoderVariant.SCF, DecoderVariant.FAST_SSC_FLIP)


class ConstructionMethod(Enum):
    """Bit-channel reliability estimators used to pick the frozen set."""

    GA = "ga"
    BHATTACHARYYA = "bhattacharyya"


class NodeKind(Enum):
    """Constituent-code types of a pruned decoder tree."""

    RATE0 = "Rate0"
    RATE1 = "Rate1"
    REP = "Rep"
    BIREP = "Birep"
    SPC = "Spc"
    BRANCH = "Branch"

    @property
    def is_leaf(self) -> bool:
        return self is not NodeKind.BRANCH


# Generator polynomials without the leading x^width term.
_CRC_PRESETS: Dict[int, int] = {
    4: 0x3,  # x^4 + x + 1
    6: 0x21,  # x^6 + x^5 + 1
    8: 0x07,  # x^8 + x^2 + x + 1
    11: 0x621,  # x^11 + x^10 + x^9 + x^5 + 1
    16: 0x1021,  # CCITT: x^16 + x^12 + x^5 + 1
    24: 0xB2B117,
}


@dataclass(frozen=True)
class CrcSpec:
    """CRC parameters for the bitwise (MSB-first) register algorithm."""

    width: int = 16
    polynomial: int = 0x1021
    init: int = 0
    reflect: bool = False
    xor_out: int = 0

    def __post_init__(self):
        if self.width < 1:
            raise ConfigurationError("CRC width must be at least 1", {"width": self.width})
        limit = 1 << self.width
        for name in ("polynomial", "init", "xor_out"):
            value = getattr(self, name)
            if not 0 <= value < limit:
                raise ConfigurationError(
                    f"CRC {name} does not fit in {self.width} bits",
                    {name: value, "width": self.width},
                )

    @property
    def mask(self) -> int:
        return (1 << self.width) - 1

    @classmethod
    def preset(cls, width: int) -> CrcSpec:
        """Return the standard polynomial for a supported width."""
        if width not in _CRC_PRESETS:
            raise ConfigurationError(
                f"No preset CRC polynomial for width {width}; pass one explicitly",
                {"width": width, "supported": sorted(_CRC_PRESETS)},
            )
        return cls(width=width, polynomial=_CRC_PRESETS[width])


def _is_power_of_two(value: int) -> bool:
    return value >= 1 and (value & (value - 1)) == 0


@dataclass(frozen=True)
class TreeConstraints:
    """Node-size limits and enabled constituent-code kinds.

    A maximum of ``None`` means unbounded. Rate0, Rate1, Rep and Branch are
    always enabled; only Birep and Spc can be switched off.
    """

    max_rate0: Optional[int] = None
    max_rate1: Optional[int] = None
    max_rep: Optional[int] = 32
    max_birep: Optional[int] = 64
    max_spc: Optional[int] = 64
    enable_birep: bool = True
    enable_spc: bool = True

    def __post_init__(self):
        for name in ("max_rate0", "max_rate1", "max_rep", "max_birep", "max_spc"):
            value = getattr(self, name)
            if value is not None and not _is_power_of_two(value):
                raise ConfigurationError(
                    f"{name} must be a power of two >= 1", {name: value}
                )

    @property
    def enabled_kinds(self) -> FrozenSet[NodeKind]:
        kinds = {NodeKind.RATE0, NodeKind.RATE1, NodeKind.REP, NodeKind.BRANCH}
        if self.enable_birep:
            kinds.add(NodeKind.BIREP)
        if self.enable_spc:
            kinds.add(NodeKind.SPC)
        return frozenset(kinds)

    def max_width(self, kind: NodeKind) -> Optional[int]:
        return {
            NodeKind.RATE0: self.max_rate0,
            NodeKind.RATE1: self.max_rate1,
            NodeKind.REP: self.max_rep,
            NodeKind.BIREP: self.max_birep,
            NodeKind.SPC: self.max_spc,
        }.get(kind)

    def allows(self, kind: NodeKind, width: int) -> bool:
        if kind not in self.enabled_kinds:
            return False
        limit = self.max_width(kind)
        return limit is None or width <= limit

    @classmethod
    def unconstrained(cls) -> TreeConstraints:
        return cls(max_rep=None, max_birep=None, max_spc=None)

    def without_spc(self) -> TreeConstraints:
        """The "No SPC" variant: SPC patterns are decomposed further."""
        return dataclasses.replace(self, enable_spc=False)

    @classmethod
    def fully_decomposed(cls) -> TreeConstraints:
        """Width-1 leaves only, i.e. the plain SC decoder tree."""
        return cls(
            max_rate0=1,
            max_rate1=1,
            max_rep=1,
            max_birep=1,
            max_spc=1,
            enable_birep=False,
            enable_spc=False,
        )


# Scales the unit-cost fast-SSC schedule of the constrained (512, 128) + CRC-16
# GA tree at P = 64 (159 cycles) to the 114 cycles per trial of the reference
# fast-SSC-flip hardware.
REFERENCE_CALIBRATION = 0.72


@dataclass(frozen=True)
class HwParams:
    """Hardware parameters of the clock-cycle and memory models.

    ``calibration`` multiplies the fast-SSC schedule; 1.0 keeps the unit
    costs and ``REFERENCE_CALIBRATION`` matches the reference hardware.
    """

    p_lanes: int = 64
    q_lambda: int = 8
    t_max: int = 8
    calibration: float = 1.0

    def __post_init__(self):
        if self.p_lanes < 2 or not _is_power_of_two(self.p_lanes):
            raise ConfigurationError("p_lanes must be a power of two >= 2", {"p_lanes": self.p_lanes})
        if self.q_lambda < 1:
            raise ConfigurationError("q_lambda must be >= 1", {"q_lambda": self.q_lambda})
        if self.t_max < 1:
            raise ConfigurationError("t_max must be >= 1", {"t_max": self.t_max})
        if self.calibration <= 0:
            raise ConfigurationError("calibration must be positive", {"calibration": self.calibration})


def _bool_from_text(value: Union[str, bool]) -> bool:
    if isinstance(value, bool):
        return value
    text = value.strip().lower()
    if text in {"1", "true", "yes", "on"}:
        return True
    if text in {"0", "false", "no", "off"}:
        return False
    raise ValueError(f"not a boolean: {value!r}")


def _optional_int(value: Any) -> Optional[int]:
    if value is None:
        return None
    if isinstance(value, str) and value.strip().lower() in {"", "none", "inf"}:
        return None
    return int(value, 0) if isinstance(value, str) else int(value)


def _int(value: Any) -> int:
    return int(value, 0) if isinstance(value, str) else int(value)


def _float_list(value: Any) -> List[float]:
    if isinstance(value, str):
        return [float(item) for item in value.replace(";", ",").split(",") if item.strip()]
    return [float(item) for item in value]


def _optional_path(value: Any) -> Optional[Path]:
    if value is None or (isinstance(value, str) and not value.strip()):
        return None
    return Path(value)


@dataclass
class SweepConfig:
    """Everything a Monte-Carlo FER sweep needs; keys mirror the config file."""

    variant: DecoderVariant = DecoderVariant.FAST_SSC_FLIP
    n_bits: int = 512
    k_info: int = 128
    design_ebn0: float = 2.5
    construction: ConstructionMethod = ConstructionMethod.GA
    frozen_file: Optional[Path] = None
    crc_width: int = 16
    crc_poly: Optional[int] = None
    crc_init: int = 0
    crc_xor_out: int = 0
    crc_reflect: bool = False
    crc_in_k: bool = True
    t_max: int = 8
    s_factor: float = 0.5
    max_rate0: Optional[int] = None
    max_rate1: Optional[int] = None
    max_rep: Optional[int] = 32
    max_birep: Optional[int] = 64
    max_spc: Optional[int] = 64
    enable_birep: bool = True
    enable_spc: bool = True
    ebn0: List[float] = field(default_factory=lambda: [2.5, 3.0])
    min_errors: int = 100
    max_frames: int = 10_000_000
    seed: int = 0
    workers: int = 1
    block_frames: int = 256
    p_lanes: int = 64
    q_lambda: int = 8
    calibration: float = 1.0

    _CONVERTERS = {
        "variant": DecoderVariant,
        "n_bits": _int,
        "k_info": _int,
        "design_ebn0": float,
        "construction": ConstructionMethod,
        "frozen_file": _optional_path,
        "crc_width": _int,
        "crc_poly": _optional_int,
        "crc_init": _int,
        "crc_xor_out": _int,
        "crc_reflect": _bool_from_text,
        "crc_in_k": _bool_from_text,
        "t_max": _int,
        "s_factor": float,
        "max_rate0": _optional_int,
        "max_rate1": _optional_int,
        "max_rep": _optional_int,
        "max_birep": _optional_int,
        "max_spc": _optional_int,
        "enable_birep": _bool_from_text,
        "enable_spc": _bool_from_text,
        "ebn0": _float_list,
        "min_errors": _int,
        "max_frames": _int,
        "seed": _int,
        "workers": _int,
        "block_frames": _int,
        "p_lanes": _int,
        "q_lambda": _int,
        "calibration": float,
    }

    @classmethod
    def from_mapping(cls, values: Mapping[str, Any], base: Optional[SweepConfig] = None) -> SweepConfig:
        """Build a config from flat key=value pairs, starting from ``base``."""
        converters: Dict[str, Callable[[Any], Any]] = cls._CONVERTERS
        updates: Dict[str, Any] = {}
        for key, raw in values.items():
            name = key.strip().replace("-", "_")
            if name not in converters:
                raise ConfigurationError(f"Unknown configuration key '{key}'", {"key": key})
            try:
                updates[name] = converters[name](raw)
            except (TypeError, ValueError) as exc:
                raise ConfigurationError(
                    f"Invalid value for '{key}': {raw!r} ({exc})", {"key": key, "value": raw}
                ) from exc
        config = dataclasses.replace(base or cls(), **updates)
        config.validate()
        return config

    def validate(self) -> None:
        checks = [
            (bool(self.ebn0), "ebn0 grid must not be empty"),
            (self.min_errors >= 1, "min_errors must be >= 1"),
            (self.max_frames >= 1, "max_frames must be >= 1"),
            (self.t_max >= 1, "t_max must be >= 1"),
            (0.0 <= self.s_factor <= 1.0, "s_factor must lie in [0, 1]"),
            (self.workers >= 1, "workers must be >= 1"),
            (self.seed >= 0, "seed must be >= 0"),
            (self.block_frames >= 1, "block_frames must be >= 1"),
            (self.crc_width >= 0, "crc_width must be >= 0"),
        ]
        for ok, message in checks:
            if not ok:
                raise ConfigurationError(message)
        # Constructing these validates their own invariants.
        self.tree_constraints()
        self.hw_params()
        self.crc_spec()

    def crc_spec(self) -> Optional[CrcSpec]:
        """CRC parameters, or ``None`` for a CRC-less configuration."""
        if self.crc_width == 0:
            return None
        if self.crc_poly is None:
            preset = CrcSpec.preset(self.crc_width)
            return dataclasses.replace(
                preset, init=self.crc_init, xor_out=self.crc_xor_out, reflect=self.crc_reflect
            )
        return CrcSpec(
            width=self.crc_width,
            polynomial=self.crc_poly,
            init=self.crc_init,
            reflect=self.crc_reflect,
            xor_out=self.crc_xor_out,
        )

    def tree_constraints(self) -> TreeConstraints:
        return TreeConstraints(
            max_rate0=self.max_rate0,
            max_rate1=self.max_rate1,
            max_rep=self.max_rep,
            max_birep=self.max_birep,
            max_spc=self.max_spc,
            enable_birep=self.enable_birep,
            enable_spc=self.enable_spc,
        )

    def hw_params(self) -> HwParams:
        return HwParams(
            p_lanes=self.p_lanes,
            q_lambda=self.q_lambda,
            t_max=self.t_max,
            calibration=self.calibration,
        )

    @property
    def total_info_bits(self) -> int:
        """Unfrozen positions of the code (payload + CRC)."""
        return self.k_info if self.crc_in_k else self.k_info + self.crc_width

    @property
    def effective_t_max(self) -> int:
        """Trials the configured variant can actually use."""
        if not self.variant.is_flip or self.crc_width == 0:
            return 1
        return self.t_max


def load_sweep_config(path: Union[str, Path], base: Optional[SweepConfig] = None) -> SweepConfig:
    """Read a flat ``key=value`` file (``#`` starts a comment)."""
    path = Path(path)
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise ConfigurationError(f"Cannot read config file {path}: {exc}", {"path": str(path)}) from exc
    values: Dict[str, str] = {}
    for number, line in enumerate(lines, start=1):
        text = line.split("#", 1)[0].strip()
        if not text:
            continue
        if "=" not in text:
            raise ConfigurationError(
                f"{path}:{number}: expected key=value, got {line!r}",
                {"path": str(path), "line_number": number},
            )
        key, value = text.split("=", 1)
        values[key.strip()] = value.strip()
    return SweepConfig.from_mapping(values, base=base)
