"""Public API for the polar-flip codec, decoders and FER simulator."""

from __future__ import annotations

__version__ = "0.1.0"

from .channel import ChannelParams, frame_rng, llr_from_channel, modulate_bpsk, transmit_awgn
from .config import (
    ConstructionMethod,
    CrcSpec,
    DecoderVariant,
    HwParams,
    NodeKind,
    REFERENCE_CALIBRATION,
    SweepConfig,
    TreeConstraints,
    load_sweep_config,
)
from .construction import construct_frozen_set, load_frozen_set, save_frozen_set
from .crc import crc_attach, crc_check, crc_remainder
from .decoder_tree import DecoderTree, TreeNode, build_decoder_tree
from .decoders import (
    FastSSCDecoder,
    FastSSCFlipDecoder,
    SCDecoder,
    SCFlipDecoder,
    create_decoder,
    fast_ssc_decode,
    fast_ssc_flip_decode,
    sc_decode,
    scf_decode,
)
from .encoding import encode, polar_transform
from .exceptions import (
    CodeDefinitionError,
    ConfigurationError,
    CurveRangeError,
    DecoderError,
    EncodingError,
    FrozenSetFormatError,
    PolarFlipError,
)
from .latency import (
    LatencyReport,
    MemoryEstimate,
    average_execution,
    fast_ssc_latency,
    latency_report,
    memory_estimate,
    sc_latency_semiparallel,
    scf_worst_case,
)

# Import all models for convenience
from .models import (
    CSV_HEADER,
    DecisionEntry,
    DecisionList,
    DecodeResult,
    FlipTarget,
    GapReport,
    PolarCode,
    SweepRow,
    TrialRecord,
)
from .results_io import compare_runs, emit_csv, read_csv
from .simulation import SweepRunner, run_sweep

__all__ = [
    '__version__',
    # Configuration
    'ConstructionMethod',
    'CrcSpec',
    'DecoderVariant',
    'HwParams',
    'NodeKind',
    'REFERENCE_CALIBRATION',
    'SweepConfig',
    'TreeConstraints',
    'load_sweep_config',
    # Codes and trees
    'PolarCode',
    'construct_frozen_set',
    'load_frozen_set',
    'save_frozen_set',
    'DecoderTree',
    'TreeNode',
    'build_decoder_tree',
    # Encoding, CRC and channel
    'polar_transform',
    'encode',
    'crc_remainder',
    'crc_attach',
    'crc_check',
    'ChannelParams',
    'frame_rng',
    'modulate_bpsk',
    'transmit_awgn',
    'llr_from_channel',
    # Decoders
    'SCDecoder',
    'SCFlipDecoder',
    'FastSSCDecoder',
    'FastSSCFlipDecoder',
    'create_decoder',
    'sc_decode',
    'scf_decode',
    'fast_ssc_decode',
    'fast_ssc_flip_decode',
    'DecisionEntry',
    'DecisionList',
    'FlipTarget',
    'DecodeResult',
    # Latency
    'LatencyReport',
    'MemoryEstimate',
    'sc_latency_semiparallel',
    'scf_worst_case',
    'fast_ssc_latency',
    'memory_estimate',
    'average_execution',
    'latency_report',
    # Simulation and results
    'TrialRecord',
    'SweepRow',
    'GapReport',
    'CSV_HEADER',
    'SweepRunner',
    'run_sweep',
    'emit_csv',
    'read_csv',
    'compare_runs',
    # Exceptions
    'PolarFlipError',
    'CodeDefinitionError',
    'FrozenSetFormatError',
    'EncodingError',
    'DecoderError',
    'ConfigurationError',
    'CurveRangeError',
]
