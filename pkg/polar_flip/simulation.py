"""Monte-Carlo FER sweeps over an Eb/N0 grid."""

from __future__ import annotations

import concurrent.futures
import logging
from collections import deque
from contextlib import closing
from typing import Deque, Iterator, List, Optional

import numpy as np
from tqdm import tqdm

from .channel import ChannelParams, frame_rng, llr_from_channel, modulate_bpsk, transmit_awgn
from .config import CrcSpec, SweepConfig
from .construction import construct_frozen_set, load_frozen_set
from .crc import crc_attach
from .decoder_tree import DecoderTree, build_decoder_tree
from .decoders import BaseDecoder, create_decoder
from .encoding import encode
from .exceptions import ConfigurationError
from .latency import per_trial_latency
from .models.code import PolarCode
from .models.results import SweepRow, TrialRecord

__all__ = ["resolve_code", "FrameSimulator", "SweepRunner", "run_sweep"]

logger = logging.getLogger(__name__)


def resolve_code(config: SweepConfig) -> PolarCode:
    """Load the configured frozen-set file or construct the code."""
    if config.frozen_file is not None:
        code = load_frozen_set(config.frozen_file)
        if code.crc_bits != config.crc_width:
            raise ConfigurationError(
                f"{config.frozen_file} declares crc={code.crc_bits} but crc_width is {config.crc_width}",
                {"frozen_file": str(config.frozen_file), "crc_width": config.crc_width},
            )
        return code
    return construct_frozen_set(
        config.n_bits,
        config.total_info_bits,
        config.design_ebn0,
        crc_bits=config.crc_width,
        method=config.construction,
    )


class FrameSimulator:
    """Transmits and decodes individual frames of one configuration."""

    def __init__(self, config: SweepConfig, code: PolarCode, tree: Optional[DecoderTree] = None):
        self.config = config
        self.code = code
        self.crc: Optional[CrcSpec] = config.crc_spec()
        self.decoder: BaseDecoder = create_decoder(
            config.variant,
            code,
            self.crc,
            t_max=config.t_max,
            s_factor=config.s_factor,
            constraints=config.tree_constraints(),
            tree=tree,
        )

    def run_frame(self, point_index: int, ebn0_db: float, frame_index: int) -> TrialRecord:
        rng = frame_rng(self.config.seed, frame_index, point_index)
        params = ChannelParams(ebn0_db=ebn0_db, rate=self.code.payload_rate, seed=self.config.seed)
        payload = rng.integers(0, 2, size=self.code.k_payload, dtype=np.uint8)
        info = crc_attach(payload, self.crc) if self.crc is not None else payload
        received = transmit_awgn(modulate_bpsk(encode(self.code, info)), params, rng)
        result = self.decoder.decode(llr_from_channel(received, params.sigma))
        bit_errors = int(np.count_nonzero(self.decoder.payload(result) != payload))
        return TrialRecord(
            frame_index=frame_index, trials_used=result.trials_used, bit_errors=bit_errors
        )

    def run_block(self, point_index: int, ebn0_db: float, start: int, count: int) -> List[TrialRecord]:
        return [self.run_frame(point_index, ebn0_db, frame) for frame in range(start, start + count)]


_WORKER: Optional[FrameSimulator] = None


def _init_worker(config: SweepConfig, code: PolarCode) -> None:
    global _WORKER
    _WORKER = FrameSimulator(config, code)


def _run_block(point_index: int, ebn0_db: float, start: int, count: int) -> List[TrialRecord]:
    return _WORKER.run_block(point_index, ebn0_db, start, count)


class SweepRunner:
    """Resolves a configuration once and runs its sweep.

    Frames are processed in blocks of ``block_frames``; with several workers
    the blocks run in a process pool but are consumed in frame order, so the
    stop rule and every statistic are independent of the worker count.
    """

    def __init__(self, config: SweepConfig, code: Optional[PolarCode] = None):
        config.validate()
        self.config = config
        self.code = code if code is not None else resolve_code(config)
        self.tree = build_decoder_tree(self.code, config.tree_constraints())
        self.per_trial_cc = per_trial_latency(config.variant, self.code, config.hw_params(), tree=self.tree)
        logger.info(
            "Sweep: %s on (%d, %d) code, crc=%d, t_max=%d, b=%d, %.1f cycles/trial",
            config.variant.value,
            self.code.n_bits,
            self.code.k_info,
            self.code.crc_bits,
            config.effective_t_max,
            self.code.first_info_index,
            self.per_trial_cc,
        )

    def run(self, progress: bool = True) -> List[SweepRow]:
        """Run every grid point in order."""
        executor = None
        if self.config.workers > 1:
            executor = concurrent.futures.ProcessPoolExecutor(
                max_workers=self.config.workers, initializer=_init_worker, initargs=(self.config, self.code)
            )
            simulator = None
        else:
            simulator = FrameSimulator(self.config, self.code, self.tree)
        try:
            return [
                self._run_point(point_index, ebn0, simulator, executor, progress)
                for point_index, ebn0 in enumerate(self.config.ebn0)
            ]
        finally:
            if executor is not None:
                executor.shutdown(wait=True, cancel_futures=True)

    def _blocks(
        self,
        point_index: int,
        ebn0_db: float,
        simulator: Optional[FrameSimulator],
        executor: Optional[concurrent.futures.Executor],
    ) -> Iterator[List[TrialRecord]]:
        max_frames, size = self.config.max_frames, self.config.block_frames
        starts = iter(range(0, max_frames, size))
        if executor is None:
            for start in starts:
                yield simulator.run_block(point_index, ebn0_db, start, min(size, max_frames - start))
            return

        pending: Deque[concurrent.futures.Future] = deque()

        def submit_next() -> None:
            start = next(starts, None)
            if start is not None:
                pending.append(executor.submit(_run_block, point_index, ebn0_db, start, min(size, max_frames - start)))

        for _ in range(2 * self.config.workers):
            submit_next()
        try:
            while pending:
                records = pending.popleft().result()
                submit_next()
                yield records
        finally:
            for future in pending:
                future.cancel()

    def _run_point(
        self,
        point_index: int,
        ebn0_db: float,
        simulator: Optional[FrameSimulator],
        executor: Optional[concurrent.futures.Executor],
        progress: bool,
    ) -> SweepRow:
        config = self.config
        frames = frame_errors = bit_errors = trials = 0
        with tqdm(
            total=config.max_frames, desc=f"{ebn0_db:g} dB", unit="frame", leave=False, disable=not progress
        ) as bar, closing(self._blocks(point_index, ebn0_db, simulator, executor)) as blocks:
            for block in blocks:
                for record in block:
                    frames += 1
                    trials += record.trials_used
                    bit_errors += record.bit_errors
                    frame_errors += record.frame_error
                    if frame_errors >= config.min_errors:
                        break
                bar.update(len(block))
                bar.set_postfix(errors=frame_errors)
                if frame_errors >= config.min_errors:
                    break

        avg_trials = trials / frames
        row = SweepRow(
            ebn0_db=ebn0_db,
            frames=frames,
            frame_errors=frame_errors,
            bit_errors=bit_errors,
            fer=frame_errors / frames,
            ber=bit_errors / (frames * self.code.k_payload),
            avg_trials=avg_trials,
            per_trial_cc=self.per_trial_cc,
            avg_cc=avg_trials * self.per_trial_cc,
            wc_cc=config.effective_t_max * self.per_trial_cc,
        )
        logger.info(
            "Eb/N0 %.2f dB: %d frames, %d errors, FER %.3e, avg trials %.3f",
            ebn0_db,
            frames,
            frame_errors,
            row.fer,
            avg_trials,
        )
        return row


def run_sweep(config: SweepConfig, code: Optional[PolarCode] = None, progress: bool = False) -> List[SweepRow]:
    """Run a full sweep and return one row per grid point, in grid order."""
    return SweepRunner(config, code).run(progress=progress)
