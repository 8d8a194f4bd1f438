"""Tests for BPSK modulation, the AWGN channel and per-frame random streams."""

import numpy as np
import pytest

from polar_flip.channel import ChannelParams, frame_rng, llr_from_channel, modulate_bpsk, transmit_awgn
from polar_flip.exceptions import ConfigurationError


class TestModulation:
    """Test the BPSK mapping."""

    def test_mapping(self):
        """Test 0 maps to +1 and 1 maps to -1."""
        assert modulate_bpsk([0, 1, 0]).tolist() == [1.0, -1.0, 1.0]

    def test_unit_energy(self, rng):
        """Test every symbol has unit energy."""
        symbols = modulate_bpsk(rng.integers(0, 2, size=64, dtype=np.uint8))
        assert np.all(symbols * symbols == 1.0)


class TestChannelParams:
    """Test the Eb/N0 to sigma conversion."""

    def test_sigma(self):
        """Test sigma at 0 dB and rate 1/2 is sqrt(1)."""
        assert ChannelParams(ebn0_db=0.0, rate=0.5).sigma == pytest.approx(1.0)

    def test_sigma_at_payload_rate(self):
        """Test the (512, 128) code with 16 CRC bits uses rate 112/512."""
        params = ChannelParams(ebn0_db=2.5, rate=112 / 512)
        assert params.sigma == pytest.approx(np.sqrt(1.0 / (2.0 * 112 / 512 * 10 ** 0.25)))

    def test_invalid_rate(self):
        """Test rates outside (0, 1] are rejected."""
        with pytest.raises(ConfigurationError):
            ChannelParams(ebn0_db=1.0, rate=0.0)


class TestTransmission:
    """Test AWGN noise and channel LLRs."""

    def test_noiseless_limit(self, rng):
        """Test sigma 0 leaves the symbols untouched."""
        symbols = modulate_bpsk([0, 1, 1, 0])
        received = transmit_awgn(symbols, ChannelParams(ebn0_db=1.0, rate=0.5), rng, sigma=0.0)
        assert received.tolist() == symbols.tolist()

    def test_same_frame_same_noise(self):
        """Test a frame's stream depends only on seed, point and frame."""
        params = ChannelParams(ebn0_db=1.0, rate=0.5)
        symbols = np.ones(32)
        first = transmit_awgn(symbols, params, frame_rng(7, 3, 1))
        second = transmit_awgn(symbols, params, frame_rng(7, 3, 1))
        other = transmit_awgn(symbols, params, frame_rng(7, 4, 1))
        assert first.tolist() == second.tolist()
        assert first.tolist() != other.tolist()

    def test_points_use_distinct_streams(self):
        """Test the same frame number at another grid point draws other noise."""
        first = frame_rng(7, 0, 0).standard_normal(8)
        second = frame_rng(7, 0, 1).standard_normal(8)
        assert not np.array_equal(first, second)

    def test_noise_variance(self):
        """Test the sample variance of 10^6 draws is within 1% of sigma^2."""
        params = ChannelParams(ebn0_db=2.0, rate=0.25)
        noise = transmit_awgn(np.zeros(1_000_000), params, frame_rng(11, 0))
        assert noise.var() == pytest.approx(params.sigma ** 2, rel=0.01)

    def test_llr_values(self):
        """Test LLRs are 2y/sigma^2."""
        assert llr_from_channel(np.array([1.0]), 1.0).tolist() == [2.0]
        assert llr_from_channel(np.array([0.0]), 0.5).tolist() == [0.0]
        assert llr_from_channel(np.array([-0.5]), 0.5).tolist() == [-4.0]

    def test_llr_sign_follows_y(self, rng):
        """Test sign(llr) equals sign(y)."""
        y = rng.standard_normal(100)
        assert np.array_equal(np.sign(llr_from_channel(y, 0.8)), np.sign(y))

    def test_llr_requires_positive_sigma(self):
        """Test sigma must be positive."""
        with pytest.raises(ConfigurationError):
            llr_from_channel(np.zeros(2), 0.0)
