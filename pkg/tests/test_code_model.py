"""Tests for code definitions, construction and frozen-set files."""

import numpy as np
import pytest

from polar_flip.config import ConstructionMethod
from polar_flip.construction import (
    bhattacharyya_parameters,
    construct_frozen_set,
    ga_mean_llrs,
    load_frozen_set,
    save_frozen_set,
)
from polar_flip.exceptions import CodeDefinitionError, FrozenSetFormatError
from polar_flip.models.code import PolarCode


class TestPolarCode:
    """Test PolarCode invariants and derived views."""

    def test_info_positions_and_mask(self, example_code):
        """Test the unfrozen positions come out in ascending order."""
        assert example_code.info_positions.tolist() == [2, 3, 5, 6, 7]
        assert example_code.frozen_mask.tolist() == [True, True, False, False, True, False, False, False]
        assert example_code.first_info_index == 2
        assert example_code.n_stages == 3

    def test_views_are_read_only(self, example_code):
        """Test cached arrays cannot be modified through the code."""
        with pytest.raises(ValueError):
            example_code.info_positions[0] = 0

    def test_payload_accounting(self):
        """Test CRC bits are part of k but not of the payload."""
        code = PolarCode.from_frozen(16, range(6), crc_bits=4)
        assert code.k_info == 10
        assert code.k_payload == 6
        assert code.payload_rate == pytest.approx(6 / 16)

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"n_bits": 6, "k_info": 3, "frozen": {0, 1, 2}},
            {"n_bits": 8, "k_info": 5, "frozen": {0, 1}},
            {"n_bits": 8, "k_info": 5, "frozen": {0, 1, 8}},
            {"n_bits": 8, "k_info": 4, "frozen": {0, 1, 2, 3}, "crc_bits": 4},
        ],
    )
    def test_invalid_codes_raise(self, kwargs):
        """Test invalid lengths, sizes, ranges and CRC sizes are rejected."""
        with pytest.raises(CodeDefinitionError):
            PolarCode(**kwargs)

    def test_dict_round_trip(self, example_code):
        """Test to_dict/from_dict preserve the code."""
        assert PolarCode.from_dict(example_code.to_dict()) == example_code


class TestConstruction:
    """Test Gaussian-approximation and Bhattacharyya construction."""

    def test_length_two_freezes_index_zero(self):
        """Test index 0 is always the weaker of two channels."""
        for method in ConstructionMethod:
            assert construct_frozen_set(2, 1, 1.0, method=method).frozen == frozenset({0})

    def test_eight_five_at_two_db(self):
        """Test the (8, 5) code at 2 dB freezes the three weakest channels."""
        code = construct_frozen_set(8, 5, 2.0)
        assert code.frozen == frozenset({0, 1, 2})
        assert code.first_info_index == 3

    def test_first_info_index_of_512_144(self):
        """Test the (512, 144) code at 2.5 dB starts its information bits at 127."""
        code = construct_frozen_set(512, 144, 2.5)
        assert code.first_info_index == 127
        assert code.info_positions[0] == 127

    def test_ga_means_follow_polarization(self):
        """Test the plus branch doubles the mean and the minus branch degrades it."""
        means = ga_mean_llrs(8, 4, 2.0)
        # Channel mean 2/sigma^2 = 2 * 10^0.2 at rate 1/2; three plus steps multiply it by 8.
        assert means[7] == pytest.approx(16 * 10 ** 0.2)
        assert means[7] > means[3] > means[0]
        assert means[0] == means.min()

    def test_ga_handles_large_means(self):
        """Test long codes at high design points stay finite and ordered."""
        means = ga_mean_llrs(1024, 512, 6.0)
        assert np.all(np.isfinite(means))
        assert means[-1] == means.max()
        assert means[0] == means.min()

    def test_bhattacharyya_parameters_in_unit_interval(self):
        """Test every parameter is a probability-like reliability."""
        z = bhattacharyya_parameters(64, 32, 1.0)
        assert np.all((z >= 0) & (z <= 1))
        assert z[0] == z.max()
        assert z[-1] == z.min()

    def test_construction_is_deterministic(self):
        """Test identical inputs give identical frozen sets."""
        first = construct_frozen_set(512, 128, 2.5, crc_bits=16)
        second = construct_frozen_set(512, 128, 2.5, crc_bits=16)
        assert first == second
        assert len(first.frozen) == 384
        assert first.crc_bits == 16

    def test_methods_agree_on_extreme_channels(self):
        """Test both estimators freeze u_0 and keep u_{N-1} for a (64, 32) code."""
        for method in ConstructionMethod:
            code = construct_frozen_set(64, 32, 2.0, method=method)
            assert 0 in code.frozen
            assert 63 not in code.frozen

    @pytest.mark.parametrize("n_bits, k_info", [(12, 6), (8, 0), (8, 8), (1, 1)])
    def test_invalid_parameters_raise(self, n_bits, k_info):
        """Test non-power-of-two lengths and out-of-range k are rejected."""
        with pytest.raises(CodeDefinitionError):
            construct_frozen_set(n_bits, k_info, 2.0)


class TestFrozenSetFiles:
    """Test loading and saving frozen-set files."""

    def test_shipped_example_file(self, frozen_file_8_5, example_code):
        """Test the shipped (8, 5) file loads with frozen set {0, 1, 4}."""
        assert load_frozen_set(frozen_file_8_5) == example_code

    def test_rate_one_file(self, tmp_path):
        """Test a header without indices yields an unfrozen code."""
        path = tmp_path / "rate1.frozen"
        path.write_text("N=2 k=2 crc=0\n")
        code = load_frozen_set(path)
        assert code.frozen == frozenset()
        assert code.k_info == 2

    def test_save_then_load(self, tmp_path):
        """Test save_frozen_set writes what load_frozen_set reads."""
        code = construct_frozen_set(32, 16, 1.5, crc_bits=4)
        assert load_frozen_set(save_frozen_set(code, tmp_path / "c.frozen")) == code

    @pytest.mark.parametrize(
        "text, line_number",
        [
            ("N=8 k=5 crc=0\n0\n1\n8\n", 4),
            ("N=8 k=5 crc=0\n0\nx\n4\n", 3),
            ("N=8 k=5\n0\n1\n4\n", 1),
        ],
    )
    def test_malformed_lines(self, tmp_path, text, line_number):
        """Test out-of-range and malformed lines report their line number."""
        path = tmp_path / "bad.frozen"
        path.write_text(text)
        with pytest.raises(FrozenSetFormatError) as excinfo:
            load_frozen_set(path)
        assert excinfo.value.line_number == line_number
        assert excinfo.value.path == str(path)

    def test_wrong_count(self, tmp_path):
        """Test a frozen-set size other than N - k is rejected."""
        path = tmp_path / "short.frozen"
        path.write_text("N=8 k=5 crc=0\n0\n1\n")
        with pytest.raises(FrozenSetFormatError):
            load_frozen_set(path)

    def test_missing_file(self, tmp_path):
        """Test an unreadable file raises a format error."""
        with pytest.raises(FrozenSetFormatError):
            load_frozen_set(tmp_path / "absent.frozen")
