"""Tests for sweep configuration parsing and validation."""

import pytest

from polar_flip.config import (
    ConstructionMethod,
    CrcSpec,
    DecoderVariant,
    NodeKind,
    REFERENCE_CALIBRATION,
    SweepConfig,
    TreeConstraints,
    load_sweep_config,
)
from polar_flip.exceptions import ConfigurationError

from conftest import REPO_ROOT


class TestSweepConfig:
    """Test SweepConfig construction and derived settings."""

    def test_defaults_are_valid(self):
        """Test the default configuration validates."""
        config = SweepConfig()
        config.validate()
        assert config.variant is DecoderVariant.FAST_SSC_FLIP
        assert config.crc_spec() == CrcSpec()
        assert config.effective_t_max == 8

    def test_from_mapping_converts_text(self):
        """Test string values are converted to their field types."""
        config = SweepConfig.from_mapping(
            {
                "variant": "scf",
                "n-bits": "64",
                "crc_poly": "0x3",
                "crc_width": "4",
                "ebn0": "1.0; 2.0, 3.5",
                "max_spc": "none",
                "enable_spc": "no",
                "construction": "bhattacharyya",
            }
        )
        assert config.variant is DecoderVariant.SCF
        assert config.n_bits == 64
        assert config.crc_spec() == CrcSpec(width=4, polynomial=0x3)
        assert config.ebn0 == [1.0, 2.0, 3.5]
        assert config.max_spc is None
        assert not config.tree_constraints().allows(NodeKind.SPC, 4)
        assert config.construction is ConstructionMethod.BHATTACHARYYA

    def test_crc_outside_k(self):
        """Test crc_in_k false adds the CRC on top of k."""
        config = SweepConfig.from_mapping({"k_info": "112", "crc_in_k": "false"})
        assert config.total_info_bits == 128

    def test_crc_less_runs_single_trials(self):
        """Test a CRC width of 0 disables the CRC and flipping."""
        config = SweepConfig.from_mapping({"crc_width": "0"})
        assert config.crc_spec() is None
        assert config.effective_t_max == 1

    def test_non_flip_variant_single_trial(self):
        """Test non-flip variants report one trial in the worst case."""
        assert SweepConfig.from_mapping({"variant": "fast-ssc"}).effective_t_max == 1

    def test_tree_constraints(self):
        """Test node limits flow into TreeConstraints."""
        config = SweepConfig.from_mapping({"max_rep": "8", "enable_birep": "false"})
        assert config.tree_constraints() == TreeConstraints(max_rep=8, enable_birep=False)

    @pytest.mark.parametrize(
        "values",
        [
            {"bogus": "1"},
            {"t_max": "zero"},
            {"variant": "scl"},
            {"ebn0": ""},
            {"min_errors": "0"},
            {"s_factor": "1.5"},
            {"seed": "-1"},
            {"workers": "0"},
            {"max_rep": "12"},
            {"crc_width": "5"},
            {"p_lanes": "48"},
        ],
    )
    def test_invalid_values(self, values):
        """Test unknown keys and out-of-range values raise ConfigurationError."""
        with pytest.raises(ConfigurationError):
            SweepConfig.from_mapping(values)


class TestConfigFiles:
    """Test key=value configuration files."""

    def test_shipped_configs_load(self):
        """Test every shipped sweep configuration validates."""
        paths = sorted((REPO_ROOT / "configs").glob("*.conf"))
        assert paths
        for path in paths:
            config = load_sweep_config(path)
            assert (config.n_bits, config.k_info, config.crc_width) == (512, 128, 16)
            if config.variant is DecoderVariant.FAST_SSC_FLIP:
                assert config.hw_params().calibration == REFERENCE_CALIBRATION

    def test_no_spc_config(self):
        """Test the no-SPC configuration disables SPC nodes."""
        config = load_sweep_config(REPO_ROOT / "configs" / "fast_ssc_flip_nospc_t8.conf")
        assert not config.enable_spc

    def test_comments_and_base(self, tmp_path):
        """Test comments are skipped and unset keys come from the base."""
        path = tmp_path / "run.conf"
        path.write_text("# comment\nvariant = sc   # inline\n\nseed=7\n")
        config = load_sweep_config(path, base=SweepConfig(t_max=4))
        assert config.variant is DecoderVariant.SC
        assert config.seed == 7
        assert config.t_max == 4

    def test_malformed_line(self, tmp_path):
        """Test a line without '=' names its line number."""
        path = tmp_path / "bad.conf"
        path.write_text("variant=sc\noops\n")
        with pytest.raises(ConfigurationError) as excinfo:
            load_sweep_config(path)
        assert excinfo.value.context["line_number"] == 2

    def test_missing_file(self, tmp_path):
        """Test an unreadable file raises ConfigurationError."""
        with pytest.raises(ConfigurationError):
            load_sweep_config(tmp_path / "absent.conf")
