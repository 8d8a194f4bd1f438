"""Tests for CSV emission, parsing and curve comparison."""

import dataclasses

import pytest

from polar_flip.exceptions import ConfigurationError, CurveRangeError
from polar_flip.models.results import CSV_HEADER, SweepRow
from polar_flip.results_io import compare_runs, emit_csv, interpolate_ebn0, read_csv, rows_to_csv


def make_row(ebn0_db, frames, frame_errors, avg_trials=1.25, per_trial_cc=114.0):
    return SweepRow(
        ebn0_db=ebn0_db,
        frames=frames,
        frame_errors=frame_errors,
        bit_errors=3 * frame_errors,
        fer=frame_errors / frames,
        ber=3 * frame_errors / (frames * 112),
        avg_trials=avg_trials,
        per_trial_cc=per_trial_cc,
        avg_cc=avg_trials * per_trial_cc,
        wc_cc=8 * per_trial_cc,
    )


@pytest.fixture
def curve():
    """FER 10^-1, 10^-2, 10^-3, 10^-4 at 1, 2, 3, 4 dB."""
    return [make_row(float(db), 100 * 10 ** db, 100) for db in range(1, 5)]


class TestCsv:
    """Test writing and reading sweep CSV files."""

    def test_single_row_file(self, tmp_path):
        """Test one row produces the header plus one line."""
        path = emit_csv([make_row(2.5, 1000, 7)], tmp_path / "out.csv")
        lines = path.read_text().splitlines()
        assert lines[0] == ",".join(CSV_HEADER)
        assert lines[0] == "EbN0dB,frames,frameErrors,bitErrors,FER,BER,avgTrials,perTrialCC,avgCC,wcCC"
        assert len(lines) == 2
        fields = dict(zip(CSV_HEADER, lines[1].split(",")))
        assert float(fields["FER"]) == pytest.approx(int(fields["frameErrors"]) / int(fields["frames"]))

    def test_parse_back(self, tmp_path, curve):
        """Test read_csv reproduces the emitted rows."""
        rows = curve + [make_row(2.25, 3, 1, avg_trials=7 / 3)]
        parsed = read_csv(emit_csv(rows, tmp_path / "curve.csv"))
        assert len(parsed) == len(rows)
        for original, loaded in zip(rows, parsed):
            assert (loaded.frames, loaded.frame_errors, loaded.bit_errors) == (
                original.frames,
                original.frame_errors,
                original.bit_errors,
            )
            for name in ("ebn0_db", "fer", "ber", "avg_trials", "per_trial_cc", "avg_cc", "wc_cc"):
                assert getattr(loaded, name) == pytest.approx(getattr(original, name), rel=1e-9)

    def test_empty_rows_rejected(self):
        """Test there is nothing to write without rows."""
        with pytest.raises(ConfigurationError):
            rows_to_csv([])

    def test_missing_columns(self, tmp_path):
        """Test files without the standard header are rejected."""
        path = tmp_path / "other.csv"
        path.write_text("EbN0dB,FER\n1.0,0.1\n")
        with pytest.raises(ConfigurationError):
            read_csv(path)


class TestCompareRuns:
    """Test Eb/N0 gap measurement at a target FER."""

    def test_interpolation_on_grid_point(self, curve):
        """Test a target FER on a grid point returns that point."""
        assert interpolate_ebn0(curve, 1e-3) == pytest.approx(3.0)

    def test_interpolation_between_points(self, curve):
        """Test interpolation is linear in log10(FER)."""
        assert interpolate_ebn0(curve, 10 ** -2.5) == pytest.approx(2.5)

    def test_identical_runs(self, tmp_path, curve):
        """Test identical files have zero gap."""
        baseline = emit_csv(curve, tmp_path / "a.csv")
        candidate = emit_csv(curve, tmp_path / "b.csv")
        report = compare_runs(baseline, candidate)
        assert report.gap_db == pytest.approx(0.0)
        assert report.baseline_label == str(baseline)

    def test_shifted_candidate(self, curve):
        """Test a curve shifted by +0.1 dB shows a 0.1 dB gap."""
        shifted = [dataclasses.replace(row, ebn0_db=row.ebn0_db + 0.1) for row in curve]
        assert compare_runs(curve, shifted, target_fer=2e-3).gap_db == pytest.approx(0.1)

    def test_zero_fer_points_are_ignored(self, curve):
        """Test error-free points do not break the log-domain curve."""
        rows = curve + [make_row(5.0, 10 ** 7, 0)]
        assert interpolate_ebn0(rows, 1e-3) == pytest.approx(3.0)

    def test_target_outside_curve(self, curve):
        """Test a target below every measured FER raises CurveRangeError."""
        with pytest.raises(CurveRangeError):
            compare_runs(curve, curve, target_fer=1e-6)
        with pytest.raises(CurveRangeError):
            interpolate_ebn0(curve, 0.0)
