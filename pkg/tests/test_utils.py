"""Tests for configuration loading, the exception hierarchy and logging helpers."""

import json
import logging

import pytest

from states import RunConfig
from utils.exceptions import (
    BaseAppException,
    ConfigError,
    ConvergenceError,
    DataError,
    DimensionMismatch,
    NotPositiveDefinite,
    NumericalError,
    SingularShift,
    UnknownSystem,
    safe_execute,
)
from utils.logging_utils import get_logger, set_log_level
from utils.utils import Settings, load_config


class TestConfig:
    def test_default_file(self):
        settings = load_config()
        assert settings == Settings()
        assert settings.grid_points == 600
        assert settings.json_digits == 17
        assert settings.csv_digits == 9

    def test_environment_override(self, monkeypatch):
        monkeypatch.setenv("MASSBOUND_CSV_DIGITS", "6")
        monkeypatch.setenv("MASSBOUND_GRID_POINTS", "")
        settings = load_config()
        assert settings.csv_digits == 6
        assert settings.grid_points == 600

    def test_file_values(self, tmp_path):
        path = tmp_path / "config.yaml"
        path.write_text("oracle_range_factor: 2.0\nlog_level: DEBUG\n")
        settings = load_config(path)
        assert settings.oracle_range_factor == 2.0
        assert settings.log_level == "DEBUG"

    def test_missing_explicit_file(self, tmp_path):
        with pytest.raises(ConfigError):
            load_config(tmp_path / "absent.yaml")

    def test_unparsable_yaml(self, tmp_path):
        path = tmp_path / "config.yaml"
        path.write_text("grid_points: [1, 2\n")
        with pytest.raises(ConfigError):
            load_config(path)

    def test_not_a_mapping(self, tmp_path):
        path = tmp_path / "config.yaml"
        path.write_text("- 1\n- 2\n")
        with pytest.raises(ConfigError, match="mapping"):
            load_config(path)

    def test_unknown_key(self, tmp_path):
        path = tmp_path / "config.yaml"
        path.write_text("grid_point: 10\n")
        with pytest.raises(ConfigError):
            load_config(path)

    def test_out_of_range(self, tmp_path):
        path = tmp_path / "config.yaml"
        path.write_text("json_digits: 40\n")
        with pytest.raises(ConfigError) as info:
            load_config(path)
        assert info.value.exit_code == 1


class TestRunConfig:
    def test_defaults(self):
        config = RunConfig(modal_path="modal.json")
        assert config.mode == "blind"
        assert config.output_format == "csv"

    def test_alpha_order(self):
        with pytest.raises(ValueError):
            RunConfig(alpha_min=2.0, alpha_max=1.0)

    def test_positive_step_and_k(self):
        with pytest.raises(ValueError):
            RunConfig(alpha_step=0.0)
        with pytest.raises(ValueError):
            RunConfig(k=0)

    def test_oracle_needs_system(self):
        with pytest.raises(ValueError):
            RunConfig(mode="oracle")

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            RunConfig(output_format="xml")


class TestExceptions:
    def test_exit_codes(self):
        assert DataError("x").exit_code == 1
        assert ConfigError("x").exit_code == 1
        assert DimensionMismatch("x").exit_code == 1
        assert NumericalError("x").exit_code == 2
        assert SingularShift("x").exit_code == 2
        assert ConvergenceError(1e-3, 100).exit_code == 2

    def test_hierarchy(self):
        assert issubclass(UnknownSystem, DataError)
        assert issubclass(NotPositiveDefinite, NumericalError)
        assert issubclass(NumericalError, BaseAppException)

    def test_to_dict(self):
        error = NotPositiveDefinite(3)
        payload = error.to_dict()
        assert payload["error"] == "NotPositiveDefinite"
        assert payload["details"]["pivot_index"] == 3
        json.dumps(payload)

    def test_log(self, caplog):
        with caplog.at_level(logging.ERROR, logger="massbound.exceptions"):
            DataError("bad input", {"path": "x.json"}).log(include_traceback=False)
        assert "DataError: bad input" in caplog.text


class TestSafeExecute:
    def test_returns_result(self):
        assert safe_execute(lambda a, b: a + b, args=(1, 2)) == 3

    def test_wraps_foreign_exceptions(self):
        def fail():
            raise ValueError("boom")

        with pytest.raises(DataError) as info:
            safe_execute(fail, error_message="Cannot parse", error_cls=DataError, log_error=False, source="x.json")
        assert str(info.value) == "Cannot parse: boom"
        assert info.value.details["original_type"] == "ValueError"
        assert info.value.details["source"] == "x.json"
        assert isinstance(info.value.__cause__, ValueError)

    def test_default_message(self):
        def parse():
            raise KeyError("k")

        with pytest.raises(BaseAppException, match="Error executing parse"):
            safe_execute(parse, log_error=False)

    def test_application_errors_pass_through(self):
        def fail():
            raise SingularShift("on an eigenvalue")

        with pytest.raises(SingularShift):
            safe_execute(fail, error_cls=DataError, log_error=False)

    def test_no_reraise(self):
        def fail():
            raise RuntimeError("ignored")

        assert safe_execute(fail, reraise=False, log_error=False) is None


class TestLogging:
    def test_named_loggers(self):
        logger = get_logger("bounds")
        assert logger.name == "massbound.bounds"
        assert get_logger("bounds") is logger

    def test_set_level(self):
        root = logging.getLogger()
        previous = root.level
        try:
            set_log_level("DEBUG")
            assert root.level == logging.DEBUG
            set_log_level("nonsense")
            assert root.level == logging.INFO
        finally:
            root.setLevel(previous)
