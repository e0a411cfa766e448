"""
Tests for configuration loading, logging setup and result output
"""

import io
import json
import logging

import pytest

import config
from config import (default_settings, get_config_dict, load_config_file, output_config,
                    physics_config, update_config_from_dict)
from core.errors import ConfigurationError
from utils.data_manager import ResultWriter, format_number
from utils.logger import ROOT_LOGGER_NAME, get_logger, setup_logging


class TestConfig:
    def test_defaults(self):
        settings = default_settings()
        assert settings.matsubara.rel_tol == 1e-10
        assert settings.quadrature.rel_tol == 1e-10
        assert physics_config.tau_crossover == 1e-3
        assert output_config.float_format == "%.10e"

    def test_update_is_visible_through_imports(self):
        update_config_from_dict({'physics': {'tau_crossover': 0.01}})
        assert physics_config.tau_crossover == 0.01
        assert config.physics_config is physics_config

    def test_settings_are_copies(self):
        settings = default_settings()
        settings.matsubara.rel_tol = 1e-3
        assert default_settings().matsubara.rel_tol == 1e-10

    def test_settings_follow_overrides(self):
        update_config_from_dict({'matsubara': {'rel_tol': 1e-8, 'n_max': 1000}})
        settings = default_settings()
        assert settings.matsubara.rel_tol == 1e-8
        assert settings.matsubara.n_max == 1000

    @pytest.mark.parametrize("overrides", [
        {'nonsense': {}},
        {'physics': {'unknown_key': 1}},
        {'physics': 3},
        {'matsubara': {'rel_tol': 2.0}},
        {'quadrature': {'max_subdivisions': 0}},
        {'pfa': {'consistency_tol': -1.0}},
        {'output': {'threads': 0}},
    ])
    def test_invalid_overrides(self, overrides):
        with pytest.raises(ConfigurationError):
            update_config_from_dict(overrides)

    def test_failed_update_changes_nothing(self):
        with pytest.raises(ConfigurationError):
            update_config_from_dict({'physics': {'tau_crossover': 0.01},
                                     'matsubara': {'rel_tol': 2.0}})
        assert physics_config.tau_crossover == 1e-3

    def test_yaml_file(self, tmp_path):
        path = tmp_path / "casimir.yaml"
        path.write_text("physics:\n  tau_crossover: 0.005\noutput:\n  float_format: '%.6e'\n")
        load_config_file(str(path))
        assert physics_config.tau_crossover == 0.005
        assert get_config_dict()['output']['float_format'] == '%.6e'

    def test_empty_yaml_file(self, tmp_path):
        path = tmp_path / "empty.yaml"
        path.write_text("")
        assert load_config_file(str(path)) == {}

    @pytest.mark.parametrize("text", ["- a\n- b\n", "physics: [unclosed\n"])
    def test_bad_yaml(self, tmp_path, text):
        path = tmp_path / "bad.yaml"
        path.write_text(text)
        with pytest.raises(ConfigurationError):
            load_config_file(str(path))

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigurationError):
            load_config_file(str(tmp_path / "absent.yaml"))

    def test_threads_from_environment(self, monkeypatch):
        monkeypatch.setenv("CASIMIR_KIT_THREADS", "3")
        assert output_config.resolve_threads() == 3
        update_config_from_dict({'output': {'threads': 2}})
        assert output_config.resolve_threads() == 2

    @pytest.mark.parametrize("value", ["0", "-2", "many"])
    def test_bad_thread_variable(self, monkeypatch, value):
        monkeypatch.setenv("CASIMIR_KIT_THREADS", value)
        with pytest.raises(ConfigurationError):
            output_config.resolve_threads()


class TestLogging:
    def test_reconfiguring_replaces_handlers(self):
        setup_logging("INFO")
        logger = setup_logging("DEBUG")
        assert len(logger.logger.handlers) == 1
        assert logger.logger.getEffectiveLevel() == logging.DEBUG
        setup_logging("WARNING")

    def test_file_handler(self, tmp_path):
        log_file = tmp_path / "logs" / "run.log"
        setup_logging("WARNING", log_file=str(log_file), console=False)
        get_logger("materials").debug("value %d", 42)
        logging.getLogger(ROOT_LOGGER_NAME).handlers[0].flush()
        assert "value 42" in log_file.read_text()
        setup_logging("WARNING")

    def test_child_loggers_have_no_handlers(self):
        assert get_logger("materials").logger.handlers == []

    def test_unknown_level(self):
        with pytest.raises(ValueError):
            setup_logging("LOUD")


class TestResultWriter:
    rows = [{'L_m': 1e-6, 'pressure': -1.3e-3}, {'L_m': 2e-6, 'pressure': -8.125e-5}]

    def test_csv(self):
        text = ResultWriter("csv").render(self.rows, ['L_m', 'pressure'])
        assert text == ("L_m,pressure\n"
                        "1.0000000000e-06,-1.3000000000e-03\n"
                        "2.0000000000e-06,-8.1250000000e-05\n")

    def test_json(self):
        records = json.loads(ResultWriter("json").render(self.rows, ['L_m', 'pressure']))
        assert records == [{'L_m': 1e-6, 'pressure': -1.3e-3},
                           {'L_m': 2e-6, 'pressure': -8.125e-5}]

    def test_column_selection(self):
        text = ResultWriter("csv").render(self.rows, ['pressure'])
        assert text.splitlines()[0] == "pressure"

    def test_write_to_file(self, tmp_path):
        out = tmp_path / "nested" / "result.csv"
        ResultWriter("csv").write(self.rows, ['L_m', 'pressure'], out=str(out))
        assert out.read_text().startswith("L_m,pressure\n")

    def test_write_to_stream(self):
        stream = io.StringIO()
        ResultWriter("csv").write(self.rows[:1], ['L_m'], stream=stream)
        assert stream.getvalue() == "L_m\n1.0000000000e-06\n"

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            ResultWriter("xml")

    def test_format_number(self):
        assert format_number(-1.3e-3) == "-1.3000000000e-03"
        assert format_number(2.5, "%.2f") == "2.50"
