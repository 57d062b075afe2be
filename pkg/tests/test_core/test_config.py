"""Tests for configuration loading."""

from pathlib import Path

import pytest
from pydantic import ValidationError

from matroid_oracles.core.config import (
    BUDGET_ENV_VAR,
    Settings,
    load_config,
    save_config,
)

DEFAULT_CONFIG = Path(__file__).parent.parent.parent / "config" / "default.yaml"


class TestSettings:
    """Tests for Settings defaults and validation."""

    def test_defaults(self, settings: Settings) -> None:
        """Test the built-in defaults."""
        assert settings.verify.brute_force_budget == 24
        assert settings.solver.audit is False
        assert settings.solver.bfs_depth_cap is None
        assert settings.witness.truncation == 3
        assert settings.logging.console_level == "WARNING"

    def test_budget_bounds(self) -> None:
        """Test that the brute-force budget is capped."""
        with pytest.raises(ValidationError):
            Settings(verify={"brute_force_budget": 31})

    def test_app_log_level(self) -> None:
        """Test that only standard level names are accepted."""
        assert Settings().app.log_level == "INFO"
        assert Settings(app={"log_level": "DEBUG"}).app.log_level == "DEBUG"
        with pytest.raises(ValidationError):
            Settings(app={"log_level": "LOUD"})


class TestLoadConfig:
    """Tests for load_config."""

    def test_default_file(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test that the shipped default configuration loads."""
        monkeypatch.delenv(BUDGET_ENV_VAR, raising=False)
        settings = load_config(DEFAULT_CONFIG)
        assert settings.app.name == "Matroid Oracles"
        assert settings.generator.n == 8
        assert settings.verify.query_budget_factor == 8

    def test_env_budget_override(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test that the environment overrides the brute-force budget."""
        monkeypatch.setenv(BUDGET_ENV_VAR, "12")
        assert load_config(DEFAULT_CONFIG).verify.brute_force_budget == 12

    def test_invalid_yaml_value(self, tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test that out-of-range values fail validation."""
        monkeypatch.delenv(BUDGET_ENV_VAR, raising=False)
        path = tmp_path / "bad.yaml"
        path.write_text("verify:\n  max_n: 0\n")
        with pytest.raises(ValidationError):
            load_config(path)

    def test_save_and_reload(self, tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test that saved settings load back unchanged."""
        monkeypatch.delenv(BUDGET_ENV_VAR, raising=False)
        settings = Settings(solver={"audit": True, "bfs_depth_cap": 3})
        path = tmp_path / "nested" / "config.yaml"
        save_config(settings, path)
        loaded = load_config(path)
        assert loaded.solver.audit is True
        assert loaded.solver.bfs_depth_cap == 3
