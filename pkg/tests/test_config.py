"""
Tests for settings loading and validation.
"""

import pytest

from aajones.config import Settings, load_settings
from aajones.errors import ConfigError


@pytest.fixture(autouse=True)
def empty_cwd(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)


class TestLoadSettings:
    """Tests for YAML files and environment overrides."""

    def test_defaults(self):
        """No file and no environment gives the built-in defaults."""
        settings = load_settings(environ={})
        assert settings == Settings()
        assert settings.cap == 24
        assert settings.workers == 1
        assert settings.cache_dir is None

    def test_default_file_is_read(self, tmp_path):
        """aajones.yaml in the working directory is picked up."""
        (tmp_path / "aajones.yaml").write_text("cap: 12\nworkers: 2\n")
        settings = load_settings(environ={})
        assert (settings.cap, settings.workers) == (12, 2)

    def test_explicit_file(self, tmp_path):
        """An explicit path wins over the default name."""
        path = tmp_path / "other.yaml"
        path.write_text("chunk_bits: 10\ncache_dir: /tmp/brackets\nprogress: false\n")
        settings = load_settings(path, environ={})
        assert settings.chunk_bits == 10
        assert settings.cache_dir == "/tmp/brackets"
        assert settings.progress is False

    def test_null_and_empty(self, tmp_path):
        """An empty file and a null cache directory are fine."""
        path = tmp_path / "empty.yaml"
        path.write_text("")
        assert load_settings(path, environ={}) == Settings()
        path.write_text("cache_dir: null\n")
        assert load_settings(path, environ={}).cache_dir is None

    def test_environment_overrides_file(self, tmp_path):
        """AAJONES_* variables are applied after the file."""
        (tmp_path / "aajones.yaml").write_text("cap: 12\n")
        settings = load_settings(environ={"AAJONES_CAP": "16", "AAJONES_LOG_DIR": "logs"})
        assert settings.cap == 16
        assert settings.log_dir == "logs"

    def test_empty_variable_ignored(self):
        """An empty variable does not override anything."""
        assert load_settings(environ={"AAJONES_WORKERS": ""}).workers == 1

    @pytest.mark.parametrize(
        "text",
        ["colour: red\n", "- cap\n- 3\n", "cap: [1,\n", "cap: many\n", "progress: maybe\n"],
    )
    def test_bad_files(self, tmp_path, text):
        """Unknown keys, non-mappings, broken YAML and bad values raise ConfigError."""
        path = tmp_path / "bad.yaml"
        path.write_text(text)
        with pytest.raises(ConfigError):
            load_settings(path, environ={})

    def test_missing_explicit_file(self, tmp_path):
        """A named file that does not exist is an error."""
        with pytest.raises(ConfigError):
            load_settings(tmp_path / "absent.yaml", environ={})

    def test_bad_environment(self):
        """Non-integer overrides raise ConfigError."""
        with pytest.raises(ConfigError):
            load_settings(environ={"AAJONES_CAP": "ten"})


class TestValidate:
    """Tests for range checks."""

    @pytest.mark.parametrize(
        "overrides", [dict(cap=-1), dict(workers=0), dict(chunk_bits=0), dict(chunk_bits=25)]
    )
    def test_out_of_range(self, overrides):
        """Values outside their ranges are rejected."""
        with pytest.raises(ConfigError):
            Settings(**overrides).validate()

    def test_environment_validated(self):
        """Overrides go through the same checks."""
        with pytest.raises(ConfigError):
            load_settings(environ={"AAJONES_WORKERS": "0"})

    def test_exit_code(self):
        """Configuration problems are input errors."""
        assert ConfigError.exit_code == 1
