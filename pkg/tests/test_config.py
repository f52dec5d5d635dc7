"""
Tests for settings and verify.config.json:
1. Environment variables override the defaults
2. Malformed values fall back to the defaults
3. The config file round-trips, and a broken file falls back to the shipped suspects
4. Suspect lookup by suite and relation, and the shipped file matches the defaults
"""

from pathlib import Path

from utils.config import (
    DEFAULT_SUSPECTS,
    KnownSuspect,
    VerifyConfig,
    generate_config_file,
    load_settings,
    read_config,
)


class TestSettings:
    def test_defaults(self, clean_env):
        settings = load_settings()
        assert settings.overlap_length == 4
        assert settings.oracle_seed == 20241017
        assert settings.koszul is True

    def test_environment(self, clean_env, monkeypatch):
        monkeypatch.setenv("GLPQ_STEP_LIMIT", "500")
        monkeypatch.setenv("GLPQ_LOG_LEVEL", "debug")
        monkeypatch.setenv("GLPQ_KOSZUL", "off")
        settings = load_settings()
        assert settings.step_limit == 500
        assert settings.log_level == "DEBUG"
        assert settings.koszul is False

    def test_bad_integer(self, clean_env, monkeypatch):
        monkeypatch.setenv("GLPQ_ORACLE_SAMPLES", "many")
        assert load_settings().oracle_samples == 1000


class TestConfigFile:
    def test_round_trip(self, clean_env):
        path = str(clean_env / "verify.config.json")
        generate_config_file(config_path=path)
        config = read_config(path)
        assert len(config.known_suspects) == len(DEFAULT_SUSPECTS)
        assert config.kronecker_convention == "super"

    def test_missing_file(self, clean_env):
        config = read_config(str(clean_env / "absent.json"))
        assert config.known_suspects == DEFAULT_SUSPECTS

    def test_invalid_json(self, clean_env):
        path = clean_env / "verify.config.json"
        path.write_text("{not json")
        assert read_config(str(path)).known_suspects == DEFAULT_SUSPECTS

    def test_wrong_shape(self, clean_env):
        path = clean_env / "verify.config.json"
        path.write_text('{"known_suspects": 3}')
        assert read_config(str(path)).known_suspects == DEFAULT_SUSPECTS


class TestSuspects:
    def test_lookup(self):
        config = VerifyConfig(known_suspects=[KnownSuspect(suite="catalog.koszul", relation="printed-bc")])
        assert config.is_suspect("catalog.koszul", "printed-bc")
        assert not config.is_suspect("catalog.koszul", "odd-exchange")
        assert not config.is_suspect("hopf.base", "printed-bc")

    def test_shipped_file_matches_defaults(self):
        shipped = read_config(str(Path(__file__).resolve().parent.parent / "verify.config.json"))
        assert shipped.known_suspects == DEFAULT_SUSPECTS
        assert len({(s.suite, s.relation) for s in DEFAULT_SUSPECTS}) == len(DEFAULT_SUSPECTS)
