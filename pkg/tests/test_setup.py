# tests/test_setup.py
import pytest

from qopolars.algebra.rational import rat
from qopolars.utils.errors import ConfigError
from qopolars.utils.setup_utils import Settings, parse_substitutions, setup_environment

SETTINGS = ("QO_PRECISION", "QO_LOG_LEVEL", "QO_SUBSTITUTIONS", "QO_EXACT_RESULTANT_MAX")


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    for name in SETTINGS:
        monkeypatch.delenv(name, raising=False)


def test_defaults():
    settings = setup_environment(load_env=False)
    assert settings == Settings()
    assert settings.precision is None
    assert settings.exact_resultant_max == 12


def test_settings_from_environment(monkeypatch):
    print("\n=== QO_* settings ===")
    monkeypatch.setenv("QO_PRECISION", "15/2")
    monkeypatch.setenv("QO_LOG_LEVEL", "debug")
    monkeypatch.setenv("QO_SUBSTITUTIONS", "1:2, 2:1")
    monkeypatch.setenv("QO_EXACT_RESULTANT_MAX", "20")
    settings = setup_environment(load_env=False)
    print(settings)
    assert settings.precision == rat(15, 2)
    assert settings.log_level == "DEBUG"
    assert settings.substitutions == [(1, 2), (2, 1)]
    assert settings.exact_resultant_max == 20


@pytest.mark.parametrize(
    "name, value",
    [
        ("QO_PRECISION", "abc"),
        ("QO_PRECISION", "-3"),
        ("QO_PRECISION", "1/0"),
        ("QO_LOG_LEVEL", "LOUD"),
        ("QO_EXACT_RESULTANT_MAX", "1"),
        ("QO_EXACT_RESULTANT_MAX", "many"),
        ("QO_SUBSTITUTIONS", "1:0"),
    ],
)
def test_bad_settings(monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    with pytest.raises(ConfigError):
        setup_environment(load_env=False)


def test_parse_substitutions():
    assert parse_substitutions("1:1, 1:2,2:1,") == [(1, 1), (1, 2), (2, 1)]
    assert parse_substitutions("3") == [(3,)]
    with pytest.raises(ConfigError):
        parse_substitutions(" , ")
    with pytest.raises(ConfigError):
        parse_substitutions("1:x")


if __name__ == "__main__":
    test_settings_from_environment()
