"""Settings and logging setup."""

from app.core.config import Settings, settings
from app.core.logging import configure_logging


def test_defaults():
    assert settings.threads >= 1
    assert settings.enumeration_budget == 10**8
    assert settings.cut_restarts == 32
    assert settings.stderr_multiplier == 4.0


def test_environment_override(monkeypatch):
    monkeypatch.setenv("POSETLIM_THREADS", "4")
    monkeypatch.setenv("POSETLIM_CUT_NORM_MAX_PARTS", "10")
    fresh = Settings()
    assert fresh.threads == 4
    assert fresh.cut_norm_max_parts == 10


def test_configure_logging_accepts_lowercase(capsys):
    from loguru import logger

    configure_logging("debug")
    logger.debug("hello from the test")
    assert "hello from the test" in capsys.readouterr().err
    logger.remove()
