"""
Pytest configuration and shared fixtures.
"""
import pytest
import structlog

from src.core.config import reset_settings
from src.gf.field import FieldCtx, field_create


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """
    Rebuild settings from a clean environment for each test.

    Tests that need other limits set the variable with monkeypatch and call
    reset_settings() again.
    """
    for name in (
        "LOG_LEVEL",
        "MAX_FIELD_ORDER",
        "SQRT_TABLE_LIMIT",
        "ENUMERATION_LIMIT",
        "ENUMERATION_CHUNK",
        "SUBSET_DOMAIN_LIMIT",
        "REFUTE_BUDGET",
        "JSON_INDENT",
    ):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setenv("APP_ENV", "test")
    reset_settings()
    yield
    reset_settings()


@pytest.fixture(autouse=True)
def restore_structlog():
    """
    Restore the structlog configuration after each test.

    A test that configures logging under capsys binds the logger to a capture
    stream that is closed when the test ends.
    """
    saved = structlog.get_config()
    yield
    structlog.configure(**saved)


@pytest.fixture
def gf4() -> FieldCtx:
    return field_create(2, 2)


@pytest.fixture
def gf5() -> FieldCtx:
    return field_create(5, 1)


@pytest.fixture
def gf7() -> FieldCtx:
    return field_create(7, 1)


@pytest.fixture
def gf8() -> FieldCtx:
    return field_create(2, 3)


@pytest.fixture
def gf9() -> FieldCtx:
    return field_create(3, 2)


@pytest.fixture
def gf16() -> FieldCtx:
    return field_create(2, 4)
