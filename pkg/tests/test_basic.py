"""Basic tests for GrayGreed."""

import pytest
from pathlib import Path


def test_project_structure():
    """Test that the project structure is set up correctly."""
    # Check that main directories exist
    assert Path("src").exists()
    assert Path("tests").exists()

    # Check that key modules exist
    assert Path("src/__init__.py").exists()
    assert Path("src/config").exists()
    assert Path("src/core").exists()
    assert Path("src/logging_module").exists()
    assert Path("src/cli").exists()


def test_config_import():
    """Test that config module can be imported."""
    from src.config import get_settings
    assert callable(get_settings)


def test_core_import():
    """Test that core modules can be imported."""
    from src.core import LanguageSpec, greedy_run
    assert LanguageSpec is not None
    assert callable(greedy_run)


def test_logging_import():
    """Test that logging module can be imported."""
    from src.logging_module import get_logger
    assert callable(get_logger)


if __name__ == "__main__":
    pytest.main([__file__])
