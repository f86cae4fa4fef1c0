"""Configuration module for GrayGreed."""

from .settings import Settings, get_settings, load_settings, set_settings

__all__ = ["Settings", "get_settings", "load_settings", "set_settings"]
