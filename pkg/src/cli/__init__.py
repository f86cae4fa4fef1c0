"""CLI package for GrayGreed."""
