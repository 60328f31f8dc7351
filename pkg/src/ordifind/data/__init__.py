"""Bundled example data."""

from importlib import resources
from pathlib import Path

from ..context import FormalContext, parse_context


def socmed_path() -> Path:
    """Path to the bundled social-media example context."""
    return Path(resources.files(__package__) / "socmed.cxt")


def load_socmed() -> FormalContext:
    """The bundled 10x8 social-media example context."""
    return parse_context(socmed_path().read_bytes(), "cxt")
