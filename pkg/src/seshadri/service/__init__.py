"""FastAPI service wrapping the core package; the CLI is a thin client of
the same handlers."""

from .app import create_app

__all__ = ["create_app"]
