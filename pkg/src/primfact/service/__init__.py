"""HTTP service wrapping the counting package."""

from .app import app

__all__ = ["app"]
