"""HTTP service wrapping the profile toolkit."""

from .app import app

__all__ = ["app"]
