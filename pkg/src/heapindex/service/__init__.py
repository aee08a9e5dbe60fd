"""HTTP service wrapping the index library; the CLI is a client of this."""

from .app import create_app

__all__ = ["create_app"]
