"""Click commands."""

from __future__ import annotations

from .cli import cli, main

__all__ = ["cli", "main"]
