"""Elliptic-integral ratios from interscribed polygons."""

from __future__ import annotations

import logging

from dotenv import load_dotenv

load_dotenv()

logger = logging.getLogger(__name__)


def configure_logging(level: str | int = logging.WARNING) -> None:
    """Configure logging for the package."""
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )
    logging.getLogger("poncelet_ratio").setLevel(level)
