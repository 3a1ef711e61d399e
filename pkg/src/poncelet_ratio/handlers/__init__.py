"""Computation handlers package."""

from __future__ import annotations

from .base import RatioHandler
from .circle_handler import CircleHandler
from .ellipse_handler import EllipseHandler
from .handler_factory import HandlerFactory
from .nr_handler import NRHandler
from .verify_handler import VerifyHandler

__all__ = [
    "CircleHandler",
    "EllipseHandler",
    "HandlerFactory",
    "NRHandler",
    "RatioHandler",
    "VerifyHandler",
]
