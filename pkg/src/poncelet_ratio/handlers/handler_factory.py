"""Computation handler factory module."""

from __future__ import annotations

from typing import TYPE_CHECKING, ClassVar

from ..utils.exceptions import DomainError
from .circle_handler import CircleHandler
from .ellipse_handler import EllipseHandler
from .nr_handler import NRHandler
from .verify_handler import VerifyHandler

if TYPE_CHECKING:
    from ..config import Settings
    from .base import RatioHandler


class HandlerFactory:
    """Factory for creating computation handlers by command name."""

    _handlers: ClassVar[dict[str, type[RatioHandler]]] = {
        "theta": CircleHandler,
        "ellipse": EllipseHandler,
        "nr": NRHandler,
        "verify": VerifyHandler,
    }

    @classmethod
    def get_handler(cls, command: str, settings: Settings | None = None) -> RatioHandler:
        """Get the handler for a command.

        Args:
            command: Command name
            settings: Runtime defaults passed to the handler

        Returns:
            Handler instance

        Raises:
            DomainError: If no handler is registered for the command
        """
        handler_class = cls._handlers.get(command)
        if not handler_class:
            msg = f"Unknown command: {command}"
            raise DomainError(msg)
        return handler_class(settings)

    @classmethod
    def register_handler(cls, command: str, handler_class: type[RatioHandler]) -> None:
        """Register a new handler type.

        Args:
            command: Command name for the handler
            handler_class: Handler class to register
        """
        cls._handlers[command] = handler_class
