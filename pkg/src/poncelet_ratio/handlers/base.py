"""Base computation handler interface."""

from __future__ import annotations

import logging
import time
from abc import ABC, abstractmethod
from typing import TYPE_CHECKING, Any, ClassVar

from ..config import Settings
from ..utils.exceptions import raise_precision_error

if TYPE_CHECKING:
    from ..models.report import RunReport

logger = logging.getLogger(__name__)


class RatioHandler(ABC):
    """Base class for one kind of computation behind a CLI command."""

    command: ClassVar[str] = ""

    def __init__(self, settings: Settings | None = None):
        """Initialize handler.

        Args:
            settings: Runtime defaults; read from the environment when omitted
        """
        self.settings = settings or Settings.from_env()

    def handle(self, params: dict[str, Any]) -> RunReport:
        """Run the computation and time it.

        Args:
            params: Command parameters; unset options are None

        Returns:
            Report for the command

        Raises:
            PonceletError: If the computation fails
        """
        start = time.perf_counter()
        try:
            report = self.run(params)
        except ZeroDivisionError as e:
            raise_precision_error(f"{self.command} hit an exact zero divisor", e)
        report.elapsed_seconds = f"{time.perf_counter() - start:.3f}"
        logger.info("%s finished in %s s", self.command, report.elapsed_seconds)
        return report

    @abstractmethod
    def run(self, params: dict[str, Any]) -> RunReport:
        """Compute and build the report.

        Args:
            params: Command parameters

        Returns:
            Report with inputs, stages and results

        Raises:
            PonceletError: If the computation fails
        """
        raise NotImplementedError

    @staticmethod
    def _inputs(params: dict[str, Any], *names: str) -> dict[str, Any]:
        """Echo of the supplied inputs, as given on the command line."""
        return {name: params[name] for name in names if params.get(name) is not None}
