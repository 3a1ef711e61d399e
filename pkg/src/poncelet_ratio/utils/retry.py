"""Retry decorator that escalates working precision on failure."""

from __future__ import annotations

import logging
from collections.abc import Callable
from functools import wraps
from typing import Any

from .exceptions import PrecisionError

logger = logging.getLogger(__name__)


def retry_with_precision(
    retries: int = 2,
    factor: float = 2,
    exceptions: tuple[type[Exception], ...] = (PrecisionError,),
    keyword: str = "scale",
) -> Callable:
    """Retry decorator with geometric precision escalation.

    The wrapped function must accept the keyword named by ``keyword``, a
    multiplier on its working digits, and build its inputs at the scaled
    precision. Each retry multiplies the scale by ``factor``.

    Args:
        retries: Maximum number of retries
        factor: Multiplicative factor applied to the working digits per retry
        exceptions: Tuple of exceptions to catch and retry on
        keyword: Name of the precision-scale keyword argument

    Returns:
        Decorated function that will retry on specified exceptions
    """

    def decorator(func: Callable) -> Callable:
        @wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            scale = kwargs.get(keyword) or 1
            for attempt in range(retries + 1):
                kwargs[keyword] = scale
                try:
                    return func(*args, **kwargs)
                except exceptions as e:
                    if attempt == retries:
                        logger.error(
                            "Failed after %d precision escalations: %s", retries, e
                        )
                        raise
                    new_scale = scale * factor
                    logger.warning(
                        "Attempt %d/%d failed at scale %s: %s. Retrying at scale %s",
                        attempt + 1,
                        retries,
                        scale,
                        e,
                        new_scale,
                    )
                    scale = new_scale
            return None

        return wrapper

    return decorator
