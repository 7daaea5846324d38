"""Shared functions for slope-calc MCP tools and the batch CLI."""

from __future__ import annotations

import json
from collections.abc import Callable
from fractions import Fraction
from logging import Logger
from typing import Any, NoReturn

from slope_calc.errors import InvalidInputError, SlopeCalcError

# Wrapped when mapping tool input failures to InvalidInputError (not bare Exception).
TOOL_REQUEST_ERRORS = (ValueError, ArithmeticError)


def normalise_int(name: str, value: int | str | None) -> int | None:
    """Normalise value to an int (or None) - tolerate string input from MCP clients.

    Args:
        name: The name of the parameter being validated.
        value: The value to normalise.

    Returns:
        The normalised integer value, or None if the input was None or an
        empty/whitespace string.
    """
    if value is None or (isinstance(value, str) and value.strip() == ""):
        return None
    if isinstance(value, bool):  # Boolean is subclass of int
        raise ValueError(f"Parameter '{name}' must be an integer; got '{value}' of type '{type(value).__name__}'.")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value.strip())
        except ValueError as exc:
            raise ValueError(
                f"Parameter '{name}' must be convertible to integer; got '{value}' of type '{type(value).__name__}'."
            ) from exc
    raise ValueError(f"Parameter '{name}' must be an integer; got '{value}' of type '{type(value).__name__}'.")


def _encode_exact(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    raise TypeError(f"Object of type {type(value).__name__} is not JSON serializable")


def encode_json_response(payload: dict[str, Any] | list[Any], indent: int | None = None) -> str:
    """Encode a result as deterministic JSON: sorted keys, rationals as ``"p/q"`` strings.

    Args:
        payload: Dict/list built from result ``to_dict()`` methods.
        indent: Optional indentation for human-facing output.

    Returns:
        JSON text suitable for returning from an MCP tool or printing from the CLI.
    """
    return json.dumps(payload, sort_keys=True, indent=indent, default=_encode_exact, ensure_ascii=False)


def raise_calculator_tool_error(
    exc: Exception,
    message: str,
    logger: Logger | None = None,
) -> NoReturn:
    """Log and re-raise an unexpected tool failure as InvalidInputError.

    Args:
        exc: The original exception to chain.
        message: Full error message for the MCP client (caller defines wording).
        logger: Optional logger; when set, logs the message at error level.

    Raises:
        InvalidInputError: Always raised with ``message`` chained from ``exc``.
    """
    if logger:
        logger.error(message)
    raise InvalidInputError(message) from exc


def run_calculator_tool(
    operation: Callable[[], dict[str, Any] | list[Any]],
    operation_name: str,
    logger: Logger | None = None,
) -> str:
    """Run a calculator operation, encode its result and map failures to slope-calc errors.

    ``SlopeCalcError`` passes through untouched so hypothesis citations reach the client.
    """
    try:
        return encode_json_response(operation())
    except SlopeCalcError as exc:
        if logger:
            logger.info("%s rejected: %s", operation_name, exc)
        raise
    except TOOL_REQUEST_ERRORS as exc:
        raise_calculator_tool_error(exc, f"Error computing {operation_name}: {exc}", logger)
