"""Unit tests for common functions of the slope-calc MCP tools."""

import json
import logging
import re
from fractions import Fraction

import pytest

from slope_calc.errors import HypothesisError, InvalidInputError
from tools.common import encode_json_response, normalise_int, raise_calculator_tool_error, run_calculator_tool


@pytest.mark.parametrize(("original", "output"), (("6", 6), (7, 7), (None, None), ("  ", None), ("  0  ", 0)))
def test_normalise_int(original, output):
    """Basic scenarios."""
    assert output == normalise_int(name="test", value=original)


def test_normalise_int_exception_bad_string():
    """String which cannot be converted into int."""
    with pytest.raises(ValueError, match="Parameter 'test' must be convertible to integer; got 'foo' of type 'str'."):
        normalise_int(name="test", value="foo")


def test_normalise_int_exception_bad_type():
    """Boolean, which is a subclass of int - shouldn't be converted.

    But since it's subclass, it could be converted:
        >>> isinstance(True, int)
        True
        >>> int(True)
        1
    """
    with pytest.raises(ValueError, match="Parameter 'test' must be an integer; got 'True' of type 'bool'."):
        normalise_int(name="test", value=True)


def test_normalise_int_exception_bad_type2():
    """Type which is unexpected."""
    with pytest.raises(
        ValueError, match=re.escape("Parameter 'test' must be an integer; got '('value', 'value2')' of type 'tuple'.")
    ):
        normalise_int(name="test", value=("value", "value2"))


def test_encode_json_response_sorts_keys_and_renders_rationals():
    assert encode_json_response({"b": Fraction(-7, 3), "a": Fraction(4, 2)}) == '{"a": "2", "b": "-7/3"}'


def test_encode_json_response_rejects_unknown_types():
    with pytest.raises(TypeError, match="not JSON serializable"):
        encode_json_response({"a": object()})


def test_raise_calculator_tool_error_chains(caplog):
    logger = logging.getLogger("test_common")
    original = ZeroDivisionError("division by zero")

    with caplog.at_level(logging.ERROR, logger="test_common"):
        with pytest.raises(InvalidInputError, match="Error computing x: division by zero") as exc_info:
            raise_calculator_tool_error(original, "Error computing x: division by zero", logger)

    assert exc_info.value.__cause__ is original
    assert "Error computing x" in caplog.text


def test_run_calculator_tool_encodes_result():
    assert json.loads(run_calculator_tool(lambda: {"norm": Fraction(5, 2)}, "norm")) == {"norm": "5/2"}


def test_run_calculator_tool_passes_slope_calc_errors_through():
    def operation():
        raise HypothesisError("plumbing norm requires the plumbing twist", "plumbing-twist")

    with pytest.raises(HypothesisError, match=re.escape("[plumbing-twist] plumbing norm")):
        run_calculator_tool(operation, "plumbing norm")


def test_run_calculator_tool_maps_value_errors():
    def operation():
        return {"genus": normalise_int("genus", "two")}

    with pytest.raises(InvalidInputError, match="Error computing satellite report: Parameter 'genus'"):
        run_calculator_tool(operation, "satellite report")
