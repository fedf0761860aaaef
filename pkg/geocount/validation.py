"""Provide methods performing validation on configuration properties."""
from fractions import Fraction
from types import FunctionType

from . import errors
from .errors import ErrorWrapper

UNITS = ("pi", "absolute-approx")
FORMATS = ("json", "text")


def _create_validator(is_valid_lambda: FunctionType, error: ErrorWrapper) -> FunctionType:
    """
    Return a validator for the specified arguments.

     * is_valid_lambda: A function accepting a value.
       It returns a bool telling whether it is considered as valid.
     * error The error instance the validator should return

    The function returns a function which accepts a value, applies is_valid_lambda on it
    and returns the supplied error if it is not considered as valid, otherwise None.
    """
    return lambda value: error if not is_valid_lambda(value) else None


def _chain_validators(*args) -> FunctionType:
    """
    Chain multiple validators into a single one.

    The first validation error occuring is returned, if none do occur, None will be returned.
    """
    def chain_validator(value):
        for validator in args:
            error = validator(value)

            if error is not None:
                return error

    return chain_validator


def _create_non_empty_validator(error: ErrorWrapper) -> FunctionType:
    """Return a validator checking whether the supplied value is neither None nor a blank string."""
    return _create_validator(lambda value: value is not None and str(value).strip() != "", error)


def _parse_int(value):
    if isinstance(value, bool):
        return None
    if isinstance(value, int):
        return value
    try:
        return int(str(value).strip())
    except ValueError:
        return None


def _parse_rational(value):
    if isinstance(value, (bool, float)):
        return None
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    try:
        return Fraction(str(value).strip())
    except (ValueError, ZeroDivisionError):
        return None


def _create_positive_integer_validator(error: ErrorWrapper) -> FunctionType:
    """
    Return a validator checking whether a supplied value is a positive integer, or a string holding one.

    If not, the supplied error will be returned.
    """
    def is_valid(value):
        parsed = _parse_int(value)
        return parsed is not None and parsed > 0
    return _chain_validators(_create_non_empty_validator(error), _create_validator(is_valid, error))


def _create_positive_rational_validator(error: ErrorWrapper) -> FunctionType:
    """Return a validator accepting positive rationals written as 'p' or 'p/q'."""
    def is_valid(value):
        parsed = _parse_rational(value)
        return parsed is not None and parsed > 0
    return _chain_validators(_create_non_empty_validator(error), _create_validator(is_valid, error))


def _create_choice_validator(choices, error: ErrorWrapper) -> FunctionType:
    return _create_validator(lambda value: value is not None and str(value).strip() in choices, error)


def validate_max_weyl_order(max_weyl_order) -> ErrorWrapper:
    """Validate that the supplied value is a positive integer."""
    return _create_positive_integer_validator(errors.CONFIG_MAX_WEYL_ORDER_NOT_POSITIVE)(max_weyl_order)


def validate_grid_denominator(grid_denominator) -> ErrorWrapper:
    """Validate that the supplied value is a positive integer."""
    return _create_positive_integer_validator(errors.CONFIG_GRID_DENOMINATOR_NOT_POSITIVE)(grid_denominator)


def validate_grid_extent(grid_extent) -> ErrorWrapper:
    """Validate that the supplied value is a positive rational number."""
    return _create_positive_rational_validator(errors.CONFIG_GRID_EXTENT_NOT_POSITIVE)(grid_extent)


def validate_max_samples(max_samples) -> ErrorWrapper:
    """Validate that the supplied value is a positive integer."""
    return _create_positive_integer_validator(errors.CONFIG_MAX_SAMPLES_NOT_POSITIVE)(max_samples)


def validate_units(units) -> ErrorWrapper:
    """
    Validate that the supplied value names a supported unit system.

    'pi' keeps the exact rational output, 'absolute-approx' multiplies by pi for display.
    """
    return _create_choice_validator(UNITS, errors.CONFIG_UNITS_INVALID)(units)


def validate_format(output_format) -> ErrorWrapper:
    """Validate that the supplied value is either 'json' or 'text'."""
    return _create_choice_validator(FORMATS, errors.CONFIG_FORMAT_INVALID)(output_format)


def validate_json_indent(json_indent) -> ErrorWrapper:
    """Validate that the supplied value is a non-negative integer."""
    return _chain_validators(
        _create_non_empty_validator(errors.CONFIG_JSON_INDENT_INVALID),
        _create_validator(lambda value: _parse_int(value) is not None and _parse_int(value) >= 0,
                          errors.CONFIG_JSON_INDENT_INVALID))(json_indent)


def validate_window(window) -> ErrorWrapper:
    """Validate that the supplied diagram window is a positive rational number."""
    return _create_positive_rational_validator(errors.CONFIG_WINDOW_NOT_POSITIVE)(window)


def validate_pixels_per_unit(pixels_per_unit) -> ErrorWrapper:
    """Validate that the supplied value is a positive integer."""
    return _create_positive_integer_validator(errors.CONFIG_PIXELS_NOT_POSITIVE)(pixels_per_unit)
