"""Provide components for managing the configuration file of the application."""
from fractions import Fraction
from os import path

from configupdater import ConfigUpdater

from . import constants
from . import validation
from .errors import InvalidStateError

CONFIG_FILENAME = 'config/geocount.ini'

ENGINE_CATEGORY = "engine"
SAMPLING_CATEGORY = "sampling"
OUTPUT_CATEGORY = "output"
DIAGRAM_CATEGORY = "diagram"


class Config:
    """
    This class encapsulates the configuration properties of the program.

    The properties can be accessed via their getters, and set via the defined setters.
    Note that the setters only accept values seen as valid
    (regarding the specified validation functions for the configuration properties).
    The getters may return invalid values, as long as validate_all was not called.

    Values are kept as the stripped strings found in the file, the getters convert them.
    """

    def __init__(self):
        """Initialize the configuration instance with default values."""
        self._config = ConfigUpdater()

        self._loaded = False

        self._max_weyl_order = str(constants.DEFAULT_MAX_WEYL_ORDER)
        self._check_weyl_elements = True

        self._grid_denominator = "4"
        self._grid_extent = "3/2"
        self._max_samples = "2000"

        self._units = "pi"
        self._format = "json"
        self._json_indent = "2"

        self._window = "2"
        self._pixels_per_unit = "100"

    def is_loaded(self) -> bool:
        """Return whether the configuration file was loaded."""
        return self._loaded

    def _require_loaded(self):
        if not self._loaded:
            raise InvalidStateError(
                "The configuration properties were not loaded yet")

    def _get_property(self, category, property_name):
        return self._config[category][property_name].value.strip()

    def _get_bool(self, category, property_name):
        """
        Parse a bool from a string, by checking whether the string is 'true' (case-insensitive).

        Otherwise the string is interpreted as false.
        The built-in method bool(...) in python would always return true for a non-empty string.
        """
        return self._get_property(category, property_name).lower() == "true"

    def load(self, filename: str = CONFIG_FILENAME):
        """
        Load the configuration file.

        This overwrites the values currently set at this configuration instance.
        A missing file keeps the defaults, a file lacking a property raises a KeyError.
        """
        if not path.isfile(filename):
            self._loaded = True
            return

        self._config.read(filename)

        self._max_weyl_order = self._get_property(
            ENGINE_CATEGORY, "max_weyl_order")
        self._check_weyl_elements = self._get_bool(
            ENGINE_CATEGORY, "check_weyl_elements")

        self._grid_denominator = self._get_property(
            SAMPLING_CATEGORY, "grid_denominator")
        self._grid_extent = self._get_property(
            SAMPLING_CATEGORY, "grid_extent")
        self._max_samples = self._get_property(
            SAMPLING_CATEGORY, "max_samples")

        self._units = self._get_property(OUTPUT_CATEGORY, "units")
        self._format = self._get_property(OUTPUT_CATEGORY, "format")
        self._json_indent = self._get_property(OUTPUT_CATEGORY, "json_indent")

        self._window = self._get_property(DIAGRAM_CATEGORY, "window")
        self._pixels_per_unit = self._get_property(
            DIAGRAM_CATEGORY, "pixels_per_unit")

        self._loaded = True

    def validate_all(self):
        """
        Validate all validatable properties in this configuration instance.

        If no validation errors do occur, None is returned.
        Otherwise return the following upon the first validation error:
        A tuple of two elements, with the first being the invalid property value
        and the second being the validation error from the errors module.

        The configuration instance is required to be loaded.
        """
        self._require_loaded()

        validation_entries = [
            (self._max_weyl_order, validation.validate_max_weyl_order),
            (self._grid_denominator, validation.validate_grid_denominator),
            (self._grid_extent, validation.validate_grid_extent),
            (self._max_samples, validation.validate_max_samples),
            (self._units, validation.validate_units),
            (self._format, validation.validate_format),
            (self._json_indent, validation.validate_json_indent),
            (self._window, validation.validate_window),
            (self._pixels_per_unit, validation.validate_pixels_per_unit),
        ]

        for value, validation_function in validation_entries:
            validation_error = validation_function(value)

            # Return the tuple as described above if a validation error occured
            if validation_error is not None:
                return value, validation_error

    def _require_valid(self, prop, validation_function):
        validation_result = validation_function(prop)

        if validation_result is not None:
            raise ValueError("The specified property value " +
                             ("None" if prop is None else str(prop)) + " is not valid", validation_result)

    def _set_valid(self, prop, validation_function) -> str:
        self._require_loaded()
        self._require_valid(prop, validation_function)
        return str(prop).strip()

    def get_max_weyl_order(self) -> int:
        """
        Return the maximal number of Weyl group elements to enumerate.

        Do not call this method before the configuration gets loaded.
        """
        self._require_loaded()

        return int(self._max_weyl_order)

    def set_max_weyl_order(self, max_weyl_order):
        """
        Set the Weyl group cap to the specified value, a positive int or a string holding one.

        Do not call this method before the configuration gets loaded.
        """
        self._max_weyl_order = self._set_valid(
            max_weyl_order, validation.validate_max_weyl_order)

    def get_check_weyl_elements(self) -> bool:
        self._require_loaded()

        return self._check_weyl_elements

    def set_check_weyl_elements(self, check_weyl_elements: bool):
        self._require_loaded()
        if not isinstance(check_weyl_elements, bool):
            raise TypeError("The type of " + str(check_weyl_elements) +
                            " is not " + str(bool))

        self._check_weyl_elements = check_weyl_elements

    def get_grid_denominator(self) -> int:
        self._require_loaded()

        return int(self._grid_denominator)

    def get_grid_extent(self) -> Fraction:
        self._require_loaded()

        return Fraction(self._grid_extent)

    def get_max_samples(self) -> int:
        self._require_loaded()

        return int(self._max_samples)

    def get_units(self) -> str:
        """
        Return either 'pi' or 'absolute-approx'.

        Do not call this method before the configuration gets loaded.
        """
        self._require_loaded()

        return self._units

    def set_units(self, units: str):
        self._units = self._set_valid(units, validation.validate_units)

    def get_format(self) -> str:
        """
        Return either 'json' or 'text'.

        Do not call this method before the configuration gets loaded.
        """
        self._require_loaded()

        return self._format

    def set_format(self, output_format: str):
        self._format = self._set_valid(output_format, validation.validate_format)

    def get_json_indent(self) -> int | None:
        """Return the JSON indentation, None for compact output."""
        self._require_loaded()

        indent = int(self._json_indent)
        return indent if indent > 0 else None

    def get_window(self) -> Fraction:
        self._require_loaded()

        return Fraction(self._window)

    def set_window(self, window):
        """
        Set the diagram window to a positive rational ('p' or 'p/q').

        Do not call this method before the configuration gets loaded.
        """
        self._window = self._set_valid(window, validation.validate_window)

    def get_pixels_per_unit(self) -> int:
        self._require_loaded()

        return int(self._pixels_per_unit)
