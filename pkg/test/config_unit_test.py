from collections import defaultdict
from fractions import Fraction
from os import path
import geocount.config as configuration
import unittest
import unittest.mock as mock
from parameterized import parameterized
from test_utils import NON_BOOL_TYPE_ELEMENTS_AND_NONE
import geocount.errors as errors

SHIPPED_CONFIG = path.join(path.dirname(path.abspath(__file__)), "..", "config", "geocount.ini")


class ConfigTest(unittest.TestCase):

    def setUp(self):
        self._config = configuration.Config()
        self._loaded_config = configuration.Config()

        self._mock_config_updater = mock.MagicMock()
        self._config._config = self._mock_config_updater

        self._loaded_config._loaded = True

    def test_initial_state(self):
        self.assertFalse(self._config.is_loaded())

    def _back_config_updater_with_dict(self, config_updater: mock.Mock, config_data: dict) -> None:
        """
        Mock the supplied config updater to be backed by the supplied dict.

        The dict has the category as key, and another dict as value, which has the config property
        name as key and the property value (a str) as value.
        Unspecified properties have the value "1", which every parser of the config module accepts.
        """

        def create_config_value_mock(value: str) -> mock.Mock:
            value_mock = mock.Mock()
            value_mock.value = value
            return value_mock

        def create_default_value_mock():
            return create_config_value_mock("1")

        processed_dir = {category: defaultdict(
            create_default_value_mock, {property: create_config_value_mock(config_data[category][property])
                                        for property in config_data[category].keys()})
                         for category in config_data.keys()}

        config_updater.__getitem__.side_effect = defaultdict(
            lambda: defaultdict(create_default_value_mock, {}), processed_dir).__getitem__

    @mock.patch("geocount.config.path.isfile", return_value=True)
    def test_load_strips_strings(self, _):
        self._back_config_updater_with_dict(self._config._config, {
            configuration.OUTPUT_CATEGORY: {"units": "   absolute-approx   "}})

        self._config.load()

        self.assertEqual("absolute-approx", self._config.get_units())

    @parameterized.expand([("TRUE", True), ("TrUE", True), ("true", True), ("    TRue    ", True),
                           ("false", False), ("other string unrelated", False), ("", False), (" ", False)])
    @mock.patch("geocount.config.path.isfile", return_value=True)
    def test_load_recognizes_bool(self, bool_string, bool_value, _):
        self._back_config_updater_with_dict(self._config._config, {
            configuration.ENGINE_CATEGORY: {"check_weyl_elements": bool_string}})

        self._config.load()

        self.assertEqual(bool_value, self._config.get_check_weyl_elements())

    @parameterized.expand([("3/2", Fraction(3, 2)), (" 2 ", Fraction(2)), ("1/4", Fraction(1, 4))])
    @mock.patch("geocount.config.path.isfile", return_value=True)
    def test_load_recognizes_rationals(self, rational_string, expected, _):
        self._back_config_updater_with_dict(self._config._config, {
            configuration.SAMPLING_CATEGORY: {"grid_extent": rational_string},
            configuration.DIAGRAM_CATEGORY: {"window": rational_string}})

        self._config.load()

        self.assertEqual(expected, self._config.get_grid_extent())
        self.assertEqual(expected, self._config.get_window())

    @mock.patch("geocount.config.path.isfile", return_value=True)
    def test_load_missing_property_raises_key_error(self, _):
        self._mock_config_updater.__getitem__.side_effect = KeyError("engine")

        with self.assertRaises(KeyError):
            self._config.load()

        self.assertFalse(self._config.is_loaded())

    @mock.patch("geocount.config.path.isfile", return_value=False)
    def test_load_missing_file_keeps_defaults(self, _):
        self._config.load("does/not/exist.ini")

        self.assertTrue(self._config.is_loaded())
        self._mock_config_updater.read.assert_not_called()
        self.assertEqual(1000000, self._config.get_max_weyl_order())
        self.assertEqual("pi", self._config.get_units())
        self.assertEqual(Fraction(3, 2), self._config.get_grid_extent())
        self.assertIsNone(self._config.validate_all())

    def test_load_shipped_config(self):
        config = configuration.Config()

        config.load(SHIPPED_CONFIG)

        self.assertIsNone(config.validate_all())
        self.assertEqual(1000000, config.get_max_weyl_order())
        self.assertTrue(config.get_check_weyl_elements())
        self.assertEqual(4, config.get_grid_denominator())
        self.assertEqual(2000, config.get_max_samples())
        self.assertEqual("json", config.get_format())
        self.assertEqual(2, config.get_json_indent())
        self.assertEqual(Fraction(2), config.get_window())
        self.assertEqual(100, config.get_pixels_per_unit())

    @parameterized.expand(["get_max_weyl_order", "get_check_weyl_elements", "get_grid_denominator",
                           "get_grid_extent", "get_max_samples", "get_units", "get_format", "get_json_indent",
                           "get_window", "get_pixels_per_unit", "validate_all"])
    def test_require_loaded(self, method_name):
        with self.assertRaises(errors.InvalidStateError):
            getattr(self._config, method_name)()

    def test_json_indent_zero_is_compact(self):
        self._loaded_config._json_indent = "0"

        self.assertIsNone(self._loaded_config.get_json_indent())

    def test_validate_all_valid_defaults(self):
        self.assertIsNone(self._loaded_config.validate_all())

    @parameterized.expand([
        ("_max_weyl_order", "0", errors.CONFIG_MAX_WEYL_ORDER_NOT_POSITIVE),
        ("_grid_denominator", "-2", errors.CONFIG_GRID_DENOMINATOR_NOT_POSITIVE),
        ("_grid_extent", "abc", errors.CONFIG_GRID_EXTENT_NOT_POSITIVE),
        ("_max_samples", "", errors.CONFIG_MAX_SAMPLES_NOT_POSITIVE),
        ("_units", "degrees", errors.CONFIG_UNITS_INVALID),
        ("_format", "yaml", errors.CONFIG_FORMAT_INVALID),
        ("_json_indent", "-1", errors.CONFIG_JSON_INDENT_INVALID),
        ("_window", "0", errors.CONFIG_WINDOW_NOT_POSITIVE),
        ("_pixels_per_unit", "x", errors.CONFIG_PIXELS_NOT_POSITIVE),
    ])
    def test_validate_all_reports_first_invalid_property(self, attribute, value, error):
        setattr(self._loaded_config, attribute, value)

        self.assertEqual((value, error), self._loaded_config.validate_all())

    def test_set_units(self):
        self._loaded_config.set_units(" absolute-approx ")

        self.assertEqual("absolute-approx", self._loaded_config.get_units())

    def test_set_units_invalid(self):
        with self.assertRaises(ValueError) as cm:
            self._loaded_config.set_units("degrees")

        self.assertEqual(errors.CONFIG_UNITS_INVALID, cm.exception.args[1])
        self.assertEqual("pi", self._loaded_config.get_units())

    def test_set_format_invalid(self):
        with self.assertRaises(ValueError) as cm:
            self._loaded_config.set_format("xml")

        self.assertEqual(errors.CONFIG_FORMAT_INVALID, cm.exception.args[1])

    def test_set_max_weyl_order(self):
        self._loaded_config.set_max_weyl_order(24)

        self.assertEqual(24, self._loaded_config.get_max_weyl_order())

    def test_set_max_weyl_order_invalid(self):
        with self.assertRaises(ValueError) as cm:
            self._loaded_config.set_max_weyl_order(0)

        self.assertEqual(errors.CONFIG_MAX_WEYL_ORDER_NOT_POSITIVE, cm.exception.args[1])

    def test_set_window(self):
        self._loaded_config.set_window(Fraction(5, 2))

        self.assertEqual(Fraction(5, 2), self._loaded_config.get_window())

    def test_setter_requires_loaded(self):
        with self.assertRaises(errors.InvalidStateError):
            self._config.set_units("pi")

    @parameterized.expand(NON_BOOL_TYPE_ELEMENTS_AND_NONE)
    def test_set_check_weyl_elements_non_bool(self, non_bool):
        with self.assertRaises(TypeError):
            self._loaded_config.set_check_weyl_elements(non_bool)

    def test_set_check_weyl_elements(self):
        self._loaded_config.set_check_weyl_elements(False)

        self.assertFalse(self._loaded_config.get_check_weyl_elements())
