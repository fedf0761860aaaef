"""Contains definitions of errors deliberately thrown by the application, so they can be referred elsewhere."""

import sys
from .logger import error_logger
from . import constants


class ErrorWrapper:
    """
    Contains additional information about runtime errors raised by the application, including a unique ID.

    The program enforces the uniqueness of the IDs. This type is not an error itself,
    it is raised as the first argument of a RuntimeError, followed by the message arguments.
    """

    _used_ids = set()

    def __init__(self, error_id: int, message: str, exit_code: int = constants.VALIDATION_ERRORS):
        """
        Validate the uniqueness of the supplied ID in the constructor.

        The error message is required to be of type str and not None.
        The exit code is used by the command line front end when the error terminates the program.
        """
        # Validate the uniqueness of the ID
        if error_id in ErrorWrapper._used_ids:
            raise ValueError("The id " + str(error_id) +
                             " is already used by an error wrapper")

        # If this line was reached, the ID is unique
        ErrorWrapper._used_ids.add(error_id)

        if not isinstance(message, str):
            raise TypeError(
                "The error message has to be a str")

        self.error_id = error_id
        self.exit_code = exit_code
        self._message = message

    def __repr__(self):
        return f"ErrorWrapper({self.error_id})"

    def get_message(self, *args):
        """
        Return the error message with the supplied arguments inserted.

        Internally, this calls .format(*args) on the message string.
        """
        return self._message.format(*args)

    def print_message(self, *args):
        """
        Log the error message with the configured error logger.

        This is the recommended way to print error wrapper messages.
        """
        error_logger.error(self.get_message(*args),
                           extra={'error_id': self.error_id})

    def print_message_and_exit(self, *args) -> None:
        """Log the error message, then terminate the program with the exit code of this error."""
        self.print_message(*args)
        sys.exit(self.exit_code)


class InvalidStateError(ValueError):
    """Raised when an invalid state is detected."""

    def __repr__(self):  # pragma: no cover
        """Return a general message for this error as a representation."""
        return "The current state is not valid"


def wrapper_of(exception: BaseException) -> ErrorWrapper | None:
    """Return the error wrapper carried by a RuntimeError raised by this program, or None."""
    if isinstance(exception, RuntimeError) and len(exception.args) > 0 and isinstance(exception.args[0], ErrorWrapper):
        return exception.args[0]
    return None


# Do not set the IDs below automatically, as that may mess up the error documentation,
# which relies on the specific ID assignments.
# Instead set them manually, and do not change existing assignments.
# The program validates whether an assigned ID is already in use.

UNEXPECTED = ErrorWrapper(
    0, "An unexpected error occurred", constants.UNEXPECTED_ERRORS)

#
# Exact arithmetic (invalid input)
#

INVALID_NON_INTEGER_ENTRY = ErrorWrapper(
    1, "The matrix entry {} at row {}, column {} is not an integer")
INVALID_RANK_DEFICIENT_BASIS = ErrorWrapper(
    2, "The lattice basis with {} generators in dimension {} has dependent generators")
INVALID_DIMENSION_MISMATCH = ErrorWrapper(
    3, "Expected a vector of dimension {}, but got dimension {}")
INVALID_GRAM = ErrorWrapper(
    4, "The inner product is not a symmetric positive definite {0}x{0} matrix")
INVALID_RATIONAL = ErrorWrapper(
    5, "'{}' is not a rational number (expected 'p' or 'p/q')", constants.PARSE_ERRORS)
INVALID_RANK = ErrorWrapper(
    6, "The rank {} is not a positive integer")

#
# Root data
#

ROOT_ZERO_COVECTOR = ErrorWrapper(
    10, "The root at position {} is zero")
ROOT_BAD_MULTIPLICITY = ErrorWrapper(
    11, "The root {} has multiplicity {}, but multiplicities must be positive integers")
ROOT_NOT_CRYSTALLOGRAPHIC = ErrorWrapper(
    12, "The roots {} and {} violate the integrality condition: 2<a,b>/<a,a> = {}")
ROOT_REFLECTION_NOT_PERMUTING = ErrorWrapper(
    13, "The reflection in the root {} maps the root {} outside of the root system")
ROOT_MULTIPLICITY_MISMATCH = ErrorWrapper(
    14, "The root {} has multiplicity {}, but its image {} under a reflection or negation has multiplicity {}")
ROOT_NOT_SIMPLE_COMBINATION = ErrorWrapper(
    15, "The root {} is not an integer combination of the simple roots with coefficients of equal sign")

#
# Weyl group
#

WEYL_GROUP_TOO_LARGE = ErrorWrapper(
    20, "The Weyl group exceeds the configured cap of {} elements ({} elements enumerated so far)", constants.RESOURCE_CAP)
INTERNAL_INVARIANT_VIOLATION = ErrorWrapper(
    21, "Internal invariant violated: {}", constants.UNEXPECTED_ERRORS)

#
# Lattices
#

LATTICE_NOT_FULL_RANK = ErrorWrapper(
    30, "The lattice has rank {}, but the torus has dimension {}")
LATTICE_MISSING_FUNDAMENTAL = ErrorWrapper(
    31, "The coroot vector {} of the fundamental lattice is not contained in the lattice")
LATTICE_NOT_CENTRAL = ErrorWrapper(
    32, "The root {} takes the non-integer value {} on the lattice generator {}")
LATTICE_NOT_WEYL_INVARIANT = ErrorWrapper(
    33, "The simple reflection {} maps the lattice generator {} outside of the lattice")
GAMMA_MISSING_FUNDAMENTAL_LATTICE = ErrorWrapper(
    34, "The fundamental lattice is not contained in the lattice, the quotient is undefined")
EUCLIDEAN_FACTOR_UNSUPPORTED = ErrorWrapper(
    35, "The fundamental lattice has rank {}, but the torus has dimension {}: the alcove comparison needs a space without euclidean factor", constants.UNSUPPORTED)

#
# Geodesics
#

FOCAL_ORBIT_NOT_IN_COSET = ErrorWrapper(
    40, "The vector {} is not a lattice translate of {}")

#
# Catalog and space spec files
#

CATALOG_UNKNOWN_PRESET = ErrorWrapper(
    50, "There is no preset named '{}', known presets are: {}")
SPEC_FILE_UNREADABLE = ErrorWrapper(
    51, "The space spec file '{}' could not be read: {}")
SPEC_FILE_MISSING_FIELD = ErrorWrapper(
    52, "The space spec is missing the required field '{}'")
SPEC_FILE_INVALID_FIELD = ErrorWrapper(
    53, "The space spec field '{}' is invalid: {}")
SPEC_LATTICE_INVALID = ErrorWrapper(
    54, "The lattice of the space '{}' is not a valid unit lattice: {}")

#
# Oracle and diagrams
#

ORACLE_UNSUPPORTED_SPACE = ErrorWrapper(
    60, "The numeric model does not support the space '{}'", constants.UNSUPPORTED)
ORACLE_INDEX_MISMATCH = ErrorWrapper(
    61, "The numeric index of {} is {} from the root values, but {} from the Jacobian", constants.UNEXPECTED_ERRORS)
DIAGRAM_RANK_UNSUPPORTED = ErrorWrapper(
    62, "Diagrams can only be drawn for rank 2, but the space has rank {}", constants.UNSUPPORTED)

#
# Configuration
#

CONFIG_INVALID_STRUCTURE = ErrorWrapper(
    70, "The config file has an invalid structure")
CONFIG_MAX_WEYL_ORDER_NOT_POSITIVE = ErrorWrapper(
    71, "The configured maximal Weyl group order '{}' is not a positive integer")
CONFIG_GRID_DENOMINATOR_NOT_POSITIVE = ErrorWrapper(
    72, "The configured grid denominator '{}' is not a positive integer")
CONFIG_GRID_EXTENT_NOT_POSITIVE = ErrorWrapper(
    73, "The configured grid extent '{}' is not a positive rational number")
CONFIG_MAX_SAMPLES_NOT_POSITIVE = ErrorWrapper(
    74, "The configured maximal sample count '{}' is not a positive integer")
CONFIG_UNITS_INVALID = ErrorWrapper(
    75, "The configured units '{}' are neither 'pi' nor 'absolute-approx'")
CONFIG_FORMAT_INVALID = ErrorWrapper(
    76, "The configured output format '{}' is neither 'json' nor 'text'")
CONFIG_JSON_INDENT_INVALID = ErrorWrapper(
    77, "The configured JSON indentation '{}' is not a non-negative integer")
CONFIG_WINDOW_NOT_POSITIVE = ErrorWrapper(
    78, "The configured diagram window '{}' is not a positive rational number")
CONFIG_PIXELS_NOT_POSITIVE = ErrorWrapper(
    79, "The configured pixels per unit '{}' is not a positive integer")
