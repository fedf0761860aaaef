"""Module containing common constants. Store them here to prevent errors from circular imports."""

# Process exit codes of the command line front end
NO_ERRORS = 0
UNEXPECTED_ERRORS = 1
PARSE_ERRORS = 2  # Also used by argparse itself
VALIDATION_ERRORS = 3
UNSUPPORTED = 4
RESOURCE_CAP = 5

# Default cap on the number of enumerated Weyl group elements
DEFAULT_MAX_WEYL_ORDER = 1000000
