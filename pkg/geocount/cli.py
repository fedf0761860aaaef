"""The command line front end of the program."""
import argparse
import re
import sys

from . import catalog
from . import config as configuration
from . import constants
from . import diagram
from . import errors
from . import exact
from . import lattice
from . import reports
from .geodesics import GeodesicCounter
from .logger import main_logger, error_logger

COMMANDS = ("describe", "pi1", "geodesics", "minimal", "classify", "equivalents", "diagram")

_VECTOR_PATTERN = re.compile(r"\[([^\[\]]*)\]")


def parse_vector(text: str) -> tuple:
    """Parse '[p/q, r, ...]' (brackets optional) into a vector of Fractions."""
    stripped = text.strip()
    if stripped.startswith("[") and stripped.endswith("]"):
        stripped = stripped[1:-1]
    if not stripped.strip():
        return ()
    return exact.vector(entry for entry in stripped.split(","))


def parse_vector_list(text: str) -> list:
    """Parse '[[a, b], [c, d]]' into a list of vectors."""
    inner = text.strip()
    if inner.startswith("[") and inner.endswith("]"):
        inner = inner[1:-1]
    vectors = _VECTOR_PATTERN.findall(inner)
    if not vectors or _VECTOR_PATTERN.sub("", inner).replace(",", "").strip():
        raise RuntimeError(errors.INVALID_RATIONAL, text)
    return [parse_vector(vector) for vector in vectors]


def _argument_type(parse_function):
    """Turn a parse function into an argparse type, so invalid input exits with the parse error code."""
    def parse(text):
        try:
            return parse_function(text)
        except RuntimeError as exception:
            wrapper = errors.wrapper_of(exception)
            if wrapper is None:
                raise
            raise argparse.ArgumentTypeError(wrapper.get_message(*exception.args[1:])) from None
    return parse


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    space = common.add_mutually_exclusive_group(required=True)
    space.add_argument("--preset", help="a catalog space: " + ", ".join(catalog.names()))
    space.add_argument("--spec", help="a space spec JSON file")
    common.add_argument("--lattice", type=_argument_type(parse_vector_list),
                        help="replace the unit lattice by the span of these generators, e.g. \"[[1,0],[0,1]]\"")
    common.add_argument("--units", choices=("pi", "absolute-approx"), help="output units, pi keeps exact rationals")
    common.add_argument("--format", choices=("json", "text"), help="output format")
    common.add_argument("--config", default=configuration.CONFIG_FILENAME, help="the configuration file")
    common.add_argument("--max-weyl-order", type=int, help="the maximal Weyl group order to enumerate")

    parser = argparse.ArgumentParser(
        prog="geocount", description="Count and classify the geodesics between two points of a compact symmetric space. "
                                     "Vectors are given in pi-units as rationals, e.g. \"[1/2,1/2]\".")
    subparsers = parser.add_subparsers(dest="command", required=True)

    subparsers.add_parser("describe", parents=[common], help="root datum, lattices, Weyl group and validation")
    subparsers.add_parser("pi1", parents=[common], help="the fundamental group Gamma / Gamma_0")

    geodesics = subparsers.add_parser("geodesics", parents=[common], help="all focal orbits up to a norm")
    geodesics.add_argument("--target", required=True, type=_argument_type(parse_vector))
    geodesics.add_argument("--max-norm2", required=True, type=_argument_type(exact.to_rational))

    minimal = subparsers.add_parser("minimal", parents=[common], help="the focal orbits of the minimal geodesics")
    minimal.add_argument("--target", required=True, type=_argument_type(parse_vector))

    classify = subparsers.add_parser("classify", parents=[common], help="cut, conjugate and index data of a vector")
    classify.add_argument("--point", required=True, type=_argument_type(parse_vector))

    equivalents = subparsers.add_parser("equivalents", parents=[common], help="the focal equivalents of a vector")
    equivalents.add_argument("--point", required=True, type=_argument_type(parse_vector))

    svg = subparsers.add_parser("diagram", parents=[common], help="an SVG drawing of a rank 2 diagram")
    svg.add_argument("--out", help="the SVG file to write, standard output if omitted")
    svg.add_argument("--window", type=_argument_type(exact.to_rational))
    svg.add_argument("--mark", action="append", default=[], type=_argument_type(parse_vector))

    return parser


def _init_config(config: configuration.Config, args):
    """Try loading the config file, key errors mean that the file structure is invalid, which terminates the program."""
    try:
        config.load(args.config)
    except (KeyError) as key_error:
        error_logger.error(
            key_error, extra={'error_id': errors.CONFIG_INVALID_STRUCTURE.error_id}, exc_info=True)
        errors.CONFIG_INVALID_STRUCTURE.print_message_and_exit()

    validation_result = config.validate_all()

    if validation_result is not None:
        validation_result[1].print_message_and_exit(validation_result[0])

    # Command line options override the file
    if args.units is not None:
        config.set_units(args.units)
    if args.format is not None:
        config.set_format(args.format)
    if args.max_weyl_order is not None:
        try:
            config.set_max_weyl_order(args.max_weyl_order)
        except ValueError as value_error:
            value_error.args[1].print_message_and_exit(args.max_weyl_order)
    if getattr(args, "window", None) is not None:
        config.set_window(args.window)


def _load_space(args) -> catalog.SpaceSpec:
    if args.preset is not None:
        space = catalog.preset(args.preset)
    else:
        space = catalog.from_file(args.spec)
    if args.lattice is not None:
        space = catalog.with_lattice(space, args.lattice)
    main_logger.info("Loaded the space %s of rank %d", space.name, space.datum.rank)
    return space


def _execute(args, config: configuration.Config):
    """Run the selected command and return the document to print, or the SVG text for diagrams."""
    space = _load_space(args)
    units = config.get_units()

    if args.command == "pi1":
        return reports.smith_report(lattice.fundamental_group(space.datum, space.gamma))

    if args.command == "diagram":
        return diagram.emit_svg(space, config.get_window(), args.mark, config.get_pixels_per_unit())

    counter = GeodesicCounter(space, config)

    if args.command == "describe":
        document = reports.space_report(
            space, counter.w_group, lattice.validate_unit_lattice(space.datum, counter.w_group, space.gamma),
            counter.gamma_0, lattice.central_lattice(space.datum), units)
        document["fundamental_group"] = reports.smith_report(lattice.fundamental_group(space.datum, space.gamma))
        document["simply_connected"] = reports.simply_connected_report(counter.simply_connected_report())
        return document

    if args.command == "geodesics":
        descriptors = counter.enumerate_preimages(args.target, args.max_norm2)
        main_logger.info("Found %d focal orbits", len(descriptors))
        return [reports.descriptor_report(descriptor, units) for descriptor in descriptors]

    if args.command == "minimal":
        return [reports.descriptor_report(descriptor, units) for descriptor in counter.minimal_geodesics(args.target)]

    if args.command == "classify":
        return reports.classification_report(counter.classify_point(args.point))

    # equivalents
    return {"point": reports.vector(args.point, units),
            "focal_equivalents": [reports.vector(point, units)
                                  for point in lattice.focal_equivalents(space.gamma, args.point)]}


def _process(args, config: configuration.Config) -> int:
    """
    Execute the command and write its output to the standard output.

    Returns a status code from constants.py regarding occurred errors.
    """
    try:
        result = _execute(args, config)

        if args.command == "diagram":
            if args.out is None:
                sys.stdout.write(result)
            else:
                with open(args.out, 'w', encoding='utf-8') as svg_file:
                    svg_file.write(result)
                main_logger.info("Wrote the diagram to %s", args.out)
        else:
            print(reports.render(result, config.get_format(), config.get_json_indent()))

        return constants.NO_ERRORS

    except Exception as exception:

        # Assume unexpected error by default
        error_wrapper = errors.wrapper_of(exception) or errors.UNEXPECTED

        # Print stacktrace for unexpected error and supply error ID, as it's needed for the logger
        if error_wrapper is errors.UNEXPECTED:
            error_logger.error(exception, extra={
                               'error_id': errors.UNEXPECTED.error_id}, exc_info=True)
            error_wrapper.print_message()
        else:
            error_wrapper.print_message(*exception.args[1:])

        return error_wrapper.exit_code


def run(argv=None) -> int:
    """Parse the arguments, load the configuration and run the command. Returns the exit code."""
    args = _build_parser().parse_args(argv)

    config_instance = configuration.Config()

    _init_config(config_instance, args)

    return _process(args, config_instance)


def main():
    """Execute the program. Entrypoint for the launcher."""
    sys.exit(run(sys.argv[1:]))
