"""
Turn engine results into JSON-ready documents and render them.

Rationals become 'p/q' strings in pi-units. With the units 'absolute-approx' vectors are
multiplied by pi and written as floats, which is meant for reading only.
"""
import json
import math
from fractions import Fraction
from typing import Sequence

from .exact import SmithDecomposition, format_rational

PI_UNITS = "pi"
ABSOLUTE_UNITS = "absolute-approx"


def rational(value: Fraction, units: str = PI_UNITS, power: int = 1):
    """Return the value as a rational string, or as a float times pi^power for absolute units."""
    if units == ABSOLUTE_UNITS:
        return float(value) * math.pi ** power
    return format_rational(value)


def vector(v: Sequence[Fraction], units: str = PI_UNITS) -> list:
    return [rational(entry, units) for entry in v]


def smith_report(decomposition: SmithDecomposition) -> dict:
    return {"invariant_factors": list(decomposition.invariant_factors), "free_rank": decomposition.free_rank}


def descriptor_report(descriptor, units: str = PI_UNITS) -> dict:
    return {
        "representative": vector(descriptor.representative, units),
        "norm_squared": rational(descriptor.norm_squared, units, 2),
        "dimension": descriptor.dimension,
        "components": descriptor.component_count,
        "torus_intersection": [vector(point, units) for point in descriptor.torus_intersection],
        "homotopy_label": list(descriptor.homotopy_label),
        "component_representatives": [vector(point, units) for point in descriptor.component_representatives],
        "component_labels": [list(label) for label in descriptor.component_labels],
    }


def _optional_rational(value):
    return None if value is None else format_rational(value)


def classification_report(classification) -> dict:
    return {
        "regularity": classification.regularity,
        "cut": classification.cut,
        "conjugate": classification.conjugate,
        "index": classification.index,
        "first_conjugate_time": _optional_rational(classification.first_conjugate_time),
        "cut_time": _optional_rational(classification.cut_time),
    }


def lattice_report(lattice_basis, units: str = PI_UNITS) -> list:
    return [vector(generator, units) for generator in lattice_basis.generators()]


def space_report(space, w_group, validation_report, gamma_0, central, units: str = PI_UNITS) -> dict:
    """
    Return the describe document: datum, lattices, Weyl group order and the validation result.

    central is Gamma_1, either a lattice or a NotDiscrete value carrying the lattice
    within the span of the roots.
    """
    datum = space.datum
    discrete = not hasattr(central, "semisimple_slice")
    central_basis = central if discrete else central.semisimple_slice
    return {
        "name": space.name,
        "rank": datum.rank,
        "gram": [vector(row) for row in datum.gram.row_list()],
        "positive_roots": [{"covector": vector(root.covector), "multiplicity": root.multiplicity}
                           for root in datum.positive_roots()],
        "simple_roots": [vector(root.covector) for root in datum.simple_roots()],
        "lattice": lattice_report(space.gamma, units),
        "fundamental_lattice": lattice_report(gamma_0, units),
        "central_lattice": lattice_report(central_basis, units),
        "central_lattice_discrete": discrete,
        "weyl_group_order": w_group.order(),
        "valid": validation_report.is_valid(),
        "validation_failures": validation_report.messages(),
        "notes": space.notes,
    }


def simply_connected_report(report) -> dict:
    return {
        "gamma_equals_gamma_0": report.gamma_equals_gamma_0,
        "pi1_trivial": report.pi1_trivial,
        "dirichlet_equals_alcove": report.dirichlet_equals_alcove,
        "samples": report.samples,
        "consistent": report.consistent(),
    }


def _text_value(value) -> str:
    if isinstance(value, (list, dict)):
        return json.dumps(value, separators=(", ", ": "))
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _text_lines(document, indent: str = "") -> list[str]:
    lines = []
    for key, value in document.items():
        if isinstance(value, list) and value and all(isinstance(item, dict) for item in value):
            lines.append(f"{indent}{key}:")
            for item in value:
                item_lines = _text_lines(item, indent + "    ")
                item_lines[0] = indent + "  - " + item_lines[0].lstrip()
                lines.extend(item_lines)
        elif isinstance(value, dict):
            lines.append(f"{indent}{key}:")
            lines.extend(_text_lines(value, indent + "  "))
        else:
            lines.append(f"{indent}{key}: {_text_value(value)}")
    return lines


def render(document, output_format: str = "json", indent: int | None = 2) -> str:
    """Render a document as JSON or as indented 'key: value' text."""
    if output_format == "text":
        if isinstance(document, list):
            return "\n".join(line for item in document for line in ["---"] + _text_lines(item))
        return "\n".join(_text_lines(document))
    return json.dumps(document, indent=indent)
