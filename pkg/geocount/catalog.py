"""
Named symmetric spaces and space spec files.

A space spec document looks like
    {"name": "Gr2R4", "rank": 2, "gram": [["1", "0"], ["0", "1"]],
     "roots": [{"covector": ["1", "-1"], "multiplicity": 1}, {"covector": ["1", "1"], "multiplicity": 1}],
     "lattice": [["1", "0"], ["0", "1"]]}
with rationals written as strings 'p' or 'p/q' (plain integers are accepted too).
Only the positive roots need to be listed. Without "gram" the inner product is the
identity, without "lattice" the unit lattice is Gamma_0, the simply connected model.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from os import path
from typing import Sequence

from . import errors
from . import exact
from . import lattice
from .errors import wrapper_of
from .exact import format_rational
from .lattice import LatticeBasis
from .logger import main_logger
from .root_datum import Root, RootDatum, build_root_datum


@dataclass(frozen=True)
class SpaceSpec:
    name: str
    datum: RootDatum
    gamma: LatticeBasis
    notes: str = field(default="", compare=False)


def build_space(name: str, datum: RootDatum, gamma: LatticeBasis, notes: str = "") -> SpaceSpec:
    """Return the space after validating gamma as its unit lattice."""
    report = lattice.validate_unit_lattice(datum, None, gamma)
    if not report.is_valid():
        raise RuntimeError(errors.SPEC_LATTICE_INVALID, name, "; ".join(report.messages()))
    return SpaceSpec(name, datum, gamma, notes)


def with_lattice(space: SpaceSpec, generators: Sequence[Sequence]) -> SpaceSpec:
    """Return the space with its unit lattice replaced by the Z-span of the generators."""
    gamma = LatticeBasis.from_generators([exact.vector(g) for g in generators], space.datum.gram)
    return build_space(space.name, space.datum, gamma, space.notes)


def space_from_compact_group(name: str, rank: int, group_roots: Sequence[Sequence], gram=None,
                             lattice_generators: Sequence[Sequence] | None = None, notes: str = "") -> SpaceSpec:
    """
    Realize a compact group as a symmetric space.

    The torus of the space is identified with the torus of the group through (X, -X) -> 2X,
    so every root of the group appears divided by 2, with the multiplicity 2 of a complex
    root space. The unit lattice is the lattice of the group torus.
    """
    roots = [(exact.scale(Fraction(1, 2), exact.vector(covector)), 2) for covector in group_roots]
    datum = build_root_datum(rank, roots, gram)
    if lattice_generators is None:
        gamma = lattice.fundamental_lattice(datum)
    else:
        gamma = LatticeBasis.from_generators([exact.vector(g) for g in lattice_generators], datum.gram)
    return build_space(name, datum, gamma, notes)


def _standard_lattice(datum: RootDatum) -> LatticeBasis:
    return LatticeBasis(exact.RationalMatrix.identity(datum.rank), datum.gram)


def _sphere(name: str, generator: int, notes: str) -> SpaceSpec:
    datum = build_root_datum(1, [((1,), 1)])
    return build_space(name, datum, LatticeBasis.from_generators([(generator,)], datum.gram), notes)


def _grassmannian_datum(n: int) -> RootDatum:
    roots = [((1, -1), 1), ((1, 1), 1)]
    if n > 4:
        roots += [((1, 0), n - 4), ((0, 1), n - 4)]
    return build_root_datum(2, roots)


def _torus(n: int) -> SpaceSpec:
    datum = build_root_datum(n, [])
    return build_space(f"T{n}", datum, _standard_lattice(datum), f"The flat torus of dimension {n}, pi_1 = Z^{n}.")


def _preset_s2():
    return _sphere("S2", 2, "The round sphere, simply connected.")


def _preset_rp2():
    return _sphere("RP2", 1, "The real projective plane, the quotient of S2 by the antipodal map.")


def _preset_gr2r4():
    datum = _grassmannian_datum(4)
    return build_space("Gr2R4", datum, _standard_lattice(datum),
                       "The Grassmannian of 2-planes in R^4, roots t1 - t2 and t1 + t2, pi_1 = Z_2.")


def _preset_gr2r4_oriented():
    datum = _grassmannian_datum(4)
    return build_space("Gr2R4+", datum, lattice.fundamental_lattice(datum),
                       "The oriented Grassmannian of 2-planes in R^4, simply connected.")


def _preset_su2_group():
    return space_from_compact_group(
        "SU2-group", 1, [(2,)], lattice_generators=[(2,)],
        notes="The group SU(2) = S^3 as a symmetric space, its root 2x divided by 2 with multiplicity 2.")


_FIXED_PRESETS = {
    "S2": _preset_s2,
    "RP2": _preset_rp2,
    "Gr2R4": _preset_gr2r4,
    "Gr2R4+": _preset_gr2r4_oriented,
    "SU2-group": _preset_su2_group,
}

_TORUS_PATTERN = re.compile(r"T([1-9][0-9]*)")
_GRASSMANNIAN_PATTERN = re.compile(r"Gr2Rn:([1-9][0-9]*)")


def names() -> list[str]:
    """Return the preset names, with the families written as Tn and Gr2Rn:n."""
    return list(_FIXED_PRESETS) + ["Tn", "Gr2Rn:n"]


def preset(name: str) -> SpaceSpec:
    """Return the named preset, raising CATALOG_UNKNOWN_PRESET for unknown names."""
    if name in _FIXED_PRESETS:
        return _FIXED_PRESETS[name]()

    torus = _TORUS_PATTERN.fullmatch(name)
    if torus is not None:
        return _torus(int(torus.group(1)))

    grassmannian = _GRASSMANNIAN_PATTERN.fullmatch(name)
    if grassmannian is not None and int(grassmannian.group(1)) >= 4:
        n = int(grassmannian.group(1))
        datum = _grassmannian_datum(n)
        # TODO: replace Z^2 once the unit lattice of Gr2(R^n) is confirmed for n > 4
        return build_space(name, datum, _standard_lattice(datum),
                           f"The Grassmannian of 2-planes in R^{n}, type B2 with short root multiplicity {n - 4}. "
                           "The lattice Z^2 is provisional, it is only checked by validation.")

    raise RuntimeError(errors.CATALOG_UNKNOWN_PRESET, name, ", ".join(names()))


def _require_field(document: dict, field_name: str):
    if field_name not in document:
        raise RuntimeError(errors.SPEC_FILE_MISSING_FIELD, field_name)
    return document[field_name]


def _rational_rows(value, field_name: str, row_length: int) -> list[tuple[Fraction, ...]]:
    """Parse a list of rational vectors of the given length."""
    if not isinstance(value, list) or not all(isinstance(row, list) for row in value):
        raise RuntimeError(errors.SPEC_FILE_INVALID_FIELD, field_name, "expected a list of lists of rationals")
    rows = []
    for row in value:
        if len(row) != row_length:
            raise RuntimeError(errors.SPEC_FILE_INVALID_FIELD, field_name,
                               f"expected vectors of length {row_length}, got length {len(row)}")
        try:
            rows.append(exact.vector(row))
        except RuntimeError as exception:
            if wrapper_of(exception) is not errors.INVALID_RATIONAL:
                raise
            raise RuntimeError(errors.SPEC_FILE_INVALID_FIELD, field_name,
                               errors.INVALID_RATIONAL.get_message(*exception.args[1:])) from None
    return rows


def from_document(document: dict, default_name: str = "custom") -> SpaceSpec:
    """Build and validate a space from a parsed space spec document."""
    if not isinstance(document, dict):
        raise RuntimeError(errors.SPEC_FILE_INVALID_FIELD, "(document)", "expected a JSON object")

    name = document.get("name", default_name)
    if not isinstance(name, str) or not name.strip():
        raise RuntimeError(errors.SPEC_FILE_INVALID_FIELD, "name", "expected a non-empty string")

    rank = _require_field(document, "rank")
    if isinstance(rank, bool) or not isinstance(rank, int) or rank < 1:
        raise RuntimeError(errors.SPEC_FILE_INVALID_FIELD, "rank", "expected a positive integer")

    gram = None
    if "gram" in document:
        gram_rows = _rational_rows(document["gram"], "gram", rank)
        if len(gram_rows) != rank:
            raise RuntimeError(errors.SPEC_FILE_INVALID_FIELD, "gram", f"expected {rank} rows")
        gram = exact.RationalMatrix.from_rows(gram_rows)

    root_entries = _require_field(document, "roots")
    if not isinstance(root_entries, list):
        raise RuntimeError(errors.SPEC_FILE_INVALID_FIELD, "roots", "expected a list")
    roots = []
    for position, entry in enumerate(root_entries):
        field_name = f"roots[{position}]"
        if not isinstance(entry, dict) or "covector" not in entry or "multiplicity" not in entry:
            raise RuntimeError(errors.SPEC_FILE_INVALID_FIELD, field_name,
                               "expected an object with covector and multiplicity")
        covector = _rational_rows([entry["covector"]], field_name + ".covector", rank)[0]
        roots.append(Root(covector, entry["multiplicity"]))

    datum = build_root_datum(rank, roots, gram)

    if "lattice" in document:
        generators = _rational_rows(document["lattice"], "lattice", rank)
        gamma = LatticeBasis.from_generators(generators, datum.gram)
    else:
        gamma = lattice.fundamental_lattice(datum)

    return build_space(name, datum, gamma, document.get("notes", ""))


def from_file(filename: str) -> SpaceSpec:
    """Read and validate a space spec JSON file."""
    try:
        with open(filename, 'r', encoding='utf-8') as spec_file:
            document = json.load(spec_file)
    except (OSError, ValueError) as exception:
        raise RuntimeError(errors.SPEC_FILE_UNREADABLE, filename, exception) from exception

    space = from_document(document, path.splitext(path.basename(filename))[0])
    main_logger.info("Loaded the space %s from %s", space.name, filename)
    return space


def to_document(space: SpaceSpec) -> dict:
    """Return the space spec document of the space, listing only the positive roots."""
    datum = space.datum
    return {
        "name": space.name,
        "rank": datum.rank,
        "gram": [[format_rational(entry) for entry in row] for row in datum.gram.row_list()],
        "roots": [{"covector": [format_rational(entry) for entry in root.covector], "multiplicity": root.multiplicity}
                  for root in datum.positive_roots()],
        "lattice": [[format_rational(entry) for entry in generator] for generator in space.gamma.generators()],
    }
