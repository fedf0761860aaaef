"""
Lattices in the torus: the unit lattice Gamma of a space, the fundamental lattice Gamma_0
spanned by the coroots and the central lattice Gamma_1 on which every root is an integer.

All lattices are stored by a basis in Hermite normal form (columns, pi-units).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import errors
from . import exact
from .errors import ErrorWrapper
from .exact import IntegerVector, RationalMatrix, RationalVector, SmithDecomposition, format_rational
from .root_datum import RootDatum, reflection_matrix, root_value


@dataclass(frozen=True)
class LatticeBasis:
    basis: RationalMatrix
    gram: RationalMatrix
    _left: RationalMatrix = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_left", exact.left_inverse(self.basis))

    @classmethod
    def from_generators(cls, generators: Iterable[Sequence], gram: RationalMatrix) -> LatticeBasis:
        """Return the lattice spanned over Z by the supplied rational vectors."""
        return cls(exact.lattice_basis_from_generators(list(generators), gram.rows), gram)

    def dimension(self) -> int:
        return self.basis.rows

    def rank(self) -> int:
        return self.basis.cols

    def is_full_rank(self) -> bool:
        return self.rank() == self.dimension()

    def generators(self) -> list[RationalVector]:
        return self.basis.column_list()

    def coordinates(self, v: Sequence[Fraction]) -> IntegerVector | None:
        """Return the integer coordinates of v in this basis, None if v is no lattice vector."""
        return exact.solve_in_lattice(self.basis, v, self._left)

    def contains(self, v: Sequence[Fraction]) -> bool:
        return self.coordinates(v) is not None

    def vector(self, coordinates: Sequence[int]) -> RationalVector:
        return self.basis.apply([Fraction(c) for c in coordinates])


@dataclass(frozen=True)
class NotDiscrete:
    """
    Gamma_1 is no lattice when the roots do not span the torus.

    semisimple_slice holds the lattice of Gamma_1 within the span of the roots.
    """

    semisimple_slice: LatticeBasis


@dataclass
class ValidationReport:
    """The failures found while validating a unit lattice, each an error wrapper with its message arguments."""

    failures: list[tuple[ErrorWrapper, tuple]] = field(default_factory=list)

    def add(self, error: ErrorWrapper, *args):
        self.failures.append((error, args))

    def is_valid(self) -> bool:
        return not self.failures

    def messages(self) -> list[str]:
        return [error.get_message(*args) for error, args in self.failures]


@dataclass(frozen=True)
class DirichletClassification:
    """region is one of interior, boundary, exterior. witnesses are the lattice vectors gamma != 0 with |h+gamma| <= |h|."""

    region: str
    witnesses: tuple[RationalVector, ...]


INTERIOR = "interior"
BOUNDARY = "boundary"
EXTERIOR = "exterior"


@dataclass(frozen=True)
class AlcoveCheckReport:
    checked: int
    counterexamples: tuple[RationalVector, ...]

    def passed(self) -> bool:
        return not self.counterexamples


class QuotientPresentation:
    """
    The group Gamma / Gamma_0 in the invariant factor presentation.

    label(v) returns the class of a lattice vector v: one residue per invariant factor
    greater than one, followed by the free coordinates.
    """

    def __init__(self, gamma: LatticeBasis, relations: RationalMatrix):
        self.gamma = gamma
        self.diagonal, self._transform = exact.smith_transforms(relations)
        self.decomposition = exact.smith_normal_form(relations)

    def label(self, v: Sequence[Fraction]) -> tuple[int, ...]:
        coordinates = self.gamma.coordinates(v)
        if coordinates is None:
            raise RuntimeError(errors.FOCAL_ORBIT_NOT_IN_COSET, _format_vector(v), "0")
        size = len(coordinates)
        transformed = [sum(coordinates[i] * self._transform[i][j] for i in range(size)) for j in range(size)]
        torsion = [value % d for value, d in zip(transformed, self.diagonal) if d > 1]
        free = [value for value, d in zip(transformed, self.diagonal) if d == 0]
        return tuple(torsion + free)


def _format_vector(v: Sequence[Fraction]) -> str:
    return "(" + ", ".join(format_rational(entry) for entry in v) + ")"


def fundamental_lattice(datum: RootDatum) -> LatticeBasis:
    """Return Gamma_0, the Z-span of the coroots. It has rank below the dimension for a euclidean factor."""
    return LatticeBasis.from_generators([datum.coroots[i] for i in datum.positive_indices], datum.gram)


def root_lattice(datum: RootDatum) -> LatticeBasis:
    return LatticeBasis.from_generators([datum.roots[i].covector for i in datum.positive_indices], datum.gram)


def central_lattice(datum: RootDatum) -> LatticeBasis | NotDiscrete:
    """
    Return Gamma_1 = {h : alpha(h) in Z for every root alpha}.

    Within the span of a root lattice basis A, the solutions are A (A^T gram A)^-1 Z^k.
    When the roots do not span the torus, Gamma_1 contains the whole orthogonal complement
    and NotDiscrete carries the lattice of the span of the roots.
    """
    roots = root_lattice(datum)
    basis = roots.basis
    if basis.cols == 0:
        dual = LatticeBasis(basis, datum.gram)
    else:
        form = basis.transpose() @ datum.gram @ basis
        dual = LatticeBasis.from_generators((basis @ exact.inverse(form)).column_list(), datum.gram)
    if dual.rank() < datum.rank:
        return NotDiscrete(dual)
    return dual


def lattices_equal(first: LatticeBasis, second: LatticeBasis) -> bool:
    """Return whether both bases span the same lattice."""
    if first.dimension() != second.dimension() or first.rank() != second.rank():
        return False
    return all(second.contains(g) for g in first.generators()) and all(first.contains(g) for g in second.generators())


def validate_unit_lattice(datum: RootDatum, w_group, gamma: LatticeBasis) -> ValidationReport:
    """
    Check that gamma can be the unit lattice of a space with this root datum.

    That is full rank, Gamma_0 in gamma, every root integral on gamma (gamma in Gamma_1)
    and gamma invariant under the simple reflections of the Weyl group. Without an
    enumerated Weyl group the simple reflections are taken from the datum.
    """
    report = ValidationReport()

    if gamma.dimension() != datum.rank:
        raise RuntimeError(errors.INVALID_DIMENSION_MISMATCH, datum.rank, gamma.dimension())
    if not gamma.is_full_rank():
        report.add(errors.LATTICE_NOT_FULL_RANK, gamma.rank(), datum.rank)

    for generator in fundamental_lattice(datum).generators():
        if not gamma.contains(generator):
            report.add(errors.LATTICE_MISSING_FUNDAMENTAL, _format_vector(generator))

    for generator in gamma.generators():
        for index in datum.positive_indices:
            value = root_value(datum, index, generator)
            if not exact.is_integral(value):
                report.add(errors.LATTICE_NOT_CENTRAL, _format_vector(datum.roots[index].covector),
                           format_rational(value), _format_vector(generator))

    if w_group is not None:
        reflections = w_group.generators
    else:
        reflections = [reflection_matrix(datum, index) for index in datum.simple_indices]
    for position, reflection in enumerate(reflections):
        for generator in gamma.generators():
            if not gamma.contains(reflection.apply(generator)):
                report.add(errors.LATTICE_NOT_WEYL_INVARIANT, position, _format_vector(generator))

    return report


def _relations(datum: RootDatum, gamma: LatticeBasis) -> RationalMatrix:
    """Return the Gamma_0 generators in gamma coordinates, one per row."""
    rows = []
    for generator in fundamental_lattice(datum).generators():
        coordinates = gamma.coordinates(generator)
        if coordinates is None:
            raise RuntimeError(errors.GAMMA_MISSING_FUNDAMENTAL_LATTICE)
        rows.append(coordinates)
    return RationalMatrix.from_rows(rows, cols=gamma.rank())


def fundamental_group(datum: RootDatum, gamma: LatticeBasis) -> SmithDecomposition:
    """Return pi_1 = gamma / Gamma_0, with free rank dim - rank Gamma_0."""
    return exact.smith_normal_form(_relations(datum, gamma))


def quotient_presentation(datum: RootDatum, gamma: LatticeBasis) -> QuotientPresentation:
    return QuotientPresentation(gamma, _relations(datum, gamma))


def _translates_within(gamma: LatticeBasis, h: RationalVector, radius_squared: Fraction,
                       strict: bool = False) -> list[tuple[RationalVector, Fraction]]:
    """Return the pairs (gamma_vector, |h + gamma_vector|^2) inside the ball, in lexicographic coordinate order."""
    found = exact.enumerate_lattice_points_in_ball(gamma.basis, gamma.gram, h, radius_squared, strict)
    result = []
    for coordinates in found:
        shift = gamma.vector(coordinates)
        result.append((shift, exact.norm_squared(exact.add(h, shift), gamma.gram)))
    return result


def closest_vectors(gamma: LatticeBasis, h: Sequence[Fraction]) -> tuple[Fraction, list[RationalVector]]:
    """Return the minimal norm squared on h + gamma and all translates attaining it, sorted."""
    h = exact.vector(h)
    candidates = _translates_within(gamma, h, exact.norm_squared(h, gamma.gram))
    minimum = min(norm for _, norm in candidates)
    return minimum, sorted(exact.add(h, shift) for shift, norm in candidates if norm == minimum)


def focal_equivalents(gamma: LatticeBasis, h: Sequence[Fraction]) -> list[RationalVector]:
    """Return every h + gamma of the same norm as h, h included, sorted."""
    h = exact.vector(h)
    norm = exact.norm_squared(h, gamma.gram)
    return sorted(exact.add(h, shift) for shift, candidate in _translates_within(gamma, h, norm) if candidate == norm)


def dirichlet_classify(gamma: LatticeBasis, h: Sequence[Fraction]) -> DirichletClassification:
    """
    Classify h against the Dirichlet domain {h : |h| < |h + gamma| for all gamma != 0}.

    interior: h is the unique shortest element of h + gamma, boundary: shortest but tied,
    exterior: some translate is strictly shorter.
    """
    h = exact.vector(h)
    norm = exact.norm_squared(h, gamma.gram)
    zero = exact.zero_vector(len(h))
    others = [(shift, candidate) for shift, candidate in _translates_within(gamma, h, norm) if shift != zero]
    witnesses = tuple(shift for shift, _ in others)
    if any(candidate < norm for _, candidate in others):
        return DirichletClassification(EXTERIOR, witnesses)
    if others:
        return DirichletClassification(BOUNDARY, witnesses)
    return DirichletClassification(INTERIOR, ())


def in_open_alcove(datum: RootDatum, h: Sequence[Fraction]) -> bool:
    """Return whether |alpha(h)| < 1 for every positive root."""
    return all(abs(root_value(datum, index, h)) < 1 for index in datum.positive_indices)


def dirichlet_equals_alcove_check(datum: RootDatum, sample_points: Iterable[Sequence[Fraction]],
                                  gamma: LatticeBasis | None = None) -> AlcoveCheckReport:
    """
    Compare membership in the Dirichlet domain with membership in the open alcove, per sample.

    The Dirichlet domain is taken for Gamma_0 unless another lattice is supplied.
    """
    gamma_0 = fundamental_lattice(datum)
    if not gamma_0.is_full_rank():
        raise RuntimeError(errors.EUCLIDEAN_FACTOR_UNSUPPORTED, gamma_0.rank(), datum.rank)
    if gamma is None:
        gamma = gamma_0

    checked = 0
    counterexamples = []
    for point in sample_points:
        point = exact.vector(point)
        checked += 1
        in_domain = dirichlet_classify(gamma, point).region == INTERIOR
        if in_domain != in_open_alcove(datum, point):
            counterexamples.append(point)
    return AlcoveCheckReport(checked, tuple(counterexamples))


def shortening_check(gamma: LatticeBasis, x: Sequence[Fraction], y: Sequence[Fraction], epsilon: Fraction) -> bool:
    """
    For focal equivalents x != y, check |(1+e)x|^2 > |y + e x|^2 and (1+e)x - (y + e x) in gamma.

    Moving past x along its ray, the translate through y becomes strictly shorter, which is why
    geodesics stop minimizing after a focal equivalent.
    """
    x, y = exact.vector(x), exact.vector(y)
    extended = exact.scale(1 + epsilon, x)
    shortcut = exact.add(y, exact.scale(epsilon, x))
    return (exact.norm_squared(extended, gamma.gram) > exact.norm_squared(shortcut, gamma.gram)
            and gamma.contains(exact.sub(extended, shortcut)))


def rational_grid(rank: int, denominator: int, extent: Fraction, max_samples: int | None = None) -> list[RationalVector]:
    """
    Return the points with coordinates p/denominator in [-extent, extent], lexicographically.

    Grids larger than max_samples are thinned to every k-th point.
    """
    low = -int(extent * denominator)
    axis = [Fraction(p, denominator) for p in range(low, -low + 1)]
    points = [tuple(point) for point in itertools.product(axis, repeat=rank)]
    if max_samples is not None and len(points) > max_samples:
        step = -(-len(points) // max_samples)
        points = points[::step]
    return points
