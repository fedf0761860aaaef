"""
Restricted root systems with multiplicities.

A root is stored as its dual vector H_alpha, the value of the root on H is the
inner product <H_alpha, H>. Coordinates are in pi-units, so H lies on the diagram
hyperplane alpha = k*pi exactly when the inner product is the integer k.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import errors
from . import exact
from .exact import RationalMatrix, RationalVector, format_rational


@dataclass(frozen=True)
class Root:
    covector: RationalVector
    multiplicity: int


@dataclass(frozen=True)
class DiagramCrossing:
    """The point lies on the hyperplane alpha = level*pi of the positive root at root_index."""

    root_index: int
    level: int

    def is_root_hyperplane(self) -> bool:
        return self.level == 0


@dataclass(frozen=True)
class RootDatum:
    """
    The infinitesimal data of a symmetric space.

    roots holds the positive roots first, then their negatives in the same order.
    positive_indices and simple_indices index into roots.
    """

    rank: int
    roots: tuple[Root, ...]
    gram: RationalMatrix
    positive_indices: tuple[int, ...]
    simple_indices: tuple[int, ...]
    coroots: tuple[RationalVector, ...] = field(repr=False)
    simple_coefficients: tuple[tuple[int, ...], ...] = field(repr=False)
    _lookup: dict = field(repr=False, compare=False, hash=False, default_factory=dict)

    def is_torus(self) -> bool:
        return not self.roots

    def index_of(self, covector: Sequence[Fraction]) -> int | None:
        """Return the index of the root with the supplied covector, None if it is no root."""
        return self._lookup.get(tuple(covector))

    def roots_span_torus(self) -> bool:
        """Return whether the roots span the torus, which means the space has no euclidean factor."""
        return self.semisimple_rank() == self.rank

    def semisimple_rank(self) -> int:
        return len(self.simple_indices)

    def positive_roots(self) -> list[Root]:
        return [self.roots[i] for i in self.positive_indices]

    def simple_roots(self) -> list[Root]:
        return [self.roots[i] for i in self.simple_indices]


def _lexicographically_positive(v: Sequence[Fraction]) -> bool:
    return next(entry for entry in v if entry != 0) > 0


def _negate(v: Sequence[Fraction]) -> RationalVector:
    return tuple(-entry for entry in v)


def _format_vector(v: Sequence[Fraction]) -> str:
    return "(" + ", ".join(format_rational(entry) for entry in v) + ")"


def _validate_gram(rank: int, gram) -> RationalMatrix:
    if gram is None:
        return RationalMatrix.identity(rank)
    if not isinstance(gram, RationalMatrix):
        gram = RationalMatrix.from_rows(gram, cols=rank)
    if gram.rows != rank or gram.cols != rank or not exact.is_positive_definite(gram):
        raise RuntimeError(errors.INVALID_GRAM, rank)
    return gram


def _collect_roots(rank: int, roots: Iterable) -> dict[RationalVector, int]:
    """Return the full root set as covector -> multiplicity, with missing negatives added."""
    multiplicities = {}

    for position, entry in enumerate(roots):
        if isinstance(entry, Root):
            covector, multiplicity = entry.covector, entry.multiplicity
        else:
            covector, multiplicity = entry
        covector = exact.vector(covector)

        if len(covector) != rank:
            raise RuntimeError(errors.INVALID_DIMENSION_MISMATCH, rank, len(covector))
        if all(coordinate == 0 for coordinate in covector):
            raise RuntimeError(errors.ROOT_ZERO_COVECTOR, position)
        if isinstance(multiplicity, bool) or not isinstance(multiplicity, int) or multiplicity < 1:
            raise RuntimeError(errors.ROOT_BAD_MULTIPLICITY, _format_vector(covector), multiplicity)

        for candidate in (covector, _negate(covector)):
            known = multiplicities.setdefault(candidate, multiplicity)
            if known != multiplicity:
                raise RuntimeError(errors.ROOT_MULTIPLICITY_MISMATCH, _format_vector(covector), multiplicity,
                                   _format_vector(candidate), known)

    return multiplicities


def _cartan_integer(alpha: RationalVector, beta: RationalVector, gram: RationalMatrix) -> Fraction:
    """Return 2<alpha, beta>/<alpha, alpha>."""
    return 2 * exact.pair(alpha, beta, gram) / exact.norm_squared(alpha, gram)


def _validate_root_system(multiplicities: dict[RationalVector, int], gram: RationalMatrix):
    for alpha in multiplicities:
        for beta, beta_multiplicity in multiplicities.items():
            cartan_integer = _cartan_integer(alpha, beta, gram)
            if not exact.is_integral(cartan_integer):
                raise RuntimeError(errors.ROOT_NOT_CRYSTALLOGRAPHIC, _format_vector(alpha), _format_vector(beta),
                                   format_rational(cartan_integer))

            image = exact.sub(beta, exact.scale(cartan_integer, alpha))
            if image not in multiplicities:
                raise RuntimeError(errors.ROOT_REFLECTION_NOT_PERMUTING, _format_vector(alpha), _format_vector(beta))
            if multiplicities[image] != beta_multiplicity:
                raise RuntimeError(errors.ROOT_MULTIPLICITY_MISMATCH, _format_vector(beta), beta_multiplicity,
                                   _format_vector(image), multiplicities[image])


def build_root_datum(rank: int, roots: Iterable = (), gram=None) -> RootDatum:
    """
    Build and validate a root datum.

    roots holds Root instances or (covector, multiplicity) pairs. Listing only the positive
    roots is enough, negatives are added. An empty list yields the torus of the given rank.
    gram defaults to the identity. The positive roots are the lexicographically positive ones.
    """
    if isinstance(rank, bool) or not isinstance(rank, int) or rank < 1:
        raise RuntimeError(errors.INVALID_RANK, rank)
    gram = _validate_gram(rank, gram)
    multiplicities = _collect_roots(rank, roots)
    _validate_root_system(multiplicities, gram)

    positives = [covector for covector in multiplicities if _lexicographically_positive(covector)]
    ordered = positives + [_negate(covector) for covector in positives]
    root_list = tuple(Root(covector, multiplicities[covector]) for covector in ordered)
    lookup = {root.covector: index for index, root in enumerate(root_list)}
    positive_indices = tuple(range(len(positives)))

    positive_set = set(positives)
    simple_indices = tuple(index for index in positive_indices if not any(
        exact.sub(root_list[index].covector, other) in positive_set for other in positives))

    coroots = tuple(exact.scale(Fraction(2) / exact.norm_squared(root.covector, gram), root.covector)
                    for root in root_list)

    simple_coefficients = _simple_coefficients(rank, root_list, simple_indices)

    return RootDatum(rank, root_list, gram, positive_indices, simple_indices, coroots, simple_coefficients, lookup)


def _simple_coefficients(rank: int, root_list: Sequence[Root], simple_indices: Sequence[int]):
    """Express every root in the simple roots, requiring integer coefficients of equal sign."""
    if not simple_indices:
        return ()
    simple_basis = RationalMatrix.from_columns([root_list[i].covector for i in simple_indices], rank)
    left = exact.left_inverse(simple_basis)

    coefficients = []
    for root in root_list:
        solved = exact.solve_in_lattice(simple_basis, root.covector, left)
        if solved is None or not (all(c >= 0 for c in solved) or all(c <= 0 for c in solved)):
            raise RuntimeError(errors.ROOT_NOT_SIMPLE_COMBINATION, _format_vector(root.covector))
        coefficients.append(solved)
    return tuple(coefficients)


def coroot(datum: RootDatum, root_index: int) -> RationalVector:
    """Return H_alpha^v = 2 H_alpha / <alpha, alpha>, the vector with alpha(H_alpha^v) = 2."""
    return datum.coroots[root_index]


def root_value(datum: RootDatum, root_index: int, h: Sequence[Fraction]) -> Fraction:
    """Return alpha(h) in pi-units."""
    return exact.pair(datum.roots[root_index].covector, h, datum.gram)


def diagram_crossings(datum: RootDatum, h: Sequence[Fraction]) -> list[DiagramCrossing]:
    """Return one crossing per positive root alpha with alpha(h) in Z, carrying the level alpha(h)."""
    if len(h) != datum.rank:
        raise RuntimeError(errors.INVALID_DIMENSION_MISMATCH, datum.rank, len(h))
    crossings = []
    for index in datum.positive_indices:
        value = root_value(datum, index, h)
        if exact.is_integral(value):
            crossings.append(DiagramCrossing(index, int(value)))
    return crossings


def is_regular(datum: RootDatum, h: Sequence[Fraction]) -> bool:
    return not diagram_crossings(datum, h)


def index_of_point(datum: RootDatum, h: Sequence[Fraction]) -> int:
    """
    Return the sum of the multiplicities of the positive roots with alpha(h) a nonzero integer.

    This is the dimension of the focal orbit through h, and the index of h.
    """
    return sum(datum.roots[crossing.root_index].multiplicity
               for crossing in diagram_crossings(datum, h) if crossing.level != 0)


def reflect(datum: RootDatum, root_index: int, h: Sequence[Fraction]) -> RationalVector:
    """Return r_alpha(h) = h - alpha(h) H_alpha^v."""
    return exact.sub(h, exact.scale(root_value(datum, root_index, h), coroot(datum, root_index)))


def reflection_matrix(datum: RootDatum, root_index: int) -> RationalMatrix:
    """Return the matrix I - H_alpha^v (gram H_alpha)^T of the reflection in the hyperplane alpha = 0."""
    dual = datum.gram.apply(datum.roots[root_index].covector)
    vee = coroot(datum, root_index)
    return RationalMatrix(datum.rank, datum.rank, tuple(
        Fraction(int(i == j)) - vee[i] * dual[j] for i in range(datum.rank) for j in range(datum.rank)))
