"""
Enumeration and classification of the geodesics between two points of a symmetric space.

The base point p is fixed, the end point q = exp_p(H) is given by a vector H of the torus.
The initial vectors of all geodesics from p to q form the focal orbits through the
translates H + gamma, and two translates give the same orbit exactly when they lie in
the same W^q orbit, W^q = {w : wH - H in Gamma}.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import constants
from . import errors
from . import exact
from . import lattice
from . import weyl
from .exact import RationalVector, format_rational
from .logger import main_logger
from .root_datum import index_of_point, is_regular, root_value

REGULAR = "regular"
SINGULAR = "singular"

BEFORE_CUT = "before_cut"
CUT_POINT = "cut_point"
PAST_CUT = "past_cut"

BEFORE_FIRST_CONJUGATE = "before_first_conjugate"
FIRST_CONJUGATE = "first_conjugate"
PAST_FIRST_CONJUGATE = "past_first_conjugate"


@dataclass(frozen=True)
class FocalOrbitDescriptor:
    """
    One focal orbit F(H + gamma) through the representative.

    torus_intersection is the W^q orbit of the representative, component_representatives
    holds one point per connected component, with component_labels their classes in
    Gamma / Gamma_0 relative to the base vector.
    """

    representative: RationalVector
    norm_squared: Fraction
    dimension: int
    component_count: int
    torus_intersection: tuple[RationalVector, ...]
    component_representatives: tuple[RationalVector, ...]
    homotopy_label: tuple[int, ...]
    component_labels: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class PointClassification:
    regularity: str
    cut: str
    conjugate: str
    index: int
    first_conjugate_time: Fraction | None = None
    cut_time: Fraction | None = None


@dataclass(frozen=True)
class SimplyConnectedReport:
    """
    gamma_equals_gamma_0, pi1_trivial and dirichlet_equals_alcove agree for spaces without
    euclidean factor. dirichlet_equals_alcove is None when there is a euclidean factor.
    """

    gamma_equals_gamma_0: bool
    pi1_trivial: bool
    dirichlet_equals_alcove: bool | None
    samples: int

    def consistent(self) -> bool:
        if self.dirichlet_equals_alcove is None:
            return self.gamma_equals_gamma_0 == self.pi1_trivial
        return self.gamma_equals_gamma_0 == self.pi1_trivial == self.dirichlet_equals_alcove


def _format_vector(v: Sequence[Fraction]) -> str:
    return "(" + ", ".join(format_rational(entry) for entry in v) + ")"


class GeodesicCounter:
    """
    Answers geodesic questions for one space, a value with datum, gamma and name attributes.

    The Weyl group, Gamma_0 and the presentation of Gamma / Gamma_0 are computed once.
    The config (see config.Config) supplies the Weyl group cap and the sampling grid.
    """

    def __init__(self, space, config=None):
        self.space = space
        self.datum = space.datum
        self.gamma = space.gamma
        self.config = config

        max_order = config.get_max_weyl_order() if config is not None else constants.DEFAULT_MAX_WEYL_ORDER
        check_elements = config.get_check_weyl_elements() if config is not None else True

        self.w_group = weyl.enumerate_weyl_group(self.datum, max_order, check_elements)
        self.gamma_0 = lattice.fundamental_lattice(self.datum)
        self._quotient = None

        main_logger.info("Prepared the space %s: rank %d, %d positive roots, Weyl group of order %d",
                         space.name, self.datum.rank, len(self.datum.positive_indices), self.w_group.order())

    def quotient(self) -> lattice.QuotientPresentation:
        if self._quotient is None:
            self._quotient = lattice.quotient_presentation(self.datum, self.gamma)
        return self._quotient

    def centralizer(self, base_h: Sequence[Fraction]) -> weyl.SubgroupDescriptor:
        """Return W^q for q = exp(base_h)."""
        return weyl.centralizer_mod_lattice(self.w_group, base_h, self.gamma)

    def parallel(self, base_h: Sequence[Fraction]) -> weyl.SubgroupDescriptor:
        """Return W^q_0 for q = exp(base_h)."""
        return weyl.parallel_subgroup(self.w_group, self.datum, base_h)

    def focal_orbit(self, h_plus_gamma: Sequence[Fraction], base_h: Sequence[Fraction],
                    centralizer: weyl.SubgroupDescriptor | None = None,
                    parallel: weyl.SubgroupDescriptor | None = None) -> FocalOrbitDescriptor:
        """
        Describe the focal orbit through h_plus_gamma, a translate of base_h by a lattice vector.

        W^q and W^q_0 only depend on base_h, callers describing several orbits pass them in.
        """
        representative = exact.vector(h_plus_gamma)
        base_h = exact.vector(base_h)
        if not self.gamma.contains(exact.sub(representative, base_h)):
            raise RuntimeError(errors.FOCAL_ORBIT_NOT_IN_COSET, _format_vector(representative), _format_vector(base_h))

        if centralizer is None:
            centralizer = self.centralizer(base_h)
        if parallel is None:
            parallel = self.parallel(base_h)

        component_count = weyl.quotient_size(self.w_group, centralizer, parallel)
        orbit = sorted({self.w_group.act(index, representative) for index in centralizer.element_indices})

        components = []
        for coset in weyl.cosets(self.w_group, centralizer, parallel):
            components.append(min(self.w_group.act(index, representative) for index in coset))
        if len(set(components)) != component_count:
            raise RuntimeError(errors.INTERNAL_INVARIANT_VIOLATION,
                               "the components of a focal orbit do not match the cosets of W^q_0 in W^q")
        components.sort()

        quotient = self.quotient()
        component_labels = tuple(quotient.label(exact.sub(point, base_h)) for point in components)

        return FocalOrbitDescriptor(
            representative=representative,
            norm_squared=exact.norm_squared(representative, self.datum.gram),
            dimension=index_of_point(self.datum, representative),
            component_count=component_count,
            torus_intersection=tuple(orbit),
            component_representatives=tuple(components),
            homotopy_label=quotient.label(exact.sub(representative, base_h)),
            component_labels=component_labels)

    def enumerate_preimages(self, base_h: Sequence[Fraction], max_norm_squared) -> list[FocalOrbitDescriptor]:
        """
        Return the focal orbits through all base_h + gamma with norm squared at most max_norm_squared.

        The translates are split into W^q orbits, one descriptor each, ordered by norm and then
        by the lexicographically smallest orbit element, which serves as representative.
        """
        base_h = exact.vector(base_h)
        max_norm_squared = exact.to_rational(max_norm_squared)
        if len(base_h) != self.datum.rank:
            raise RuntimeError(errors.INVALID_DIMENSION_MISMATCH, self.datum.rank, len(base_h))

        found = exact.enumerate_lattice_points_in_ball(self.gamma.basis, self.datum.gram, base_h, max_norm_squared)
        points = [exact.add(base_h, self.gamma.vector(coordinates)) for coordinates in found]
        points.sort(key=lambda point: (exact.norm_squared(point, self.datum.gram), point))

        centralizer = self.centralizer(base_h)
        parallel = self.parallel(base_h)

        assigned = set()
        descriptors = []
        for point in points:
            if point in assigned:
                continue
            orbit = {self.w_group.act(index, point) for index in centralizer.element_indices}
            assigned.update(orbit)
            descriptors.append(self.focal_orbit(min(orbit), base_h, centralizer, parallel))

        if assigned != set(points):
            raise RuntimeError(errors.INTERNAL_INVARIANT_VIOLATION, "a W^q orbit leaves the enumerated ball")

        descriptors.sort(key=lambda descriptor: (descriptor.norm_squared, descriptor.representative))
        main_logger.debug("Found %d translates in %d focal orbits", len(points), len(descriptors))
        return descriptors

    def minimal_geodesics(self, base_h: Sequence[Fraction]) -> list[FocalOrbitDescriptor]:
        """
        Return the focal orbits of the minimal geodesics from p to q = exp(base_h).

        base_h is replaced by the smallest closest vector h* of base_h + gamma, the orbits are
        those through the focal equivalents of h*, which are all translates of norm |h*|.
        """
        minimum, closest = lattice.closest_vectors(self.gamma, base_h)
        return self.enumerate_preimages(closest[0], minimum)

    def first_conjugate_time(self, h: Sequence[Fraction]) -> Fraction | None:
        """Return the t > 0 where t*h first meets a diagram hyperplane alpha = +-1, None if no root is nonzero on h."""
        largest = max((abs(root_value(self.datum, index, h)) for index in self.datum.positive_indices),
                      default=Fraction(0))
        if largest == 0:
            return None
        return 1 / largest

    def cut_time(self, h: Sequence[Fraction]) -> Fraction | None:
        """
        Return the t > 0 where t*h reaches the boundary of the Dirichlet domain of gamma.

        |t h + gamma|^2 <= |t h|^2 exactly when t >= |gamma|^2 / (2 |<h, gamma>|) for <h, gamma> < 0,
        so the cut time is the minimum of these bounds. One basis vector gives an upper bound t_0,
        and every gamma attaining the minimum has |gamma| <= 2 t_0 |h|.
        """
        h = exact.vector(h)
        gram = self.datum.gram
        if all(entry == 0 for entry in h):
            return None

        def bound(gamma_vector):
            pairing = exact.pair(h, gamma_vector, gram)
            if pairing == 0:
                return None
            return exact.norm_squared(gamma_vector, gram) / (2 * abs(pairing))

        candidates = [bound(generator) for generator in self.gamma.generators()]
        upper = min(candidate for candidate in candidates if candidate is not None)

        radius_squared = 4 * upper ** 2 * exact.norm_squared(h, gram)
        found = exact.enumerate_lattice_points_in_ball(self.gamma.basis, gram, exact.zero_vector(len(h)), radius_squared)
        for coordinates in found:
            candidate = bound(self.gamma.vector(coordinates))
            if candidate is not None and candidate < upper:
                upper = candidate
        return upper

    def classify_point(self, h: Sequence[Fraction]) -> PointClassification:
        """
        Return the regularity, the cut and first conjugate status and the index of h.

        The cut status compares h with the Dirichlet domain of gamma, the conjugate status
        with the closed alcove |alpha(h)| <= 1.
        """
        h = exact.vector(h)
        region = lattice.dirichlet_classify(self.gamma, h).region
        cut = {lattice.INTERIOR: BEFORE_CUT, lattice.BOUNDARY: CUT_POINT, lattice.EXTERIOR: PAST_CUT}[region]

        largest = max((abs(root_value(self.datum, index, h)) for index in self.datum.positive_indices),
                      default=Fraction(0))
        if largest < 1:
            conjugate = BEFORE_FIRST_CONJUGATE
        elif largest == 1:
            conjugate = FIRST_CONJUGATE
        else:
            conjugate = PAST_FIRST_CONJUGATE

        return PointClassification(
            regularity=REGULAR if is_regular(self.datum, h) else SINGULAR,
            cut=cut,
            conjugate=conjugate,
            index=index_of_point(self.datum, h),
            first_conjugate_time=self.first_conjugate_time(h),
            cut_time=self.cut_time(h))

    def simply_connected_report(self) -> SimplyConnectedReport:
        """Compare gamma with Gamma_0, pi_1 with the trivial group and the Dirichlet domain with the alcove on a sample grid."""
        gamma_equals_gamma_0 = lattice.lattices_equal(self.gamma, self.gamma_0)
        pi1_trivial = lattice.fundamental_group(self.datum, self.gamma).is_trivial()

        if not self.gamma_0.is_full_rank():
            return SimplyConnectedReport(gamma_equals_gamma_0, pi1_trivial, None, 0)

        if self.config is not None:
            samples = lattice.rational_grid(self.datum.rank, self.config.get_grid_denominator(),
                                            self.config.get_grid_extent(), self.config.get_max_samples())
        else:
            samples = lattice.rational_grid(self.datum.rank, 4, Fraction(3, 2), 2000)
        check = lattice.dirichlet_equals_alcove_check(self.datum, samples, self.gamma)
        return SimplyConnectedReport(gamma_equals_gamma_0, pi1_trivial, check.passed(), check.checked)

    def centralizer_matches_parallel(self, h: Sequence[Fraction]) -> bool:
        """
        Return whether W^q_0 equals the centralizer of h modulo Gamma_0.

        Holds for every h, it is the statement W^q = W^q_0 for the simply connected cover.
        """
        modulo_gamma_0 = weyl.centralizer_mod_lattice(self.w_group, h, self.gamma_0)
        return modulo_gamma_0.element_indices == self.parallel(h).element_indices
