import itertools
import unittest
import unittest.mock as mock
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st
from parameterized import parameterized

import geocount.catalog as catalog
import geocount.errors as errors
import geocount.exact as exact
import geocount.geodesics as geodesics
import geocount.lattice as lattice
import geocount.weyl as weyl
from geocount.geodesics import GeodesicCounter
from geocount.root_datum import index_of_point, root_value
from test_utils import ALL_PRESETS, SIMPLY_CONNECTED_PRESETS, rational_vectors, vec

_COUNTERS = {}


def counter_for(name: str) -> GeodesicCounter:
    """Counters are cached, the Weyl group of a preset only needs to be enumerated once."""
    if name not in _COUNTERS:
        _COUNTERS[name] = GeodesicCounter(catalog.preset(name))
    return _COUNTERS[name]


def _orbit_summary(descriptors):
    return [(d.representative, d.dimension, d.component_count, d.torus_intersection) for d in descriptors]


class FocalOrbitTest(unittest.TestCase):

    def setUp(self):
        self._counter = counter_for("Gr2R4")

    def test_projective_line(self):
        descriptor = self._counter.focal_orbit(vec("1/2", "1/2"), vec("1/2", "1/2"))

        self.assertEqual(1, descriptor.dimension)
        self.assertEqual(1, descriptor.component_count)
        self.assertEqual((vec("-1/2", "-1/2"), vec("1/2", "1/2")), descriptor.torus_intersection)
        self.assertEqual(Fraction(1, 2), descriptor.norm_squared)
        self.assertEqual((0,), descriptor.homotopy_label)

    def test_regular_translate_is_torus(self):
        descriptor = self._counter.focal_orbit(vec("3/2", "1/2"), vec("1/2", "1/2"))

        self.assertEqual(2, descriptor.dimension)
        self.assertEqual(1, descriptor.component_count)
        self.assertEqual((1,), descriptor.homotopy_label)

    def test_two_components(self):
        descriptor = self._counter.focal_orbit(vec("-1/2", 0), vec("-1/2", 0))

        self.assertEqual(0, descriptor.dimension)
        self.assertEqual(2, descriptor.component_count)
        self.assertEqual((vec("-1/2", 0), vec("1/2", 0)), descriptor.torus_intersection)
        self.assertEqual((vec("-1/2", 0), vec("1/2", 0)), descriptor.component_representatives)
        self.assertEqual(((0,), (1,)), descriptor.component_labels)

    def test_not_in_coset(self):
        with self.assertRaises(RuntimeError) as cm:
            self._counter.focal_orbit(vec("1/2", 0), vec("1/2", "1/2"))

        self.assertEqual(errors.FOCAL_ORBIT_NOT_IN_COSET, cm.exception.args[0])
        self.assertEqual("(1/2, 0)", cm.exception.args[1])


class EnumeratePreimagesTest(unittest.TestCase):

    def test_sphere_antipode(self):
        descriptors = counter_for("S2").enumerate_preimages(vec(1), 9)

        self.assertEqual([(vec(-1), 1, 1, (vec(-1), vec(1))), (vec(-3), 1, 1, (vec(-3), vec(3)))],
                         _orbit_summary(descriptors))
        self.assertEqual([Fraction(1), Fraction(9)], [d.norm_squared for d in descriptors])

    def test_sphere_generic_point(self):
        descriptors = counter_for("S2").enumerate_preimages(vec("1/3"), Fraction(49, 9))

        self.assertEqual([(vec("1/3"), 0, 1, (vec("1/3"),)),
                          (vec("-5/3"), 0, 1, (vec("-5/3"),)),
                          (vec("7/3"), 0, 1, (vec("7/3"),))], _orbit_summary(descriptors))

    def test_projective_plane(self):
        descriptors = counter_for("RP2").enumerate_preimages(vec("1/2"), Fraction(9, 4))

        self.assertEqual([(vec("-1/2"), 0, 2, (vec("-1/2"), vec("1/2"))),
                          (vec("-3/2"), 0, 2, (vec("-3/2"), vec("3/2")))], _orbit_summary(descriptors))

    def test_projective_plane_up_to_larger_norm(self):
        for descriptor in counter_for("RP2").enumerate_preimages(vec("1/2"), 25):
            self.assertEqual(0, descriptor.dimension)
            self.assertEqual(2, descriptor.component_count)
            k = descriptor.torus_intersection[1][0] - Fraction(1, 2)
            self.assertEqual(1, k.denominator)
            self.assertEqual(tuple(tuple(-c for c in point) for point in reversed(descriptor.torus_intersection)),
                             descriptor.torus_intersection)

    def test_grassmannian_vertex(self):
        descriptors = counter_for("Gr2R4").enumerate_preimages(vec("1/2", "1/2"), 5)
        datum = counter_for("Gr2R4").datum

        self.assertTrue(descriptors)
        for descriptor in descriptors:
            self.assertIn(descriptor.dimension, (1, 2))
            self.assertEqual(1, descriptor.component_count)
            vanishing = [index for index in datum.positive_indices
                         if root_value(datum, index, descriptor.representative) == 0]
            self.assertEqual(descriptor.dimension == 1, len(vanishing) == 1)

    def test_grassmannian_two_components(self):
        descriptors = counter_for("Gr2R4").enumerate_preimages(vec("-1/2", 0), 5)

        self.assertTrue(descriptors)
        for descriptor in descriptors:
            self.assertEqual(0, descriptor.dimension)
            self.assertEqual(2, descriptor.component_count)
            self.assertEqual(2, len(set(descriptor.component_labels)))

    def test_order_by_norm_then_representative(self):
        descriptors = counter_for("Gr2R4").enumerate_preimages(vec("1/2", "1/2"), Fraction(1, 2))

        self.assertEqual([vec("-1/2", "-1/2"), vec("-1/2", "1/2")], [d.representative for d in descriptors])
        self.assertEqual([(0,), (1,)], [d.homotopy_label for d in descriptors])

    def test_empty_ball(self):
        self.assertEqual([], counter_for("S2").enumerate_preimages(vec(1), Fraction(1, 2)))

    def test_dimension_mismatch(self):
        with self.assertRaises(RuntimeError) as cm:
            counter_for("Gr2R4").enumerate_preimages(vec(1), 4)

        self.assertEqual(errors.INVALID_DIMENSION_MISMATCH, cm.exception.args[0])

    def test_invalid_norm(self):
        with self.assertRaises(RuntimeError) as cm:
            counter_for("S2").enumerate_preimages(vec(1), "nine")

        self.assertEqual(errors.INVALID_RATIONAL, cm.exception.args[0])


class MinimalGeodesicsTest(unittest.TestCase):

    def test_grassmannian_has_two_orbits(self):
        descriptors = counter_for("Gr2R4").minimal_geodesics(vec("1/2", "1/2"))

        self.assertEqual(2, len(descriptors))
        self.assertEqual([(vec("-1/2", "-1/2"), 1, 1, (vec("-1/2", "-1/2"), vec("1/2", "1/2"))),
                          (vec("-1/2", "1/2"), 1, 1, (vec("-1/2", "1/2"), vec("1/2", "-1/2")))],
                         _orbit_summary(descriptors))
        self.assertNotEqual(descriptors[0].homotopy_label, descriptors[1].homotopy_label)

    def test_oriented_grassmannian_has_one_orbit(self):
        descriptors = counter_for("Gr2R4+").minimal_geodesics(vec("1/2", "1/2"))

        self.assertEqual([(vec("-1/2", "-1/2"), 1, 1, (vec("-1/2", "-1/2"), vec("1/2", "1/2")))],
                         _orbit_summary(descriptors))

    def test_far_target_is_reduced_first(self):
        descriptors = counter_for("S2").minimal_geodesics(vec("5/2"))

        self.assertEqual([(vec("1/2"), 0, 1, (vec("1/2"),))], _orbit_summary(descriptors))

    @parameterized.expand([(name,) for name in ALL_PRESETS])
    def test_constant_geodesic(self, name):
        counter = counter_for(name)
        zero = exact.zero_vector(counter.datum.rank)

        descriptors = counter.minimal_geodesics(zero)

        self.assertEqual([(zero, 0, 1, (zero,))], _orbit_summary(descriptors))


class ClassifyPointTest(unittest.TestCase):

    @parameterized.expand([
        ("S2", ("1",), geodesics.CUT_POINT, geodesics.FIRST_CONJUGATE, 1, Fraction(1), Fraction(1)),
        ("RP2", ("1/2",), geodesics.CUT_POINT, geodesics.BEFORE_FIRST_CONJUGATE, 0, Fraction(2), Fraction(1)),
        ("Gr2R4", ("1/2", "1/2"), geodesics.CUT_POINT, geodesics.FIRST_CONJUGATE, 1, Fraction(1), Fraction(1)),
        ("Gr2R4", ("1/4", "1/8"), geodesics.BEFORE_CUT, geodesics.BEFORE_FIRST_CONJUGATE, 0,
         Fraction(8, 3), Fraction(2)),
        ("Gr2R4+", ("3/2", "1/2"), geodesics.PAST_CUT, geodesics.PAST_FIRST_CONJUGATE, 2,
         Fraction(1, 2), Fraction(1, 2)),
    ])
    def test_classify(self, name, h, cut, conjugate, index, first_conjugate_time, cut_time):
        classification = counter_for(name).classify_point(vec(*h))

        self.assertEqual(cut, classification.cut)
        self.assertEqual(conjugate, classification.conjugate)
        self.assertEqual(index, classification.index)
        self.assertEqual(first_conjugate_time, classification.first_conjugate_time)
        self.assertEqual(cut_time, classification.cut_time)

    @parameterized.expand([(name,) for name in ALL_PRESETS])
    def test_origin(self, name):
        counter = counter_for(name)

        classification = counter.classify_point(exact.zero_vector(counter.datum.rank))

        self.assertEqual(geodesics.PointClassification(
            geodesics.REGULAR if counter.datum.is_torus() else geodesics.SINGULAR,
            geodesics.BEFORE_CUT, geodesics.BEFORE_FIRST_CONJUGATE, 0), classification)

    def test_regularity(self):
        counter = counter_for("Gr2R4")

        self.assertEqual(geodesics.SINGULAR, counter.classify_point(vec("1/2", "1/2")).regularity)
        self.assertEqual(geodesics.REGULAR, counter.classify_point(vec("1/4", "1/8")).regularity)

    def test_torus_has_no_conjugate_points(self):
        classification = counter_for("T2").classify_point(vec("3/4", "1/3"))

        self.assertIsNone(classification.first_conjugate_time)
        self.assertEqual(geodesics.PAST_CUT, classification.cut)
        self.assertEqual(Fraction(2, 3), classification.cut_time)

    @settings(max_examples=100, deadline=None)
    @given(st.sampled_from(ALL_PRESETS), st.data())
    def test_equivariance(self, name, data):
        counter = counter_for(name)
        h = data.draw(rational_vectors(counter.datum.rank))
        classification = counter.classify_point(h)

        for index in range(counter.w_group.order()):
            self.assertEqual(classification, counter.classify_point(counter.w_group.act(index, h)))

    @settings(max_examples=100, deadline=None)
    @given(st.sampled_from(ALL_PRESETS), st.data())
    def test_index_vanishes_before_first_conjugate_point(self, name, data):
        counter = counter_for(name)
        h = data.draw(rational_vectors(counter.datum.rank))
        first_conjugate_time = counter.first_conjugate_time(h)
        if first_conjugate_time is None:
            return
        conjugate_point = exact.scale(first_conjugate_time, h)

        self.assertEqual(geodesics.FIRST_CONJUGATE, counter.classify_point(conjugate_point).conjugate)
        for t in (Fraction(1, 7), Fraction(1, 2), Fraction(5, 6), Fraction(99, 100)):
            self.assertEqual(0, index_of_point(counter.datum, exact.scale(t, conjugate_point)))

    @settings(max_examples=100, deadline=None)
    @given(st.sampled_from(ALL_PRESETS), st.data())
    def test_cut_time_reaches_boundary(self, name, data):
        counter = counter_for(name)
        h = data.draw(rational_vectors(counter.datum.rank))
        cut_time = counter.cut_time(h)
        if cut_time is None:
            return

        self.assertEqual(geodesics.CUT_POINT, counter.classify_point(exact.scale(cut_time, h)).cut)
        self.assertEqual(geodesics.BEFORE_CUT, counter.classify_point(exact.scale(cut_time / 2, h)).cut)


class SimplyConnectedTest(unittest.TestCase):

    @parameterized.expand([
        ("S2", True, True, True),
        ("RP2", False, False, False),
        ("Gr2R4", False, False, False),
        ("Gr2R4+", True, True, True),
        ("SU2-group", True, True, True),
        ("T2", False, False, None),
    ])
    def test_report(self, name, gamma_equals_gamma_0, pi1_trivial, dirichlet_equals_alcove):
        report = counter_for(name).simply_connected_report()

        self.assertEqual(gamma_equals_gamma_0, report.gamma_equals_gamma_0)
        self.assertEqual(pi1_trivial, report.pi1_trivial)
        self.assertEqual(dirichlet_equals_alcove, report.dirichlet_equals_alcove)
        self.assertTrue(report.consistent())

    def test_samples_follow_config(self):
        config = mock.MagicMock()
        config.get_max_weyl_order.return_value = 100
        config.get_check_weyl_elements.return_value = True
        config.get_grid_denominator.return_value = 2
        config.get_grid_extent.return_value = Fraction(1)
        config.get_max_samples.return_value = 100

        report = GeodesicCounter(catalog.preset("Gr2R4+"), config).simply_connected_report()

        self.assertEqual(25, report.samples)
        self.assertTrue(report.dirichlet_equals_alcove)

    def test_weyl_group_cap_from_config(self):
        config = mock.MagicMock()
        config.get_max_weyl_order.return_value = 3
        config.get_check_weyl_elements.return_value = False

        with self.assertRaises(RuntimeError) as cm:
            GeodesicCounter(catalog.preset("Gr2R4"), config)

        self.assertEqual(errors.WEYL_GROUP_TOO_LARGE, cm.exception.args[0])

    def _assert_orbit_connected(self, name, data):
        counter = counter_for(name)
        self.assertEqual(lattice.fundamental_lattice(counter.datum), counter.gamma)
        h = data.draw(rational_vectors(counter.datum.rank))

        self.assertEqual(counter.parallel(h).element_indices, counter.centralizer(h).element_indices)
        self.assertEqual(1, counter.focal_orbit(h, h).component_count)

    @settings(max_examples=200, deadline=None)
    @given(st.data())
    def test_sphere_orbits_are_connected(self, data):
        self._assert_orbit_connected("S2", data)

    @settings(max_examples=200, deadline=None)
    @given(st.data())
    def test_oriented_grassmannian_orbits_are_connected(self, data):
        self._assert_orbit_connected("Gr2R4+", data)

    @settings(max_examples=200, deadline=None)
    @given(st.data())
    def test_group_orbits_are_connected(self, data):
        self._assert_orbit_connected("SU2-group", data)

    @settings(max_examples=100, deadline=None)
    @given(st.sampled_from(ALL_PRESETS), st.data())
    def test_centralizer_modulo_fundamental_lattice(self, name, data):
        counter = counter_for(name)

        self.assertTrue(counter.centralizer_matches_parallel(data.draw(rational_vectors(counter.datum.rank))))


class StructuralInvariantsTest(unittest.TestCase):

    @settings(max_examples=100, deadline=None)
    @given(st.sampled_from(ALL_PRESETS), st.data())
    def test_preimage_enumeration(self, name, data):
        counter = counter_for(name)
        h = data.draw(rational_vectors(counter.datum.rank, bound=2))
        max_norm_squared = exact.norm_squared(h, counter.datum.gram) + 2

        descriptors = counter.enumerate_preimages(h, max_norm_squared)

        found = exact.enumerate_lattice_points_in_ball(counter.gamma.basis, counter.datum.gram, h, max_norm_squared)
        points = {exact.add(h, counter.gamma.vector(coordinates)) for coordinates in found}
        seen = set()
        for descriptor in descriptors:
            intersection = set(descriptor.torus_intersection)
            self.assertFalse(seen & intersection)
            seen |= intersection
            for point in intersection:
                self.assertEqual(descriptor.dimension, index_of_point(counter.datum, point))
                self.assertEqual(descriptor.norm_squared, exact.norm_squared(point, counter.datum.gram))
            self.assertEqual(descriptor.representative, min(intersection))
            self.assertEqual(descriptor.component_count, len(set(descriptor.component_labels)))
            if name in SIMPLY_CONNECTED_PRESETS:
                self.assertEqual(1, descriptor.component_count)
        self.assertEqual(points, seen)

    @settings(max_examples=100, deadline=None)
    @given(st.sampled_from(ALL_PRESETS), st.data())
    def test_parallel_subgroup_is_normal(self, name, data):
        counter = counter_for(name)
        h = data.draw(rational_vectors(counter.datum.rank))
        centralizer = counter.centralizer(h)
        parallel = counter.parallel(h)

        self.assertTrue(set(parallel.element_indices) <= set(centralizer.element_indices))
        self.assertEqual(centralizer.order() // parallel.order(),
                         weyl.quotient_size(counter.w_group, centralizer, parallel))

    @parameterized.expand([(name,) for name in ALL_PRESETS])
    def test_unit_lattice_is_weyl_invariant(self, name):
        counter = counter_for(name)

        for element in counter.w_group.elements:
            for generator in counter.gamma.generators():
                self.assertTrue(counter.gamma.contains(element.act(generator)))


class FocalEquivalentsTest(unittest.TestCase):

    @parameterized.expand([
        ("S2", lattice.rational_grid(1, 20, Fraction(1))),
        ("Gr2R4+", lattice.rational_grid(2, 7, Fraction(3, 2))),
    ])
    def test_focal_equivalents_in_closed_alcove_are_parallel_orbit(self, name, samples):
        counter = counter_for(name)
        checked = 0

        for h in samples:
            if any(abs(root_value(counter.datum, index, h)) > 1 for index in counter.datum.positive_indices):
                continue
            checked += 1
            orbit = sorted({counter.w_group.act(index, h) for index in counter.parallel(h).element_indices})
            self.assertEqual(orbit, lattice.focal_equivalents(counter.gamma, h))
        self.assertGreater(checked, 0)

    @parameterized.expand([
        ("S2", [vec(1), vec("1/3")], 9),
        ("RP2", [vec("1/2")], 9),
        ("Gr2R4", [vec("1/2", "1/2"), vec("-1/2", 0)], 5),
        ("Gr2R4+", [vec("1/2", "1/2"), vec(1, 0)], 5),
    ])
    def test_moving_past_focal_equivalents_shortens(self, name, targets, max_norm_squared):
        counter = counter_for(name)

        for target in targets:
            points = set()
            for descriptor in counter.enumerate_preimages(target, max_norm_squared):
                points.update(descriptor.torus_intersection)
            for x, y in itertools.permutations(sorted(points), 2):
                if exact.norm_squared(x, counter.datum.gram) != exact.norm_squared(y, counter.datum.gram):
                    continue
                for epsilon in (Fraction(1, 10), Fraction(1, 3)):
                    self.assertTrue(lattice.shortening_check(counter.gamma, x, y, epsilon))
