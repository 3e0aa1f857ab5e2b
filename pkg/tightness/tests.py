import random
from itertools import combinations

from django.test import SimpleTestCase, override_settings

from complexes.complex import Complex, cycle, standard_sphere
from homology.fields import F2, Q
from tightness.exceptions import HypothesisError
from tightness.service import (
    SKIPPED,
    TightnessService,
    morse_report,
    proper_moves_blocked,
    tight_direct,
    tight_mu,
)

TORUS = [
    [1, 3, 4], [1, 2, 4], [2, 4, 5], [2, 3, 5], [3, 5, 6], [3, 4, 6], [4, 6, 7],
    [4, 5, 7], [1, 5, 7], [1, 5, 6], [1, 2, 6], [2, 6, 7], [2, 3, 7], [1, 3, 7],
]
RP2 = [
    [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
    [2, 3, 5], [3, 4, 6], [2, 4, 5], [3, 5, 6], [2, 4, 6],
]
BIPYRAMID = [[1, 2, 4], [1, 3, 4], [2, 3, 4], [1, 2, 5], [1, 3, 5], [2, 3, 5]]


def two_neighbourly_complex(seed):
    """The complete graph on 5 to 7 vertices plus none, all or a random share of the triangles."""
    rng = random.Random(seed)
    labels = list(range(1, 5 + seed % 3 + 1))
    edges = [list(e) for e in combinations(labels, 2)]
    triangles = [list(t) for t in combinations(labels, 3)]
    if seed % 4 == 0:
        chosen = []
    elif seed % 4 == 1:
        chosen = triangles
    else:
        chosen = rng.sample(triangles, rng.randint(1, len(triangles) - 1))
    return Complex.from_facets(edges + chosen)


@override_settings(TIGHTNESS_CROSS_CHECK=False)
class TightnessTests(SimpleTestCase):
    def setUp(self):
        self.torus = Complex.from_facets(TORUS)
        self.rp2 = Complex.from_facets(RP2)

    def test_standard_spheres_are_tight(self):
        for d in range(1, 4):
            for field in (Q, F2):
                self.assertTrue(tight_direct(standard_sphere(d), field).tight)
                self.assertTrue(tight_mu(standard_sphere(d), field).tight)

    def test_zero_sphere_is_disconnected(self):
        S0 = standard_sphere(0)
        self.assertFalse(tight_direct(S0, Q).tight)
        self.assertEqual(tight_direct(S0, Q).reason, "not connected")
        self.assertFalse(tight_mu(S0, Q).tight)

    def test_torus(self):
        self.assertTrue(tight_direct(self.torus, Q).tight)
        report = tight_mu(self.torus, Q)
        self.assertTrue(report.tight)
        self.assertEqual(tuple(report.mu), (1, 2, 1))
        self.assertEqual(report.direct_result, SKIPPED)

    def test_projective_plane_over_two_fields(self):
        self.assertTrue(tight_direct(self.rp2, F2).tight)
        self.assertTrue(tight_mu(self.rp2, F2).tight)
        self.assertFalse(tight_mu(self.rp2, Q).tight)
        direct = tight_direct(self.rp2, Q)
        self.assertFalse(direct.tight)
        self.assertEqual(direct.witness, (("1", "2", "4"), 1))

    def test_square_fails_in_degree_zero(self):
        direct = tight_direct(cycle(4), Q)
        self.assertEqual(direct.witness, (("1", "3"), 0))
        self.assertFalse(tight_mu(cycle(4), Q).tight)

    def test_parallel_direct_check_keeps_the_first_witness(self):
        self.assertEqual(tight_direct(self.rp2, Q, workers=2).witness, (("1", "2", "4"), 1))

    @override_settings(TIGHTNESS_CROSS_CHECK=True, TIGHTNESS_CROSS_CHECK_CAP=12)
    def test_cross_check_attaches_the_direct_result(self):
        report = tight_mu(self.rp2, Q)
        self.assertFalse(report.direct_result.tight)
        self.assertEqual(report.failing_witness, (("1", "2", "4"), 1))

    def test_service(self):
        self.assertTrue(TightnessService(self.torus, Q).call("direct").tight)
        self.assertTrue(TightnessService(self.torus, Q).call("mu").tight)
        with self.assertRaises(HypothesisError):
            TightnessService(self.torus, Q).call("guess")


class MorseReportTests(SimpleTestCase):
    def test_torus(self):
        report = morse_report(Complex.from_facets(TORUS), Q, manifold=True)
        self.assertTrue(report.holds)
        self.assertEqual(report.witnesses, {})
        self.assertTrue(report.part("e"))
        self.assertEqual(report.as_dict()["manifold"], "caller-asserted")

    def test_duality_rows_need_an_asserted_manifold(self):
        report = morse_report(Complex.from_facets(TORUS), Q)
        self.assertTrue(report.holds)
        self.assertEqual(report.part("e"), [])
        self.assertEqual(report.as_dict()["manifold"], "not asserted")

    def test_projective_plane_over_q(self):
        report = morse_report(Complex.from_facets(RP2), Q)
        self.assertTrue(report.holds)
        self.assertIn(1, report.witnesses)
        mu_row = [row for row in report.part("b") if row.degree == 2][0]
        self.assertEqual((mu_row.lhs, mu_row.rhs), (1, 0))
        self.assertEqual(report.part("e"), [])

    def test_needs_two_neighbourliness(self):
        with self.assertRaises(HypothesisError):
            morse_report(Complex.from_facets(BIPYRAMID), Q)


class ProperMoveTests(SimpleTestCase):
    def test_tight_complexes_block_proper_moves(self):
        self.assertTrue(proper_moves_blocked(Complex.from_facets(TORUS)))
        self.assertTrue(proper_moves_blocked(Complex.from_facets(RP2)))
        self.assertTrue(proper_moves_blocked(standard_sphere(3)))

    def test_stacked_sphere_allows_them(self):
        self.assertFalse(proper_moves_blocked(Complex.from_facets(BIPYRAMID)))


@override_settings(TIGHTNESS_CROSS_CHECK=False)
class RandomTwoNeighbourlyTests(SimpleTestCase):
    def test_direct_and_mu_methods_agree(self):
        tight = 0
        for seed in range(20):
            X = two_neighbourly_complex(seed)
            for field in (Q, F2):
                direct = tight_direct(X, field).tight
                self.assertEqual(direct, tight_mu(X, field, cross_check=False).tight, (seed, str(field)))
                tight += direct
        self.assertGreater(tight, 0)
