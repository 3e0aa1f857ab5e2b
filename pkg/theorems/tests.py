from fractions import Fraction
from pathlib import Path
from unittest import mock

from django.conf import settings
from django.test import SimpleTestCase, override_settings

from complexes.complex import Complex, standard_ball, standard_sphere
from complexes.exceptions import StructureError
from corpus.files import parse
from flips.certificates import stacked_ball_from_certificate
from flips.search import random_stellated_sphere
from homology.fields import F2, Q
from theorems.checks import Claim, binomial_identity, link_g_sums, p24_screen, verify
from theorems.exceptions import HypothesisError, UnknownTheoremError
from theorems.membership import CLASS_K, CLASS_W, YES, class_membership
from theorems.stacked import (
    FOUND,
    NO,
    is_shelling,
    k_stacked_ball_check,
    k_stacked_sphere_check,
    shelling_search,
)

TORUS = [
    [1, 3, 4], [1, 2, 4], [2, 4, 5], [2, 3, 5], [3, 5, 6], [3, 4, 6], [4, 6, 7],
    [4, 5, 7], [1, 5, 7], [1, 5, 6], [1, 2, 6], [2, 6, 7], [2, 3, 7], [1, 3, 7],
]
RP2 = [
    [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
    [2, 3, 5], [3, 4, 6], [2, 4, 5], [3, 5, 6], [2, 4, 6],
]
TWO_TETRAHEDRA = [[1, 2, 3, 4], [1, 2, 3, 5]]
SQUARE_CONE = [[0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 1]]


class StackedBallTests(SimpleTestCase):
    def test_simplex_is_zero_stacked(self):
        self.assertTrue(k_stacked_ball_check(standard_ball(4), 0))
        self.assertTrue(k_stacked_ball_check(standard_ball(4), 1))

    def test_two_tetrahedra_on_a_triangle(self):
        ball = Complex.from_facets(TWO_TETRAHEDRA)
        self.assertTrue(k_stacked_ball_check(ball, 1))
        self.assertFalse(k_stacked_ball_check(ball, 0))

    def test_cone_over_a_square_has_an_interior_vertex(self):
        cone = Complex.from_facets(SQUARE_CONE)
        self.assertFalse(k_stacked_ball_check(cone, 1))
        self.assertTrue(k_stacked_ball_check(cone, 2))

    def test_closed_complex_is_not_a_ball(self):
        with self.assertRaises(StructureError):
            k_stacked_ball_check(standard_sphere(2), 1)

    def test_sphere_bounding_a_grown_ball(self):
        S, certificate = random_stellated_sphere(2, 1, 4, 5)
        ball, _ = stacked_ball_from_certificate(certificate)
        self.assertTrue(k_stacked_sphere_check(S, 1, ball))
        self.assertFalse(k_stacked_sphere_check(standard_sphere(2), 1, ball))
        with self.assertRaises(StructureError):
            k_stacked_sphere_check(S, 1, standard_ball(3))

    def test_relabelled_witness(self):
        ball = Complex.from_facets([["a", "b", "c", "d"]])
        self.assertTrue(k_stacked_sphere_check(standard_sphere(2), 1, ball, {"a": "1", "b": "2", "c": "3", "d": "4"}))


class ShellingTests(SimpleTestCase):
    def test_two_tetrahedra_shell(self):
        ball = Complex.from_facets(TWO_TETRAHEDRA)
        result = shelling_search(ball)
        self.assertEqual(result.verdict, FOUND)
        self.assertTrue(is_shelling([ball.mask_of(f) for f in result.order]))

    def test_triangles_meeting_in_a_point(self):
        bowtie = Complex.from_facets([[1, 2, 3], [3, 4, 5]])
        self.assertEqual(shelling_search(bowtie).verdict, NO)


class MembershipTests(SimpleTestCase):
    def test_torus_links_are_stellated_and_stacked(self):
        torus = Complex.from_facets(TORUS)
        self.assertEqual(class_membership(torus, 1, CLASS_W).verdict, YES)
        verdict = class_membership(torus, 1, CLASS_K)
        self.assertEqual(verdict.verdict, YES)
        self.assertEqual(len(verdict.witnesses), 7)

    def test_needs_a_closed_connected_complex(self):
        with self.assertRaises(HypothesisError):
            class_membership(standard_ball(4), 1)

    def test_unknown_class(self):
        with self.assertRaises(HypothesisError):
            class_membership(Complex.from_facets(TORUS), 1, "z")

    def test_suspended_torus_has_non_sphere_links(self):
        suspension = Complex.from_facets(
            [[str(v) for v in f] + ["n"] for f in TORUS] + [[str(v) for v in f] + ["s"] for f in TORUS]
        )
        for klass in (CLASS_W, CLASS_K):
            verdict = class_membership(suspension, 1, klass, budget=200)
            self.assertEqual(verdict.verdict, NO)
            self.assertEqual(set(verdict.non_spheres), {"n", "s"})
            self.assertEqual(set(verdict.as_dict()["non_sphere_links"]), {"n", "s"})


class ClaimTests(SimpleTestCase):
    def test_relations(self):
        self.assertTrue(Claim("x", 1, 1, "=").holds)
        self.assertTrue(Claim("x", 1, 2, "<=").holds)
        self.assertFalse(Claim("x", 1, 2, ">=").holds)

    def test_unknown_theorem(self):
        with self.assertRaises(UnknownTheoremError):
            verify(None, "P99")

    def test_missing_parameters(self):
        with self.assertRaises(HypothesisError):
            verify(None, "P24", Q, {"k": 2})


class ArithmeticCheckTests(SimpleTestCase):
    def test_binomial_identity(self):
        lhs, rhs = binomial_identity(2, 1, 1)
        self.assertEqual(lhs, rhs)
        self.assertTrue(verify(None, "EQ12", Q, {"grid": 4}).holds)

    def test_p24_screen(self):
        self.assertEqual(p24_screen(2, 6, 13), (Fraction(5, 8), False, False))
        self.assertEqual(p24_screen(2, 6, 14), (1, True, True))

    def test_p24_arithmetic_mode(self):
        self.assertTrue(verify(None, "P24", Q, {"k": 2, "dim": 6, "vertices": 14}).holds)
        rejected = verify(None, "P24", Q, {"k": 2, "dim": 6, "vertices": 13})
        self.assertTrue(rejected.violated)

    def test_p24_excludes_the_boundary_of_a_simplex(self):
        check = verify(standard_sphere(6), "P24", Q, {"k": 2})
        self.assertFalse(check.hypotheses_satisfied)
        self.assertFalse(check.violated)
        self.assertFalse(check.hypotheses["not the standard sphere"]["value"])


@override_settings(TIGHTNESS_CROSS_CHECK=False)
class ComplexCheckTests(SimpleTestCase):
    def setUp(self):
        self.torus = Complex.from_facets(TORUS)
        self.rp2 = Complex.from_facets(RP2)

    def test_link_g_identity(self):
        self.assertEqual(link_g_sums(self.torus), [7, 21, -21])
        self.assertTrue(verify(self.torus, "L4").holds)
        self.assertTrue(verify(self.rp2, "L4").holds)

    def test_mu_duality_without_orientability(self):
        self.assertTrue(verify(self.rp2, "T2.3", Q).holds)

    def test_neighbourly_surface_tightness(self):
        self.assertTrue(verify(self.torus, "L10", Q).holds)
        self.assertTrue(verify(self.rp2, "L10", F2).holds)
        check = verify(self.rp2, "L10", Q)
        self.assertFalse(check.hypotheses_satisfied)
        self.assertFalse(check.violated)

    def test_tightness_consequences(self):
        self.assertTrue(verify(self.torus, "P17", Q).holds)
        self.assertTrue(verify(self.rp2, "P18", Q).holds)
        self.assertTrue(verify(self.rp2, "P16", Q).holds)

    def test_euler_identity(self):
        self.assertTrue(verify(self.torus, "EULER-K", Q, {"k": 1}).holds)
        self.assertTrue(verify(self.rp2, "EULER-K", Q, {"k": 1}).holds)

    def test_w_inside_k(self):
        self.assertTrue(verify(self.torus, "C1.5", Q, {"k": 1}).holds)

    def test_caller_claims_are_recorded(self):
        check = verify(self.torus, "T2.3", Q, {"claims": {"manifold": "T2"}})
        self.assertEqual(check.hypotheses["manifold (T2)"]["source"], "caller-asserted")


class SphereCheckTests(SimpleTestCase):
    def test_sigma_g_relations_on_stellated_spheres(self):
        for d, k, moves in ((2, 1, 3), (3, 1, 3), (3, 2, 3), (4, 1, 2)):
            for seed in range(2):
                S, certificate = random_stellated_sphere(d, k, moves, seed)
                check = verify(S, "P19", Q, {"k": k, "certificate": certificate})
                self.assertTrue(check.hypotheses_satisfied)
                self.assertTrue(check.holds, check.failures())

    def test_sigma_g_relations_for_two_stacked_spheres(self):
        for d in (4, 5):
            for seed in range(5):
                S, certificate = random_stellated_sphere(d, 2, 3, seed)
                check = verify(S, "P19", Q, {"k": 2, "certificate": certificate})
                self.assertTrue(check.hypotheses_satisfied, (d, seed))
                self.assertTrue(check.holds, check.failures())

    def test_bipyramid_sigma_zero(self):
        S, certificate = random_stellated_sphere(2, 1, 1, 0)
        check = verify(S, "P19", Q, {"k": 1, "certificate": certificate})
        self.assertEqual(check.claims[0].lhs, Fraction(-9, 10))

    def test_sigma_duality(self):
        S, _ = random_stellated_sphere(3, 2, 4, 2)
        self.assertTrue(verify(S, "L2.2", Q).holds)
        self.assertTrue(verify(standard_sphere(2), "L2.2", F2).holds)

    def test_g_changes_along_a_certificate(self):
        _, certificate = random_stellated_sphere(3, 3, 6, 4)
        self.assertTrue(verify(None, "L3", Q, {"certificate": certificate}).holds)


@override_settings(TIGHTNESS_CROSS_CHECK=False)
class TightnessCriterionTests(SimpleTestCase):
    def setUp(self):
        self.k3 = parse(Path(settings.CORPUS_DIR) / "k3_9.json")

    def test_tight_member_meets_the_bound(self):
        check = verify(self.k3, "P25", F2, {"k": 1})
        self.assertTrue(check.holds)
        self.assertEqual(check.claims[1].relation, "=")

    def test_non_tight_member_stays_below_the_bound(self):
        with mock.patch("theorems.checks.tight_mu", return_value=mock.Mock(tight=False)), \
                mock.patch("theorems.checks.betti", return_value=(1, 0, 0, 1)):
            check = verify(self.k3, "P25", F2, {"k": 1})
        self.assertTrue(check.holds, check.failures())
        self.assertEqual(check.claims[1].relation, "<")
        self.assertEqual((check.claims[1].lhs, check.claims[1].rhs), (0, 1))
