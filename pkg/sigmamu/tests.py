import random
from fractions import Fraction
from itertools import combinations

from django.test import SimpleTestCase, override_settings

from complexes.complex import Complex, cycle, standard_sphere
from complexes.exceptions import CapacityError
from homology.exceptions import PreconditionError
from homology.fields import F2, Q
from sigmamu.mu import mu_via_relative, mu_vector
from sigmamu.sigma import sigma_vector

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


class SigmaTests(SimpleTestCase):
    def test_standard_spheres(self):
        self.assertEqual(tuple(sigma_vector(standard_sphere(2), Q)), (-1, 0, 1))
        for d in range(1, 5):
            expected = (-1,) + (0,) * (d - 1) + (1,)
            self.assertEqual(tuple(sigma_vector(standard_sphere(d), F2)), expected)

    def test_cycles(self):
        self.assertEqual(sigma_vector(cycle(4), Q)[0], Fraction(-2, 3))
        self.assertEqual(sigma_vector(cycle(6), Q)[0], 1)

    def test_bipyramid(self):
        sigma = sigma_vector(Complex.from_facets(BIPYRAMID), Q)
        self.assertEqual(tuple(sigma), (Fraction(-9, 10), Fraction(1, 10), 1))

    def test_empty_complex(self):
        self.assertEqual(tuple(sigma_vector(Complex.empty(), Q)), (-1,))

    def test_values_are_exact_fractions(self):
        self.assertTrue(all(isinstance(v, Fraction) for v in sigma_vector(cycle(5), Q)))

    def test_worker_count_does_not_change_the_result(self):
        torus = Complex.from_facets(TORUS)
        self.assertEqual(sigma_vector(torus, Q, workers=1), sigma_vector(torus, Q, workers=2))


class CapacityTests(SimpleTestCase):
    def test_default_cap(self):
        with self.assertRaises(CapacityError):
            sigma_vector(cycle(17), Q)

    @override_settings(SIGMA_EXHAUSTIVE_CAP=5)
    def test_cap_override(self):
        with self.assertRaises(CapacityError):
            sigma_vector(cycle(6), Q)
        with self.assertLogs("sigmamu.sigma", level="WARNING"):
            self.assertEqual(sigma_vector(cycle(6), Q, cap=6)[0], 1)

    def test_cap_above_the_hard_limit(self):
        with self.assertRaises(CapacityError):
            sigma_vector(cycle(4), Q, cap=40)


class MuTests(SimpleTestCase):
    def test_standard_sphere(self):
        self.assertEqual(tuple(mu_vector(standard_sphere(2), Q)), (1, 0, 1))
        self.assertEqual(tuple(mu_vector(standard_sphere(1), Q)), (1, 1))

    def test_torus_by_both_formulas(self):
        torus = Complex.from_facets(TORUS)
        self.assertEqual(tuple(mu_vector(torus, Q)), (1, 2, 1))
        self.assertEqual(tuple(mu_via_relative(torus, Q)), (1, 2, 1))

    def test_projective_plane(self):
        rp2 = Complex.from_facets(RP2)
        self.assertEqual(tuple(mu_vector(rp2, Q)), (1, 1, 1))
        self.assertEqual(tuple(mu_vector(rp2, F2)), (1, 1, 1))
        self.assertEqual(mu_via_relative(rp2, F2), mu_vector(rp2, F2))

    def test_relative_formula_needs_two_neighbourliness(self):
        with self.assertRaises(PreconditionError):
            mu_via_relative(Complex.from_facets(BIPYRAMID), Q)

    def test_mu_dominates_betti_on_a_stacked_sphere(self):
        mu = mu_vector(Complex.from_facets(BIPYRAMID), Q)
        self.assertEqual(mu[0], 1)
        self.assertEqual(mu[2], 1)
        self.assertGreaterEqual(mu[1], 0)


class RandomTwoNeighbourlyTests(SimpleTestCase):
    def test_both_mu_formulas_agree(self):
        for seed in range(20):
            X = two_neighbourly_complex(seed)
            for field in (Q, F2):
                self.assertEqual(mu_via_relative(X, field), mu_vector(X, field), (seed, str(field)))
