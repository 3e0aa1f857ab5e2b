import random

from django.test import SimpleTestCase

from complexes.complex import Complex, cycle, induced_subcomplex, standard_ball, standard_sphere
from complexes.structure import euler_characteristic
from homology.betti import (
    betti,
    inclusion_injective,
    injectivity_profile,
    orientable,
    reduced_betti_of_subcomplex,
    relative_betti,
)
from homology.exceptions import FieldError, PreconditionError
from homology.fields import F2, F3, PrimeField, Q, Rationals, parse_field

TORUS = [
    [1, 3, 4], [1, 2, 4], [2, 4, 5], [2, 3, 5], [3, 5, 6], [3, 4, 6], [4, 6, 7],
    [4, 5, 7], [1, 5, 7], [1, 5, 6], [1, 2, 6], [2, 6, 7], [2, 3, 7], [1, 3, 7],
]
RP2 = [
    [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
    [2, 3, 5], [3, 4, 6], [2, 4, 5], [3, 5, 6], [2, 4, 6],
]


class FieldTests(SimpleTestCase):
    def test_parse_field(self):
        self.assertEqual(parse_field("q"), Rationals())
        self.assertEqual(parse_field("F2"), F2)
        self.assertEqual(parse_field("z3"), PrimeField(3))

    def test_non_prime_and_unknown_fields(self):
        for text in ("f4", "f1", "reals", "f"):
            with self.assertRaises(FieldError):
                parse_field(text)

    def test_rational_rank(self):
        columns = [{0: 1, 1: 1}, {0: 2, 1: 2}, {1: -3}]
        self.assertEqual(Q.rank(columns), 2)
        self.assertEqual(Q.rank(columns, drop_rows=0b10), 1)
        self.assertEqual(Q.rank([]), 0)

    def test_prime_above_the_int64_range(self):
        big = PrimeField(4294967311)
        self.assertEqual(big.rank([big.encode({0: 3, 1: -5}), big.encode({0: -6, 1: 10})]), 1)
        self.assertEqual(betti(Complex.from_facets(TORUS), big).betti, (1, 2, 1))
        self.assertEqual(betti(Complex.from_facets(RP2), big).betti, (1, 0, 0))


class BettiTests(SimpleTestCase):
    def setUp(self):
        self.torus = Complex.from_facets(TORUS)
        self.rp2 = Complex.from_facets(RP2)

    def test_standard_sphere(self):
        table = betti(standard_sphere(2), Q)
        self.assertEqual(table.betti, (1, 0, 1))
        self.assertEqual(table.reduced, (0, 0, 1))

    def test_torus(self):
        self.assertEqual(betti(self.torus, Q).betti, (1, 2, 1))
        self.assertEqual(betti(self.torus, F2).betti, (1, 2, 1))

    def test_projective_plane_depends_on_the_field(self):
        self.assertEqual(betti(self.rp2, Q).betti, (1, 0, 0))
        self.assertEqual(betti(self.rp2, F2).betti, (1, 1, 1))
        self.assertEqual(betti(self.rp2, F3).betti, (1, 0, 0))

    def test_prime_field_betti_dominate_rational_ones(self):
        over_q, over_f2 = betti(self.rp2, Q), betti(self.rp2, F2)
        for i in range(3):
            self.assertGreaterEqual(over_f2[i], over_q[i])

    def test_euler_poincare(self):
        for X in (self.torus, self.rp2, standard_sphere(3)):
            for field in (Q, F2, F3):
                table = betti(X, field)
                alternating = sum((-1) ** i * b for i, b in enumerate(table.betti))
                self.assertEqual(alternating, euler_characteristic(X))

    def test_empty_complex_convention(self):
        table = betti(Complex.empty(), Q)
        self.assertEqual(table.betti, (0,))
        self.assertEqual(table.reduced, (-1,))
        self.assertEqual(reduced_betti_of_subcomplex(self.torus, [], Q), [-1, 0, 0])

    def test_reduced_betti_of_a_subcomplex(self):
        link_vertices = ["2", "3", "4", "5", "6", "7"]
        self.assertEqual(reduced_betti_of_subcomplex(self.torus, link_vertices, Q)[0], 0)


class RelativeBettiTests(SimpleTestCase):
    def test_sphere_relative_to_a_disk(self):
        self.assertEqual(relative_betti(standard_sphere(2), ["1", "2", "3"], Q), [0, 0, 1])

    def test_relative_to_the_empty_set(self):
        torus = Complex.from_facets(TORUS)
        self.assertEqual(relative_betti(torus, [], Q), [1, 2, 1])

    def test_zeroth_relative_betti_vanishes_for_two_neighbourly_pairs(self):
        torus = Complex.from_facets(TORUS)
        self.assertEqual(relative_betti(torus, ["1"], Q)[0], 0)


class InjectivityTests(SimpleTestCase):
    def test_two_opposite_points_of_a_square(self):
        self.assertFalse(inclusion_injective(cycle(4), ["1", "3"], 0, Q))
        self.assertFalse(inclusion_injective(cycle(4), ["1", "3"], 0, F2))
        self.assertTrue(inclusion_injective(cycle(4), ["1", "2"], 0, Q))

    def test_simplex_boundary_is_injective_everywhere(self):
        self.assertEqual(injectivity_profile(standard_sphere(2), Q), {})

    def test_projective_plane(self):
        rp2 = Complex.from_facets(RP2)
        self.assertEqual(injectivity_profile(rp2, F2), {})
        self.assertIn(1, injectivity_profile(rp2, Q))


class OrientabilityTests(SimpleTestCase):
    def test_orientable(self):
        self.assertTrue(orientable(Complex.from_facets(TORUS), Q))
        self.assertFalse(orientable(Complex.from_facets(RP2), Q))
        self.assertTrue(orientable(Complex.from_facets(RP2), F2))
        self.assertTrue(orientable(standard_sphere(3), F3))

    def test_requires_a_closed_complex(self):
        with self.assertRaises(PreconditionError):
            orientable(standard_ball(3), Q)


class PairSequenceTests(SimpleTestCase):
    """H(X[A]) -> H(X) -> H(X, X[A]) is exact, checked through ranks on random pairs."""

    def random_pair(self, seed):
        rng = random.Random(seed)
        labels = [str(i) for i in range(1, rng.randint(4, 8) + 1)]
        size = rng.randint(2, min(4, len(labels)))
        X = Complex.from_facets([rng.sample(labels, size) for _ in range(rng.randint(2, 7))])
        A = rng.sample(X.vertices, rng.randint(1, X.num_vertices))
        return X, A

    def test_euler_characteristic_splits_over_the_pair(self):
        for seed in range(20):
            X, A = self.random_pair(seed)
            for field in (Q, F2):
                whole, part = betti(X, field), betti(induced_subcomplex(X, A), field)
                pair = relative_betti(X, A, field)
                alternating = sum((-1) ** i * (whole[i] - part[i] - pair[i]) for i in range(X.dim + 1))
                self.assertEqual(alternating, 0, seed)

    def test_each_degree_is_squeezed_by_its_neighbours(self):
        for seed in range(20):
            X, A = self.random_pair(seed)
            whole, part = betti(X, Q), betti(induced_subcomplex(X, A), Q)
            pair = relative_betti(X, A, Q)
            for i in range(X.dim + 1):
                self.assertLessEqual(whole[i], part[i] + pair[i], seed)
                self.assertLessEqual(pair[i], whole[i] + part[i - 1], seed)
