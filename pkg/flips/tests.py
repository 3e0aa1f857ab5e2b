from django.test import SimpleTestCase

from complexes.complex import Complex, boundary_complex, cycle, is_standard_sphere, standard_sphere
from complexes.exceptions import StructureError
from complexes.structure import euler_characteristic, structure_report
from complexes.vectors import f_vector, g_vector
from flips.certificates import FlipCertificate, stacked_ball_from_certificate
from flips.exceptions import MoveError
from flips.moves import BistellarMove, apply_move, enumerate_moves, g_delta, is_valid_move
from flips.search import CERTIFICATE, random_stellated_sphere, stellated_reduction

TORUS = [
    [1, 3, 4], [1, 2, 4], [2, 4, 5], [2, 3, 5], [3, 5, 6], [3, 4, 6], [4, 6, 7],
    [4, 5, 7], [1, 5, 7], [1, 5, 6], [1, 2, 6], [2, 6, 7], [2, 3, 7], [1, 3, 7],
]
BIPYRAMID = [[1, 2, 4], [1, 3, 4], [2, 3, 4], [1, 2, 5], [1, 3, 5], [2, 3, 5]]


class MoveValidityTests(SimpleTestCase):
    def test_zero_move_on_a_facet(self):
        self.assertTrue(is_valid_move(standard_sphere(2), ["1", "2", "3"], ["5"]))

    def test_beta_already_a_face(self):
        self.assertFalse(is_valid_move(standard_sphere(2), ["1", "2"], ["3", "4"]))

    def test_zero_move_needs_a_fresh_vertex(self):
        self.assertFalse(is_valid_move(cycle(4), ["1", "2"], ["3"]))

    def test_overlapping_faces(self):
        self.assertFalse(is_valid_move(standard_sphere(2), ["1", "2"], ["2", "3"]))


class EnumerationTests(SimpleTestCase):
    def test_simplex_boundary_only_admits_zero_moves(self):
        moves = enumerate_moves(standard_sphere(2))
        self.assertEqual(len(moves), 4)
        self.assertTrue(all(m.index == 0 for m in moves))

    def test_bipyramid_has_vertex_removals_and_an_edge_flip(self):
        moves = enumerate_moves(Complex.from_facets(BIPYRAMID))
        self.assertIn(BistellarMove.of(["4"], ["1", "2", "3"]), moves)
        self.assertIn(BistellarMove.of(["1", "2"], ["4", "5"]), moves)

    def test_torus_has_no_vertex_removal(self):
        self.assertEqual(enumerate_moves(Complex.from_facets(TORUS), [2]), [])

    def test_enumeration_is_deterministic(self):
        X = Complex.from_facets(BIPYRAMID)
        self.assertEqual(enumerate_moves(X), enumerate_moves(X))


class ApplyMoveTests(SimpleTestCase):
    def test_zero_move_stacks_a_vertex(self):
        Y = apply_move(standard_sphere(2), BistellarMove.of(["1", "2", "3"], ["5"]))
        self.assertEqual(tuple(f_vector(Y)), (5, 9, 6))

    def test_invalid_move_raises(self):
        with self.assertRaises(MoveError):
            apply_move(standard_sphere(2), BistellarMove.of(["1", "2"], ["3", "4"]))

    def test_reverse_move_restores_the_complex(self):
        S = standard_sphere(3)
        for move in enumerate_moves(S):
            self.assertEqual(apply_move(apply_move(S, move), move.reverse()), S)

    def test_g_delta_table(self):
        self.assertEqual(g_delta(2, 0), [0, 1, 0, -1])
        self.assertEqual(g_delta(2, 1), [0, 0, 0, 0])
        self.assertEqual(g_delta(3, 1), [0, 0, 1, -1, 0])

    def test_random_moves_match_the_g_delta_table(self):
        for d in range(2, 6):
            for seed in range(10):
                X, certificate = random_stellated_sphere(d, d, 5, seed)
                current = certificate.start
                for move in certificate.moves:
                    after = apply_move(current, move)
                    change = [g_vector(after)[j] - g_vector(current)[j] for j in range(d + 2)]
                    self.assertEqual(change, g_delta(d, move.index))
                    self.assertEqual(euler_characteristic(after), euler_characteristic(current))
                    self.assertEqual(apply_move(after, move.reverse()), current)
                    current = after
                self.assertTrue(structure_report(current).closed)


class CertificateTests(SimpleTestCase):
    def test_random_stellated_sphere(self):
        X, certificate = random_stellated_sphere(2, 1, 3, seed=7)
        self.assertEqual(tuple(f_vector(X)), (7, 15, 10))
        self.assertEqual(g_vector(X)[1], 3)
        self.assertTrue(certificate.witnesses_stellated(1))
        self.assertEqual(certificate.max_index, 0)

    def test_same_seed_same_sphere(self):
        self.assertEqual(random_stellated_sphere(3, 2, 8, 11)[0], random_stellated_sphere(3, 2, 8, 11)[0])

    def test_index_bound_is_checked(self):
        with self.assertRaises(StructureError):
            random_stellated_sphere(2, 4, 1, 0)

    def test_replay_and_serialisation(self):
        _, certificate = random_stellated_sphere(3, 2, 5, 3)
        self.assertTrue(certificate.verify())
        self.assertEqual(FlipCertificate.from_dict(certificate.as_dict()), certificate)
        self.assertEqual(certificate.reversed().reversed(), certificate)

    def test_tampered_certificate_fails(self):
        _, certificate = random_stellated_sphere(2, 1, 2, 0)
        tampered = FlipCertificate(certificate.start, certificate.moves, standard_sphere(2))
        self.assertFalse(tampered.verify())

    def test_stacked_ball_bounds_the_sphere(self):
        X, certificate = random_stellated_sphere(2, 1, 4, 5)
        ball, order = stacked_ball_from_certificate(certificate)
        self.assertEqual(ball.dim, 3)
        self.assertEqual(len(order), 5)
        self.assertEqual(boundary_complex(ball), X)


class ReductionTests(SimpleTestCase):
    def test_cycle_reduces_by_vertex_removals(self):
        result = stellated_reduction(cycle(9), 1)
        self.assertEqual(result.verdict, CERTIFICATE)
        self.assertEqual(len(result.certificate), 6)
        self.assertTrue(result.certificate.verify())
        self.assertTrue(is_standard_sphere(result.certificate.end))
        self.assertTrue(result.certificate.reversed().witnesses_stellated(1))

    def test_standard_sphere_needs_no_moves(self):
        result = stellated_reduction(standard_sphere(3), 1)
        self.assertEqual(result.verdict, CERTIFICATE)
        self.assertEqual(len(result.certificate), 0)

    def test_generated_stellated_sphere_is_recognised(self):
        X, _ = random_stellated_sphere(3, 2, 6, 1)
        result = stellated_reduction(X, 2)
        self.assertEqual(result.verdict, CERTIFICATE)
        self.assertEqual(result.certificate.end.num_vertices, 5)

    def test_torus_is_rejected_early(self):
        with self.assertRaises(StructureError):
            stellated_reduction(Complex.from_facets(TORUS), 1)
