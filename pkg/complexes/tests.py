import random
from itertools import combinations

from django.test import SimpleTestCase

from complexes.complex import (
    Complex,
    boundary_complex,
    closure,
    cycle,
    induced_subcomplex,
    is_standard_sphere,
    join,
    relabel,
    skeleton,
    standard_ball,
    standard_sphere,
    star,
    vertex_link,
)
from complexes.exceptions import (
    CapacityError,
    DisjointnessError,
    EmptyComplexError,
    MalformedFaceError,
    MalformedVectorError,
    StructureError,
    UnknownVertexError,
)
from complexes.structure import (
    dual_graph,
    is_connected,
    is_neighbourly,
    neighbourliness,
    structure_report,
)
from complexes.vectors import f_from_g, f_vector, g_from_f, g_vector

TORUS = [
    [1, 3, 4], [1, 2, 4], [2, 4, 5], [2, 3, 5], [3, 5, 6], [3, 4, 6], [4, 6, 7],
    [4, 5, 7], [1, 5, 7], [1, 5, 6], [1, 2, 6], [2, 6, 7], [2, 3, 7], [1, 3, 7],
]


class ComplexConstructionTests(SimpleTestCase):
    def test_facets_are_normalised_to_maximal_faces(self):
        X = Complex.from_facets([[1, 2, 3], [1, 2], [3]])
        self.assertEqual(X.facet_labels(), [("1", "2", "3")])

    def test_repeated_vertex_is_rejected(self):
        with self.assertRaises(MalformedFaceError):
            Complex.from_facets([[1, 1, 2]])

    def test_no_facets_is_rejected(self):
        with self.assertRaises(EmptyComplexError):
            Complex.from_facets([])

    def test_too_many_vertices(self):
        with self.assertRaises(CapacityError):
            Complex.from_facets([[i, i + 1] for i in range(65)])

    def test_labels_sort_naturally(self):
        X = Complex.from_facets([["10", "2", "1"]])
        self.assertEqual(X.vertices, ("1", "2", "10"))

    def test_unknown_vertex(self):
        with self.assertRaises(UnknownVertexError):
            standard_sphere(2).index_of("9")

    def test_standard_sphere_and_ball(self):
        S = standard_sphere(2)
        self.assertEqual(tuple(f_vector(S)), (4, 6, 4))
        self.assertTrue(is_standard_sphere(S))
        self.assertEqual(boundary_complex(standard_ball(4)), S)
        self.assertEqual(standard_ball(3), closure(["1", "2", "3"]))

    def test_cycle(self):
        self.assertEqual(tuple(f_vector(cycle(9))), (9, 9))
        with self.assertRaises(StructureError):
            cycle(2)


class ComplexOperationTests(SimpleTestCase):
    def setUp(self):
        self.torus = Complex.from_facets(TORUS)

    def test_vertex_link_of_torus_is_a_hexagon(self):
        link = vertex_link(self.torus, "1")
        self.assertEqual(tuple(f_vector(link)), (6, 6))
        self.assertTrue(structure_report(link).closed)

    def test_star_contains_the_six_triangles_at_a_vertex(self):
        self.assertEqual(len(star(self.torus, self.torus.mask_of(["1"])).facets), 6)

    def test_induced_subcomplex_on_a_triangle(self):
        Y = induced_subcomplex(self.torus, ["1", "2", "4"])
        self.assertEqual(Y.facet_labels(), [("1", "2", "4")])
        self.assertTrue(induced_subcomplex(self.torus, []).is_empty())

    def test_join_of_two_zero_spheres_is_a_square(self):
        S0 = standard_sphere(0)
        other = relabel(S0, {"1": "a", "2": "b"})
        square = join(S0, other)
        self.assertEqual(tuple(f_vector(square)), (4, 4))
        self.assertTrue(structure_report(square).closed)

    def test_join_needs_disjoint_vertices(self):
        with self.assertRaises(DisjointnessError):
            join(standard_sphere(1), standard_sphere(1))

    def test_join_with_the_empty_complex(self):
        S = standard_sphere(1)
        self.assertEqual(join(S, Complex.empty()), S)

    def test_skeleton(self):
        self.assertEqual(tuple(f_vector(skeleton(self.torus, 1))), (7, 21))

    def test_boundary_needs_a_weak_pseudomanifold(self):
        three_pages = Complex.from_facets([[1, 2, 3], [1, 2, 4], [1, 2, 5]])
        with self.assertRaises(StructureError):
            boundary_complex(three_pages)


class StructureTests(SimpleTestCase):
    def test_torus_report(self):
        report = structure_report(Complex.from_facets(TORUS))
        self.assertTrue(report.pure)
        self.assertTrue(report.pseudomanifold)
        self.assertTrue(report.closed)
        self.assertTrue(report.connected)
        self.assertEqual(report.neighbourliness, 2)
        self.assertEqual(report.euler_characteristic, 0)

    def test_dual_graph_of_torus(self):
        graph = dual_graph(Complex.from_facets(TORUS))
        self.assertEqual(graph.number_of_nodes(), 14)
        self.assertEqual(graph.number_of_edges(), 21)
        self.assertTrue(graph.graph["connected"])

    def test_two_disjoint_triangles(self):
        X = Complex.from_facets([[1, 2, 3], [4, 5, 6]])
        self.assertFalse(is_connected(X))
        self.assertFalse(structure_report(X).pseudomanifold)

    def test_neighbourliness_of_the_simplex_boundary(self):
        S = standard_sphere(3)
        self.assertEqual(neighbourliness(S), 4)
        self.assertTrue(is_neighbourly(S, 2))
        self.assertFalse(is_neighbourly(S, 5))


class VectorTests(SimpleTestCase):
    def test_torus_g_vector(self):
        torus = Complex.from_facets(TORUS)
        self.assertEqual(tuple(f_vector(torus)), (7, 21, 14))
        self.assertEqual(tuple(g_vector(torus)), (1, 3, 6, -11))

    def test_standard_sphere_g_vector(self):
        for d in range(5):
            self.assertEqual(tuple(g_vector(standard_sphere(d))), (1,) + (0,) * (d + 1))

    def test_f_and_g_invert_each_other(self):
        torus = Complex.from_facets(TORUS)
        self.assertEqual(f_from_g(g_vector(torus), 2), f_vector(torus))
        f = f_vector(standard_sphere(4))
        self.assertEqual(f_from_g(g_from_f(f, 4), 4), f)

    def test_f_vector_includes_the_empty_face(self):
        f = f_vector(standard_sphere(2))
        self.assertEqual(f[-1], 1)
        self.assertEqual(f[5], 0)

    def test_malformed_g_vector(self):
        with self.assertRaises(MalformedVectorError):
            f_from_g([1, 2], 2)
        with self.assertRaises(MalformedVectorError):
            f_from_g([2, 0, 0, 0], 2)


def random_pure_complex(seed, prefix=""):
    rng = random.Random(seed)
    m = rng.randint(4, 8)
    size = rng.randint(2, min(4, m))
    labels = [f"{prefix}{i}" for i in range(1, m + 1)]
    return Complex.from_facets([rng.sample(labels, size) for _ in range(rng.randint(1, 6))])


def f_polynomial_product(f, h):
    out = [0] * (len(f) + len(h) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(h):
            out[i + j] += a * b
    return out


class RandomComplexTests(SimpleTestCase):
    def test_f_to_g_to_f(self):
        for seed in range(20):
            X = random_pure_complex(seed)
            self.assertEqual(f_from_g(g_vector(X), X.dim), f_vector(X))
            self.assertEqual(g_vector(X)[1], f_vector(X)[0] - (X.dim + 2))

    def test_join_multiplies_f_polynomials(self):
        for seed in range(10):
            X, Y = random_pure_complex(seed, "a"), random_pure_complex(seed + 100, "b")
            expected = f_polynomial_product(f_vector(X).entries, f_vector(Y).entries)
            self.assertEqual(list(f_vector(join(X, Y)).entries), expected)

    def test_induced_subcomplex_is_idempotent(self):
        for seed in range(20):
            X = random_pure_complex(seed)
            self.assertEqual(induced_subcomplex(X, X.vertices), X)
            rng = random.Random(seed)
            A = rng.sample(list(X.vertices), rng.randint(1, X.num_vertices))
            once = induced_subcomplex(X, A)
            self.assertEqual(induced_subcomplex(once, A), once)
            for face in combinations(once.vertices, 2):
                self.assertEqual(once.contains(once.mask_of(face)), X.contains(X.mask_of(face)))
