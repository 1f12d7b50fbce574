import unittest

from braidfold.algebra.cartan import finite_type, rank2, validate_cartan
from braidfold.exceptions import InvalidInputError, NotAdmissible, \
    NotCompatible
from braidfold.quiver.quiver import Arrow, Quiver, QuiverAut, validate_aut, \
    identity_aut, fold, unfold, orbit_is_sink, orbit_is_source, \
    reflect_quiver, fold_report, orbit_pairs, unfolded_datum, orbit_vertex_set


def a3_swap():
    """0 -> 1 <- 2 with the reflection swapping 0 and 2."""
    quiver = Quiver.from_arrows(3, [[0, 1], [2, 1]])
    return validate_aut(quiver, [2, 1, 0])


def d4_rotation():
    """Three arrows into the central vertex 1, rotated by the automorphism."""
    quiver = Quiver.from_arrows(4, [[0, 1], [2, 1], [3, 1]])
    return validate_aut(quiver, [2, 1, 3, 0])


class TestQuiver(unittest.TestCase):

    def test_loops_and_range(self):
        with self.assertRaises(InvalidInputError):
            Quiver.from_arrows(2, [[0, 0]])
        with self.assertRaises(InvalidInputError):
            Quiver.from_arrows(2, [[0, 5]])
        with self.assertRaises(InvalidInputError):
            Quiver.from_arrows(2, [[0]])

    def test_sinks_and_sources(self):
        quiver = Quiver.from_arrows(3, [[0, 1], [2, 1], [0, 1]])
        self.assertTrue(quiver.is_sink(1))
        self.assertTrue(quiver.is_source(0))
        self.assertFalse(quiver.is_sink(0))
        self.assertEqual(quiver.arrow_counts()[0, 1], 2)
        reversed_quiver = quiver.reverse_at([1])
        self.assertEqual(reversed_quiver.arrows,
                         (Arrow(1, 0), Arrow(1, 2), Arrow(1, 0)))


class TestAutomorphisms(unittest.TestCase):

    def test_orbits(self):
        qa = a3_swap()
        self.assertEqual(qa.orbits, ((0, 2), (1,)))
        self.assertEqual(qa.orbit_sizes, (2, 1))
        self.assertEqual(qa.orbit_map, (0, 1, 0))
        self.assertEqual(qa.aperm, (1, 0))
        self.assertEqual(qa.order, 2)
        self.assertEqual(d4_rotation().order, 3)
        with self.assertRaises(InvalidInputError):
            qa.orbit_of(5)
        with self.assertRaises(InvalidInputError):
            qa.check_orbit(2)

    def test_not_admissible(self):
        quiver = Quiver.from_arrows(2, [[0, 1]])
        with self.assertRaises(NotAdmissible):
            validate_aut(quiver, [1, 0])

    def test_not_compatible(self):
        quiver = Quiver.from_arrows(3, [[0, 1], [1, 2]])
        with self.assertRaises(NotCompatible):
            validate_aut(quiver, [2, 1, 0])
        quiver = Quiver.from_arrows(3, [[0, 1], [2, 1]])
        with self.assertRaises(NotCompatible):
            validate_aut(quiver, [2, 1, 0], [0, 1])
        quiver = Quiver.from_arrows(3, [[0, 1], [0, 1], [2, 1]])
        with self.assertRaises(NotCompatible):
            validate_aut(quiver, [2, 1, 0])

    def test_bad_permutation(self):
        quiver = Quiver.from_arrows(3, [[0, 1], [2, 1]])
        with self.assertRaises(InvalidInputError):
            validate_aut(quiver, [0, 0, 1])
        with self.assertRaises(InvalidInputError):
            validate_aut(quiver, [0, 1])

    def test_json(self):
        qa = a3_swap()
        data = qa.to_json()
        self.assertEqual(data["orbits"], [[0, 2], [1]])
        self.assertEqual(QuiverAut.from_json(data), qa)
        plain = QuiverAut.from_json({"vertices": 3, "arrows": [[0, 1], [1, 2]]})
        self.assertEqual(plain.vperm, (0, 1, 2))
        with self.assertRaises(InvalidInputError):
            QuiverAut.from_json({"arrows": []})


class TestFolding(unittest.TestCase):

    def test_a3_folds_to_b2(self):
        C, orbit_map = fold(a3_swap())
        self.assertEqual(C.A, ((2, -1), (-2, 2)))
        self.assertEqual(C.eps, (2, 1))
        self.assertEqual(C, finite_type('B', 2))
        self.assertEqual(orbit_map, (0, 1, 0))

    def test_d4_folds_to_g2(self):
        C, _ = fold(d4_rotation())
        self.assertEqual(C, finite_type('G', 2))

    def test_identity_folds_to_symmetric_datum(self):
        quiver = Quiver.from_arrows(3, [[0, 1], [1, 2]])
        C, _ = fold(identity_aut(quiver))
        self.assertEqual(C, finite_type('A', 3))
        quiver = Quiver.from_arrows(2, [[0, 1], [1, 0], [0, 1]])
        C, _ = fold(identity_aut(quiver))
        self.assertEqual(C.A, ((2, -3), (-3, 2)))

    def test_unfolded_datum(self):
        qa = a3_swap()
        self.assertEqual(unfolded_datum(qa), finite_type('A', 3))
        self.assertEqual(orbit_vertex_set(qa, [0]), (0, 2))
        self.assertEqual(orbit_vertex_set(qa, [1]), (1,))
        with self.assertRaises(InvalidInputError):
            orbit_vertex_set(qa, [0, 1])
        with self.assertRaises(InvalidInputError):
            orbit_vertex_set(qa, [4])
        self.assertEqual(orbit_vertex_set(d4_rotation(), [0]), (0, 2, 3))

    def test_fold_report(self):
        self.assertEqual(fold_report(a3_swap()),
                         {"datum": {"A": [[2, -1], [-2, 2]], "eps": [2, 1]},
                          "orbit_map": [0, 1, 0],
                          "orbits": [[0, 2], [1]]})
        self.assertEqual(orbit_pairs(a3_swap()), [(0, 1), (1, 0)])


class TestUnfolding(unittest.TestCase):

    def test_unfold_b2(self):
        qa = unfold(finite_type('B', 2))
        self.assertEqual(qa.quiver.n_vertices, 3)
        self.assertEqual(qa.vperm, (1, 0, 2))
        self.assertEqual(qa.quiver.arrows, (Arrow(0, 2), Arrow(1, 2)))
        self.assertEqual(qa.aperm, (1, 0))

    def test_round_trips(self):
        data = [rank2(a, b) for a in range(1, 5) for b in range(1, 5)]
        data += [finite_type('B', 3), finite_type('C', 3), finite_type('A', 4),
                 rank2(0, 0), validate_cartan([[2, -1], [-1, 2]], [2, 2])]
        for C in data:
            C_folded, _ = fold(unfold(C))
            self.assertEqual(C_folded, C, msg=f"{C}")

    def test_round_trips_in_every_orientation(self):
        data = [rank2(a, b) for a in range(1, 5) for b in range(1, 5)]
        data += [finite_type('B', 3), finite_type('C', 3), finite_type('A', 4)]
        for C in data:
            edges = [(i, j) for i in C.indices for j in C.indices
                     if i < j and C.a(i, j) != 0]
            for mask in range(2 ** len(edges)):
                orientation = [(i, j) if mask >> k & 1 else (j, i)
                               for k, (i, j) in enumerate(edges)]
                qa = unfold(C, orientation)
                for i, j in orientation:
                    self.assertTrue(any(qa.orbit_map[s] == i and qa.orbit_map[t] == j
                                        for s, t in qa.quiver.arrows))
                self.assertEqual(fold(qa)[0], C, msg=f"{C} with {orientation}")

    def test_orientation(self):
        C = finite_type('B', 2)
        qa = unfold(C)
        self.assertTrue(orbit_is_source(qa, 0))
        self.assertTrue(orbit_is_sink(qa, 1))
        flipped = unfold(C, [(1, 0)])
        self.assertEqual(flipped.quiver.arrows, (Arrow(2, 0), Arrow(2, 1)))
        self.assertTrue(orbit_is_sink(flipped, 0))
        self.assertEqual(fold(flipped)[0], C)

        A3 = finite_type('A', 3)
        qa = unfold(A3, [(2, 1)])
        self.assertTrue(orbit_is_sink(qa, 1))
        self.assertEqual(fold(qa)[0], A3)

    def test_bad_orientation(self):
        with self.assertRaises(InvalidInputError):
            unfold(rank2(0, 0), [(0, 1)])
        with self.assertRaises(InvalidInputError):
            unfold(finite_type('A', 2), [(0, 1), (1, 0)])
        with self.assertRaises(InvalidInputError):
            unfold(finite_type('A', 2), [(0, 2)])

    def test_isolated_orbits(self):
        qa = unfold(rank2(0, 0))
        self.assertEqual(qa.quiver.n_arrows, 0)
        self.assertTrue(orbit_is_sink(qa, 0))
        self.assertTrue(orbit_is_source(qa, 0))

    def test_reflect_quiver(self):
        qa = unfold(finite_type('B', 2))
        reflected = reflect_quiver(qa, 0)
        self.assertTrue(orbit_is_sink(reflected, 0))
        self.assertTrue(orbit_is_source(reflected, 1))
        self.assertEqual(reflected.vperm, qa.vperm)
        self.assertEqual(fold(reflected)[0], fold(qa)[0])
        self.assertEqual(reflect_quiver(reflected, 0), qa)


if __name__ == '__main__':
    unittest.main()
