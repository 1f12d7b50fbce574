import unittest

import numpy as np

from braidfold.algebra.cartan import CartanDatum, validate_cartan, \
    minimal_symmetrizer, cartan_from_matrix, rank2, finite_type, check_weight, \
    simple_root, sym_form, reflect_weight, weights_of_height
from braidfold.algebra.scalars import v_power
from braidfold.exceptions import InvalidInputError, NotGCM, \
    NotSymmetrizable, RankMismatch


class TestValidation(unittest.TestCase):

    def test_valid_datum(self):
        C = validate_cartan([[2, -1], [-2, 2]], [2, 1])
        self.assertEqual(C.n, 2)
        self.assertEqual(C.pairing(0, 1), -2)
        self.assertEqual(C.pairing(1, 0), -2)
        self.assertEqual(C.v_i(0), v_power(2))

    def test_not_gcm(self):
        for A in ([[3, -1], [-1, 2]],
                  [[2, 1], [-1, 2]],
                  [[2, 0], [-1, 2]]):
            with self.assertRaises(NotGCM):
                validate_cartan(A, [1, 1])

    def test_not_symmetrizable(self):
        with self.assertRaises(NotSymmetrizable):
            validate_cartan([[2, -1], [-2, 2]], [1, 1])
        with self.assertRaises(NotSymmetrizable):
            minimal_symmetrizer([[2, -1, -1], [-2, 2, -1], [-1, -1, 2]])

    def test_bad_shapes(self):
        with self.assertRaises(InvalidInputError):
            validate_cartan([[2, -1, 0], [-1, 2, 0]], [1, 1])
        with self.assertRaises(InvalidInputError):
            validate_cartan([[2, -1], [-1, 2]], [1])
        with self.assertRaises(InvalidInputError):
            validate_cartan([[2, -1], [-1, 2]], [1, 0])

    def test_errors_are_value_errors(self):
        with self.assertRaises(ValueError):
            validate_cartan([[2, 1], [1, 2]], [1, 1])


class TestSymmetrizers(unittest.TestCase):

    def test_minimal_symmetrizer(self):
        self.assertEqual(minimal_symmetrizer([[2, -1], [-2, 2]]), (2, 1))
        self.assertEqual(minimal_symmetrizer([[2, -1], [-3, 2]]), (3, 1))
        self.assertEqual(minimal_symmetrizer([[2, -2], [-2, 2]]), (1, 1))
        # Each component is normalized on its own.
        self.assertEqual(minimal_symmetrizer([[2, 0, 0], [0, 2, -1], [0, -2, 2]]),
                         (1, 2, 1))

    def test_rank2(self):
        self.assertEqual(rank2(1, 3), finite_type('G', 2))
        self.assertEqual(rank2(1, 2), finite_type('B', 2))
        self.assertEqual(rank2(2, 1), finite_type('C', 2))
        self.assertEqual(rank2(0, 0).eps, (1, 1))

    def test_finite_types(self):
        B3 = finite_type('B', 3)
        self.assertEqual(B3.A, ((2, -1, 0), (-1, 2, -1), (0, -2, 2)))
        self.assertEqual(B3.eps, (2, 2, 1))
        C3 = finite_type('C', 3)
        self.assertEqual(C3.A, ((2, -1, 0), (-1, 2, -2), (0, -1, 2)))
        self.assertEqual(C3.eps, (1, 1, 2))
        self.assertEqual(finite_type('A', 3),
                         cartan_from_matrix([[2, -1, 0], [-1, 2, -1], [0, -1, 2]]))
        with self.assertRaises(InvalidInputError):
            finite_type('E', 6)

    def test_json(self):
        C = finite_type('G', 2)
        self.assertEqual(C.to_json(), {"A": [[2, -1], [-3, 2]], "eps": [3, 1]})
        self.assertEqual(CartanDatum.from_json(C.to_json()), C)
        with self.assertRaises(InvalidInputError):
            CartanDatum.from_json({"A": [[2]]})


class TestWeights(unittest.TestCase):

    def setUp(self):
        self.A2 = finite_type('A', 2)
        self.B2 = finite_type('B', 2)

    def test_rank_mismatch(self):
        with self.assertRaises(RankMismatch):
            check_weight(self.A2, (1, 0, 0))
        with self.assertRaises(RankMismatch):
            sym_form(self.A2, (1,), (1, 0))
        with self.assertRaises(InvalidInputError):
            check_weight(self.A2, (1, -1), nonnegative=True)

    def test_index_range(self):
        with self.assertRaises(InvalidInputError):
            simple_root(self.A2, 2)
        self.assertEqual(simple_root(self.A2, 1), (0, 1))

    def test_sym_form(self):
        self.assertEqual(sym_form(self.A2, (1, 0), (0, 1)), -1)
        self.assertEqual(sym_form(self.A2, (1, 1), (1, 1)), 2)
        self.assertEqual(sym_form(self.B2, (1, 0), (1, 0)), 4)
        self.assertEqual(sym_form(self.B2, (0, 1), (0, 1)), 2)
        self.assertEqual(sym_form(self.B2, (1, 0), (0, 1)), -2)

    def test_reflect_weight(self):
        self.assertEqual(reflect_weight(self.A2, 0, (0, 1)), (1, 1))
        self.assertEqual(reflect_weight(self.A2, 0, (1, 0)), (-1, 0))
        self.assertEqual(reflect_weight(self.B2, 1, (1, 0)), (1, 2))
        G2 = finite_type('G', 2)
        self.assertEqual(reflect_weight(G2, 1, (1, 0)), (1, 3))
        # Reflections are involutions and preserve the form.
        for nu in [(1, 2), (3, -1), (0, 5)]:
            for i in (0, 1):
                mu = reflect_weight(G2, i, nu)
                self.assertEqual(reflect_weight(G2, i, mu), nu)
                self.assertEqual(sym_form(G2, mu, mu), sym_form(G2, nu, nu))

    def test_reflections_are_isometries(self):
        rng = np.random.RandomState(3)
        data = [self.A2, self.B2, finite_type('G', 2), finite_type('A', 3),
                finite_type('B', 3), finite_type('C', 3), rank2(2, 2),
                rank2(2, 3), rank2(4, 1)]
        for C in data:
            for _ in range(100):
                nu = tuple(int(x) for x in rng.randint(-4, 5, size=C.n))
                mu = tuple(int(x) for x in rng.randint(-4, 5, size=C.n))
                self.assertEqual(sym_form(C, nu, mu), sym_form(C, mu, nu))
                for i in C.indices:
                    self.assertEqual(sym_form(C, reflect_weight(C, i, nu),
                                              reflect_weight(C, i, mu)),
                                     sym_form(C, nu, mu), msg=f"{C}, s_{i}")

    def test_weights_of_height(self):
        self.assertEqual(weights_of_height(self.A2, 0), [(0, 0)])
        self.assertEqual(weights_of_height(self.A2, 2), [(0, 2), (1, 1), (2, 0)])
        self.assertEqual(len(weights_of_height(finite_type('A', 3), 3)), 10)


if __name__ == '__main__':
    unittest.main()
