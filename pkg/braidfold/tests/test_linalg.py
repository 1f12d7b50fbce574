import unittest

from braidfold.algebra import linalg
from braidfold.algebra.scalars import RationalFn, ZERO, ONE, V, \
    rf_normalize, quantum_integer


class TestLinalg(unittest.TestCase):

    def test_rank_of_dependent_rows(self):
        matrix = [[V, ONE], [V * V, V]]
        self.assertEqual(linalg.exact_rank(matrix), (1, [0]))
        rank, _ = linalg.modular_rank(matrix, seed=3)
        self.assertLessEqual(rank, 1)

    def test_full_rank_is_certified(self):
        matrix = [[ONE, V], [V, ONE]]
        self.assertEqual(linalg.exact_rank(matrix), (2, [0, 1]))

    def test_column_skipping(self):
        matrix = [[ZERO, ONE, V], [ZERO, V, V * V + 1]]
        rows, pivots = linalg.bareiss_echelon(matrix)
        self.assertEqual(pivots, [1, 2])
        self.assertTrue(rows[1][1].is_zero())

    def test_rank_over_fractions(self):
        half = rf_normalize(ONE, quantum_integer(2))
        self.assertEqual(linalg.rank([[half, RationalFn.coerce(1)],
                                      [RationalFn.coerce(1), quantum_integer(2)]]), 1)
        self.assertEqual(linalg.rank([]), 0)

    def test_solve(self):
        x = linalg.solve([[1, 1], [1, -1]], [2, 0])
        self.assertEqual(x, [RationalFn.coerce(1), RationalFn.coerce(1)])

        x = linalg.solve([[V, ONE]], [quantum_integer(2)])
        # Free variable x_1 is set to zero.
        self.assertEqual(x[1], RationalFn.coerce(0))
        self.assertEqual(x[0] * V, RationalFn.coerce(quantum_integer(2)))

        self.assertIsNone(linalg.solve([[1], [1]], [1, 2]))

    def test_nullspace(self):
        kernel = linalg.nullspace([[1, 1]])
        self.assertEqual(kernel, [[RationalFn.coerce(-1), RationalFn.coerce(1)]])
        self.assertEqual(len(linalg.nullspace([], ncols=3)), 3)
        self.assertEqual(linalg.nullspace([[1, 0], [0, V]]), [])

    def test_nullspace_vectors_are_in_kernel(self):
        matrix = [[V, ONE, quantum_integer(2)],
                  [V * V, V, V * quantum_integer(2)]]
        kernel = linalg.nullspace(matrix)
        self.assertEqual(len(kernel), 2)
        for vector in kernel:
            for row in matrix:
                total = RationalFn.coerce(0)
                for a, x in zip(row, vector):
                    total = total + x * a
                self.assertTrue(total.is_zero())


if __name__ == '__main__':
    unittest.main()
