import unittest

import numpy as np

from braidfold.algebra.cartan import CartanDatum, finite_type, rank2, \
    reflect_weight, simple_root, weights_of_height
from braidfold.algebra.falg import weight_space, dim_weight, is_zero_in_f, \
    is_equal_in_f, membership_left, membership_right, decompose_left, \
    decompose_right, proj_left, proj_right, admissible_index_sets
from braidfold.algebra.freealg import Element, pair
from braidfold.algebra.scalars import quantum_integer, v_power
from braidfold.data import simulate
from braidfold.exceptions import NotHomogeneous, ResourceLimit

from collections import Counter


def positive_roots(C: CartanDatum):
    """Closure of the simple roots under reflections (finite type only)."""
    roots = {simple_root(C, i) for i in C.indices}
    frontier = list(roots)
    while frontier:
        beta = frontier.pop()
        for i in C.indices:
            gamma = reflect_weight(C, i, beta)
            if all(x >= 0 for x in gamma) and gamma not in roots:
                roots.add(gamma)
                frontier.append(gamma)
    return sorted(roots)


def kostant_partitions(C: CartanDatum, nu):
    """Number of ways to write nu as a sum of positive roots."""
    counts = Counter({(0,) * C.n: 1})
    for beta in positive_roots(C):
        updated = Counter()
        for mu, count in counts.items():
            k = 0
            while all(m + k * b <= n for m, b, n in zip(mu, beta, nu)):
                updated[tuple(m + k * b for m, b in zip(mu, beta))] += count
                k += 1
        counts = updated
    return counts[tuple(nu)]


class TestDimensions(unittest.TestCase):

    def test_positive_roots(self):
        self.assertEqual(positive_roots(finite_type('B', 2)),
                         [(0, 1), (1, 0), (1, 1), (1, 2)])
        self.assertEqual(positive_roots(finite_type('G', 2)),
                         [(0, 1), (1, 0), (1, 1), (1, 2), (1, 3), (2, 3)])

    def test_small_dimensions(self):
        A2 = finite_type('A', 2)
        self.assertEqual(dim_weight(A2, (0, 0)), 1)
        self.assertEqual(dim_weight(A2, (1, 1)), 2)
        self.assertEqual(dim_weight(A2, (2, 1)), 2)
        self.assertEqual(dim_weight(A2, (2, 2)), 3)
        space = weight_space(A2, (2, 1))
        self.assertEqual(len(space.words), 3)
        self.assertEqual(space.rank, 2)
        self.assertEqual(space.to_json()["pivots"], [[0, 0, 1], [0, 1, 0]])

    def test_kostant_partition_function(self):
        for C, top in ((finite_type('A', 2), 6),
                       (finite_type('B', 2), 6),
                       (finite_type('G', 2), 6),
                       (finite_type('A', 3), 6)):
            for h in range(1, top + 1):
                for nu in weights_of_height(C, h):
                    self.assertEqual(dim_weight(C, nu), kostant_partitions(C, nu),
                                     msg=f"{C} at {nu}")

    def test_commuting_generators(self):
        C = rank2(0, 0)
        x = Element.from_word(C, (0, 1))
        y = Element.from_word(C, (1, 0))
        self.assertTrue(is_equal_in_f(x, y))
        self.assertEqual(dim_weight(C, (2, 3)), 1)

    def test_resource_limit(self):
        A2 = finite_type('A', 2)
        with self.assertRaises(ResourceLimit):
            dim_weight(A2, (5, 5), max_height=8)
        with self.assertRaises(ResourceLimit):
            is_zero_in_f(Element.from_word(A2, (0, 1, 0)), max_height=2)


class TestZeroTest(unittest.TestCase):

    def setUp(self):
        self.C = finite_type('A', 2)

    def test_serre_relation_vanishes(self):
        C = self.C
        relator = Element.from_word(C, (0, 0, 1)) \
            - Element.from_word(C, (0, 1, 0), quantum_integer(2)) \
            + Element.from_word(C, (1, 0, 0))
        self.assertTrue(is_zero_in_f(relator))
        self.assertFalse(relator.is_zero())
        self.assertFalse(is_zero_in_f(Element.from_word(C, (0, 1))))
        self.assertTrue(is_zero_in_f(Element.zero(C)))

    def test_equal_in_f_by_components(self):
        C = self.C
        relator = Element.from_word(C, (0, 0, 1)) \
            - Element.from_word(C, (0, 1, 0), quantum_integer(2)) \
            + Element.from_word(C, (1, 0, 0))
        x = Element.generator(C, 0) + relator
        self.assertTrue(is_equal_in_f(x, Element.generator(C, 0)))
        self.assertFalse(is_equal_in_f(x, Element.generator(C, 1)))

    def test_not_homogeneous(self):
        x = Element.generator(self.C, 0) + Element.from_word(self.C, (0, 1))
        with self.assertRaises(NotHomogeneous):
            is_zero_in_f(x)
        with self.assertRaises(NotHomogeneous):
            proj_left(0, x)


class TestProjections(unittest.TestCase):

    def setUp(self):
        self.C = finite_type('A', 2)

    def test_generators(self):
        C = self.C
        t0 = Element.generator(C, 0)
        t1 = Element.generator(C, 1)
        self.assertTrue(is_zero_in_f(proj_left(0, t0)))
        self.assertEqual(proj_left(0, t1), t1)
        self.assertTrue(is_zero_in_f(proj_right(0, t0)))
        self.assertFalse(membership_left(0, t0))
        self.assertTrue(membership_left(0, t1))
        self.assertTrue(membership_right(0, t1))

    def test_two_letter_projection(self):
        C = self.C
        x = Element.from_word(C, (1, 0))
        p, c = decompose_left(0, x)
        expected = x - Element.from_word(C, (0, 1), v_power(-1))
        self.assertTrue(is_equal_in_f(p, expected))
        self.assertTrue(membership_left(0, p))
        self.assertTrue(all(w[0] == 0 for w in c.terms))

    def test_decomposition_properties(self):
        for C in (finite_type('A', 2), finite_type('B', 2), finite_type('G', 2),
                  finite_type('A', 3)):
            rng = np.random.RandomState(17)
            index_sets = [(i,) for i in C.indices] + admissible_index_sets(C)
            for _ in range(50):
                nu = simulate.random_weight(C, int(rng.randint(1, 6)), rng)
                x = simulate.random_element(C, nu, seed=rng)
                for index_set in index_sets:
                    self.check_decomposition(index_set, x)

    def check_decomposition(self, index_set, x):
        p, c = decompose_left(index_set, x)
        self.assertTrue(is_equal_in_f(x, p + c))
        self.assertTrue(all(membership_left(i, p) for i in index_set))
        self.assertTrue(pair(p, c).is_zero())
        self.assertTrue(all(w[0] in index_set for w in c.terms))
        self.assertTrue(is_equal_in_f(proj_left(index_set, p), p))

        p, c = decompose_right(index_set, x)
        self.assertTrue(is_equal_in_f(x, p + c))
        self.assertTrue(all(membership_right(i, p) for i in index_set))
        self.assertTrue(pair(p, c).is_zero())
        self.assertTrue(all(w[-1] in index_set for w in c.terms))
        self.assertTrue(is_equal_in_f(proj_right(index_set, p), p))

    def test_admissible_index_sets(self):
        A3 = finite_type('A', 3)
        self.assertEqual(admissible_index_sets(A3), [(0, 2)])
        self.assertEqual(admissible_index_sets(finite_type('A', 2)), [])
        self.assertEqual(admissible_index_sets(rank2(0, 0)), [(0, 1)])

    def test_orbit_projection(self):
        A3 = finite_type('A', 3)
        x = simulate.random_element(A3, (1, 2, 1), seed=5)
        p = proj_left((0, 2), x)
        self.assertTrue(membership_left(0, p))
        self.assertTrue(membership_left(2, p))
        self.assertTrue(is_equal_in_f(proj_left([2, 0], x), p))
        p = proj_right((0, 2), x)
        self.assertTrue(membership_right(0, p))
        self.assertTrue(membership_right(2, p))


if __name__ == '__main__':
    unittest.main()
