import unittest

import numpy as np

from braidfold.algebra.scalars import LaurentPoly, RationalFn, ZERO, ONE, V, \
    RF_ONE, v_power, rf_normalize, quantum_integer, quantum_factorial, \
    quantum_binomial, scalar_from_json, clear_denominators
from braidfold.data import simulate
from braidfold.exceptions import InvalidInputError


class TestLaurentPoly(unittest.TestCase):

    def test_arithmetic(self):
        p = LaurentPoly({1: 1, -1: 1})
        self.assertEqual(p * p, LaurentPoly({2: 1, 0: 2, -2: 1}))
        self.assertEqual(p - p, ZERO)
        self.assertEqual(p + 1, LaurentPoly({1: 1, 0: 1, -1: 1}))
        self.assertEqual(3 * V, LaurentPoly({1: 3}))
        self.assertEqual(V ** -2, v_power(-2))
        self.assertEqual((-V) ** -3, LaurentPoly({-3: -1}))

    def test_valuation_degree_shift(self):
        p = LaurentPoly({-2: 5, 3: -1})
        self.assertEqual(p.valuation, -2)
        self.assertEqual(p.degree, 3)
        self.assertEqual(p.shift(2), LaurentPoly({0: 5, 5: -1}))

    def test_bar(self):
        p = LaurentPoly({2: 1, -1: 3})
        self.assertEqual(p.bar(), LaurentPoly({-2: 1, 1: 3}))
        self.assertEqual(quantum_integer(4).bar(), quantum_integer(4))

    def test_evaluate_mod(self):
        self.assertEqual(LaurentPoly({1: 1, 0: 2}).evaluate_mod(3, 7), 5)
        # 3 * 5 = 1 mod 7.
        self.assertEqual(v_power(-1).evaluate_mod(3, 7), 5)

    def test_exact_div(self):
        a = quantum_integer(3) * quantum_integer(2)
        self.assertEqual(a.exact_div(quantum_integer(2)), quantum_integer(3))
        self.assertEqual(LaurentPoly({3: 4}).exact_div(LaurentPoly({1: 2})),
                         LaurentPoly({2: 2}))
        with self.assertRaises(AssertionError):
            LaurentPoly({0: 1}).exact_div(quantum_integer(2))

    def test_json(self):
        p = LaurentPoly({-1: 2, 4: -3})
        self.assertEqual(p.to_json(), [[-1, 2], [4, -3]])
        self.assertEqual(LaurentPoly.from_json(p.to_json()), p)
        self.assertEqual(scalar_from_json([[0, 1]]), ONE)


class TestQuantumIntegers(unittest.TestCase):

    def test_quantum_integer(self):
        self.assertEqual(quantum_integer(0), ZERO)
        self.assertEqual(quantum_integer(1), ONE)
        self.assertEqual(quantum_integer(2), LaurentPoly({1: 1, -1: 1}))
        self.assertEqual(quantum_integer(3, eps=2), LaurentPoly({4: 1, 0: 1, -4: 1}))
        self.assertEqual(quantum_integer(-2), -quantum_integer(2))

    def test_quantum_factorial(self):
        self.assertEqual(quantum_factorial(0), ONE)
        self.assertEqual(quantum_factorial(3),
                         LaurentPoly({3: 1, 1: 2, -1: 2, -3: 1}))
        with self.assertRaises(InvalidInputError):
            quantum_factorial(-1)

    def test_quantum_binomial(self):
        self.assertEqual(quantum_binomial(4, 2),
                         LaurentPoly({4: 1, 2: 1, 0: 2, -2: 1, -4: 1}))
        self.assertEqual(quantum_binomial(5, 0), ONE)
        self.assertEqual(quantum_binomial(5, 5, eps=3), ONE)
        with self.assertRaises(InvalidInputError):
            quantum_binomial(2, 3)

    def test_pascal_identity(self):
        # [n, k] = v_i^k [n-1, k] + v_i^(k-n) [n-1, k-1] with v_i = v^eps
        for eps in (1, 2, 3):
            for n in range(1, 9):
                for k in range(1, n):
                    rhs = v_power(eps * k) * quantum_binomial(n - 1, k, eps=eps) \
                        + v_power(eps * (k - n)) * quantum_binomial(n - 1, k - 1,
                                                                     eps=eps)
                    self.assertEqual(quantum_binomial(n, k, eps=eps), rhs)

    def test_binomial_from_factorials(self):
        for eps in (1, 2):
            for n in range(9):
                for k in range(n + 1):
                    lhs = quantum_binomial(n, k, eps=eps) \
                        * quantum_factorial(k, eps=eps) \
                        * quantum_factorial(n - k, eps=eps)
                    self.assertEqual(lhs, quantum_factorial(n, eps=eps))


class TestRationalFn(unittest.TestCase):

    def test_canonical_form(self):
        x = rf_normalize(LaurentPoly({2: 1, 0: -1}), LaurentPoly({1: 1, 0: -1}))
        self.assertTrue(x.is_laurent())
        self.assertEqual(x, RationalFn.coerce(LaurentPoly({1: 1, 0: 1})))

        half = rf_normalize(ONE, quantum_integer(2))
        self.assertEqual(half + half, rf_normalize(LaurentPoly.constant(2),
                                                   quantum_integer(2)))
        self.assertEqual(rf_normalize(ONE, ONE - v_power(-2)),
                         rf_normalize(v_power(2), v_power(2) - 1))

    def test_field_operations(self):
        x = rf_normalize(quantum_integer(3), quantum_integer(2) * V)
        self.assertEqual(x * x.inverse(), RF_ONE)
        self.assertEqual(x / x, RF_ONE)
        self.assertEqual(x ** -2, (x * x).inverse())
        self.assertTrue((x - x).is_zero())
        with self.assertRaises(ZeroDivisionError):
            rf_normalize(ONE, ZERO)

    def test_json(self):
        x = rf_normalize(LaurentPoly({1: 2}), quantum_integer(2))
        self.assertEqual(RationalFn.from_json(x.to_json()), x)
        self.assertEqual(RationalFn.from_json([[0, 3]]), RationalFn.coerce(3))

    def test_clear_denominators(self):
        values = [rf_normalize(ONE, quantum_integer(2)),
                  rf_normalize(ONE, quantum_integer(3)),
                  RationalFn.coerce(2)]
        cleared = clear_denominators(values)
        ratios = [rf_normalize(c, ONE) / x for c, x in zip(cleared, values)]
        self.assertTrue(all(r == ratios[0] for r in ratios))
        self.assertTrue(all(isinstance(c, LaurentPoly) for c in cleared))


class TestRingAxioms(unittest.TestCase):

    def setUp(self):
        self.rng = np.random.RandomState(5)

    def laurent(self):
        return simulate.random_laurent(self.rng, max_terms=3, max_exponent=3)

    def fraction(self):
        return rf_normalize(self.laurent(), self.laurent())

    def test_laurent_ring(self):
        for _ in range(100):
            a, b, c = self.laurent(), self.laurent(), self.laurent()
            self.assertEqual((a + b) + c, a + (b + c))
            self.assertEqual(a + b, b + a)
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertEqual(a * b, b * a)
            self.assertEqual(a * (b + c), a * b + a * c)
            self.assertEqual(a * ONE, a)
            self.assertTrue((a - a).is_zero())
            self.assertEqual((a * b).bar(), a.bar() * b.bar())

    def test_fraction_field(self):
        for _ in range(60):
            x, y, z = self.fraction(), self.fraction(), self.fraction()
            self.assertEqual((x + y) + z, x + (y + z))
            self.assertEqual(x + y, y + x)
            self.assertEqual((x * y) * z, x * (y * z))
            self.assertEqual(x * y, y * x)
            self.assertEqual(x * (y + z), x * y + x * z)
            self.assertEqual(x * x.inverse(), RF_ONE)
            self.assertEqual((x - y) + y, x)

    def test_normalize_is_idempotent(self):
        for _ in range(100):
            x = self.fraction()
            again = rf_normalize(x.num, x.den)
            self.assertEqual(again.num, x.num)
            self.assertEqual(again.den, x.den)
            r = self.laurent()
            self.assertEqual(rf_normalize(x.num * r, x.den * r), x)
            self.assertEqual(x.den.valuation, 0)
            self.assertGreater(x.den.terms[x.den.degree], 0)


if __name__ == '__main__':
    unittest.main()
