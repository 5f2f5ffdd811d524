import unittest

import numpy as np

from edgepowers.monomial import (
    Monomial,
    MonomialIdeal,
    PrimeSupport,
    colon_by_ideal,
    colon_by_monomial,
    contains,
    intersect,
    lex_cmp,
    localize,
    minimalize,
    power,
    product,
    revlex_cmp,
    revlex_key,
    sum_ideals,
)
from edgepowers.utils import DimensionError, GuardError


def m(text, n):
    return Monomial.parse(text, n)


def ideal(n, *texts):
    return MonomialIdeal(n, [m(t, n) for t in texts])


class MonomialTests(unittest.TestCase):
    def test_parse_and_print(self):
        u = m("x1^2x3", 4)
        self.assertEqual(u.exps, (2, 0, 1, 0))
        self.assertEqual(str(u), "x1^2x3")
        self.assertEqual(m("x2*x5", 5).exps, (0, 1, 0, 0, 1))
        self.assertEqual(m("1", 3), Monomial.one(3))

    def test_parse_rejects_garbage(self):
        with self.assertRaises(ValueError):
            m("y1x2", 3)
        with self.assertRaises(DimensionError):
            m("x4", 3)

    def test_negative_exponent(self):
        with self.assertRaises(ValueError):
            Monomial((1, -1))

    def test_too_many_variables(self):
        with self.assertRaises(GuardError):
            Monomial.one(65)

    def test_min_max_nu(self):
        u = m("x2^3x5", 6)
        self.assertEqual(u.max_index, 5)
        self.assertEqual(u.min_index, 2)
        self.assertEqual(u.nu(2), 3)
        self.assertEqual(u.indices(), [2, 2, 2, 5])
        with self.assertRaises(ValueError):
            Monomial.one(3).max_index

    def test_lex(self):
        self.assertEqual(lex_cmp(m("x1x3", 3), m("x2x3", 3)), 1)
        self.assertEqual(lex_cmp(m("x2x3", 3), m("x1x3", 3)), -1)
        self.assertEqual(lex_cmp(m("x1^2", 2), m("x1^2", 2)), 0)

    def test_revlex(self):
        self.assertEqual(revlex_cmp(m("x3x4", 4), m("x2x4", 4)), -1)
        self.assertEqual(revlex_cmp(m("x1x2", 4), m("x1x3", 4)), 1)
        ordered = sorted([m("x2x4", 4), m("x3x4", 4), m("x1x2", 4)], key=revlex_key)
        self.assertEqual([str(u) for u in ordered], ["x3x4", "x2x4", "x1x2"])

    def test_orders_are_transitive(self):
        rng = np.random.default_rng(0)
        for _ in range(200):
            a, b, c = (Monomial(tuple(row)) for row in rng.integers(0, 3, size=(3, 4)))
            for cmp in (lex_cmp, revlex_cmp):
                self.assertEqual(cmp(a, b), -cmp(b, a))
                if cmp(a, b) >= 0 and cmp(b, c) >= 0:
                    self.assertGreaterEqual(cmp(a, c), 0, (cmp.__name__, a, b, c))
                if cmp(a, b) == 1 and cmp(b, c) == 1:
                    self.assertEqual(cmp(a, c), 1, (cmp.__name__, a, b, c))

    def test_dimension_mismatch(self):
        with self.assertRaises(DimensionError):
            lex_cmp(m("x1", 2), m("x1", 3))


class MonomialIdealTests(unittest.TestCase):
    def test_minimalize(self):
        I = minimalize([m("x1x2", 3), m("x1^2x2", 3), m("x1x2", 3), m("x3", 3)], 3)
        self.assertEqual(str(I), "(x1x2, x3)")

    def test_zero_and_unit(self):
        self.assertTrue(MonomialIdeal.zero(3).is_zero)
        self.assertEqual(str(MonomialIdeal.zero(3)), "(0)")
        self.assertTrue(ideal(2, "x1", "1").is_unit)

    def test_contains(self):
        I = ideal(3, "x1x2", "x3^2")
        self.assertTrue(contains(I, m("x1^2x2x3", 3)))
        self.assertFalse(contains(I, m("x1x3", 3)))
        self.assertIn(m("x3^3", 3), I)

    def test_power(self):
        I = ideal(2, "x1", "x2")
        self.assertEqual(str(power(I, 2)), "(x1^2, x1x2, x2^2)")
        self.assertTrue(power(I, 0).is_unit)
        self.assertTrue(power(MonomialIdeal.zero(2), 3).is_zero)
        with self.assertRaises(ValueError):
            power(I, -1)

    def test_power_is_iterated_product(self):
        I = ideal(4, "x1x3", "x1x4", "x2x4")
        self.assertEqual(power(I, 3), product(product(I, I), I))

    def test_sum_and_intersect(self):
        I = ideal(3, "x1x2")
        J = ideal(3, "x2x3")
        self.assertEqual(str(sum_ideals(I, J)), "(x1x2, x2x3)")
        self.assertEqual(str(intersect(I, J)), "(x1x2x3)")

    def test_colon_by_monomial(self):
        I = ideal(4, "x1x2", "x3x4")
        self.assertEqual(str(colon_by_monomial(I, m("x1x3", 4))), "(x2, x4)")
        self.assertTrue(colon_by_monomial(I, m("x1x2", 4)).is_unit)

    def test_colon_by_ideal(self):
        J = ideal(2, "x1^2", "x1x2")
        P = PrimeSupport.full(2).ideal()
        self.assertEqual(str(colon_by_ideal(J, P)), "(x1)")
        with self.assertRaises(ValueError):
            colon_by_ideal(J, MonomialIdeal.zero(2))

    def test_colon_by_ideal_matches_intersection(self):
        rng = np.random.default_rng(0)
        for _ in range(20):
            I = MonomialIdeal.from_rows(3, rng.integers(0, 3, size=(4, 3)))
            J = MonomialIdeal.from_rows(3, rng.integers(0, 3, size=(2, 3)))
            expected = None
            for g in J:
                colon = colon_by_monomial(I, g)
                expected = colon if expected is None else intersect(expected, colon)
            self.assertEqual(colon_by_ideal(I, J), expected)

    def test_localize(self):
        I = ideal(3, "x1^2x2", "x2x3")
        local = localize(I, PrimeSupport(3, frozenset({1, 3})))
        self.assertEqual(str(local), "(x1^2, x3)")

    def test_localize_is_idempotent(self):
        rng = np.random.default_rng(0)
        for _ in range(20):
            I = MonomialIdeal.from_rows(4, rng.integers(0, 3, size=(4, 4)))
            support = PrimeSupport(4, frozenset(int(j) + 1 for j in np.flatnonzero(rng.integers(0, 2, size=4))))
            local = localize(I, support)
            self.assertEqual(localize(local, support), local)

    def test_power_is_additive(self):
        I = ideal(4, "x1x3", "x1x4", "x2x4")
        J = ideal(3, "x1^2", "x2x3")
        for a, b in [(2, 2), (2, 3), (3, 2)]:
            self.assertEqual(power(I, a + b), product(power(I, a), power(I, b)))
            self.assertEqual(power(J, a + b), product(power(J, a), power(J, b)))

    def test_json(self):
        I = ideal(3, "x1x2", "x3")
        self.assertEqual(I.to_json(), {"n": 3, "gens": [[1, 1, 0], [0, 0, 1]]})
        self.assertEqual(MonomialIdeal.from_json(I.to_json()), I)

    def test_prime_support(self):
        P = PrimeSupport(5, frozenset({4, 1}))
        self.assertEqual(P.height, 2)
        self.assertEqual(P.to_json(), [1, 4])
        self.assertEqual(str(P), "(x1,x4)")
        self.assertEqual(P.complement().key, (2, 3, 5))
        with self.assertRaises(DimensionError):
            PrimeSupport(3, frozenset({4}))


if __name__ == "__main__":
    unittest.main()
