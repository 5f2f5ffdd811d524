import unittest

from edgepowers.graph import anti_d_path, edge_ideal, minimal_vertex_cover_primes, star
from edgepowers.monomial import Monomial, MonomialIdeal, PrimeSupport, colon_by_monomial, power
from edgepowers.primes import (
    NtfStatus,
    antipath_minimal_primes,
    ass_chain,
    ass_primes,
    check_witness,
    is_associated,
    is_normally_torsion_free,
    theorem_witness,
    two_method_mismatches,
    verify_antipath_ass_theorem,
    witness_search,
)


def ideal(n, *texts):
    return MonomialIdeal(n, [Monomial.parse(t, n) for t in texts])


def keys(primes):
    return [p.key for p in primes]


COVERS_N5_D1 = [(1, 2, 3), (1, 2, 5), (1, 4, 5), (3, 4, 5)]


class AssPrimesTests(unittest.TestCase):
    def test_embedded_prime(self):
        self.assertEqual(keys(ass_primes(ideal(2, "x1^2", "x1x2"))), [(1,), (1, 2)])

    def test_principal(self):
        self.assertEqual(keys(ass_primes(ideal(1, "x1"))), [(1,)])

    def test_squarefree_is_vertex_covers(self):
        G = anti_d_path(5, 1)
        ass = ass_primes(edge_ideal(G))
        self.assertEqual(keys(ass), COVERS_N5_D1)
        self.assertEqual(ass, minimal_vertex_cover_primes(G))
        self.assertEqual(ass, antipath_minimal_primes(5, 1))

    def test_improper(self):
        with self.assertRaises(ValueError):
            ass_primes(MonomialIdeal.zero(3))
        with self.assertRaises(ValueError):
            ass_primes(MonomialIdeal.unit(3))

    def test_variable_outside_support(self):
        self.assertFalse(is_associated(ideal(3, "x1x2"), PrimeSupport(3, frozenset({3}))))


class WitnessSearchTests(unittest.TestCase):
    def setUp(self):
        self.I = edge_ideal(anti_d_path(5, 1))
        self.full = PrimeSupport.full(5)

    def test_maximal_ideal_of_square(self):
        I2 = power(self.I, 2)
        m = witness_search(I2, self.full)
        self.assertIsNotNone(m)
        self.assertEqual(colon_by_monomial(I2, m), self.full.ideal())

        m = Monomial.parse("x1x3x5", 5)
        self.assertEqual(colon_by_monomial(I2, m), self.full.ideal())
        self.assertEqual(check_witness(I2, m), {"outside": True, "socle": True})

    def test_not_associated(self):
        self.assertIsNone(witness_search(self.I, self.full))

    def test_unit_witness(self):
        self.assertEqual(witness_search(ideal(1, "x1"), PrimeSupport.full(1)), Monomial.one(1))

    def test_methods_agree(self):
        self.assertEqual(two_method_mismatches(self.I), [])
        self.assertEqual(two_method_mismatches(power(self.I, 2)), [])


class TheoremWitnessTests(unittest.TestCase):
    def test_first_case(self):
        self.assertEqual(theorem_witness(5, 1, 2), Monomial.parse("x1x3x5", 5))
        self.assertEqual(theorem_witness(7, 2, 2), Monomial.parse("x1x4x7", 7))

    def test_second_case(self):
        self.assertEqual(theorem_witness(9, 1, 4), Monomial.from_indices(9, range(1, 8)))

    def test_invalid(self):
        with self.assertRaises(ValueError):
            theorem_witness(6, 2, 2)
        with self.assertRaises(ValueError):
            theorem_witness(5, 1, 1)
        with self.assertRaises(ValueError):
            theorem_witness(5, 1, 4)


class AssChainTests(unittest.TestCase):
    def test_maximal_ideal_appears(self):
        chain = ass_chain(edge_ideal(anti_d_path(5, 1)), 3)
        self.assertEqual(keys(chain.entry(1)), COVERS_N5_D1)
        self.assertEqual(keys(chain.entry(2)), sorted(COVERS_N5_D1 + [(1, 2, 3, 4, 5)]))
        self.assertEqual(chain.entry(3), chain.entry(2))
        self.assertTrue(chain.is_ascending)
        self.assertFalse(chain.is_constant)
        self.assertEqual(chain.first_change(), 2)
        self.assertEqual(chain.stabilization, 2)

    def test_bipartite_constant(self):
        chain = ass_chain(edge_ideal(anti_d_path(6, 2)), 3)
        self.assertTrue(chain.is_constant)
        self.assertEqual(chain.stabilization, 1)
        self.assertIsNone(chain.first_change())

    def test_single_edge(self):
        chain = ass_chain(ideal(2, "x1x2"), 2)
        self.assertEqual(chain.to_json()["chain"], {"1": [[1], [2]], "2": [[1], [2]]})

    def test_depth(self):
        with self.assertRaises(ValueError):
            ass_chain(ideal(2, "x1x2"), 0)


class NormallyTorsionFreeTests(unittest.TestCase):
    def test_bipartite_certified(self):
        G = anti_d_path(6, 2)
        verdict = is_normally_torsion_free(edge_ideal(G), 3, G)
        self.assertEqual(verdict.status, NtfStatus.CERTIFIED_BY_BIPARTITE)
        self.assertTrue(verdict.is_certified)

        verdict = is_normally_torsion_free(edge_ideal(star(4)), 3, star(4))
        self.assertTrue(verdict.is_certified)

    def test_fails_on_odd_cycle(self):
        G = anti_d_path(5, 1)
        verdict = is_normally_torsion_free(edge_ideal(G), 2, G)
        self.assertEqual(verdict.status, NtfStatus.FAILS_AT_K)
        self.assertEqual(verdict.k, 2)
        self.assertEqual(verdict.evidence["offending"], [[1, 2, 3, 4, 5]])
        self.assertIn("odd_walk", verdict.evidence)

    def test_power_without_graph(self):
        verdict = is_normally_torsion_free(power(ideal(2, "x1x2"), 2), 2)
        self.assertEqual(verdict.status, NtfStatus.TORSION_FREE_UP_TO_K)
        self.assertEqual(verdict.to_json()["status"], "torsion_free_up_to_K")

    def test_square_of_antipath_ideal(self):
        I = edge_ideal(anti_d_path(5, 1))
        verdict = is_normally_torsion_free(power(I, 2), 3)
        self.assertEqual(verdict.status, NtfStatus.TORSION_FREE_UP_TO_K)
        self.assertIsNone(verdict.k)
        self.assertIn((1, 2, 3, 4, 5), keys(verdict.chain.entry(1)))
        self.assertTrue(verdict.chain.is_constant)


class AntipathAssTheoremTests(unittest.TestCase):
    def test_maximal_ideal_branch(self):
        report = verify_antipath_ass_theorem(5, 1, 3)
        self.assertEqual(report.branch, "maximal-ideal")
        self.assertTrue(report.passed)
        self.assertEqual(sorted(report.witnesses), [2, 3])

        self.assertTrue(verify_antipath_ass_theorem(7, 2, 2).passed)

    def test_bipartite_branch(self):
        report = verify_antipath_ass_theorem(6, 2, 3)
        self.assertEqual(report.branch, "bipartite")
        self.assertTrue(report.passed)
        self.assertEqual(report.witnesses, {})

    def test_no_edges(self):
        with self.assertRaises(ValueError):
            verify_antipath_ass_theorem(2, 1, 2)


if __name__ == "__main__":
    unittest.main()
