import unittest

from edgepowers.families import FamilyDescriptor
from edgepowers.graph import complement, complete_graph, cycle_graph
from edgepowers.monomial import Monomial
from edgepowers.quotients import lq_certificate
from edgepowers.utils import MAX_TAYLOR_GENERATORS, GuardError, NotLinearQuotients
from edgepowers.verification.audits import (
    AGREEMENT,
    DISCREPANCY,
    audit_power_betti_corollaries,
    audit_remark_closed_form,
)
from edgepowers.verification.order_search import linear_quotients_order
from edgepowers.verification.report import CheckStatus, check, guarded, run_instances, skipped
from edgepowers.verification.suites import SweepConfig, family_checks, run_suite


def small_config(**overrides) -> SweepConfig:
    config = SweepConfig(
        n_max=6, d_max=2, k_max=2, t_max=2, lexseg_n_max=4, K=2,
        pd_n_max=7, pd_d_max=2, dichotomy_n_max=6, graphs_n_max=4,
        oracle_max_gens=10, core_instances=20,
    )
    for name, value in overrides.items():
        setattr(config, name, value)
    return config


class AuditTests(unittest.TestCase):
    def test_remark_discrepancy(self):
        report = audit_remark_closed_form(3, 2)
        first = report.rows[0]
        self.assertEqual((first.claimed, first.actual, first.oracle), (4, 3, 3))
        self.assertEqual(report.verdict, DISCREPANCY)
        self.assertTrue(report.consistent)

    def test_remark_agreement(self):
        report = audit_remark_closed_form(2, 1)
        self.assertEqual(report.verdict, AGREEMENT)

    def test_corollary_readings(self):
        report = audit_power_betti_corollaries(FamilyDescriptor.star(3), 2)
        zeroth = {row.reading: row for row in report.rows if row.i == 0}
        self.assertEqual(zeroth["over G(I^t)"].claimed, 6)
        self.assertEqual(zeroth["over G(I)"].claimed, 4)
        self.assertEqual(zeroth["over G(I)"].actual, 3)
        self.assertEqual(report.verdict, DISCREPANCY)
        self.assertTrue(report.consistent)

    def test_corollary_first_power(self):
        report = audit_power_betti_corollaries(FamilyDescriptor.star(3), 1)
        self.assertEqual(report.verdict, AGREEMENT)
        self.assertEqual([row.actual for row in report.rows], [2, 1, 0])

    def test_corollary_needs_lexsegment(self):
        with self.assertRaises(ValueError):
            audit_power_betti_corollaries(FamilyDescriptor.anti_d_path(7, 2), 2)


class OrderSearchTests(unittest.TestCase):
    def test_triangle(self):
        order = linear_quotients_order(complete_graph(3))
        self.assertEqual(len(order), 3)
        self.assertEqual(len(lq_certificate(order).sets), 3)

    def test_complement_of_square(self):
        # two disjoint edges: the complement of C4 is not chordal
        self.assertIsNone(linear_quotients_order(complement(cycle_graph(4))))

    def test_guard(self):
        with self.assertRaises(GuardError):
            linear_quotients_order(complete_graph(7))


class ReportTests(unittest.TestCase):
    def test_guarded(self):
        def guard():
            raise GuardError("generators", 1, 2)

        def broken():
            raise NotLinearQuotients(2, [Monomial.parse("x1x2", 2)])

        self.assertEqual(guarded("s", "c", "i", guard)[0].status, CheckStatus.SKIPPED)
        self.assertEqual(guarded("s", "c", "i", broken)[0].status, CheckStatus.FAIL)

    def test_run_instances_keeps_order(self):
        results = run_instances(lambda x: [check("s", "c", str(x), x % 2 == 0)], [0, 1, 2, 3], "numbers")
        self.assertEqual([r.instance for r in results], ["0", "1", "2", "3"])
        self.assertEqual([r.status for r in results][:2], [CheckStatus.PASS, CheckStatus.FAIL])
        self.assertEqual(skipped("s", "c", "i", "too big").detail, {"reason": "too big"})


class SuiteTests(unittest.TestCase):
    def assertSuitePasses(self, name, config):
        report = run_suite(name, config)
        self.assertTrue(report.results)
        self.assertTrue(report.passed, [r.to_json() for r in report.failures][:3])
        return report

    def test_core(self):
        report = self.assertSuitePasses("core", small_config())
        self.assertEqual(len(report.results), 20 * 6)

    def test_graphs(self):
        self.assertSuitePasses("graphs", small_config())

    def test_lexseg(self):
        self.assertSuitePasses("lexseg", small_config())

    def test_antipath(self):
        self.assertSuitePasses("antipath", small_config())

    def test_audits(self):
        report = self.assertSuitePasses("audits", small_config())
        self.assertEqual(report.count(CheckStatus.DOCUMENTED_DISCREPANCY), 2)

    def test_oracle_default_covers_taylor_bound(self):
        self.assertEqual(SweepConfig().oracle_max_gens, MAX_TAYLOR_GENERATORS)
        family = FamilyDescriptor.lexseg_init(Monomial.parse("x4x7", 7))
        results = {r.name: r for r in family_checks(family, 1, SweepConfig(), "lexseg")}
        self.assertEqual(results["betti_oracle"].status, CheckStatus.PASS)
        self.assertEqual(results["linear_resolution"].status, CheckStatus.PASS)

    def test_antipath_order_independence(self):
        family = FamilyDescriptor.anti_d_path(7, 2)
        for k in (1, 2):
            results = {r.name: r for r in family_checks(family, k, small_config(), "antipath")}
            self.assertIn(results["order_independence"].status, (CheckStatus.PASS, CheckStatus.SKIPPED))

        report = run_suite("antipath", small_config())
        self.assertIn("order_independence", {r.name for r in report.results})

    def test_audits_on_final_lexsegment(self):
        family = FamilyDescriptor.lexseg_final(Monomial.parse("x2x4", 4))
        report = run_suite("audits", small_config(audit_family=family, audit_t=1))
        self.assertEqual(len(report.results), 1)
        self.assertTrue(report.passed)


if __name__ == "__main__":
    unittest.main()
