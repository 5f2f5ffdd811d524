import json
import os
import tempfile
import unittest

from edgepowers.cli import main


class CliTests(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.output = os.path.join(self.tmp.name, "out.json")

    def tearDown(self):
        self.tmp.cleanup()

    def run_cli(self, *argv):
        return main(["--output", self.output, *argv])

    def load(self):
        with open(self.output, "r") as f:
            return json.load(f)

    def test_family(self):
        self.assertEqual(self.run_cli("family", "anti_d_path", "--n", "7", "--d", "2"), 0)
        data = self.load()
        self.assertEqual(data["family"], "anti_d_path(n=7,d=2)")
        self.assertEqual(len(data["generators"]), 10)

    def test_power(self):
        self.assertEqual(self.run_cli("power", "star", "--n", "3", "--t", "2"), 0)
        self.assertEqual(self.load()["count"], 3)

    def test_betti_both(self):
        self.assertEqual(self.run_cli("betti", "anti_d_path", "--n", "7", "--d", "2", "--method", "both"), 0)
        data = self.load()
        self.assertTrue(data["agree"])
        self.assertEqual(data["betti"]["total"], {"0": 10, "1": 20, "2": 15, "3": 4})

    def test_betti_csv(self):
        code = main(["--format", "csv", "--output", self.output, "betti", "star", "--n", "4"])
        self.assertEqual(code, 0)
        with open(self.output, "r") as f:
            self.assertEqual(f.readline().strip(), "i,j,beta")

    def test_not_linear_quotients(self):
        path = os.path.join(self.tmp.name, "ideal.json")
        with open(path, "w") as f:
            json.dump({"n": 4, "gens": [[1, 1, 0, 0], [0, 0, 1, 1]]}, f)
        self.assertEqual(self.run_cli("betti", "json", "--path", path), 1)

    def test_witness(self):
        self.assertEqual(self.run_cli("witness", "--n", "5", "--d", "1", "--k", "2"), 0)
        data = self.load()
        self.assertEqual(data["witness"], "x1x3x5")
        self.assertEqual(data["checks"], {"outside": True, "socle": True})

        self.assertEqual(self.run_cli("witness", "--n", "6", "--d", "2", "--k", "2"), 2)

    def test_ntf(self):
        self.assertEqual(self.run_cli("ntf", "anti_d_path", "--n", "5", "--d", "1", "--K", "2"), 0)
        data = self.load()
        self.assertEqual(data["status"], "fails_at_k")
        self.assertEqual(data["k"], 2)

    def test_ass(self):
        self.assertEqual(self.run_cli("ass", "anti_d_path", "--n", "5", "--d", "1", "--K", "3"), 0)
        data = self.load()
        self.assertIn([1, 2, 3, 4, 5], data["chain"]["2"])
        self.assertNotIn([1, 2, 3, 4, 5], data["chain"]["1"])
        self.assertTrue(data["ascending"])
        self.assertEqual(data["stabilization"], 2)

    def test_verify_audits(self):
        self.assertEqual(self.run_cli("verify", "audits", "--family", "star", "--n", "3", "--t", "2"), 0)
        data = self.load()
        self.assertTrue(data["passed"])
        self.assertEqual(data["summary"]["documented-discrepancy"], 2)

    def test_bad_arguments(self):
        with self.assertRaises(SystemExit):
            main(["betti", "no_such_family"])


if __name__ == "__main__":
    unittest.main()
