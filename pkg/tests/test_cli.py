import json
import os
import tempfile
import unittest

from pydend.cli import EXIT_FAILED, EXIT_INPUT, EXIT_OK, build_parser, main, parse_config


class CliTestCase(unittest.TestCase):
    def run_cli(self, *args):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "out")
            status = main(list(args) + ["-q", "-o", path])
            text = None
            if os.path.exists(path):
                with open(path, encoding="utf-8", newline="") as f:
                    text = f.read()
        return status, text

    def run_json(self, *args):
        status, text = self.run_cli(*args)
        return status, json.loads(text)


class TestParser(unittest.TestCase):
    def test_defaults(self):
        config, _ = parse_config(["dims"])
        self.assertEqual(config.command, "dims")
        self.assertEqual((config.p, config.g, config.d, config.seed), (2, 1, 3, 0))
        self.assertEqual(config.format, "json")

    def test_argparse_errors(self):
        with self.assertRaises(SystemExit) as ctx:
            build_parser().parse_args(["verify", "--suite", "jordan"])
        self.assertEqual(ctx.exception.code, 2)

    def test_invalid_values(self):
        self.assertEqual(main(["dims", "-p", "4", "-q"]), EXIT_INPUT)
        self.assertEqual(main(["dims", "--seed", "-1", "-q"]), EXIT_INPUT)
        self.assertEqual(main(["dims", "-d", "0", "-q"]), EXIT_INPUT)


class TestVerify(CliTestCase):
    def test_free_dendriform(self):
        status, data = self.run_json("verify", "--suite", "dendriform", "--free", "-p", "3", "-g", "1", "-d", "5")
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(data["verdict"], "pass")
        self.assertEqual(data["structure"], "Dend(g=1) over F_3")
        self.assertEqual([r["law"] for r in data["reports"]], ["dendriform"])
        self.assertGreater(data["reports"][0]["checked"], 0)

    def test_matrix_algebra(self):
        status, data = self.run_json(
            "verify", "--suite", "restricted-prelie", "--algebra", "m2f2", "--pmap", "frobenius", "--samples", "20"
        )
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(data["pmap"], "frobenius")

    def test_builtin_algebra(self):
        status, data = self.run_json(
            "verify", "--suite", "restricted-lie", "--algebra", "m3", "-p", "3",
            "--pmap", "frobenius", "--samples", "20",
        )
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(data["structure"], "trivial-splitting structure on built-in m3 over F_3")

    def test_rota_baxter_fixture(self):
        status, data = self.run_json("verify", "--algebra", "f2x2_rb", "--pmap", "star-power", "--samples", "10")
        self.assertEqual(status, EXIT_OK)
        self.assertIn("restricted-prelie", [r["law"] for r in data["reports"]])

    def test_broken_tables(self):
        status, data = self.run_json("verify", "--suite", "dendriform", "--algebra", "broken_dend")
        self.assertEqual(status, EXIT_FAILED)
        self.assertEqual(data["verdict"], "fail")
        self.assertGreater(data["reports"][0]["violations"], 0)

    def test_gate(self):
        status, data = self.run_json("verify", "--algebra", "f3x2_id")
        self.assertEqual(status, EXIT_FAILED)
        self.assertEqual(data["law"], "rota-baxter")
        self.assertEqual(data["verdict"], "fail")

    def test_unavailable_pmap(self):
        status, _ = self.run_cli("verify", "--free", "--suite", "restricted-prelie", "--pmap", "frobenius")
        self.assertEqual(status, EXIT_INPUT)

    def test_suite_not_applicable(self):
        status, _ = self.run_cli("verify", "--suite", "dendriform", "--algebra", "prelie2_f2")
        self.assertEqual(status, EXIT_INPUT)

    def test_missing_file(self):
        status, text = self.run_cli("verify", "--algebra", "/nonexistent/algebra.json")
        self.assertEqual(status, EXIT_INPUT)
        self.assertIsNone(text)

    def test_csv(self):
        status, text = self.run_cli("verify", "--suite", "dendriform", "--free", "-d", "3", "--format", "csv")
        self.assertEqual(status, EXIT_OK)
        lines = text.splitlines()
        self.assertEqual(lines[0], "law,verdict,checked,violations,seed")
        self.assertTrue(lines[1].startswith("dendriform,pass,"))
        self.assertTrue(lines[1].endswith(",0,0"))

    def test_reproducible(self):
        args = ("verify", "--free", "-p", "2", "-g", "1", "-d", "3", "--random", "10", "--seed", "7")
        first = self.run_cli(*args)
        second = self.run_cli(*args)
        self.assertEqual(first, second)
        self.assertEqual(first[0], EXIT_OK)
        self.assertEqual(json.loads(first[1])["seed"], 7)


class TestEnvelope(CliTestCase):
    def test_abelian(self):
        status, data = self.run_json("envelope", "--algebra", "abelian1_f2", "-d", "2")
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(data["algebra"], "U")
        self.assertEqual([row["quotient_dim"] for row in data["rows"]], [1, 2])

    def test_restricted(self):
        status, data = self.run_json(
            "envelope", "--restricted", "--algebra", "abelian1_f2_pmapx", "-d", "2", "--audit", "5"
        )
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(data["algebra"], "U_p")
        self.assertEqual([row["quotient_dim"] for row in data["rows"]], [0, 0])
        self.assertEqual(data["audit"]["checked"], 5)
        self.assertEqual(data["audit"]["failures"], 0)

    def test_restricted_without_pmap(self):
        status, _ = self.run_cli("envelope", "--restricted", "--algebra", "abelian1_f2")
        self.assertEqual(status, EXIT_INPUT)

    def test_associative_file(self):
        status, _ = self.run_cli("envelope", "--algebra", "f2x2")
        self.assertEqual(status, EXIT_INPUT)

    def test_csv(self):
        status, text = self.run_cli("envelope", "--algebra", "abelian1_f2", "-d", "2", "--format", "csv")
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(
            text.splitlines(),
            ["n,free_dim,cumulative_free,ideal_rank,quotient_dim,stabilized", "1,1,1,0,1,", "2,2,3,1,2,"],
        )


class TestSearch(CliTestCase):
    def test_rota_baxter(self):
        status, data = self.run_json("search", "--algebra", "f2x2")
        self.assertEqual(status, EXIT_OK)
        self.assertEqual([hit["matrix"] for hit in data["solutions"]], [[0, 0, 0, 0], [0, 0, 1, 0]])
        self.assertEqual(data["mode"], "exhaustive")

    def test_aybe_csv(self):
        status, text = self.run_cli("search", "--kind", "aybe", "--algebra", "f2x2", "--format", "csv")
        self.assertEqual(status, EXIT_OK)
        lines = text.splitlines()
        self.assertEqual(lines[0], "summands")
        self.assertEqual(len(lines), 11)

    def test_empty_algebra(self):
        status, data = self.run_json("search", "--algebra", "zero_f2")
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(data["solutions"], [])

    def test_upper_triangular(self):
        status, data = self.run_json("search", "--algebra", "t2f2")
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(data["candidates"], 512)
        self.assertIn([0, 0, 0, 0, 0, 1, 0, 0, 0], [hit["matrix"] for hit in data["solutions"]])

    def test_random_sample(self):
        status, data = self.run_json("search", "--algebra", "m2f3", "--random", "50", "--seed", "1")
        self.assertEqual(status, EXIT_OK)
        self.assertEqual((data["mode"], data["seed"], data["examined"]), ("random", 1, 50))
        self.assertEqual(data["candidates"], 3**16)

    def test_cap(self):
        status, _ = self.run_cli("search", "--algebra", "m2f2", "--max-candidates", "100")
        self.assertEqual(status, EXIT_INPUT)


class TestDims(CliTestCase):
    def test_one_generator(self):
        status, data = self.run_json("dims", "-g", "1", "-d", "4")
        self.assertEqual(status, EXIT_OK)
        self.assertEqual([row["free_dim"] for row in data["rows"]], [1, 2, 5, 14])
        self.assertEqual(data["rows"][-1]["cumulative_free"], 22)

    def test_csv(self):
        status, text = self.run_cli("dims", "-g", "2", "-d", "3", "--format", "csv")
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(text, "n,free_dim,cumulative_free\n1,2,2\n2,8,10\n3,40,50\n")
