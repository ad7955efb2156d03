# Copyright 2026 The catgadget Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""End-to-end checks of the command-line tool: exit codes, example values,
reproducibility, and conformance of every JSON output to its schema."""

import json
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

CLI = os.environ["CATGADGET_CLI"]
SCHEMAS = os.environ["CATGADGET_SCHEMAS"]


def load_schema(name):
    with open(os.path.join(SCHEMAS, name + ".schema.json")) as f:
        return json.load(f)


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True, timeout=300)


class CliTest(unittest.TestCase):
    def ok_json(self, schema, *args):
        proc = run(*args)
        self.assertEqual(proc.returncode, 0, proc.stderr)
        doc = json.loads(proc.stdout)
        jsonschema.validate(doc, load_schema(schema))
        return doc

    def error(self, code, *args):
        proc = run(*args)
        self.assertEqual(proc.returncode, code, proc.stdout + proc.stderr)
        doc = json.loads(proc.stderr.strip().splitlines()[-1])
        jsonschema.validate(doc, load_schema("error"))
        return doc

    def test_schemas_are_valid(self):
        for name in os.listdir(SCHEMAS):
            with open(os.path.join(SCHEMAS, name)) as f:
                jsonschema.Draft202012Validator.check_schema(json.load(f))

    def test_cat_families(self):
        doc = self.ok_json("cat", "cat", "--m", "3")
        self.assertEqual(doc["num_qubits"], 3)
        self.assertAlmostEqual(doc["amplitudes"][3][1], 2 ** -1.5, places=12)
        for fam in ("original", "xmeas", "zmeas"):
            self.ok_json("cat", "cat", "--m", "4", "--family", fam)

    def test_rom_cs(self):
        doc = self.ok_json("rom", "rom", "--state", "CS")
        self.assertAlmostEqual(doc["value"], 2.2, delta=1e-4)

    def test_rom_amplitude_file(self):
        with tempfile.NamedTemporaryFile("w", suffix=".txt", delete=False) as f:
            f.write("# |T>\n1 0\n0.7071067811865476 0.7071067811865476\n")
            path = f.name
        try:
            doc = self.ok_json("rom", "rom", "--state", path)
            self.assertAlmostEqual(doc["value"], 2 ** 0.5, delta=1e-6)
        finally:
            os.unlink(path)

    def test_mw_starcat(self):
        doc = self.ok_json("mw", "mw", "--state", "STARCAT5")
        self.assertAlmostEqual(doc["value"], 0.5, delta=1e-10)
        self.assertEqual(len(doc["purities"]), 5)

    def test_rank(self):
        self.assertEqual(self.ok_json("rank", "rank", "--state", "T")["rank"], 2)
        doc = self.ok_json("rank", "rank", "--state", "T", "--rmax", "1")
        self.assertFalse(doc["found"])
        self.assertIsNone(doc["rank"])

    def test_gadget_verify_all_outcomes(self):
        doc = self.ok_json("gadget_verify", "gadget", "verify", "--m", "2", "--all-outcomes")
        self.assertEqual(len(doc["rows"]), 4)
        self.assertTrue(all(r["min_fidelity"] >= 1 - 1e-9 for r in doc["rows"]))
        self.assertEqual(doc["convention"], "as_written")

    def test_gadget_verify_wrong_convention_is_verification_failure(self):
        proc = run("gadget", "verify", "--m", "2", "--all-outcomes", "--convention", "conjugate_transpose")
        self.assertEqual(proc.returncode, 2)
        jsonschema.validate(json.loads(proc.stdout), load_schema("gadget_verify"))
        jsonschema.validate(json.loads(proc.stderr), load_schema("error"))

    def test_gadget_verify_sampled_is_reproducible(self):
        a = self.ok_json("gadget_verify", "gadget", "verify", "--m", "3", "--seed", "5", "--skip-nonlocal")
        b = self.ok_json("gadget_verify", "gadget", "verify", "--m", "3", "--seed", "5", "--skip-nonlocal")
        self.assertEqual(a, b)

    def test_gadget_stats(self):
        doc = self.ok_json("gadget_stats", "gadget", "stats", "--m", "3")
        self.assertEqual(doc["mean_correction_cz"], "3/2")
        self.assertEqual(doc["variant_count_formula"], 1536)

    def test_otoc_json_and_csv(self):
        args = ["otoc", "--n", "5", "--gate-set", "clifford", "--blocks", "6", "--layers", "2", "--seed", "3"]
        a = self.ok_json("otoc", *args)
        b = self.ok_json("otoc", *args)
        self.assertEqual(a, b)
        self.assertEqual(len(a["points"]), 7)
        with tempfile.TemporaryDirectory() as d:
            out = os.path.join(d, "series.csv")
            proc = run(*args, "--out", out)
            self.assertEqual(proc.returncode, 0, proc.stderr)
            with open(out) as f:
                lines = f.read().splitlines()
            self.assertEqual(lines[0], "tau,re,im")
            self.assertEqual(len(lines), 8)

    def test_otoc_injections_and_seeds(self):
        doc = self.ok_json("otoc", "otoc", "--n", "6", "--gate-set", "nonentangling_clifford", "--blocks", "8",
                           "--layers", "2", "--inject", "4", "--inject-upto", "5", "--seeds", "1,2,3")
        self.assertEqual(len(doc), 3)
        for run_doc in doc:
            self.assertEqual(len(run_doc["schedule"]), 4)
            self.assertTrue(all(1 <= s["block"] <= 5 for s in run_doc["schedule"]))

    def test_match_planted_and_file(self):
        with tempfile.TemporaryDirectory() as d:
            host = os.path.join(d, "host.txt")
            doc = self.ok_json("match", "match", "--plant", "4", "--n", "6", "--seed", "7", "--save-host", host)
            self.assertTrue(doc["recall_ok"])
            self.assertEqual(doc["count"], 4)
            again = self.ok_json("match", "match", "--host", host)
            self.assertEqual(again["matches"], doc["matches"])
            self.assertEqual(again["cost_estimate"]["pattern_factor"], 1953125)

    def test_validation_errors(self):
        self.assertEqual(self.error(1, "cat", "--m", "0")["error"]["kind"], "validation")
        self.error(1, "rom", "--state", "NOPE")
        self.error(1, "rom", "--state", "CAT5")
        self.error(1, "otoc", "--gate-set", "bogus")
        self.error(1, "match", "--host", "/nonexistent/file")
        self.assertEqual(self.error(1, "cat")["error"]["kind"], "usage")
        self.assertEqual(self.error(1, "frobnicate")["error"]["kind"], "usage")


if __name__ == "__main__":
    unittest.main(argv=[sys.argv[0], "-v"])
