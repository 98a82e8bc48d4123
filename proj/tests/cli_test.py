# Copyright 2026-present the qwalk authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""End-to-end checks of the qwalk binary: exit codes, JSON Lines, schemas.

Usage: cli_test.py <qwalk> <schema-dir>
"""

import json
import pathlib
import subprocess
import sys
import unittest

import jsonschema

QWALK = None
SCHEMAS = None


def run(*args, stdin=None):
    proc = subprocess.run([QWALK, *args], input=stdin, capture_output=True, text=True, timeout=120)
    return proc.returncode, proc.stdout, proc.stderr


def lines(stdout):
    return [json.loads(line) for line in stdout.splitlines() if line.strip()]


def load_schema(name):
    return json.loads((SCHEMAS / name).read_text())


class Gen(unittest.TestCase):
    def test_circulant(self):
        code, out, _ = run("gen", "circulant", "10", "1,4")
        self.assertEqual(code, 0)
        rows = out.split("\n")
        self.assertEqual(rows[0], "10")
        self.assertEqual(len([r for r in rows[1:] if r]), 20)

    def test_fixture_and_cycle(self):
        self.assertEqual(run("gen", "figure1")[1], "8\n0 1\n0 5\n1 2\n1 4\n2 3\n5 6\n6 7\n")
        self.assertEqual(run("gen", "cycle", "6")[1], "6\n0 1\n0 5\n1 2\n2 3\n3 4\n4 5\n")

    def test_random_is_seeded(self):
        a = run("gen", "random", "7", "--seed", "42")[1]
        b = run("gen", "random", "7", "--seed", "42")[1]
        self.assertEqual(a, b)

    def test_bad_family(self):
        self.assertEqual(run("gen", "dodecahedron")[0], 1)
        self.assertEqual(run("gen", "cycle")[0], 1)
        self.assertEqual(run("gen", "cycle", "x")[0], 1)


class Walk(unittest.TestCase):
    def setUp(self):
        self.schema = load_schema("walk.schema.json")

    def test_figure1(self):
        code, out, _ = run("walk", "figure1", "--kind", "b")
        self.assertEqual(code, 0)
        doc = json.loads(out)
        jsonschema.validate(doc, self.schema)
        self.assertEqual(doc["dimension"], 7)
        self.assertIn("-1/3", doc["U"]["entries"])
        self.assertIn("2/3", doc["U"]["entries"])

    def test_double_cover(self):
        code, out, _ = run("walk", "figure7", "--kind", "b", "--transform", "d")
        self.assertEqual(code, 0)
        doc = json.loads(out)
        jsonschema.validate(doc, self.schema)
        self.assertEqual(doc["dimension"], 32)

    def test_grover_swap(self):
        code, out, _ = run("walk", "k11", "--kind", "g")
        doc = json.loads(out)
        jsonschema.validate(doc, self.schema)
        self.assertEqual(doc["U"]["entries"], ["0", "1", "1", "0"])

    def test_stdin(self):
        code, out, _ = run("walk", "-", "--kind", "b", stdin="4\n0 1\n1 2\n2 3\n0 3\n")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["dimension"], 4)

    def test_errors(self):
        self.assertEqual(run("walk", "c5", "--kind", "b")[0], 1)
        self.assertEqual(run("walk", "-", "--kind", "b", stdin="3\n0 3\n")[0], 1)
        self.assertEqual(run("walk", "k22", "--kind", "x")[0], 1)
        self.assertEqual(run("walk", "k22", "--transform", "d")[0], 1)
        self.assertEqual(run("walk", "missing-file.txt")[0], 1)

    def test_pretty(self):
        code, out, _ = run("walk", "figure1", "--pretty")
        self.assertEqual(code, 0)
        self.assertIn("U (7x7)", out)


class Period(unittest.TestCase):
    def setUp(self):
        self.schema = load_schema("report.schema.json")

    def report(self, *args, stdin=None, expect=0):
        code, out, err = run("period", *args, stdin=stdin)
        self.assertEqual(code, expect, err)
        docs = lines(out)
        self.assertEqual(len(docs), 1)
        jsonschema.validate(docs[0], self.schema)
        return docs[0]

    def test_cayley_subdivision(self):
        gen = run("gen", "circulant", "10", "1,4")[1]
        r = self.report("-", "--kind", "b", "--transform", "s", stdin=gen)
        self.assertEqual(r["result"]["verdict"], "periodic")
        self.assertEqual(r["result"]["period"], 20)
        self.assertEqual(r["result"]["phases"]["period"], 20)
        self.assertEqual(r["transform"], "subdivide")

    def test_figure1_nonperiodic(self):
        r = self.report("figure1", "--kind", "b", expect=3)
        self.assertEqual(r["result"]["verdict"], "non-periodic")
        self.assertEqual(r["result"]["trace"]["failing_k"], 1)
        self.assertEqual(r["result"]["trace"]["failing_trace"], "-1/3")

    def test_grover_k22(self):
        r = self.report("k22", "--kind", "g")
        self.assertEqual(r["result"]["period"], 4)
        self.assertEqual(r["dimension"], 8)

    def test_double_cover_roots(self):
        r = self.report("figure7", "--transform", "d")
        roots = [x["value"] for x in r["result"]["spectral"]["roots"]]
        self.assertEqual(roots, ["0", "6-2*sqrt(5)", "4", "6+2*sqrt(5)", "16"])
        self.assertEqual(r["result"]["period"], r["result"]["phases"]["period"])

    def test_inconclusive_under_cap(self):
        r = self.report("c10", "--methods", "oracle", "--cap", "2", expect=4)
        self.assertEqual(r["result"]["verdict"], "inconclusive")
        self.assertIsNone(r["result"]["spectral"])

    def test_methods_subset(self):
        r = self.report("heawood", "--methods", "spectral,trace", expect=3)
        self.assertIsNone(r["result"]["oracle"])
        self.assertIsNone(r["result"]["phases"])

    def test_timing_is_opt_in(self):
        self.assertNotIn("seconds", self.report("k22"))
        self.assertIn("seconds", self.report("k22", "--timing"))

    def test_output_is_deterministic(self):
        self.assertEqual(run("period", "heawood")[1], run("period", "heawood")[1])

    def test_usage_errors(self):
        self.assertEqual(run("period", "k22", "--methods", "oracle,nope")[0], 1)
        self.assertEqual(run("period", "k22", "--cap", "0")[0], 1)
        self.assertEqual(run("period")[0], 1)
        self.assertEqual(run()[0], 1)
        self.assertEqual(run("period", "-", stdin="4\n0 1\n2 3\n")[0], 1)

    def test_pretty(self):
        code, out, _ = run("period", "figure1", "--pretty")
        self.assertEqual(code, 3)
        self.assertIn("non-periodic", out)


class Scan(unittest.TestCase):
    def test_scan_nine(self):
        code, out, err = run("scan", "--max-edges", "9")
        self.assertEqual(code, 0, err)
        docs = lines(out)
        self.assertEqual(len(docs), 15)
        schema = load_schema("report.schema.json")
        for d in docs:
            jsonschema.validate(d, schema)
            self.assertFalse(d["result"]["disagreement"])
        self.assertTrue(any(d["input"].startswith("2,2,2,2:") and d["result"]["period"] == 2 for d in docs))

    def test_scan_full_matches_filtered(self):
        fast = [(d["input"], d["result"]["verdict"]) for d in lines(run("scan", "--max-edges", "12")[1])]
        full = [(d["input"], d["result"]["verdict"]) for d in lines(run("scan", "--max-edges", "12", "--full")[1])]
        self.assertEqual(fast, full)

    def test_bounds(self):
        self.assertEqual(run("scan", "--max-edges", "13")[0], 1)
        self.assertEqual(run("scan", "--max-edges", "0")[0], 1)
        self.assertEqual(run("scan")[0], 1)


class Verify(unittest.TestCase):
    def test_fixtures(self):
        for name in ("figure4a", "k11", "petersen", "heawood"):
            code, out, _ = run("verify", name)
            self.assertEqual(code, 0, name)
            self.assertTrue(json.loads(out)["passed"])

    def test_random_seed_42(self):
        gen = run("gen", "random", "8", "--seed", "42")[1]
        code, out, _ = run("verify", "-", stdin=gen)
        self.assertEqual(code, 0)
        self.assertTrue(json.loads(out)["grover_equals_subdivision"])

    def test_disconnected(self):
        self.assertEqual(run("verify", "-", stdin="4\n0 1\n2 3\n")[0], 1)


if __name__ == "__main__":
    QWALK = sys.argv.pop(1)
    SCHEMAS = pathlib.Path(sys.argv.pop(1))
    unittest.main(verbosity=2)
