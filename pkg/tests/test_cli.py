#!/usr/bin/env python

"""Tests for the `poincaredeg` command line."""

import json
import os
import unittest

from click.testing import CliRunner

from poincaredeg import cli
from poincaredeg.complex import rank_one_complex, serialize_complex
from poincaredeg.homotopy_tables import builtin_table, serialize_table
from poincaredeg.reports import report_from_document
from poincaredeg.utils import write_document


class TestCommandLine(unittest.TestCase):
  """The console script."""

  def setUp(self):
    self.runner = CliRunner()

  def invoke(self, *args):
    return self.runner.invoke(cli.main, list(args))

  def test_help(self):
    result = self.invoke("--help")
    self.assertEqual(result.exit_code, 0)
    for command in ("check", "degrees", "equiv", "classify", "tables", "config-template"):
      self.assertIn(command, result.output)

  def test_check_help_lists_complex_forms(self):
    result = self.invoke("check", "--help")
    self.assertEqual(result.exit_code, 0)
    for form in ("product:K", "zk:K", "rank1:LOW/HIGH"):
      self.assertIn(form, result.output)

  def test_check_witness(self):
    result = self.invoke("check", "--n", "7", "--x", "product:1", "--y", "zk:1", "--d", "2")
    self.assertEqual(result.exit_code, 0, result.output)
    self.assertIn("d=2: Witness", result.output)
    self.assertIn("A = [[1]]", result.output)

  def test_check_certificate(self):
    result = self.invoke("check", "--n", "7", "--x", "product:1", "--y", "zk:1", "--d", "1")
    self.assertEqual(result.exit_code, 0)
    self.assertIn("d=1: NoSolutionProven (mod 2)", result.output)

  def test_check_json(self):
    result = self.invoke("check", "--n", "4", "--x", "rank1:1/1", "--y", "rank1:1/1", "--d", "3", "--json")
    self.assertEqual(result.exit_code, 0)
    doc = json.loads(result.output)
    self.assertEqual(doc["d"], 3)
    self.assertEqual(doc["verdict"], "witness")
    self.assertEqual(doc["witness"]["A"], [[3]])

  def test_check_within_bounds_exits_2(self):
    result = self.invoke("check", "--n", "7", "--x", "product:2", "--y", "product:2", "--d", "1", "--box", "0")
    self.assertEqual(result.exit_code, 2)
    self.assertIn("NoSolutionWithinBounds (box 0)", result.output)

  def test_check_missing_degree(self):
    result = self.invoke("check", "--n", "7", "--x", "product:1", "--y", "zk:1")
    self.assertEqual(result.exit_code, 1)

  def test_missing_complex(self):
    result = self.invoke("check", "--n", "7", "--x", "product:1", "--d", "1")
    self.assertEqual(result.exit_code, 1)
    self.assertIn("--y", result.output)

  def test_unsupported_n(self):
    result = self.invoke("check", "--n", "9", "--x", "product:1", "--y", "product:1", "--d", "1")
    self.assertEqual(result.exit_code, 1)
    self.assertIn("Error: No built-in table for n=9", result.output)

  def test_degrees(self):
    result = self.invoke("degrees", "--n", "4", "--x", "rank1:1/1", "--y", "rank1:1/1", "--range", "8", "--compare")
    self.assertEqual(result.exit_code, 0, result.output)
    self.assertIn("CONJECTURE: d = 0, 1, 3 (mod 4)", result.output)
    self.assertIn("closed form: agrees", result.output)
    self.assertIn("members: [-8, -7, -5, -4, -3, -1, 0, 1, 3, 4, 5, 7, 8]", result.output)

  def test_degrees_without_closed_form(self):
    result = self.invoke("degrees", "--n", "6", "--x", "rank1:1/", "--y", "product:1", "--range", "2", "--compare")
    self.assertEqual(result.exit_code, 0, result.output)
    self.assertIn("closed form: none known for this pair", result.output)

  def test_degrees_json_round_trip(self):
    result = self.invoke("degrees", "--n", "7", "--x", "product:1", "--y", "zk:1", "--range", "3", "--json")
    self.assertEqual(result.exit_code, 0)
    rep = report_from_document(json.loads(result.output))
    self.assertEqual(rep.members, [-2, 0, 2])
    self.assertEqual(str(rep.progression), "d = 0 (mod 2)")

  def test_degrees_undecided_exits_2(self):
    result = self.invoke("degrees", "--n", "7", "--x", "product:2", "--y", "product:2", "--range", "1", "--box", "0")
    self.assertEqual(result.exit_code, 2)
    self.assertNotIn("CONJECTURE", result.output)

  def test_deterministic_output(self):
    args = ("degrees", "--n", "5", "--x", "product:1", "--y", "rank1:1,0/3", "--range", "8")
    first, second = self.invoke(*args), self.invoke(*args)
    self.assertEqual(first.exit_code, 0)
    self.assertEqual(first.output, second.output)
    self.assertIn("CONJECTURE: d = 0 (mod 8)", first.output)

  def test_equiv(self):
    result = self.invoke("equiv", "--n", "7", "--x", "product:1", "--y", "zk:1")
    self.assertEqual(result.exit_code, 0)
    self.assertEqual(result.output.strip(), "no")
    result = self.invoke("equiv", "--n", "4", "--x", "rank1:5/0", "--y", "rank1:7/0")
    self.assertEqual(result.exit_code, 0)
    self.assertTrue(result.output.startswith("yes"))

  def test_equiv_undecided_exits_2(self):
    result = self.invoke("equiv", "--n", "7", "--x", "product:2", "--y", "product:2", "--box", "0")
    self.assertEqual(result.exit_code, 2)
    self.assertIn("Undecided", result.output)

  def test_classify(self):
    result = self.invoke("classify", "--n", "7", "--rank", "2")
    self.assertEqual(result.exit_code, 0, result.output)
    self.assertTrue(result.output.startswith("2 classes"))
    self.assertIn("[1] size 2: n=7 k=2 low=[0, 0] high=[0, 0] m=0", result.output)

  def test_classify_json(self):
    result = self.invoke("classify", "--n", "6", "--rank", "1", "--json")
    doc = json.loads(result.output)
    self.assertEqual(len(doc), 1)
    self.assertEqual(doc[0]["size"], 2)

  def test_tables(self):
    result = self.invoke("tables", "--n", "5")
    self.assertEqual(result.exit_code, 0)
    self.assertIn("moduli M_A=4 M_C=2 M_D=24", result.output)
    result = self.invoke("tables", "--json")
    self.assertEqual([t["n"] for t in json.loads(result.output)], [4, 5, 6, 7])

  def test_documents_and_config(self):
    t = builtin_table(4)
    with self.runner.isolated_filesystem():
      write_document("table.json", serialize_table(t))
      write_document("x.json", serialize_complex(rank_one_complex(t, [1], [1])))
      result = self.invoke("check", "--x", "x.json", "--y", "x.json", "--d", "2")
      self.assertEqual(result.exit_code, 0, result.output)
      self.assertIn("NoSolutionProven (mod 12)", result.output)
      result = self.invoke("check", "--table", "table.json", "--x", "x.json", "--y", "product:1", "--d", "12")
      self.assertIn("Witness", result.output)

      write_document("config.json", {"moduli": [2]})
      result = self.invoke("--config", "config.json", "check", "--x", "x.json", "--y", "x.json", "--d", "2")
      self.assertEqual(result.exit_code, 0)
      self.assertIn("NoSolutionProven (factorization)", result.output)

  def test_bad_document(self):
    with self.runner.isolated_filesystem():
      write_document("x.json", {"n": 4, "rank": 1, "first_low": [[1, 2]], "first_high": [[0]]})
      result = self.invoke("check", "--x", "x.json", "--y", "x.json", "--d", "1")
      self.assertEqual(result.exit_code, 1)
      self.assertIn("Error:", result.output)

  def test_config_template(self):
    with self.runner.isolated_filesystem():
      result = self.invoke("config-template", "cfg.json")
      self.assertEqual(result.exit_code, 0)
      self.assertTrue(os.path.exists("cfg.json"))
      with open("cfg.json") as f:
        self.assertIn("max_residue_classes", json.load(f))


if __name__ == "__main__":
  unittest.main()
