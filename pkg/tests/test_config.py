#!/usr/bin/env python

"""Tests for `poincaredeg.config` and `poincaredeg.utils`."""

import json
import os
import tempfile
import unittest
from unittest import mock

from poincaredeg.config import SolverParams, create_config_file, parse_moduli, solver_config
from poincaredeg.utils import dump_document, load_document, shell, signed_divisors


class TestSolverParams(unittest.TestCase):
  """Validation of search parameters."""

  def test_defaults(self):
    params = SolverParams()
    self.assertIsNone(params.moduli)
    self.assertIsNone(params.box)
    self.assertEqual(params.max_residue_classes, 10 ** 6)
    self.assertEqual(params.max_modulus, 48)
    self.assertEqual(params.jobs, 1)

  def test_rejects_bad_values(self):
    for kwargs in ({"box": -1}, {"moduli": ()}, {"moduli": (2, 0)}, {"max_residue_classes": 0},
                   {"max_modulus": 0}, {"jobs": 0}):
      with self.assertRaises(ValueError, msg=repr(kwargs)):
        SolverParams(**kwargs)

  def test_with_overrides_skips_none(self):
    params = SolverParams(box=3).with_overrides(box=None, jobs=2)
    self.assertEqual((params.box, params.jobs), (3, 2))

  def test_parse_moduli(self):
    self.assertEqual(parse_moduli("2, 4,12"), (2, 4, 12))
    self.assertEqual(parse_moduli([3, 5]), (3, 5))
    self.assertIsNone(parse_moduli(""))
    with self.assertRaises(ValueError):
      parse_moduli("2,x")


class TestSolverConfig(unittest.TestCase):
  """Where parameters come from."""

  def setUp(self):
    self.tmp = tempfile.TemporaryDirectory()
    patcher = mock.patch("poincaredeg.config.load_dotenv")
    patcher.start()
    self.addCleanup(patcher.stop)

  def tearDown(self):
    self.tmp.cleanup()

  def path(self, name):
    return os.path.join(self.tmp.name, name)

  def test_explicit_arguments(self):
    with mock.patch.dict(os.environ, {}, clear=True):
      params = solver_config(moduli="2,4", box=5, jobs=3)
    self.assertEqual(params.moduli, (2, 4))
    self.assertEqual(params.box, 5)
    self.assertEqual(params.jobs, 3)

  def test_environment(self):
    env = {"POINCAREDEG_MODULI": "2,4,8", "POINCAREDEG_BOX": "7", "POINCAREDEG_MAX_MODULUS": "12"}
    with mock.patch.dict(os.environ, env, clear=True):
      params = solver_config(box=2)
    self.assertEqual(params.moduli, (2, 4, 8))
    self.assertEqual(params.box, 2)
    self.assertEqual(params.max_modulus, 12)

  def test_bad_environment_value(self):
    with mock.patch.dict(os.environ, {"POINCAREDEG_JOBS": "many"}, clear=True):
      with self.assertRaises(ValueError):
        solver_config()

  def test_json_file(self):
    path = self.path("config.json")
    with open(path, "w") as f:
      json.dump({"moduli": [2, 4], "box": 4, "max_residue_classes": 500, "jobs": None}, f)
    with mock.patch.dict(os.environ, {"POINCAREDEG_BOX": "9"}, clear=True):
      params = solver_config(config_file=path)
    self.assertEqual(params.moduli, (2, 4))
    self.assertEqual(params.box, 4)
    self.assertEqual(params.max_residue_classes, 500)
    self.assertEqual(params.jobs, 1)

  def test_yaml_file(self):
    path = self.path("config.yaml")
    with open(path, "w") as f:
      f.write("moduli: 2,4,24\nmax_modulus: 20\n")
    params = solver_config(config_file=path, moduli=[2])
    self.assertEqual(params.moduli, (2,))
    self.assertEqual(params.max_modulus, 20)

  def test_template_round_trip(self):
    path = create_config_file(self.path("template.json"))
    with open(path) as f:
      doc = json.load(f)
    self.assertEqual(doc["max_residue_classes"], 10 ** 6)
    self.assertIsNone(doc["box"])
    self.assertEqual(solver_config(config_file=path), SolverParams())

  def test_unparseable_file(self):
    path = self.path("broken.yaml")
    with open(path, "w") as f:
      f.write("moduli: [2, 4\n")
    with self.assertRaises(ValueError):
      load_document(path)


class TestUtils(unittest.TestCase):
  """Small helpers."""

  def test_dump_document_is_canonical(self):
    self.assertEqual(dump_document({"b": 1, "a": [1, 2]}), '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}')

  def test_signed_divisors(self):
    self.assertEqual(signed_divisors(-6), [1, -1, 2, -2, 3, -3, 6, -6])
    with self.assertRaises(ValueError):
      signed_divisors(0)

  def test_shells_partition_the_box(self):
    seen = []
    for radius in range(3):
      vectors = list(shell(2, radius))
      self.assertTrue(all(max(abs(x) for x in v) == radius for v in vectors))
      seen.extend(vectors)
    self.assertEqual(len(seen), 25)
    self.assertEqual(len(set(seen)), 25)

  def test_clipped_shell(self):
    self.assertEqual(list(shell(2, 1, low=-1, high=0)), [(-1, -1), (-1, 0), (0, -1)])
    self.assertEqual(list(shell(1, 0, low=1, high=3)), [])


if __name__ == "__main__":
  unittest.main()
