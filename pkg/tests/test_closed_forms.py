#!/usr/bin/env python

"""Tests for `poincaredeg.closed_forms`."""

import unittest

from poincaredeg.closed_forms import (ALL, EVEN, ZERO, case_1a_modulus, case_1b_members, known_degree_set, lcm_modulus,
                                      n7_type, product_sum_degrees, w_z_degrees)
from poincaredeg.complex import product_sum, rank_one_complex, z_complex
from poincaredeg.homotopy_tables import builtin_table
from poincaredeg.reports import degree_set


class TestFormulas(unittest.TestCase):
  """The closed forms themselves."""

  def test_case_1a(self):
    self.assertEqual(case_1a_modulus(2, 1), 6)
    self.assertEqual(case_1a_modulus(2, 0), 6)
    self.assertEqual(case_1a_modulus(0, 1), 2)
    self.assertEqual(case_1a_modulus(0, 0), 1)
    self.assertEqual(case_1a_modulus(1, 1), 12)
    self.assertEqual(case_1a_modulus(3, 0), 4)

  def test_case_1b(self):
    self.assertEqual([d for d in range(-4, 5) if case_1b_members(d)], [-4, -3, -1, 0, 1, 3, 4])

  def test_product_sums(self):
    self.assertEqual(product_sum_degrees(1, 2), ZERO)
    self.assertEqual(product_sum_degrees(3, 2), ALL)

  def test_lcm_modulus(self):
    t = builtin_table(5)
    self.assertEqual(lcm_modulus(rank_one_complex(t, [0, 1], [0])), 1)
    self.assertEqual(lcm_modulus(rank_one_complex(t, [1, 0], [3])), 8)
    self.assertEqual(lcm_modulus(rank_one_complex(t, [1, 1], [12])), 2)

  def test_n7_types(self):
    self.assertEqual(n7_type(product_sum(builtin_table(7), 2)), "W")
    self.assertEqual(n7_type(z_complex(2)), "Z")
    self.assertEqual(w_z_degrees("W", "Z"), EVEN)
    self.assertEqual(w_z_degrees("Z", "Z"), ALL)


class TestKnownDegreeSet(unittest.TestCase):
  """Family recognition and agreement with the solver."""

  def assertAgrees(self, X, Y, R):
    predicate = known_degree_set(X, Y)
    self.assertIsNotNone(predicate)
    rep = degree_set(X, Y, R)
    self.assertTrue(rep.exact)
    self.assertEqual([d for d in range(-R, R + 1) if predicate(d)], rep.members)

  def test_unknown_pair(self):
    t = builtin_table(6)
    self.assertIsNone(known_degree_set(rank_one_complex(t, [1], []), product_sum(t, 1)))
    self.assertIsNone(known_degree_set(product_sum(builtin_table(4), 1), product_sum(t, 1)))

  def test_rank_drop(self):
    t = builtin_table(4)
    predicate = known_degree_set(product_sum(t, 1), product_sum(t, 2))
    self.assertTrue(predicate(0))
    self.assertFalse(predicate(1))

  def test_case_1a_agrees(self):
    t = builtin_table(4)
    for a, b in ((2, 1), (3, 0), (1, 1)):
      self.assertAgrees(rank_one_complex(t, [a], [b]), product_sum(t, 1), 12)

  def test_case_1b_agrees(self):
    X = rank_one_complex(builtin_table(4), [1], [1])
    self.assertAgrees(X, X, 8)

  def test_n5_agrees(self):
    t = builtin_table(5)
    for low, high in (([0, 1], [0]), ([1, 0], [3])):
      self.assertAgrees(product_sum(t, 1), rank_one_complex(t, low, high), 8)

  def test_n7_agrees(self):
    t = builtin_table(7)
    self.assertAgrees(product_sum(t, 1), z_complex(1), 4)
    self.assertAgrees(z_complex(1), product_sum(t, 1), 4)
    self.assertAgrees(z_complex(1), z_complex(1), 3)


if __name__ == "__main__":
  unittest.main()
